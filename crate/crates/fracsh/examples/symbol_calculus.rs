//! The Taylor-remainder calculus of the operator symbol: the constant c+,
//! the multipliers r, m1, m2 and the identities tying them together.
//!
//! cargo run --release --example symbol_calculus

use fracsh::symbols::{
    c_plus, c_plus_quadrature, remainder_multiplier, sh_symbol, taylor_identity_defect,
    FractionalPower, RemainderKind,
};

fn main() {
    println!("c+ = 2^(2a) - 2^(a+1) + (1 - a^2), cross-checked by quadrature:");
    println!("  alpha    closed form      quadrature       a^2 + c+");
    for a in [0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0] {
        let fp = FractionalPower::new(a).unwrap();
        let closed = c_plus(fp);
        let quad = c_plus_quadrature(fp).unwrap();
        println!(
            "  {a:<5}  {closed:+.12}  {quad:+.12}  {:+.6}",
            a * a + closed
        );
    }
    println!();

    // The symbol minus its quadratic Taylor part around +1 is exactly the
    // remainder integral: -(1-|xi|^a)^2 = -a^2 (xi-1)^2 - r+(xi).
    let a = 1.3;
    let fp = FractionalPower::new(a).unwrap();
    println!("Taylor identity defects at alpha = {a}:");
    for xi in [0.3, 0.5, 1.0, 1.7, 2.0, 3.0, 5.0, -0.5, -2.0] {
        let d = taylor_identity_defect(xi, fp).unwrap();
        println!("  xi = {xi:+5.2}: defect {d:.2e}");
    }
    println!();

    // Around +-2 the remainder splits as r = c+ + m1 + m2, with m1
    // vanishing linearly and m2 cubically at the base point.
    println!("remainder reconstruction r+ = c+ + m1+ + m2+ near xi = 2 (alpha = {a}):");
    println!("  xi      r+            m1+           m2+           defect");
    for xi in [1.6, 1.8, 2.0, 2.2, 2.4] {
        let r = remainder_multiplier(xi, fp, RemainderKind::RPlus).unwrap();
        let m1 = remainder_multiplier(xi, fp, RemainderKind::M1Plus).unwrap();
        let m2 = remainder_multiplier(xi, fp, RemainderKind::M2Plus).unwrap();
        let defect = (r - (c_plus(fp) + m1 + m2)).abs();
        println!("  {xi:4.2}  {r:+.6e}  {m1:+.6e}  {m2:+.6e}  {defect:.1e}");
    }
    println!();

    // Vanishing orders at the base points (the multiplier bounds).
    println!("vanishing orders (log-log ratios over shrinking offsets):");
    for (label, kind, base) in [
        ("r+ at 1", RemainderKind::RPlus, 1.0),
        ("m1+ at 2", RemainderKind::M1Plus, 2.0),
        ("m2+ at 2", RemainderKind::M2Plus, 2.0),
    ] {
        let s1 = 0.2;
        let s2 = 0.02;
        let v1 = remainder_multiplier(base + s1, fp, kind).unwrap().abs();
        let v2 = remainder_multiplier(base + s2, fp, kind).unwrap().abs();
        let order = (v1 / v2).ln() / (s1 / s2).ln();
        println!("  {label}: observed order {order:.3}");
    }
    println!();

    println!(
        "symbol at the critical modes: s(1) = {:.1e}, s(-1) = {:.1e}, s(0) = {}",
        sh_symbol(1.0, fp),
        sh_symbol(-1.0, fp),
        sh_symbol(0.0, fp)
    );
}
