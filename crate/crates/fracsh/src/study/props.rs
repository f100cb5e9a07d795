//! Randomized verification of the norm and multiplier inequalities on band-limited
//! fields. Each check measures its inequality or identity on concrete
//! fields and records the observed constants; the suite is deterministic
//! for a fixed seed.

use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::gl::{build_ansatz, gl_coefficients, gl_evolve, sech_profile, GLState};
use crate::residuum::fit_loglog;
use crate::spectral::{
    cb_norm, h_norm, l1_fourier_norm, scale_embed, Grid1D, SobolevIndex, SpectralField,
};
use crate::study::StudyConfig;
use crate::symbols::{
    c_minus_quadrature, c_plus_quadrature, frac_laplacian, mode_filter, remainder_multiplier,
    FilterBand, FilterConfig, FractionalPower, RemainderKind,
};

#[derive(Debug, Clone, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn idx(theta: f64) -> SobolevIndex {
    SobolevIndex::new(theta).unwrap()
}

/// Random real band-limited field: conjugate-symmetric coefficients with a
/// smooth envelope, supported on |m| <= bw lattice modes.
fn random_real_field(grid: &Arc<Grid1D>, bw: usize, rng: &mut ChaCha8Rng) -> SpectralField {
    let mut four = vec![Complex64::new(0.0, 0.0); grid.points()];
    let dc = grid.points() / 2;
    four[dc] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
    for m in 1..=bw as i64 {
        let env = (-3.0 * (m as f64 / bw as f64).powi(2)).exp();
        let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * env;
        let p = grid.position_of(m).unwrap();
        let q = grid.position_of(-m).unwrap();
        four[p] = c;
        four[q] = c.conj();
    }
    SpectralField::from_four(grid.clone(), four).unwrap()
}

/// Real field with an exact power-law spectral tail |A_hat(Xi)| = |Xi|^(-p)
/// and random phases. The pure power law keeps the low-pass-complement
/// rates free of curvature over the eps sweep, so slope fits are clean.
fn power_tail_field(grid: &Arc<Grid1D>, p: f64, rng: &mut ChaCha8Rng) -> SpectralField {
    let mut four = vec![Complex64::new(0.0, 0.0); grid.points()];
    for m in 1..(grid.points() / 2) as i64 {
        let xi = m as f64 * grid.dxi();
        let mag = xi.powf(-p);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let c = Complex64::from_polar(mag, phase);
        four[grid.position_of(m).unwrap()] = c;
        four[grid.position_of(-m).unwrap()] = c.conj();
    }
    SpectralField::from_four(grid.clone(), four).unwrap()
}

fn check(name: &str, pass: bool, detail: String) -> PropertyCheck {
    PropertyCheck {
        name: name.into(),
        pass,
        detail,
    }
}

fn max_rel_diff(a: &SpectralField, b: &SpectralField, scale: f64) -> f64 {
    a.four()
        .iter()
        .zip(b.four())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
        / scale
}

fn parseval_check(grid: &Arc<Grid1D>, rng: &mut ChaCha8Rng) -> PropertyCheck {
    let mut worst = 0.0_f64;
    for _ in 0..8 {
        let f = random_real_field(grid, 40, rng);
        let l2 = h_norm(&f, idx(0.0));
        let phys: f64 = f.phys().iter().map(|c| c.norm_sqr()).sum::<f64>() * f.grid().dx();
        worst = worst.max((l2 * l2 - phys).abs() / (l2 * l2));
    }
    check(
        "parseval",
        worst <= 1e-10,
        format!("max relative defect {worst:.3e} (allowed 1e-10)"),
    )
}

fn product_estimate_check(grid: &Arc<Grid1D>, rng: &mut ChaCha8Rng) -> Vec<PropertyCheck> {
    let mut out = Vec::new();
    let mut worst2 = f64::NEG_INFINITY;
    let mut worst3 = f64::NEG_INFINITY;
    for &mu in &[1.0, 1.5, 2.0] {
        for _ in 0..6 {
            let f = random_real_field(grid, 30, rng);
            let g = random_real_field(grid, 30, rng);
            let h = random_real_field(grid, 30, rng);
            let fg = SpectralField::dealiased_product(&[&f, &g]);
            let lhs = h_norm(&fg, idx(mu));
            let rhs = h_norm(&f, idx(mu)) * l1_fourier_norm(&g)
                + l1_fourier_norm(&f) * h_norm(&g, idx(mu));
            worst2 = worst2.max(lhs - rhs);

            let fgh = SpectralField::dealiased_product(&[&f, &g, &h]);
            let lhs3 = h_norm(&fgh, idx(mu));
            let rhs3 = h_norm(&f, idx(mu)) * l1_fourier_norm(&g) * l1_fourier_norm(&h)
                + l1_fourier_norm(&f) * h_norm(&g, idx(mu)) * l1_fourier_norm(&h)
                + l1_fourier_norm(&f) * l1_fourier_norm(&g) * h_norm(&h, idx(mu));
            worst3 = worst3.max(lhs3 - rhs3);
        }
    }
    out.push(check(
        "product-estimate-binary",
        worst2 <= 1e-9,
        format!("max excess over the constant-1 bound {worst2:.3e} (allowed 1e-9)"),
    ));
    out.push(check(
        "product-estimate-ternary",
        worst3 <= 1e-9,
        format!("max excess over the constant-1 bound {worst3:.3e} (allowed 1e-9)"),
    ));
    out
}

fn l1_invariance_check(
    slow: &Arc<Grid1D>,
    setups: &[(f64, Arc<Grid1D>)],
    rng: &mut ChaCha8Rng,
) -> PropertyCheck {
    let mut worst = 0.0_f64;
    for _ in 0..4 {
        let f = random_real_field(slow, 40, rng);
        let base = l1_fourier_norm(&f);
        for (eps, fast) in setups {
            for k in [0i64, 1, 2] {
                let g = scale_embed(&f, *eps, k, fast).unwrap();
                worst = worst.max((l1_fourier_norm(&g) - base).abs() / base);
            }
        }
    }
    check(
        "l1-scale-invariance",
        worst <= 1e-9,
        format!("max relative defect {worst:.3e} (allowed 1e-9)"),
    )
}

fn l1_vs_sobolev_check(grid: &Arc<Grid1D>, rng: &mut ChaCha8Rng) -> PropertyCheck {
    let mut worst_ratio = 0.0_f64;
    let mut pass = true;
    let mut detail = String::new();
    for &mu in &[1.0, 2.0] {
        let c_mu = crate::quad::integrate_tight(
            &|t: f64| t.cos().powf(2.0 * mu - 2.0),
            -0.5 * std::f64::consts::PI,
            0.5 * std::f64::consts::PI,
        )
        .unwrap()
        .sqrt();
        for _ in 0..6 {
            let f = random_real_field(grid, 60, rng);
            let ratio = l1_fourier_norm(&f) / (c_mu * h_norm(&f, idx(mu)));
            worst_ratio = worst_ratio.max(ratio);
            pass &= ratio <= 1.0 + 1e-12;
        }
        detail.push_str(&format!("C_{mu} = {c_mu:.6}; "));
    }
    detail.push_str(&format!("max ratio {worst_ratio:.6}"));
    check("l1-vs-sobolev", pass, detail)
}

fn scaled_sobolev_check(
    slow: &Arc<Grid1D>,
    setups: &[(f64, Arc<Grid1D>)],
    rng: &mut ChaCha8Rng,
) -> PropertyCheck {
    let mut worst = 0.0_f64;
    for _ in 0..4 {
        let f = random_real_field(slow, 40, rng);
        for (eps, fast) in setups {
            for k in [0i64, 1, 2] {
                let g = scale_embed(&f, *eps, k, fast).unwrap();
                for &mu in &[0.0, 1.0, 2.0] {
                    let bound = (1.0 + k.abs() as f64 + (k * k) as f64).powf(0.5 * mu) / eps.sqrt()
                        * h_norm(&f, idx(mu));
                    worst = worst.max(h_norm(&g, idx(mu)) / bound);
                }
            }
        }
    }
    check(
        "scaled-sobolev-constant",
        worst <= 1.05,
        format!("max norm ratio {worst:.6} (allowed 1.05)"),
    )
}

fn low_pass_complement_checks(
    slow: &Arc<Grid1D>,
    setups: &[(f64, Arc<Grid1D>)],
    config: FilterConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<PropertyCheck> {
    let mut out = Vec::new();
    let k = 1i64;
    // Fields just inside H^mu expose an algebraic tail rate above the
    // guaranteed eps^(mu - 1/2) floor.
    for &mu in &[1.0, 2.0] {
        let f = power_tail_field(slow, mu + 0.6, rng);
        let mut eps_list = Vec::new();
        let mut norms = Vec::new();
        for (eps, fast) in setups {
            let g = scale_embed(&f, *eps, k, fast).unwrap();
            let tail = g.band_stop(k as f64, config.r0);
            eps_list.push(*eps);
            norms.push(h_norm(&tail, idx(mu)));
        }
        let slope = fit_loglog(&eps_list, &norms);
        let need = mu - 0.6;
        let pass = slope.map(|s| s >= need).unwrap_or(false);
        out.push(check(
            &format!("low-pass-complement-slope-mu{mu}"),
            pass,
            format!("fitted slope {slope:?} (need >= {need})"),
        ));
    }

    // Adversarial bandwidth: slow bandwidth beyond r0/eps leaves a visible
    // truncation, which must still obey the explicit-constant bound
    // (1 + |k| + k^2)^(mu/2) (1 + 1/r0^2) eps^(mu - 1/2) |f|_(H^mu).
    let mu = 1.0;
    let f = random_real_field(slow, 100, rng);
    let c_r0 = 1.0 + 1.0 / (config.r0 * config.r0);
    let mut pass = true;
    let mut detail = String::new();
    for (eps, fast) in setups {
        let g = scale_embed(&f, *eps, k, fast).unwrap();
        let tail = g.band_stop(k as f64, config.r0);
        let norm = h_norm(&tail, idx(mu));
        let bound = 3.0_f64.powf(0.5 * mu) * c_r0 * eps.powf(mu - 0.5) * h_norm(&f, idx(mu));
        pass &= norm > 1e-6 && norm <= bound;
        detail.push_str(&format!(
            "eps {eps}: tail {norm:.3e} <= bound {bound:.3e}; "
        ));
    }
    out.push(check("low-pass-complement-adversarial", pass, detail));
    out
}

fn critical_symbol_check(
    slow: &Arc<Grid1D>,
    setups: &[(f64, Arc<Grid1D>)],
    rng: &mut ChaCha8Rng,
) -> PropertyCheck {
    let mut worst = 0.0_f64;
    for _ in 0..3 {
        let f = random_real_field(slow, 40, rng);
        let fpp = f.derivative(2);
        for (eps, fast) in setups {
            for sign in [1i64, -1] {
                let s = sign as f64;
                let lhs = scale_embed(&f, *eps, sign, fast)
                    .unwrap()
                    .apply_symbol(|xi| (xi - s) * (xi - s));
                let rhs = scale_embed(&fpp, *eps, sign, fast)
                    .unwrap()
                    .scaled_re(-eps * eps);
                worst = worst.max(max_rel_diff(&lhs, &rhs, rhs.max_abs_four()));
            }
        }
    }
    check(
        "critical-symbol-identity",
        worst <= 1e-9,
        format!("max relative defect {worst:.3e} (allowed 1e-9)"),
    )
}

fn commutation_check(
    slow: &Arc<Grid1D>,
    setups: &[(f64, Arc<Grid1D>)],
    config: FilterConfig,
    rng: &mut ChaCha8Rng,
) -> PropertyCheck {
    let mut worst = 0.0_f64;
    for &nu in &[0.5, 0.75, 0.9] {
        let f = random_real_field(slow, 60, rng);
        let lap_slow = frac_laplacian(&f, nu).unwrap();
        for (eps, fast) in setups {
            let lhs = frac_laplacian(
                &scale_embed(&f, *eps, 0, fast)
                    .unwrap()
                    .band_pass(0.0, config.r0),
                nu,
            )
            .unwrap();
            let rhs = scale_embed(&lap_slow, *eps, 0, fast)
                .unwrap()
                .band_pass(0.0, config.r0)
                .scaled_re(eps.powf(2.0 * nu));
            worst = worst.max(max_rel_diff(&lhs, &rhs, rhs.max_abs_four().max(1e-300)));
        }
    }
    check(
        "frac-laplacian-low-pass-commutation",
        worst <= 1e-10,
        format!("max relative defect {worst:.3e} (allowed 1e-10)"),
    )
}

fn multiplier_local_bound_checks() -> Vec<PropertyCheck> {
    let mut out = Vec::new();
    let seps: Vec<f64> = (0..10).map(|i| 0.35 * 0.5_f64.powi(i)).collect();
    for &a in &[1.3, 1.7] {
        let alpha = FractionalPower::new(a).unwrap();
        let cases: [(&str, RemainderKind, f64, f64); 3] = [
            ("r", RemainderKind::RPlus, 1.0, 2.9),
            ("m1", RemainderKind::M1Plus, 2.0, 0.9),
            ("m2", RemainderKind::M2Plus, 2.0, 2.9),
        ];
        for (label, kind, base, need) in cases {
            let mut svals = Vec::new();
            let mut mvals = Vec::new();
            let mut cmax = 0.0_f64;
            for &s in &seps {
                for sign in [-1.0, 1.0] {
                    let xi = base + sign * s;
                    let v = remainder_multiplier(xi, alpha, kind).unwrap().abs();
                    let order = if need > 2.0 { 3.0 } else { 1.0 };
                    cmax = cmax.max(v / s.powf(order));
                    if sign > 0.0 {
                        svals.push(s);
                        mvals.push(v);
                    }
                }
            }
            let slope = fit_loglog(&svals, &mvals);
            let pass = slope.map(|sl| sl >= need).unwrap_or(false);
            out.push(check(
                &format!("multiplier-local-bound-{label}-alpha{a}"),
                pass,
                format!("slope {slope:?} (need >= {need}), empirical C = {cmax:.4}"),
            ));
        }
    }
    out
}

fn remainder_reconstruction_check() -> PropertyCheck {
    let mut worst = 0.0_f64;
    for &a in &[0.7, 1.3, 1.7] {
        let alpha = FractionalPower::new(a).unwrap();
        let cp = crate::symbols::c_plus(alpha);
        for i in 0..=20 {
            let s = -0.4 + 0.8 * i as f64 / 20.0;
            let xi = 2.0 + s;
            let r = remainder_multiplier(xi, alpha, RemainderKind::RPlus).unwrap();
            let m1 = remainder_multiplier(xi, alpha, RemainderKind::M1Plus).unwrap();
            let m2 = remainder_multiplier(xi, alpha, RemainderKind::M2Plus).unwrap();
            worst = worst.max((r - (cp + m1 + m2)).abs());

            let xim = -2.0 - s;
            let r = remainder_multiplier(xim, alpha, RemainderKind::RMinus).unwrap();
            let m1 = remainder_multiplier(xim, alpha, RemainderKind::M1Minus).unwrap();
            let m2 = remainder_multiplier(xim, alpha, RemainderKind::M2Minus).unwrap();
            worst = worst.max((r - (cp + m1 + m2)).abs());
        }
    }
    check(
        "remainder-reconstruction",
        worst <= 1e-8,
        format!("max defect of r = c + m1 + m2: {worst:.3e} (allowed 1e-8)"),
    )
}

fn c_symmetry_check() -> PropertyCheck {
    let mut worst = 0.0_f64;
    for &a in &[0.5, 1.0, 1.3, 1.7] {
        let alpha = FractionalPower::new(a).unwrap();
        let p = c_plus_quadrature(alpha).unwrap();
        let m = c_minus_quadrature(alpha).unwrap();
        worst = worst.max((p - m).abs());
    }
    check(
        "c-plus-symmetry",
        worst <= 1e-10,
        format!("max |c+ - c-| = {worst:.3e} (allowed 1e-10)"),
    )
}

fn multiplier_norm_scaling_checks(
    slow: &Arc<Grid1D>,
    setups: &[(f64, Arc<Grid1D>)],
    config: FilterConfig,
    theta: SobolevIndex,
    rng: &mut ChaCha8Rng,
) -> Vec<PropertyCheck> {
    let alpha = FractionalPower::new(1.5).unwrap();
    // Bandwidth B with eps_max * B < r0: the low pass then keeps the whole
    // embedded spectrum at every eps, and the multiplier's vanishing order
    // at the carrier is what the norm reads off.
    let f = random_real_field(slow, 4, rng);
    let mut out = Vec::new();
    let cases: [(&str, RemainderKind, i64, f64); 3] = [
        ("r", RemainderKind::RPlus, 1, 2.4),
        ("m1", RemainderKind::M1Plus, 2, 0.4),
        ("m2", RemainderKind::M2Plus, 2, 2.4),
    ];
    for (label, kind, carrier, need) in cases {
        let mut eps_list = Vec::new();
        let mut norms = Vec::new();
        for (eps, fast) in setups {
            let emb = scale_embed(&f, *eps, carrier, fast)
                .unwrap()
                .band_pass(carrier as f64, config.r0);
            let filtered = emb.apply_symbol(|xi| {
                if (xi - carrier as f64).abs() < config.r0 && xi > 0.0 {
                    remainder_multiplier(xi, alpha, kind).unwrap()
                } else {
                    0.0
                }
            });
            eps_list.push(*eps);
            norms.push(h_norm(&filtered, theta));
        }
        let slope = fit_loglog(&eps_list, &norms);
        let pass = slope.map(|s| s >= need).unwrap_or(false);
        out.push(check(
            &format!("multiplier-norm-scaling-{label}"),
            pass,
            format!("fitted slope {slope:?} (need >= {need})"),
        ));
    }
    out
}

fn gl_gauge_check(rng: &mut ChaCha8Rng) -> PropertyCheck {
    let grid = Grid1D::new(8, 256).unwrap();
    let params = gl_coefficients(FractionalPower::new(1.3).unwrap(), 0.0, 1.0);
    let a0 = random_real_field(&grid, 10, rng).scaled_re(0.2);
    let phase = Complex64::from_polar(1.0, 1.1);
    let plain = gl_evolve(&GLState::new(a0.clone(), 0.0), &params, 1.0, 0.01);
    let rotated = gl_evolve(&GLState::new(a0.scaled(phase), 0.0), &params, 1.0, 0.01);
    match (plain, rotated) {
        (Ok(p), Ok(r)) => {
            let diff = h_norm(&p.a.scaled(phase).sub(&r.a), idx(0.0));
            check(
                "gl-gauge-symmetry",
                diff <= 1e-9,
                format!("phase-rotation defect {diff:.3e} (allowed 1e-9)"),
            )
        }
        _ => check("gl-gauge-symmetry", false, "evolution failed".into()),
    }
}

fn ansatz_checks(
    config: FilterConfig,
    setups: &[(f64, Arc<Grid1D>)],
    rng: &mut ChaCha8Rng,
) -> Vec<PropertyCheck> {
    let slow = Grid1D::new(8, 256).unwrap();
    let theta = idx(1.0);
    let mut out = Vec::new();

    // Reality of psi, Psi, dPsi/dt for a generic quadratic-cubic model.
    let alpha = FractionalPower::new(1.3).unwrap();
    let params = gl_coefficients(alpha, 1.0, 1.0);
    let state = GLState::new(sech_profile(slow.clone(), 0.1, 1.0), 0.0);
    let mut worst = 0.0_f64;
    for (eps, fast) in setups {
        let f = build_ansatz(&state, &params, *eps, fast, config).unwrap();
        for field in [&f.psi, &f.psi_improved, &f.d_psi_dt] {
            worst = worst.max(field.max_abs_imag() / field.max_abs_phys().max(1e-300));
        }
    }
    out.push(check(
        "ansatz-reality",
        worst <= 1e-10,
        format!("max relative imaginary residue {worst:.3e} (allowed 1e-10)"),
    ));

    // |eps psi - eps Psi|_(H^1) across the sweep: with quadratic terms the
    // eps^2 harmonics dominate and the slope sits near 3/2.
    let mut eps_list = Vec::new();
    let mut diffs = Vec::new();
    for (eps, fast) in setups {
        let f = build_ansatz(&state, &params, *eps, fast, config).unwrap();
        eps_list.push(*eps);
        diffs.push(eps * h_norm(&f.psi.sub(&f.psi_improved), theta));
    }
    let slope = fit_loglog(&eps_list, &diffs);
    out.push(check(
        "ansatz-improvement-slope",
        slope.map(|s| s >= 1.4).unwrap_or(false),
        format!("fitted slope {slope:?} (need >= 1.4)"),
    ));

    // a1 = 0: only the low-pass truncation survives; with a heavy-tailed
    // amplitude its decay rate becomes measurable.
    let params0 = gl_coefficients(alpha, 0.0, 1.0);
    let heavy = GLState::new(power_tail_field(&slow, 1.6, rng).scaled_re(0.3), 0.0);
    let mut diffs0 = Vec::new();
    for (eps, fast) in setups {
        let f = build_ansatz(&heavy, &params0, *eps, fast, config).unwrap();
        diffs0.push(eps * h_norm(&f.psi.sub(&f.psi_improved), theta));
    }
    let slope0 = fit_loglog(&eps_list, &diffs0);
    out.push(check(
        "ansatz-improvement-slope-quadratic-free",
        slope0.map(|s| s >= 1.4).unwrap_or(false),
        format!("fitted slope {slope0:?} (need >= theta + 0.4 = 1.4)"),
    ));

    // Sup-norm surrogate of the Hoelder bound: C^1_b sizes of the critical
    // and stable ansatz parts stay comparable across the sweep.
    let smooth = GLState::new(sech_profile(slow, 0.1, 1.0), 0.0);
    let mut values = Vec::new();
    for (eps, fast) in setups {
        let f = build_ansatz(&smooth, &params, *eps, fast, config).unwrap();
        let crit = mode_filter(&f.psi_improved, FilterBand::Critical, config);
        let stab = mode_filter(&f.psi_improved, FilterBand::Stable, config);
        values.push(cb_norm(&crit, 1).unwrap() + cb_norm(&stab, 1).unwrap());
    }
    let bound = 10.0 * values[0];
    let pass = values.iter().all(|&v| v < bound);
    out.push(check(
        "holder-surrogate-bounded",
        pass,
        format!("C^1_b values {values:?} (all below 10 x first = {bound:.3})"),
    ));
    out
}

/// Execute every property check on randomized fields with the configured seed.
pub fn run_property_suite(config: &StudyConfig) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let filter = config.filter()?;
    let theta = config.theta_index()?;
    let slow = Grid1D::new(config.slow_cells()?, config.n_slow)?;
    let setup = config.sweep_setup()?;
    let mut pairs = Vec::new();
    for &eps in &config.eps_list {
        let k = setup.fast_cells(eps)?;
        pairs.push((eps, Grid1D::new(k, 16 * k)?));
    }

    let mut checks = Vec::new();
    checks.push(parseval_check(&slow, &mut rng));
    checks.extend(product_estimate_check(&slow, &mut rng));
    checks.push(l1_invariance_check(&slow, &pairs, &mut rng));
    checks.push(l1_vs_sobolev_check(&slow, &mut rng));
    checks.push(scaled_sobolev_check(&slow, &pairs, &mut rng));
    checks.extend(low_pass_complement_checks(&slow, &pairs, filter, &mut rng));
    checks.push(critical_symbol_check(&slow, &pairs, &mut rng));
    checks.push(commutation_check(&slow, &pairs, filter, &mut rng));
    checks.extend(multiplier_local_bound_checks());
    checks.push(remainder_reconstruction_check());
    checks.push(c_symmetry_check());
    checks.extend(multiplier_norm_scaling_checks(
        &slow, &pairs, filter, theta, &mut rng,
    ));
    checks.push(gl_gauge_check(&mut rng));
    checks.extend(ansatz_checks(filter, &pairs, &mut rng));

    Ok(PropertyReport {
        seed: config.seed,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_field_satisfies_all_inequalities() {
        // Degenerate sanity: every inequality holds as 0 <= 0.
        let grid = Grid1D::new(8, 256).unwrap();
        let zero = SpectralField::zeros(grid);
        assert_eq!(h_norm(&zero, idx(1.0)), 0.0);
        assert_eq!(l1_fourier_norm(&zero), 0.0);
        let prod = SpectralField::dealiased_product(&[&zero, &zero]);
        assert!(h_norm(&prod, idx(1.0)) <= 1e-9);
    }

    #[test]
    fn suite_passes_at_default_seed() {
        let config = StudyConfig::default();
        let report = run_property_suite(&config).unwrap();
        for c in &report.checks {
            assert!(c.pass, "{} failed: {}", c.name, c.detail);
        }
    }
}
