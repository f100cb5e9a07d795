//! Mode filters and the semigroup generated by the linearization: sharp
//! band projections, the exponential law, and the decay constants sigma_s.
//!
//! cargo run --release --example semigroup_filters

use fracsh::spectral::{h_norm, Grid1D, SobolevIndex, SpectralField};
use fracsh::symbols::{
    mode_filter, semigroup_apply, semigroup_bound_check, FilterBand, FilterConfig, FractionalPower,
    SemigroupBounds,
};

fn main() {
    let grid = Grid1D::new(8, 256).unwrap();
    let config = FilterConfig::default_bands();
    let theta = SobolevIndex::new(1.0).unwrap();
    println!("filters: delta = {}, r0 = {}", config.delta, config.r0);

    // A field with content in several bands.
    let u = SpectralField::from_real_fn(grid.clone(), |x| {
        x.cos() + 0.5 * (2.2 * x).cos() + 0.25 * (0.05 * x).cos()
    });
    let crit = mode_filter(&u, FilterBand::Critical, config);
    let stab = mode_filter(&u, FilterBand::Stable, config);
    let low = mode_filter(&u, FilterBand::Low, config);
    println!(
        "band split of a three-band field (H^1 norms): critical {:.4}, stable {:.4}, low {:.4}",
        h_norm(&crit, theta),
        h_norm(&stab, theta),
        h_norm(&low, theta)
    );
    let recombined = crit.add(&stab);
    let defect = recombined.sub(&u).max_abs_four();
    println!("partition defect E_c + E_s - Id: {defect:.1e}");
    println!();

    // sigma_s across alpha: the stable modes decay at least this fast.
    println!("semigroup decay constants (delta = 0.5):");
    println!("  alpha   sigma_s");
    for a in [0.5, 1.0, 1.25, 1.5, 1.75, 2.0] {
        let fp = FractionalPower::new(a).unwrap();
        let b = SemigroupBounds::new(fp, config);
        println!("  {a:<5}  {:.6}", b.sigma_s);
    }
    println!();

    // Grid sup of the propagator on each band against the proven bounds.
    let fp = FractionalPower::new(1.5).unwrap();
    let eps = 0.1;
    let sigma_s = SemigroupBounds::new(fp, config).sigma_s;
    println!("propagator sup per band at alpha = 1.5, eps = {eps}:");
    println!("  t     critical sup   e^(eps^2 t)   stable sup    e^(-sigma_s t)");
    for t in [0.0, 1.0, 5.0, 20.0] {
        let (c, s) = semigroup_bound_check(t, fp, eps, config, &grid).unwrap();
        println!(
            "  {t:4.1}  {c:.8}   {:.8}  {s:.3e}  {:.3e}",
            (eps * eps * t).exp(),
            (-sigma_s * t).exp()
        );
    }
    println!();

    // Exponential law on a random-ish field.
    let f = SpectralField::from_real_fn(grid, |x| (-0.1 * x * x).exp() * (1.7 * x).cos());
    let two_steps =
        semigroup_apply(&semigroup_apply(&f, 0.6, fp, eps).unwrap(), 0.4, fp, eps).unwrap();
    let one_step = semigroup_apply(&f, 1.0, fp, eps).unwrap();
    let law = two_steps.sub(&one_step).max_abs_four() / one_step.max_abs_four();
    println!("semigroup law e(0.6)e(0.4) = e(1.0): relative defect {law:.1e}");
}
