//! Grids, transforms and the discrete norm surrogates.
//!
//! cargo run --release --example spectral_norms

use fracsh::spectral::{h_norm, l1_fourier_norm, scale_embed, Grid1D, SobolevIndex, SpectralField};
use std::f64::consts::PI;

fn main() {
    // A grid with K = 8 two-pi cells (L = 16 pi) and 512 points resolves
    // the unit Gaussian to machine precision.
    let grid = Grid1D::new(8, 512).unwrap();
    let gauss = SpectralField::from_real_fn(grid.clone(), |x| (-0.5 * x * x).exp());

    println!(
        "grid: K = {}, N = {}, dx = {:.4}, dxi = {:.4}",
        grid.cells(),
        grid.points(),
        grid.dx(),
        grid.dxi()
    );
    println!();

    // The transform of e^(-x^2/2) under the continuum-normalized convention
    // is e^(-xi^2/2); check a few lattice frequencies.
    println!("transform vs analytic e^(-xi^2/2):");
    for xi in [0.0, 1.0, 2.5, 4.0] {
        let j = (xi * grid.cells() as f64).round() as i64;
        let have = gauss.coeff(j).re;
        let want = (-0.5 * xi * xi).exp();
        println!("  xi = {xi:4.1}: {have:+.12e}  (analytic {want:+.12e})");
    }
    println!();

    // Norms against closed forms.
    let t0 = SobolevIndex::new(0.0).unwrap();
    let t1 = SobolevIndex::new(1.0).unwrap();
    println!("norms of the Gaussian:");
    println!(
        "  H^0: {:.10}   (pi^(1/4)      = {:.10})",
        h_norm(&gauss, t0),
        PI.powf(0.25)
    );
    println!(
        "  H^1: {:.10}   (sqrt(1.5 pi^(1/2)) = {:.10})",
        h_norm(&gauss, t1),
        (1.5 * PI.sqrt()).sqrt()
    );
    println!(
        "  L1-Fourier: {:.10}   (sqrt(2 pi) = {:.10})",
        l1_fourier_norm(&gauss),
        (2.0 * PI).sqrt()
    );
    println!();

    // Parseval surrogate: the lattice sum of |u|^2 weighted by dx.
    let l2 = h_norm(&gauss, t0);
    let phys: f64 = gauss.phys().iter().map(|c| c.norm_sqr()).sum::<f64>() * grid.dx();
    println!("Parseval defect: {:.2e}", (l2 * l2 - phys).abs());
    println!();

    // Slow-to-fast embedding f(eps x) e^(ikx): exact on commensurate grids,
    // with the L1 norm invariant and the H^mu norm within the
    // (1+|k|+k^2)^(mu/2) eps^(-1/2) envelope.
    let fast = Grid1D::new(40, 640).unwrap();
    let eps = 0.2;
    println!(
        "embedding with eps = {eps}, k = 1 onto K = {}:",
        fast.cells()
    );
    let emb = scale_embed(&gauss, eps, 1, &fast).unwrap();
    println!(
        "  L1 before {:.10}, after {:.10}",
        l1_fourier_norm(&gauss),
        l1_fourier_norm(&emb)
    );
    for mu in [0.0, 1.0, 2.0] {
        let idx = SobolevIndex::new(mu).unwrap();
        let ratio = h_norm(&emb, idx) / (3.0_f64.powf(0.5 * mu) / eps.sqrt() * h_norm(&gauss, idx));
        println!("  H^{mu} ratio to (1+|k|+k^2)^(mu/2) eps^(-1/2) bound: {ratio:.4}");
    }
}
