//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with the measured quantities. Thresholds are pinned in the
//! assertions. Run with `cargo test --test acceptance` (the two sweep
//! criteria take a few minutes in total).

use std::time::Instant;

use fracsh::gl::{gl_coefficients, gl_evolve, sech_profile, GLState};
use fracsh::residuum::{nonlinearity_difference_scaling, residuum_scaling_study};
use fracsh::sh::{sh_evolve, SHParams};
use fracsh::spectral::{h_norm, Grid1D, SobolevIndex, SpectralField};
use fracsh::study::{run_convergence, run_property_suite, StudyConfig};
use fracsh::symbols::{
    c_plus, c_plus_quadrature, frac_laplacian, frac_laplacian_singular_oracle,
    remainder_multiplier, taylor_identity_defect, FractionalPower, RemainderKind,
};

fn alpha(v: f64) -> FractionalPower {
    FractionalPower::new(v).unwrap()
}

fn l2() -> SobolevIndex {
    SobolevIndex::new(0.0).unwrap()
}

#[test]
fn criterion_01_c_plus_closed_form_vs_quadrature() {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for i in 1..=7 {
        let a = 0.25 * i as f64;
        let fp = alpha(a);
        let diff = (c_plus(fp) - c_plus_quadrature(fp).unwrap()).abs();
        worst = worst.max(diff);
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(worst < 1e-10, "max |closed - quadrature| = {worst:e}");
    assert!(elapsed < 1.0, "took {elapsed:.2}s (limit 1 s)");
    println!(
        "criterion 1: PASS - c+ closed form vs quadrature, max diff {worst:.2e} over alpha in 0.25..=1.75, {elapsed:.2}s"
    );
}

#[test]
fn criterion_02_classical_limit_coefficients() {
    let p = gl_coefficients(alpha(2.0), 0.0, 1.0);
    assert_eq!(p.diffusion, 4.0, "diffusion");
    assert_eq!(p.gamma, 3.0, "gamma");
    println!("criterion 2: PASS - gl_coefficients(2, 0, 1) = (diffusion 4, gamma 3) exactly");
}

#[test]
fn criterion_03_taylor_and_remainder_identities() {
    let start = Instant::now();
    let mut worst_taylor = 0.0_f64;
    let mut worst_reconstruction = 0.0_f64;
    for &a in &[1.0, 1.3, 1.7] {
        let fp = alpha(a);
        let cp = c_plus(fp);
        for i in 0..200 {
            // Log-spaced samples covering the representable band.
            let xi = 0.05 * (8.0_f64 / 0.05).powf(i as f64 / 199.0);
            for sign in [1.0, -1.0] {
                let x = sign * xi;
                worst_taylor = worst_taylor.max(taylor_identity_defect(x, fp).unwrap());
                let (kr, k1, k2) = if sign > 0.0 {
                    (
                        RemainderKind::RPlus,
                        RemainderKind::M1Plus,
                        RemainderKind::M2Plus,
                    )
                } else {
                    (
                        RemainderKind::RMinus,
                        RemainderKind::M1Minus,
                        RemainderKind::M2Minus,
                    )
                };
                let r = remainder_multiplier(x, fp, kr).unwrap();
                let m1 = remainder_multiplier(x, fp, k1).unwrap();
                let m2 = remainder_multiplier(x, fp, k2).unwrap();
                worst_reconstruction = worst_reconstruction.max((r - (cp + m1 + m2)).abs());
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(worst_taylor < 1e-8, "Taylor defect {worst_taylor:e}");
    assert!(
        worst_reconstruction < 1e-8,
        "reconstruction defect {worst_reconstruction:e}"
    );
    assert!(elapsed < 30.0, "took {elapsed:.1}s (limit 30 s)");
    println!(
        "criterion 3: PASS - symbol identities, Taylor defect {worst_taylor:.2e}, r = c + m1 + m2 defect {worst_reconstruction:.2e}, {elapsed:.1}s"
    );
}

#[test]
fn criterion_04_fractional_laplacian_cross_validation() {
    // Fourier route vs singular-integral oracle on a Gaussian; the fine
    // frequency lattice controls the |xi|^alpha kink error at xi = 0.
    let grid = Grid1D::new(256, 4096).unwrap();
    let g = SpectralField::from_real_fn(grid.clone(), |x| (-0.5 * x * x).exp());
    let mut worst_rel = 0.0_f64;
    for &a in &[0.5, 1.0, 1.5] {
        let fp = alpha(a);
        let spectral = frac_laplacian(&g, 0.5 * a).unwrap();
        let pts: Vec<usize> = (0..10).map(|m| grid.points() / 2 + m).collect();
        let scale = pts
            .iter()
            .map(|&i| spectral.phys()[i].re.abs())
            .fold(0.0, f64::max);
        for &i in &pts {
            let x = grid.x()[i];
            let oracle =
                frac_laplacian_singular_oracle(&|y: f64| (-0.5 * y * y).exp(), x, fp, 1e-7)
                    .unwrap();
            worst_rel = worst_rel.max((spectral.phys()[i].re - oracle).abs() / scale);
        }
    }
    assert!(worst_rel < 1e-4, "max relative deviation {worst_rel:e}");

    // Scaling property on matched grids to 1e-8.
    let fine = Grid1D::new(8, 512).unwrap();
    let wide = Grid1D::new(16, 1024).unwrap();
    let g2 = SpectralField::from_real_fn(fine.clone(), |x| (-2.0 * x * x).exp());
    let g1 = SpectralField::from_real_fn(wide, |x| (-0.5 * x * x).exp());
    let mut worst_scaling = 0.0_f64;
    for &a in &[0.5, 1.0, 1.5] {
        let lhs = frac_laplacian(&g2, 0.5 * a).unwrap();
        let rhs = frac_laplacian(&g1, 0.5 * a).unwrap();
        let factor = 2.0_f64.powf(a);
        let scale = lhs.max_abs_phys();
        for n in 0..fine.points() {
            worst_scaling =
                worst_scaling.max((lhs.phys()[n] - rhs.phys()[2 * n] * factor).norm() / scale);
        }
    }
    assert!(worst_scaling < 1e-8, "scaling defect {worst_scaling:e}");
    println!(
        "criterion 4: PASS - oracle agreement {worst_rel:.2e} (rel), scaling property defect {worst_scaling:.2e}"
    );
}

#[test]
fn criterion_05_inequality_property_suite() {
    let start = Instant::now();
    let config = StudyConfig::default();
    let report = run_property_suite(&config).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    assert!(
        failed.is_empty(),
        "failing property checks: {failed:?} ({} total)",
        report.checks.len()
    );
    assert!(elapsed < 120.0, "took {elapsed:.1}s (limit 2 min)");
    println!(
        "criterion 5: PASS - {} property checks at seed {}, {elapsed:.1}s",
        report.checks.len(),
        report.seed
    );
}

#[test]
fn criterion_06_residuum_scalings() {
    let start = Instant::now();
    // gamma = -3 at alpha = 1: the default 0.8 sech amplitude escapes in
    // finite slow time; 0.1 stays bounded through T* = 1.
    let config = StudyConfig {
        a1: 1.0,
        a2: 1.0,
        amp: 0.1,
        ..StudyConfig::default()
    };
    let setup = config.sweep_setup().unwrap();
    let (report, _) = residuum_scaling_study(&setup).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let crit = report.crit_slope.expect("critical slope");
    let stab = report.stab_slope.expect("stable slope");
    assert!(
        crit >= 3.2,
        "critical slope {crit} (need >= 3.2, theory 3.5)"
    );
    assert!(stab >= 2.2, "stable slope {stab} (need >= 2.2, theory 2.5)");
    assert!(elapsed < 900.0, "took {elapsed:.0}s (limit 15 min)");
    println!(
        "criterion 6: PASS - residuum slopes: critical {crit:.2} (>= 3.2), stable {stab:.2} (>= 2.2), {elapsed:.1}s"
    );
}

#[test]
fn criterion_07_approximation_error_sweep() {
    let start = Instant::now();
    let mut slopes = Vec::new();
    for &a in &[1.0, 1.5] {
        // width = 1.5 narrows the pulse and widens its spectrum (resolved
        // on 512 slow points); the low-pass truncation of the amplitude,
        // the eps^(theta+1/2) term of the improved-approximation bound,
        // then scales visibly like eps^(3/2) over this sweep instead of
        // decaying super-algebraically past the window.
        let config = StudyConfig {
            alpha: a,
            a1: 0.0,
            a2: 1.0,
            width: 1.5,
            n_slow: 512,
            workers: 3,
            out_dir: std::env::temp_dir().join(format!("fracsh-acceptance-conv-{a}")),
            ..StudyConfig::default()
        };
        let report = run_convergence(&config).unwrap();
        let slope = report.slope_psi.expect("slope vs eps psi");
        assert!(
            (1.35..=2.2).contains(&slope),
            "alpha = {a}: slope {slope} outside [1.35, 2.2]"
        );
        assert!(report.monotone, "alpha = {a}: errors not monotone in eps");
        slopes.push(slope);
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 1800.0, "took {elapsed:.0}s (limit 30 min)");
    println!(
        "criterion 7: PASS - approximation error slopes {:.2} (alpha 1), {:.2} (alpha 1.5), both in [1.35, 2.2], monotone, {elapsed:.0}s",
        slopes[0], slopes[1]
    );
}

#[test]
fn criterion_08_nonlinearity_difference_scalings() {
    let start = Instant::now();
    let config = StudyConfig {
        a1: 1.0,
        a2: 1.0,
        amp: 0.1,
        samples: 9,
        ..StudyConfig::default()
    };
    let setup = config.sweep_setup().unwrap();
    let report = nonlinearity_difference_scaling(&setup).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let crit = report.crit_slope.expect("critical slope");
    let stab = report.stab_slope.expect("stable slope");
    assert!(crit >= 1.8, "critical-quantity slope {crit} (need >= 1.8)");
    assert!(stab >= -0.1, "stable-quantity slope {stab} (need >= -0.1)");
    assert!(elapsed < 600.0, "took {elapsed:.0}s (limit 10 min)");
    println!(
        "criterion 8: PASS - nonlinearity-difference slopes: critical {crit:.2} (>= 1.8), stable {stab:.2} (>= -0.1), {elapsed:.1}s"
    );
}

#[test]
fn criterion_09_solver_self_consistency() {
    // SH self-convergence at eps = 0.1 on the commensurate fast grid.
    let grid = Grid1D::new(80, 1280).unwrap();
    let eps = 0.1;
    let sh_run = |dt: f64| {
        let params = SHParams::new(alpha(1.0), eps, 0.0, 1.0, dt).unwrap();
        let u0 =
            SpectralField::from_real_fn(grid.clone(), |x| 0.1 * x.cos() + 0.02 * (2.0 * x).cos());
        sh_evolve(&u0, &params, 1.0, 2).unwrap().pop().unwrap().u
    };
    let (a, b, c) = (sh_run(0.05), sh_run(0.025), sh_run(0.0125));
    let e1 = h_norm(&a.sub(&b), l2());
    let e2 = h_norm(&b.sub(&c), l2());
    let sh_order = (e1 / e2).log2();
    assert!(sh_order >= 3.8, "SH self-convergence order {sh_order}");

    // GL self-convergence on the slow grid.
    let slow = Grid1D::new(8, 256).unwrap();
    let params = gl_coefficients(alpha(1.0), 0.0, 1.0);
    let gl_run = |dt: f64| {
        let state = GLState::new(sech_profile(slow.clone(), 0.8, 1.0), 0.0);
        gl_evolve(&state, &params, 1.0, dt).unwrap().a
    };
    let (a, b, c) = (gl_run(0.04), gl_run(0.02), gl_run(0.01));
    let e1 = h_norm(&a.sub(&b), l2());
    let e2 = h_norm(&b.sub(&c), l2());
    let gl_order = (e1 / e2).log2();
    assert!(gl_order >= 3.8, "GL self-convergence order {gl_order}");

    // Linearized growth of the critical mode: e^(eps^2 t) to 1e-3 relative.
    let params = SHParams::new(alpha(1.0), eps, 0.0, 1.0, 0.05).unwrap();
    let u0 = SpectralField::from_real_fn(grid.clone(), |x| 1e-6 * x.cos());
    let states = sh_evolve(&u0, &params, 10.0, 2).unwrap();
    let ratio = states.last().unwrap().u.coeff(80).norm() / u0.coeff(80).norm();
    let expect = (eps * eps * 10.0_f64).exp();
    let rel = (ratio - expect).abs() / expect;
    assert!(rel < 1e-3, "critical growth off by {rel:e} relative");

    println!(
        "criterion 9: PASS - self-convergence orders: SH {sh_order:.2}, GL {gl_order:.2} (>= 3.8); critical growth error {rel:.2e} (< 1e-3)"
    );
}
