//! Integration checks of the study layer beyond the acceptance gate:
//! corridor sanity of the evolved pattern, the classical regression anchor,
//! and degenerate configurations.

use fracsh::gl::{build_ansatz, gl_coefficients, sech_profile, GLState};
use fracsh::residuum::residuum_scaling_study;
use fracsh::sh::{sh_evolve, SHParams};
use fracsh::spectral::Grid1D;
use fracsh::study::{run_convergence, run_residuum, StudyConfig};
use fracsh::symbols::{FilterConfig, FractionalPower};

fn tmp_out(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("fracsh-study-{name}"))
}

#[test]
fn pattern_stays_in_the_ansatz_corridor() {
    // u0 = eps Psi(., 0) at eps = 0.1, alpha = 1, a1 = 0, a2 = 1: across
    // the slow horizon the sup norm stays within [0.5, 2] times its
    // initial value (no blow-up, pattern persists).
    let alpha = FractionalPower::new(1.0).unwrap();
    let eps = 0.1;
    let slow = Grid1D::new(8, 256).unwrap();
    let fast = Grid1D::new(80, 1280).unwrap();
    let config = FilterConfig::default_bands();
    let gl_params = gl_coefficients(alpha, 0.0, 1.0);
    let state0 = GLState::new(sech_profile(slow, 0.8, 1.0), 0.0);
    let ansatz = build_ansatz(&state0, &gl_params, eps, &fast, config).unwrap();
    let u0 = ansatz.psi_improved.scaled_re(eps);
    let base = u0.max_abs_phys();

    let params = SHParams::new(alpha, eps, 0.0, 1.0, 0.05).unwrap();
    let states = sh_evolve(&u0, &params, 1.0 / (eps * eps), 9).unwrap();
    for s in &states {
        let sup = s.u.max_abs_phys();
        assert!(
            sup > 0.5 * base && sup < 2.0 * base,
            "t = {}: sup {sup} outside [{}, {}]",
            s.t,
            0.5 * base,
            2.0 * base
        );
    }
}

#[test]
fn classical_limit_reproduces_the_approximation_slope() {
    // alpha = 2 sits outside the fractional regime but anchors the
    // pipeline against the classical result: same window, same setup.
    let config = StudyConfig {
        alpha: 2.0,
        a1: 0.0,
        a2: 1.0,
        width: 1.5,
        n_slow: 512,
        workers: 3,
        out_dir: tmp_out("classical-anchor"),
        ..StudyConfig::default()
    };
    let report = run_convergence(&config).unwrap();
    let slope = report.slope_psi.expect("slope");
    assert!(
        (1.35..=2.2).contains(&slope),
        "classical anchor slope {slope}"
    );
    assert!(report.monotone);
}

#[test]
fn quadratic_free_stable_residuum_keeps_its_slope() {
    // a1 = 0 kills the z0/z2 quadratic sources; the cubic third-harmonic
    // source still forces the stable eps^(beta+1) scaling. Band-limited
    // amplitude data keeps the low pass from rescaling the cubic source
    // across the sweep, so the exponent comes out clean.
    let mut config = StudyConfig {
        alpha: 1.5,
        a1: 0.0,
        a2: 1.0,
        samples: 9,
        amp: 0.5,
        width: 0.5,
        out_dir: tmp_out("residuum-cubic"),
        ..StudyConfig::default()
    };
    config.set("profile", "cosine").unwrap();
    let setup = config.sweep_setup().unwrap();
    let (report, _) = residuum_scaling_study(&setup).unwrap();
    let stab = report.stab_slope.expect("stable slope");
    assert!(stab >= 2.2, "stable slope {stab}");
}

#[test]
fn linear_configuration_reports_degenerate_residuum() {
    // a1 = a2 = 0 at alpha = 1: the construction solves the linearized
    // equation exactly, so every residuum norm sits below the 1e-9 floor
    // and the report is degenerate.
    let config = StudyConfig {
        a1: 0.0,
        a2: 0.0,
        samples: 5,
        out_dir: tmp_out("residuum-linear"),
        ..StudyConfig::default()
    };
    let report = run_residuum(&config).unwrap();
    assert!(report.crit_slope.is_none());
    assert!(report.stab_slope.is_none());
    assert!(report
        .crit_norms
        .iter()
        .chain(&report.stab_norms)
        .all(|&v| v < 1e-9));
    let csv = std::fs::read_to_string(config.out_dir.join("residuum.csv")).unwrap();
    assert!(csv.starts_with("eps,t,norm_crit,norm_stab,z0,z1,z2,z3,z4\n"));
    let slopes = std::fs::read_to_string(config.out_dir.join("slopes.json")).unwrap();
    assert!(slopes.contains("\"crit_slope\": null"));
}

#[test]
fn residuum_outputs_have_the_pinned_layout() {
    let config = StudyConfig {
        a1: 1.0,
        a2: 1.0,
        amp: 0.1,
        samples: 5,
        out_dir: tmp_out("residuum-layout"),
        ..StudyConfig::default()
    };
    let report = run_residuum(&config).unwrap();
    assert!(report.crit_slope.is_some());

    let csv = std::fs::read_to_string(config.out_dir.join("residuum.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "eps,t,norm_crit,norm_stab,z0,z1,z2,z3,z4"
    );
    assert_eq!(csv.lines().count(), 1 + 3 * 5);

    let manifest = std::fs::read_to_string(config.out_dir.join("manifest.json")).unwrap();
    for key in ["c_plus", "gamma", "sigma_s", "eps_list", "seed"] {
        assert!(manifest.contains(key), "manifest lacks {key}");
    }
}
