//! Study drivers behind the CLI subcommands: the approximation-error convergence
//! sweep, the residuum sweep, the symbol table emission, and single GL/SH
//! evolutions with checkpoint output. Every run resolves its configuration
//! into a manifest and writes deterministic CSV/JSON artifacts (runtimes go
//! to stdout only, so identical configurations produce identical files).

use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::error::{FracshError, Result};
use crate::gl::{build_ansatz, gl_coefficients, GLState};
use crate::residuum::{fit_loglog, residuum_scaling_study, ScalingReport};
use crate::sh::{sh_evolve, SHParams};
use crate::spectral::{h_norm, Grid1D, SpectralField};
use crate::study::StudyConfig;
use crate::symbols::{c_plus, c_plus_quadrature, FractionalPower, SymbolTable};

/// Run `f` over `items` with at most `workers` concurrent jobs, preserving
/// order of results.
fn parallel_map<T, R, F>(items: Vec<T>, workers: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let workers = workers.max(1);
    let mut out = Vec::with_capacity(items.len());
    let mut iter = items.into_iter();
    loop {
        let chunk: Vec<T> = iter.by_ref().take(workers).collect();
        if chunk.is_empty() {
            break;
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .into_iter()
                .map(|item| scope.spawn(|| f(item)))
                .collect();
            for h in handles {
                out.push(h.join().expect("study worker panicked"));
            }
        });
    }
    out
}

fn ensure_out(config: &StudyConfig) -> Result<()> {
    fs::create_dir_all(&config.out_dir)?;
    Ok(())
}

#[derive(Serialize)]
struct Manifest<'a, E: Serialize> {
    config: &'a StudyConfig,
    derived: super::config::DerivedConstants,
    #[serde(flatten)]
    extra: E,
}

fn write_manifest<E: Serialize>(config: &StudyConfig, extra: E) -> Result<()> {
    let manifest = Manifest {
        config,
        derived: config.derived()?,
        extra,
    };
    let path = config.out_dir.join("manifest.json");
    fs::write(&path, serde_json::to_string_pretty(&manifest)? + "\n")?;
    Ok(())
}

impl From<serde_json::Error> for FracshError {
    fn from(e: serde_json::Error) -> Self {
        FracshError::InvalidParameter(format!("serialization failed: {e}"))
    }
}

/// Outcome of the approximation-error sweep: per-eps suprema of the approximation
/// error against the plain and improved ansatz.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub alpha: f64,
    pub theta: f64,
    pub eps_list: Vec<f64>,
    pub sup_err_psi: Vec<f64>,
    pub sup_err_psi_improved: Vec<f64>,
    /// None means every error sat below the 1e-9 floor (degenerate run).
    pub slope_psi: Option<f64>,
    pub slope_psi_improved: Option<f64>,
    pub monotone: bool,
    pub dt_used: Vec<f64>,
}

/// Halve dt until two short runs to t = 1 agree to 1e-8 in L2.
fn select_dt(u0: &SpectralField, params: &SHParams) -> Result<f64> {
    let l2 = crate::spectral::SobolevIndex::new(0.0).unwrap();
    let mut dt = params.dt;
    for _ in 0..4 {
        let mut pa = *params;
        pa.dt = dt;
        let mut pb = *params;
        pb.dt = 0.5 * dt;
        let a = sh_evolve(u0, &pa, 1.0, 2)?.pop().unwrap().u;
        let b = sh_evolve(u0, &pb, 1.0, 2)?.pop().unwrap().u;
        if h_norm(&a.sub(&b), l2) <= 1e-8 {
            return Ok(dt);
        }
        dt *= 0.5;
    }
    Ok(dt)
}

/// Solve GL once, start the pattern equation on eps Psi(0), and measure
/// sup_t |u - eps psi|_(H^theta) for each eps of the sweep.
pub fn run_convergence(config: &StudyConfig) -> Result<ConvergenceReport> {
    if !(config.alpha >= 1.0 && config.alpha <= 2.0) {
        return Err(FracshError::InvalidParameter(format!(
            "convergence study needs alpha in [1, 2], got {}",
            config.alpha
        )));
    }
    if config.theta < 1.0 {
        return Err(FracshError::InvalidParameter(format!(
            "convergence study needs theta >= 1, got {}",
            config.theta
        )));
    }
    ensure_out(config)?;
    let setup = config.sweep_setup()?;
    let theta = config.theta_index()?;
    let filter = config.filter()?;
    let gl_params = gl_coefficients(setup.alpha, setup.a1, setup.a2);
    let trajectory = setup.amplitude_trajectory()?;

    let jobs: Vec<f64> = config.eps_list.clone();
    let results = parallel_map(jobs, config.workers, |eps| -> Result<(f64, f64, f64)> {
        let started = Instant::now();
        let k = setup.fast_cells(eps)?;
        let fast = Grid1D::new(k, 16 * k)?;
        let mut params = SHParams::new(setup.alpha, eps, setup.a1, setup.a2, config.dt)?;
        let ansatz0 = build_ansatz(&trajectory[0], &gl_params, eps, &fast, filter)?;
        let u0 = ansatz0.psi_improved.scaled_re(eps);
        params.dt = select_dt(&u0, &params)?;

        let t_end = config.t_star / (eps * eps);
        let states = sh_evolve(&u0, &params, t_end, config.samples)?;
        let mut sup_psi = 0.0_f64;
        let mut sup_improved = 0.0_f64;
        for (state, gl_state) in states.iter().zip(&trajectory) {
            let ansatz = build_ansatz(gl_state, &gl_params, eps, &fast, filter)?;
            let err_psi = h_norm(&state.u.sub(&ansatz.psi.scaled_re(eps)), theta);
            let err_improved = h_norm(&state.u.sub(&ansatz.psi_improved.scaled_re(eps)), theta);
            sup_psi = sup_psi.max(err_psi);
            sup_improved = sup_improved.max(err_improved);
        }
        println!(
            "convergence eps = {eps}: N = {}, dt = {}, {:.1}s",
            16 * k,
            params.dt,
            started.elapsed().as_secs_f64()
        );
        Ok((params.dt, sup_psi, sup_improved))
    });

    let mut dt_used = Vec::new();
    let mut sup_err_psi = Vec::new();
    let mut sup_err_improved = Vec::new();
    for r in results {
        let (dt, a, b) = r?;
        dt_used.push(dt);
        sup_err_psi.push(a);
        sup_err_improved.push(b);
    }

    let monotone = sup_err_psi.windows(2).all(|w| w[0] > w[1]);
    let report = ConvergenceReport {
        alpha: config.alpha,
        theta: config.theta,
        eps_list: config.eps_list.clone(),
        slope_psi: fit_loglog(&config.eps_list, &sup_err_psi),
        slope_psi_improved: fit_loglog(&config.eps_list, &sup_err_improved),
        sup_err_psi,
        sup_err_psi_improved: sup_err_improved,
        monotone,
        dt_used,
    };

    let mut csv = String::from("eps,sup_err_psi,sup_err_psi_improved\n");
    for i in 0..report.eps_list.len() {
        csv.push_str(&format!(
            "{},{},{}\n",
            report.eps_list[i], report.sup_err_psi[i], report.sup_err_psi_improved[i]
        ));
    }
    fs::write(config.out_dir.join("convergence.csv"), csv)?;
    fs::write(
        config.out_dir.join("convergence.json"),
        serde_json::to_string_pretty(&report)? + "\n",
    )?;
    write_manifest(config, serde_json::json!({ "study": "convergence" }))?;
    Ok(report)
}

/// The pinned slopes.json payload of the residuum study.
#[derive(Serialize)]
struct SlopesFile {
    theta: f64,
    crit_slope: Option<f64>,
    stab_slope: Option<f64>,
    eps_list: Vec<f64>,
}

/// Residuum scaling sweep; writes residuum.csv and slopes.json.
pub fn run_residuum(config: &StudyConfig) -> Result<ScalingReport> {
    ensure_out(config)?;
    let setup = config.sweep_setup()?;
    let (report, rows) = residuum_scaling_study(&setup)?;

    let mut csv = String::from("eps,t,norm_crit,norm_stab,z0,z1,z2,z3,z4\n");
    for r in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.eps, r.t, r.norm_crit, r.norm_stab, r.z0, r.z1, r.z2, r.z3, r.z4
        ));
    }
    fs::write(config.out_dir.join("residuum.csv"), csv)?;
    fs::write(
        config.out_dir.join("slopes.json"),
        serde_json::to_string_pretty(&SlopesFile {
            theta: report.theta,
            crit_slope: report.crit_slope,
            stab_slope: report.stab_slope,
            eps_list: report.eps_list.clone(),
        })? + "\n",
    )?;
    write_manifest(config, serde_json::json!({ "study": "residuum" }))?;
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolsReport {
    pub alpha: f64,
    pub max_defect: f64,
    pub c_plus_closed: f64,
    pub c_plus_quadrature: f64,
    pub c_plus_diff: f64,
    pub rows: usize,
}

/// Emit symbols.csv over the positive lattice frequencies of the default
/// grid, with Taylor-identity defects and the c+ cross-check. The
/// multiplier columns come from one precomputed [`SymbolTable`].
pub fn run_symbols(config: &StudyConfig) -> Result<SymbolsReport> {
    if !(config.alpha > 0.0 && config.alpha < 2.0) {
        return Err(FracshError::InvalidParameter(format!(
            "symbol study is stated on the open interval alpha in (0, 2), got {}",
            config.alpha
        )));
    }
    ensure_out(config)?;
    let alpha = FractionalPower::new(config.alpha)?;
    let grid = Grid1D::new(config.slow_cells()?, config.n_slow)?;
    let table = SymbolTable::new(grid.clone(), alpha, config.filter()?)?;

    let a2 = config.alpha * config.alpha;
    let mut csv = String::from("alpha,xi,sh_symbol,r_plus,m1_plus,m2_plus,defect\n");
    let mut max_defect = 0.0_f64;
    let mut rows = 0usize;
    for (i, &xi) in grid.xi().iter().enumerate() {
        if xi <= 0.0 {
            continue;
        }
        let sym = table.sh_symbol[i];
        let r = table.r_pm[i];
        let defect = (sym + a2 * (xi - 1.0) * (xi - 1.0) + r).abs();
        max_defect = max_defect.max(defect);
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            config.alpha, xi, sym, r, table.m1_pm[i], table.m2_pm[i], defect
        ));
        rows += 1;
    }
    fs::write(config.out_dir.join("symbols.csv"), csv)?;

    let closed = c_plus(alpha);
    let quad = c_plus_quadrature(alpha)?;
    let report = SymbolsReport {
        alpha: config.alpha,
        max_defect,
        c_plus_closed: closed,
        c_plus_quadrature: quad,
        c_plus_diff: (closed - quad).abs(),
        rows,
    };
    fs::write(
        config.out_dir.join("symbols.json"),
        serde_json::to_string_pretty(&report)? + "\n",
    )?;
    write_manifest(config, serde_json::json!({ "study": "symbols" }))?;
    Ok(report)
}

fn write_checkpoint_csv(path: &Path, samples: &[(f64, &SpectralField)]) -> Result<()> {
    let file = fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(file);
    writeln!(w, "t,j,re,im")?;
    for (t, field) in samples {
        for (idx, c) in field.four().iter().enumerate() {
            let j = field.grid().mode_index(idx);
            writeln!(w, "{},{},{},{}", t, j, c.re, c.im)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Evolve the amplitude equation alone and write gl.csv checkpoints.
pub fn run_gl(config: &StudyConfig) -> Result<()> {
    ensure_out(config)?;
    let setup = config.sweep_setup()?;
    let trajectory = setup.amplitude_trajectory()?;
    let samples: Vec<(f64, &SpectralField)> = trajectory.iter().map(|s| (s.t, &s.a)).collect();
    write_checkpoint_csv(&config.out_dir.join("gl.csv"), &samples)?;
    write_manifest(
        config,
        serde_json::json!({
            "study": "gl",
            "grid_cells": setup.slow_cells,
            "grid_points": setup.n_slow,
        }),
    )?;
    Ok(())
}

/// Evolve the pattern equation from eps Psi(0) at the first sweep eps and
/// write sh.csv checkpoints.
pub fn run_sh(config: &StudyConfig) -> Result<()> {
    ensure_out(config)?;
    let setup = config.sweep_setup()?;
    let eps = config.eps_list[0];
    let k = setup.fast_cells(eps)?;
    let fast = Grid1D::new(k, 16 * k)?;
    let filter = config.filter()?;
    let gl_params = gl_coefficients(setup.alpha, setup.a1, setup.a2);
    let state0 = GLState::new(setup.initial_amplitude()?, 0.0);
    let ansatz = build_ansatz(&state0, &gl_params, eps, &fast, filter)?;
    let u0 = ansatz.psi_improved.scaled_re(eps);

    let mut params = SHParams::new(setup.alpha, eps, setup.a1, setup.a2, config.dt)?;
    params.dt = select_dt(&u0, &params)?;
    let t_end = config.t_star / (eps * eps);
    let states = sh_evolve(&u0, &params, t_end, config.samples)?;
    let samples: Vec<(f64, &SpectralField)> = states.iter().map(|s| (s.t, &s.u)).collect();
    write_checkpoint_csv(&config.out_dir.join("sh.csv"), &samples)?;
    write_manifest(
        config,
        serde_json::json!({
            "study": "sh",
            "eps": eps,
            "grid_cells": k,
            "grid_points": 16 * k,
            "t_end": t_end,
        }),
    )?;
    Ok(())
}
