//! Thin command-line front end over the study drivers. Exit codes:
//! 0 success, 2 validation error, 3 numeric failure (blow-up or guard),
//! 4 acceptance threshold missed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fracsh::study::{
    run_convergence, run_gl, run_property_suite, run_residuum, run_sh, run_symbols, StudyConfig,
};
use fracsh::FracshError;

#[derive(Parser)]
#[command(
    name = "fracsh",
    version,
    about = "Fractional Swift-Hohenberg / Ginzburg-Landau studies"
)]
struct Cli {
    /// Flat key-value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override a single configuration key, e.g. --set alpha=1.5.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,

    /// Concurrent per-epsilon jobs in sweep drivers.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit symbols.csv with Taylor-identity defects and the c+ cross-check.
    Symbols,
    /// Evolve the amplitude equation and write gl.csv checkpoints.
    Gl,
    /// Evolve the pattern equation from eps Psi(0) and write sh.csv.
    Sh,
    /// Residuum scaling sweep: residuum.csv and slopes.json.
    Residuum,
    /// Approximation-error sweep: convergence.csv and convergence.json.
    Convergence,
    /// Randomized inequality property suite: props.json.
    Props,
}

const EXIT_VALIDATION: u8 = 2;
const EXIT_NUMERIC: u8 = 3;
const EXIT_THRESHOLD: u8 = 4;

fn exit_code_for(err: &FracshError) -> u8 {
    match err {
        FracshError::InvalidParameter(_) | FracshError::IncommensurateScale(_) => EXIT_VALIDATION,
        FracshError::BlowUp { .. }
        | FracshError::GuardViolation { .. }
        | FracshError::QuadratureNoConvergence { .. } => EXIT_NUMERIC,
        FracshError::Io(_) => EXIT_NUMERIC,
    }
}

fn resolve_config(cli: &Cli) -> Result<StudyConfig, FracshError> {
    let mut cfg = match &cli.config {
        Some(path) => StudyConfig::from_file(path)?,
        None => StudyConfig::default(),
    };
    for assignment in &cli.set {
        let (key, value) = assignment.split_once('=').ok_or_else(|| {
            FracshError::InvalidParameter(format!("--set expects KEY=VALUE, got `{assignment}`"))
        })?;
        cfg.set(key, value)?;
    }
    if let Some(w) = cli.workers {
        cfg.workers = w.max(1);
    }
    if let Some(out) = &cli.out {
        cfg.out_dir = out.clone();
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<u8, FracshError> {
    let cfg = resolve_config(cli)?;
    match cli.command {
        Command::Symbols => {
            let report = run_symbols(&cfg)?;
            println!(
                "symbols: {} rows, max identity defect {:.3e}, |c+ closed - quadrature| = {:.3e}",
                report.rows, report.max_defect, report.c_plus_diff
            );
            if report.max_defect > 1e-8 || report.c_plus_diff > 1e-10 {
                return Ok(EXIT_THRESHOLD);
            }
        }
        Command::Gl => {
            run_gl(&cfg)?;
            println!("gl: wrote {}", cfg.out_dir.join("gl.csv").display());
        }
        Command::Sh => {
            run_sh(&cfg)?;
            println!("sh: wrote {}", cfg.out_dir.join("sh.csv").display());
        }
        Command::Residuum => {
            let report = run_residuum(&cfg)?;
            println!(
                "residuum: crit slope {:?}, stab slope {:?}",
                report.crit_slope, report.stab_slope
            );
        }
        Command::Convergence => {
            let report = run_convergence(&cfg)?;
            println!(
                "convergence: slope vs psi {:?}, vs improved {:?}, monotone {}",
                report.slope_psi, report.slope_psi_improved, report.monotone
            );
        }
        Command::Props => {
            let report = run_property_suite(&cfg)?;
            std::fs::create_dir_all(&cfg.out_dir)?;
            std::fs::write(
                cfg.out_dir.join("props.json"),
                serde_json::to_string_pretty(&report)
                    .map_err(|e| FracshError::InvalidParameter(e.to_string()))?
                    + "\n",
            )?;
            let mut failed = 0;
            for c in &report.checks {
                println!(
                    "{} {}: {}",
                    if c.pass { "pass" } else { "FAIL" },
                    c.name,
                    c.detail
                );
                if !c.pass {
                    failed += 1;
                }
            }
            println!(
                "props: {}/{} passed",
                report.checks.len() - failed,
                report.checks.len()
            );
            if failed > 0 {
                return Ok(EXIT_THRESHOLD);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
