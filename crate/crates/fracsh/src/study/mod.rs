//! Configuration, orchestration and file output for the studies.

mod config;
mod props;
mod runs;

pub use config::StudyConfig;
pub use props::{run_property_suite, PropertyCheck, PropertyReport};
pub use runs::{
    run_convergence, run_gl, run_residuum, run_sh, run_symbols, ConvergenceReport, SymbolsReport,
};
