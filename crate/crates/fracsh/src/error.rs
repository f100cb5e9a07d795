use thiserror::Error;

/// Errors produced by grid construction, solvers and studies.
#[derive(Debug, Error)]
pub enum FracshError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("incommensurate scale: {0}")]
    IncommensurateScale(String),

    #[error("quadrature failed to converge below {tol:e} on [{a}, {b}] (estimate {estimate:e})")]
    QuadratureNoConvergence {
        a: f64,
        b: f64,
        tol: f64,
        estimate: f64,
    },

    #[error("solution blow-up at t = {t} (norm {norm:e})")]
    BlowUp { t: f64, norm: f64 },

    #[error("spectral tail guard violated at t = {t}: |u_hat| = {tail:e} at the last retained mode (limit {limit:e})")]
    GuardViolation { t: f64, tail: f64, limit: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, FracshError>;
