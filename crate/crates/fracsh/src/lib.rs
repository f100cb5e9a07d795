//! A Fourier-spectral laboratory for the space-fractional Swift-Hohenberg
//! equation near its first bifurcation.
//!
//! The crate evolves
//!
//! ```text
//! du/dt = -(1 - (-Delta)^(alpha/2))^2 u + eps^2 u - a1 u^2 - a2 u^3
//! ```
//!
//! on periodic fast grids, solves the Ginzburg-Landau amplitude equation
//! for the envelope of the critical modes on the matching slow grid, builds
//! the first and improved approximations from that envelope, and measures
//! how the residuum and the approximation error scale as eps shrinks.
//!
//! Functionality is organized the way the computations layer:
//!
//! * [`spectral`] - grids, transforms, Sobolev/L1/sup norm surrogates and
//!   the slow-to-fast embedding f(eps x) e^{ikx};
//! * [`symbols`] - the operator symbol, its Taylor remainder multipliers
//!   r, m1, m2 with the constant c+, sharp mode filters, semigroup bounds
//!   and the fractional Laplacian (Fourier route plus a singular-integral
//!   oracle);
//! * [`etdrk4`] - exponential time differencing with contour-evaluated
//!   coefficients;
//! * [`gl`] / [`sh`] - the amplitude and pattern equations themselves;
//! * [`residuum`] - Res(eps Psi), its band decomposition and scaling sweeps;
//! * [`study`] - configuration, orchestration, CSV/JSON emission and the
//!   randomized property suite behind the `fracsh` binary.
//!
//! The `examples/` directory exercises each capability end to end.

pub mod error;
pub mod etdrk4;
pub mod gl;
pub mod quad;
pub mod residuum;
pub mod sh;
pub mod spectral;
pub mod study;
pub mod symbols;

pub use error::{FracshError, Result};
