//! Periodic grids, synchronized physical/Fourier fields, and the discrete
//! norm surrogates everything else is measured in.

mod field;
mod grid;
mod norms;

pub use field::{scale_embed, SpectralField};
pub use grid::Grid1D;
pub use norms::{cb_norm, h_norm, l1_fourier_norm, SobolevIndex};
