//! Discrete surrogates of the Sobolev, L1-Fourier and sup norms.
//!
//! All integrals over the frequency line are replaced by lattice sums with
//! weight dxi. For fields whose spectrum decays before the retained band
//! ends, the rectangle rule on the periodic lattice is spectrally accurate,
//! so the surrogates track their continuum values to near machine
//! precision.

use crate::error::{FracshError, Result};
use crate::spectral::field::SpectralField;

/// Regularity index theta >= 0 of the Bessel potential space H^theta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SobolevIndex(f64);

impl SobolevIndex {
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() || theta < 0.0 {
            return Err(FracshError::InvalidParameter(format!(
                "Sobolev index must be finite and >= 0, got {theta}"
            )));
        }
        Ok(Self(theta))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// ( sum_j (1 + xi_j^2)^theta |u_hat_j|^2 dxi )^(1/2).
///
/// At theta = 0 this is the discrete L2 norm (Parseval surrogate).
pub fn h_norm(f: &SpectralField, theta: SobolevIndex) -> f64 {
    let t = theta.value();
    let dxi = f.grid().dxi();
    f.four()
        .iter()
        .zip(f.grid().xi())
        .map(|(c, &xi)| (1.0 + xi * xi).powf(t) * c.norm_sqr())
        .sum::<f64>()
        .mul_add(dxi, 0.0)
        .sqrt()
}

/// sum_j |u_hat_j| dxi.
pub fn l1_fourier_norm(f: &SpectralField) -> f64 {
    f.four().iter().map(|c| c.norm()).sum::<f64>() * f.grid().dxi()
}

/// Oversampling used when locating suprema between grid points.
const CB_OVERSAMPLE: usize = 16;

/// Sup norm of |u| over the period, from Fourier-interpolated samples with
/// a parabolic refinement of the peak. Only the sample maximum would be
/// limited by the fine spacing; the parabola removes the quadratic error.
fn sup_norm(f: &SpectralField) -> f64 {
    let vals: Vec<f64> = f
        .oversampled_phys(CB_OVERSAMPLE)
        .iter()
        .map(|c| c.norm())
        .collect();
    let m = vals.len();
    let (imax, &peak) = vals
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    let left = vals[(imax + m - 1) % m];
    let right = vals[(imax + 1) % m];
    let denom = left - 2.0 * peak + right;
    if denom >= 0.0 {
        return peak;
    }
    let delta = 0.5 * (left - right) / denom;
    let refined = peak - 0.25 * (left - right) * delta;
    refined.max(peak)
}

/// Integer-order C^k_b surrogate: sum_{m <= k} sup |d^m u / dx^m| with the
/// derivatives taken spectrally. Supports k in {0, 1, 2, 3}.
pub fn cb_norm(f: &SpectralField, k: u32) -> Result<f64> {
    if k > 3 {
        return Err(FracshError::InvalidParameter(format!(
            "cb_norm supports derivative orders 0..=3, got {k}"
        )));
    }
    let mut total = 0.0;
    for order in 0..=k {
        let g = if order == 0 {
            f.clone()
        } else {
            f.derivative(order)
        };
        total += sup_norm(&g);
    }
    Ok(total)
}
