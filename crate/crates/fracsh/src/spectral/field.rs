use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::{FracshError, Result};
use crate::spectral::grid::Grid1D;

type PlanCache = Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>;

/// Process-wide FFT plan cache, keyed by (length, direction).
static PLANS: Lazy<PlanCache> = Lazy::new(|| Mutex::new(HashMap::new()));

fn plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    let mut cache = PLANS.lock().unwrap();
    cache
        .entry((n, forward))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            planner.plan_fft(
                n,
                if forward {
                    FftDirection::Forward
                } else {
                    FftDirection::Inverse
                },
            )
        })
        .clone()
}

/// Complex field on a [`Grid1D`], stored in both representations.
///
/// `phys[n]` holds u(x_n); `four[idx]` holds the continuum-normalized
/// coefficient u_hat(xi_j) = (dx / sqrt(2 pi)) sum_n u(x_n) e^{-i xi_j x_n}
/// in ascending-frequency order. Both are filled at construction and the
/// field is immutable afterwards, so they never disagree.
#[derive(Debug, Clone)]
pub struct SpectralField {
    grid: Arc<Grid1D>,
    phys: Vec<Complex64>,
    four: Vec<Complex64>,
}

/// Forward DFT with the (dx / sqrt(2 pi)) continuum normalization.
///
/// The grid offset x_0 = -L/2 shows up as the alternating phase (-1)^j,
/// since xi_j L / 2 = pi j.
fn forward(n_points: usize, dx: f64, phys: &[Complex64]) -> Vec<Complex64> {
    let n = n_points;
    let mut buf = phys.to_vec();
    plan(n, true).process(&mut buf);
    let scale = dx / (2.0 * PI).sqrt();
    let half = (n / 2) as i64;
    (0..n)
        .map(|idx| {
            let j = idx as i64 - half;
            let bin = ((j).rem_euclid(n as i64)) as usize;
            let sign = if j & 1 == 0 { 1.0 } else { -1.0 };
            buf[bin] * (scale * sign)
        })
        .collect()
}

/// Inverse of [`forward`], normalized with dxi / sqrt(2 pi).
fn inverse(n_points: usize, dxi: f64, four: &[Complex64]) -> Vec<Complex64> {
    let n = n_points;
    let half = (n / 2) as i64;
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for (idx, &c) in four.iter().enumerate() {
        let j = idx as i64 - half;
        let bin = (j.rem_euclid(n as i64)) as usize;
        let sign = if j & 1 == 0 { 1.0 } else { -1.0 };
        buf[bin] = c * sign;
    }
    plan(n, false).process(&mut buf);
    let scale = dxi / (2.0 * PI).sqrt();
    buf.iter_mut().for_each(|c| *c *= scale);
    buf
}

impl SpectralField {
    pub fn from_phys(grid: Arc<Grid1D>, phys: Vec<Complex64>) -> Result<Self> {
        if phys.len() != grid.points() {
            return Err(FracshError::InvalidParameter(format!(
                "field length {} does not match grid with {} points",
                phys.len(),
                grid.points()
            )));
        }
        let four = forward(grid.points(), grid.dx(), &phys);
        Ok(Self { grid, phys, four })
    }

    pub fn from_four(grid: Arc<Grid1D>, four: Vec<Complex64>) -> Result<Self> {
        if four.len() != grid.points() {
            return Err(FracshError::InvalidParameter(format!(
                "coefficient length {} does not match grid with {} points",
                four.len(),
                grid.points()
            )));
        }
        let phys = inverse(grid.points(), grid.dxi(), &four);
        Ok(Self { grid, phys, four })
    }

    pub fn from_real_fn(grid: Arc<Grid1D>, f: impl Fn(f64) -> f64) -> Self {
        let phys = grid
            .x()
            .iter()
            .map(|&x| Complex64::new(f(x), 0.0))
            .collect();
        Self::from_phys(grid, phys).expect("lengths match by construction")
    }

    pub fn from_complex_fn(grid: Arc<Grid1D>, f: impl Fn(f64) -> Complex64) -> Self {
        let phys = grid.x().iter().map(|&x| f(x)).collect();
        Self::from_phys(grid, phys).expect("lengths match by construction")
    }

    pub fn zeros(grid: Arc<Grid1D>) -> Self {
        let n = grid.points();
        Self {
            grid,
            phys: vec![Complex64::new(0.0, 0.0); n],
            four: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn grid(&self) -> &Arc<Grid1D> {
        &self.grid
    }

    pub fn phys(&self) -> &[Complex64] {
        &self.phys
    }

    pub fn four(&self) -> &[Complex64] {
        &self.four
    }

    /// Coefficient at signed mode index j (0 if outside the retained band).
    pub fn coeff(&self, j: i64) -> Complex64 {
        self.grid
            .position_of(j)
            .map(|p| self.four[p])
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.grid.same_grid(&other.grid), "grid mismatch");
        Self {
            grid: self.grid.clone(),
            phys: self
                .phys
                .iter()
                .zip(&other.phys)
                .map(|(a, b)| a + b)
                .collect(),
            four: self
                .four
                .iter()
                .zip(&other.four)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.grid.same_grid(&other.grid), "grid mismatch");
        Self {
            grid: self.grid.clone(),
            phys: self
                .phys
                .iter()
                .zip(&other.phys)
                .map(|(a, b)| a - b)
                .collect(),
            four: self
                .four
                .iter()
                .zip(&other.four)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            grid: self.grid.clone(),
            phys: self.phys.iter().map(|a| a * c).collect(),
            four: self.four.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scaled_re(&self, c: f64) -> Self {
        self.scaled(Complex64::new(c, 0.0))
    }

    /// Complex conjugate field. Both representations are conjugated in
    /// place; on the frequency side this reverses the lattice, with the
    /// unpaired -N/2 mode mapping to itself (it aliases its own mirror).
    #[allow(clippy::needless_range_loop)]
    pub fn conj(&self) -> Self {
        let n = self.grid.points();
        let mut four = vec![Complex64::new(0.0, 0.0); n];
        four[0] = self.four[0].conj();
        for idx in 1..n {
            four[idx] = self.four[n - idx].conj();
        }
        Self {
            grid: self.grid.clone(),
            phys: self.phys.iter().map(|a| a.conj()).collect(),
            four,
        }
    }

    /// Apply a real Fourier multiplier xi |-> m(xi).
    pub fn apply_symbol(&self, m: impl Fn(f64) -> f64) -> Self {
        let four = self
            .four
            .iter()
            .zip(self.grid.xi())
            .map(|(c, &xi)| c * m(xi))
            .collect();
        Self::from_four(self.grid.clone(), four).expect("length preserved")
    }

    /// Apply a complex Fourier multiplier.
    pub fn apply_symbol_complex(&self, m: impl Fn(f64) -> Complex64) -> Self {
        let four = self
            .four
            .iter()
            .zip(self.grid.xi())
            .map(|(c, &xi)| c * m(xi))
            .collect();
        Self::from_four(self.grid.clone(), four).expect("length preserved")
    }

    /// Spectral derivative of order m.
    pub fn derivative(&self, order: u32) -> Self {
        self.apply_symbol_complex(|xi| Complex64::new(0.0, xi).powu(order))
    }

    /// Keep only modes with |xi - center| < halfwidth (strict, open ball).
    pub fn band_pass(&self, center: f64, halfwidth: f64) -> Self {
        self.apply_symbol(|xi| {
            if (xi - center).abs() < halfwidth {
                1.0
            } else {
                0.0
            }
        })
    }

    /// Complement of [`band_pass`].
    pub fn band_stop(&self, center: f64, halfwidth: f64) -> Self {
        self.apply_symbol(|xi| {
            if (xi - center).abs() < halfwidth {
                0.0
            } else {
                1.0
            }
        })
    }

    pub fn max_abs_phys(&self) -> f64 {
        self.phys.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.phys.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Magnitude of the largest coefficient at the extreme retained modes,
    /// used by the resolution guards.
    pub fn tail_magnitude(&self) -> f64 {
        let n = self.grid.points();
        self.four[0].norm().max(self.four[n - 1].norm())
    }

    pub fn max_abs_four(&self) -> f64 {
        self.four.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn has_non_finite(&self) -> bool {
        self.phys
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
    }

    /// Physical values on a refined grid with `factor * N` points, obtained
    /// by Fourier interpolation (zero padding).
    pub fn oversampled_phys(&self, factor: usize) -> Vec<Complex64> {
        let n = self.grid.points();
        let m = n * factor.max(1);
        let padded = pad_natural(&self.four, n, m);
        inverse(m, self.grid.dxi(), &padded)
    }

    /// Exactly dealiased pointwise product of `fields`, computed on a grid
    /// with twice the points (sufficient for products of up to three
    /// band-limited factors) and truncated back to the retained band. The
    /// unpaired -N/2 mode of the result is zeroed to keep truncation
    /// symmetric.
    pub fn dealiased_product(fields: &[&SpectralField]) -> SpectralField {
        assert!(!fields.is_empty() && fields.len() <= 3, "1..=3 factors");
        let grid = fields[0].grid.clone();
        for f in fields {
            assert!(f.grid.same_grid(&grid), "grid mismatch");
        }
        let n = grid.points();
        let m = 2 * n;
        let mut acc = vec![Complex64::new(1.0, 0.0); m];
        for f in fields {
            let fine = inverse(m, grid.dxi(), &pad_natural(&f.four, n, m));
            acc.iter_mut().zip(&fine).for_each(|(a, b)| *a *= b);
        }
        let wide = forward(m, grid.length() / m as f64, &acc);
        let mut four = truncate_natural(&wide, m, n);
        four[0] = Complex64::new(0.0, 0.0);
        SpectralField::from_four(grid, four).expect("length preserved")
    }

    /// Apply a pointwise map (polynomial of degree <= 3 in the field and
    /// its conjugate) on the doubled grid and truncate back: one padded
    /// round trip instead of one per product.
    pub fn dealiased_pointwise(&self, map: impl Fn(Complex64) -> Complex64) -> SpectralField {
        let n = self.grid.points();
        let m = 2 * n;
        let fine = inverse(m, self.grid.dxi(), &pad_natural(&self.four, n, m));
        let mapped: Vec<Complex64> = fine.iter().map(|&z| map(z)).collect();
        let wide = forward(m, self.grid.length() / m as f64, &mapped);
        let mut four = truncate_natural(&wide, m, n);
        four[0] = Complex64::new(0.0, 0.0);
        SpectralField::from_four(self.grid.clone(), four).expect("length preserved")
    }

    /// Discrete L2 inner product dx * sum u * conj(v).
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert!(self.grid.same_grid(&other.grid), "grid mismatch");
        self.phys
            .iter()
            .zip(&other.phys)
            .map(|(a, b)| a * b.conj())
            .sum::<Complex64>()
            * self.grid.dx()
    }
}

fn pad_natural(four: &[Complex64], n: usize, m: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); m];
    let off = (m - n) / 2;
    out[off..off + n].copy_from_slice(four);
    out
}

fn truncate_natural(four: &[Complex64], m: usize, n: usize) -> Vec<Complex64> {
    let off = (m - n) / 2;
    four[off..off + n].to_vec()
}

/// Embed a slow-grid field into a fast grid: x |-> f(eps x) e^{i k x}.
///
/// Requires eps * L_fast = L_slow exactly (commensurate grids), so every
/// slow mode Xi_m lands on the fast lattice at xi = eps Xi_m + k and the
/// map is exact rather than interpolatory. Coefficients pick up the 1/eps
/// continuum scaling of f_hat((xi - k) / eps).
pub fn scale_embed(
    slow: &SpectralField,
    eps: f64,
    k: i64,
    fast_grid: &Arc<Grid1D>,
) -> Result<SpectralField> {
    let ks = slow.grid().cells() as f64;
    let kf = fast_grid.cells() as f64;
    if eps.is_nan() || eps <= 0.0 || (eps * kf - ks).abs() > 1e-9 * ks.max(1.0) {
        return Err(FracshError::IncommensurateScale(format!(
            "eps = {eps} does not satisfy eps * K_fast = K_slow ({} vs {})",
            eps * kf,
            ks
        )));
    }
    if k.abs() > 4 {
        return Err(FracshError::InvalidParameter(format!(
            "carrier |k| <= 4 supported, got {k}"
        )));
    }
    let shift = k * fast_grid.cells() as i64;
    let mut four = vec![Complex64::new(0.0, 0.0); fast_grid.points()];
    let inv_eps = 1.0 / eps;
    let drop_floor = 1e-13 * slow.max_abs_four();
    for (idx, &c) in slow.four().iter().enumerate() {
        let m = slow.grid().mode_index(idx);
        match fast_grid.position_of(m + shift) {
            Some(p) => four[p] = c * inv_eps,
            None => {
                if c.norm() > drop_floor {
                    return Err(FracshError::InvalidParameter(format!(
                        "slow mode {m} maps outside the fast lattice with |coeff| = {:e}",
                        c.norm()
                    )));
                }
            }
        }
    }
    SpectralField::from_four(fast_grid.clone(), four)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_field() -> SpectralField {
        let grid = Grid1D::new(8, 512).unwrap();
        SpectralField::from_real_fn(grid, |x| (-0.5 * x * x).exp())
    }

    #[test]
    fn constant_field_is_pure_dc() {
        let grid = Grid1D::new(8, 128).unwrap();
        let f = SpectralField::from_real_fn(grid.clone(), |_| 1.0);
        let dc = f.coeff(0);
        let expect = grid.length() / (2.0 * PI).sqrt();
        assert!((dc.re - expect).abs() < 1e-10 * expect);
        assert!(dc.im.abs() < 1e-12);
        for j in 1..64 {
            assert!(f.coeff(j).norm() < 1e-12);
            assert!(f.coeff(-j).norm() < 1e-12);
        }
    }

    #[test]
    fn plane_wave_hits_single_lattice_mode() {
        let grid = Grid1D::new(8, 128).unwrap();
        let f = SpectralField::from_complex_fn(grid.clone(), |x| Complex64::new(0.0, x).exp());
        let expect = grid.length() / (2.0 * PI).sqrt();
        assert!((f.coeff(8).re - expect).abs() < 1e-9);
        for j in -64..64 {
            if j != 8 {
                assert!(f.coeff(j).norm() < 1e-9, "leakage at mode {j}");
            }
        }
    }

    #[test]
    fn gaussian_transform_matches_analytic() {
        // The transform of e^{-x^2/2} under this convention is e^{-xi^2/2}.
        let f = gaussian_field();
        let mut worst = 0.0_f64;
        for (idx, &xi) in f.grid().xi().iter().enumerate() {
            if xi.abs() <= 6.0 {
                let expect = (-0.5 * xi * xi).exp();
                worst = worst.max((f.four()[idx] - expect).norm());
            }
        }
        assert!(worst < 1e-10, "max deviation {worst:e}");
    }

    #[test]
    fn round_trip_is_identity() {
        let f = gaussian_field();
        let back = SpectralField::from_four(f.grid().clone(), f.four().to_vec()).unwrap();
        let mut rel = 0.0_f64;
        let scale = f.max_abs_phys();
        for (a, b) in f.phys().iter().zip(back.phys()) {
            rel = rel.max((a - b).norm() / scale);
        }
        assert!(rel < 1e-12);
    }

    #[test]
    fn real_fields_have_conjugate_symmetry() {
        let f = gaussian_field();
        for j in 1..=200 {
            let d = (f.coeff(-j) - f.coeff(j).conj()).norm();
            assert!(d < 1e-12, "asymmetry {d:e} at mode {j}");
        }
    }

    #[test]
    fn dealiased_square_of_cosine_is_exact() {
        // cos^2 x = (1 + cos 2x) / 2: coefficients land only at 0, +-2K.
        let grid = Grid1D::new(8, 128).unwrap();
        let f = SpectralField::from_real_fn(grid.clone(), |x| x.cos());
        let sq = SpectralField::dealiased_product(&[&f, &f]);
        let expect = grid.length() / (2.0 * PI).sqrt();
        assert!((sq.coeff(0).re - 0.5 * expect).abs() < 1e-12 * expect);
        assert!((sq.coeff(16).re - 0.25 * expect).abs() < 1e-12 * expect);
        assert!((sq.coeff(-16).re - 0.25 * expect).abs() < 1e-12 * expect);
        for j in [-8i64, 8, 1, -1, 5, 24, -24] {
            assert!(sq.coeff(j).norm() < 1e-12 * expect, "aliasing at {j}");
        }
    }

    #[test]
    fn scale_embed_of_constant_is_carrier_wave() {
        let slow = Grid1D::new(8, 256).unwrap();
        let fast = Grid1D::new(40, 640).unwrap();
        let a = SpectralField::from_real_fn(slow, |_| 1.0);
        let g = scale_embed(&a, 0.2, 1, &fast).unwrap();
        let mut worst = 0.0_f64;
        for (n, &x) in fast.x().iter().enumerate() {
            let expect = Complex64::new(0.0, x).exp();
            worst = worst.max((g.phys()[n] - expect).norm());
        }
        assert!(worst < 1e-10, "max deviation {worst:e}");
    }

    #[test]
    fn scale_embed_identity_when_grids_match() {
        let grid = Grid1D::new(8, 256).unwrap();
        let a = SpectralField::from_real_fn(grid.clone(), |x| (-0.5 * x * x).exp());
        let g = scale_embed(&a, 1.0, 0, &grid).unwrap();
        let mut worst = 0.0_f64;
        for (p, q) in a.phys().iter().zip(g.phys()) {
            worst = worst.max((p - q).norm());
        }
        assert!(worst < 1e-12);
    }

    #[test]
    fn scale_embed_rejects_incommensurate_eps() {
        let slow = Grid1D::new(8, 256).unwrap();
        let fast = Grid1D::new(40, 640).unwrap();
        let a = SpectralField::from_real_fn(slow, |_| 1.0);
        assert!(scale_embed(&a, 0.21, 1, &fast).is_err());
    }
}
