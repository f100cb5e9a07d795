//! Residuum of the improved ansatz, Res(v) = -dv/dt + Lambda v + N(v),
//! split into critical/stable parts and harmonic bands, plus the
//! epsilon-sweep studies that measure how those parts scale.

use serde::Serialize;

use crate::error::{FracshError, Result};
use crate::gl::{
    build_ansatz, gl_coefficients, gl_trajectory, sech_profile, AnsatzFields, GLState,
};
use crate::sh::{sh_nonlinearity, SHParams};
use crate::spectral::{h_norm, Grid1D, SobolevIndex, SpectralField};
use crate::symbols::{mode_filter, sh_symbol_eval, FilterBand, FilterConfig, FractionalPower};

/// Scaling exponent beta = 3/2 of the approximation error.
pub const BETA: f64 = 1.5;
/// Norms below this floor are treated as degenerate for slope fitting.
pub const SLOPE_FLOOR: f64 = 1e-9;

/// Residuum at one time, with its filter split and harmonic band norms.
#[derive(Debug, Clone)]
pub struct ResiduumSample {
    pub t: f64,
    pub res: SpectralField,
    pub res_c: SpectralField,
    pub res_s: SpectralField,
    /// H^theta norm of the band |xi - k| < delta for k = -4..=4 (index k+4).
    pub z_bands: [f64; 9],
}

impl ResiduumSample {
    pub fn z_band(&self, k: i32) -> f64 {
        self.z_bands[(k + 4) as usize]
    }
}

/// Res(eps Psi) = -eps dPsi/dt + Lambda(eps Psi) + N(eps Psi), with Lambda
/// applied through the exact symbol and N through the dealiased product.
pub fn compute_residuum(
    ansatz: &AnsatzFields,
    params: &SHParams,
    config: FilterConfig,
    theta: SobolevIndex,
) -> ResiduumSample {
    let eps = ansatz.eps;
    let eps_psi = ansatz.psi_improved.scaled_re(eps);
    let linear = eps_psi.apply_symbol(|xi| sh_symbol_eval(xi, params.alpha, params.eps));
    let nonlinear = sh_nonlinearity(&eps_psi, params);
    let res = ansatz.d_psi_dt.scaled_re(-eps).add(&linear).add(&nonlinear);
    let res_c = mode_filter(&res, FilterBand::Critical, config);
    let res_s = mode_filter(&res, FilterBand::Stable, config);
    let mut z_bands = [0.0; 9];
    for k in -4i32..=4 {
        let band = res.band_pass(k as f64, config.delta);
        z_bands[(k + 4) as usize] = h_norm(&band, theta);
    }
    ResiduumSample {
        t: 0.0,
        res,
        res_c,
        res_s,
        z_bands,
    }
}

/// Ordinary least squares slope of log(norm) against log(eps). Returns
/// `None` when every value sits below the floor or any is non-positive.
pub fn fit_loglog(eps: &[f64], vals: &[f64]) -> Option<f64> {
    if eps.len() != vals.len() || eps.len() < 2 {
        return None;
    }
    if vals.iter().all(|&v| v < SLOPE_FLOOR) || vals.iter().any(|&v| v.is_nan() || v <= 0.0) {
        return None;
    }
    let xs: Vec<f64> = eps.iter().map(|e| e.ln()).collect();
    let ys: Vec<f64> = vals.iter().map(|v| v.ln()).collect();
    let n = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / n;
    let ybar = ys.iter().sum::<f64>() / n;
    let num: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xbar) * (y - ybar))
        .sum();
    let den: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    Some(num / den)
}

/// Per-(eps, t) record of a residuum sweep, the row set of `residuum.csv`.
#[derive(Debug, Clone, Serialize)]
pub struct ResiduumRow {
    pub eps: f64,
    pub t: f64,
    pub norm_crit: f64,
    pub norm_stab: f64,
    pub z0: f64,
    pub z1: f64,
    pub z2: f64,
    pub z3: f64,
    pub z4: f64,
}

/// Result of an epsilon sweep: per-eps sup-over-t norms and fitted slopes.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingReport {
    pub theta: f64,
    pub eps_list: Vec<f64>,
    pub crit_norms: Vec<f64>,
    pub stab_norms: Vec<f64>,
    pub crit_slope: Option<f64>,
    pub stab_slope: Option<f64>,
    /// Times at which the per-eps suprema were attained.
    pub argmax_t_crit: Vec<f64>,
    pub argmax_t_stab: Vec<f64>,
}

/// Everything a residuum or nonlinearity-difference sweep needs.
#[derive(Debug, Clone)]
pub struct SweepSetup {
    pub eps_list: Vec<f64>,
    pub alpha: FractionalPower,
    pub a1: f64,
    pub a2: f64,
    pub theta: SobolevIndex,
    pub filter: FilterConfig,
    /// Slow grid: L_X = 2 pi slow_cells with n_slow points.
    pub slow_cells: usize,
    pub n_slow: usize,
    /// Initial amplitude amp * sech(width (X - L_X/2)), periodized, or
    /// amp * cos(width X) when `cosine_profile` is set (band-limited data
    /// for the degenerate linear checks).
    pub amp: f64,
    pub width: f64,
    pub cosine_profile: bool,
    pub t_star: f64,
    pub samples: usize,
    pub gl_dt: f64,
}

impl SweepSetup {
    pub fn validate(&self) -> Result<()> {
        if self.eps_list.len() < 3 {
            return Err(FracshError::InvalidParameter(format!(
                "need at least 3 epsilon values, got {}",
                self.eps_list.len()
            )));
        }
        if !self.eps_list.windows(2).all(|w| w[0] > w[1] && w[1] > 0.0) {
            return Err(FracshError::InvalidParameter(
                "epsilon list must be strictly decreasing and positive".into(),
            ));
        }
        let sigma_s = crate::symbols::SemigroupBounds::new(self.alpha, self.filter).sigma_s;
        for &eps in &self.eps_list {
            self.fast_cells(eps)?;
            if eps * eps > sigma_s {
                return Err(FracshError::InvalidParameter(format!(
                    "eps = {eps} violates eps^2 <= sigma_s = {sigma_s} (stable modes would stop decaying)"
                )));
            }
        }
        if self.samples < 2 {
            return Err(FracshError::InvalidParameter(
                "need at least 2 time samples".into(),
            ));
        }
        Ok(())
    }

    /// K for the fast grid: eps = slow_cells / K must have integer K.
    pub fn fast_cells(&self, eps: f64) -> Result<usize> {
        let k = self.slow_cells as f64 / eps;
        if (k - k.round()).abs() > 1e-9 * k {
            return Err(FracshError::IncommensurateScale(format!(
                "eps = {eps} is not of the form {}/K for integer K",
                self.slow_cells
            )));
        }
        Ok(k.round() as usize)
    }

    pub fn sample_times(&self) -> Vec<f64> {
        (0..self.samples)
            .map(|i| self.t_star * i as f64 / (self.samples - 1) as f64)
            .collect()
    }

    /// Initial amplitude on the slow grid, per the configured profile.
    pub fn initial_amplitude(&self) -> Result<SpectralField> {
        let slow = Grid1D::new(self.slow_cells, self.n_slow)?;
        if self.cosine_profile {
            let (amp, width) = (self.amp, self.width);
            let lattice = width * self.slow_cells as f64;
            if (lattice - lattice.round()).abs() > 1e-9 {
                return Err(FracshError::InvalidParameter(format!(
                    "cosine profile frequency {width} is not on the slow lattice"
                )));
            }
            Ok(SpectralField::from_real_fn(slow, move |x| {
                amp * (width * x).cos()
            }))
        } else {
            Ok(sech_profile(slow, self.amp, self.width))
        }
    }

    /// One GL solve shared by every eps of the sweep.
    pub fn amplitude_trajectory(&self) -> Result<Vec<GLState>> {
        let a0 = self.initial_amplitude()?;
        let params = gl_coefficients(self.alpha, self.a1, self.a2);
        gl_trajectory(
            &GLState::new(a0, 0.0),
            &params,
            &self.sample_times(),
            self.gl_dt,
        )
    }
}

/// Sup over the sampled trajectory of |E_c Res|_(H^theta) and
/// |E_s Res|_(H^theta) for each eps, with least-squares slopes.
pub fn residuum_scaling_study(setup: &SweepSetup) -> Result<(ScalingReport, Vec<ResiduumRow>)> {
    setup.validate()?;
    let trajectory = setup.amplitude_trajectory()?;
    let gl_params = gl_coefficients(setup.alpha, setup.a1, setup.a2);

    let mut rows = Vec::new();
    let mut crit_norms = Vec::new();
    let mut stab_norms = Vec::new();
    let mut argmax_c = Vec::new();
    let mut argmax_s = Vec::new();

    for &eps in &setup.eps_list {
        let k = setup.fast_cells(eps)?;
        let fast = Grid1D::new(k, 16 * k)?;
        let sh_params = SHParams::new(setup.alpha, eps, setup.a1, setup.a2, 0.05)?;
        let mut sup_c = (0.0_f64, 0.0_f64);
        let mut sup_s = (0.0_f64, 0.0_f64);
        for state in &trajectory {
            let t_fast = state.t / (eps * eps);
            let ansatz = build_ansatz(state, &gl_params, eps, &fast, setup.filter)?;
            let sample = compute_residuum(&ansatz, &sh_params, setup.filter, setup.theta);
            let nc = h_norm(&sample.res_c, setup.theta);
            let ns = h_norm(&sample.res_s, setup.theta);
            if nc > sup_c.0 {
                sup_c = (nc, t_fast);
            }
            if ns > sup_s.0 {
                sup_s = (ns, t_fast);
            }
            rows.push(ResiduumRow {
                eps,
                t: t_fast,
                norm_crit: nc,
                norm_stab: ns,
                z0: sample.z_band(0),
                z1: sample.z_band(1),
                z2: sample.z_band(2),
                z3: sample.z_band(3),
                z4: sample.z_band(4),
            });
        }
        crit_norms.push(sup_c.0);
        stab_norms.push(sup_s.0);
        argmax_c.push(sup_c.1);
        argmax_s.push(sup_s.1);
    }

    let report = ScalingReport {
        theta: setup.theta.value(),
        eps_list: setup.eps_list.clone(),
        crit_slope: fit_loglog(&setup.eps_list, &crit_norms),
        stab_slope: fit_loglog(&setup.eps_list, &stab_norms),
        crit_norms,
        stab_norms,
        argmax_t_crit: argmax_c,
        argmax_t_stab: argmax_s,
    };
    Ok((report, rows))
}

/// Test perturbations supported exactly inside the critical and stable
/// bands: raised-cosine spectral bumps around +-1 and +-3, normalized to
/// unit H^theta norm on the given grid. Both are real fields.
///
/// The bumps use half-width delta/2 rather than delta: sums of any two
/// bump frequencies then stay clear of the critical bands, so the exact
/// cancellation E_c(f_c g_c) = 0 that the nonlinearity estimates lean on
/// holds on the lattice even at delta = 1/2.
#[derive(Debug, Clone)]
pub struct PerturbationField {
    pub r_c: SpectralField,
    pub r_s: SpectralField,
}

impl PerturbationField {
    pub fn new(grid: &std::sync::Arc<Grid1D>, theta: SobolevIndex, config: FilterConfig) -> Self {
        let bump = |center: f64, hw: f64| {
            let mut four = vec![num_complex::Complex64::new(0.0, 0.0); grid.points()];
            for (i, &xi) in grid.xi().iter().enumerate() {
                for sign in [-1.0, 1.0] {
                    let d = (xi - sign * center).abs();
                    if d < hw {
                        let w = (0.5 * std::f64::consts::PI * d / hw).cos();
                        four[i] += w * w;
                    }
                }
            }
            let f = SpectralField::from_four(grid.clone(), four).expect("length preserved");
            let n = h_norm(&f, theta);
            f.scaled_re(1.0 / n)
        };
        let hw = 0.5 * config.delta;
        Self {
            r_c: bump(1.0, hw),
            r_s: bump(3.0, hw),
        }
    }
}

/// Scaled nonlinearity differences of assumption-style form:
/// eps^-beta |E_c(N(eps Psi + eps^beta R) - N(eps Psi))| and
/// eps^-(beta+1) |E_s(...)| with R = R_c + eps R_s, measured as a sup over
/// the sampled ansatz family and slope-fitted across eps.
pub fn nonlinearity_difference_scaling(setup: &SweepSetup) -> Result<ScalingReport> {
    setup.validate()?;
    let trajectory = setup.amplitude_trajectory()?;
    let gl_params = gl_coefficients(setup.alpha, setup.a1, setup.a2);

    let mut crit = Vec::new();
    let mut stab = Vec::new();
    let mut argmax_c = Vec::new();
    let mut argmax_s = Vec::new();

    for &eps in &setup.eps_list {
        let k = setup.fast_cells(eps)?;
        let fast = Grid1D::new(k, 16 * k)?;
        let sh_params = SHParams::new(setup.alpha, eps, setup.a1, setup.a2, 0.05)?;
        let perturbation = PerturbationField::new(&fast, setup.theta, setup.filter);
        let r = perturbation.r_c.add(&perturbation.r_s.scaled_re(eps));
        let scale = eps.powf(BETA);

        let mut sup_c = (0.0_f64, 0.0_f64);
        let mut sup_s = (0.0_f64, 0.0_f64);
        for state in &trajectory {
            let t_fast = state.t / (eps * eps);
            let ansatz = build_ansatz(state, &gl_params, eps, &fast, setup.filter)?;
            let base = ansatz.psi_improved.scaled_re(eps);
            let shifted = base.add(&r.scaled_re(scale));
            let diff =
                sh_nonlinearity(&shifted, &sh_params).sub(&sh_nonlinearity(&base, &sh_params));
            let qc = h_norm(
                &mode_filter(&diff, FilterBand::Critical, setup.filter),
                setup.theta,
            ) / scale;
            let qs = h_norm(
                &mode_filter(&diff, FilterBand::Stable, setup.filter),
                setup.theta,
            ) / (scale * eps);
            if qc > sup_c.0 {
                sup_c = (qc, t_fast);
            }
            if qs > sup_s.0 {
                sup_s = (qs, t_fast);
            }
        }
        crit.push(sup_c.0);
        stab.push(sup_s.0);
        argmax_c.push(sup_c.1);
        argmax_s.push(sup_s.1);
    }

    Ok(ScalingReport {
        theta: setup.theta.value(),
        eps_list: setup.eps_list.clone(),
        crit_slope: fit_loglog(&setup.eps_list, &crit),
        stab_slope: fit_loglog(&setup.eps_list, &stab),
        crit_norms: crit,
        stab_norms: stab,
        argmax_t_crit: argmax_c,
        argmax_t_stab: argmax_s,
    })
}
