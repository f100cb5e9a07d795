use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{FracshError, Result};
use crate::residuum::SweepSetup;
use crate::spectral::SobolevIndex;
use crate::symbols::{FilterConfig, FractionalPower, SemigroupBounds};

/// Resolved configuration of a study run. Stored as a flat key-value file;
/// every key can also be overridden on the command line with
/// `--set key=value`.
#[derive(Debug, Clone, Serialize)]
pub struct StudyConfig {
    pub alpha: f64,
    pub a1: f64,
    pub a2: f64,
    pub theta: f64,
    pub eps_list: Vec<f64>,
    /// Slow period L_X; must be an integer multiple of 2 pi.
    pub l_x: f64,
    pub n_slow: usize,
    /// Recorded states per trajectory, endpoints included.
    pub samples: usize,
    /// Slow-time horizon; the fast horizon is t_star / eps^2.
    pub t_star: f64,
    pub delta: f64,
    pub r0: f64,
    /// Fast-time step target for the pattern equation.
    pub dt: f64,
    /// Slow-time step for the amplitude equation.
    pub gl_dt: f64,
    /// Initial amplitude amp * sech(width (X - L_X/2)), periodized; the
    /// `cosine` profile uses amp * cos(width X) instead (width must then be
    /// a lattice frequency of the slow grid).
    pub amp: f64,
    pub width: f64,
    pub profile: AmplitudeProfile,
    pub seed: u64,
    pub workers: usize,
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AmplitudeProfile {
    Sech,
    Cosine,
}

impl Default for StudyConfig {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            a1: 0.0,
            a2: 1.0,
            theta: 1.0,
            eps_list: vec![0.2, 0.1, 0.05],
            l_x: 16.0 * PI,
            n_slow: 256,
            samples: 33,
            t_star: 1.0,
            delta: 0.5,
            r0: 0.125,
            dt: 0.05,
            gl_dt: 0.01,
            amp: 0.8,
            width: 1.0,
            profile: AmplitudeProfile::Sech,
            seed: 7,
            workers: 1,
            out_dir: PathBuf::from("out"),
        }
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    v.trim().parse().map_err(|_| {
        FracshError::InvalidParameter(format!("key {key}: cannot parse `{v}` as a number"))
    })
}

fn parse_usize(key: &str, v: &str) -> Result<usize> {
    v.trim().parse().map_err(|_| {
        FracshError::InvalidParameter(format!("key {key}: cannot parse `{v}` as an integer"))
    })
}

impl StudyConfig {
    /// Apply one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim();
        let v = value.trim();
        match key {
            "alpha" => self.alpha = parse_f64(key, v)?,
            "a1" => self.a1 = parse_f64(key, v)?,
            "a2" => self.a2 = parse_f64(key, v)?,
            "theta" => self.theta = parse_f64(key, v)?,
            "eps_list" => {
                let mut list = Vec::new();
                for part in v.split(',') {
                    list.push(parse_f64(key, part)?);
                }
                self.eps_list = list;
            }
            "l_x" => self.l_x = parse_f64(key, v)?,
            "n_slow" => self.n_slow = parse_usize(key, v)?,
            "samples" => self.samples = parse_usize(key, v)?,
            "t_star" => self.t_star = parse_f64(key, v)?,
            "delta" => self.delta = parse_f64(key, v)?,
            "r0" => self.r0 = parse_f64(key, v)?,
            "dt" => self.dt = parse_f64(key, v)?,
            "gl_dt" => self.gl_dt = parse_f64(key, v)?,
            "amp" => self.amp = parse_f64(key, v)?,
            "width" => self.width = parse_f64(key, v)?,
            "profile" => {
                self.profile = match v {
                    "sech" => AmplitudeProfile::Sech,
                    "cosine" | "cos" => AmplitudeProfile::Cosine,
                    other => {
                        return Err(FracshError::InvalidParameter(format!(
                            "unknown amplitude profile `{other}` (sech or cosine)"
                        )))
                    }
                }
            }
            "seed" => {
                self.seed = v.parse().map_err(|_| {
                    FracshError::InvalidParameter(format!("key seed: cannot parse `{v}`"))
                })?
            }
            "workers" => self.workers = parse_usize(key, v)?.max(1),
            "out" | "out_dir" => self.out_dir = PathBuf::from(v),
            other => {
                return Err(FracshError::InvalidParameter(format!(
                    "unknown configuration key `{other}`"
                )))
            }
        }
        Ok(())
    }

    /// Read a flat key-value file: one `key = value` per line, `#` comments.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                FracshError::InvalidParameter(format!(
                    "{}:{}: expected `key = value`, got `{raw}`",
                    path.display(),
                    lineno + 1
                ))
            })?;
            cfg.set(key, value)?;
        }
        Ok(cfg)
    }

    /// Number of 2 pi cells in the slow grid. Errors unless L_X is an
    /// integer multiple of 2 pi.
    pub fn slow_cells(&self) -> Result<usize> {
        let k = self.l_x / (2.0 * PI);
        if k < 0.5 || (k - k.round()).abs() > 1e-9 * k.max(1.0) {
            return Err(FracshError::InvalidParameter(format!(
                "slow period L_X = {} is not an integer multiple of 2 pi",
                self.l_x
            )));
        }
        Ok(k.round() as usize)
    }

    pub fn alpha_power(&self) -> Result<FractionalPower> {
        FractionalPower::new(self.alpha)
    }

    pub fn theta_index(&self) -> Result<SobolevIndex> {
        SobolevIndex::new(self.theta)
    }

    pub fn filter(&self) -> Result<FilterConfig> {
        FilterConfig::new(self.delta, self.r0)
    }

    /// The epsilon-sweep setup shared by the residuum and nonlinearity
    /// studies.
    pub fn sweep_setup(&self) -> Result<SweepSetup> {
        let setup = SweepSetup {
            eps_list: self.eps_list.clone(),
            alpha: self.alpha_power()?,
            a1: self.a1,
            a2: self.a2,
            theta: self.theta_index()?,
            filter: self.filter()?,
            slow_cells: self.slow_cells()?,
            n_slow: self.n_slow,
            amp: self.amp,
            width: self.width,
            cosine_profile: self.profile == AmplitudeProfile::Cosine,
            t_star: self.t_star,
            samples: self.samples,
            gl_dt: self.gl_dt,
        };
        setup.validate()?;
        Ok(setup)
    }

    /// Derived constants recorded in every manifest.
    pub fn derived(&self) -> Result<DerivedConstants> {
        let alpha = self.alpha_power()?;
        let filter = self.filter()?;
        let params = crate::gl::gl_coefficients(alpha, self.a1, self.a2);
        let bounds = SemigroupBounds::new(alpha, filter);
        Ok(DerivedConstants {
            c_plus: params.c_plus,
            gamma: params.gamma,
            diffusion: params.diffusion,
            sigma_s: bounds.sigma_s,
        })
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DerivedConstants {
    pub c_plus: f64,
    pub gamma: f64,
    pub diffusion: f64,
    pub sigma_s: f64,
}
