use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{FracshError, Result};

/// Periodic 1-D grid whose length is an integer number of 2*pi cells.
///
/// With L = 2*pi*K the plane waves e^{ix}, e^{2ix} are grid-periodic and the
/// frequency lattice xi_j = j/K contains +-1, +-2 exactly (j = +-K, +-2K).
/// Points are x_n = -L/2 + n*dx and the retained frequencies run over
/// j in {-N/2, ..., N/2 - 1}.
#[derive(Debug)]
pub struct Grid1D {
    k: usize,
    n: usize,
    len: f64,
    dx: f64,
    dxi: f64,
    x: Vec<f64>,
    xi: Vec<f64>,
}

impl Grid1D {
    /// Build a grid with K two-pi cells and N points.
    ///
    /// Requires N even and N >= 16*K, so that |xi| up to 8 is representable
    /// (harmonics through e^{+-4ix} plus dealiasing margin).
    pub fn new(k: usize, n: usize) -> Result<Arc<Self>> {
        if k == 0 {
            return Err(FracshError::InvalidParameter("grid needs K >= 1".into()));
        }
        if !n.is_multiple_of(2) || n < 16 * k {
            return Err(FracshError::InvalidParameter(format!(
                "grid needs even N >= 16K, got N = {n}, K = {k}"
            )));
        }
        let len = 2.0 * PI * k as f64;
        let dx = len / n as f64;
        let dxi = 1.0 / k as f64;
        let x = (0..n).map(|i| -0.5 * len + i as f64 * dx).collect();
        let xi = (0..n)
            .map(|i| (i as i64 - (n / 2) as i64) as f64 * dxi)
            .collect();
        Ok(Arc::new(Self {
            k,
            n,
            len,
            dx,
            dxi,
            x,
            xi,
        }))
    }

    pub fn cells(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.len
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn dxi(&self) -> f64 {
        self.dxi
    }

    /// Grid points x_n.
    pub fn x(&self) -> &[f64] {
        &self.x
    }

    /// Frequencies xi_j in ascending order, j from -N/2 to N/2 - 1.
    pub fn xi(&self) -> &[f64] {
        &self.xi
    }

    /// Signed frequency index j for array position `idx`.
    pub fn mode_index(&self, idx: usize) -> i64 {
        idx as i64 - (self.n / 2) as i64
    }

    /// Array position of signed frequency index j, if retained.
    pub fn position_of(&self, j: i64) -> Option<usize> {
        let half = (self.n / 2) as i64;
        if (-half..half).contains(&j) {
            Some((j + half) as usize)
        } else {
            None
        }
    }

    pub fn same_grid(&self, other: &Grid1D) -> bool {
        self.k == other.k && self.n == other.n
    }
}
