use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Full problem definition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    /// Ratio of switching to vanishing events.
    pub beta: f64,
    /// Maximal topological class `N`.
    pub n_max: usize,
    /// Domain length `L` in rescaled area.
    pub domain_length: usize,
    /// Number of grid cells `K`; must be a multiple of `L`.
    pub cells: usize,
    /// Prescribed total area.
    pub area_target: f64,
    /// Safety factor applied to the positivity-preserving time step.
    pub dt_safety: f64,
    pub seed: u64,
}

impl Default for Parameters {
    fn default() -> Self {
        Self {
            beta: 1.0,
            n_max: 25,
            domain_length: 20,
            cells: 400,
            area_target: 1.0,
            dt_safety: 0.9,
            seed: 1,
        }
    }
}

impl Parameters {
    /// Grid spacing `ε = L / K`.
    pub fn eps(&self) -> f64 {
        self.domain_length as f64 / self.cells as f64
    }

    /// Copy with `K` chosen so that `L / K = eps`.
    pub fn with_eps(&self, eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::InvalidParameters(format!("grid spacing {eps} must be positive")));
        }
        let exact = self.domain_length as f64 / eps;
        let cells = exact.round();
        if (cells - exact).abs() > 1e-9 * exact.max(1.0) || cells < 1.0 {
            return Err(Error::InvalidParameters(format!(
                "grid spacing {eps} does not divide the domain length {}",
                self.domain_length
            )));
        }
        Ok(Self {
            cells: cells as usize,
            ..self.clone()
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return bad(format!("beta = {} must be positive", self.beta));
        }
        if self.n_max < 7 {
            return bad(format!("maximal class N = {} must be at least 7", self.n_max));
        }
        if self.domain_length + 6 <= self.n_max {
            return bad(format!(
                "domain length L = {} must exceed N - 6 = {}",
                self.domain_length,
                self.n_max - 6
            ));
        }
        if self.cells == 0 || !self.cells.is_multiple_of(self.domain_length) {
            return bad(format!(
                "cell count K = {} must be a positive multiple of L = {}",
                self.cells, self.domain_length
            ));
        }
        if !(self.area_target > 0.0 && self.area_target.is_finite()) {
            return bad(format!("area target {} must be positive", self.area_target));
        }
        if !(self.dt_safety > 0.0 && self.dt_safety < 1.0) {
            return bad(format!("dt safety factor {} must lie in (0, 1)", self.dt_safety));
        }
        if self.beta >= 2.0 {
            log::warn!(
                "beta = {} >= 2: positivity of the coupling denominator is not guaranteed",
                self.beta
            );
        }
        Ok(())
    }
}

/// Uniform grid `ξ_k = kε`, `k = 0..=K`.
#[derive(Debug, Clone)]
pub struct Grid {
    eps: f64,
    cells: usize,
    cells_per_unit: usize,
    xi: Vec<f64>,
}

impl Grid {
    pub(crate) fn new(params: &Parameters) -> Self {
        let eps = params.eps();
        let xi = (0..=params.cells).map(|k| k as f64 * eps).collect();
        Self {
            eps,
            cells: params.cells,
            cells_per_unit: params.cells / params.domain_length,
            xi,
        }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    /// Nodes `ξ_0, …, ξ_K`.
    pub fn xi(&self) -> &[f64] {
        &self.xi
    }

    /// Index `k_n = (n-6)K/L` of the singular point `ξ = n - 6`.
    /// Negative for `n ≤ 5`.
    pub fn singular_index(&self, n: usize) -> isize {
        (n as isize - 6) * self.cells_per_unit as isize
    }

    /// Transport speed `(ξ_k + 6 - n)/ε = k - k_n`, exact in integers.
    #[inline]
    pub fn speed_cells(&self, n: usize, k: usize) -> isize {
        k as isize - self.singular_index(n)
    }
}
