//! Problem data: parameters, grid, state, the collision operator and the
//! moment functionals of a discrete state.

mod coupling;
mod moments;
mod params;
mod state;

pub use coupling::CouplingWeights;
pub use moments::{CouplingWeight, Moments};
pub use params::{Grid, Parameters};
pub use state::State;

use crate::error::Result;

/// A validated problem: parameters together with the derived grid and the
/// diagonal weights of the collision operator.
#[derive(Debug, Clone)]
pub struct Model {
    params: Parameters,
    grid: Grid,
    weights: CouplingWeights,
    /// Per-entry weights `W_n^k` with `Γ_den = Σ_{n,k} W_n^k g_n^k`.
    den_weights: Vec<f64>,
    /// `ε ξ_k`, so that `A = Σ w g`.
    area_weights: Vec<f64>,
    /// `ε(n-6) + ε² sgn(ξ_k+6-n)`, so that `P + εQ = Σ w g`.
    constraint_weights: Vec<f64>,
}

impl Model {
    pub fn new(params: Parameters) -> Result<Self> {
        params.validate()?;
        let grid = Grid::new(&params);
        let weights = CouplingWeights::new(params.beta, params.n_max);
        let den_weights = moments::denominator_weights(&grid, &weights, params.n_max);
        let (area_weights, constraint_weights) = moments::linear_functional_weights(&grid, params.n_max);
        Ok(Self {
            params,
            grid,
            weights,
            den_weights,
            area_weights,
            constraint_weights,
        })
    }

    pub fn params(&self) -> &Parameters {
        &self.params
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn weights(&self) -> &CouplingWeights {
        &self.weights
    }

    pub fn beta(&self) -> f64 {
        self.params.beta
    }

    pub fn n_max(&self) -> usize {
        self.params.n_max
    }

    pub fn cells(&self) -> usize {
        self.params.cells
    }

    pub fn eps(&self) -> f64 {
        self.grid.eps()
    }

    /// Topological classes `2..=N`.
    pub fn classes(&self) -> std::ops::RangeInclusive<usize> {
        2..=self.params.n_max
    }

    pub fn zero_state(&self) -> State {
        State::zeros(self.params.n_max, self.params.cells)
    }

    /// State with entries `f(n, k)` for `n = 2..=N`, `k = 1..K-1`.
    pub fn state_from_fn(&self, f: impl FnMut(usize, usize) -> f64) -> State {
        State::from_fn(self.params.n_max, self.params.cells, f)
    }
}
