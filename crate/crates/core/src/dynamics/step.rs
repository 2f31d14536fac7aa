use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{CouplingWeight, Model, State};

/// Rule for the coupling weight that advances a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum StepWeight {
    /// `Γ = Γ_num / Γ_den`.
    Exact,
    /// `Γ = (Γ_num + 2(P+εQ)) / Γ_den`. Equal to `Exact` on the admissible
    /// set; off it, `P+εQ` decays like `e^{-t}` instead of growing like `e^t`.
    #[default]
    Stabilized,
}

impl StepWeight {
    /// Weight for a state with coupling weight `w` and constraint value
    /// `P + εQ`.
    pub fn weight(self, w: &CouplingWeight, constraint: f64) -> f64 {
        match self {
            StepWeight::Exact => w.value,
            StepWeight::Stabilized => (w.num + 2.0 * constraint) / w.den,
        }
    }
}

impl Model {
    /// Largest time step, scaled by `dt_safety`, for which an Euler step with
    /// any `γ ≤ gamma_bound` keeps every entry nonnegative.
    ///
    /// The update coefficient of `g_n^k` is
    /// `1 + dt(2 - |k - k_n| - δ_k^{k_n} - γκ_n)`; all other coefficients
    /// are nonnegative for any `dt ≥ 0`.
    pub fn stable_dt(&self, gamma_bound: f64) -> f64 {
        let safety = self.params().dt_safety;
        let mut worst: f64 = 0.0;
        for n in self.classes() {
            let kappa = self.weights().kappa(n);
            for k in 1..self.cells() {
                let s = self.grid().speed_cells(n, k);
                let delta = if s == 0 { 1.0 } else { 0.0 };
                worst = worst.max(s.unsigned_abs() as f64 + delta + gamma_bound * kappa - 2.0);
            }
        }
        let cap = safety * self.eps();
        if worst > 0.0 {
            (safety / worst).min(cap)
        } else {
            cap
        }
    }

    /// A-priori bound on Γ at steady states, `5/(2-β)`; `None` for `β ≥ 2`.
    pub fn gamma_a_priori_bound(&self) -> Option<f64> {
        (self.beta() < 2.0).then(|| 5.0 / (2.0 - self.beta()))
    }

    /// One explicit Euler step with the coupling weight of the current state.
    pub fn euler_step(&self, state: &State, dt: f64) -> Result<State> {
        self.euler_step_with(state, dt, StepWeight::default())
    }

    pub fn euler_step_with(&self, state: &State, dt: f64, rule: StepWeight) -> Result<State> {
        state.check_shape(self.n_max(), self.cells())?;
        let sc = self.step_scalars(state);
        let w = CouplingWeight::new(sc.num, sc.den)?;
        let gamma = rule.weight(&w, sc.constraint);
        let mut next = state.clone();
        let mut dg = vec![0.0; next.as_slice().len()];
        self.rhs_into(state, gamma, &mut dg);
        for (g, d) in next.as_mut_slice().iter_mut().zip(&dg) {
            *g += dt * d;
        }
        Ok(next)
    }
}
