use crate::error::Result;
use crate::model::{Model, State};

/// Time derivative of every `g_n^k` for a frozen coupling weight.
#[derive(Debug, Clone)]
pub struct RhsEvaluation {
    pub dg: State,
    pub gamma_used: f64,
}

impl Model {
    /// Right-hand side of the semi-discrete system
    ///
    /// `dg_n^k/dt = 2g + (ξ_k+6-n)_+ ∇⁺g - (ξ_k+6-n)_- ∇⁻g - δ_k^{k_n} g + γ (Jg^k)_n`
    ///
    /// with ghost values from the boundary conditions. Linear in the state
    /// for fixed `gamma`.
    pub fn rhs(&self, state: &State, gamma: f64) -> Result<RhsEvaluation> {
        state.check_shape(self.n_max(), self.cells())?;
        let mut dg = self.zero_state();
        self.rhs_into(state, gamma, dg.as_mut_slice());
        Ok(RhsEvaluation {
            dg,
            gamma_used: gamma,
        })
    }

    pub(crate) fn rhs_into(&self, state: &State, gamma: f64, out: &mut [f64]) {
        let width = self.cells() - 1;
        let n_max = self.n_max();
        let w = self.weights();
        let zeros = vec![0.0; width];
        for n in self.classes() {
            let row = state.row(n);
            let below = if n > 2 { state.row(n - 1) } else { &zeros[..] };
            let above = if n < n_max { state.row(n + 1) } else { &zeros[..] };
            let diag = 2.0 - gamma * w.kappa(n);
            let gain_below = gamma * w.from_below(n);
            let gain_above = gamma * w.from_above(n);
            let out_row = &mut out[(n - 2) * width..(n - 1) * width];
            for i in 0..width {
                out_row[i] = diag * row[i] + gain_below * below[i] + gain_above * above[i];
            }

            // Transport: index i holds k = i + 1 and the speed is k - k_n.
            // Below k_n the scheme differences backwards, above it forwards.
            let kn = self.grid().singular_index(n);
            let split = kn.clamp(0, width as isize + 1) as usize;
            for i in 0..split.saturating_sub(1).min(width) {
                let prev = if i > 0 { row[i - 1] } else { 0.0 };
                let speed = (i + 1) as f64 - kn as f64;
                out_row[i] += speed * (row[i] - prev);
            }
            if (1..=width as isize).contains(&kn) {
                out_row[kn as usize - 1] -= row[kn as usize - 1];
            }
            for i in split.min(width)..width {
                let next = if i + 1 < width { row[i + 1] } else { 0.0 };
                let speed = (i + 1) as f64 - kn as f64;
                out_row[i] += speed * (next - row[i]);
            }
        }
    }
}
