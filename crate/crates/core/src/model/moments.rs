use serde::{Deserialize, Serialize};

use super::{CouplingWeights, Grid, Model, State};
use crate::error::{Error, Result};
use crate::sum::{compensated_dots, compensated_sum, Accumulator};

/// Scalar moments of a discrete state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    /// `X_n = ε Σ_k g_n^k`, index `n - 2`.
    pub x: Vec<f64>,
    /// `Y_n = ε Σ_k ξ_k g_n^k`, index `n - 2`.
    pub y: Vec<f64>,
    /// Signed count `ε Σ_n Σ_k sgn(ξ_k + 6 - n) g_n^k`, with `sgn(0) = 0`.
    pub q: f64,
    /// Area `Σ_n Y_n`.
    pub area: f64,
    /// Polyhedral defect `Σ_n (n - 6) X_n`.
    pub polyhedral: f64,
    pub eps: f64,
}

impl Moments {
    pub fn x_at(&self, n: usize) -> f64 {
        self.x[n - 2]
    }

    pub fn y_at(&self, n: usize) -> f64 {
        self.y[n - 2]
    }

    /// `P + εQ`, which vanishes on the admissible set.
    pub fn constraint(&self) -> f64 {
        self.polyhedral + self.eps * self.q
    }

    pub fn total_number(&self) -> f64 {
        compensated_sum(self.x.iter().copied())
    }
}

/// Self-consistent coupling weight `Γ = Γ_num / Γ_den`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingWeight {
    pub num: f64,
    pub den: f64,
    pub value: f64,
}

impl CouplingWeight {
    /// Fails with [`Error::NonpositiveDenominator`] unless `den > 0`.
    pub fn new(num: f64, den: f64) -> Result<Self> {
        if den > 0.0 {
            Ok(Self {
                num,
                den,
                value: num / den,
            })
        } else {
            Err(Error::NonpositiveDenominator { num, den })
        }
    }
}

#[inline]
fn sgn(v: isize) -> f64 {
    match v.cmp(&0) {
        std::cmp::Ordering::Less => -1.0,
        std::cmp::Ordering::Equal => 0.0,
        std::cmp::Ordering::Greater => 1.0,
    }
}

/// Transposes `J` onto the column weights `θ_m^k = ε(6-m) - ε² sgn(ξ_k+6-m)`
/// so that the denominator becomes a single weighted sum over the state.
pub(super) fn denominator_weights(grid: &Grid, w: &CouplingWeights, n_max: usize) -> Vec<f64> {
    let eps = grid.eps();
    let theta = |m: usize, k: usize| eps * (6.0 - m as f64) - eps * eps * sgn(grid.speed_cells(m, k));
    let mut out = Vec::with_capacity((n_max - 1) * (grid.cells() - 1));
    for n in 2..=n_max {
        for k in 1..grid.cells() {
            let mut v = -w.kappa(n) * theta(n, k);
            if n < n_max {
                v += w.from_below(n + 1) * theta(n + 1, k);
            }
            if n > 2 {
                v += w.from_above(n - 1) * theta(n - 1, k);
            }
            out.push(v);
        }
    }
    out
}

pub(super) fn linear_functional_weights(grid: &Grid, n_max: usize) -> (Vec<f64>, Vec<f64>) {
    let eps = grid.eps();
    let mut area = Vec::with_capacity((n_max - 1) * (grid.cells() - 1));
    let mut constraint = Vec::with_capacity(area.capacity());
    for n in 2..=n_max {
        for k in 1..grid.cells() {
            area.push(eps * grid.xi()[k]);
            constraint.push(eps * (n as f64 - 6.0) + eps * eps * sgn(grid.speed_cells(n, k)));
        }
    }
    (area, constraint)
}

/// Scalars needed to advance and monitor one step.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StepScalars {
    pub num: f64,
    pub den: f64,
    pub area: f64,
    pub constraint: f64,
}

impl Model {
    pub(crate) fn step_scalars(&self, state: &State) -> StepScalars {
        let [den, area, constraint] = compensated_dots(
            state.as_slice(),
            [&self.den_weights, &self.area_weights, &self.constraint_weights],
        );
        StepScalars {
            num: self.gamma_numerator(state),
            den,
            area,
            constraint,
        }
    }

    /// Moments and coupling weight in one pass over the state.
    pub fn moments_and_gamma(&self, state: &State) -> (Moments, Result<CouplingWeight>) {
        let eps = self.eps();
        let xi = self.grid().xi();
        let width = self.cells() - 1;
        let mut x = Vec::with_capacity(self.n_max() - 1);
        let mut y = Vec::with_capacity(self.n_max() - 1);
        let mut q = Accumulator::new();
        let mut den = Accumulator::new();
        for n in self.classes() {
            let row = state.row(n);
            let weights = &self.den_weights[(n - 2) * width..(n - 1) * width];
            let kn = self.grid().singular_index(n);
            let mut sx = Accumulator::new();
            let mut sy = Accumulator::new();
            let mut sq = Accumulator::new();
            for (i, (&g, &wd)) in row.iter().zip(weights).enumerate() {
                let k = i + 1;
                sx.add(g);
                sy.add(xi[k] * g);
                sq.add(sgn(k as isize - kn) * g);
                den.add(wd * g);
            }
            x.push(eps * sx.value());
            y.push(eps * sy.value());
            q.add(sq.value());
        }
        let area = compensated_sum(y.iter().copied());
        let polyhedral = compensated_sum(x.iter().enumerate().map(|(i, &xn)| (i as f64 - 4.0) * xn));
        let moments = Moments {
            x,
            y,
            q: eps * q.value(),
            area,
            polyhedral,
            eps,
        };
        let weight = CouplingWeight::new(self.gamma_numerator(state), den.value());
        (moments, weight)
    }

    pub fn moments(&self, state: &State) -> Moments {
        let eps = self.eps();
        let xi = self.grid().xi();
        let mut x = Vec::with_capacity(self.n_max() - 1);
        let mut y = Vec::with_capacity(self.n_max() - 1);
        let mut q = Accumulator::new();
        for n in self.classes() {
            let mut sx = Accumulator::new();
            let mut sy = Accumulator::new();
            for (i, &g) in state.row(n).iter().enumerate() {
                let k = i + 1;
                sx.add(g);
                sy.add(xi[k] * g);
                q.add(sgn(self.grid().speed_cells(n, k)) * g);
            }
            x.push(eps * sx.value());
            y.push(eps * sy.value());
        }
        let area = compensated_sum(y.iter().copied());
        let polyhedral = compensated_sum(
            x.iter()
                .enumerate()
                .map(|(i, &xn)| (i as f64 - 4.0) * xn),
        );
        Moments {
            x,
            y,
            q: eps * q.value(),
            area,
            polyhedral,
            eps,
        }
    }

    /// `Γ_num = Σ_{n=2}^{5} (6-n)(6-n-ε) g_n^1`.
    ///
    /// The outflow of class `n ≤ 5` through `ξ = 0` changes `P` by
    /// `(6-n)² g_n^1` and `εQ` by `-ε(6-n) g_n^1`; with this numerator
    /// `d(P+εQ)/dt = P+εQ + Γ_num - Γ·Γ_den` holds exactly for the scheme.
    pub fn gamma_numerator(&self, state: &State) -> f64 {
        let eps = self.eps();
        compensated_sum((2..=5).map(|n| {
            let d = (6 - n) as f64;
            d * (d - eps) * state.get(n, 1)
        }))
    }

    /// `Γ_den = Σ_n (6-n)(JX)_n - ε² Σ_n Σ_k sgn(ξ_k+6-n) (Jg^k)_n`, using
    /// the `X_n` of `moments`. Direct evaluation; the stepping code uses the
    /// equivalent weighted sum of [`Model::moments_and_gamma`].
    pub fn gamma_denominator(&self, state: &State, moments: &Moments) -> f64 {
        let eps = self.eps();
        let mut first = Accumulator::new();
        for n in self.classes() {
            let jx = self.coupling_component(n, |m| moments.x_at(m));
            first.add((6.0 - n as f64) * jx);
        }
        let mut second = Accumulator::new();
        for n in self.classes() {
            for k in 1..self.cells() {
                let s = sgn(self.grid().speed_cells(n, k));
                if s != 0.0 {
                    second.add(s * self.coupling_component(n, |m| state.get(m, k)));
                }
            }
        }
        first.value() - eps * eps * second.value()
    }

    /// The coupling weight of a state; fails when `Γ_den ≤ 0`.
    pub fn gamma(&self, state: &State) -> Result<CouplingWeight> {
        self.moments_and_gamma(state).1
    }

    /// Coupling weight from the direct formulas, with given moments.
    pub fn gamma_with(&self, state: &State, moments: &Moments) -> Result<CouplingWeight> {
        CouplingWeight::new(self.gamma_numerator(state), self.gamma_denominator(state, moments))
    }
}
