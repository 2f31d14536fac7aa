use super::Model;
use crate::error::{Error, Result};

/// Diagonal weights `κ_n` of the collision matrix and the tail ratio `τ`.
#[derive(Debug, Clone)]
pub struct CouplingWeights {
    beta: f64,
    n_max: usize,
    kappa: Vec<f64>,
}

impl CouplingWeights {
    pub fn new(beta: f64, n_max: usize) -> Self {
        let kappa = (2..=n_max)
            .map(|n| {
                if n == 2 {
                    2.0 * beta
                } else if n == n_max {
                    (beta + 1.0) * n as f64
                } else {
                    (2.0 * beta + 1.0) * n as f64
                }
            })
            .collect();
        Self { beta, n_max, kappa }
    }

    /// `κ_n`, the modulus of the n-th diagonal entry of `J`.
    #[inline]
    pub fn kappa(&self, n: usize) -> f64 {
        self.kappa[n - 2]
    }

    pub fn kappas(&self) -> &[f64] {
        &self.kappa
    }

    pub fn kappa_max(&self) -> f64 {
        self.kappa.iter().copied().fold(0.0, f64::max)
    }

    /// `τ = (1+β)/β`.
    pub fn tau(&self) -> f64 {
        (1.0 + self.beta) / self.beta
    }

    /// Rate `β(n-1)` at which class `n` is fed from class `n-1`.
    #[inline]
    pub fn from_below(&self, n: usize) -> f64 {
        if n == 2 {
            0.0
        } else {
            self.beta * (n - 1) as f64
        }
    }

    /// Rate `(β+1)(n+1)` at which class `n` is fed from class `n+1`.
    #[inline]
    pub fn from_above(&self, n: usize) -> f64 {
        if n == self.n_max {
            0.0
        } else {
            (self.beta + 1.0) * (n + 1) as f64
        }
    }
}

impl Model {
    /// Collision operator `(Jf)_n` for a vector indexed by `n = 2..=N`.
    pub fn apply_coupling(&self, f: &[f64]) -> Result<Vec<f64>> {
        let len = self.n_max() - 1;
        if f.len() != len {
            return Err(Error::ShapeMismatch {
                expected: len,
                got: f.len(),
            });
        }
        Ok((2..=self.n_max())
            .map(|n| self.coupling_component(n, |m| f[m - 2]))
            .collect())
    }

    /// `(Jf)_n` with `f` given as a lookup over classes. Entries outside
    /// `2..=N` are never requested.
    #[inline]
    pub(crate) fn coupling_component(&self, n: usize, f: impl Fn(usize) -> f64) -> f64 {
        let w = &self.weights;
        let mut out = -w.kappa(n) * f(n);
        if n > 2 {
            out += w.from_below(n) * f(n - 1);
        }
        if n < self.n_max() {
            out += w.from_above(n) * f(n + 1);
        }
        out
    }
}
