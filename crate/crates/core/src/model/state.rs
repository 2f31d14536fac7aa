use crate::error::{Error, Result};

/// Number densities `g_n^k` for classes `n = 2..=N` and interior cells
/// `k = 1..K-1`, stored class-major.
///
/// Ghost values follow the boundary conditions: `g_n^K = 0` for every class
/// and `g_n^0 = 0` for `n ≥ 6`. For `n ≤ 5` the scheme never reads `g_n^0`;
/// [`State::value`] reports it as `g_n^1`, the continuous extension to `ξ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    n_max: usize,
    cells: usize,
    data: Vec<f64>,
}

impl State {
    pub fn zeros(n_max: usize, cells: usize) -> Self {
        Self {
            n_max,
            cells,
            data: vec![0.0; (n_max - 1) * (cells - 1)],
        }
    }

    pub fn from_fn(n_max: usize, cells: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity((n_max - 1) * (cells - 1));
        for n in 2..=n_max {
            for k in 1..cells {
                data.push(f(n, k));
            }
        }
        Self { n_max, cells, data }
    }

    /// Wraps class-major data of length `(N-1)(K-1)`.
    pub fn from_vec(n_max: usize, cells: usize, data: Vec<f64>) -> Result<Self> {
        let expected = (n_max - 1) * (cells - 1);
        if data.len() != expected {
            return Err(Error::ShapeMismatch {
                expected,
                got: data.len(),
            });
        }
        Ok(Self { n_max, cells, data })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    /// Number of interior cells per class, `K - 1`.
    pub fn interior(&self) -> usize {
        self.cells - 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    /// Interior values of class `n`, index `k - 1`.
    pub fn row(&self, n: usize) -> &[f64] {
        let w = self.interior();
        &self.data[(n - 2) * w..(n - 1) * w]
    }

    pub fn row_mut(&mut self, n: usize) -> &mut [f64] {
        let w = self.interior();
        &mut self.data[(n - 2) * w..(n - 1) * w]
    }

    /// Interior entry, `1 ≤ k ≤ K-1`.
    #[inline]
    pub fn get(&self, n: usize, k: usize) -> f64 {
        self.data[(n - 2) * self.interior() + k - 1]
    }

    #[inline]
    pub fn set(&mut self, n: usize, k: usize, v: f64) {
        let w = self.interior();
        self.data[(n - 2) * w + k - 1] = v;
    }

    /// Entry for `0 ≤ k ≤ K` including ghost values.
    pub fn value(&self, n: usize, k: usize) -> f64 {
        if k == self.cells {
            0.0
        } else if k == 0 {
            if n <= 5 {
                self.get(n, 1)
            } else {
                0.0
            }
        } else {
            self.get(n, k)
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            data: self.data.iter().map(|g| g * factor).collect(),
            ..self.clone()
        }
    }

    pub fn min(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, g| m.max(g.abs()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&g| g >= 0.0)
    }

    /// Sup-norm distance to another state of the same shape.
    pub fn sup_distance(&self, other: &State) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub(crate) fn check_shape(&self, n_max: usize, cells: usize) -> Result<()> {
        if self.n_max != n_max || self.cells != cells {
            return Err(Error::ShapeMismatch {
                expected: (n_max - 1) * (cells - 1),
                got: self.data.len(),
            });
        }
        Ok(())
    }
}
