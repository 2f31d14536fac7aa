use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Model, State};
use crate::sum::Accumulator;

const MAX_RESAMPLES: usize = 10;

/// Shape of the raw data that is projected onto the admissible set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum InitKind {
    /// I.i.d. uniform entries on `[0, 1]` from the seeded generator.
    #[default]
    Random,
    /// All entries equal.
    Uniform,
    /// Indicator of `ξ ≤ 2` in every class.
    Localized,
}

impl std::str::FromStr for InitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Self::Random),
            "uniform" => Ok(Self::Uniform),
            "localized" => Ok(Self::Localized),
            other => Err(Error::InvalidParameters(format!("unknown init kind '{other}'"))),
        }
    }
}

impl std::fmt::Display for InitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Random => "random",
            Self::Uniform => "uniform",
            Self::Localized => "localized",
        })
    }
}

impl Model {
    /// Admissible initial state of the given kind, seeded from the
    /// parameters. Random data are resampled when the projection fails.
    pub fn initial_state(&self, kind: InitKind) -> Result<State> {
        match kind {
            InitKind::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.params().seed);
                let mut last = Error::SingularProjection;
                for _ in 0..MAX_RESAMPLES {
                    let raw = self.state_from_fn(|_, _| rng.gen_range(0.0..=1.0));
                    match self.project_initial(&raw) {
                        Ok(s) => return Ok(s),
                        Err(e) => last = e,
                    }
                }
                Err(last)
            }
            InitKind::Uniform => self.project_initial(&self.state_from_fn(|_, _| 1.0)),
            InitKind::Localized => {
                let xi = self.grid().xi();
                self.project_initial(&self.state_from_fn(|_, k| if xi[k] <= 2.0 { 1.0 } else { 0.0 }))
            }
        }
    }

    /// Rescales the block `n ≤ 5` by `α₁` and the block `n ≥ 6` by `α₂` so
    /// that `P + εQ = 0` and `A` equals the area target.
    pub fn project_initial(&self, raw: &State) -> Result<State> {
        self.project_initial_factors(raw).map(|(s, _)| s)
    }

    /// As [`Model::project_initial`], also returning `(α₁, α₂)`.
    pub fn project_initial_factors(&self, raw: &State) -> Result<(State, [f64; 2])> {
        raw.check_shape(self.n_max(), self.cells())?;
        if !raw.as_slice().iter().all(|g| *g >= 0.0 && g.is_finite()) {
            return Err(Error::InvalidParameters(
                "initial data must be finite and nonnegative".into(),
            ));
        }
        let eps = self.eps();
        let xi = self.grid().xi();
        // constraint (P + εQ) and area contributions of each block
        let mut constraint = [Accumulator::new(), Accumulator::new()];
        let mut area = [Accumulator::new(), Accumulator::new()];
        for n in self.classes() {
            let block = usize::from(n >= 6);
            let shift = n as f64 - 6.0;
            for (i, &g) in raw.row(n).iter().enumerate() {
                let k = i + 1;
                let s = self.grid().speed_cells(n, k).signum() as f64;
                constraint[block].add((shift + eps * s) * g);
                area[block].add(xi[k] * g);
            }
        }
        let (f1, f2) = (eps * constraint[0].value(), eps * constraint[1].value());
        let (a1, a2) = (eps * area[0].value(), eps * area[1].value());
        let target = self.params().area_target;
        let det = f1 * a2 - f2 * a1;
        let scale = (f1 * a2).abs() + (f2 * a1).abs();
        if !(det.is_finite() && scale > 0.0 && det.abs() > 1e-14 * scale) {
            return Err(Error::SingularProjection);
        }
        let alpha1 = -f2 * target / det;
        let alpha2 = f1 * target / det;
        if !(alpha1 > 0.0 && alpha2 > 0.0) {
            return Err(Error::SingularProjection);
        }
        let mut out = raw.clone();
        for n in self.classes() {
            let alpha = if n <= 5 { alpha1 } else { alpha2 };
            out.row_mut(n).iter_mut().for_each(|g| *g *= alpha);
        }
        Ok((out, [alpha1, alpha2]))
    }
}
