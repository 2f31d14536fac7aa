use serde::{Deserialize, Serialize};

use super::{InitKind, StepWeight};
use crate::error::{Error, Result};
use crate::model::{CouplingWeight, Model, Parameters, State};

/// Controls for [`Model::integrate_to_steady`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Stop once `‖rhs‖_∞ / ‖g‖_∞ ≤ tol`.
    pub tol: f64,
    pub max_steps: u64,
    /// Record a history sample every this many steps; 0 disables history.
    pub sample_every: u64,
    /// Steps between refreshes of the Γ bound that sets the time step.
    pub gamma_refresh: u64,
    pub step_weight: StepWeight,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_steps: 10_000_000,
            sample_every: 0,
            gamma_refresh: 1000,
            step_weight: StepWeight::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistorySample {
    pub step: u64,
    pub time: f64,
    pub residual: f64,
    pub gamma: f64,
    pub area: f64,
    pub constraint: f64,
}

/// Outcome of a relaxation run.
#[derive(Debug, Clone)]
pub struct SteadyStateReport {
    pub params: Parameters,
    pub profile: State,
    /// `Γ_num / Γ_den` of the final profile.
    pub gamma: f64,
    pub gamma_num: f64,
    pub gamma_den: f64,
    pub residual: f64,
    pub tol: f64,
    pub converged: bool,
    pub steps: u64,
    pub time: f64,
    /// Largest `|A - area_target|` seen during the run.
    pub drift_area: f64,
    /// Largest `|P + εQ|` seen during the run.
    pub drift_constraint: f64,
    /// Smallest entry seen during the run.
    pub min_g: f64,
    pub history: Vec<HistorySample>,
}

impl SteadyStateReport {
    /// Turns a non-converged report into [`Error::NotConverged`].
    pub fn ensure_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                steps: self.steps,
                residual: self.residual,
                tol: self.tol,
            })
        }
    }

    pub fn model(&self) -> Result<Model> {
        Model::new(self.params.clone())
    }
}

impl Model {
    /// Scale-free steady-state residual `‖rhs‖_∞ / max(‖g‖_∞, 1e-30)`,
    /// with the coupling weight of the state itself.
    pub fn residual(&self, state: &State) -> Result<f64> {
        let sc = self.step_scalars(state);
        let w = CouplingWeight::new(sc.num, sc.den)?;
        let gamma = StepWeight::default().weight(&w, sc.constraint);
        let r = self.rhs(state, gamma)?;
        Ok(r.dg.max_abs() / state.max_abs().max(1e-30))
    }

    /// Projected initial data of `kind` relaxed to a steady state.
    pub fn solve(&self, kind: InitKind, opts: &SolveOptions) -> Result<SteadyStateReport> {
        let init = self.initial_state(kind)?;
        self.integrate_to_steady(init, opts)
    }

    /// Report for `profile` as it stands, without time steps; used for
    /// profiles read back from disk.
    pub fn assess(&self, profile: State, tol: f64) -> Result<SteadyStateReport> {
        let opts = SolveOptions {
            tol,
            max_steps: 0,
            ..Default::default()
        };
        self.integrate_to_steady(profile, &opts)
    }

    /// Explicit Euler relaxation until the residual drops below `opts.tol`
    /// or `opts.max_steps` is reached; the latter yields a report with
    /// `converged == false`.
    pub fn integrate_to_steady(&self, init: State, opts: &SolveOptions) -> Result<SteadyStateReport> {
        init.check_shape(self.n_max(), self.cells())?;
        if opts.tol.is_nan() || opts.tol <= 0.0 {
            return Err(Error::InvalidParameters(format!("tolerance {} must be positive", opts.tol)));
        }
        let target = self.params().area_target;
        let mut state = init;
        let mut dg = vec![0.0; state.as_slice().len()];
        let mut bound = f64::NAN;
        let mut dt = f64::NAN;
        let mut steps = 0u64;
        let mut time = 0.0;
        let mut drift_area: f64 = 0.0;
        let mut drift_constraint: f64 = 0.0;
        let mut min_g = state.min();
        let mut history = Vec::new();

        loop {
            let sc = self.step_scalars(&state);
            let w = CouplingWeight::new(sc.num, sc.den)?;
            let gamma = opts.step_weight.weight(&w, sc.constraint);
            let refresh = steps.is_multiple_of(opts.gamma_refresh.max(1));
            if bound.is_nan() {
                bound = self
                    .gamma_a_priori_bound()
                    .unwrap_or(2.0 * gamma)
                    .max(2.0 * gamma);
                dt = self.stable_dt(bound);
            } else if gamma > bound || refresh {
                bound = 2.0 * gamma;
                dt = self.stable_dt(bound);
            }

            drift_area = drift_area.max((sc.area - target).abs());
            drift_constraint = drift_constraint.max(sc.constraint.abs());

            self.rhs_into(&state, gamma, &mut dg);
            let residual = max_abs(&dg) / max_abs(state.as_slice()).max(1e-30);
            if opts.sample_every > 0 && steps.is_multiple_of(opts.sample_every) {
                history.push(HistorySample {
                    step: steps,
                    time,
                    residual,
                    gamma: w.value,
                    area: sc.area,
                    constraint: sc.constraint,
                });
            }

            let converged = residual <= opts.tol;
            if converged || steps >= opts.max_steps {
                if !converged {
                    log::warn!("no steady state after {steps} steps, residual {residual:e}");
                }
                return Ok(SteadyStateReport {
                    params: self.params().clone(),
                    profile: state,
                    gamma: w.value,
                    gamma_num: w.num,
                    gamma_den: w.den,
                    residual,
                    tol: opts.tol,
                    converged,
                    steps,
                    time,
                    drift_area,
                    drift_constraint,
                    min_g,
                    history,
                });
            }

            for (g, d) in state.as_mut_slice().iter_mut().zip(&dg) {
                *g += dt * d;
            }
            min_g = min_g.min(min(state.as_slice()));
            steps += 1;
            time += dt;
        }
    }
}

fn max_abs(v: &[f64]) -> f64 {
    let mut lanes = [0.0f64; 4];
    let mut chunks = v.chunks_exact(4);
    for c in &mut chunks {
        for l in 0..4 {
            lanes[l] = lanes[l].max(c[l].abs());
        }
    }
    let tail = chunks.remainder().iter().fold(0.0f64, |m, x| m.max(x.abs()));
    lanes.iter().fold(tail, |m, &x| m.max(x))
}

fn min(v: &[f64]) -> f64 {
    let mut lanes = [f64::INFINITY; 4];
    let mut chunks = v.chunks_exact(4);
    for c in &mut chunks {
        for l in 0..4 {
            lanes[l] = lanes[l].min(c[l]);
        }
    }
    let tail = chunks.remainder().iter().fold(f64::INFINITY, |m, &x| m.min(x));
    lanes.iter().fold(tail, |m, &x| m.min(x))
}
