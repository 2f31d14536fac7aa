use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{InitKind, SolveOptions, SteadyStateReport};
use crate::error::{Error, Result};
use crate::model::{Model, Parameters, State};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsilonRow {
    pub eps: f64,
    pub cells: usize,
    pub gamma: f64,
    /// `ε_c Σ_{n,k} |R g - R g_finest|` on the coarsest grid.
    pub l1_to_finest: f64,
    pub residual: f64,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NRow {
    pub n_max: usize,
    pub gamma: f64,
    /// `|Γ(N) - Γ(N_largest)|`.
    pub gamma_to_largest: f64,
    pub sum_x: f64,
    pub residual: f64,
    pub steps: u64,
}

/// Solves at each `ε` and compares every profile to the finest one after
/// restriction to the coarsest grid. Rows are sorted by increasing `ε`.
pub fn epsilon_convergence(
    params: &Parameters,
    eps_list: &[f64],
    init: InitKind,
    opts: &SolveOptions,
) -> Result<Vec<EpsilonRow>> {
    if eps_list.is_empty() {
        return Err(Error::InvalidParameters("empty eps list".into()));
    }
    let mut runs = eps_list
        .par_iter()
        .map(|&eps| solve_at(params.with_eps(eps)?, init, opts))
        .collect::<Result<Vec<_>>>()?;
    runs.sort_by_key(|r| std::cmp::Reverse(r.params.cells));

    let coarse = runs.iter().map(|r| r.params.cells).min().unwrap_or(0);
    for r in &runs {
        if r.params.cells % coarse != 0 {
            return Err(Error::InvalidParameters(format!(
                "K = {} is not a multiple of the coarsest K = {coarse}",
                r.params.cells
            )));
        }
    }
    let eps_c = params.domain_length as f64 / coarse as f64;
    let reference = restrict(&runs[0].profile, coarse);
    Ok(runs
        .iter()
        .map(|r| {
            let rg = restrict(&r.profile, coarse);
            let l1: f64 = rg.iter().zip(&reference).map(|(x, y)| (x - y).abs()).sum();
            EpsilonRow {
                eps: r.params.eps(),
                cells: r.params.cells,
                gamma: r.gamma,
                l1_to_finest: eps_c * l1,
                residual: r.residual,
                steps: r.steps,
            }
        })
        .collect())
}

/// Solves at each `N` with the other parameters fixed. Rows are sorted by
/// increasing `N`.
pub fn n_convergence(
    params: &Parameters,
    n_list: &[usize],
    init: InitKind,
    opts: &SolveOptions,
) -> Result<Vec<NRow>> {
    let mut runs = n_list
        .par_iter()
        .map(|&n_max| solve_at(Parameters { n_max, ..params.clone() }, init, opts))
        .collect::<Result<Vec<_>>>()?;
    runs.sort_by_key(|r| r.params.n_max);
    let Some(largest) = runs.last().map(|r| r.gamma) else {
        return Err(Error::InvalidParameters("empty N list".into()));
    };
    runs.iter()
        .map(|r| {
            let m = r.model()?.moments(&r.profile);
            Ok(NRow {
                n_max: r.params.n_max,
                gamma: r.gamma,
                gamma_to_largest: (r.gamma - largest).abs(),
                sum_x: m.total_number(),
                residual: r.residual,
                steps: r.steps,
            })
        })
        .collect()
}

fn solve_at(params: Parameters, init: InitKind, opts: &SolveOptions) -> Result<SteadyStateReport> {
    Model::new(params)?.solve(init, opts)?.ensure_converged()
}

/// Averages `g` onto the interior nodes of a grid with `coarse` cells. Each
/// coarse node takes the mean over the fine nodes within half a coarse cell,
/// shared end nodes counting half.
pub(crate) fn restrict(g: &State, coarse: usize) -> Vec<f64> {
    let r = g.cells() / coarse;
    let mut out = Vec::with_capacity((g.n_max() - 1) * (coarse - 1));
    for n in 2..=g.n_max() {
        for kc in 1..coarse {
            let c = kc * r;
            let v = if r == 1 {
                g.value(n, c)
            } else if r.is_multiple_of(2) {
                let h = r / 2;
                let inner: f64 = (c + 1 - h..c + h).map(|k| g.value(n, k)).sum();
                (inner + 0.5 * (g.value(n, c - h) + g.value(n, c + h))) / r as f64
            } else {
                let h = r / 2;
                (c - h..=c + h).map(|k| g.value(n, k)).sum::<f64>() / r as f64
            };
            out.push(v);
        }
    }
    out
}
