use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::dynamics::SteadyStateReport;
use crate::error::{Error, Result};

/// Tail decay of the number moments `X_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayDiagnostics {
    /// `z_n = (n-1)X_{n-1} / (nX_n)` for `n = 3..=N`, index `n - 3`.
    pub z: Vec<f64>,
    /// `τ = (1+β)/β`.
    pub tau: f64,
    /// `(n, z_n - Φ(z_{n+1}) + 1/(Γβn))` for `n = 6..N`.
    pub recursion_residual: Vec<(usize, f64)>,
    /// `|z_N - τ + 1/(ΓβN)|`.
    pub terminal_residual: f64,
    /// Least-squares slope of `ln X_n` against `n` over `window`.
    pub slope: f64,
    pub window: (usize, usize),
    /// Smallest integer larger than `12(1+2β)²`.
    pub nbar: usize,
}

impl DecayDiagnostics {
    pub fn z_at(&self, n: usize) -> f64 {
        self.z[n - 3]
    }

    /// Largest `|r_n|` over classes in `range`.
    pub fn max_recursion_residual(&self, range: RangeInclusive<usize>) -> f64 {
        self.recursion_residual
            .iter()
            .filter(|(n, _)| range.contains(n))
            .fold(0.0, |m, (_, r)| m.max(r.abs()))
    }
}

/// `Φ(z) = 1 + τ - τ/z`; fixed points `1` and `τ`.
pub fn phi(tau: f64, z: f64) -> f64 {
    1.0 + tau - tau / z
}

pub fn nbar(beta: f64) -> usize {
    let bound = 12.0 * (1.0 + 2.0 * beta).powi(2);
    bound.floor() as usize + 1
}

/// `[12, N - 3]`: skips the classes next to the source and the
/// modified last class.
pub fn default_window(n_max: usize) -> RangeInclusive<usize> {
    12..=n_max.saturating_sub(3)
}

pub fn decay_diagnostics(
    report: &SteadyStateReport,
    window: Option<RangeInclusive<usize>>,
) -> Result<DecayDiagnostics> {
    let model = report.model()?;
    let mo = model.moments(&report.profile);
    let window = window.unwrap_or_else(|| default_window(model.n_max()));
    decay_from_moments(&mo.x, report.gamma, model.beta(), window)
}

/// Decay diagnostics from `X_n` (index `n - 2`, `n = 2..=N`).
pub fn decay_from_moments(
    x: &[f64],
    gamma: f64,
    beta: f64,
    window: RangeInclusive<usize>,
) -> Result<DecayDiagnostics> {
    let n_max = x.len() + 1;
    let xn = |n: usize| x[n - 2];
    let tau = (1.0 + beta) / beta;
    let z: Vec<f64> = (3..=n_max)
        .map(|n| ((n - 1) as f64 * xn(n - 1)) / (n as f64 * xn(n)))
        .collect();
    let z_at = |n: usize| z[n - 3];
    let recursion_residual = (6..n_max)
        .map(|n| {
            let r = z_at(n) - phi(tau, z_at(n + 1)) + 1.0 / (gamma * beta * n as f64);
            (n, r)
        })
        .collect();
    let terminal_residual = (z_at(n_max) - tau + 1.0 / (gamma * beta * n_max as f64)).abs();

    let (lo, hi) = (*window.start(), *window.end());
    let points: Vec<(f64, f64)> = (lo.max(2)..=hi.min(n_max))
        .filter(|&n| xn(n) > 0.0)
        .map(|n| (n as f64, xn(n).ln()))
        .collect();
    if points.len() < 2 {
        return Err(Error::EmptyWindow);
    }
    let slope = least_squares_slope(&points);
    Ok(DecayDiagnostics {
        z,
        tau,
        recursion_residual,
        terminal_residual,
        slope,
        window: (lo, hi),
        nbar: nbar(beta),
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}
