use serde::{Deserialize, Serialize};

use crate::dynamics::SteadyStateReport;
use crate::error::Result;
use crate::sum::compensated_sum;

/// Residuals of the steady-state moment identities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityResiduals {
    /// `|Σ_{n=2}^{5} (6-n) g_n^1 - Σ_n X_n|`.
    pub mass_identity: f64,
    /// `|(6-n) g_n(0) - X_n - Γ(JX)_n|` per class, with `g_n(0) = g_n^1`
    /// for `n ≤ 5` and `0` for `n ≥ 7`.
    pub x_identity: Vec<f64>,
    /// `|(6-n) X_n - Γ(JY)_n|` per class.
    pub y_identity: Vec<f64>,
    /// `|P|`.
    pub polyhedral: f64,
    /// `|A - area_target|`.
    pub area: f64,
}

impl IdentityResiduals {
    pub fn max_x(&self) -> f64 {
        self.x_identity.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_y(&self) -> f64 {
        self.y_identity.iter().copied().fold(0.0, f64::max)
    }
}

pub fn verify_steady_identities(report: &SteadyStateReport) -> Result<IdentityResiduals> {
    let model = report.model()?;
    let g = &report.profile;
    let mo = model.moments(g);
    let gamma = report.gamma;
    let jx = model.apply_coupling(&mo.x)?;
    let jy = model.apply_coupling(&mo.y)?;

    let outflow = compensated_sum((2..=5).map(|n| (6 - n) as f64 * g.get(n, 1)));
    let mass_identity = (outflow - mo.total_number()).abs();

    let mut x_identity = Vec::with_capacity(mo.x.len());
    let mut y_identity = Vec::with_capacity(mo.x.len());
    for n in model.classes() {
        let i = n - 2;
        let boundary = if n <= 5 { (6 - n) as f64 * g.get(n, 1) } else { 0.0 };
        x_identity.push((boundary - mo.x[i] - gamma * jx[i]).abs());
        y_identity.push(((6.0 - n as f64) * mo.x[i] - gamma * jy[i]).abs());
    }
    Ok(IdentityResiduals {
        mass_identity,
        x_identity,
        y_identity,
        polyhedral: mo.polyhedral.abs(),
        area: (mo.area - report.params.area_target).abs(),
    })
}
