use serde::{Deserialize, Serialize};

use crate::dynamics::SteadyStateReport;
use crate::error::{Error, Result};
use crate::model::{Model, State};

/// Behaviour of `g_n` at its singular point `ξ = n - 6`, set by `Γκ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `Γκ_n > 2`: continuous with a finite limit.
    Supercritical,
    /// `Γκ_n = 2`: logarithmic blow-up.
    Critical,
    /// `1 < Γκ_n < 2`: integrable power-law blow-up.
    Subcritical,
    /// `Γκ_n ≤ 1`: not integrable, impossible for a genuine steady state.
    NonIntegrable,
}

impl Regime {
    pub fn classify(gamma_kappa: f64) -> Self {
        const TIE: f64 = 1e-12;
        if (gamma_kappa - 2.0).abs() <= TIE * 2.0 {
            Regime::Critical
        } else if gamma_kappa > 2.0 {
            Regime::Supercritical
        } else if gamma_kappa > 1.0 {
            Regime::Subcritical
        } else {
            Regime::NonIntegrable
        }
    }
}

/// Limit of `g_n^{k_n} / g_n(n-6)` as `ε → 0`, `(Γκ_n-2)/(Γκ_n-1)`.
pub fn predicted_ratio(gamma_kappa: f64) -> f64 {
    (gamma_kappa - 2.0) / (gamma_kappa - 1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityEntry {
    pub n: usize,
    pub gamma_kappa: f64,
    pub regime: Regime,
    /// Discrete value at the singular cell, `g_n^{k_n}`.
    pub singular_value: Option<f64>,
    /// `ĝ_n(n-6)`: mean of the linear extrapolations from both sides.
    pub extrapolated: Option<f64>,
    /// `G_n(n-6) / (Γκ_n - 2)` in the supercritical regime.
    pub predicted_limit: Option<f64>,
    pub measured_ratio: Option<f64>,
    pub predicted_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub gamma: f64,
    pub entries: Vec<SingularityEntry>,
}

impl SingularityReport {
    pub fn entry(&self, n: usize) -> Option<&SingularityEntry> {
        self.entries.iter().find(|e| e.n == n)
    }

    /// Classes flagged as inconsistent with integrability.
    pub fn non_integrable(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.regime == Regime::NonIntegrable)
            .map(|e| e.n)
            .collect()
    }
}

/// Classifies every class `n = 6..=N`; ratio fields are `None` where the
/// extrapolation stencil `k_n ± 2` leaves the interior.
pub fn classify_singularities(report: &SteadyStateReport) -> Result<SingularityReport> {
    let model = report.model()?;
    Ok(classify_profile(&model, &report.profile, report.gamma))
}

pub(crate) fn classify_profile(model: &Model, g: &State, gamma: f64) -> SingularityReport {
    let entries = (6..=model.n_max())
        .map(|n| {
            let gamma_kappa = gamma * model.weights().kappa(n);
            let regime = Regime::classify(gamma_kappa);
            let stencil = singular_stencil(model, g, n).ok();
            let extrapolated = stencil.map(|s| s.extrapolated);
            let predicted_limit = stencil.and_then(|s| {
                (regime == Regime::Supercritical).then(|| gamma * s.incoming / (gamma_kappa - 2.0))
            });
            let supercritical = regime == Regime::Supercritical;
            SingularityEntry {
                n,
                gamma_kappa,
                regime,
                singular_value: stencil.map(|s| s.center),
                extrapolated,
                predicted_limit,
                measured_ratio: stencil.map(|s| s.center / s.extrapolated),
                predicted_ratio: supercritical.then(|| predicted_ratio(gamma_kappa)),
            }
        })
        .collect();
    SingularityReport { gamma, entries }
}

#[derive(Debug, Clone, Copy)]
struct Stencil {
    center: f64,
    extrapolated: f64,
    /// `β(n-1)g_{n-1} + (β+1)(n+1)g_{n+1}` at `ξ = n - 6`.
    incoming: f64,
}

fn singular_stencil(model: &Model, g: &State, n: usize) -> Result<Stencil> {
    let kn = model.grid().singular_index(n);
    if kn < 3 || kn + 2 > model.cells() as isize - 1 {
        return Err(Error::TooCloseToBoundary { n });
    }
    let k = kn as usize;
    let left = 2.0 * g.get(n, k - 1) - g.get(n, k - 2);
    let right = 2.0 * g.get(n, k + 1) - g.get(n, k + 2);
    let w = model.weights();
    let below = if n > 2 { w.from_below(n) * g.get(n - 1, k) } else { 0.0 };
    let above = if n < model.n_max() { w.from_above(n) * g.get(n + 1, k) } else { 0.0 };
    Ok(Stencil {
        center: g.get(n, k),
        extrapolated: 0.5 * (left + right),
        incoming: below + above,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes_by_gamma_kappa() {
        // Γ = 1, β = 1, n = 7: κ_7 = 21.
        assert_eq!(Regime::classify(21.0), Regime::Supercritical);
        assert!((predicted_ratio(21.0) - 19.0 / 20.0).abs() < 1e-15);
        assert_eq!(Regime::classify(2.0), Regime::Critical);
        assert_eq!(Regime::classify(1.5), Regime::Subcritical);
        // Γ = 0.05, n = 6: κ_6 = 18.
        assert_eq!(Regime::classify(0.05 * 18.0), Regime::NonIntegrable);
        assert_eq!(Regime::classify(1.0), Regime::NonIntegrable);
    }

    #[test]
    fn predicted_ratio_in_unit_interval_when_supercritical() {
        for i in 1..1000 {
            let gk = 2.0 + i as f64 * 0.05;
            let r = predicted_ratio(gk);
            assert!(r > 0.0 && r < 1.0);
        }
    }

    #[test]
    fn stencil_near_origin_is_rejected() {
        let model = Model::new(crate::model::Parameters::default()).unwrap();
        let g = model.state_from_fn(|_, _| 1.0);
        assert!(matches!(singular_stencil(&model, &g, 6), Err(Error::TooCloseToBoundary { n: 6 })));
        let s = singular_stencil(&model, &g, 10).unwrap();
        assert_eq!((s.center, s.extrapolated), (1.0, 1.0));
        let report = classify_profile(&model, &g, 0.05);
        let e6 = report.entry(6).unwrap();
        assert_eq!(e6.regime, Regime::NonIntegrable);
        assert!(e6.measured_ratio.is_none());
        assert_eq!(report.non_integrable(), vec![6]);
    }
}
