use std::path::Path;

use serde::{Deserialize, Serialize};

use super::config::RunConfig;
use crate::diagnostics::{
    classify_singularities, decay_diagnostics, default_window, ode_oracle, verify_steady_identities,
    DecayDiagnostics, IdentityResiduals, Regime, SingularityReport,
};
use crate::dynamics::SteadyStateReport;
use crate::error::Result;

pub const SCHEMA_VERSION: &str = "1";

/// Summary of one run, written as `manifest.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: String,
    pub config: RunConfig,
    pub gamma: f64,
    pub gamma_num: f64,
    pub gamma_den: f64,
    pub residual: f64,
    pub converged: bool,
    pub steps: u64,
    pub time: f64,
    pub drift: Drift,
    pub min_g: f64,
    pub identities: IdentitySummary,
    pub decay: DecaySummary,
    pub singularities: SingularitySummary,
    pub wall_clock_seconds: f64,
    /// Full diagnostics, filled in by `verify`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<FullDiagnostics>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Drift {
    pub area: f64,
    pub constraint: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub mass_identity: f64,
    pub max_x_identity: f64,
    pub max_y_identity: f64,
    pub polyhedral: f64,
    pub area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecaySummary {
    pub slope: Option<f64>,
    pub tau: f64,
    pub window: (usize, usize),
    pub terminal_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularitySummary {
    pub supercritical: usize,
    pub critical: usize,
    pub subcritical: usize,
    pub non_integrable: Vec<usize>,
    /// Largest `|measured/predicted - 1|` over supercritical classes with a
    /// measured ratio.
    pub max_ratio_gap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullDiagnostics {
    pub identities: IdentityResiduals,
    pub decay: Option<DecayDiagnostics>,
    pub singularities: SingularityReport,
    pub ode_oracle: Vec<OracleRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub n: usize,
    pub interval: (f64, f64),
    pub deviation: f64,
}

impl RunManifest {
    pub fn new(config: &RunConfig, report: &SteadyStateReport, wall_clock_seconds: f64) -> Result<Self> {
        let identities = verify_steady_identities(report)?;
        let decay = decay_diagnostics(report, None).ok();
        let singularities = classify_singularities(report)?;
        let window = default_window(report.params.n_max);
        Ok(Self {
            schema_version: SCHEMA_VERSION.to_string(),
            config: config.clone(),
            gamma: report.gamma,
            gamma_num: report.gamma_num,
            gamma_den: report.gamma_den,
            residual: report.residual,
            converged: report.converged,
            steps: report.steps,
            time: report.time,
            drift: Drift {
                area: report.drift_area,
                constraint: report.drift_constraint,
            },
            min_g: report.min_g,
            identities: IdentitySummary {
                mass_identity: identities.mass_identity,
                max_x_identity: identities.max_x(),
                max_y_identity: identities.max_y(),
                polyhedral: identities.polyhedral,
                area: identities.area,
            },
            decay: DecaySummary {
                slope: decay.as_ref().map(|d| d.slope),
                tau: (1.0 + report.params.beta) / report.params.beta,
                window: (*window.start(), *window.end()),
                terminal_residual: decay.as_ref().map(|d| d.terminal_residual),
            },
            singularities: summarize(&singularities),
            wall_clock_seconds,
            diagnostics: None,
        })
    }

    /// Attaches the full diagnostics of `report`.
    pub fn with_diagnostics(mut self, report: &SteadyStateReport) -> Result<Self> {
        let n_max = report.params.n_max;
        let top = n_max as f64 - 6.5;
        let mut windows = vec![(2, (0.5, 3.5)), (10, (0.5, 2.5))];
        if top > 5.5 {
            windows.push((10, (5.5, top)));
        }
        let ode_oracle = windows
            .into_iter()
            .filter(|&(n, _)| n <= n_max)
            .filter_map(|(n, interval)| {
                ode_oracle(report, n, interval)
                    .ok()
                    .map(|deviation| OracleRecord { n, interval, deviation })
            })
            .collect();
        self.diagnostics = Some(FullDiagnostics {
            identities: verify_steady_identities(report)?,
            decay: decay_diagnostics(report, None).ok(),
            singularities: classify_singularities(report)?,
            ode_oracle,
        });
        Ok(self)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

fn summarize(report: &SingularityReport) -> SingularitySummary {
    let count = |r: Regime| report.entries.iter().filter(|e| e.regime == r).count();
    let max_ratio_gap = report
        .entries
        .iter()
        .filter_map(|e| Some((e.measured_ratio? / e.predicted_ratio? - 1.0).abs()))
        .reduce(f64::max);
    SingularitySummary {
        supercritical: count(Regime::Supercritical),
        critical: count(Regime::Critical),
        subcritical: count(Regime::Subcritical),
        non_integrable: report.non_integrable(),
        max_ratio_gap,
    }
}
