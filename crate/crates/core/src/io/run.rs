use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{Command, RunConfig};
use super::manifest::{RunManifest, SCHEMA_VERSION};
use super::tables::{read_profile_csv, write_moments_csv, write_profile_csv};
use crate::diagnostics::epsilon_convergence;
use crate::dynamics::{SolveOptions, SteadyStateReport};
use crate::error::{Error, Result};
use crate::model::{Model, Parameters};

pub const PROFILE_FILE: &str = "profile.csv";
pub const MOMENTS_FILE: &str = "moments.csv";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const SWEEP_FILE: &str = "sweep.csv";
pub const CONVERGENCE_FILE: &str = "convergence.csv";
pub const ERROR_FILE: &str = "error.json";

/// Files written by a successful [`run`].
#[derive(Debug, Clone, Default)]
pub struct RunOutcome {
    pub files: Vec<PathBuf>,
}

/// Machine-readable record of a failed run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub schema_version: String,
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

impl ErrorRecord {
    pub fn new(err: &Error) -> Self {
        let kind = match err {
            Error::InvalidParameters(_) | Error::Parse(_) => "config",
            Error::NonpositiveDenominator { .. } => "nonpositive-denominator",
            Error::NotConverged { .. } => "not-converged",
            _ => "runtime",
        };
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            kind: kind.to_string(),
            message: err.to_string(),
            exit_code: exit_code(err),
        }
    }

    pub fn write(&self, dir: impl AsRef<Path>) -> Result<PathBuf> {
        std::fs::create_dir_all(&dir)?;
        let path = dir.as_ref().join(ERROR_FILE);
        std::fs::write(&path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(path)
    }
}

/// 2 for configuration errors, 3 for `Γ_den ≤ 0`, 4 for no convergence,
/// 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParameters(_) | Error::Parse(_) => 2,
        Error::NonpositiveDenominator { .. } => 3,
        Error::NotConverged { .. } => 4,
        _ => 1,
    }
}

/// Validates `config` and executes its command, writing into `out_dir`.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    std::fs::create_dir_all(&config.out_dir)?;
    match config.command {
        Command::Solve => solve_into(config, &config.out_dir).map(|(_, files)| RunOutcome { files }),
        Command::Sweep => sweep(config),
        Command::Verify => verify(config),
        Command::Converge => converge(config),
    }
}

fn options(config: &RunConfig) -> SolveOptions {
    SolveOptions {
        tol: config.tol,
        max_steps: config.max_steps,
        ..Default::default()
    }
}

/// Solves and writes profile, moments and manifest into `dir`. The files are
/// written even when the run does not converge; the error follows.
fn solve_into(config: &RunConfig, dir: &Path) -> Result<(SteadyStateReport, Vec<PathBuf>)> {
    std::fs::create_dir_all(dir)?;
    let start = Instant::now();
    let model = Model::new(config.params.clone())?;
    let report = model.solve(config.init, &options(config))?;
    let wall = start.elapsed().as_secs_f64();
    log::info!(
        "beta {} gamma {} residual {:e} steps {}",
        config.params.beta,
        report.gamma,
        report.residual,
        report.steps
    );
    let files = write_outputs(config, &model, &report, wall, dir)?;
    let report = report.ensure_converged()?;
    Ok((report, files))
}

fn write_outputs(
    config: &RunConfig,
    model: &Model,
    report: &SteadyStateReport,
    wall: f64,
    dir: &Path,
) -> Result<Vec<PathBuf>> {
    let profile = dir.join(PROFILE_FILE);
    let moments = dir.join(MOMENTS_FILE);
    let manifest = dir.join(MANIFEST_FILE);
    write_profile_csv(model, &report.profile, &profile)?;
    write_moments_csv(model, &report.profile, &moments)?;
    RunManifest::new(config, report, wall)?.write(&manifest)?;
    Ok(vec![profile, moments, manifest])
}

fn sweep(config: &RunConfig) -> Result<RunOutcome> {
    let runs = config
        .beta_list
        .par_iter()
        .map(|&beta| {
            let sub = RunConfig {
                params: Parameters { beta, ..config.params.clone() },
                out_dir: config.out_dir.join(format!("beta_{beta}")),
                ..config.clone()
            };
            let (report, files) = solve_into(&sub, &sub.out_dir)?;
            let sum_x = Model::new(sub.params.clone())?.moments(&report.profile).total_number();
            Ok((beta, report.gamma, sum_x, files))
        })
        .collect::<Result<Vec<_>>>()?;

    let path = config.out_dir.join(SWEEP_FILE);
    let mut out = BufWriter::new(File::create(&path)?);
    writeln!(out, "beta,gamma,sum_x")?;
    for (beta, gamma, sum_x, _) in &runs {
        writeln!(out, "{beta},{gamma:.16e},{sum_x:.16e}")?;
    }
    out.flush()?;
    let mut files: Vec<PathBuf> = runs.into_iter().flat_map(|r| r.3).collect();
    files.push(path);
    Ok(RunOutcome { files })
}

/// Reads `profile.csv` (solving first if absent), recomputes every
/// diagnostic and stores them in the manifest.
fn verify(config: &RunConfig) -> Result<RunOutcome> {
    let dir = &config.out_dir;
    let profile_path = dir.join(PROFILE_FILE);
    let manifest_path = dir.join(MANIFEST_FILE);
    if !profile_path.exists() {
        solve_into(config, dir)?;
    }
    let (manifest, report) = reassess(dir)
        .or_else(|_| -> Result<_> {
            let profile = read_profile_csv(&profile_path)?;
            let model = Model::new(config.params.clone())?;
            let report = model.assess(profile, config.tol)?;
            Ok((RunManifest::new(config, &report, 0.0)?, report))
        })?;
    manifest.with_diagnostics(&report)?.write(&manifest_path)?;
    report.ensure_converged()?;
    Ok(RunOutcome {
        files: vec![manifest_path],
    })
}

/// Rebuilds the report of a finished solve from the files in `dir`, using
/// the parameters and tolerance echoed in its manifest.
pub fn reassess(dir: impl AsRef<Path>) -> Result<(RunManifest, SteadyStateReport)> {
    let dir = dir.as_ref();
    let manifest = RunManifest::read(dir.join(MANIFEST_FILE))?;
    let profile = read_profile_csv(dir.join(PROFILE_FILE))?;
    let model = Model::new(manifest.config.params.clone())?;
    let report = model.assess(profile, manifest.config.tol)?;
    Ok((manifest, report))
}

fn converge(config: &RunConfig) -> Result<RunOutcome> {
    let rows = epsilon_convergence(&config.params, &config.eps_list, config.init, &options(config))?;
    let path = config.out_dir.join(CONVERGENCE_FILE);
    let mut out = BufWriter::new(File::create(&path)?);
    writeln!(out, "eps,cells,gamma,l1_to_finest,residual,steps")?;
    for r in &rows {
        writeln!(
            out,
            "{},{},{:.16e},{:.16e},{:.16e},{}",
            r.eps, r.cells, r.gamma, r.l1_to_finest, r.residual, r.steps
        )?;
    }
    out.flush()?;
    Ok(RunOutcome { files: vec![path] })
}
