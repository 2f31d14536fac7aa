//! File formats and the command driver behind the `fradkov` binary.
//!
//! A `solve` writes `profile.csv` (`n,k,xi,g`, ghost nodes included),
//! `moments.csv` (`n,X,Y,lnX`) and `manifest.json` (schema version `"1"`).
//! `sweep` adds one subdirectory per `β` and `sweep.csv`; `converge`
//! writes `convergence.csv`; `verify` adds full diagnostics to the manifest.

mod config;
mod manifest;
mod run;
mod tables;

pub use config::{Command, RunConfig, KEYS};
pub use manifest::{
    DecaySummary, Drift, FullDiagnostics, IdentitySummary, OracleRecord, RunManifest, SingularitySummary,
    SCHEMA_VERSION,
};
pub use run::{
    exit_code, reassess, run, ErrorRecord, RunOutcome, CONVERGENCE_FILE, ERROR_FILE, MANIFEST_FILE, MOMENTS_FILE,
    PROFILE_FILE, SWEEP_FILE,
};
pub use tables::{read_profile_csv, write_moments_csv, write_profile_csv};
