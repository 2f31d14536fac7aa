use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dynamics::InitKind;
use crate::error::{Error, Result};
use crate::model::Parameters;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    #[default]
    Solve,
    Sweep,
    Verify,
    Converge,
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "solve" => Ok(Self::Solve),
            "sweep" => Ok(Self::Sweep),
            "verify" => Ok(Self::Verify),
            "converge" => Ok(Self::Converge),
            other => Err(Error::InvalidParameters(format!("unknown command '{other}'"))),
        }
    }
}

/// Everything a run needs. Built from defaults, then a flat `key = value`
/// file, then command-line flags, each overriding the previous.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub params: Parameters,
    pub init: InitKind,
    pub tol: f64,
    pub max_steps: u64,
    pub beta_list: Vec<f64>,
    pub eps_list: Vec<f64>,
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Solve,
            params: Parameters::default(),
            init: InitKind::Random,
            tol: 1e-9,
            max_steps: 10_000_000,
            beta_list: vec![0.2, 0.5, 1.0, 1.5, 2.0, 2.5],
            eps_list: vec![0.2, 0.1, 0.05],
            out_dir: PathBuf::from("out"),
        }
    }
}

/// Keys accepted by [`RunConfig::set`], spelled as the long flags.
pub const KEYS: &[&str] = &[
    "beta",
    "n-max",
    "domain-length",
    "cells",
    "area",
    "tol",
    "max-steps",
    "init",
    "seed",
    "dt-safety",
    "out",
    "beta-list",
    "eps-list",
];

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            ..Default::default()
        }
    }

    /// Sets one field from its textual form; `_` and `-` are interchangeable
    /// in keys.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        let key = key.trim().replace('_', "-");
        let p = &mut self.params;
        match key.as_str() {
            "beta" => p.beta = parse(&key, value)?,
            "n-max" => p.n_max = parse(&key, value)?,
            "domain-length" => p.domain_length = parse(&key, value)?,
            "cells" => p.cells = parse(&key, value)?,
            "area" => p.area_target = parse(&key, value)?,
            "seed" => p.seed = parse(&key, value)?,
            "dt-safety" => p.dt_safety = parse(&key, value)?,
            "tol" => self.tol = parse(&key, value)?,
            "max-steps" => self.max_steps = parse(&key, value)?,
            "init" => self.init = value.parse()?,
            "out" => self.out_dir = PathBuf::from(value),
            "beta-list" => self.beta_list = parse_list(&key, value)?,
            "eps-list" => self.eps_list = parse_list(&key, value)?,
            _ => return Err(Error::InvalidParameters(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// Applies a flat key/value text: one `key = value` per line, `#` starts
    /// a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", i + 1)))?;
            self.set(key, value)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: impl AsRef<Path>) -> Result<()> {
        self.apply_text(&std::fs::read_to_string(path)?)
    }

    /// Checks parameters, tolerance and the lists the command needs.
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidParameters(format!("tolerance {} must be positive", self.tol)));
        }
        match self.command {
            Command::Sweep => {
                if self.beta_list.is_empty() {
                    return Err(Error::InvalidParameters("empty beta list".into()));
                }
                for &beta in &self.beta_list {
                    Parameters { beta, ..self.params.clone() }.validate()?;
                }
            }
            Command::Converge => {
                if self.eps_list.is_empty() {
                    return Err(Error::InvalidParameters("empty eps list".into()));
                }
                for &eps in &self.eps_list {
                    self.params.with_eps(eps)?.validate()?;
                }
            }
            Command::Solve | Command::Verify => {}
        }
        Ok(())
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::InvalidParameters(format!("bad value '{value}' for {key}")))
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(key, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_then_override() {
        let mut c = RunConfig::new(Command::Sweep);
        c.apply_text("# run\nbeta = 0.5\nn_max=12 # short\nbeta-list = 0.5, 1.0\ninit = uniform\n")
            .unwrap();
        c.set("beta", "1.5").unwrap();
        assert_eq!(c.params.beta, 1.5);
        assert_eq!(c.params.n_max, 12);
        assert_eq!(c.beta_list, vec![0.5, 1.0]);
        assert_eq!(c.init, InitKind::Uniform);
        c.validate().unwrap();
    }

    #[test]
    fn every_key_is_accepted() {
        let mut c = RunConfig::default();
        for key in KEYS {
            let value = match *key {
                "init" => "localized",
                "out" => "elsewhere",
                "beta-list" | "eps-list" => "0.1",
                "n-max" | "domain-length" | "cells" | "seed" | "max-steps" => "10",
                _ => "0.5",
            };
            c.set(key, value).unwrap();
        }
    }

    #[test]
    fn bad_input_is_a_config_error() {
        let mut c = RunConfig::default();
        assert!(c.set("colour", "red").is_err());
        assert!(c.set("beta", "abc").is_err());
        assert!(c.apply_text("beta 1").is_err());
        c.set("cells", "401").unwrap();
        assert!(matches!(c.validate(), Err(Error::InvalidParameters(_))));
        let mut c = RunConfig::new(Command::Converge);
        c.eps_list = vec![0.3];
        assert!(c.validate().is_err());
    }
}
