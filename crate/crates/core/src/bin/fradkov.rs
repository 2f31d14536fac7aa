use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fradkov::io::{exit_code, run, Command, ErrorRecord, RunConfig};

#[derive(Parser)]
#[command(name = "fradkov", version, about = "Self-similar profiles of the Fradkov grain-growth model")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Relax to a steady state and write profile, moments and manifest.
    Solve(Flags),
    /// Solve for every value in --beta-list.
    Sweep(Flags),
    /// Recompute all diagnostics for the profile in --out.
    Verify(Flags),
    /// Compare steady states across --eps-list.
    Converge(Flags),
}

#[derive(Args)]
struct Flags {
    /// Flat `key = value` file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    domain_length: Option<usize>,
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long)]
    area: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    max_steps: Option<u64>,
    /// random, uniform or localized.
    #[arg(long)]
    init: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    dt_safety: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated, for sweep.
    #[arg(long)]
    beta_list: Option<String>,
    /// Comma-separated, for converge.
    #[arg(long)]
    eps_list: Option<String>,
}

impl Flags {
    fn pairs(&self) -> Vec<(&'static str, String)> {
        [
            ("beta", text(&self.beta)),
            ("n-max", text(&self.n_max)),
            ("domain-length", text(&self.domain_length)),
            ("cells", text(&self.cells)),
            ("area", text(&self.area)),
            ("tol", text(&self.tol)),
            ("max-steps", text(&self.max_steps)),
            ("init", self.init.clone()),
            ("seed", text(&self.seed)),
            ("dt-safety", text(&self.dt_safety)),
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("beta-list", self.beta_list.clone()),
            ("eps-list", self.eps_list.clone()),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect()
    }
}

fn text<T: ToString>(v: &Option<T>) -> Option<String> {
    v.as_ref().map(T::to_string)
}

fn build(command: Command, flags: &Flags) -> fradkov::Result<RunConfig> {
    let mut config = RunConfig::new(command);
    if let Some(path) = &flags.config {
        config.apply_file(path)?;
    }
    for (key, value) in flags.pairs() {
        config.set(key, &value)?;
    }
    Ok(config)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let (command, flags) = match &cli.command {
        Cmd::Solve(f) => (Command::Solve, f),
        Cmd::Sweep(f) => (Command::Sweep, f),
        Cmd::Verify(f) => (Command::Verify, f),
        Cmd::Converge(f) => (Command::Converge, f),
    };
    let config = build(command, flags);
    let out_dir = config
        .as_ref()
        .map(|c| c.out_dir.clone())
        .unwrap_or_else(|_| flags.out.clone().unwrap_or_else(|| PathBuf::from("out")));
    match config.and_then(|c| run(&c)) {
        Ok(outcome) => {
            for f in outcome.files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if let Err(e) = ErrorRecord::new(&err).write(&out_dir) {
                eprintln!("could not write error record: {e}");
            }
            ExitCode::from(exit_code(&err) as u8)
        }
    }
}
