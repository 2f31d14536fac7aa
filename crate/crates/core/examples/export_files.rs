//! Write profile.csv, moments.csv and manifest.json for a run into the
//! directory given as the first argument, then read the profile back.

use std::path::PathBuf;

use fradkov::io::{self, Command, RunConfig};

fn main() -> fradkov::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("out/example"));
    let mut config = RunConfig::new(Command::Verify);
    config.set("cells", "200")?;
    config.out_dir = out.clone();
    let outcome = io::run(&config)?;
    for f in &outcome.files {
        println!("wrote {}", f.display());
    }
    let (manifest, report) = io::reassess(&out)?;
    println!("Γ from manifest {}  from profile.csv {}", manifest.gamma, report.gamma);
    Ok(())
}
