//! Exponential tail of X_n: fitted slope against -ln τ and the backward
//! recursion for z_n.

use fradkov::diagnostics::{decay_diagnostics, nbar, phi};
use fradkov::{InitKind, Model, Parameters, SolveOptions};

fn main() -> fradkov::Result<()> {
    let beta = 1.0;
    let model = Model::new(Parameters { beta, ..Default::default() }.with_eps(0.1)?)?;
    let report = model.solve(InitKind::Random, &SolveOptions::default())?.ensure_converged()?;
    let d = decay_diagnostics(&report, None)?;
    println!("window {:?}: slope {:.5}, -ln τ = {:.5}", d.window, d.slope, -d.tau.ln());
    println!("N̄ = {}  Φ(1) = {}  Φ(τ) = {}", nbar(beta), phi(d.tau, 1.0), phi(d.tau, d.tau));
    println!("  n        z_n    residual");
    for &(n, r) in &d.recursion_residual {
        println!("{n:>3} {:>10.6} {r:>11.2e}", d.z_at(n));
    }
    println!("terminal residual {:.2e}", d.terminal_residual);
    Ok(())
}
