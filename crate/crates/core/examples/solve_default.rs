//! Relax random data to the steady state for the default parameters
//! (β = 1, N = 25, L = 20, ε = 0.05, A = 1) and print the moments.

use fradkov::{InitKind, Model, Parameters, SolveOptions};

fn main() -> fradkov::Result<()> {
    let model = Model::new(Parameters::default())?;
    let report = model.solve(InitKind::Random, &SolveOptions::default())?.ensure_converged()?;
    println!(
        "Γ = {:.10}  residual = {:.2e}  steps = {}  t = {:.2}",
        report.gamma, report.residual, report.steps, report.time
    );
    let mo = model.moments(&report.profile);
    println!("  n          X_n          Y_n");
    for n in model.classes() {
        println!("{n:>3} {:>12.5e} {:>12.5e}", mo.x_at(n), mo.y_at(n));
    }
    println!("ΣX = {:.6}  A = {:.15}  P + εQ = {:.2e}", mo.total_number(), mo.area, mo.constraint());
    Ok(())
}
