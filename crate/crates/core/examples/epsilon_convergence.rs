//! Steady states on successively finer grids, compared on the coarsest one.

use fradkov::diagnostics::{epsilon_convergence, n_convergence};
use fradkov::{InitKind, Parameters, SolveOptions};

fn main() -> fradkov::Result<()> {
    let opts = SolveOptions::default();
    let rows = epsilon_convergence(&Parameters::default(), &[0.2, 0.1, 0.05], InitKind::Random, &opts)?;
    println!("{:>6} {:>14} {:>12}", "ε", "Γ", "L¹ to finest");
    for r in &rows {
        println!("{:>6} {:>14.10} {:>12.4e}", r.eps, r.gamma, r.l1_to_finest);
    }
    let params = Parameters::default().with_eps(0.1)?;
    let rows = n_convergence(&params, &[15, 20, 25], InitKind::Random, &opts)?;
    println!("{:>4} {:>14} {:>12}", "N", "Γ", "|Γ - Γ_25|");
    for r in &rows {
        println!("{:>4} {:>14.10} {:>12.4e}", r.n_max, r.gamma, r.gamma_to_largest);
    }
    Ok(())
}
