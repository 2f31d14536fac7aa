//! Regime of every class at its singular point ξ = n - 6, and the measured
//! versus predicted value ratio at the singular cell.

use fradkov::diagnostics::classify_singularities;
use fradkov::{InitKind, Model, Parameters, SolveOptions};

fn main() -> fradkov::Result<()> {
    let model = Model::new(Parameters::default())?;
    let report = model.solve(InitKind::Random, &SolveOptions::default())?.ensure_converged()?;
    let s = classify_singularities(&report)?;
    println!("Γ = {:.8}", s.gamma);
    println!("  n     Γκ_n  regime          measured  predicted");
    let show = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.5}"));
    for e in &s.entries {
        println!(
            "{:>3} {:>8.3}  {:<14} {:>9} {:>10}",
            e.n,
            e.gamma_kappa,
            format!("{:?}", e.regime),
            show(e.measured_ratio),
            show(e.predicted_ratio)
        );
    }
    Ok(())
}
