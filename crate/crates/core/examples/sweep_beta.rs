//! Γ and the total number ΣX_n of the steady state as β varies, on a
//! coarser grid to keep the sweep quick.

use fradkov::{InitKind, Model, Parameters, SolveOptions};
use rayon::prelude::*;

fn main() -> fradkov::Result<()> {
    let betas = [0.2, 0.5, 1.0, 1.5, 2.0, 2.5];
    let rows = betas
        .par_iter()
        .map(|&beta| {
            let params = Parameters { beta, ..Default::default() }.with_eps(0.1)?;
            let model = Model::new(params)?;
            let r = model.solve(InitKind::Random, &SolveOptions::default())?.ensure_converged()?;
            Ok((beta, r.gamma, model.moments(&r.profile).total_number(), r.steps))
        })
        .collect::<fradkov::Result<Vec<_>>>()?;
    println!("{:>5} {:>12} {:>12} {:>8}", "β", "Γ", "ΣX_n", "steps");
    for (beta, gamma, sum_x, steps) in rows {
        println!("{beta:>5} {gamma:>12.8} {sum_x:>12.8} {steps:>8}");
    }
    Ok(())
}
