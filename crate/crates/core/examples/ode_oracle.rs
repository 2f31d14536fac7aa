//! Compare the discrete profile with the stationary ODE integrated by RK4
//! between singular points, for two grid sizes.

use fradkov::diagnostics::ode_oracle;
use fradkov::{InitKind, Model, Parameters, SolveOptions};

fn main() -> fradkov::Result<()> {
    let windows = [(2, (0.5, 3.5)), (5, (0.5, 6.0)), (10, (0.5, 2.5)), (10, (5.5, 18.5))];
    for eps in [0.1, 0.05] {
        let model = Model::new(Parameters::default().with_eps(eps)?)?;
        let report = model.solve(InitKind::Random, &SolveOptions::default())?.ensure_converged()?;
        println!("ε = {eps}");
        for (n, iv) in windows {
            let d = ode_oracle(&report, n, iv)?;
            println!("  n = {n:>2} on {iv:?}: max deviation {d:.3e} ({:.3}ε)", d / eps);
        }
    }
    Ok(())
}
