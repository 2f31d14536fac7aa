//! Steady-state moment identities of a converged profile.

use fradkov::diagnostics::verify_steady_identities;
use fradkov::{InitKind, Model, Parameters, SolveOptions};

fn main() -> fradkov::Result<()> {
    let model = Model::new(Parameters::default().with_eps(0.1)?)?;
    let report = model.solve(InitKind::Uniform, &SolveOptions::default())?.ensure_converged()?;
    let id = verify_steady_identities(&report)?;
    println!("mass identity  {:.3e}", id.mass_identity);
    println!("|P|            {:.3e}", id.polyhedral);
    println!("|A - target|   {:.3e}", id.area);
    println!("  n   X identity   Y identity");
    for (i, (x, y)) in id.x_identity.iter().zip(&id.y_identity).enumerate() {
        println!("{:>3} {x:>12.3e} {y:>12.3e}", i + 2);
    }
    Ok(())
}
