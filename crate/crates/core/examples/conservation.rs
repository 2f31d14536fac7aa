//! Drive explicit Euler steps by hand and watch the area and the
//! polyhedral constraint stay put while the profile relaxes.

use fradkov::{InitKind, Model, Parameters};

fn main() -> fradkov::Result<()> {
    let model = Model::new(Parameters::default())?;
    let mut g = model.initial_state(InitKind::Localized)?;
    let dt = model.stable_dt(model.gamma_a_priori_bound().unwrap_or(5.0));
    println!("dt = {dt:.6e}");
    println!("{:>7} {:>10} {:>12} {:>12} {:>10}", "step", "Γ", "A - 1", "P + εQ", "min g");
    for step in 0..=5000 {
        if step % 500 == 0 {
            let mo = model.moments(&g);
            let gamma = model.gamma(&g)?.value;
            println!(
                "{step:>7} {gamma:>10.6} {:>12.2e} {:>12.2e} {:>10.2e}",
                mo.area - 1.0,
                mo.constraint(),
                g.min()
            );
        }
        g = model.euler_step(&g, dt)?;
    }
    Ok(())
}
