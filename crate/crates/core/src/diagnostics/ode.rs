use crate::dynamics::SteadyStateReport;
use crate::error::{Error, Result};
use crate::model::{Model, State};

/// RK4 substeps per grid cell.
const SUBSTEPS: usize = 10;

/// Integrates the stationary equation
/// `-2g - (ξ+6-n)g' = Γ(-κ_n g + s(ξ))` from `(start, g_start)` to `end`
/// with classical RK4 steps of size `(end - start)/steps`, where `s` is
/// the incoming term `β(n-1)g_{n-1} + (β+1)(n+1)g_{n+1}`.
///
/// Returns the `steps + 1` values along the way, `start` first.
pub fn integrate_stationary(
    kappa: f64,
    n: usize,
    gamma: f64,
    (start, g_start): (f64, f64),
    end: f64,
    steps: usize,
    source: impl Fn(f64) -> f64,
) -> Vec<f64> {
    let shift = 6.0 - n as f64;
    let decay = 2.0 - gamma * kappa;
    let f = |xi: f64, g: f64| -(decay * g + gamma * source(xi)) / (xi + shift);
    let h = (end - start) / steps as f64;
    let mut out = Vec::with_capacity(steps + 1);
    let mut g = g_start;
    out.push(g);
    for j in 0..steps {
        let xi = start + j as f64 * h;
        let k1 = f(xi, g);
        let k2 = f(xi + 0.5 * h, g + 0.5 * h * k1);
        let k3 = f(xi + 0.5 * h, g + 0.5 * h * k2);
        let k4 = f(xi + h, g + h * k3);
        g += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.push(g);
    }
    out
}

/// Largest deviation between the discrete profile `g_n` and the solution
/// of the stationary ODE on `[a, b]`, with `g_{n±1}` interpolated linearly.
///
/// The interval is shrunk to grid nodes. Integration starts from the end
/// where the homogeneous solution `|ξ+6-n|^{Γκ_n-2}` is larger, so that
/// errors in the starting value are damped rather than amplified.
pub fn ode_oracle(report: &SteadyStateReport, n: usize, interval: (f64, f64)) -> Result<f64> {
    let model = report.model()?;
    oracle_on_profile(&model, &report.profile, report.gamma, n, interval)
}

pub(crate) fn oracle_on_profile(
    model: &Model,
    g: &State,
    gamma: f64,
    n: usize,
    (a, b): (f64, f64),
) -> Result<f64> {
    let n_max = model.n_max();
    if !(2..=n_max).contains(&n) {
        return Err(Error::InvalidParameters(format!("class {n} outside 2..={n_max}")));
    }
    let eps = model.eps();
    let singular = n as f64 - 6.0;
    let touches = [singular - 1.0, singular, singular + 1.0]
        .into_iter()
        .any(|p| p > a - 2.0 * eps && p < b + 2.0 * eps);
    let upper = (n_max as f64 - 6.0).min(model.params().domain_length as f64);
    if a.is_nan() || b.is_nan() || a >= b || a <= 0.0 || touches || b >= upper {
        return Err(Error::IntervalTouchesSingularity { n, a, b });
    }
    let k_a = (a / eps - 1e-9).ceil() as usize;
    let k_b = (b / eps + 1e-9).floor() as usize;
    if k_b <= k_a {
        return Err(Error::IntervalTouchesSingularity { n, a, b });
    }

    let w = model.weights();
    let node = |m: usize, k: usize| if (2..=n_max).contains(&m) { g.value(m, k) } else { 0.0 };
    let lerp = |m: usize, xi: f64| {
        let s = xi / eps;
        let k = (s.floor() as usize).min(model.cells() - 1);
        let t = s - k as f64;
        (1.0 - t) * node(m, k) + t * node(m, k + 1)
    };
    let below = if n > 2 { w.from_below(n) } else { 0.0 };
    let above = if n < n_max { w.from_above(n) } else { 0.0 };
    let source = |xi: f64| below * lerp(n - 1, xi) + above * lerp(n + 1, xi);

    let kappa = w.kappa(n);
    let toward_singular = gamma * kappa > 2.0;
    let left_of_singular = (k_b as f64) * eps < singular;
    let forward = toward_singular == left_of_singular;
    let steps = (k_b - k_a) * SUBSTEPS;
    let (k0, k1) = if forward { (k_a, k_b) } else { (k_b, k_a) };
    let xi = |k: usize| k as f64 * eps;
    let path = integrate_stationary(kappa, n, gamma, (xi(k0), node(n, k0)), xi(k1), steps, source);

    let mut dev = 0.0f64;
    for (j, v) in path.iter().step_by(SUBSTEPS).enumerate() {
        let k = if forward { k0 + j } else { k0 - j };
        dev = dev.max((v - node(n, k)).abs());
    }
    Ok(dev)
}
