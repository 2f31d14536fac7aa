//! Independent reference implementations shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use fradkov::{Model, Parameters, State};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `J` written out row by row from its definition, `f[0] = f_2`.
pub fn coupling_reference(beta: f64, f: &[f64]) -> Vec<f64> {
    let n_max = f.len() + 1;
    let at = |n: usize| f[n - 2];
    (2..=n_max)
        .map(|n| {
            let nf = n as f64;
            if n == 2 {
                3.0 * (beta + 1.0) * at(3) - 2.0 * beta * at(2)
            } else if n == n_max {
                beta * (nf - 1.0) * at(n - 1) - (beta + 1.0) * nf * at(n)
            } else {
                (beta + 1.0) * (nf + 1.0) * at(n + 1) - (2.0 * beta + 1.0) * nf * at(n)
                    + beta * (nf - 1.0) * at(n - 1)
            }
        })
        .collect()
}

/// Right-hand side of the semi-discrete system evaluated entry by entry
/// with explicit ghost values and the textbook upwind differences.
pub fn rhs_reference(model: &Model, g: &State, gamma: f64) -> State {
    let eps = model.eps();
    let cells = model.cells();
    let beta = model.beta();
    let ghost = |n: usize, k: usize| g.value(n, k);
    let mut out = model.zero_state();
    for k in 1..cells {
        let column: Vec<f64> = model.classes().map(|n| g.get(n, k)).collect();
        let jg = coupling_reference(beta, &column);
        for n in model.classes() {
            let c = k as f64 * eps + 6.0 - n as f64;
            let plus = (ghost(n, k + 1) - ghost(n, k)) / eps;
            let minus = (ghost(n, k) - ghost(n, k - 1)) / eps;
            let kn = (n as f64 - 6.0) / eps;
            let delta = if (k as f64 - kn).abs() < 0.5 { 1.0 } else { 0.0 };
            let v = 2.0 * g.get(n, k) + c.max(0.0) * plus - (-c).max(0.0) * minus - delta * g.get(n, k)
                + gamma * jg[n - 2];
            out.set(n, k, v);
        }
    }
    out
}

pub fn small_params(rng: &mut impl Rng) -> Parameters {
    let n_max = rng.gen_range(7..=12);
    let domain_length = n_max - 6 + rng.gen_range(1..=3);
    let per_unit = rng.gen_range(2..=6);
    Parameters {
        beta: rng.gen_range(0.1..1.9),
        n_max,
        domain_length,
        cells: per_unit * domain_length,
        ..Default::default()
    }
}

pub fn random_state(model: &Model, rng: &mut impl Rng) -> State {
    model.state_from_fn(|_, _| rng.gen_range(0.0..1.0))
}

/// Random admissible state: positive entries projected onto `A = 1`,
/// `P + εQ = 0`.
pub fn admissible_state(model: &Model, rng: &mut impl Rng) -> State {
    loop {
        let raw = random_state(model, rng);
        if let Ok(s) = model.project_initial(&raw) {
            return s;
        }
    }
}

/// Terms of the abstract moment identity for class `n`:
/// `dZ/dt`, `2Z - ζ + γ ε Σ_k μ^k (Jg^k)_n` and a magnitude for scaling.
pub fn moment_identity(model: &Model, g: &State, dg: &State, mu: &[Vec<f64>], gamma: f64, n: usize) -> (f64, f64, f64) {
    let eps = model.eps();
    let cells = model.cells();
    let mu_n = &mu[n - 2];
    let xi = |k: usize| k as f64 * eps;
    let c = |k: usize| mu_n[k] * (xi(k) + 6.0 - n as f64);
    let kn = (n as f64 - 6.0) / eps;
    let mut dz = 0.0;
    let mut z = 0.0;
    let mut zeta = (6.0 - n as f64).max(0.0) * mu_n[0] * g.value(n, 1);
    let mut coupling = 0.0;
    let mut mag = zeta.abs();
    for k in 1..cells {
        let gk = g.get(n, k);
        dz += eps * mu_n[k] * dg.get(n, k);
        z += eps * mu_n[k] * gk;
        let eta = if (k as f64) < kn - 0.5 {
            (c(k + 1) - c(k)) / eps
        } else if (k as f64) > kn + 0.5 {
            (c(k) - c(k - 1)) / eps
        } else {
            mu_n[k]
        };
        zeta += eps * eta * gk;
        let column: Vec<f64> = model.classes().map(|m| g.get(m, k)).collect();
        let jg = coupling_reference(model.beta(), &column)[n - 2];
        coupling += gamma * eps * mu_n[k] * jg;
        mag += (eps * eta * gk).abs() + (gamma * eps * mu_n[k] * jg).abs() + 2.0 * (eps * mu_n[k] * gk).abs();
    }
    (dz, 2.0 * z - zeta + coupling, mag)
}

/// `(computed, expected, magnitude)` of the X- and Y-balances of class `n`:
/// `ε Σ_k dg = X_n + γ(JX)_n - (6-n)_+ g_n^1` and
/// `ε Σ_k ξ_k dg = (n-6)X_n + γ(JY)_n + ε² Σ_k sgn(ξ_k+6-n) g_n^k`.
pub fn xy_balance(model: &Model, g: &State, dg: &State, gamma: f64, n: usize) -> [(f64, f64, f64); 2] {
    let eps = model.eps();
    let mo = model.moments(g);
    let jx = coupling_reference(model.beta(), &mo.x);
    let jy = coupling_reference(model.beta(), &mo.y);
    let i = n - 2;
    let (mut dx, mut dy, mut mag_x, mut mag_y, mut signed, mut mag_s) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for k in 1..model.cells() {
        let xi = k as f64 * eps;
        let d = dg.get(n, k);
        dx += eps * d;
        dy += eps * xi * d;
        mag_x += eps * d.abs();
        mag_y += eps * xi * d.abs();
        let c = xi + 6.0 - n as f64;
        let s = if c.abs() < 0.5 * eps { 0.0 } else { c.signum() };
        signed += s * g.get(n, k);
        mag_s += g.get(n, k);
    }
    let outflow = (6.0 - n as f64).max(0.0) * g.get(n, 1);
    let x_rhs = mo.x[i] + gamma * jx[i] - outflow;
    let y_rhs = (n as f64 - 6.0) * mo.x[i] + gamma * jy[i] + eps * eps * signed;
    let jmag = |v: &[f64]| model.weights().kappa_max() * v.iter().map(|x| x.abs()).sum::<f64>();
    [
        (dx, x_rhs, mag_x + mo.x[i].abs() + gamma * jmag(&mo.x) + outflow),
        (dy, y_rhs, mag_y + 6.0 * mo.x[i].abs() + gamma * jmag(&mo.y) + eps * eps * mag_s),
    ]
}
