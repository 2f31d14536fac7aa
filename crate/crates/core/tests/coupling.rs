mod common;

use common::coupling_reference;
use fradkov::{Model, Parameters};
use proptest::prelude::*;

fn model(beta: f64, n_max: usize) -> Model {
    Model::new(Parameters {
        beta,
        n_max,
        domain_length: n_max,
        cells: n_max,
        ..Default::default()
    })
    .unwrap()
}

fn vector(max_len: usize) -> impl Strategy<Value = (f64, Vec<f64>)> {
    (0.05f64..3.0, 6usize..max_len).prop_flat_map(|(beta, len)| (Just(beta), prop::collection::vec(0.0f64..10.0, len)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_reference_stencil((beta, f) in vector(40)) {
        let m = model(beta, f.len() + 1);
        let jf = m.apply_coupling(&f).unwrap();
        let reference = coupling_reference(beta, &f);
        let scale = m.weights().kappa_max() * f.iter().map(|x| x.abs()).sum::<f64>();
        for (a, b) in jf.iter().zip(&reference) {
            prop_assert!((a - b).abs() <= 1e-14 * scale.max(1.0));
        }
    }

    #[test]
    fn zero_balance((beta, f) in vector(40)) {
        let m = model(beta, f.len() + 1);
        let jf = m.apply_coupling(&f).unwrap();
        let kappa_n = m.weights().kappa(m.n_max());
        let l1: f64 = f.iter().map(|x| x.abs()).sum();
        prop_assert!(jf.iter().sum::<f64>().abs() <= 1e-12 * kappa_n * l1);
    }

    #[test]
    fn weighted_identity(
        (beta, f) in vector(30),
        theta in prop::collection::vec(-5.0f64..5.0, 40),
    ) {
        let n_max = f.len() + 1;
        let m = model(beta, n_max);
        let jf = m.apply_coupling(&f).unwrap();
        let th = |n: usize| theta[n - 2];
        let fa = |n: usize| f[n - 2];
        let lhs: f64 = (2..=n_max).map(|n| th(n) * jf[n - 2]).sum();
        let up: f64 = (2..n_max).map(|n| (th(n + 1) - th(n)) * beta * n as f64 * fa(n)).sum();
        let down: f64 = (3..=n_max).map(|n| (th(n) - th(n - 1)) * (beta + 1.0) * n as f64 * fa(n)).sum();
        let scale = 10.0 * m.weights().kappa_max() * f.iter().sum::<f64>();
        prop_assert!((lhs - (up - down)).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn linearity(
        (beta, f) in vector(30),
        alpha in -3.0f64..3.0,
        seed in any::<u64>(),
    ) {
        let m = model(beta, f.len() + 1);
        let g: Vec<f64> = f.iter().enumerate().map(|(i, x)| ((seed >> (i % 60)) & 7) as f64 - x).collect();
        let combo: Vec<f64> = f.iter().zip(&g).map(|(a, b)| alpha * a + b).collect();
        let lhs = m.apply_coupling(&combo).unwrap();
        let (jf, jg) = (m.apply_coupling(&f).unwrap(), m.apply_coupling(&g).unwrap());
        for i in 0..f.len() {
            let rhs = alpha * jf[i] + jg[i];
            prop_assert!((lhs[i] - rhs).abs() <= 1e-12 * (1.0 + lhs[i].abs().max(rhs.abs())) * m.weights().kappa_max());
        }
    }
}

#[test]
fn hand_computed_examples() {
    let m = model(1.0, 8);
    let jf = m.apply_coupling(&[1.0; 7]).unwrap();
    assert_eq!(jf, vec![4.0, 1.0, 1.0, 1.0, 1.0, 1.0, -9.0]);
    let weighted: f64 = (2..=8).map(|n| (6.0 - n as f64) * jf[n - 2]).sum();
    assert_eq!(weighted, 8.0 - 2.0 + 33.0);
    assert!(m.apply_coupling(&[0.0; 7]).unwrap().iter().all(|&x| x == 0.0));
}

#[test]
fn gamma_is_scale_invariant() {
    let mut rng = common::rng(7);
    for _ in 0..50 {
        let params = common::small_params(&mut rng);
        let m = Model::new(params).unwrap();
        let g = common::admissible_state(&m, &mut rng);
        let Ok(w) = m.gamma(&g) else { continue };
        for lambda in [1e-6, 0.37, 3.0, 2.5e4] {
            let ws = m.gamma(&g.scaled(lambda)).unwrap();
            assert!((ws.value - w.value).abs() <= 1e-13 * w.value.abs());
            assert!((ws.num - lambda * w.num).abs() <= 1e-13 * (lambda * w.num).abs());
        }
    }
}
