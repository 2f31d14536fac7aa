/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(items: I) -> f64 {
    let mut acc = Accumulator::new();
    for x in items {
        acc.add(x);
    }
    acc.value()
}

const LANES: usize = 4;

/// Compensated dot products of `g` against several weight vectors at once,
/// using branch-free two-sum updates on independent lanes in a fixed order.
pub(crate) fn compensated_dots<const M: usize>(g: &[f64], weights: [&[f64]; M]) -> [f64; M] {
    let mut sum = [[0.0f64; LANES]; M];
    let mut comp = [[0.0f64; LANES]; M];
    let chunks = g.len() / LANES;
    for c in 0..chunks {
        let base = c * LANES;
        for (j, w) in weights.iter().enumerate() {
            for l in 0..LANES {
                let x = w[base + l] * g[base + l];
                let s = sum[j][l] + x;
                let bb = s - sum[j][l];
                comp[j][l] += (sum[j][l] - (s - bb)) + (x - bb);
                sum[j][l] = s;
            }
        }
    }
    let mut out = [0.0; M];
    for (j, w) in weights.iter().enumerate() {
        let mut acc = Accumulator::new();
        for l in 0..LANES {
            acc.add(sum[j][l]);
            acc.add(comp[j][l]);
        }
        for i in chunks * LANES..g.len() {
            acc.add(w[i] * g[i]);
        }
        out[j] = acc.value();
    }
    out
}
