//! Deterministic chunked parallel maps and fixed-tree reductions.

use num_complex::Complex64;
use rayon::prelude::*;

/// Default chunk length for family loops; fixed so chunk boundaries never
/// depend on the worker count.
pub const CHUNK: u64 = 4096;

/// Applies `f` to consecutive index ranges [start, end) covering 0..total and
/// returns the results in chunk order.
pub fn chunked<T, F>(total: u64, chunk: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync + Send,
{
    let n = total.div_ceil(chunk);
    (0..n)
        .into_par_iter()
        .map(|i| f(i * chunk, ((i + 1) * chunk).min(total)))
        .collect()
}

/// Pairwise sum over a fixed binary tree.
pub fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    match v.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => v[0],
        n => pairwise_sum(&v[..n / 2]) + pairwise_sum(&v[n / 2..]),
    }
}

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: Complex64) {
        let (s, c) = two_sum(self.sum.re, x.re);
        let (t, d) = two_sum(self.sum.im, x.im);
        self.sum = Complex64::new(s, t);
        self.comp += Complex64::new(c, d);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Runs `f` on a dedicated pool with `threads` workers.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// Accumulation mode for floating-point family sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    #[default]
    Double,
    Compensated,
}

/// Running sum honoring a `Precision`.
#[derive(Clone, Copy, Debug)]
pub struct Accumulator {
    mode: Precision,
    plain: Complex64,
    comp: CompensatedSum,
}

impl Accumulator {
    pub fn new(mode: Precision) -> Self {
        Accumulator {
            mode,
            plain: Complex64::new(0.0, 0.0),
            comp: CompensatedSum::default(),
        }
    }

    pub fn add(&mut self, x: Complex64) {
        match self.mode {
            Precision::Double => self.plain += x,
            Precision::Compensated => self.comp.add(x),
        }
    }

    pub fn value(&self) -> Complex64 {
        match self.mode {
            Precision::Double => self.plain,
            Precision::Compensated => self.comp.value(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunk_results_are_ordered() {
        let a = with_threads(1, || chunked(10_000, 333, |s, e| (s..e).sum::<u64>()));
        let b = with_threads(4, || chunked(10_000, 333, |s, e| (s..e).sum::<u64>()));
        assert_eq!(a, b);
        assert_eq!(a.iter().sum::<u64>(), (0..10_000).sum::<u64>());
    }

    #[test]
    fn compensated_recovers_small_terms() {
        let mut c = CompensatedSum::default();
        c.add(Complex64::new(1e16, 0.0));
        for _ in 0..10 {
            c.add(Complex64::new(1.0, 0.0));
        }
        c.add(Complex64::new(-1e16, 0.0));
        assert_eq!(c.value().re, 10.0);
    }
}
