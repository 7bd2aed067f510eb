//! Degree-grouped prime sums: B(α), 𝓑(u,α), 𝓒(u,α,β), the diagonal
//! generating function and the zero-swap series R_1.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::series::PowerSeries;
use crate::parallel::CompensatedSum;

pub(crate) fn c64(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// q^s for complex s.
pub(crate) fn qpow(q: f64, s: Complex64) -> Complex64 {
    (s * q.ln()).exp()
}

fn mobius_int(mut n: usize) -> i32 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// π_q(n) in floating point (exact for the sizes that fit in 53 bits).
pub fn prime_count(q: u32, n: usize) -> f64 {
    let mut s = 0.0;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            s += mobius_int(d) as f64 * (q as f64).powi((n / d) as i32);
        }
    }
    s / n as f64
}

/// A truncated sum over prime degrees with a ratio-test tail certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeSum {
    pub value: Complex64,
    pub cutoff: usize,
    pub tail_bound: f64,
}

/// Named tail certificate carried into reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailCertificate {
    pub name: String,
    pub cutoff: usize,
    pub tail_bound: f64,
}

impl PrimeSum {
    pub fn certificate(&self, name: &str) -> TailCertificate {
        TailCertificate {
            name: name.to_string(),
            cutoff: self.cutoff,
            tail_bound: self.tail_bound,
        }
    }
}

/// Σ_{n=1}^{cutoff} term(n). The tail bound is twice the geometric tail implied
/// by the worst of the last three term ratios, or infinity if they do not decay.
pub fn degree_sum(cutoff: usize, term: impl Fn(usize) -> Complex64) -> PrimeSum {
    let terms: Vec<Complex64> = (1..=cutoff).map(&term).collect();
    let mut acc = CompensatedSum::default();
    for t in &terms {
        acc.add(*t);
    }
    let mags: Vec<f64> = terms.iter().map(|t| t.norm()).collect();
    let tail_bound = match mags.len() {
        0..=2 => f64::INFINITY,
        k => {
            let last = mags[k - 1];
            if last == 0.0 {
                0.0
            } else {
                let rho = (mags[k - 1] / mags[k - 2]).max(mags[k - 2] / mags[k - 3]);
                if rho.is_finite() && rho < 1.0 {
                    2.0 * last * rho / (1.0 - rho)
                } else {
                    f64::INFINITY
                }
            }
        }
    };
    PrimeSum {
        value: acc.value(),
        cutoff,
        tail_bound,
    }
}

/// B(α) = Σ_P d(P)/((|P|^{1+2α}−1)(|P|+1)).
#[allow(non_snake_case)]
pub fn B_alpha(q: u32, alpha: Complex64, cutoff: usize) -> PrimeSum {
    let qf = q as f64;
    degree_sum(cutoff.max(10), |n| {
        let big = qf.powi(n as i32);
        n as f64 * prime_count(q, n) / ((qpow(qf, (1.0 + 2.0 * alpha) * n as f64) - 1.0) * (big + 1.0))
    })
}

/// The part of B(α) with k·d(P) ≤ m, i.e. Σ_{kn ≤ m} n π_q(n) q^{−nk(1+2α)}/(qⁿ+1).
pub fn b_alpha_truncated(q: u32, alpha: Complex64, m: usize) -> Complex64 {
    let qf = q as f64;
    let mut acc = CompensatedSum::default();
    for n in 1..=m {
        let pre = n as f64 * prime_count(q, n) / (qf.powi(n as i32) + 1.0);
        for k in 1..=m / n {
            acc.add(pre * qpow(qf, -(1.0 + 2.0 * alpha) * (n * k) as f64));
        }
    }
    acc.value()
}

/// 𝓑(u,α) = Σ_P d(P) x/((1−x)(|P|+1)), x = u^{2d(P)}/|P|^{1+2α}.
#[allow(non_snake_case)]
pub fn mathcalB_series(q: u32, alpha: Complex64, order: i64) -> PowerSeries {
    let qf = q as f64;
    let mut coeffs = vec![c64(0.0); (order.max(0) + 1) as usize];
    for m in 1..=(order / 2) as usize {
        let mut s = c64(0.0);
        for n in (1..=m).filter(|n| m % n == 0) {
            s += n as f64 * prime_count(q, n) / (qf.powi(n as i32) + 1.0);
        }
        coeffs[2 * m] = s * qpow(qf, -(1.0 + 2.0 * alpha) * m as f64);
    }
    PowerSeries::from_coeffs(0, coeffs)
}

/// 1/(|P|^s − u^{2n}) = |P|^{−s} Σ_k |P|^{−sk} u^{2nk}.
fn inv_gap(qf: f64, n: usize, s: Complex64, order: i64) -> PowerSeries {
    let r = qpow(qf, -s * n as f64);
    PowerSeries::geometric(r, 2 * n as i64, order).scale(r)
}

/// Σ_{n≥1} q^{−2nα} u^{2n}, i.e. (u²/q^{1+2α})·𝓩′/𝓩(u²/q^{1+2α}).
pub fn log_zeta_series(q: u32, alpha: Complex64, order: i64) -> PowerSeries {
    let r = qpow(q as f64, -2.0 * alpha);
    PowerSeries::geometric(r, 2, order).sub(&PowerSeries::one(order))
}

/// Σ_{n≥1} n q^{−n(α+β)} u^{2n}: the u-derivative layer (x d/dx)(x𝓩′/𝓩(x))
/// at x = u²/q^{1+α+β}.
pub fn log_zeta_derivative_series(q: u32, alpha: Complex64, beta: Complex64, order: i64) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    for n in 1..=(order / 2) {
        let t = n as f64 * qpow(q as f64, -(alpha + beta) * n as f64);
        s = s.add(&PowerSeries::monomial(2 * n, t, order));
    }
    s
}

/// 𝓒(u,α,β): 𝓑(u,α)𝓑(u,β) plus the three prime sums.
#[allow(non_snake_case)]
pub fn mathcalC_series(q: u32, alpha: Complex64, beta: Complex64, order: i64) -> PowerSeries {
    let qf = q as f64;
    let one = c64(1.0);
    let mut out = mathcalB_series(q, alpha, order).mul(&mathcalB_series(q, beta, order));
    for n in 1..=(order / 2).max(0) as usize {
        let big = qf.powi(n as i32);
        let w = n as f64 * n as f64 * prime_count(q, n);
        let ga = inv_gap(qf, n, one + 2.0 * alpha, order);
        let gb = inv_gap(qf, n, one + 2.0 * beta, order);
        let gab = inv_gap(qf, n, one + alpha + beta, order);
        let common = ga.mul(&gb);
        let x = 2 * n as i64;

        let diff = qpow(big, alpha) - qpow(big, beta);
        let s2 = common
            .mul(&gab)
            .mul(&gab)
            .shift(2 * x)
            .truncate(order)
            .scale(w * qpow(big, 2.0 + alpha + beta) * diff * diff);
        let s3 = common
            .shift(x)
            .truncate(order)
            .scale(w * qpow(big, one + alpha + beta) / (big + 1.0));
        let s4 = common
            .shift(2 * x)
            .truncate(order)
            .scale(c64(w * big / ((big + 1.0) * (big + 1.0))));
        out = out.add(&s2).sub(&s3).add(&s4);
    }
    out.floor(0).truncate(order)
}

/// R_1(u,α,β) = (G_α − 𝓑_α)(G_β − 𝓑_β) + Σ n q^{−n(α+β)}u^{2n} + (𝓒 − 𝓑_α𝓑_β),
/// with G_α the log-derivative layer Σ q^{−2nα}u^{2n}.
#[allow(non_snake_case)]
pub fn R1_series(q: u32, alpha: Complex64, beta: Complex64, order: i64) -> PowerSeries {
    let ga = log_zeta_series(q, alpha, order);
    let gb = log_zeta_series(q, beta, order);
    let ba = mathcalB_series(q, alpha, order);
    let bb = mathcalB_series(q, beta, order);
    ga.mul(&gb)
        .add(&log_zeta_derivative_series(q, alpha, beta, order))
        .sub(&ba.mul(&gb))
        .sub(&bb.mul(&ga))
        .add(&mathcalC_series(q, alpha, beta, order))
}

/// Σ_{f₁f₂ = □} Λ(f₁)Λ(f₂) u^{d(f₁f₂)} |f₁|^{−1/2−α}|f₂|^{−1/2−β} ∏_{P | f₁f₂} |P|/(|P|+1),
/// enumerated directly over pairs of prime powers grouped by degree.
pub fn diagonal_generating_series(q: u32, alpha: Complex64, beta: Complex64, order: i64) -> PowerSeries {
    let qf = q as f64;
    let m = order.max(0) as usize;
    let mut coeffs = vec![c64(0.0); m + 1];
    let keep = |n: usize| {
        let b = qf.powi(n as i32);
        b / (b + 1.0)
    };
    for n1 in 1..=m {
        let p1 = prime_count(q, n1);
        for a in 1..=m / n1 {
            let w1 = qpow(qf, -(0.5 + alpha) * (a * n1) as f64);
            for n2 in 1..=m - a * n1 {
                let p2 = prime_count(q, n2);
                for b in 1..=(m - a * n1) / n2 {
                    let w = w1 * qpow(qf, -(0.5 + beta) * (b * n2) as f64);
                    let mut c = 0.0;
                    if a % 2 == 0 && b % 2 == 0 {
                        let distinct = p1 * p2 - if n1 == n2 { p1 } else { 0.0 };
                        c += (n1 * n2) as f64 * distinct * keep(n1) * keep(n2);
                    }
                    if n1 == n2 && (a + b) % 2 == 0 {
                        c += (n1 * n1) as f64 * p1 * keep(n1);
                    }
                    coeffs[a * n1 + b * n2] += w * c;
                }
            }
        }
    }
    PowerSeries::from_coeffs(0, coeffs)
}
