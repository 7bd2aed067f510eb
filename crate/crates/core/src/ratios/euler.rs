//! Euler products: A(α,β,γ,δ), A(α,β), 𝓐(u,α,β), the ratio recipe and R_4.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::primes::{c64, degree_sum, prime_count, qpow, PrimeSum, TailCertificate};
use super::series::PowerSeries;
use super::{contour_radius, CONTOUR_POINTS, LAURENT_DEPTH};

/// log(1+z), accurate for small |z|.
pub(crate) fn ln1p(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let mut term = z;
        let mut s = c64(0.0);
        for k in 1..=6 {
            s += term / k as f64;
            term *= -z;
        }
        s
    } else {
        (1.0 + z).ln()
    }
}

/// ζ_q(s) = 1/(1 − q^{1−s}).
pub fn zeta_q(q: u32, s: Complex64) -> Complex64 {
    1.0 / (1.0 - qpow(q as f64, 1.0 - s))
}

fn exp_sum(logs: PrimeSum) -> PrimeSum {
    let v = logs.value.exp();
    PrimeSum {
        value: v,
        cutoff: logs.cutoff,
        tail_bound: v.norm() * logs.tail_bound.exp_m1(),
    }
}

/// log of the local factor of A(α,β,γ,δ) at a prime of degree n.
pub fn a4_local_log(q: u32, n: usize, s: [Complex64; 4]) -> Complex64 {
    let [a, b, c, d] = s;
    let big = (q as f64).powi(n as i32);
    let e = |x: Complex64| qpow(big, -x);
    let one = c64(1.0);
    let inv = 1.0 / big;
    let bracket = inv + e(one + a + b) + e(one + c + d)
        - e(one + a + c)
        - e(one + a + d)
        - e(one + b + c)
        - e(one + b + d)
        - e(2.0 + 2.0 * a)
        - e(2.0 + 2.0 * b)
        + e(2.0 + a + b + c + d)
        + e(3.0 + 2.0 * a + 2.0 * b);
    -ln1p(c64(inv)) + ln1p(-e(one + a + b)) + ln1p(-e(one + c + d))
        - ln1p(-e(one + a + c))
        - ln1p(-e(one + a + d))
        - ln1p(-e(one + b + c))
        - ln1p(-e(one + b + d))
        + ln1p(bracket)
}

/// The local factor recovered from the raw local sum Σ μ(P^{h₁})μ(P^{h₂}) a(P^{f₁+f₂+h₁+h₂}) |P|^{−…}
/// over f₁,f₂ ≤ kmax, h₁,h₂ ∈ {0,1} with even total, divided by the ζ_q local factors.
pub fn a4_local_direct(q: u32, n: usize, s: [Complex64; 4], kmax: usize) -> Complex64 {
    let [a, b, c, d] = s;
    let big = (q as f64).powi(n as i32);
    let e = |x: Complex64| qpow(big, -x);
    let mut sum = c64(0.0);
    for f1 in 0..=kmax {
        for f2 in 0..=kmax {
            for h1 in 0..2usize {
                for h2 in 0..2usize {
                    let tot = f1 + f2 + h1 + h2;
                    if tot % 2 == 1 {
                        continue;
                    }
                    let mu = if (h1 + h2) % 2 == 0 { 1.0 } else { -1.0 };
                    let av = if tot == 0 { 1.0 } else { big / (big + 1.0) };
                    let ex = (0.5 + a) * f1 as f64
                        + (0.5 + b) * f2 as f64
                        + (0.5 + c) * h1 as f64
                        + (0.5 + d) * h2 as f64;
                    sum += mu * av * e(ex);
                }
            }
        }
    }
    let one = c64(1.0);
    let zl = |x: Complex64| 1.0 - e(one + x);
    sum * zl(2.0 * a) * zl(2.0 * b) * zl(a + b) * zl(c + d) / (zl(a + c) * zl(a + d) * zl(b + c) * zl(b + d))
}

/// A(α,β,γ,δ) as a degree-grouped Euler product accumulated in log space.
#[allow(non_snake_case)]
pub fn A4_value(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    cutoff: usize,
) -> PrimeSum {
    let s = [alpha, beta, gamma, delta];
    exp_sum(degree_sum(cutoff, |n| prime_count(q, n) * a4_local_log(q, n, s)))
}

/// A(α,β) through its own product formula.
pub fn a_alpha_beta(q: u32, alpha: Complex64, beta: Complex64, cutoff: usize) -> PrimeSum {
    exp_sum(degree_sum(cutoff, |n| {
        let big = (q as f64).powi(n as i32);
        let e = |x: Complex64| qpow(big, -x);
        let one = c64(1.0);
        let c = 1.0 / big;
        let bracket = -c + e(one - alpha - beta) + e(one + alpha + beta)
            - e(one - alpha + beta)
            - e(one + alpha - beta)
            - e(2.0 - 2.0 * alpha)
            - e(2.0 - 2.0 * beta)
            + c * c
            + e(3.0 - 2.0 * alpha - 2.0 * beta);
        let l = -ln1p(c64(c)) - 2.0 * ln1p(c64(-c))
            + ln1p(-e(one - alpha - beta))
            + ln1p(-e(one + alpha + beta))
            - ln1p(-e(one - alpha + beta))
            - ln1p(-e(one + alpha - beta))
            + ln1p(bracket);
        prime_count(q, n) * l
    }))
}

/// log of the local factor of 𝓐(u/q^{1/2+α}, u/q^{1/2+β}) at degree n.
fn mathcal_a_local_log(q: u32, n: usize, alpha: Complex64, beta: Complex64, u: Complex64) -> Complex64 {
    let big = (q as f64).powi(n as i32);
    let e = |x: Complex64| qpow(big, -x);
    let one = c64(1.0);
    let c = 1.0 / big;
    let un = u.powi(n as i32);
    let uv = un * un * e(one + alpha + beta);
    let x = e(one - alpha - beta) / (un * un);
    let a = e(one - alpha + beta);
    let b = e(one + alpha - beta);
    let cu = e(2.0 - 2.0 * alpha) / (un * un);
    let cv = e(2.0 - 2.0 * beta) / (un * un);
    let tail = e(3.0 - 2.0 * alpha - 2.0 * beta) / (un * un * un * un);
    let bracket = -c + x + uv - a - b - cu - cv + c * c + tail;
    -ln1p(c64(c)) - 2.0 * ln1p(c64(-c)) + ln1p(-x) + ln1p(-uv) - ln1p(-a) - ln1p(-b) + ln1p(bracket)
}

/// 𝓐(u/q^{1/2+α}, u/q^{1/2+β}) at a point.
pub fn mathcal_a_point(q: u32, alpha: Complex64, beta: Complex64, u: Complex64, cutoff: usize) -> PrimeSum {
    exp_sum(degree_sum(cutoff, |n| {
        prime_count(q, n) * mathcal_a_local_log(q, n, alpha, beta, u)
    }))
}

/// Laurent coefficients of 𝓐(u/q^{1/2+α}, u/q^{1/2+β}) on the Perron contour,
/// with the worst tail bound seen on the contour.
#[allow(non_snake_case)]
pub fn mathcalA_series(q: u32, alpha: Complex64, beta: Complex64, order: i64, cutoff: usize) -> (PowerSeries, f64) {
    let worst = std::cell::Cell::new(0.0f64);
    let s = PowerSeries::from_contour(
        |u| {
            let v = mathcal_a_point(q, alpha, beta, u, cutoff);
            worst.set(worst.get().max(v.tail_bound));
            v.value
        },
        contour_radius(q),
        CONTOUR_POINTS,
        -LAURENT_DEPTH,
        order,
    );
    (s, worst.get())
}

/// The six 𝓩 factors of R_4 as a power series in u:
/// 𝓩(q^{2α−1}u^{−2})𝓩(q^{2β−1}u^{−2})𝓩(q^{α+β−1}u^{−2})𝓩(u²q^{−1−α−β}) / (𝓩(q^{α−β−1})𝓩(q^{β−α−1})),
/// where 𝓩(x) = 1/(1−qx) and the first three are expanded for |u|² < q^{Re}.
fn r4_zeta_series(q: u32, alpha: Complex64, beta: Complex64, order: i64) -> PowerSeries {
    let qf = q as f64;
    let one = PowerSeries::one(order);
    let swapped = |s: Complex64| one.sub(&PowerSeries::geometric(qpow(qf, -s), 2, order));
    let scalar = (1.0 - qpow(qf, alpha - beta)) * (1.0 - qpow(qf, beta - alpha));
    swapped(2.0 * alpha)
        .mul(&swapped(2.0 * beta))
        .mul(&swapped(alpha + beta))
        .mul(&PowerSeries::geometric(qpow(qf, -(alpha + beta)), 2, order))
        .scale(scalar)
}

fn r4_zeta_point(q: u32, alpha: Complex64, beta: Complex64, u: Complex64) -> Complex64 {
    let qf = q as f64;
    let u2 = u * u;
    let z = |x: Complex64| 1.0 / (1.0 - x);
    z(qpow(qf, 2.0 * alpha) / u2)
        * z(qpow(qf, 2.0 * beta) / u2)
        * z(qpow(qf, alpha + beta) / u2)
        * z(u2 * qpow(qf, -(alpha + beta)))
        * (1.0 - qpow(qf, alpha - beta))
        * (1.0 - qpow(qf, beta - alpha))
}

/// R_4(u,α,β) = q^{−2g(α+β)}u^{4g}𝓐(·,·)·(𝓩 factors), with the tail certificate of 𝓐.
#[allow(non_snake_case)]
pub fn R4_series(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    order: i64,
    cutoff: usize,
) -> (PowerSeries, TailCertificate) {
    let (a, tail) = mathcalA_series(q, alpha, beta, order, cutoff);
    let z = r4_zeta_series(q, alpha, beta, order + LAURENT_DEPTH);
    let s = a
        .mul(&z)
        .shift(4 * g as i64)
        .truncate(order)
        .scale(qpow(q as f64, -2.0 * (alpha + beta) * g as f64));
    (
        s,
        TailCertificate {
            name: "A(alpha,beta) on contour".into(),
            cutoff,
            tail_bound: tail,
        },
    )
}

pub fn r4_point(q: u32, alpha: Complex64, beta: Complex64, g: usize, u: Complex64, cutoff: usize) -> Complex64 {
    qpow(q as f64, -2.0 * (alpha + beta) * g as f64)
        * u.powi(4 * g as i32)
        * mathcal_a_point(q, alpha, beta, u, cutoff).value
        * r4_zeta_point(q, alpha, beta, u)
}

/// The four terms of the ratio recipe for the four-shift average.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRecipe {
    pub terms: [Complex64; 4],
    pub total: Complex64,
    pub certificates: Vec<TailCertificate>,
}

pub fn ratio_recipe(
    q: u32,
    g: usize,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    cutoff: usize,
) -> RatioRecipe {
    let qf = q as f64;
    let one = c64(1.0);
    let z = |s: Complex64| zeta_q(q, s);
    let mut certificates = Vec::new();
    let mut term = |a: Complex64, b: Complex64, name: &str| {
        let av = A4_value(q, a, b, gamma, delta, cutoff);
        certificates.push(av.certificate(name));
        av.value * z(one + 2.0 * a) * z(one + 2.0 * b) * z(one + a + b) * z(one + gamma + delta)
            / (z(one + a + gamma) * z(one + a + delta) * z(one + b + gamma) * z(one + b + delta))
    };
    let gf = g as f64;
    let terms = [
        term(alpha, beta, "A(a,b,c,d)"),
        qpow(qf, -2.0 * gf * alpha) * term(-alpha, beta, "A(-a,b,c,d)"),
        qpow(qf, -2.0 * gf * beta) * term(alpha, -beta, "A(a,-b,c,d)"),
        qpow(qf, -2.0 * gf * (alpha + beta)) * term(-alpha, -beta, "A(-a,-b,c,d)"),
    ];
    RatioRecipe {
        total: terms[0] + terms[1] + terms[2] + terms[3],
        terms,
        certificates,
    }
}
