//! One-swap (Type-I) pieces: 𝓐_2, the degree-truncated 𝓣_2 with its tail
//! term, R_2 + R_3, and the J-building blocks they recombine from.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::primes::{c64, log_zeta_series, prime_count, qpow};
use super::series::PowerSeries;
use super::LAURENT_DEPTH;
use crate::error::{Error, Result};

/// Reading of the scalar that replaces Σ_{d(P)≥g} |P|^{−1−β+α} in 𝓣_2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TailVariant {
    /// +q^{g(α−β)}/(q^{α−β}−1), as printed.
    Paper,
    /// q^{g(α−β)}/(1−q^{α−β}), the geometric series value.
    Geometric,
}

impl TailVariant {
    pub const ALL: [TailVariant; 2] = [TailVariant::Paper, TailVariant::Geometric];

    pub fn name(self) -> &'static str {
        match self {
            TailVariant::Paper => "paper",
            TailVariant::Geometric => "geometric",
        }
    }
}

impl std::str::FromStr for TailVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(TailVariant::Paper),
            "geometric" => Ok(TailVariant::Geometric),
            _ => Err(Error::Config(format!("unknown tail variant {s:?}"))),
        }
    }
}

/// Denominator of the second prime sum in J_{2,>}^{oo}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OoReading {
    /// (|Q|^{1+2β} − u^{2d(Q)}), carried over from the J^{oo♭} computation.
    Derived,
    /// (|Q|^{1+2β} − 1) as printed in the combined formula.
    Printed,
}

const POLE_TOL: f64 = 1e-9;

fn pole_check(what: &str, d: Complex64) -> Result<()> {
    if d.norm() < POLE_TOL {
        Err(Error::Numerical(format!("{what}: pole proximity |{:.3e}|", d.norm())))
    } else {
        Ok(())
    }
}

pub fn tail_term(q: u32, alpha: Complex64, beta: Complex64, g: usize, variant: TailVariant) -> Result<Complex64> {
    let qf = q as f64;
    let r = qpow(qf, alpha - beta);
    pole_check("tail term at alpha = beta", r - 1.0)?;
    let top = qpow(qf, (alpha - beta) * g as f64);
    Ok(match variant {
        TailVariant::Paper => top / (r - 1.0),
        TailVariant::Geometric => top / (1.0 - r),
    })
}

/// 𝓐_2(u,α) = u²/(u²−q^{2α}) + 1/(q−1).
#[allow(non_snake_case)]
pub fn A2_factor(q: u32, u: Complex64, alpha: Complex64) -> Result<Complex64> {
    let d = u * u - qpow(q as f64, 2.0 * alpha);
    pole_check("A2 factor", d)?;
    Ok(u * u / d + 1.0 / (q as f64 - 1.0))
}

/// 𝓐_2(u,α) = 1/(q−1) − Σ_{k≥1} q^{−2kα}u^{2k} as a power series.
#[allow(non_snake_case)]
pub fn A2_series(q: u32, alpha: Complex64, order: i64) -> PowerSeries {
    PowerSeries::monomial(0, c64(1.0 / (q as f64 - 1.0)), order).sub(&log_zeta_series(q, alpha, order))
}

/// Numerator constants of the 𝓣_2 summand at degree n: the u^{4n} part
/// (|P|^{2(1−α)} − |P|^{1−2α} − |P|^{2−3α+β}) and the u^{2n} part |P|^{2−α+β}.
pub fn t2_numerator(q: u32, n: usize, alpha: Complex64, beta: Complex64) -> (Complex64, Complex64) {
    let big = (q as f64).powi(n as i32);
    let a = qpow(big, 2.0 - 2.0 * alpha) - qpow(big, 1.0 - 2.0 * alpha) - qpow(big, 2.0 - 3.0 * alpha + beta);
    (a, qpow(big, 2.0 - alpha + beta))
}

/// Truncated 𝓣_2(u,α,β): primes of degree < g, expanded as a Laurent series on an
/// annulus q^{−(1−α)} < |u| < q^{(1+2β)/2}, plus the tail scalar.
#[allow(non_snake_case)]
pub fn T2_series(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    order: i64,
    variant: TailVariant,
) -> Result<PowerSeries> {
    let lo = -LAURENT_DEPTH;
    let mut coeffs = vec![c64(0.0); (order - lo + 1) as usize];
    for n in 1..g {
        let big = (q as f64).powi(n as i32);
        let w = n as f64 * prime_count(q, n);
        let (a, b) = t2_numerator(q, n, alpha, beta);
        let rx = qpow(big, -(2.0 - 2.0 * alpha));
        let ry = qpow(big, -(1.0 + 2.0 * beta));
        let step = 2 * n as i64;
        let kmax = (2 * step - lo) / step + 1;
        for (num, base) in [(a, 2 * step), (b, step)] {
            let mut pk = rx;
            for k in 1..=kmax {
                let mut pl = ry;
                let mut e = base - k * step;
                while e <= order {
                    if e >= lo {
                        coeffs[(e - lo) as usize] += w * num * pk * pl;
                    }
                    pl *= ry;
                    e += step;
                }
                pk *= rx;
            }
        }
    }
    coeffs[(-lo) as usize] += tail_term(q, alpha, beta, g, variant)?;
    Ok(PowerSeries::from_coeffs(lo, coeffs))
}

/// Pointwise value of the truncated 𝓣_2(u,α,β).
pub fn t2_point(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    u: Complex64,
    variant: TailVariant,
) -> Result<Complex64> {
    let mut s = tail_term(q, alpha, beta, g, variant)?;
    for n in 1..g {
        let big = (q as f64).powi(n as i32);
        let x = u.powi(2 * n as i32);
        let (a, b) = t2_numerator(q, n, alpha, beta);
        let d1 = qpow(big, 2.0 - 2.0 * alpha) * x - 1.0;
        let d2 = qpow(big, 1.0 + 2.0 * beta) - x;
        pole_check("T2 summand", d1 * d2)?;
        s += n as f64 * prime_count(q, n) * x * (a * x + b) / (d1 * d2);
    }
    Ok(s)
}

/// R_2 + R_3 = q^{−2gα}u^{2g}𝓐_2(u,α)𝓣_2(u,α,β) + (α ↔ β).
#[allow(non_snake_case)]
pub fn R23_series(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    order: i64,
    variant: TailVariant,
) -> Result<PowerSeries> {
    let half = |a: Complex64, b: Complex64| -> Result<PowerSeries> {
        let t2 = T2_series(q, a, b, g, order, variant)?;
        let a2 = A2_series(q, a, order + LAURENT_DEPTH);
        Ok(a2
            .mul(&t2)
            .shift(2 * g as i64)
            .truncate(order)
            .scale(qpow(q as f64, -2.0 * a * g as f64)))
    };
    Ok(half(alpha, beta)?.add(&half(beta, alpha)?))
}

pub fn r23_point(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    u: Complex64,
    variant: TailVariant,
) -> Result<Complex64> {
    let half = |a: Complex64, b: Complex64| -> Result<Complex64> {
        Ok(swap_prefactor(q, a, g, u)? * t2_point(q, a, b, g, u, variant)?)
    };
    Ok(half(alpha, beta)? + half(beta, alpha)?)
}

/// q^{−2gα}u^{2g}𝓐_2(u,α).
fn swap_prefactor(q: u32, alpha: Complex64, g: usize, u: Complex64) -> Result<Complex64> {
    Ok(qpow(q as f64, -2.0 * alpha * g as f64) * u.powi(2 * g as i32) * A2_factor(q, u, alpha)?)
}

/// J_2^{oe}(u,α,β): f₁ an odd power of P, f₂ an even power of Q ≠ P.
pub fn j2_oe(q: u32, alpha: Complex64, beta: Complex64, g: usize, u: Complex64) -> Result<Complex64> {
    let mut s = c64(0.0);
    for n in 1..g {
        let big = (q as f64).powi(n as i32);
        let x = u.powi(2 * n as i32);
        let num = (qpow(big, 2.0 - 2.0 * alpha) - qpow(big, 1.0 - 2.0 * alpha)) * x * x;
        let den = (qpow(big, 2.0 - 2.0 * alpha) * x - 1.0) * (qpow(big, 1.0 + 2.0 * beta) - x);
        s += n as f64 * prime_count(q, n) * num / den;
    }
    Ok(swap_prefactor(q, alpha, g, u)? * s)
}

/// J_{2,>}^{oo}(u,α,β): odd powers of P ≠ Q with d(P) > d(Q).
pub fn j2_oo_gt(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    u: Complex64,
    reading: OoReading,
) -> Result<Complex64> {
    let qf = q as f64;
    let mut s = c64(0.0);
    for n in 1..g {
        let big = qf.powi(n as i32);
        let w = n as f64 * prime_count(q, n);
        let x = u.powi(2 * n as i32);
        let gap = qpow(big, 1.0 + 2.0 * beta) - x;
        let gap2 = match reading {
            OoReading::Derived => gap,
            OoReading::Printed => qpow(big, 1.0 + 2.0 * beta) - 1.0,
        };
        let d1 = qpow(big, 2.0 - 2.0 * alpha) * x - 1.0;
        s += w * x / (qpow(big, 1.0 - alpha + beta) * gap);
        s += w * (qpow(big, alpha + beta) - qpow(big, 2.0 - 3.0 * alpha + beta) * x * x) / (d1 * gap2);
        s += w / qpow(big, 1.0 - alpha + beta);
    }
    let u2 = u * u;
    let d = (u2 - qpow(qf, 2.0 * alpha)) * (u2 - qpow(qf, alpha + beta));
    pole_check("J oo cross term", d)?;
    let cross = qpow(qf, -(alpha + beta) * g as f64) * u.powi(2 * g as i32) * qpow(qf, alpha + beta) * u2 / d;
    Ok(swap_prefactor(q, alpha, g, u)? * s - cross)
}

/// J_{2,=}^{oo}(u,α,β): odd powers of distinct primes of equal degree.
pub fn j2_oo_eq(q: u32, alpha: Complex64, beta: Complex64, g: usize, u: Complex64) -> Result<Complex64> {
    let qf = q as f64;
    let u2 = u * u;
    let d = u2 - qpow(qf, alpha + beta);
    pole_check("J oo equal-degree term", d)?;
    Ok(qpow(qf, -(alpha + beta) * g as f64) * u.powi(2 * g as i32) * (u2 / d + 1.0 / (qf - 1.0)))
}

/// J^{oe} + J^{eo} + J_{>}^{oo} + J_{<}^{oo} + J_{=}^{oo}.
pub fn type_i_recombined(
    q: u32,
    alpha: Complex64,
    beta: Complex64,
    g: usize,
    u: Complex64,
    reading: OoReading,
) -> Result<Complex64> {
    Ok(j2_oe(q, alpha, beta, g, u)?
        + j2_oe(q, beta, alpha, g, u)?
        + j2_oo_gt(q, alpha, beta, g, u, reading)?
        + j2_oo_gt(q, beta, alpha, g, u, reading)?
        + j2_oo_eq(q, alpha, beta, g, u)?)
}
