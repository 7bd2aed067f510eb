//! L-polynomials L(u, χ_D) for D ∈ H_{2g+1}: coefficients, the coefficients
//! of u L'/L, zeros and the functional equation.

mod family;
mod realroots;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::charsums::jacobi_raw;
use crate::error::{Error, Result};
use crate::ffpoly::{enumerate_monic, FieldSpec, MonicPoly, PrimeList};

pub use family::LFamily;
pub use realroots::real_roots_with_multiplicity;

pub const RH_ALARM: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LPolynomial {
    pub q: u32,
    pub genus: usize,
    /// c_0..c_{2g}
    pub coeffs: Vec<i64>,
}

impl LPolynomial {
    /// No invariants checked; see `functional_equation_defect`.
    pub fn from_coeffs(q: u32, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument("need 2g+1 coefficients".into()));
        }
        Ok(LPolynomial {
            q,
            genus: (coeffs.len() - 1) / 2,
            coeffs,
        })
    }

    /// Builds c_{g+1}..c_{2g} from c_0..c_g via the functional equation.
    pub fn from_low_half(q: u32, low: &[i64]) -> Self {
        let g = low.len() - 1;
        let mut coeffs = low.to_vec();
        for n in g + 1..=2 * g {
            coeffs.push((q as i64).pow((n - g) as u32) * low[2 * g - n]);
        }
        LPolynomial { q, genus: g, coeffs }
    }

    pub fn coeffs_complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|&c| Complex64::new(c as f64, 0.0)).collect()
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c as f64)
    }

    /// The monic integer polynomial S with L(u) = u^g S(qu + 1/u).
    pub fn trace_polynomial(&self) -> Vec<i128> {
        let g = self.genus;
        let q = self.q as i128;
        // E_0 = 2, E_1 = t, E_{k+1} = t E_k − q E_{k−1}
        let mut e: Vec<Vec<i128>> = vec![vec![2], vec![0, 1]];
        for k in 1..g {
            let mut next = vec![0i128; k + 2];
            for (i, &c) in e[k].iter().enumerate() {
                next[i + 1] += c;
            }
            for (i, &c) in e[k - 1].iter().enumerate() {
                next[i] -= q * c;
            }
            e.push(next);
        }
        let mut s = vec![0i128; g + 1];
        s[0] = self.coeffs[g] as i128;
        for k in 1..=g {
            let c = self.coeffs[g - k] as i128;
            for (i, &v) in e[k].iter().enumerate() {
                s[i] += c * v;
            }
        }
        s
    }
}

/// c_n = Σ_{f ∈ M_n} χ_D(f) for n = 0..2g by direct summation.
pub fn l_polynomial(d: &MonicPoly, fld: &FieldSpec) -> Result<LPolynomial> {
    let deg = d.degree();
    if deg.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "discriminant degree {deg} is even"
        )));
    }
    if !d.is_squarefree(fld) {
        return Err(Error::NotSquarefree);
    }
    let g = (deg - 1) / 2;
    let mut coeffs = vec![1i64];
    for n in 1..=2 * g {
        coeffs.push(
            enumerate_monic(fld, n)
                .map(|f| jacobi_raw(d.coeffs(), f.coeffs(), fld) as i64)
                .sum(),
        );
    }
    Ok(LPolynomial {
        q: fld.q(),
        genus: g,
        coeffs,
    })
}

/// max_n |c_{2g−n} − q^{g−n} c_n| over n ≤ g (the relation for n > g is the same pairs).
pub fn functional_equation_defect(l: &LPolynomial) -> f64 {
    let g = l.genus;
    let q = l.q as i128;
    (0..=g)
        .map(|n| {
            let lhs = l.coeffs[2 * g - n] as i128;
            let rhs = q.pow((g - n) as u32) * l.coeffs[n] as i128;
            (lhs - rhs).unsigned_abs() as f64
        })
        .fold(0.0, f64::max)
}

/// a_1..a_N of u L'/L by the Newton recurrence a_n = n c_n − Σ_{k<n} a_k c_{n−k}.
pub fn lambda_coefficients(l: &LPolynomial, n_max: usize) -> Vec<i64> {
    let c = |n: usize| -> i64 { l.coeffs.get(n).copied().unwrap_or(0) };
    let mut a = vec![0i64; n_max + 1];
    for n in 1..=n_max {
        let mut v = n as i64 * c(n);
        for k in 1..n {
            v -= a[k] * c(n - k);
        }
        a[n] = v;
    }
    a.remove(0);
    a
}

/// a_n = Σ_{d | n} d Σ_{P ∈ P_d} χ_D(P)^{n/d}, directly over prime powers.
pub fn lambda_coefficients_direct(
    d: &MonicPoly,
    n_max: usize,
    primes: &PrimeList,
    fld: &FieldSpec,
) -> Result<Vec<i64>> {
    if primes.max_degree() < n_max {
        return Err(Error::InvalidArgument("prime list too short".into()));
    }
    let mut s = vec![0i64; n_max + 1];
    let mut e = vec![0i64; n_max + 1];
    for m in 1..=n_max {
        for p in primes.of_degree(m) {
            let c = jacobi_raw(d.coeffs(), p.coeffs(), fld) as i64;
            s[m] += c;
            e[m] += c * c;
        }
    }
    Ok((1..=n_max)
        .map(|n| {
            (1..=n)
                .filter(|m| n % m == 0)
                .map(|m| m as i64 * if (n / m) % 2 == 1 { s[m] } else { e[m] })
                .sum()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    pub zeros: Vec<Complex64>,
}

impl ZeroSet {
    /// Coefficients of ∏ (1 − u/u_j).
    pub fn expand(&self) -> Vec<Complex64> {
        let mut p = vec![Complex64::new(1.0, 0.0)];
        for z in &self.zeros {
            let r = -z.inv();
            let mut next = vec![Complex64::new(0.0, 0.0); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c * r;
            }
            p = next;
        }
        p
    }

    /// max_j | |u_j| − q^{−1/2} |.
    pub fn rh_defect(&self, q: u32) -> f64 {
        let r = (q as f64).powf(-0.5);
        self.zeros
            .iter()
            .map(|z| (z.norm() - r).abs())
            .fold(0.0, f64::max)
    }

    /// a_n = −Σ_j u_j^{−n}.
    pub fn lambda_coefficients(&self, n_max: usize) -> Vec<Complex64> {
        (1..=n_max)
            .map(|n| {
                -self
                    .zeros
                    .iter()
                    .map(|z| z.inv().powi(n as i32))
                    .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
            })
            .collect()
    }
}

/// All 2g zeros. The trace polynomial S(t) is certified real-rooted by an
/// exact Sturm count; each real root t gives u = (t ± i√(4q − t²))/(2q).
pub fn zeros(l: &LPolynomial) -> Result<ZeroSet> {
    let q = l.q as f64;
    let s = l.trace_polynomial();
    let roots = real_roots_with_multiplicity(&s)
        .ok_or_else(|| Error::Numerical("trace polynomial has a non-real root".into()))?;
    let mut zs = Vec::with_capacity(2 * l.genus);
    for (t, m) in roots {
        let mut disc = 4.0 * q - t * t;
        // t = ±2√q up to rounding: a double zero on the real axis
        if disc < 0.0 && disc > -1e-9 * q {
            disc = 0.0;
        }
        let (z1, z2) = if disc >= 0.0 {
            let im = disc.sqrt() / (2.0 * q);
            (
                Complex64::new(t / (2.0 * q), im),
                Complex64::new(t / (2.0 * q), -im),
            )
        } else {
            let r = (-disc).sqrt();
            (
                Complex64::new((t + r) / (2.0 * q), 0.0),
                Complex64::new((t - r) / (2.0 * q), 0.0),
            )
        };
        for _ in 0..m {
            zs.push(z1);
            zs.push(z2);
        }
    }
    let set = ZeroSet { zeros: zs };
    let defect = set.rh_defect(l.q);
    if defect > RH_ALARM {
        return Err(Error::Numerical(format!(
            "zero off the critical circle by {defect:e}"
        )));
    }
    Ok(set)
}
