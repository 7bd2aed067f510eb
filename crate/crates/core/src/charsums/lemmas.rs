use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffpoly::{
    enumerate_irreducible, enumerate_monic, enumerate_squarefree, factorize, FieldSpec, MonicPoly,
    Poly,
};

use super::gauss::GaussTable;
use super::symbol::jacobi_raw;
use super::table::{char_table, residue_index};

/// χ_f(h) = (f/h), with χ_f(1) = 1.
fn chi_f(f: &MonicPoly, h: &MonicPoly, fld: &FieldSpec) -> i8 {
    if h.degree() == 0 {
        1
    } else {
        jacobi_raw(f.coeffs(), h.coeffs(), fld)
    }
}

/// Σ_{h ∈ M_m} χ_f(h) by enumeration.
pub fn monic_char_sum(f: &MonicPoly, m: usize, fld: &FieldSpec) -> i64 {
    enumerate_monic(fld, m)
        .map(|h| chi_f(f, &h, fld) as i64)
        .sum()
}

/// Dual side of the Poisson summation formula for Σ_{h ∈ M_m} χ_f(h).
pub fn poisson_char_sum(f: &MonicPoly, m: usize, fld: &FieldSpec) -> Result<Complex64> {
    let table = GaussTable::new(f, fld)?;
    Ok(poisson_with_table(&table, f, m, fld))
}

fn sum_monic_upto(table: &GaussTable, k: i64, fld: &FieldSpec) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for d in 0..=k {
        s += sum_monic_deg(table, d, fld);
    }
    s
}

fn sum_monic_deg(table: &GaussTable, d: i64, fld: &FieldSpec) -> Complex64 {
    if d < 0 {
        return Complex64::new(0.0, 0.0);
    }
    enumerate_monic(fld, d as usize)
        .map(|v| table.get(v.poly(), fld))
        .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
}

pub fn poisson_with_table(table: &GaussTable, f: &MonicPoly, m: usize, fld: &FieldSpec) -> Complex64 {
    let n = f.degree() as i64;
    let m_i = m as i64;
    let q = fld.q() as f64;
    let norm = q.powi(n as i32);
    if n % 2 == 0 {
        let g0 = table.get(&Poly::zero(), fld);
        let a = sum_monic_upto(table, n - m_i - 2, fld);
        let b = sum_monic_upto(table, n - m_i - 1, fld);
        (g0 + a * q - b) * (q.powi(m as i32) / norm)
    } else {
        sum_monic_deg(table, n - m_i - 1, fld) * (q.powf(m as f64 + 0.5) / norm)
    }
}

/// Number of C | f^∞ of each degree 0..=max_deg.
fn smooth_counts(f: &MonicPoly, max_deg: usize, fld: &FieldSpec) -> Result<Vec<u64>> {
    let fx = factorize(f, fld)?;
    let mut counts = vec![0u64; max_deg + 1];
    counts[0] = 1;
    for (p, _) in &fx.factors {
        let d = p.degree();
        // multiply the generating polynomial by 1/(1 - x^d)
        for k in d..=max_deg {
            counts[k] += counts[k - d];
        }
    }
    Ok(counts)
}

/// Both sides of the squarefree-to-monic decomposition of Σ_{D ∈ H_{2g+1}} χ_D(f).
pub fn squarefree_char_sum_decomposition(
    f: &MonicPoly,
    g: usize,
    fld: &FieldSpec,
) -> Result<(i64, i64)> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lhs: i64 = enumerate_squarefree(fld, 2 * g + 1)
        .map(|d| jacobi_raw(d.coeffs(), f.coeffs(), fld) as i64)
        .sum();
    let counts = smooth_counts(f, g, fld)?;
    let q = fld.q() as i64;
    let s = |k: i64| -> i64 {
        if k < 0 {
            0
        } else {
            monic_char_sum(f, k as usize, fld)
        }
    };
    let mut rhs = 0i64;
    for (c, &cnt) in counts.iter().enumerate() {
        if cnt == 0 {
            continue;
        }
        let c = c as i64;
        let g = g as i64;
        rhs += cnt as i64 * (s(2 * g + 1 - 2 * c) - q * s(2 * g - 1 - 2 * c));
    }
    Ok((lhs, rhs))
}

/// Family average of χ_D(f²) over H_{2g+1} and the product ∏_{P|f}(1 − 1/(|P|+1)).
pub fn average_chi_square(f: &MonicPoly, g: usize, fld: &FieldSpec) -> Result<(f64, f64)> {
    let f2 = f.pow(2, fld);
    let mut n = 0u64;
    let mut s = 0i64;
    for d in enumerate_squarefree(fld, 2 * g + 1) {
        n += 1;
        if f.degree() > 0 {
            s += jacobi_raw(d.coeffs(), f2.coeffs(), fld) as i64;
        } else {
            s += 1;
        }
    }
    let prod = if f.degree() == 0 {
        1.0
    } else {
        factorize(f, fld)?
            .factors
            .iter()
            .map(|(p, _)| {
                let np = p.norm(fld) as f64;
                1.0 - 1.0 / (np + 1.0)
            })
            .product()
    };
    Ok((s as f64 / n as f64, prod))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub label: String,
    pub value: f64,
    pub bound: f64,
}

impl BoundCheck {
    pub fn ok(&self) -> bool {
        self.value <= self.bound
    }
}

/// |Σ_{D ∈ H_{2g+1}} χ_D(P)| against c·|P|^{1/2} for every prime P of degree ≤ max_deg.
pub fn polya_vinogradov_checks(
    g: usize,
    max_deg: usize,
    c: f64,
    fld: &FieldSpec,
) -> Vec<BoundCheck> {
    let ds: Vec<MonicPoly> = enumerate_squarefree(fld, 2 * g + 1).collect();
    let mut out = Vec::new();
    for n in 1..=max_deg {
        for p in enumerate_irreducible(fld, n) {
            let s: i64 = if n <= 2 * g + 1 {
                let t = char_table(&p, fld);
                ds.iter()
                    .map(|d| t[residue_index(&d.poly().rem(p.poly(), fld), fld)] as i64)
                    .sum()
            } else {
                ds.iter()
                    .map(|d| jacobi_raw(d.coeffs(), p.coeffs(), fld) as i64)
                    .sum()
            };
            out.push(BoundCheck {
                label: format!("g={g} P={p}"),
                value: s.unsigned_abs() as f64,
                bound: c * (p.norm(fld) as f64).sqrt(),
            });
        }
    }
    out
}

/// Σ_{P ∈ P_n} χ_V(P).
pub fn prime_char_sum(v: &MonicPoly, primes: &[MonicPoly], fld: &FieldSpec) -> i64 {
    if v.degree() == 0 {
        return primes.len() as i64;
    }
    let t = char_table(v, fld);
    primes
        .iter()
        .map(|p| t[residue_index(&p.poly().rem(v.poly(), fld), fld)] as i64)
        .sum()
}

pub fn is_perfect_square(v: &MonicPoly, fld: &FieldSpec) -> bool {
    v.degree() == 0
        || factorize(v, fld)
            .map(|fx| fx.factors.iter().all(|(_, m)| m % 2 == 0))
            .unwrap_or(false)
}

/// Weil bound |Σ_{P∈P_n} χ_V(P)| ≤ c·d(V)·q^{n/2}/n for every non-square V of degree ≤ max_v.
pub fn weil_checks(max_v: usize, max_n: usize, c: f64, fld: &FieldSpec) -> Vec<BoundCheck> {
    let primes: Vec<Vec<MonicPoly>> = (1..=max_n).map(|n| enumerate_irreducible(fld, n)).collect();
    let q = fld.q() as f64;
    let mut out = Vec::new();
    for dv in 1..=max_v {
        for v in enumerate_monic(fld, dv) {
            if is_perfect_square(&v, fld) {
                continue;
            }
            for n in 1..=max_n {
                let s = prime_char_sum(&v, &primes[n - 1], fld);
                out.push(BoundCheck {
                    label: format!("V={v} n={n}"),
                    value: s.unsigned_abs() as f64,
                    bound: c * dv as f64 * q.powf(n as f64 / 2.0) / n as f64,
                });
            }
        }
    }
    out
}
