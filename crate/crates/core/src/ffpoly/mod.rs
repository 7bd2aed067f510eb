//! Monic polynomials over F_q: arithmetic, enumeration, factorization and
//! the arithmetic functions Λ, μ, φ.

mod factor;
mod field;
mod poly;

use serde::{Deserialize, Serialize};

pub use factor::{
    distinct_degree, factorize, factorize_with_seed, is_irreducible, squarefree_decomposition,
    Factorization, DEFAULT_FACTOR_SEED,
};
pub use field::FieldSpec;
pub use poly::{rem_coeffs, Coeffs, MonicPoly, Poly};

use crate::error::{Error, Result};

/// Iterator over monic polynomials of a fixed degree in enumeration order,
/// restricted to an index range.
pub struct MonicIter {
    q: u32,
    cur: Coeffs,
    pos: u64,
    end: u64,
}

impl Iterator for MonicIter {
    type Item = MonicPoly;

    fn next(&mut self) -> Option<MonicPoly> {
        if self.pos >= self.end {
            return None;
        }
        let out = MonicPoly::from_poly_unchecked(Poly::from_raw(self.cur.clone()));
        self.pos += 1;
        let n = self.cur.len() - 1;
        for i in 0..n {
            self.cur[i] += 1;
            if self.cur[i] < self.q {
                break;
            }
            self.cur[i] = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.end - self.pos) as usize;
        (r, Some(r))
    }
}

pub fn monic_count(fld: &FieldSpec, n: usize) -> u64 {
    (fld.q() as u64).pow(n as u32)
}

/// All q^n monic polynomials of degree n, constant term fastest.
pub fn enumerate_monic(fld: &FieldSpec, n: usize) -> MonicIter {
    enumerate_monic_range(fld, n, 0, monic_count(fld, n))
}

/// Indices `start..end` of the degree-n enumeration, for chunked processing.
pub fn enumerate_monic_range(fld: &FieldSpec, n: usize, start: u64, end: u64) -> MonicIter {
    let end = end.min(monic_count(fld, n));
    let first = MonicPoly::from_index(fld, n, start.min(end));
    MonicIter {
        q: fld.q(),
        cur: first.coeffs().iter().copied().collect(),
        pos: start.min(end),
        end,
    }
}

/// The squarefree monic polynomials of degree n (the family H_n).
pub fn enumerate_squarefree(fld: &FieldSpec, n: usize) -> impl Iterator<Item = MonicPoly> + '_ {
    enumerate_monic(fld, n).filter(move |f| f.is_squarefree(fld))
}

pub fn enumerate_squarefree_range(
    fld: &FieldSpec,
    n: usize,
    start: u64,
    end: u64,
) -> impl Iterator<Item = MonicPoly> + '_ {
    enumerate_monic_range(fld, n, start, end).filter(move |f| f.is_squarefree(fld))
}

/// |H_n|: q^n − q^{n−1} for n ≥ 2, q^n otherwise.
pub fn squarefree_count(fld: &FieldSpec, n: usize) -> u64 {
    let q = fld.q() as u64;
    if n < 2 {
        q.pow(n as u32)
    } else {
        q.pow(n as u32) - q.pow(n as u32 - 1)
    }
}

/// All monic irreducibles of degree n in enumeration order.
pub fn enumerate_irreducible(fld: &FieldSpec, n: usize) -> Vec<MonicPoly> {
    enumerate_monic(fld, n)
        .filter(|f| is_irreducible(f, fld))
        .collect()
}

/// Monic irreducibles grouped by degree 1..=max_degree.
#[derive(Clone, Debug)]
pub struct PrimeList {
    by_degree: Vec<Vec<MonicPoly>>,
}

impl PrimeList {
    pub fn new(fld: &FieldSpec, max_degree: usize) -> Self {
        PrimeList {
            by_degree: (1..=max_degree)
                .map(|n| enumerate_irreducible(fld, n))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len()
    }

    pub fn of_degree(&self, n: usize) -> &[MonicPoly] {
        &self.by_degree[n - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &MonicPoly> {
        self.by_degree.iter().flatten()
    }
}

/// Λ(f): d(P) if f = P^k, else 0.
pub fn von_mangoldt(f: &MonicPoly, fld: &FieldSpec) -> Result<u32> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let parts = squarefree_decomposition(f, fld);
    if parts.len() != 1 {
        return Ok(0);
    }
    let p = MonicPoly::from_poly_unchecked(parts[0].0.clone());
    Ok(if is_irreducible(&p, fld) {
        p.degree() as u32
    } else {
        0
    })
}

pub fn mobius(f: &MonicPoly, fld: &FieldSpec) -> i8 {
    if f.degree() == 0 {
        return 1;
    }
    if !f.is_squarefree(fld) {
        return 0;
    }
    let k: usize = distinct_degree(f.poly(), fld)
        .iter()
        .map(|(g, d)| g.degree().unwrap() / d)
        .sum();
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// φ(P^j) = |P|^j − |P|^{j−1}.
pub fn euler_phi_primepower(p: &MonicPoly, j: u32, fld: &FieldSpec) -> Result<u128> {
    if j == 0 {
        return Err(Error::InvalidArgument("j must be positive".into()));
    }
    if !is_irreducible(p, fld) {
        return Err(Error::NotIrreducible);
    }
    let n = p.norm(fld);
    Ok(n.pow(j) - n.pow(j - 1))
}

fn int_mobius(mut n: u32) -> i64 {
    let mut k = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// π_q(n) = (1/n) Σ_{d|n} μ(d) q^{n/d}.
pub fn irreducible_count(fld: &FieldSpec, n: u32) -> u128 {
    assert!(n >= 1);
    let q = fld.q() as i128;
    let s: i128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| int_mobius(d) as i128 * q.pow(n / d))
        .sum();
    (s / n as i128) as u128
}

/// π_q(n) for n = 1..=max_degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeCountTable {
    pub q: u32,
    /// pi[n-1] = π_q(n)
    pub pi: Vec<u128>,
}

impl DegreeCountTable {
    pub fn new(fld: &FieldSpec, max_degree: u32) -> Self {
        DegreeCountTable {
            q: fld.q(),
            pi: (1..=max_degree).map(|n| irreducible_count(fld, n)).collect(),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.pi.len() as u32
    }

    pub fn pi(&self, n: u32) -> u128 {
        self.pi[n as usize - 1]
    }

    /// Σ_{d|n} d π(d); equals q^n.
    pub fn prime_power_degree_sum(&self, n: u32) -> u128 {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| d as u128 * self.pi(d))
            .sum()
    }
}
