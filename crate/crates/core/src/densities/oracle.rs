//! Literal double sums used as independent oracles on small cases.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::charsums::jacobi_raw;
use crate::ffpoly::{enumerate_squarefree, FieldSpec, MonicPoly, PrimeList};

use super::{weight, ClassBreakdown};

struct PrimePower {
    f: MonicPoly,
    prime: usize,
    deg_p: usize,
    k: usize,
}

fn prime_powers(fld: &FieldSpec, n: usize) -> Vec<PrimePower> {
    let primes = PrimeList::new(fld, n);
    let mut out = Vec::new();
    for (id, p) in primes.iter().enumerate() {
        let mut f = p.clone();
        for k in 1..=n / p.degree() {
            out.push(PrimePower {
                f: f.clone(),
                prime: id,
                deg_p: p.degree(),
                k,
            });
            f = f.mul(p, fld);
        }
    }
    out
}

/// D-first literal evaluation of the one-level sum.
pub fn one_level_brute(fld: &FieldSpec, g: usize, n: usize, alpha: Complex64) -> Complex64 {
    let pps = prime_powers(fld, n);
    let mut total = Complex64::new(0.0, 0.0);
    let mut count = 0u64;
    for d in enumerate_squarefree(fld, 2 * g + 1) {
        count += 1;
        for pp in &pps {
            let c = jacobi_raw(d.coeffs(), pp.f.coeffs(), fld);
            if c != 0 {
                total += weight(fld.q(), pp.f.degree(), alpha) * (pp.deg_p as f64 * c as f64);
            }
        }
    }
    total / count as f64
}

fn class_of(a: &PrimePower, b: &PrimePower) -> &'static str {
    match (a.k.is_multiple_of(2), b.k.is_multiple_of(2)) {
        (true, true) => "ee",
        (false, true) => "oe",
        (true, false) => "eo",
        (false, false) => {
            if a.prime == b.prime {
                "oo_equal_prime"
            } else if a.deg_p > b.deg_p {
                "oo_distinct_gt"
            } else if a.deg_p < b.deg_p {
                "oo_distinct_lt"
            } else {
                "oo_distinct_eq"
            }
        }
    }
}

/// D-first literal two-level sum with χ_D(f₁f₂) evaluated on the product.
pub fn two_level_brute(
    fld: &FieldSpec,
    g: usize,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
) -> ClassBreakdown {
    let pps = prime_powers(fld, n);
    let mut pairs = Vec::new();
    for a in &pps {
        for b in &pps {
            if a.f.degree() + b.f.degree() <= n {
                pairs.push((a, b, a.f.mul(&b.f, fld)));
            }
        }
    }
    let mut classes: BTreeMap<String, Complex64> = BTreeMap::new();
    let mut count = 0u64;
    for d in enumerate_squarefree(fld, 2 * g + 1) {
        count += 1;
        for (a, b, prod) in &pairs {
            let c = jacobi_raw(d.coeffs(), prod.coeffs(), fld);
            if c == 0 {
                continue;
            }
            let w = weight(fld.q(), a.f.degree(), alpha)
                * weight(fld.q(), b.f.degree(), beta)
                * ((a.deg_p * b.deg_p) as f64 * c as f64);
            *classes.entry(class_of(a, b).to_string()).or_default() += w;
        }
    }
    for v in classes.values_mut() {
        *v /= count as f64;
    }
    ClassBreakdown::from_classes(classes)
}

/// f-first ordering: for each pair, the family sum of χ_D(f₁)χ_D(f₂).
pub fn two_level_brute_f_first(
    fld: &FieldSpec,
    g: usize,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
) -> Complex64 {
    let pps = prime_powers(fld, n);
    let ds: Vec<MonicPoly> = enumerate_squarefree(fld, 2 * g + 1).collect();
    let chis: Vec<Vec<i8>> = pps
        .iter()
        .map(|pp| ds.iter().map(|d| jacobi_raw(d.coeffs(), pp.f.coeffs(), fld)).collect())
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for (i, a) in pps.iter().enumerate() {
        for (j, b) in pps.iter().enumerate() {
            if a.f.degree() + b.f.degree() > n {
                continue;
            }
            let s: i64 = chis[i]
                .iter()
                .zip(&chis[j])
                .map(|(&x, &y)| (x * y) as i64)
                .sum();
            total += weight(fld.q(), a.f.degree(), alpha)
                * weight(fld.q(), b.f.degree(), beta)
                * ((a.deg_p * b.deg_p) as f64 * s as f64);
        }
    }
    total / ds.len() as f64
}
