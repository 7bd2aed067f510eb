use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use super::poly::{MonicPoly, Poly};
use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub factors: Vec<(MonicPoly, u32)>,
    pub unit: u32,
}

impl Factorization {
    pub fn rebuild(&self, fld: &FieldSpec) -> Poly {
        let mut r = Poly::constant(self.unit);
        for (p, m) in &self.factors {
            r = r.mul(&p.pow(*m, fld).into_poly(), fld);
        }
        r
    }

    pub fn distinct(&self) -> usize {
        self.factors.len()
    }
}

/// p-th root of a polynomial whose derivative vanishes (a^p = a in F_p).
fn pth_root(f: &Poly, fld: &FieldSpec) -> Poly {
    let p = fld.q() as usize;
    Poly::from_raw(f.coeffs().iter().step_by(p).copied().collect())
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime squarefree parts with multiplicities.
pub fn squarefree_decomposition(f: &MonicPoly, fld: &FieldSpec) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    sqf_rec(f.poly(), 1, fld, &mut out);
    out
}

fn sqf_rec(f: &Poly, mult: u32, fld: &FieldSpec, out: &mut Vec<(Poly, u32)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let df = f.derivative(fld);
    let mut c = f.gcd(&df, fld);
    let mut w = f.divrem(&c, fld).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c, fld);
        let z = w.divrem(&y, fld).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i * mult));
        }
        i += 1;
        c = c.divrem(&y, fld).0;
        w = y;
    }
    if c.degree().unwrap_or(0) > 0 {
        sqf_rec(&pth_root(&c, fld), mult * fld.q(), fld, out);
    }
}

/// Distinct-degree splitting of a squarefree monic g: (product of its degree-i factors, i).
pub fn distinct_degree(g: &Poly, fld: &FieldSpec) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut g = g.clone();
    let x = Poly::x();
    let mut h = x.rem(&g, fld);
    let mut i = 1;
    while g.degree().unwrap_or(0) >= 2 * i {
        h = h.powmod(fld.q() as u128, &g, fld);
        let d = h.sub(&x, fld).gcd(&g, fld);
        if d.degree().unwrap_or(0) > 0 {
            g = g.divrem(&d, fld).0;
            h = h.rem(&g, fld);
            out.push((d, i));
        }
        i += 1;
    }
    if let Some(n) = g.degree().filter(|&n| n > 0) {
        out.push((g, n));
    }
    out
}

fn equal_degree(g: &Poly, d: usize, fld: &FieldSpec, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.clone());
        return;
    }
    let e = ((fld.q() as u128).pow(d as u32) - 1) / 2;
    let one = Poly::constant(1);
    loop {
        let a = Poly::from_raw((0..n).map(|_| rng.gen_range(0..fld.q())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.powmod(e, g, fld).sub(&one, fld);
        let h = b.gcd(g, fld);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let other = g.divrem(&h, fld).0;
            equal_degree(&h, d, fld, rng, out);
            equal_degree(&other, d, fld, rng, out);
            return;
        }
    }
}

pub fn factorize(f: &MonicPoly, fld: &FieldSpec) -> Result<Factorization> {
    factorize_with_seed(f, fld, DEFAULT_FACTOR_SEED)
}

/// Complete factorization. Factors sorted by degree then enumeration order.
pub fn factorize_with_seed(f: &MonicPoly, fld: &FieldSpec, seed: u64) -> Result<Factorization> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, m) in squarefree_decomposition(f, fld) {
        for (g, d) in distinct_degree(&part, fld) {
            let mut irr = Vec::new();
            equal_degree(&g, d, fld, &mut rng, &mut irr);
            factors.extend(irr.into_iter().map(|p| (MonicPoly::from_poly_unchecked(p), m)));
        }
    }
    factors.sort();
    Ok(Factorization { factors, unit: 1 })
}

/// Ben-Or irreducibility test.
pub fn is_irreducible(f: &MonicPoly, fld: &FieldSpec) -> bool {
    let n = f.degree();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let g = f.poly();
    if g.coeff(0) == 0 {
        return false;
    }
    let x = Poly::x();
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.powmod(fld.q() as u128, g, fld);
        if h.sub(&x, fld).gcd(g, fld).degree() != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f = FieldSpec::new(5).unwrap();
        let x2 = MonicPoly::new(&f, &[0, 0, 1]).unwrap();
        let fx = factorize(&x2, &f).unwrap();
        assert_eq!(fx.factors, vec![(MonicPoly::x(), 2)]);

        let x2p1 = MonicPoly::new(&f, &[1, 0, 1]).unwrap();
        let fx = factorize(&x2p1, &f).unwrap();
        assert_eq!(
            fx.factors,
            vec![
                (MonicPoly::new(&f, &[2, 1]).unwrap(), 1),
                (MonicPoly::new(&f, &[3, 1]).unwrap(), 1)
            ]
        );

        // x^2 + 2 has no root mod 5 (-2 = 3 is a non-residue)
        let irr = MonicPoly::new(&f, &[2, 0, 1]).unwrap();
        assert!(is_irreducible(&irr, &f));
        assert_eq!(factorize(&irr, &f).unwrap().factors, vec![(irr, 1)]);
    }

    #[test]
    fn pth_power_inputs() {
        let f = FieldSpec::new(5).unwrap();
        let p = MonicPoly::new(&f, &[2, 0, 1]).unwrap();
        let l = MonicPoly::new(&f, &[1, 1]).unwrap();
        let g = p.pow(5, &f).mul(&l.pow(7, &f), &f);
        let fx = factorize(&g, &f).unwrap();
        assert_eq!(fx.factors, vec![(l, 7), (p, 5)]);
        assert_eq!(fx.rebuild(&f), *g.poly());
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = FieldSpec::new(13).unwrap();
        for i in (0..13u64.pow(5)).step_by(997) {
            let m = MonicPoly::from_index(&f, 5, i);
            let a = factorize_with_seed(&m, &f, 1).unwrap();
            let b = factorize_with_seed(&m, &f, 99).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.rebuild(&f), *m.poly());
        }
    }
}
