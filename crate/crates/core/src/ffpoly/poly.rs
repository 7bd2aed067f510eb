use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::field::FieldSpec;
use crate::error::{Error, Result};

pub type Coeffs = SmallVec<[u32; 16]>;

/// Polynomial over F_q, lowest degree first, no trailing zeros. Zero is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Coeffs,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Coeffs::new() }
    }

    pub fn constant(a: u32) -> Self {
        let mut p = Poly { c: smallvec::smallvec![a] };
        p.trim();
        p
    }

    pub fn x() -> Self {
        Poly { c: smallvec::smallvec![0, 1] }
    }

    /// Coefficients are reduced mod q.
    pub fn from_coeffs(fld: &FieldSpec, cs: &[u32]) -> Self {
        let mut p = Poly {
            c: cs.iter().map(|&a| a % fld.q()).collect(),
        };
        p.trim();
        p
    }

    pub(crate) fn from_raw(c: Coeffs) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Poly, fld: &FieldSpec) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| fld.add(self.coeff(i), o.coeff(i))).collect();
        Poly::from_raw(c)
    }

    pub fn sub(&self, o: &Poly, fld: &FieldSpec) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| fld.sub(self.coeff(i), o.coeff(i))).collect();
        Poly::from_raw(c)
    }

    pub fn scale(&self, a: u32, fld: &FieldSpec) -> Poly {
        Poly::from_raw(self.c.iter().map(|&x| fld.mul(x, a)).collect())
    }

    pub fn mul(&self, o: &Poly, fld: &FieldSpec) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let q = fld.q() as u64;
        let mut acc = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] += (a * b) as u64;
            }
        }
        Poly::from_raw(acc.into_iter().map(|v| (v % q) as u32).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Poly, fld: &FieldSpec) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if n < dd {
            return (Poly::zero(), self.clone());
        }
        let li = fld.inv(d.lead());
        let mut r: Coeffs = self.c.clone();
        let mut qt: Coeffs = smallvec::smallvec![0; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let t = fld.mul(r[k + dd], li);
            qt[k] = t;
            if t == 0 {
                continue;
            }
            for j in 0..=dd {
                r[k + j] = fld.sub(r[k + j], fld.mul(t, d.c[j]));
            }
        }
        r.truncate(dd);
        (Poly::from_raw(qt), Poly::from_raw(r))
    }

    pub fn rem(&self, d: &Poly, fld: &FieldSpec) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        match self.degree() {
            None => return Poly::zero(),
            Some(n) if n < dd => return self.clone(),
            _ => {}
        }
        let mut r: Coeffs = self.c.clone();
        rem_in_place(&mut r, &d.c, fld);
        Poly::from_raw(r)
    }

    pub fn make_monic(&self, fld: &FieldSpec) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(fld.inv(self.lead()), fld)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Poly, fld: &FieldSpec) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b, fld);
            a = b;
            b = r;
        }
        a.make_monic(fld)
    }

    pub fn derivative(&self, fld: &FieldSpec) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let q = fld.q();
        Poly::from_raw(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| fld.mul(a, (i as u32) % q))
                .collect(),
        )
    }

    pub fn mulmod(&self, o: &Poly, m: &Poly, fld: &FieldSpec) -> Poly {
        self.mul(o, fld).rem(m, fld)
    }

    /// self^e mod m.
    pub fn powmod(&self, mut e: u128, m: &Poly, fld: &FieldSpec) -> Poly {
        let mut base = self.rem(m, fld);
        let mut r = Poly::constant(1).rem(m, fld);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mulmod(&base, m, fld);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m, fld);
            }
        }
        r
    }

    pub fn pow(&self, e: u32, fld: &FieldSpec) -> Poly {
        let mut r = Poly::constant(1);
        for _ in 0..e {
            r = r.mul(self, fld);
        }
        r
    }

    pub fn eval(&self, x: u32, fld: &FieldSpec) -> u32 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| fld.add(fld.mul(acc, x), a))
    }
}

/// In-place reduction of `r` modulo the polynomial `d` (raw coefficient slices, d nonzero).
pub(crate) fn rem_in_place(r: &mut Coeffs, d: &[u32], fld: &FieldSpec) {
    let dd = d.len() - 1;
    while r.last() == Some(&0) {
        r.pop();
    }
    if r.len() <= dd {
        return;
    }
    let li = fld.inv(d[dd]);
    let n = r.len() - 1;
    for k in (0..=n - dd).rev() {
        let t = fld.mul(r[k + dd], li);
        if t == 0 {
            continue;
        }
        let nt = fld.neg(t);
        for j in 0..=dd {
            r[k + j] = fld.add(r[k + j], fld.mul(nt, d[j]));
        }
    }
    r.truncate(dd);
    while r.last() == Some(&0) {
        r.pop();
    }
}

/// A monic polynomial; the universal index object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct MonicPoly(Poly);

impl TryFrom<Vec<u32>> for MonicPoly {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        if v.last() != Some(&1) {
            return Err(Error::InvalidArgument("not monic".into()));
        }
        Ok(MonicPoly(Poly::from_raw(v.into_iter().collect())))
    }
}

impl From<MonicPoly> for Vec<u32> {
    fn from(m: MonicPoly) -> Vec<u32> {
        m.0.c.to_vec()
    }
}

impl MonicPoly {
    pub fn one() -> Self {
        MonicPoly(Poly::constant(1))
    }

    pub fn x() -> Self {
        MonicPoly(Poly::x())
    }

    /// Full coefficient list, lowest first; the last entry must be 1.
    pub fn new(fld: &FieldSpec, cs: &[u32]) -> Result<Self> {
        let p = Poly::from_coeffs(fld, cs);
        if p.lead() != 1 || p.degree() != Some(cs.len() - 1) {
            return Err(Error::InvalidArgument(format!("{cs:?} is not monic")));
        }
        Ok(MonicPoly(p))
    }

    /// The monic polynomial x^n + lower[n-1] x^{n-1} + ... + lower[0].
    pub fn from_lower(fld: &FieldSpec, lower: &[u32]) -> Self {
        let mut c: Coeffs = lower.iter().map(|&a| a % fld.q()).collect();
        c.push(1);
        MonicPoly(Poly { c })
    }

    /// Normalizes a nonzero polynomial to its monic associate.
    pub fn from_poly(p: &Poly, fld: &FieldSpec) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial".into()));
        }
        Ok(MonicPoly(p.make_monic(fld)))
    }

    pub(crate) fn from_poly_unchecked(p: Poly) -> Self {
        debug_assert_eq!(p.lead(), 1);
        MonicPoly(p)
    }

    /// The `idx`-th monic polynomial of degree n in enumeration order.
    pub fn from_index(fld: &FieldSpec, n: usize, mut idx: u64) -> Self {
        let q = fld.q() as u64;
        let mut c: Coeffs = Coeffs::with_capacity(n + 1);
        for _ in 0..n {
            c.push((idx % q) as u32);
            idx /= q;
        }
        c.push(1);
        MonicPoly(Poly { c })
    }

    /// Position in the enumeration order of its degree.
    pub fn index(&self, fld: &FieldSpec) -> u64 {
        let q = fld.q() as u64;
        self.lower().iter().rev().fold(0, |acc, &a| acc * q + a as u64)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn coeffs(&self) -> &[u32] {
        self.0.coeffs()
    }

    /// Coefficients below the leading 1.
    pub fn lower(&self) -> &[u32] {
        let c = self.0.coeffs();
        &c[..c.len() - 1]
    }

    pub fn degree(&self) -> usize {
        self.0.c.len() - 1
    }

    pub fn norm(&self, fld: &FieldSpec) -> u128 {
        fld.norm(self.degree() as u32)
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    pub fn mul(&self, o: &MonicPoly, fld: &FieldSpec) -> MonicPoly {
        MonicPoly(self.0.mul(&o.0, fld))
    }

    pub fn pow(&self, e: u32, fld: &FieldSpec) -> MonicPoly {
        MonicPoly(self.0.pow(e, fld))
    }

    pub fn gcd(&self, o: &MonicPoly, fld: &FieldSpec) -> MonicPoly {
        MonicPoly(self.0.gcd(&o.0, fld))
    }

    /// Exact quotient; None if `d` does not divide self.
    pub fn div_exact(&self, d: &MonicPoly, fld: &FieldSpec) -> Option<MonicPoly> {
        let (qt, r) = self.0.divrem(&d.0, fld);
        r.is_zero().then_some(MonicPoly(qt))
    }

    pub fn divides(&self, f: &MonicPoly, fld: &FieldSpec) -> bool {
        f.0.rem(&self.0, fld).is_zero()
    }

    pub fn is_squarefree(&self, fld: &FieldSpec) -> bool {
        if self.degree() == 0 {
            return true;
        }
        let d = self.0.derivative(fld);
        !d.is_zero() && self.0.gcd(&d, fld).degree() == Some(0)
    }
}

impl Ord for MonicPoly {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.lower().iter().rev().cmp(o.lower().iter().rev()))
    }
}

impl PartialOrd for MonicPoly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Reduce raw coefficients `r` modulo a nonzero `d`, trimming the result.
pub fn rem_coeffs(r: &mut Coeffs, d: &[u32], fld: &FieldSpec) {
    rem_in_place(r, d, fld)
}
