use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ffpoly::{factorize, FieldSpec, MonicPoly, Poly};

use super::symbol::jacobi_raw;
use super::table::{char_table, residue_from_index};

/// ζ_q^k for k = 0..q.
pub fn roots_of_unity(q: u32) -> Vec<Complex64> {
    (0..q)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / q as f64))
        .collect()
}

/// a_1 of uV/f: the coefficient of t^{deg f − 1} in (uV mod f).
pub fn hayes_a1(u: &Poly, v: &Poly, f: &MonicPoly, fld: &FieldSpec) -> u32 {
    let r = u.mul(v, fld).rem(f.poly(), fld);
    r.coeff(f.degree() - 1)
}

/// e(uV/f) = exp(2πi a_1 / q).
pub fn hayes_exponential(u: &Poly, v: &Poly, f: &MonicPoly, fld: &FieldSpec) -> Result<Complex64> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let a1 = hayes_a1(u, v, f, fld);
    Ok(Complex64::from_polar(1.0, 2.0 * PI * a1 as f64 / fld.q() as f64))
}

/// Σ_c buckets[c] ζ^c, summed in fixed order.
fn combine_buckets(b: &[i64], zeta: &[Complex64]) -> Complex64 {
    b.iter()
        .zip(zeta)
        .fold(Complex64::new(0.0, 0.0), |acc, (&n, z)| acc + z * n as f64)
}

/// The literal sum over all residues u mod f, with χ_f(u) by descent.
/// Exact integer bucket counts per value of a_1, combined at the end.
pub fn gauss_sum_direct(v: &Poly, f: &MonicPoly, fld: &FieldSpec) -> Result<Complex64> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let q = fld.q() as usize;
    let mut buckets = vec![0i64; q];
    let vr = v.rem(f.poly(), fld);
    for k in 0..q.pow(n as u32) {
        let u = residue_from_index(k, n, fld);
        let c = jacobi_raw(u.coeffs(), f.coeffs(), fld);
        if c == 0 {
            continue;
        }
        buckets[hayes_a1(&u, &vr, f, fld) as usize] += c as i64;
    }
    Ok(combine_buckets(&buckets, &roots_of_unity(fld.q())))
}

/// G(V, f) for every residue V mod f at once.
///
/// a_1(uV mod f) = <w(V), u> with w linear in V, so the whole table is the
/// q-ary Fourier transform of the character table of f.
pub struct GaussTable {
    n: usize,
    q: usize,
    hat: Vec<Complex64>,
    /// w(x^k) for k < n, each a vector in F_q^n
    basis: Vec<Vec<u32>>,
}

impl GaussTable {
    pub fn new(f: &MonicPoly, fld: &FieldSpec) -> Result<Self> {
        let n = f.degree();
        if n == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let q = fld.q() as usize;
        let zeta = roots_of_unity(fld.q());
        let mut data: Vec<Complex64> = char_table(f, fld)
            .into_iter()
            .map(|c| Complex64::new(c as f64, 0.0))
            .collect();
        let mut line = vec![Complex64::new(0.0, 0.0); q];
        let mut stride = 1;
        for _ in 0..n {
            let block = stride * q;
            for start in (0..data.len()).step_by(block) {
                for off in 0..stride {
                    let base = start + off;
                    for (w, l) in line.iter_mut().enumerate() {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for a in 0..q {
                            acc += data[base + a * stride] * zeta[(a * w) % q];
                        }
                        *l = acc;
                    }
                    for (w, l) in line.iter().enumerate() {
                        data[base + w * stride] = *l;
                    }
                }
            }
            stride = block;
        }
        // x^m mod f for m < 2n
        let mut xpow = Vec::with_capacity(2 * n);
        let mut cur = Poly::constant(1);
        for _ in 0..2 * n {
            xpow.push(cur.clone());
            cur = cur.mul(&Poly::x(), fld).rem(f.poly(), fld);
        }
        let basis = (0..n)
            .map(|k| (0..n).map(|i| xpow[i + k].coeff(n - 1)).collect())
            .collect();
        Ok(GaussTable { n, q, hat: data, basis })
    }

    pub fn get(&self, v: &Poly, fld: &FieldSpec) -> Complex64 {
        let mut w = vec![0u32; self.n];
        for (k, &c) in v.coeffs().iter().enumerate().take(self.n) {
            if c == 0 {
                continue;
            }
            for i in 0..self.n {
                w[i] = fld.add(w[i], fld.mul(c, self.basis[k][i]));
            }
        }
        debug_assert!(v.degree().is_none_or(|d| d < self.n));
        let idx = w.iter().rev().fold(0usize, |acc, &a| acc * self.q + a as usize);
        self.hat[idx]
    }

    /// Value at the residue with the given index.
    pub fn get_index(&self, k: usize, fld: &FieldSpec) -> Complex64 {
        self.get(&residue_from_index(k, self.n, fld), fld)
    }

    pub fn degree(&self) -> usize {
        self.n
    }
}

/// Batched evaluation; `vs` must have degree < deg f.
pub fn gauss_sum_batched(vs: &[Poly], f: &MonicPoly, fld: &FieldSpec) -> Result<Vec<Complex64>> {
    let t = GaussTable::new(f, fld)?;
    Ok(vs.iter().map(|v| t.get(&v.rem(f.poly(), fld), fld)).collect())
}

/// G(V, P^j) from the prime-power case table. V = 0 counts as α = ∞.
pub fn gauss_prime_power_closed(v: &Poly, p: &MonicPoly, j: u32, fld: &FieldSpec) -> f64 {
    let np = p.norm(fld) as f64;
    let mut alpha = 0u32;
    let mut v1 = v.clone();
    let infinite = v.is_zero();
    if !infinite {
        loop {
            let (qt, r) = v1.divrem(p.poly(), fld);
            if !r.is_zero() {
                break;
            }
            v1 = qt;
            alpha += 1;
        }
    }
    if infinite || j <= alpha {
        if j % 2 == 1 {
            0.0
        } else {
            np.powi(j as i32) - np.powi(j as i32 - 1)
        }
    } else if j == alpha + 1 {
        if j.is_multiple_of(2) {
            -np.powi(j as i32 - 1)
        } else {
            let c = jacobi_raw(v1.coeffs(), p.coeffs(), fld) as f64;
            c * np.powf(j as f64 - 0.5)
        }
    } else {
        0.0
    }
}

/// G(V, f) by factoring f and multiplying the prime-power closed forms.
pub fn gauss_sum_closed(v: &Poly, f: &MonicPoly, fld: &FieldSpec) -> Result<Complex64> {
    let fx = factorize(f, fld)?;
    let val = fx
        .factors
        .iter()
        .map(|(p, j)| gauss_prime_power_closed(v, p, *j, fld))
        .product::<f64>();
    Ok(Complex64::new(val, 0.0))
}

