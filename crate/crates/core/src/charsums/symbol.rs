use crate::error::{Error, Result};
use crate::ffpoly::{factorize, Coeffs, FieldSpec, MonicPoly, Poly};

fn trim(v: &mut Coeffs) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// (A/B) for any A and monic B of degree ≥ 1, by reciprocity descent.
pub fn residue_symbol(a: &Poly, b: &MonicPoly, fld: &FieldSpec) -> Result<i8> {
    if b.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(jacobi_raw(a.coeffs(), b.coeffs(), fld))
}

/// Descent on raw coefficient slices; `b` must be monic of degree ≥ 1.
pub(crate) fn jacobi_raw(a: &[u32], b: &[u32], fld: &FieldSpec) -> i8 {
    let mut a: Coeffs = a.iter().copied().collect();
    let mut b: Coeffs = b.iter().copied().collect();
    trim(&mut a);
    crate::ffpoly::rem_coeffs(&mut a, &b, fld);
    let mut s: i8 = 1;
    loop {
        if b.len() == 1 {
            return s;
        }
        if a.is_empty() {
            return 0;
        }
        let c = *a.last().unwrap();
        if c != 1 {
            if (b.len() - 1) % 2 == 1 {
                s *= fld.legendre(c);
            }
            let ci = fld.inv(c);
            for x in a.iter_mut() {
                *x = fld.mul(*x, ci);
            }
        }
        // (a/b) = (b/a) for coprime monics
        crate::ffpoly::rem_coeffs(&mut b, &a, fld);
        std::mem::swap(&mut a, &mut b);
    }
}

/// Oracle: factor B and apply Euler's criterion A^{(|P|-1)/2} mod P.
pub fn residue_symbol_euler(a: &Poly, b: &MonicPoly, fld: &FieldSpec) -> Result<i8> {
    let fx = factorize(b, fld)?;
    let mut s = 1i8;
    for (p, e) in &fx.factors {
        let n = p.norm(fld);
        let r = a.powmod((n - 1) / 2, p.poly(), fld);
        let v = if r.is_zero() {
            0
        } else if r == Poly::constant(1) {
            1
        } else {
            debug_assert_eq!(r, Poly::constant(fld.q() - 1));
            -1
        };
        if e % 2 == 1 {
            s *= v;
        } else if v == 0 {
            s = 0;
        }
    }
    Ok(s)
}

/// χ_D(f) = (D/f).
pub fn chi(d: &MonicPoly, f: &MonicPoly, fld: &FieldSpec) -> Result<i8> {
    residue_symbol(d.poly(), f, fld)
}
