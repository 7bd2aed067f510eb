use crate::ffpoly::{is_irreducible, Coeffs, FieldSpec, MonicPoly, Poly};

use super::symbol::jacobi_raw;

/// Index of a residue of degree < n: Σ u_i q^i.
pub fn residue_index(u: &Poly, fld: &FieldSpec) -> usize {
    let q = fld.q() as usize;
    u.coeffs().iter().rev().fold(0, |acc, &a| acc * q + a as usize)
}

pub fn residue_from_index(mut idx: usize, n: usize, fld: &FieldSpec) -> Poly {
    let q = fld.q() as usize;
    let mut c = Coeffs::with_capacity(n);
    for _ in 0..n {
        c.push((idx % q) as u32);
        idx /= q;
    }
    Poly::from_coeffs(fld, &c)
}

/// red[k] = index of (residue k of degree < n) mod m, for all q^n residues.
pub fn reduction_table(n: usize, m: &MonicPoly, fld: &FieldSpec) -> Vec<u32> {
    let q = fld.q() as usize;
    let d = m.degree();
    let total = q.pow(n as u32);
    let qd = q.pow(d as u32);
    // x·v mod m on index level
    let times_x = |v: usize| -> usize {
        let mut c: Coeffs = Coeffs::with_capacity(d + 1);
        let mut t = v;
        c.push(0);
        for _ in 0..d {
            c.push((t % q) as u32);
            t /= q;
        }
        if d > 0 && c[d] != 0 {
            let top = c[d];
            for j in 0..d {
                c[j] = fld.sub(c[j], fld.mul(top, m.coeffs()[j]));
            }
        }
        c[..d].iter().rev().fold(0, |acc, &a| acc * q + a as usize)
    };
    let mut red = vec![0u32; total];
    for k in 0..total {
        let u0 = k % q;
        let rest = k / q;
        if d == 0 {
            red[k] = 0;
            continue;
        }
        let base = if rest == 0 { 0 } else { times_x(red[rest] as usize) };
        let c0 = (base % q + u0) % q;
        red[k] = (base - base % q + c0) as u32;
        debug_assert!((red[k] as usize) < qd);
    }
    red
}

fn factor_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// χ_P(u) = (u/P) for every residue u mod an irreducible P, by walking a generator.
pub fn prime_char_table(p: &MonicPoly, fld: &FieldSpec) -> Vec<i8> {
    debug_assert!(is_irreducible(p, fld));
    let d = p.degree();
    let n = fld.norm(d as u32) as u64;
    let ord = n - 1;
    let primes = factor_u64(ord);
    let one = Poly::constant(1);
    let mut gen = None;
    for idx in 1..n as usize {
        let g = residue_from_index(idx, d, fld);
        if primes
            .iter()
            .all(|&r| g.powmod((ord / r) as u128, p.poly(), fld) != one)
        {
            gen = Some(g);
            break;
        }
    }
    let g = gen.expect("multiplicative group is cyclic");
    let mut t = vec![0i8; n as usize];
    let mut cur = one.rem(p.poly(), fld);
    let mut s = 1i8;
    for _ in 0..ord {
        t[residue_index(&cur, fld)] = s;
        s = -s;
        cur = cur.mulmod(&g, p.poly(), fld);
    }
    t
}

/// (u/f) for every residue u mod f. Prime powers use the generator walk,
/// other moduli the descent.
pub fn char_table(f: &MonicPoly, fld: &FieldSpec) -> Vec<i8> {
    let n = f.degree();
    let total = (fld.q() as usize).pow(n as u32);
    if let Some((p, j)) = prime_power_root(f, fld) {
        let tp = prime_char_table(&p, fld);
        if j == 1 {
            return tp;
        }
        let red = reduction_table(n, &p, fld);
        return red
            .iter()
            .map(|&r| {
                let v = tp[r as usize];
                if j % 2 == 0 {
                    v * v
                } else {
                    v
                }
            })
            .collect();
    }
    (0..total)
        .map(|k| jacobi_raw(residue_from_index(k, n, fld).coeffs(), f.coeffs(), fld))
        .collect()
}

/// Some((P, j)) when f = P^j.
pub fn prime_power_root(f: &MonicPoly, fld: &FieldSpec) -> Option<(MonicPoly, u32)> {
    if f.degree() == 0 {
        return None;
    }
    let parts = crate::ffpoly::squarefree_decomposition(f, fld);
    if parts.len() != 1 {
        return None;
    }
    let p = MonicPoly::from_poly(&parts[0].0, fld).ok()?;
    is_irreducible(&p, fld).then_some((p, parts[0].1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_matches_rem() {
        let f = FieldSpec::new(5).unwrap();
        let m = MonicPoly::new(&f, &[3, 1, 0, 1]).unwrap();
        let red = reduction_table(5, &m, &f);
        for k in 0..3125 {
            let u = residue_from_index(k, 5, &f);
            assert_eq!(red[k] as usize, residue_index(&u.rem(m.poly(), &f), &f));
        }
    }

    #[test]
    fn tables_match_descent() {
        let f = FieldSpec::new(5).unwrap();
        for m in [
            MonicPoly::new(&f, &[2, 0, 1]).unwrap(),
            MonicPoly::new(&f, &[2, 0, 1]).unwrap().pow(2, &f),
            MonicPoly::new(&f, &[1, 1]).unwrap().pow(3, &f),
            MonicPoly::new(&f, &[0, 1, 1]).unwrap(),
        ] {
            let t = char_table(&m, &f);
            for (k, &v) in t.iter().enumerate() {
                let u = residue_from_index(k, m.degree(), &f);
                assert_eq!(v, jacobi_raw(u.coeffs(), m.coeffs(), &f), "{m} {u}");
            }
        }
    }
}
