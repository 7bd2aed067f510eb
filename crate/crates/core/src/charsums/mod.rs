//! Quadratic residue symbols, characters χ_D, the Hayes exponential,
//! Gauss sums and the character-sum lemmas as executable identities.

mod gauss;
mod lemmas;
mod symbol;
mod table;

pub use gauss::{
    gauss_prime_power_closed, gauss_sum_batched, gauss_sum_closed, gauss_sum_direct, hayes_a1,
    hayes_exponential, roots_of_unity, GaussTable,
};
pub use lemmas::{
    average_chi_square, is_perfect_square, monic_char_sum, poisson_char_sum, poisson_with_table,
    polya_vinogradov_checks, prime_char_sum, squarefree_char_sum_decomposition, weil_checks,
    BoundCheck,
};
pub use symbol::{chi, residue_symbol, residue_symbol_euler};
pub(crate) use symbol::jacobi_raw;
pub use table::{
    char_table, prime_char_table, prime_power_root, reduction_table, residue_from_index,
    residue_index,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{enumerate_irreducible, enumerate_monic, FieldSpec, MonicPoly, Poly};

    fn f5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
        (a - b).norm() <= 1e-9
    }

    #[test]
    fn symbol_examples() {
        let f = f5();
        let x = MonicPoly::x();
        assert_eq!(residue_symbol(x.poly(), &x, &f).unwrap(), 0);
        assert_eq!(residue_symbol(&Poly::constant(2), &x, &f).unwrap(), -1);
        assert!(residue_symbol(x.poly(), &MonicPoly::one(), &f).is_err());
    }

    #[test]
    fn descent_matches_euler_and_reciprocity() {
        let f = f5();
        for da in 0..=3 {
            for a in enumerate_monic(&f, da) {
                for db in 1..=3 {
                    for b in enumerate_monic(&f, db) {
                        let s = residue_symbol(a.poly(), &b, &f).unwrap();
                        assert_eq!(s, residue_symbol_euler(a.poly(), &b, &f).unwrap());
                        if da >= 1 && a.gcd(&b, &f).is_one() {
                            assert_eq!(s, residue_symbol(b.poly(), &a, &f).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chi_is_multiplicative() {
        let f = f5();
        let d = MonicPoly::new(&f, &[1, 2, 0, 1]).unwrap();
        for f1 in enumerate_monic(&f, 2) {
            for f2 in enumerate_monic(&f, 1) {
                let p = chi(&d, &f1.mul(&f2, &f), &f).unwrap();
                assert_eq!(p, chi(&d, &f1, &f).unwrap() * chi(&d, &f2, &f).unwrap());
            }
        }
    }

    #[test]
    fn hayes_examples() {
        let f = f5();
        let x = MonicPoly::x();
        let e = hayes_exponential(&Poly::constant(3), &Poly::constant(1), &x, &f).unwrap();
        assert!(close(e, roots_of_unity(5)[3]));
        let m = MonicPoly::new(&f, &[1, 3, 1]).unwrap();
        let e0 = hayes_exponential(m.poly(), &Poly::constant(2), &m, &f).unwrap();
        assert!(close(e0, num_complex::Complex64::new(1.0, 0.0)));
        let u1 = Poly::from_coeffs(&f, &[2, 4]);
        let u2 = Poly::from_coeffs(&f, &[1, 3]);
        let v = Poly::from_coeffs(&f, &[3, 1]);
        let a = hayes_exponential(&u1.add(&u2, &f), &v, &m, &f).unwrap();
        let b = hayes_exponential(&u1, &v, &m, &f).unwrap() * hayes_exponential(&u2, &v, &m, &f).unwrap();
        assert!(close(a, b));
    }

    #[test]
    fn gauss_sum_basics() {
        let f = f5();
        for p in enumerate_irreducible(&f, 2) {
            assert!(gauss_sum_direct(&Poly::zero(), &p, &f).unwrap().norm() < 1e-9);
            for v in enumerate_monic(&f, 1) {
                let g = gauss_sum_direct(v.poly(), &p, &f).unwrap();
                assert!((g.norm() - 5.0).abs() < 1e-9);
            }
        }
        let a = MonicPoly::new(&f, &[2, 0, 1]).unwrap();
        let b = MonicPoly::new(&f, &[1, 1]).unwrap();
        let ab = a.mul(&b, &f);
        for v in enumerate_monic(&f, 2) {
            let lhs = gauss_sum_direct(v.poly(), &ab, &f).unwrap();
            let rhs = gauss_sum_direct(v.poly(), &a, &f).unwrap()
                * gauss_sum_direct(v.poly(), &b, &f).unwrap();
            assert!(close(lhs, rhs));
            assert!(close(lhs, gauss_sum_closed(v.poly(), &ab, &f).unwrap()));
        }
    }

    #[test]
    fn batched_and_closed_match_direct() {
        let f = f5();
        let p = MonicPoly::new(&f, &[2, 0, 1]).unwrap();
        let l = MonicPoly::new(&f, &[3, 1]).unwrap();
        for m in [p.pow(2, &f), l.pow(3, &f), p.mul(&l, &f), l.pow(4, &f)] {
            let t = GaussTable::new(&m, &f).unwrap();
            for k in 0..5usize.pow(m.degree() as u32) {
                let v = residue_from_index(k, m.degree(), &f);
                let d = gauss_sum_direct(&v, &m, &f).unwrap();
                assert!(close(t.get(&v, &f), d), "{m} {v}");
                assert!(close(gauss_sum_closed(&v, &m, &f).unwrap(), d), "{m} {v}");
            }
        }
    }

    #[test]
    fn poisson_small_grid() {
        let f = f5();
        for n in 1..=3 {
            for fm in enumerate_monic(&f, n) {
                for m in 0..=4 {
                    let lhs = monic_char_sum(&fm, m, &f) as f64;
                    let rhs = poisson_char_sum(&fm, m, &f).unwrap();
                    assert!((rhs.re - lhs).abs() < 1e-9 && rhs.im.abs() < 1e-9, "{fm} {m}");
                }
            }
        }
    }

    #[test]
    fn squarefree_decomposition_small() {
        let f = f5();
        for n in 1..=3 {
            for fm in enumerate_monic(&f, n) {
                let (l, r) = squarefree_char_sum_decomposition(&fm, 1, &f).unwrap();
                assert_eq!(l, r, "{fm}");
            }
        }
    }

    #[test]
    fn monic_sum_examples() {
        let f = f5();
        let p = MonicPoly::new(&f, &[2, 0, 1]).unwrap();
        assert_eq!(monic_char_sum(&p, 0, &f), 1);
        // χ of a square modulus counts coprime h
        let sq = p.pow(2, &f);
        let coprime = enumerate_monic(&f, 3).filter(|h| h.gcd(&p, &f).is_one()).count() as i64;
        assert_eq!(monic_char_sum(&sq, 3, &f), coprime);
    }
}
