use super::*;
use crate::ffpoly::enumerate_squarefree;
use crate::lfunc::l_polynomial;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn one_level_routes_agree() {
    let f = FieldSpec::new(5).unwrap();
    for (g, n) in [(1, 1), (1, 3), (1, 5), (2, 4)] {
        let m = FamilyMoments::compute(&f, g, n);
        for a in [0.0, 0.01, 0.03] {
            let lam = m.one_level(c(a));
            let cls = m.one_level_classes(c(a)).total;
            let brute = one_level_brute(&f, g, n, c(a));
            assert!((lam - brute).norm() < 1e-10, "g={g} n={n}");
            assert!((cls - brute).norm() < 1e-10, "g={g} n={n}");
        }
        assert_eq!(m.count, crate::ffpoly::squarefree_count(&f, 2 * g + 1));
        for k in 1..=n {
            assert_eq!(m.lambda_from_classes(k), m.m1[k]);
        }
    }
}

#[test]
fn n_one_has_no_diagonal() {
    let f = FieldSpec::new(5).unwrap();
    let b = one_level_classes(&f, 1, 1, c(0.01));
    assert_eq!(b.get("diagonal"), c(0.0));
}

#[test]
fn first_layer_is_average_of_a1() {
    let f = FieldSpec::new(5).unwrap();
    let mut s = 0i64;
    let mut cnt = 0;
    for d in enumerate_squarefree(&f, 3) {
        s += l_polynomial(&d, &f).unwrap().coeffs[1];
        cnt += 1;
    }
    let v = one_level(&f, 1, 1, c(0.0));
    assert!((v - c(s as f64 / cnt as f64 / 5f64.sqrt())).norm() < 1e-12);
}

#[test]
fn two_level_classes_match_literal_sums() {
    let f = FieldSpec::new(5).unwrap();
    for (g, n) in [(1, 2), (1, 3), (1, 4), (2, 3)] {
        let (a, b) = (c(0.01), c(0.02));
        let m = FamilyMoments::compute(&f, g, n);
        let fast = m.two_level_classes(a, b);
        let brute = two_level_brute(&f, g, n, a, b);
        for l in TWO_LEVEL_CLASSES {
            assert!((fast.get(l) - brute.get(l)).norm() < 1e-10, "{l} g={g} n={n}");
        }
        let ff = two_level_brute_f_first(&f, g, n, a, b);
        assert!((ff - fast.total).norm() < 1e-10);
        assert!((m.two_level_lambda(a, b) - fast.total).norm() < 1e-10);
        let sum: Complex64 = fast.classes.values().sum();
        assert_eq!(sum, fast.total);
    }
}

#[test]
fn two_level_symmetry_and_n2() {
    let f = FieldSpec::new(5).unwrap();
    let m = FamilyMoments::compute(&f, 1, 2);
    let (a, b) = (c(0.01), c(0.02));
    assert!((m.two_level(a, b) - m.two_level(b, a)).norm() < 1e-14);
    let mut s = 0i64;
    for d in enumerate_squarefree(&f, 3) {
        let a1 = l_polynomial(&d, &f).unwrap().coeffs[1];
        s += a1 * a1;
    }
    let expect = s as f64 / m.count as f64 * weight(5, 2, (a + b) / 2.0);
    assert!((m.two_level(a, b) - expect).norm() < 1e-12);
}

#[test]
fn ratio_collapses_on_matched_shifts() {
    let f = FieldSpec::new(5).unwrap();
    let s = ShiftParams::four(0.02, 0.03, 0.02, 0.03);
    let r = ratio_average(&f, 1, &s, Precision::Double).unwrap();
    assert!((r - c(1.0)).norm() < 1e-12);
    let s1 = ShiftParams::four(0.02, 0.05, 0.03, 0.04);
    let s2 = ShiftParams::four(0.05, 0.02, 0.03, 0.04);
    let r1 = ratio_average(&f, 2, &s1, Precision::Compensated).unwrap();
    let r2 = ratio_average(&f, 2, &s2, Precision::Compensated).unwrap();
    assert!((r1 - r2).norm() < 1e-12);
}

#[test]
fn hermitian_symmetry() {
    let f = FieldSpec::new(5).unwrap();
    let m = FamilyMoments::compute(&f, 1, 4);
    let a = Complex64::new(0.02, 0.3);
    assert!((m.one_level(a.conj()).conj() - m.one_level(a)).norm() < 1e-12);
}
