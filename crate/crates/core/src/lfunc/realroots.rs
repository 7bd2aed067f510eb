//! Exact squarefree decomposition and real-root certification for integer
//! polynomials, followed by floating-point isolation of the certified roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

type Q = BigRational;

fn trim(p: &mut Vec<Q>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn deriv(p: &[Q]) -> Vec<Q> {
    let mut d: Vec<Q> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut d);
    d
}

fn divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut qt = vec![Q::zero(); r.len() - db];
    let lb = b[db].clone();
    for k in (0..qt.len()).rev() {
        let t = &r[k + db] / &lb;
        for j in 0..=db {
            let v = &r[k + j] - &t * &b[j];
            r[k + j] = v;
        }
        qt[k] = t;
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut qt);
    (qt, r)
}

fn monic(p: &[Q]) -> Vec<Q> {
    let l = p.last().unwrap().clone();
    p.iter().map(|c| c / &l).collect()
}

fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out: Vec<Q> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Q::zero);
            let y = b.get(i).cloned().unwrap_or_else(Q::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Yun's algorithm: p = c · ∏ a_i^i with a_i squarefree and coprime.
fn yun(p: &[Q]) -> Vec<(Vec<Q>, usize)> {
    let dp = deriv(p);
    let b = gcd(p, &dp);
    let mut c = divrem(p, &b).0;
    let mut d = sub(&divrem(&dp, &b).0, &deriv(&c));
    let mut out = Vec::new();
    let mut i = 1;
    while c.len() > 1 {
        let a = gcd(&c, &d);
        c = divrem(&c, &a).0;
        d = sub(&divrem(&d, &a).0, &deriv(&c));
        if a.len() > 1 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sign_at_infinity(p: &[Q], positive: bool) -> i32 {
    let l = p.last().unwrap();
    let s = if l.is_positive() { 1 } else { -1 };
    if positive || (p.len() - 1).is_multiple_of(2) {
        s
    } else {
        -s
    }
}

/// Number of distinct real roots of a squarefree polynomial (Sturm).
fn sturm_real_count(p: &[Q]) -> usize {
    let mut seq = vec![p.to_vec(), deriv(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = divrem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let changes = |pos: bool| {
        let signs: Vec<i32> = seq.iter().map(|s| sign_at_infinity(s, pos)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(false) - changes(true)
}

fn eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn bisect(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(p, lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(p, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Real roots of a polynomial known to have only simple real roots, ascending.
fn real_roots_all_real(p: &[f64], bound: f64) -> Vec<f64> {
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![-p[0] / p[1]];
    }
    let dp: Vec<f64> = p.iter().enumerate().skip(1).map(|(i, &c)| c * i as f64).collect();
    let crit = real_roots_all_real(&dp, bound);
    let mut pts = vec![-bound];
    pts.extend(crit.iter().copied().filter(|c| c.abs() < bound));
    pts.push(bound);
    let mut out = Vec::with_capacity(n);
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(p, a), eval(p, b));
        if fa == 0.0 {
            out.push(a);
        } else if (fa < 0.0) != (fb < 0.0) {
            out.push(bisect(p, a, b));
        }
    }
    if eval(p, bound) == 0.0 {
        out.push(bound);
    }
    out.dedup();
    out
}

/// Real roots with multiplicities of an integer polynomial whose roots are all
/// real. Returns None if the exact count shows a non-real root.
pub fn real_roots_with_multiplicity(coeffs: &[i128]) -> Option<Vec<(f64, usize)>> {
    let p: Vec<Q> = coeffs
        .iter()
        .map(|&c| Q::from_integer(BigInt::from(c)))
        .collect();
    let mut out = Vec::new();
    for (a, m) in yun(&p) {
        let deg = a.len() - 1;
        if sturm_real_count(&a) != deg {
            return None;
        }
        let af: Vec<f64> = a.iter().map(|c| c.to_f64().unwrap()).collect();
        let lead = af[deg].abs();
        let bound = 1.0 + af[..deg].iter().map(|c| c.abs() / lead).fold(0.0, f64::max);
        let roots = real_roots_all_real(&af, bound);
        if roots.len() != deg {
            return None;
        }
        out.extend(roots.into_iter().map(|r| (r, m)));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Some(out)
}
