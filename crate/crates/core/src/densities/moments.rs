use serde::{Deserialize, Serialize};

use crate::ffpoly::{enumerate_squarefree_range, irreducible_count, monic_count, FieldSpec};
use crate::lfunc::{lambda_coefficients, LFamily, LPolynomial};
use crate::parallel::{chunked, CHUNK};

/// Exact integer family aggregates up to degree n_max.
///
/// Index 0 is unused in every table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyMoments {
    pub q: u32,
    pub g: usize,
    pub n_max: usize,
    /// |H_{2g+1}| as enumerated
    pub count: u64,
    /// Σ_D s_m(D)
    pub s: Vec<i128>,
    /// Σ_D e_m(D)
    pub e: Vec<i128>,
    /// Σ_D s_{m1} s_{m2}
    pub ss: Vec<Vec<i128>>,
    /// Σ_D s_{m1} e_{m2}
    pub se: Vec<Vec<i128>>,
    /// Σ_D e_{m1} e_{m2}
    pub ee: Vec<Vec<i128>>,
    /// Σ_D a_n
    pub m1: Vec<i128>,
    /// Σ_D a_{n1} a_{n2}
    pub m2: Vec<Vec<i128>>,
}

impl FamilyMoments {
    fn zero(q: u32, g: usize, n: usize) -> Self {
        let sq = || vec![vec![0i128; n + 1]; n + 1];
        FamilyMoments {
            q,
            g,
            n_max: n,
            count: 0,
            s: vec![0; n + 1],
            e: vec![0; n + 1],
            ss: sq(),
            se: sq(),
            ee: sq(),
            m1: vec![0; n + 1],
            m2: sq(),
        }
    }

    fn merge(&mut self, o: &FamilyMoments) {
        self.count += o.count;
        let add = |a: &mut Vec<i128>, b: &Vec<i128>| a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        add(&mut self.s, &o.s);
        add(&mut self.e, &o.e);
        add(&mut self.m1, &o.m1);
        for (a, b) in [
            (&mut self.ss, &o.ss),
            (&mut self.se, &o.se),
            (&mut self.ee, &o.ee),
            (&mut self.m2, &o.m2),
        ] {
            a.iter_mut().zip(b).for_each(|(x, y)| add(x, y));
        }
    }

    /// Adds one discriminant given its L-polynomial and prime-factor degree counts.
    pub(crate) fn add_discriminant(&mut self, l: &LPolynomial, z: &[u32], pi: &[i64]) {
        let n = self.n_max;
        let a = lambda_coefficients(l, n);
        let mut s = vec![0i64; n + 1];
        let mut e = vec![0i64; n + 1];
        for m in 1..=n {
            e[m] = pi[m] - z.get(m).copied().unwrap_or(0) as i64;
            let mut rest = a[m - 1];
            for d in 1..m {
                if m % d == 0 {
                    rest -= d as i64 * if (m / d) % 2 == 1 { s[d] } else { e[d] };
                }
            }
            debug_assert_eq!(rest % m as i64, 0);
            s[m] = rest / m as i64;
        }
        self.count += 1;
        for i in 1..=n {
            self.s[i] += s[i] as i128;
            self.e[i] += e[i] as i128;
            self.m1[i] += a[i - 1] as i128;
            for j in 1..=n {
                self.ss[i][j] += (s[i] * s[j]) as i128;
                self.se[i][j] += (s[i] * e[j]) as i128;
                self.ee[i][j] += (e[i] * e[j]) as i128;
                self.m2[i][j] += a[i - 1] as i128 * a[j - 1] as i128;
            }
        }
    }

    /// Aggregates over all of H_{2g+1}, in parallel over fixed index chunks.
    pub fn compute(fld: &FieldSpec, g: usize, n_max: usize) -> Self {
        let fam = LFamily::new(fld, g);
        let pi: Vec<i64> = (0..=n_max)
            .map(|m| if m == 0 { 0 } else { irreducible_count(fld, m as u32) as i64 })
            .collect();
        let deg = 2 * g + 1;
        let parts = chunked(monic_count(fld, deg), CHUNK, |s, e| {
            let mut acc = FamilyMoments::zero(fld.q(), g, n_max);
            for d in enumerate_squarefree_range(fld, deg, s, e) {
                let (low, z) = fam.analyze(&d);
                let l = LPolynomial::from_low_half(fld.q(), &low);
                acc.add_discriminant(&l, &z, &pi);
            }
            acc
        });
        let mut total = FamilyMoments::zero(fld.q(), g, n_max);
        for p in &parts {
            total.merge(p);
        }
        total
    }

    /// Σ_D s_m(D) e_m(D)-type consistency: a_n aggregates rebuilt from s and e.
    pub fn lambda_from_classes(&self, n: usize) -> i128 {
        (1..=n)
            .filter(|m| n.is_multiple_of(*m))
            .map(|m| m as i128 * if (n / m) % 2 == 1 { self.s[m] } else { self.e[m] })
            .sum()
    }
}
