//! Brute-force one- and two-level densities over H_{2g+1}, their class
//! decompositions, and the family average of the four-shift ratio.
//!
//! Everything goes through exact integer aggregates over the family:
//! s_m(D) = Σ_{P ∈ P_m} χ_D(P) and e_m(D) = #{P ∈ P_m : P ∤ D}, obtained
//! from the coefficients a_n(D) of u L'/L.

mod moments;
mod oracle;

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffpoly::FieldSpec;
use crate::lfunc::LFamily;
use crate::parallel::{chunked, pairwise_sum, Accumulator, Precision, CHUNK};

pub use moments::FamilyMoments;
pub use oracle::{one_level_brute, two_level_brute, two_level_brute_f_first};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftParams {
    pub alpha: Complex64,
    pub beta: Option<Complex64>,
    pub gamma: Option<Complex64>,
    pub delta: Option<Complex64>,
}

impl ShiftParams {
    pub fn one(alpha: f64) -> Self {
        ShiftParams {
            alpha: Complex64::new(alpha, 0.0),
            beta: None,
            gamma: None,
            delta: None,
        }
    }

    pub fn two(alpha: f64, beta: f64) -> Self {
        ShiftParams {
            beta: Some(Complex64::new(beta, 0.0)),
            ..Self::one(alpha)
        }
    }

    pub fn four(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        ShiftParams {
            alpha: Complex64::new(alpha, 0.0),
            beta: Some(Complex64::new(beta, 0.0)),
            gamma: Some(Complex64::new(gamma, 0.0)),
            delta: Some(Complex64::new(delta, 0.0)),
        }
    }

    pub fn beta_or_err(&self) -> Result<Complex64> {
        self.beta
            .ok_or_else(|| Error::Config("beta shift required".into()))
    }

    /// Advisory messages for shifts with |s|·g > 1.
    pub fn advisories(&self, g: usize) -> Vec<String> {
        let named = [
            ("alpha", Some(self.alpha)),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("delta", self.delta),
        ];
        named
            .iter()
            .filter_map(|(n, s)| {
                s.filter(|s| s.norm() * g as f64 > 1.0)
                    .map(|s| format!("|{n}|·g = {:.3} exceeds 1", s.norm() * g as f64))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassBreakdown {
    pub total: Complex64,
    pub classes: BTreeMap<String, Complex64>,
}

impl ClassBreakdown {
    fn from_classes(classes: BTreeMap<String, Complex64>) -> Self {
        let total = classes
            .values()
            .fold(Complex64::new(0.0, 0.0), |a, b| a + b);
        ClassBreakdown { total, classes }
    }

    pub fn get(&self, label: &str) -> Complex64 {
        self.classes
            .get(label)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }
}

pub const TWO_LEVEL_CLASSES: [&str; 7] = [
    "ee",
    "eo",
    "oe",
    "oo_distinct_eq",
    "oo_distinct_gt",
    "oo_distinct_lt",
    "oo_equal_prime",
];

/// q^{−n(1/2+s)}.
pub fn weight(q: u32, n: usize, s: Complex64) -> Complex64 {
    (-(n as f64) * (0.5 + s) * (q as f64).ln()).exp()
}

pub fn one_level(fld: &FieldSpec, g: usize, n: usize, alpha: Complex64) -> Complex64 {
    FamilyMoments::compute(fld, g, n).one_level(alpha)
}

pub fn one_level_classes(fld: &FieldSpec, g: usize, n: usize, alpha: Complex64) -> ClassBreakdown {
    FamilyMoments::compute(fld, g, n).one_level_classes(alpha)
}

pub fn two_level(fld: &FieldSpec, g: usize, n: usize, alpha: Complex64, beta: Complex64) -> Complex64 {
    FamilyMoments::compute(fld, g, n).two_level(alpha, beta)
}

pub fn two_level_classes(
    fld: &FieldSpec,
    g: usize,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
) -> ClassBreakdown {
    FamilyMoments::compute(fld, g, n).two_level_classes(alpha, beta)
}

impl FamilyMoments {
    fn w(&self, n: usize, s: Complex64) -> Complex64 {
        weight(self.q, n, s)
    }

    /// One-level density through the lambda coefficients.
    pub fn one_level(&self, alpha: Complex64) -> Complex64 {
        let terms: Vec<Complex64> = (1..=self.n_max)
            .map(|n| self.m1[n] as f64 * self.w(n, alpha))
            .collect();
        pairwise_sum(&terms) / self.count as f64
    }

    /// Split into even prime powers ("diagonal") and odd ones ("type_i").
    pub fn one_level_classes(&self, alpha: Complex64) -> ClassBreakdown {
        let mut diag = Vec::new();
        let mut odd = Vec::new();
        for m in 1..=self.n_max {
            for k in 1..=self.n_max / m {
                let v = m as f64 * self.w(k * m, alpha);
                if k % 2 == 0 {
                    diag.push(self.e[m] as f64 * v);
                } else {
                    odd.push(self.s[m] as f64 * v);
                }
            }
        }
        let c = self.count as f64;
        let mut classes = BTreeMap::new();
        classes.insert("diagonal".to_string(), pairwise_sum(&diag) / c);
        classes.insert("type_i".to_string(), pairwise_sum(&odd) / c);
        ClassBreakdown::from_classes(classes)
    }

    /// Σ over prime-power pairs (P^a, Q^b), d(P) = m1, d(Q) = m2, a·m1 + b·m2 ≤ N,
    /// of the integer family aggregate for the requested class.
    fn pair_value(&self, label: &str, m1: usize, a: usize, m2: usize, b: usize) -> i128 {
        let (ea, eb) = (a.is_multiple_of(2), b.is_multiple_of(2));
        match (label, ea, eb) {
            ("ee", true, true) => self.ee[m1][m2],
            ("oe", false, true) => self.se[m1][m2],
            ("eo", true, false) => self.se[m2][m1],
            ("oo_distinct_gt", false, false) if m1 > m2 => self.ss[m1][m2],
            ("oo_distinct_lt", false, false) if m1 < m2 => self.ss[m1][m2],
            ("oo_distinct_eq", false, false) if m1 == m2 => self.ss[m1][m1] - self.e[m1],
            ("oo_equal_prime", false, false) if m1 == m2 => self.e[m1],
            _ => 0,
        }
    }

    /// Class value restricted by a predicate on (m1, a, m2, b).
    pub fn two_level_class_filtered(
        &self,
        label: &str,
        alpha: Complex64,
        beta: Complex64,
        keep: impl Fn(usize, usize, usize, usize) -> bool,
    ) -> Complex64 {
        let n = self.n_max;
        let mut terms = Vec::new();
        for m1 in 1..=n {
            for a in 1..=n / m1 {
                for m2 in 1..=n - a * m1 {
                    for b in 1..=(n - a * m1) / m2 {
                        if !keep(m1, a, m2, b) {
                            continue;
                        }
                        let v = self.pair_value(label, m1, a, m2, b);
                        if v == 0 {
                            continue;
                        }
                        let wt = (m1 * m2) as f64 * self.w(a * m1, alpha) * self.w(b * m2, beta);
                        terms.push(wt * v as f64);
                    }
                }
            }
        }
        pairwise_sum(&terms) / self.count as f64
    }

    pub fn two_level_classes(&self, alpha: Complex64, beta: Complex64) -> ClassBreakdown {
        let classes = TWO_LEVEL_CLASSES
            .iter()
            .map(|&l| {
                (
                    l.to_string(),
                    self.two_level_class_filtered(l, alpha, beta, |_, _, _, _| true),
                )
            })
            .collect();
        ClassBreakdown::from_classes(classes)
    }

    pub fn two_level(&self, alpha: Complex64, beta: Complex64) -> Complex64 {
        self.two_level_classes(alpha, beta).total
    }

    /// Two-level density through products of lambda coefficients.
    pub fn two_level_lambda(&self, alpha: Complex64, beta: Complex64) -> Complex64 {
        let mut terms = Vec::new();
        for n1 in 1..self.n_max {
            for n2 in 1..=self.n_max - n1 {
                terms.push(self.m2[n1][n2] as f64 * self.w(n1, alpha) * self.w(n2, beta));
            }
        }
        pairwise_sum(&terms) / self.count as f64
    }
}

/// (1/|H|) Σ_D L(1/2+α)L(1/2+β) / (L(1/2+γ)L(1/2+δ)), L(s) = L(q^{−s}).
pub fn ratio_average(
    fld: &FieldSpec,
    g: usize,
    shifts: &ShiftParams,
    precision: Precision,
) -> Result<Complex64> {
    let beta = shifts.beta_or_err()?;
    let gamma = shifts
        .gamma
        .ok_or_else(|| Error::Config("gamma shift required".into()))?;
    let delta = shifts
        .delta
        .ok_or_else(|| Error::Config("delta shift required".into()))?;
    let fam = LFamily::new(fld, g);
    let u = |s: Complex64| weight(fld.q(), 1, s);
    let (ua, ub, uc, ud) = (u(shifts.alpha), u(beta), u(gamma), u(delta));
    let deg = 2 * g + 1;
    let total = crate::ffpoly::monic_count(fld, deg);
    let parts: Vec<Result<(Complex64, u64)>> = chunked(total, CHUNK, |s, e| {
        let mut acc = Accumulator::new(precision);
        let mut cnt = 0u64;
        for d in crate::ffpoly::enumerate_squarefree_range(fld, deg, s, e) {
            let l = fam.l_polynomial(&d)?;
            let den = l.eval(uc) * l.eval(ud);
            if den.norm() < 1e-12 {
                return Err(Error::Numerical(format!("denominator L-value vanishes at D = {d}")));
            }
            acc.add(l.eval(ua) * l.eval(ub) / den);
            cnt += 1;
        }
        Ok((acc.value(), cnt))
    });
    let mut sums = Vec::with_capacity(parts.len());
    let mut count = 0;
    for p in parts {
        let (v, c) = p?;
        sums.push(v);
        count += c;
    }
    Ok(pairwise_sum(&sums) / count as f64)
}

#[cfg(test)]
mod tests;
