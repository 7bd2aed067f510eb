use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::SCHEMA_VERSION;
use super::{Mode, RunConfig};
use crate::charsums::{
    average_chi_square, gauss_prime_power_closed, gauss_sum_direct, monic_char_sum,
    polya_vinogradov_checks, poisson_with_table, residue_from_index, residue_symbol,
    residue_symbol_euler, squarefree_char_sum_decomposition, weil_checks, BoundCheck, GaussTable,
};
use crate::error::{Error, Result};
use crate::ffpoly::{
    enumerate_irreducible, enumerate_monic, enumerate_squarefree, squarefree_count, von_mangoldt,
    DegreeCountTable, FieldSpec, MonicPoly, PrimeList,
};
use crate::lfunc::{
    functional_equation_defect, lambda_coefficients, lambda_coefficients_direct, zeros, LFamily,
};
use crate::parallel::with_threads;

pub const MAX_COUNTEREXAMPLES: usize = 10;

/// Deliberate corruption used to check that the suites detect failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Negates the odd-exponent entries of the Gauss-sum case table.
    GaussSign,
}

impl std::str::FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gauss-sign" => Ok(Fault::GaussSign),
            _ => Err(Error::Config(format!("unknown fault {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub q: u32,
    pub seed: u64,
    pub fault: Option<Fault>,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Runs `check` on every item in parallel; results are kept in item order.
fn suite<T: Sync>(name: &str, items: &[T], check: impl Fn(&T) -> Option<String> + Sync) -> SuiteResult {
    let fails: Vec<String> = items.par_iter().filter_map(&check).collect();
    SuiteResult {
        name: name.into(),
        checked: items.len() as u64,
        failures: fails.len() as u64,
        counterexamples: fails.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
    }
}

fn bound_suite(name: &str, checks: Vec<BoundCheck>) -> SuiteResult {
    suite(name, &checks, |c| {
        (!c.ok()).then(|| format!("{}: {} > {}", c.label, c.value, c.bound))
    })
}

/// Largest d ≤ cap with q^d ≤ limit.
fn max_degree(q: u32, limit: u64, cap: usize) -> usize {
    let mut d = 0;
    while d < cap && (q as u64).pow(d as u32 + 1) <= limit {
        d += 1;
    }
    d
}

fn monics_upto(fld: &FieldSpec, lo: usize, hi: usize) -> Vec<MonicPoly> {
    (lo..=hi).flat_map(|n| enumerate_monic(fld, n)).collect()
}

fn ppt(fld: &FieldSpec) -> SuiteResult {
    let q = fld.q() as u128;
    let table = DegreeCountTable::new(fld, 8);
    let enum_max = max_degree(fld.q(), 5u64.pow(6), 8);
    let ns: Vec<usize> = (1..=8).collect();
    suite("prime_polynomial_theorem", &ns, |&n| {
        let counted = table.prime_power_degree_sum(n as u32);
        if counted != q.pow(n as u32) {
            return Some(format!("n={n}: degree-count sum {counted} != q^n"));
        }
        if n <= enum_max {
            let s: u128 = enumerate_monic(fld, n)
                .map(|f| von_mangoldt(&f, fld).unwrap() as u128)
                .sum();
            if s != q.pow(n as u32) {
                return Some(format!("n={n}: sum of Lambda over M_n = {s} != q^n"));
            }
        }
        None
    })
}

fn family_size(fld: &FieldSpec) -> SuiteResult {
    let q = fld.q() as u64;
    let gs: Vec<usize> = (1..=3).filter(|g| q.pow(2 * *g as u32 + 1) <= 5u64.pow(7)).collect();
    suite("family_size", &gs, |&g| {
        let want = q.pow(2 * g as u32 + 1) - q.pow(2 * g as u32);
        let n = enumerate_squarefree(fld, 2 * g + 1).count() as u64;
        let c = squarefree_count(fld, 2 * g + 1);
        (n != want || c != want).then(|| format!("g={g}: |H| = {n} (count {c}) != {want}"))
    })
}

fn lemma_2_1(fld: &FieldSpec) -> SuiteResult {
    let fs = monics_upto(fld, 1, max_degree(fld.q(), 3125, 5));
    suite("squarefree_decomposition", &fs, |f| {
        let (l, r) = squarefree_char_sum_decomposition(f, 1, fld).unwrap();
        (l != r).then(|| format!("f={f}: lhs {l} != rhs {r}"))
    })
}

fn lemma_2_2(fld: &FieldSpec) -> SuiteResult {
    let fs = monics_upto(fld, 1, max_degree(fld.q(), 625, 4));
    let mmax = max_degree(fld.q(), 3125, 5);
    suite("poisson_summation", &fs, |f| {
        let t = GaussTable::new(f, fld).unwrap();
        for m in 0..=mmax {
            let direct = monic_char_sum(f, m, fld) as f64;
            let dual = poisson_with_table(&t, f, m, fld);
            if (dual - Complex64::new(direct, 0.0)).norm() > 1e-9 {
                return Some(format!("f={f} m={m}: dual {dual} != direct {direct}"));
            }
        }
        None
    })
}

fn lemma_2_3(fld: &FieldSpec, fault: Option<Fault>) -> SuiteResult {
    let limit = 5u128.pow(6);
    let mut powers = Vec::new();
    for d in 1..=max_degree(fld.q(), limit as u64, 6) {
        for p in enumerate_irreducible(fld, d) {
            let np = p.norm(fld);
            let mut j = 1;
            while np.pow(j) <= limit {
                powers.push((p.clone(), j));
                j += 1;
            }
        }
    }
    suite("gauss_sum_closed_form", &powers, |(p, j)| {
        let f = p.pow(*j, fld);
        let n = f.degree();
        let size = (fld.q() as usize).pow(n as u32);
        // The table is the literal sum over u mod f, evaluated by a fast transform.
        let table = if size > 125 { Some(GaussTable::new(&f, fld).unwrap()) } else { None };
        for k in 0..size {
            let v = residue_from_index(k, n, fld);
            let mut closed = gauss_prime_power_closed(&v, p, *j, fld);
            if fault == Some(Fault::GaussSign) && j % 2 == 1 {
                closed = -closed;
            }
            let lit = match &table {
                Some(t) => t.get(&v, fld),
                None => gauss_sum_direct(&v, &f, fld).unwrap(),
            };
            if (lit - Complex64::new(closed, 0.0)).norm() > 1e-9 {
                return Some(format!("P={p} j={j} V={v}: closed {closed} != direct {lit}"));
            }
        }
        None
    })
}

fn lemma_2_6(fld: &FieldSpec) -> SuiteResult {
    let fs = monics_upto(fld, 1, max_degree(fld.q(), 625, 4));
    let bound = 10.0 * (fld.q() as f64).powi(-2);
    suite("average_of_chi_square", &fs, |f| {
        let (avg, prod) = average_chi_square(f, 1, fld).unwrap();
        ((avg - prod).abs() > bound).then(|| format!("f={f}: average {avg} vs product {prod}"))
    })
}

fn reciprocity(fld: &FieldSpec) -> SuiteResult {
    let fs = monics_upto(fld, 1, max_degree(fld.q(), 125, 3));
    suite("reciprocity", &fs, |a| {
        for b in &fs {
            let ab = residue_symbol(a.poly(), b, fld).unwrap();
            let ba = residue_symbol(b.poly(), a, fld).unwrap();
            if ab != ba {
                return Some(format!("A={a} B={b}: ({ab}) != ({ba})"));
            }
            let eu = residue_symbol_euler(a.poly(), b, fld).unwrap();
            if eu != ab {
                return Some(format!("A={a} B={b}: descent {ab} != Euler criterion {eu}"));
            }
        }
        None
    })
}

fn l_functions(fld: &FieldSpec) -> Vec<SuiteResult> {
    let q = fld.q() as u64;
    let nmax = max_degree(fld.q(), 5u64.pow(7), 7);
    let primes = PrimeList::new(fld, nmax);
    let mut ls = Vec::new();
    for g in [1usize, 2] {
        if q.pow(2 * g as u32 + 1) <= 5u64.pow(5) {
            let fam = LFamily::new(fld, g);
            let ds: Vec<MonicPoly> = enumerate_squarefree(fld, 2 * g + 1).collect();
            ls.par_extend(ds.into_par_iter().map(|d| {
                let l = fam.l_polynomial(&d);
                (d, l)
            }));
        }
    }
    vec![
        suite("functional_equation", &ls, |(d, l)| match l {
            Err(e) => Some(format!("D={d}: {e}")),
            Ok(l) => {
                let x = functional_equation_defect(l);
                (x != 0.0).then(|| format!("D={d}: defect {x}"))
            }
        }),
        suite("rh_circle", &ls, |(d, l)| {
            let l = l.as_ref().ok()?;
            match zeros(l) {
                Err(e) => Some(format!("D={d}: {e}")),
                Ok(z) => {
                    let x = z.rh_defect(fld.q());
                    (x > 1e-9).then(|| format!("D={d}: zero off |u| = q^(-1/2) by {x:e}"))
                }
            }
        }),
        suite("lambda_dual_route", &ls, |(d, l)| {
            let l = l.as_ref().ok()?;
            let a = lambda_coefficients(l, nmax);
            let b = lambda_coefficients_direct(d, nmax, &primes, fld).unwrap();
            (a != b).then(|| format!("D={d}: recurrence {a:?} != prime sum {b:?}"))
        }),
    ]
}

/// Runs every exact-identity and bound suite at the configured q.
pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let fld = cfg.validate()?;
    if cfg.mode != Mode::VerifyLemmas {
        return Err(Error::Config("cmd_verify needs mode verify-lemmas".into()));
    }
    let suites = with_threads(cfg.threads, || run_suites(&fld, &SUITE_NAMES, cfg.fault))?;
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        q: cfg.q,
        seed: cfg.seed,
        fault: cfg.fault,
        passed: suites.iter().all(SuiteResult::passed),
        suites,
    })
}

pub const SUITE_NAMES: [&str; 12] = [
    "prime_polynomial_theorem",
    "family_size",
    "squarefree_decomposition",
    "poisson_summation",
    "gauss_sum_closed_form",
    "average_of_chi_square",
    "reciprocity",
    "functional_equation",
    "rh_circle",
    "lambda_dual_route",
    "polya_vinogradov",
    "weil",
];

/// Runs the named suites only, in the order given.
pub fn run_suites(fld: &FieldSpec, names: &[&str], fault: Option<Fault>) -> Result<Vec<SuiteResult>> {
    let mut out = Vec::new();
    let mut lf: Option<Vec<SuiteResult>> = None;
    for &name in names {
        let r = match name {
            "prime_polynomial_theorem" => ppt(fld),
            "family_size" => family_size(fld),
            "squarefree_decomposition" => lemma_2_1(fld),
            "poisson_summation" => lemma_2_2(fld),
            "gauss_sum_closed_form" => lemma_2_3(fld, fault),
            "average_of_chi_square" => lemma_2_6(fld),
            "reciprocity" => reciprocity(fld),
            "functional_equation" | "rh_circle" | "lambda_dual_route" => {
                let all = lf.get_or_insert_with(|| l_functions(fld));
                all.iter().find(|s| s.name == name).cloned().expect("suite present")
            }
            "polya_vinogradov" => {
                let pv = max_degree(fld.q(), 5u64.pow(6), 6);
                bound_suite(name, polya_vinogradov_checks(1, pv, 4.0, fld))
            }
            "weil" => {
                let wv = max_degree(fld.q(), 625, 4);
                let wn = max_degree(fld.q(), 5u64.pow(6), 6);
                bound_suite(name, weil_checks(wv, wn, 2.0, fld))
            }
            _ => return Err(Error::Config(format!("unknown suite {name:?}"))),
        };
        out.push(r);
    }
    Ok(out)
}
