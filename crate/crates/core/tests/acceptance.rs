//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see them.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use ffdensity::densities::{ratio_average, FamilyMoments, ShiftParams};
use ffdensity::ffpoly::{enumerate_monic, von_mangoldt, DegreeCountTable, FieldSpec};
use ffdensity::harness::{one_level_budget, ratio_budget, run_suites, two_level_budget, SuiteResult};
use ffdensity::parallel::Precision;
use ffdensity::ratios::*;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn field(q: u32) -> FieldSpec {
    FieldSpec::new(q as u64).unwrap()
}

fn report(id: u32, ok: bool, detail: String) {
    println!("AC{id} {}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "AC{id} failed: {detail}");
}

fn suites_ok(s: &[SuiteResult]) -> (bool, String) {
    let ok = s.iter().all(SuiteResult::passed);
    let detail = s
        .iter()
        .map(|r| format!("{} {}/{}", r.name, r.checked - r.failures, r.checked))
        .collect::<Vec<_>>()
        .join(", ");
    let first = s.iter().flat_map(|r| r.counterexamples.first()).next();
    (ok, match first {
        Some(f) => format!("{detail}; first counterexample: {f}"),
        None => detail,
    })
}

fn within(t: Instant, limit: Duration) -> (bool, String) {
    let e = t.elapsed();
    (e <= limit, format!("{:.1}s of {}s", e.as_secs_f64(), limit.as_secs()))
}

#[test]
fn ac01_exact_identities() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for q in [5u32, 13] {
        let f = field(q);
        let table = DegreeCountTable::new(&f, 8);
        for n in 1..=8u32 {
            let want = (q as u128).pow(n);
            if table.prime_power_degree_sum(n) != want {
                bad.push(format!("q={q} n={n} (degree counts)"));
            }
            // exhaustive where the enumeration is small
            if want <= 400_000 {
                let s: u128 = enumerate_monic(&f, n as usize)
                    .map(|m| von_mangoldt(&m, &f).unwrap() as u128)
                    .sum();
                if s != want {
                    bad.push(format!("q={q} n={n} (enumeration: {s})"));
                }
            }
        }
    }
    let s = run_suites(&field(5), &["squarefree_decomposition", "family_size"], None).unwrap();
    let (sok, sdet) = suites_ok(&s);
    let (tok, tdet) = within(t, Duration::from_secs(60));
    report(
        1,
        bad.is_empty() && sok && tok,
        format!("PPT q in {{5,13}}, n <= 8: {} mismatches; {sdet}; {tdet}", bad.len()),
    );
}

#[test]
fn ac02_poisson_and_gauss_sums() {
    let t = Instant::now();
    let mut s = run_suites(&field(5), &["poisson_summation", "gauss_sum_closed_form"], None).unwrap();
    let mut s13 = run_suites(&field(13), &["gauss_sum_closed_form"], None).unwrap();
    s13[0].name.push_str("(q=13)");
    s.append(&mut s13);
    let (ok, det) = suites_ok(&s);
    let (tok, tdet) = within(t, Duration::from_secs(300));
    report(2, ok && tok, format!("{det}; {tdet}"));
}

#[test]
fn ac03_l_function_structure() {
    let t = Instant::now();
    let s = run_suites(
        &field(5),
        &["functional_equation", "rh_circle", "lambda_dual_route"],
        None,
    )
    .unwrap();
    let (ok, det) = suites_ok(&s);
    let (tok, tdet) = within(t, Duration::from_secs(120));
    report(3, ok && tok, format!("H_3 and H_5 at q=5: {det}; {tdet}"));
}

#[test]
fn ac04_one_level_diagonal() {
    let (q, a) = (5u32, c(0.01));
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for g in 1..=2usize {
        for n in 1..4 * g {
            let m = FamilyMoments::compute(&field(q), g, n);
            let diag = m.one_level_classes(a).get("diagonal");
            let half = n / 2;
            let qa = |s: Complex64| (s * (q as f64).ln()).exp();
            let closed = (qa(-2.0 * a * half as f64) - 1.0) / (1.0 - qa(2.0 * a))
                - b_alpha_truncated(q, a, half);
            let r = (diag - closed).norm();
            let bound = 10.0 * n as f64 * (q as f64).powi(-2 * g as i32);
            worst = worst.max(r / bound);
            ok &= r <= bound;
        }
    }
    report(4, ok, format!("q=5, g in {{1,2}}, N < 4g: worst residual/bound = {worst:.3e}"));
}

#[test]
fn ac05_one_level_end_to_end() {
    let t = Instant::now();
    let q = 5u32;
    let mut ok = true;
    let mut worst: f64 = 0.0;
    let mut res = std::collections::BTreeMap::new();
    for g in 1..=3usize {
        for n in 1..4 * g {
            let m = FamilyMoments::compute(&field(q), g, n);
            for a in [0.01, 0.03] {
                let emp = m.one_level(c(a));
                let p = predict_one_level(q, g, n, c(a), default_cutoff(g)).unwrap();
                let r = (emp - p.total).norm();
                let b = one_level_budget(q, g, n);
                worst = worst.max(r / b);
                ok &= r <= b;
                res.insert((g, n, (a * 1000.0) as u32), r);
            }
        }
    }
    let mut shrink = true;
    for n1 in 1..=3usize {
        for a in [10u32, 30] {
            shrink &= res[&(3, 3 * n1, a)] < res[&(1, n1, a)];
        }
    }
    let (tok, tdet) = within(t, Duration::from_secs(1800));
    report(
        5,
        ok && shrink && tok,
        format!(
            "q=5, g <= 3, N < 4g, alpha in {{0.01,0.03}}: worst residual/budget = {worst:.3e}; \
             g=3 below g=1 at matched N/g: {shrink}; {tdet}"
        ),
    );
}

#[test]
fn ac06_two_level_diagonal() {
    let (q, g) = (5u32, 2usize);
    let (a, b) = (c(0.013), c(0.029));
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for n in 1..=7usize {
        let cls = FamilyMoments::compute(&field(q), g, n).two_level_classes(a, b);
        let diag = cls.get("ee") + cls.get("oo_equal_prime");
        let r1 = perron_extract(&R1_series(q, a, b, default_order(n)), n as i64).unwrap();
        let bound = 10.0 * n as f64 * (q as f64).powi(-2 * g as i32);
        worst = worst.max((diag - r1).norm() / bound);
        ok &= (diag - r1).norm() <= bound;
    }
    let r1 = R1_series(q, a, b, 12);
    let j = diagonal_generating_series(q, a, b, 12);
    let coeff_err = (0..=12).map(|n| (r1.coeff(n) - j.coeff(n)).norm()).fold(0.0, f64::max);
    report(
        6,
        ok && coeff_err <= 1e-8,
        format!(
            "q=5, g=2, N <= 7: worst residual/bound = {worst:.3e}; \
             coefficient error to order 12 = {coeff_err:.2e}"
        ),
    );
}

/// Worst residual/bound over N ∈ {4..7} for each tail variant.
fn type_i_scores(q: u32) -> Vec<(TailVariant, f64)> {
    let g = 2usize;
    let (a, b) = (c(0.013), c(0.029));
    let moms: Vec<_> = (4..=7)
        .map(|n| (n, FamilyMoments::compute(&field(q), g, n).two_level(a, b)))
        .collect();
    TailVariant::ALL
        .iter()
        .map(|&v| {
            let worst = moms
                .iter()
                .map(|&(n, emp)| {
                    let p = predict_two_level(q, g, n, a, b, v, default_order(n), default_cutoff(g)).unwrap();
                    (emp - p.type0 - p.type1).norm() / two_level_budget(q, g, n)
                })
                .fold(0.0, f64::max);
            (v, worst)
        })
        .collect()
}

fn winner(scores: &[(TailVariant, f64)]) -> TailVariant {
    scores
        .iter()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap()
        .0
}

#[test]
fn ac07_two_level_type_i() {
    let s5 = type_i_scores(5);
    let s13 = type_i_scores(13);
    let (w5, w13) = (winner(&s5), winner(&s13));
    let passes = s5.iter().any(|&(v, x)| v == w5 && x <= 1.0);
    let fmt = |s: &[(TailVariant, f64)]| {
        s.iter()
            .map(|(v, x)| format!("{} {x:.3e}", v.name()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    report(
        7,
        passes && w5 == w13,
        format!(
            "residual/bound at q=5: {}; at q=13: {}; winner {} at both: {}",
            fmt(&s5),
            fmt(&s13),
            w5.name(),
            w5 == w13
        ),
    );
}

#[test]
fn ac08_ratio_average() {
    let (q, g) = (13u32, 2usize);
    let (a, b, gm, d) = (0.02, 0.03, 0.025, 0.035);
    let emp = ratio_average(&field(q), g, &ShiftParams::four(a, b, gm, d), Precision::Compensated).unwrap();
    let r = ratio_recipe(q, g, c(a), c(b), c(gm), c(d), default_cutoff(g));
    let res = (emp - r.total).norm();
    let bound = ratio_budget(q, g, r.terms[0]);
    report(
        8,
        res <= bound,
        format!("q=13, g=2: |average - recipe| = {res:.3e}, bound {bound:.3e} (main term {:.6})", r.terms[0].re),
    );
}

#[test]
fn ac09_bound_suites() {
    let s = run_suites(&field(5), &["polya_vinogradov", "weil"], None).unwrap();
    let (ok, det) = suites_ok(&s);
    report(9, ok, det);
}

fn run_cli(args: &[&str], threads: usize, out: &Path) -> Vec<u8> {
    let status = Command::new(env!("CARGO_BIN_EXE_ffdensity"))
        .args(args)
        .args(["--threads", &threads.to_string(), "--out"])
        .arg(out)
        .status()
        .expect("binary runs");
    assert!(status.code().is_some_and(|c| c <= 1), "{args:?} exited with {status}");
    std::fs::read(out).unwrap()
}

#[test]
fn ac10_determinism_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 5] = [
        &["--mode", "one-level", "--g", "2", "--N", "5"],
        &["--mode", "two-level", "--g", "2", "--N", "6", "--alpha-re", "0.013", "--beta-re", "0.029"],
        &[
            "--mode", "ratio-average", "--g", "1", "--alpha-re", "0.02", "--beta-re", "0.03",
            "--gamma-re", "0.025", "--delta-re", "0.035", "--precision", "compensated",
        ],
        &["--mode", "sweep", "--g", "1..2", "--N", "2..7"],
        &["--mode", "verify-lemmas"],
    ];
    let mut same = 0;
    for (i, cmd) in commands.iter().enumerate() {
        let outs: Vec<Vec<u8>> = [1, 4, 8]
            .iter()
            .map(|&t| run_cli(cmd, t, &dir.path().join(format!("{i}-{t}.out"))))
            .collect();
        if outs.iter().all(|o| *o == outs[0] && !o.is_empty()) {
            same += 1;
        }
    }
    report(
        10,
        same == commands.len(),
        format!("{same}/{} commands byte-identical across --threads 1, 4, 8", commands.len()),
    );
}
