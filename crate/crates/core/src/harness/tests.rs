use super::*;

fn cfg(mode: Mode, g: usize, n: usize) -> RunConfig {
    RunConfig {
        mode,
        g: vec![g],
        n: vec![n],
        ..RunConfig::default()
    }
}

#[test]
fn one_level_report_within_budget_and_round_trips() {
    let rep = cmd_one_level(&cfg(Mode::OneLevel, 1, 3)).unwrap();
    assert!(rep.within_budget, "{} > {}", rep.residual_abs, rep.error_budget);
    assert_eq!(rep.residual, rep.empirical - rep.prediction.total);
    assert!(!rep.prediction.certificates.is_empty());
    let s = rep.to_json();
    assert_eq!(DensityReport::from_json(&s).unwrap().to_json(), s);
}

#[test]
fn one_level_rejects_large_n() {
    let e = cmd_one_level(&cfg(Mode::OneLevel, 1, 4)).unwrap_err();
    assert!(matches!(e, Error::Config(ref m) if m.contains("N < 4g")));
    assert_eq!(exit_code(Some(&e), true), 2);
}

#[test]
fn bad_field_rejected_before_work() {
    let c = RunConfig {
        q: 7,
        ..cfg(Mode::VerifyLemmas, 1, 1)
    };
    assert!(matches!(cmd_verify(&c), Err(Error::Config(_))));
}

#[test]
fn two_level_caveat_flag_and_variant_toggle() {
    let mut c = cfg(Mode::TwoLevel, 1, 4);
    c.alpha = Complex64::new(0.013, 0.0);
    c.beta = Some(Complex64::new(0.029, 0.0));
    let a = cmd_two_level(&c).unwrap();
    assert!(a.type_ii_caveat);
    c.tail_variant = TailVariant::Paper;
    let b = cmd_two_level(&c).unwrap();
    assert_eq!(a.empirical, b.empirical);
    assert_eq!(a.prediction.type0, b.prediction.type0);
    assert_eq!(a.prediction.type2, b.prediction.type2);
    assert_ne!(a.prediction.type1, b.prediction.type1);
    c.n = vec![3];
    assert!(!cmd_two_level(&c).unwrap().type_ii_caveat);
}

#[test]
fn coincident_shifts_are_nudged() {
    let mut c = cfg(Mode::TwoLevel, 1, 3);
    c.beta = Some(c.alpha);
    let rep = cmd_two_level(&c).unwrap();
    let n = rep.shift_nudge.expect("nudge reported");
    assert_eq!(n.original_alpha, c.alpha);
    assert!((n.alpha - n.beta).norm() > 1e-3);
}

#[test]
fn sweep_grid_and_header() {
    let c = RunConfig {
        mode: Mode::Sweep,
        g: vec![1, 2],
        n: (2..=7).collect(),
        ..RunConfig::default()
    };
    let mut buf = Vec::new();
    assert_eq!(cmd_sweep(&c, &mut buf, None).unwrap(), 12);
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.split("\r\n").filter(|l| !l.is_empty()).collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[0], SWEEP_HEADER.join(","));
    for l in &lines[1..] {
        assert_eq!(l.split(',').count(), SWEEP_HEADER.len());
    }
}

#[test]
fn interrupted_sweep_leaves_marker() {
    let c = RunConfig {
        mode: Mode::Sweep,
        g: vec![1],
        n: vec![2, 3],
        ..RunConfig::default()
    };
    let stop = std::sync::atomic::AtomicBool::new(true);
    let mut buf = Vec::new();
    assert!(cmd_sweep(&c, &mut buf, Some(&stop)).is_err());
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("schema_version,"));
    assert!(text.trim_end().ends_with("interrupted after 0 of 2 rows"));
}

#[test]
fn ratio_average_report() {
    let mut c = cfg(Mode::RatioAverage, 1, 1);
    c.alpha = Complex64::new(0.02, 0.0);
    c.beta = Some(Complex64::new(0.03, 0.0));
    c.gamma = Some(Complex64::new(0.025, 0.0));
    c.delta = Some(Complex64::new(0.035, 0.0));
    let rep = cmd_ratio_average(&c).unwrap();
    assert_eq!(rep.prediction.certificates.len(), 4);
    assert!(rep.residual_abs < 0.05);
}
