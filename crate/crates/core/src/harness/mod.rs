//! Run configuration, the single-run commands, sweeps and the verification
//! suites behind the `ffdensity` binary.

mod report;
mod sweep;
mod verify;

use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::densities::{FamilyMoments, ShiftParams};
use crate::error::{Error, Result};
use crate::ffpoly::FieldSpec;
use crate::parallel::{with_threads, Precision};
use crate::ratios::{
    default_cutoff, default_order, predict_one_level, predict_two_level, ratio_recipe,
    PredictionBreakdown, TailVariant,
};

pub use report::{DensityReport, ShiftNudge, SCHEMA_VERSION};
pub use sweep::{cmd_sweep, SweepRow, SWEEP_HEADER};
pub use verify::{
    cmd_verify, run_suites, Fault, SuiteResult, VerifyReport, MAX_COUNTEREXAMPLES, SUITE_NAMES,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    VerifyLemmas,
    OneLevel,
    TwoLevel,
    RatioAverage,
    Sweep,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "verify-lemmas" => Mode::VerifyLemmas,
            "one-level" => Mode::OneLevel,
            "two-level" => Mode::TwoLevel,
            "ratio-average" => Mode::RatioAverage,
            "sweep" => Mode::Sweep,
            _ => return Err(Error::Config(format!("unknown mode {s:?}"))),
        })
    }
}

/// Everything that determines a run. `out` and `threads` never reach a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub mode: Mode,
    pub q: u32,
    /// Genus values; a single entry outside sweeps.
    pub g: Vec<usize>,
    /// Truncation degrees; a single entry outside sweeps.
    #[serde(rename = "N")]
    pub n: Vec<usize>,
    pub alpha: Complex64,
    pub beta: Option<Complex64>,
    pub gamma: Option<Complex64>,
    pub delta: Option<Complex64>,
    pub tail_variant: TailVariant,
    pub cutoff: Option<usize>,
    pub order: Option<i64>,
    pub precision: Precision,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fault: Option<Fault>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip, default = "one")]
    pub threads: usize,
}

fn one() -> usize {
    1
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::OneLevel,
            q: 5,
            g: vec![1],
            n: vec![3],
            alpha: Complex64::new(0.01, 0.0),
            beta: None,
            gamma: None,
            delta: None,
            tail_variant: TailVariant::Geometric,
            cutoff: None,
            order: None,
            precision: Precision::Double,
            seed: 0,
            fault: None,
            out: None,
            threads: 1,
        }
    }
}

impl RunConfig {
    /// Checks the field and the mode-specific fields before any computation.
    pub fn validate(&self) -> Result<FieldSpec> {
        let fld = FieldSpec::new(self.q as u64).map_err(|e| Error::Config(e.to_string()))?;
        if self.mode == Mode::VerifyLemmas {
            return Ok(fld);
        }
        if self.g.is_empty() || self.n.is_empty() {
            return Err(Error::Config("g and N must be given".into()));
        }
        if self.g.contains(&0) {
            return Err(Error::Config("g must be at least 1".into()));
        }
        if self.n.contains(&0) {
            return Err(Error::Config("N must be at least 1".into()));
        }
        if self.mode != Mode::Sweep && (self.g.len() > 1 || self.n.len() > 1) {
            return Err(Error::Config("ranges of g or N are only allowed in sweep mode".into()));
        }
        if self.threads == 0 {
            return Err(Error::Config("threads must be at least 1".into()));
        }
        match self.mode {
            Mode::OneLevel => {
                let (g, n) = (self.g[0], self.n[0]);
                if n >= 4 * g {
                    return Err(Error::Config(format!(
                        "one-level mode needs N < 4g (got N = {n}, g = {g}); \
                         the one-level prediction is only derived in that range"
                    )));
                }
                if self.alpha.norm() < 1e-12 {
                    return Err(Error::Config("alpha = 0 is not supported; use a small nonzero shift".into()));
                }
            }
            Mode::TwoLevel => {
                self.beta_or_err()?;
            }
            Mode::RatioAverage => {
                self.beta_or_err()?;
                if self.gamma.is_none() || self.delta.is_none() {
                    return Err(Error::Config("ratio-average needs gamma and delta".into()));
                }
            }
            Mode::Sweep => {
                if self.beta.is_none() && self.alpha.norm() < 1e-12 {
                    return Err(Error::Config("alpha = 0 is not supported".into()));
                }
            }
            Mode::VerifyLemmas => {}
        }
        Ok(fld)
    }

    fn beta_or_err(&self) -> Result<Complex64> {
        self.beta.ok_or_else(|| Error::Config("beta shift required".into()))
    }

    fn single(&self) -> (usize, usize) {
        (self.g[0], self.n[0])
    }

    fn cutoff_for(&self, g: usize) -> usize {
        self.cutoff.unwrap_or_else(|| default_cutoff(g))
    }

    fn order_for(&self, n: usize) -> i64 {
        self.order.unwrap_or_else(|| default_order(n))
    }
}

/// Process exit status for a finished or failed run.
pub fn exit_code(err: Option<&Error>, suite_passed: bool) -> i32 {
    match err {
        None if suite_passed => 0,
        None => 1,
        Some(Error::Numerical(_)) => 3,
        Some(_) => 2,
    }
}

/// One-level budget 10·(q^{−g} + q^{−N/2})·q^{0.1g}.
pub fn one_level_budget(q: u32, g: usize, n: usize) -> f64 {
    let q = q as f64;
    let g = g as f64;
    10.0 * (q.powf(-g) + q.powf(-(n as f64) / 2.0)) * q.powf(0.1 * g)
}

/// Two-level budget 10·(N²q^{N/2−2g} + N·q^{−g/2}).
pub fn two_level_budget(q: u32, g: usize, n: usize) -> f64 {
    let (q, g, n) = (q as f64, g as f64, n as f64);
    10.0 * (n * n * q.powf(n / 2.0 - 2.0 * g) + n * q.powf(-g / 2.0))
}

/// Ratio-average budget 20·q^{−0.9g}·|main term|.
pub fn ratio_budget(q: u32, g: usize, main: Complex64) -> f64 {
    20.0 * (q as f64).powf(-0.9 * g as f64) * main.norm()
}

/// Moves α and β apart by ±1e−3·i when they nearly coincide.
pub fn nudge_shifts(alpha: Complex64, beta: Complex64) -> (Complex64, Complex64, Option<ShiftNudge>) {
    if (alpha - beta).norm() >= 1e-6 {
        return (alpha, beta, None);
    }
    let d = Complex64::new(0.0, 1e-3);
    let (a, b) = (alpha + d, beta - d);
    (
        a,
        b,
        Some(ShiftNudge {
            reason: "|alpha - beta| < 1e-6 puts the Type-I tail term at its pole".into(),
            original_alpha: alpha,
            original_beta: beta,
            alpha: a,
            beta: b,
        }),
    )
}

fn check_dual_route(a: Complex64, b: Complex64, what: &str) -> Result<()> {
    if (a - b).norm() > 1e-9 * (1.0 + a.norm()) {
        return Err(Error::Numerical(format!("{what}: the two routes differ by {:e}", (a - b).norm())));
    }
    Ok(())
}

pub(crate) fn one_level_report(cfg: &RunConfig, fld: &FieldSpec, g: usize, n: usize) -> Result<DensityReport> {
    let alpha = cfg.alpha;
    let mom = FamilyMoments::compute(fld, g, n);
    let empirical = mom.one_level(alpha);
    let classes = mom.one_level_classes(alpha);
    check_dual_route(empirical, classes.total, "one-level density")?;
    let prediction = predict_one_level(cfg.q, g, n, alpha, cfg.cutoff_for(g))?;
    let shifts = ShiftParams {
        alpha,
        beta: None,
        gamma: None,
        delta: None,
    };
    Ok(DensityReport::new(
        cfg,
        g,
        n,
        None,
        empirical,
        prediction,
        one_level_budget(cfg.q, g, n),
        classes.classes,
        false,
        shifts.advisories(g),
    ))
}

pub(crate) fn two_level_report(cfg: &RunConfig, fld: &FieldSpec, g: usize, n: usize) -> Result<DensityReport> {
    let (alpha, beta, nudge) = nudge_shifts(cfg.alpha, cfg.beta_or_err()?);
    let mom = FamilyMoments::compute(fld, g, n);
    let classes = mom.two_level_classes(alpha, beta);
    let empirical = classes.total;
    check_dual_route(empirical, mom.two_level_lambda(alpha, beta), "two-level density")?;
    let prediction = predict_two_level(
        cfg.q,
        g,
        n,
        alpha,
        beta,
        cfg.tail_variant,
        cfg.order_for(n),
        cfg.cutoff_for(g),
    )?;
    let shifts = ShiftParams {
        alpha,
        beta: Some(beta),
        gamma: None,
        delta: None,
    };
    Ok(DensityReport::new(
        cfg,
        g,
        n,
        nudge,
        empirical,
        prediction,
        two_level_budget(cfg.q, g, n),
        classes.classes,
        n >= 4 * g,
        shifts.advisories(g),
    ))
}

pub(crate) fn ratio_report(cfg: &RunConfig, fld: &FieldSpec, g: usize, n: usize) -> Result<DensityReport> {
    let shifts = ShiftParams {
        alpha: cfg.alpha,
        beta: cfg.beta,
        gamma: cfg.gamma,
        delta: cfg.delta,
    };
    let beta = cfg.beta_or_err()?;
    let (gamma, delta) = (shifts.gamma.unwrap_or_default(), shifts.delta.unwrap_or_default());
    let empirical = crate::densities::ratio_average(fld, g, &shifts, cfg.precision)?;
    let r = ratio_recipe(cfg.q, g, cfg.alpha, beta, gamma, delta, cfg.cutoff_for(g));
    let prediction = PredictionBreakdown {
        type0: r.terms[0],
        type1: r.terms[1] + r.terms[2],
        type2: r.terms[3],
        total: r.total,
        tail_variant: None,
        certificates: r.certificates,
    };
    Ok(DensityReport::new(
        cfg,
        g,
        n,
        None,
        empirical,
        prediction,
        ratio_budget(cfg.q, g, r.terms[0]),
        Default::default(),
        false,
        shifts.advisories(g),
    ))
}

pub fn cmd_one_level(cfg: &RunConfig) -> Result<DensityReport> {
    let fld = cfg.validate()?;
    if cfg.mode != Mode::OneLevel {
        return Err(Error::Config("cmd_one_level needs mode one-level".into()));
    }
    let (g, n) = cfg.single();
    with_threads(cfg.threads, || one_level_report(cfg, &fld, g, n))
}

pub fn cmd_two_level(cfg: &RunConfig) -> Result<DensityReport> {
    let fld = cfg.validate()?;
    if cfg.mode != Mode::TwoLevel {
        return Err(Error::Config("cmd_two_level needs mode two-level".into()));
    }
    let (g, n) = cfg.single();
    with_threads(cfg.threads, || two_level_report(cfg, &fld, g, n))
}

pub fn cmd_ratio_average(cfg: &RunConfig) -> Result<DensityReport> {
    let fld = cfg.validate()?;
    if cfg.mode != Mode::RatioAverage {
        return Err(Error::Config("cmd_ratio_average needs mode ratio-average".into()));
    }
    let (g, n) = cfg.single();
    with_threads(cfg.threads, || ratio_report(cfg, &fld, g, n))
}

#[cfg(test)]
mod tests;
