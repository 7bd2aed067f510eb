use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Mode, RunConfig};
use crate::error::{Error, Result};
use crate::parallel::Precision;
use crate::ratios::{PredictionBreakdown, TailVariant};

pub const SCHEMA_VERSION: u32 = 1;

/// The configuration of one grid point, with defaults resolved.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub mode: Mode,
    pub q: u32,
    pub g: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub alpha: Complex64,
    pub beta: Option<Complex64>,
    pub gamma: Option<Complex64>,
    pub delta: Option<Complex64>,
    pub tail_variant: Option<TailVariant>,
    pub cutoff: usize,
    pub order: Option<i64>,
    pub precision: Precision,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftNudge {
    pub reason: String,
    pub original_alpha: Complex64,
    pub original_beta: Complex64,
    pub alpha: Complex64,
    pub beta: Complex64,
}

/// One run: empirical value, predicted decomposition, residual and budget.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub shift_nudge: Option<ShiftNudge>,
    pub empirical: Complex64,
    pub prediction: PredictionBreakdown,
    /// empirical − prediction.total
    pub residual: Complex64,
    pub residual_abs: f64,
    pub error_budget: f64,
    pub within_budget: bool,
    /// Set when N ≥ 4g: the brute-force side then contains Type-II content that
    /// is only modelled conjecturally.
    pub type_ii_caveat: bool,
    pub classes: BTreeMap<String, Complex64>,
    pub advisories: Vec<String>,
}

impl DensityReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        cfg: &RunConfig,
        g: usize,
        n: usize,
        nudge: Option<ShiftNudge>,
        empirical: Complex64,
        prediction: PredictionBreakdown,
        error_budget: f64,
        classes: BTreeMap<String, Complex64>,
        type_ii_caveat: bool,
        advisories: Vec<String>,
    ) -> Self {
        let two = matches!(cfg.mode, Mode::TwoLevel) || (cfg.mode == Mode::Sweep && cfg.beta.is_some());
        let ratio = cfg.mode == Mode::RatioAverage;
        let config = ConfigEcho {
            mode: cfg.mode,
            q: cfg.q,
            g,
            n,
            alpha: cfg.alpha,
            beta: cfg.beta,
            gamma: cfg.gamma,
            delta: cfg.delta,
            tail_variant: two.then_some(cfg.tail_variant),
            cutoff: cfg.cutoff_for(g),
            order: (two && !ratio).then(|| cfg.order_for(n)),
            precision: cfg.precision,
            seed: cfg.seed,
        };
        let residual = empirical - prediction.total;
        DensityReport {
            schema_version: SCHEMA_VERSION,
            config,
            shift_nudge: nudge,
            empirical,
            residual,
            residual_abs: residual.norm(),
            error_budget,
            within_budget: residual.norm() <= error_budget,
            type_ii_caveat,
            prediction,
            classes,
            advisories,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(format!("bad report: {e}")))
    }
}
