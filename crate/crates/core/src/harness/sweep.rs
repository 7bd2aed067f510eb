use std::io::Write;
use std::sync::atomic::{AtomicBool, Ordering};

use num_complex::Complex64;

use super::report::{DensityReport, SCHEMA_VERSION};
use super::{one_level_report, two_level_report, Mode, RunConfig};
use crate::error::{Error, Result};
use crate::parallel::with_threads;

pub const SWEEP_HEADER: [&str; 27] = [
    "schema_version",
    "level",
    "q",
    "g",
    "N",
    "alpha_re",
    "alpha_im",
    "beta_re",
    "beta_im",
    "tail_variant",
    "empirical_re",
    "empirical_im",
    "type0_re",
    "type0_im",
    "type1_re",
    "type1_im",
    "type2_re",
    "type2_im",
    "total_re",
    "total_im",
    "residual_re",
    "residual_im",
    "residual_abs",
    "error_budget",
    "within_budget",
    "type_ii_caveat",
    "nudged",
];

/// Scalar fields of one sweep grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub report: DensityReport,
}

impl SweepRow {
    pub fn record(&self) -> Vec<String> {
        let r = &self.report;
        let c = &r.config;
        let f = |x: f64| format!("{x}");
        let z = |x: Complex64| [f(x.re), f(x.im)];
        let beta = c.beta.map(z).unwrap_or_else(|| [String::new(), String::new()]);
        let p = &r.prediction;
        let mut v = vec![
            SCHEMA_VERSION.to_string(),
            if c.beta.is_some() { "two-level" } else { "one-level" }.to_string(),
            c.q.to_string(),
            c.g.to_string(),
            c.n.to_string(),
        ];
        v.extend(z(c.alpha));
        v.extend(beta);
        v.push(c.tail_variant.map(|t| t.name().to_string()).unwrap_or_default());
        for x in [r.empirical, p.type0, p.type1, p.type2, p.total, r.residual] {
            v.extend(z(x));
        }
        v.push(f(r.residual_abs));
        v.push(f(r.error_budget));
        v.push(r.within_budget.to_string());
        v.push(r.type_ii_caveat.to_string());
        v.push(r.shift_nudge.is_some().to_string());
        v
    }
}

/// Writes one CSV row per (g, N) grid point, in that nesting order, flushing
/// after every row. When `stop` is raised or a row fails, a `# truncated` line
/// is appended and the run ends early.
pub fn cmd_sweep(cfg: &RunConfig, out: &mut dyn Write, stop: Option<&AtomicBool>) -> Result<usize> {
    let fld = cfg.validate()?;
    if cfg.mode != Mode::Sweep {
        return Err(Error::Config("cmd_sweep needs mode sweep".into()));
    }
    let io = |e: std::io::Error| Error::Config(format!("write failed: {e}"));
    let emit = |out: &mut dyn Write, rec: &[String]| -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(rec).map_err(|e| Error::Config(e.to_string()))?;
        let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
        out.write_all(&bytes).map_err(io)?;
        out.flush().map_err(io)
    };
    let header: Vec<String> = SWEEP_HEADER.iter().map(|s| s.to_string()).collect();
    emit(out, &header)?;
    let mut rows = 0;
    let total = cfg.g.len() * cfg.n.len();
    for &g in &cfg.g {
        for &n in &cfg.n {
            if stop.is_some_and(|s| s.load(Ordering::SeqCst)) {
                writeln!(out, "# truncated: interrupted after {rows} of {total} rows").map_err(io)?;
                out.flush().map_err(io)?;
                return Err(Error::Config("sweep interrupted".into()));
            }
            let rep = with_threads(cfg.threads, || {
                if cfg.beta.is_some() {
                    two_level_report(cfg, &fld, g, n)
                } else {
                    one_level_report(cfg, &fld, g, n).map(|mut r| {
                        r.type_ii_caveat = n >= 4 * g;
                        r
                    })
                }
            });
            let rep = match rep {
                Ok(r) => r,
                Err(e) => {
                    writeln!(out, "# truncated: {e} at g = {g}, N = {n}").map_err(io)?;
                    out.flush().map_err(io)?;
                    return Err(e);
                }
            };
            emit(out, &SweepRow { report: rep }.record())?;
            rows += 1;
        }
    }
    Ok(rows)
}
