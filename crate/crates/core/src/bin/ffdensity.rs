use std::io::Write;
use std::path::PathBuf;
use std::process::exit;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::Parser;
use num_complex::Complex64;

use ffdensity::harness::{
    cmd_one_level, cmd_ratio_average, cmd_sweep, cmd_two_level, cmd_verify, exit_code, Fault, Mode,
    RunConfig,
};
use ffdensity::parallel::Precision;
use ffdensity::ratios::TailVariant;
use ffdensity::Error;

/// Level densities of quadratic Dirichlet L-functions over F_q[x]: brute force
/// against the ratios-conjecture prediction.
#[derive(Parser, Debug)]
#[command(name = "ffdensity", version)]
struct Cli {
    /// verify-lemmas | one-level | two-level | ratio-average | sweep
    #[arg(long)]
    mode: String,
    /// Field size, a prime with q = 1 mod 4
    #[arg(long, default_value_t = 5)]
    q: u32,
    /// Genus; in sweep mode a list "1,2" or range "1..3"
    #[arg(long, default_value = "1")]
    g: String,
    /// Truncation degree; in sweep mode a list or range
    #[arg(long = "N", default_value = "3")]
    n: String,
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    alpha_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha_im: f64,
    #[arg(long, allow_negative_numbers = true)]
    beta_re: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta_im: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    gamma_re: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    gamma_im: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    delta_re: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    delta_im: Option<f64>,
    /// paper | geometric
    #[arg(long, default_value = "geometric")]
    tail_variant: String,
    /// Prime-degree cutoff for Euler products and prime sums
    #[arg(long)]
    cutoff: Option<usize>,
    /// Series order for Perron extraction
    #[arg(long)]
    order: Option<i64>,
    /// double | compensated
    #[arg(long, default_value = "double")]
    precision: String,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::Config(format!("cannot parse {what} = {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn shift(re: Option<f64>, im: Option<f64>) -> Option<Complex64> {
    match (re, im) {
        (None, None) => None,
        (re, im) => Some(Complex64::new(re.unwrap_or(0.0), im.unwrap_or(0.0))),
    }
}

fn precision(s: &str) -> Result<Precision, Error> {
    match s {
        "double" => Ok(Precision::Double),
        "compensated" => Ok(Precision::Compensated),
        _ => Err(Error::Config(format!("unknown precision {s:?}"))),
    }
}

fn config(cli: &Cli) -> Result<RunConfig, Error> {
    Ok(RunConfig {
        mode: cli.mode.parse::<Mode>()?,
        q: cli.q,
        g: parse_list(&cli.g, "g")?,
        n: parse_list(&cli.n, "N")?,
        alpha: Complex64::new(cli.alpha_re, cli.alpha_im),
        beta: shift(cli.beta_re, cli.beta_im),
        gamma: shift(cli.gamma_re, cli.gamma_im),
        delta: shift(cli.delta_re, cli.delta_im),
        tail_variant: cli.tail_variant.parse::<TailVariant>()?,
        cutoff: cli.cutoff,
        order: cli.order,
        precision: precision(&cli.precision)?,
        seed: cli.seed,
        fault: cli.inject_fault.as_deref().map(str::parse::<Fault>).transpose()?,
        out: cli.out.clone(),
        threads: cli.threads,
    })
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match out {
        Some(p) => Box::new(
            std::fs::File::create(p).map_err(|e| Error::Config(format!("{}: {e}", p.display())))?,
        ),
        None => Box::new(std::io::stdout()),
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    let mut w = sink(out)?;
    w.write_all(text.as_bytes())
        .and_then(|_| w.flush())
        .map_err(|e| Error::Config(format!("write failed: {e}")))
}

fn run(cfg: &RunConfig) -> Result<bool, Error> {
    match cfg.mode {
        Mode::VerifyLemmas => {
            let rep = cmd_verify(cfg)?;
            emit(&cfg.out, &rep.to_json())?;
            for s in rep.suites.iter().filter(|s| !s.passed()) {
                eprintln!("suite {} failed {} of {} checks", s.name, s.failures, s.checked);
                for c in &s.counterexamples {
                    eprintln!("  {c}");
                }
            }
            Ok(rep.passed)
        }
        Mode::OneLevel | Mode::TwoLevel | Mode::RatioAverage => {
            let rep = match cfg.mode {
                Mode::OneLevel => cmd_one_level(cfg)?,
                Mode::TwoLevel => cmd_two_level(cfg)?,
                _ => cmd_ratio_average(cfg)?,
            };
            emit(&cfg.out, &rep.to_json())?;
            Ok(rep.within_budget)
        }
        Mode::Sweep => {
            let stop = Arc::new(AtomicBool::new(false));
            let flag = stop.clone();
            let _ = ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst));
            let mut w = sink(&cfg.out)?;
            cmd_sweep(cfg, &mut *w, Some(&stop))?;
            Ok(true)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = config(&cli).and_then(|cfg| run(&cfg));
    let code = match &result {
        Ok(passed) => exit_code(None, *passed),
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(Some(e), false)
        }
    };
    exit(code);
}
