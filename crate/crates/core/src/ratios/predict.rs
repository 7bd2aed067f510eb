//! Conjectured one- and two-level densities split by number of swaps.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::euler::R4_series;
use super::primes::{qpow, B_alpha, R1_series, TailCertificate};
use super::series::perron_extract;
use super::typei::{R23_series, TailVariant};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PredictionBreakdown {
    pub type0: Complex64,
    pub type1: Complex64,
    pub type2: Complex64,
    pub total: Complex64,
    pub tail_variant: Option<TailVariant>,
    pub certificates: Vec<TailCertificate>,
}

impl PredictionBreakdown {
    fn new(
        type0: Complex64,
        type1: Complex64,
        type2: Complex64,
        tail_variant: Option<TailVariant>,
        certificates: Vec<TailCertificate>,
    ) -> Self {
        PredictionBreakdown {
            type0,
            type1,
            type2,
            total: type0 + type1 + type2,
            tail_variant,
            certificates,
        }
    }
}

/// Default series order for an extraction at degree N.
pub fn default_order(n: usize) -> i64 {
    n as i64 + 2
}

/// Default prime-degree cutoff for Euler products and prime sums.
pub fn default_cutoff(g: usize) -> usize {
    (4 * g + 10).max(30)
}

/// (q^{−2mα} − 1)/(1 − q^{2α}) = Σ_{1≤n≤m} q^{−2nα}.
fn diagonal_geometric(q: f64, m: usize, alpha: Complex64) -> Complex64 {
    (qpow(q, -2.0 * alpha * m as f64) - 1.0) / (1.0 - qpow(q, 2.0 * alpha))
}

/// The one-level prediction with the diagonal (type0) and one-swap (type1) terms.
pub fn predict_one_level(
    q: u32,
    g: usize,
    n: usize,
    alpha: Complex64,
    cutoff: usize,
) -> Result<PredictionBreakdown> {
    if alpha.norm() < 1e-12 {
        return Err(Error::InvalidArgument(
            "alpha = 0 is a removable singularity; take the limit explicitly".into(),
        ));
    }
    let qf = q as f64;
    let half = n / 2;
    let b = B_alpha(q, alpha, cutoff);
    let type0 = diagonal_geometric(qf, half, alpha) - b.value;
    let type1 = if n >= 2 * g {
        let s = qpow(qf, -2.0 * alpha * g as f64);
        (s - qpow(qf, -2.0 * alpha * half as f64)) / (1.0 - qpow(qf, 2.0 * alpha)) + s / (qf - 1.0)
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(PredictionBreakdown::new(
        type0,
        type1,
        Complex64::new(0.0, 0.0),
        None,
        vec![b.certificate("B(alpha)")],
    ))
}

/// The two-level prediction: Perron extraction of R_1, R_2 + R_3 and R_4.
#[allow(clippy::too_many_arguments)]
pub fn predict_two_level(
    q: u32,
    g: usize,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    variant: TailVariant,
    order: i64,
    cutoff: usize,
) -> Result<PredictionBreakdown> {
    let n = n as i64;
    let type0 = perron_extract(&R1_series(q, alpha, beta, order), n)?;
    let type1 = perron_extract(&R23_series(q, alpha, beta, g, order, variant)?, n)?;
    let (r4, cert) = R4_series(q, alpha, beta, g, order, cutoff);
    let type2 = perron_extract(&r4, n)?;
    Ok(PredictionBreakdown::new(type0, type1, type2, Some(variant), vec![cert]))
}
