//! Ratios-conjecture predictions: closed forms, Euler products, degree-grouped
//! prime sums, the series R_1…R_4 and their Perron coefficient extraction.
//!
//! Series in u live on the circle |u| = q^{−1/8}. Pieces with poles inside that
//! circle (the one-swap and two-swap terms) are expanded as Laurent series there,
//! and Perron extraction sums every coefficient of index ≤ N, negative ones included.

mod euler;
mod predict;
mod primes;
mod series;
mod typei;

pub use euler::{
    a4_local_direct, a4_local_log, a_alpha_beta, mathcalA_series, mathcal_a_point, r4_point,
    ratio_recipe, zeta_q, RatioRecipe, A4_value, R4_series,
};
pub use predict::{
    default_cutoff, default_order, predict_one_level, predict_two_level, PredictionBreakdown,
};
pub use primes::{
    b_alpha_truncated, degree_sum, diagonal_generating_series, log_zeta_derivative_series,
    log_zeta_series, mathcalB_series, mathcalC_series, prime_count, PrimeSum, TailCertificate,
    B_alpha, R1_series,
};
pub use series::{contour_extract, perron_extract, PowerSeries};
pub use typei::{
    j2_oe, j2_oo_eq, j2_oo_gt, r23_point, t2_numerator, t2_point, tail_term, type_i_recombined,
    OoReading, TailVariant, A2_factor, A2_series, R23_series, T2_series,
};

/// Number of negative powers kept in Laurent windows.
pub const LAURENT_DEPTH: i64 = 64;

/// Nodes used for contour quadrature and DFT coefficient recovery.
pub const CONTOUR_POINTS: usize = 1024;

/// Radius of the Perron contour, q^{−1/8}.
pub fn contour_radius(q: u32) -> f64 {
    (q as f64).powf(-0.125)
}

#[cfg(test)]
mod tests;
