pub mod charsums;
pub mod densities;
pub mod error;
pub mod ffpoly;
pub mod harness;
pub mod lfunc;
pub mod parallel;
pub mod ratios;

pub use error::{Error, Result};
