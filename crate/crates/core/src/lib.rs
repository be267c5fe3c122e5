//! Exact algebra for spatial Pythagorean-hodograph (PH) polynomial curves.
//!
//! The crate decides whether a polynomial curve is 2-PH (both `|α′|` and
//! `|α′ ∧ α″|` are polynomials), tests the Lancret condition exactly, and
//! classifies quintic PH curves into monotone helices, general helices and
//! non-helices through the decomposition `z1′z2 − z1z2′ = ω·z²`.
//!
//! All algebra runs over exact rationals or Gaussian rationals; floating point
//! only appears when sampling points for output.

pub mod analysis;
pub mod curveforms;
mod error;
pub mod fixtures;
pub mod polycore;
pub mod quintic;

pub use error::{Error, Result};
