//! Curve representations and the exact conversions among them.

mod forms;
mod quaternion;
pub mod vector;

pub use forms::{
    bezier_to_power, default_origin, hodograph_from_hopf, hodograph_from_quaternion,
    hopf_from_quaternion, integrate, sigma_poly, Hodograph, HopfPair, PhRepresentation,
    PolynomialCurve,
};
pub use quaternion::{Quaternion, QuaternionPolynomial};
