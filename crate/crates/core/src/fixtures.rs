//! The worked examples: two quintic helices and the degree-7 curve that is
//! 2-PH without being a helix.

use crate::curveforms::{Hodograph, HopfPair, PolynomialCurve, QuaternionPolynomial};
use crate::polycore::{ratio, RatPoly};

fn quaternion(u: &[i64], v: &[i64], p: &[i64], q: &[i64]) -> QuaternionPolynomial {
    QuaternionPolynomial::from_components(
        &RatPoly::from_ints(u),
        &RatPoly::from_ints(v),
        &RatPoly::from_ints(p),
        &RatPoly::from_ints(q),
    )
}

/// Monotone quintic helix: `u = t²−3t, v = t²−5t+10, p = −2t²+3t+5, q = t²−9t+10`.
pub fn example_one() -> QuaternionPolynomial {
    quaternion(&[0, -3, 1], &[10, -5, 1], &[5, 3, -2], &[10, -9, 1])
}

/// General quintic helix with `A1 = −6/7·(A0 + A2)`.
pub fn example_two() -> QuaternionPolynomial {
    quaternion(&[5, 12, -19], &[1, 18, -22], &[-1, -12, 15], &[3, 24, -31])
}

pub fn example_one_hopf() -> HopfPair {
    HopfPair::from(&example_one())
}

pub fn example_two_hopf() -> HopfPair {
    HopfPair::from(&example_two())
}

/// `(−3t + t³ + t⁵/5 + t⁷/21, 3t² − t⁴/2, −2t³)`
pub fn counterexample_curve() -> PolynomialCurve {
    let z = || ratio(0, 1);
    PolynomialCurve::new(
        RatPoly::new(vec![z(), ratio(-3, 1), z(), ratio(1, 1), z(), ratio(1, 5), z(), ratio(1, 21)]),
        RatPoly::new(vec![z(), z(), ratio(3, 1), z(), ratio(-1, 2)]),
        RatPoly::new(vec![z(), z(), z(), ratio(-2, 1)]),
    )
}

pub fn counterexample_hodograph() -> Hodograph {
    counterexample_curve().hodograph().expect("non-constant curve")
}
