use num_traits::{Signed, Zero};

use crate::curveforms::HopfPair;
use crate::error::{Error, Result};
use crate::polycore::{gcd::primitive_part, wronskian, GaussPoly, GaussRat, RatPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionCase {
    /// `ω` constant, `z` linear: `W` is a quadratic with zero discriminant.
    OmegaConstant,
    /// `z` constant: `W` is a complex constant times a real polynomial.
    ZConstant,
    /// `W` is a non-zero constant.
    BothConstant,
    /// No decomposition exists; the curve is not 2-PH.
    Degenerate,
}

/// `W = ω·z²` with `ω` primitive and positive-leading, every other constant folded into `z²`.
///
/// For the `Degenerate` case `ω = 1` and `z_squared = W`, which is not a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskianDecomposition {
    pub omega: RatPoly,
    pub z_squared: GaussPoly,
    pub case: DecompositionCase,
}

impl WronskianDecomposition {
    pub fn wronskian(&self) -> GaussPoly {
        &self.omega.to_gauss() * &self.z_squared
    }

    pub fn exists(&self) -> bool {
        self.case != DecompositionCase::Degenerate
    }

    /// Whether `W` is also a complex constant times a real polynomial, so that a
    /// constant `z` works too. Always true for `ZConstant` and `BothConstant`.
    pub fn z_constant_applies(&self) -> bool {
        real_proportional(&self.wronskian()).is_some()
    }
}

/// Real polynomial `R` with `W = lc(W)·R`, if one exists.
fn real_proportional(w: &GaussPoly) -> Option<RatPoly> {
    let lc = w.leading()?.clone();
    let r = w.scale(&lc.inv());
    r.is_real().then(|| r.re())
}

fn zero_discriminant(w: &GaussPoly) -> bool {
    let (c, b, a) = (w.coeff(0), w.coeff(1), w.coeff(2));
    let four = GaussRat::real(crate::polycore::rat(4));
    (&(&b * &b) - &(&four * &(&a * &c))).is_zero()
}

/// Splits the Wronskian of a quintic Hopf pair (both components of degree ≤ 2).
pub fn decompose_wronskian_quintic(h: &HopfPair) -> Result<WronskianDecomposition> {
    for z in [&h.z1, &h.z2] {
        if let Some(d) = z.degree().filter(|&d| d > 2) {
            return Err(Error::UnsupportedDegree { found: d, max: 2 });
        }
    }
    let w = wronskian(&h.z1, &h.z2);
    let degree = w.degree().ok_or(Error::ProportionalPair)?;
    let omega_constant = |case| WronskianDecomposition { omega: RatPoly::one(), z_squared: w.clone(), case };

    if degree == 0 {
        return Ok(omega_constant(DecompositionCase::BothConstant));
    }
    if degree == 2 && zero_discriminant(&w) {
        return Ok(omega_constant(DecompositionCase::OmegaConstant));
    }
    match real_proportional(&w) {
        Some(r) => {
            let mut omega = primitive_part(&r);
            if omega.leading().unwrap().is_negative() {
                omega = -&omega;
            }
            let z_squared = GaussPoly::constant(
                w.leading().unwrap().scale(&omega.leading().unwrap().recip()),
            );
            debug_assert_eq!(&omega.to_gauss() * &z_squared, w);
            Ok(WronskianDecomposition { omega, z_squared, case: DecompositionCase::ZConstant })
        }
        None => Ok(omega_constant(DecompositionCase::Degenerate)),
    }
}
