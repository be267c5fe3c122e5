use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::RatPoly;
use super::rat::{rat_sqrt, Rat};
use super::squarefree::squarefree_decompose;

/// The real polynomial `√scale · body(t)`.
///
/// `scale > 0` and `body` has a positive leading coefficient, except for the
/// zero value (`scale = 1`, `body = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledSqrt {
    pub scale: Rat,
    pub body: RatPoly,
}

impl ScaledSqrt {
    pub fn zero() -> Self {
        Self { scale: Rat::one(), body: RatPoly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// `scale · body²`, the exact square of the represented polynomial.
    pub fn squared(&self) -> RatPoly {
        (&self.body * &self.body).scale(&self.scale)
    }

    /// The represented polynomial, when `√scale` is rational.
    pub fn rational_form(&self) -> Option<RatPoly> {
        rat_sqrt(&self.scale).map(|r| self.body.scale(&r))
    }

    /// Moves a rational `√scale` into the body, leaving `scale = 1`.
    pub fn folded(&self) -> Self {
        match self.rational_form() {
            Some(body) => Self { scale: Rat::one(), body },
            None => self.clone(),
        }
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.scale.to_f64().unwrap_or(f64::NAN).sqrt() * self.body.eval_f64(t)
    }
}

/// `(1/3)*(t^6 + 3*t^4 + 9*t^2 + 9)` or `sqrt(2)*(t^2 + 1)`.
impl fmt::Display for ScaledSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let body = if self.body.is_constant() {
            None
        } else {
            Some(&self.body)
        };
        match (rat_sqrt(&self.scale), body) {
            (Some(r), None) => write!(f, "{}", self.body.coeff(0) * r),
            (Some(r), Some(b)) if r.is_one() => write!(f, "{b}"),
            (Some(r), Some(b)) => write!(f, "({r})*({b})"),
            (None, None) => write!(f, "sqrt({})*{}", self.scale, self.body.coeff(0)),
            (None, Some(b)) => write!(f, "sqrt({})*({b})", self.scale),
        }
    }
}

/// Square root of `p` as a real polynomial, when one exists.
///
/// `p` is a square in ℝ[t] exactly when its leading coefficient is positive
/// and every multiplicity of its square-free decomposition is even.
pub fn perfect_square_root(p: &RatPoly) -> Option<ScaledSqrt> {
    let Some(deg) = p.degree() else {
        return Some(ScaledSqrt::zero());
    };
    if deg % 2 == 1 || !p.leading()?.is_positive() {
        return None;
    }
    let dec = squarefree_decompose(p).ok()?;
    if dec.factors.iter().any(|(_, m)| m % 2 == 1) {
        return None;
    }
    let body = dec
        .factors
        .iter()
        .fold(RatPoly::one(), |acc, (f, m)| &acc * &f.pow(m / 2));
    debug_assert!(!dec.content.is_zero());
    Some(ScaledSqrt { scale: dec.content, body })
}
