use std::fmt;

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::RatPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Reduced quotient of rational polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: RatPoly,
    den: RatPoly,
}

impl RationalFunction {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateInput("rational function with zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: RatPoly, den: RatPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den).expect("denominator is non-zero");
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading().unwrap().clone();
        let inv = Rat::one() / lc;
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn zero() -> Self {
        Self { num: RatPoly::zero(), den: RatPoly::one() }
    }

    pub fn from_poly(p: RatPoly) -> Self {
        Self { num: p, den: RatPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(RatPoly::constant(c))
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, if the function is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::reduce(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }

    /// Product of reduced operands; only the cross gcds need cancelling.
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading().unwrap().clone();
        let inv = Rat::one() / lc;
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn mul_poly(&self, p: &RatPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DegenerateInput("division by the zero rational function".into()));
        }
        Ok(self.mul(&Self::reduce(o.den.clone(), o.num.clone())))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }
}

fn cancel(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let g = gcd(a, b).expect("non-zero operands");
    if g.is_constant() {
        (a.clone(), b.clone())
    } else {
        (a.exact_div(&g).unwrap(), b.exact_div(&g).unwrap())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else if self.num.is_constant() {
            write!(f, "{} / ({})", self.num, self.den)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl RatPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}
