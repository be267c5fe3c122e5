use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::Rat;

/// Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rat) -> Self {
        Self { re, im: Rat::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rat::zero(), im: Rat::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        Self { re: &self.re / &n, im: -&self.im / &n }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self { re: &self.re * k, im: &self.im * k }
    }
}

impl From<Rat> for GaussRat {
    fn from(re: Rat) -> Self {
        Self::real(re)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        Self::real(Rat::one())
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, o: &GaussRat) -> GaussRat {
        self * &o.inv()
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: GaussRat) -> GaussRat {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im < Rat::zero() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::{rat, ratio};

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::new(rat(a), rat(b))
    }

    #[test]
    fn field_ops() {
        assert_eq!(&g(1, 2) * &g(3, -1), g(5, 5));
        assert_eq!(&g(5, 5) / &g(3, -1), g(1, 2));
        assert_eq!(&g(1, 1) / &g(0, 2), GaussRat::new(ratio(1, 2), ratio(-1, 2)));
        assert_eq!(g(3, 4).norm_sqr(), rat(25));
    }

    #[test]
    fn display() {
        assert_eq!(g(1, -7).to_string(), "1-7i");
        assert_eq!(g(0, 3).to_string(), "3i");
        assert_eq!(GaussRat::new(ratio(1, 2), rat(1)).to_string(), "1/2+1i");
    }
}
