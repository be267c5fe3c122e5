//! Polynomial gcd.
//!
//! Over ℚ the remainder sequence runs on integer coefficients, taking the
//! primitive part of every pseudo-remainder; over ℚ(i) remainders are made
//! monic. Either way the returned gcd is monic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::poly::{Coeff, Poly, RatPoly};
use super::rat::{clear_to_integers, content_gcd, denominators_lcm, numerators_gcd, Rat};
use crate::error::{Error, Result};

/// Coefficient fields with their own Euclidean remainder sequence.
pub trait GcdField: Coeff {
    /// Monic gcd; at least one input is non-zero.
    fn euclid(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self>;
}

impl GcdField for Rat {
    fn euclid(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        let (mut x, mut y) = (integer_primitive(a), integer_primitive(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = integer_primitive_vec(pseudo_rem(x, &y));
            x = y;
            y = r;
        }
        RatPoly::new(x.into_iter().map(Rat::from_integer).collect()).monic()
    }
}

impl GcdField for GaussRat {
    fn euclid(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        monic_euclid_gcd(a, b).expect("one input is non-zero")
    }
}

fn integer_primitive(p: &RatPoly) -> Vec<BigInt> {
    integer_primitive_vec(clear_to_integers(p.coeffs()))
}

fn integer_primitive_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = content_gcd(&v);
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x /= &g);
    }
    v
}

/// Remainder of `lc(y)^k·x` by `y`, with `y` non-empty and trimmed.
fn pseudo_rem(mut x: Vec<BigInt>, y: &[BigInt]) -> Vec<BigInt> {
    let m = y.len() - 1;
    let lc = &y[m];
    for k in (m..x.len()).rev() {
        let c = std::mem::take(&mut x[k]);
        if c.is_zero() {
            continue;
        }
        if !lc.is_one() {
            x[..k].iter_mut().for_each(|r| *r *= lc);
        }
        for (j, yc) in y[..m].iter().enumerate() {
            x[k - m + j] -= &c * yc;
        }
    }
    x.truncate(m.min(x.len()));
    x
}

/// Integer-coefficient polynomial with coprime coefficients and the sign of the input.
pub fn primitive_part(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return RatPoly::zero();
    }
    let l = Rat::from_integer(denominators_lcm(p.coeffs()));
    let cleared: Vec<Rat> = p.coeffs().iter().map(|c| c * &l).collect();
    let k = BigRational::new(1.into(), numerators_gcd(&cleared));
    RatPoly::new(cleared.iter().map(|c| c * &k).collect())
}

/// Monic gcd of `a` and `b`. Both zero is a degenerate input.
pub fn gcd<C: GcdField>(a: &Poly<C>, b: &Poly<C>) -> Result<Poly<C>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateInput("gcd of two zero polynomials".into()));
    }
    Ok(C::euclid(a, b))
}

/// Plain Euclid with monic remainders over any field; the reference route for [`gcd`].
pub fn monic_euclid_gcd<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Result<Poly<C>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateInput("gcd of two zero polynomials".into()));
    }
    let (mut x, mut y) = (a.monic(), b.monic());
    while !y.is_zero() {
        let r = x.rem(&y).monic();
        x = y;
        y = r;
    }
    Ok(x.monic())
}
