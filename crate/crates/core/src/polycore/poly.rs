//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRat;
use super::rat::{content_gcd, denominators_lcm, rat_over, Rat};

/// Exact coefficient field, accessed by reference.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rat(r: Rat) -> Self;

    /// Coefficients of the product of two non-zero polynomials.
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        schoolbook_mul(a, b)
    }

    fn poly_scale(a: &[Self], c: &Self) -> Vec<Self> {
        a.iter().map(|x| x.mul_ref(c)).collect()
    }

    /// Quotient and remainder coefficients; `d` has a non-zero leading entry.
    fn poly_div_rem(n: &[Self], d: &[Self]) -> (Vec<Self>, Vec<Self>) {
        field_div_rem(n, d)
    }
}

fn schoolbook_mul<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    let mut v = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] = v[i + j].add_ref(&x.mul_ref(y));
        }
    }
    v
}

fn field_div_rem<C: Coeff>(n: &[C], d: &[C]) -> (Vec<C>, Vec<C>) {
    let dd = d.len() - 1;
    let lc_inv = C::one().div_ref(&d[dd]);
    let mut rem = n.to_vec();
    let mut quot = vec![C::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = rem[k].mul_ref(&lc_inv);
        for (j, dc) in d.iter().enumerate() {
            let idx = k - dd + j;
            rem[idx] = rem[idx].sub_ref(&q.mul_ref(dc));
        }
        quot[k - dd] = q;
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Integer numerators over a common denominator.
fn integer_form(xs: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let l = denominators_lcm(xs);
    let ints = xs.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (ints, l)
}

fn over(ints: Vec<BigInt>, den: &BigInt) -> Vec<Rat> {
    ints.into_iter().map(|n| rat_over(n, den)).collect()
}

fn rat_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (ia, da) = integer_form(a);
    let (ib, db) = integer_form(b);
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in ia.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in ib.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    over(v, &(da * db))
}

/// Division on integer numerators against a primitive divisor `P`, keeping
/// `scale·N = Q·P + R`; `scale` only grows when a leading term does not divide.
fn rat_div_rem(n: &[Rat], d: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let (ni, nd) = integer_form(n);
    let (mut di, dd) = integer_form(d);
    let g = content_gcd(&di);
    di.iter_mut().for_each(|x| *x /= &g);
    let m = di.len() - 1;
    let lc = &di[m];
    let mut rem = ni;
    let mut quot = vec![BigInt::zero(); rem.len() - m];
    let mut scale = BigInt::one();
    for k in (m..rem.len()).rev() {
        let mut c = std::mem::take(&mut rem[k]);
        if c.is_zero() {
            continue;
        }
        let (q, r) = c.div_rem(lc);
        if r.is_zero() {
            c = q;
        } else {
            scale *= lc;
            quot.iter_mut().for_each(|q| *q *= lc);
            rem[..k].iter_mut().for_each(|r| *r *= lc);
        }
        for (j, dc) in di[..m].iter().enumerate() {
            rem[k - m + j] -= &c * dc;
        }
        quot[k - m] = c;
    }
    rem.truncate(m);
    if scale.is_negative() {
        scale = -scale;
        quot.iter_mut().chain(rem.iter_mut()).for_each(|x| *x = -&*x);
    }
    let rd = &scale * &nd;
    let qf = Rat::new(dd, &g * &rd);
    let quot = quot.into_iter().map(|q| Rat::from_integer(q) * &qf).collect();
    (quot, over(rem, &rd))
}

macro_rules! impl_coeff {
    ($t:ty, $from:expr, {$($extra:item)*}) => {
        impl Coeff for $t {
            fn add_ref(&self, o: &Self) -> Self {
                self + o
            }
            fn sub_ref(&self, o: &Self) -> Self {
                self - o
            }
            fn mul_ref(&self, o: &Self) -> Self {
                self * o
            }
            fn div_ref(&self, o: &Self) -> Self {
                self / o
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn from_rat(r: Rat) -> Self {
                $from(r)
            }
            $($extra)*
        }
    };
}
impl_coeff!(Rat, std::convert::identity, {
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        rat_mul(a, b)
    }
    fn poly_div_rem(n: &[Self], d: &[Self]) -> (Vec<Self>, Vec<Self>) {
        rat_div_rem(n, d)
    }
    fn poly_scale(a: &[Self], c: &Self) -> Vec<Self> {
        let (ints, d) = integer_form(a);
        over(ints.into_iter().map(|x| x * c.numer()).collect(), &(d * c.denom()))
    }
});
impl_coeff!(GaussRat, GaussRat::real, {});

/// Polynomial with coefficients in ascending degree order.
///
/// Leading zeros are stripped on construction, so the zero polynomial has an
/// empty coefficient vector and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type RatPoly = Poly<Rat>;
pub type GaussPoly = Poly<GaussRat>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn t() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    /// `t - r`
    pub fn linear_root(r: &C) -> Self {
        Self::new(vec![r.neg_ref(), C::one()])
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for non-zero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(C::poly_scale(&self.coeffs, k))
    }

    /// Divides through by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&C::one().div_ref(lc)),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&C::from_rat(Rat::from_integer(k.into()))))
                .collect(),
        )
    }

    /// Term-wise antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(C::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            v.push(c.mul_ref(&C::from_rat(Rat::new(1.into(), (k + 1).into()))));
        }
        Self::new(v)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul_ref(t).add_ref(c))
    }

    /// `p(a·t + b)`
    pub fn compose_affine(&self, a: &C, b: &C) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let (q, r) = C::poly_div_rem(&self.coeffs, &d.coeffs);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient of an exact division, `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// True when `self` is non-zero and divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }
}

impl RatPoly {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn to_gauss(&self) -> GaussPoly {
        GaussPoly::new(self.coeffs.iter().cloned().map(GaussRat::real).collect())
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl GaussPoly {
    pub fn from_parts(re: &RatPoly, im: &RatPoly) -> Self {
        let n = re.coeffs.len().max(im.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| GaussRat::new(re.coeff(k), im.coeff(k)))
                .collect(),
        )
    }

    pub fn from_int_pairs(cs: &[(i64, i64)]) -> Self {
        Self::new(
            cs.iter()
                .map(|&(a, b)| GaussRat::new(Rat::from_integer(a.into()), Rat::from_integer(b.into())))
                .collect(),
        )
    }

    pub fn re(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c.re.clone()).collect())
    }

    pub fn im(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c.im.clone()).collect())
    }

    /// Conjugates the coefficients (the parameter is real).
    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(GaussRat::conj).collect())
    }

    /// `|z(t)|²` for real `t`, as a real polynomial.
    pub fn norm_sqr(&self) -> RatPoly {
        let (re, im) = (self.re(), self.im());
        &(&re * &re) + &(&im * &im)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_real)
    }
}

/// `z1'·z2 − z1·z2'`
pub fn wronskian<C: Coeff>(z1: &Poly<C>, z2: &Poly<C>) -> Poly<C> {
    &(&z1.derivative() * z2) - &(z1 * &z2.derivative())
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).add_ref(&o.coeff(k))).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub_ref(&o.coeff(k))).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        Poly::new(C::poly_mul(&self.coeffs, &o.coeffs))
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(Coeff::neg_ref).collect())
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

/// Descending powers of `t`, e.g. `t^2 - 3*t + 1/2`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    write_power(f, k)?;
                }
            }
        }
        Ok(())
    }
}

/// Descending powers with parenthesised complex coefficients, e.g. `(1-7i)*t^2 + (25+25i)`.
impl fmt::Display for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "({c})*")?;
                    }
                    write_power(f, k)?;
                }
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
    if k == 1 {
        write!(f, "t")
    } else {
        write!(f, "t^{k}")
    }
}
