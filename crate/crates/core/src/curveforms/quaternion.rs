use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::polycore::{Rat, RatPoly};

/// `w + x·i + y·j + z·k` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Quaternion {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |n: i64| Rat::from_integer(n.into());
        Self::new(r(w), r(x), r(y), r(z))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.parts().iter().all(|p| p.is_zero())
    }

    pub fn parts(&self) -> [&Rat; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(&self.w * k, &self.x * k, &self.y * k, &self.z * k)
    }

    /// Euclidean inner product of the coefficient 4-vectors.
    pub fn dot(&self, o: &Self) -> Rat {
        &self.w * &o.w + &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn norm_sqr(&self) -> Rat {
        self.dot(self)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

/// Hamilton product.
impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// Quaternion polynomial `A(t) = u(t) + i·v(t) + j·p(t) + k·q(t)` in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionPolynomial {
    coeffs: Vec<Quaternion>,
}

impl QuaternionPolynomial {
    pub fn new(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_components(u: &RatPoly, v: &RatPoly, p: &RatPoly, q: &RatPoly) -> Self {
        let n = [u, v, p, q].iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
        Self::new(
            (0..n)
                .map(|k| Quaternion::new(u.coeff(k), v.coeff(k), p.coeff(k), q.coeff(k)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> Quaternion {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn component(&self, f: impl Fn(&Quaternion) -> &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|q| f(q).clone()).collect())
    }

    pub fn u(&self) -> RatPoly {
        self.component(|q| &q.w)
    }

    pub fn v(&self) -> RatPoly {
        self.component(|q| &q.x)
    }

    pub fn p(&self) -> RatPoly {
        self.component(|q| &q.y)
    }

    pub fn q(&self) -> RatPoly {
        self.component(|q| &q.z)
    }

    pub fn eval(&self, t: &Rat) -> Quaternion {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::zero(), |acc, c| &acc.scale(t) + c)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(Quaternion::conj).collect())
    }

    /// `A(a·t + b)`
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        Self::from_components(
            &self.u().compose_affine(a, b),
            &self.v().compose_affine(a, b),
            &self.p().compose_affine(a, b),
            &self.q().compose_affine(a, b),
        )
    }
}

impl Mul for &QuaternionPolynomial {
    type Output = QuaternionPolynomial;
    fn mul(self, o: &QuaternionPolynomial) -> QuaternionPolynomial {
        if self.is_zero() || o.is_zero() {
            return QuaternionPolynomial::new(Vec::new());
        }
        let mut v = vec![Quaternion::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        QuaternionPolynomial::new(v)
    }
}
