use num_traits::Zero;

use super::quaternion::{Quaternion, QuaternionPolynomial};
use super::vector::{self, PolyVec3};
use crate::error::{Error, Result};
use crate::polycore::{GaussPoly, GaussRat, Rat, RatPoly};

/// Complex form `(z1, z2) = (u + i·v, q + i·p)` of a quaternion polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPair {
    pub z1: GaussPoly,
    pub z2: GaussPoly,
}

impl HopfPair {
    pub fn new(z1: GaussPoly, z2: GaussPoly) -> Result<Self> {
        if z1.is_zero() && z2.is_zero() {
            return Err(Error::DegenerateInput("both Hopf components vanish".into()));
        }
        Ok(Self { z1, z2 })
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.z1.degree().max(self.z2.degree())
    }
}

impl From<&QuaternionPolynomial> for HopfPair {
    fn from(a: &QuaternionPolynomial) -> Self {
        hopf_from_quaternion(a)
    }
}

impl From<&HopfPair> for QuaternionPolynomial {
    fn from(h: &HopfPair) -> Self {
        QuaternionPolynomial::from_components(&h.z1.re(), &h.z1.im(), &h.z2.im(), &h.z2.re())
    }
}

/// Derivative `α′ = (x′, y′, z′)` of a polynomial space curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hodograph {
    pub dx: RatPoly,
    pub dy: RatPoly,
    pub dz: RatPoly,
}

impl Hodograph {
    pub fn new(dx: RatPoly, dy: RatPoly, dz: RatPoly) -> Result<Self> {
        if dx.is_zero() && dy.is_zero() && dz.is_zero() {
            return Err(Error::DegenerateInput("hodograph vanishes identically".into()));
        }
        Ok(Self { dx, dy, dz })
    }

    pub fn from_ints(dx: &[i64], dy: &[i64], dz: &[i64]) -> Result<Self> {
        Self::new(RatPoly::from_ints(dx), RatPoly::from_ints(dy), RatPoly::from_ints(dz))
    }

    pub fn from_vector(v: PolyVec3) -> Result<Self> {
        let [dx, dy, dz] = v;
        Self::new(dx, dy, dz)
    }

    pub fn vector(&self) -> PolyVec3 {
        [self.dx.clone(), self.dy.clone(), self.dz.clone()]
    }

    pub fn degree(&self) -> usize {
        [&self.dx, &self.dy, &self.dz]
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    /// `dx² + dy² + dz²`
    pub fn speed_squared(&self) -> RatPoly {
        vector::norm_sqr(&self.vector())
    }

    /// Hodograph of `α(a·t + b)`, i.e. `a·α′(a·t + b)`.
    pub fn reparameterize(&self, a: &Rat, b: &Rat) -> Result<Self> {
        let f = |p: &RatPoly| p.compose_affine(a, b).scale(a);
        Self::new(f(&self.dx), f(&self.dy), f(&self.dz))
    }

    pub fn scaled(&self, k: &Rat) -> Result<Self> {
        Self::new(self.dx.scale(k), self.dy.scale(k), self.dz.scale(k))
    }

    pub fn eval(&self, t: &Rat) -> [Rat; 3] {
        [self.dx.eval(t), self.dy.eval(t), self.dz.eval(t)]
    }
}

/// Polynomial space curve `α(t) = (x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCurve {
    pub x: RatPoly,
    pub y: RatPoly,
    pub z: RatPoly,
}

impl PolynomialCurve {
    pub fn new(x: RatPoly, y: RatPoly, z: RatPoly) -> Self {
        Self { x, y, z }
    }

    pub fn hodograph(&self) -> Result<Hodograph> {
        Hodograph::new(self.x.derivative(), self.y.derivative(), self.z.derivative())
    }

    pub fn origin(&self) -> [Rat; 3] {
        [self.x.coeff(0), self.y.coeff(0), self.z.coeff(0)]
    }

    pub fn eval(&self, t: &Rat) -> [Rat; 3] {
        [self.x.eval(t), self.y.eval(t), self.z.eval(t)]
    }
}

/// `α′ = A·i·A*`, expanded as `(u²+v²−p²−q², 2(uq+vp), 2(vq−up))`.
pub fn hodograph_from_quaternion(a: &QuaternionPolynomial) -> Result<Hodograph> {
    if a.is_zero() {
        return Err(Error::DegenerateInput("zero quaternion polynomial".into()));
    }
    let (u, v, p, q) = (a.u(), a.v(), a.p(), a.q());
    let two = RatPoly::from_ints(&[2]);
    let dx = &(&(&u * &u) + &(&v * &v)) - &(&(&p * &p) + &(&q * &q));
    let dy = &two * &(&(&u * &q) + &(&v * &p));
    let dz = &two * &(&(&v * &q) - &(&u * &p));
    Hodograph::new(dx, dy, dz)
}

pub fn hopf_from_quaternion(a: &QuaternionPolynomial) -> HopfPair {
    HopfPair {
        z1: GaussPoly::from_parts(&a.u(), &a.v()),
        z2: GaussPoly::from_parts(&a.q(), &a.p()),
    }
}

/// Hopf map `(|z1|² − |z2|², 2·z1·conj(z2))`, the complex part read as `dy + i·dz`.
pub fn hodograph_from_hopf(h: &HopfPair) -> Result<Hodograph> {
    let w = (&h.z1 * &h.z2.conj()).scale(&GaussRat::real(Rat::from_integer(2.into())));
    Hodograph::new(&h.z1.norm_sqr() - &h.z2.norm_sqr(), w.re(), w.im())
}

/// Converts 1–3 Bernstein control quaternions to the power basis.
pub fn bezier_to_power(controls: &[Quaternion]) -> Result<QuaternionPolynomial> {
    let coeffs = match controls {
        [] => return Err(Error::DegenerateInput("no control quaternions".into())),
        [c0] => vec![c0.clone()],
        [c0, c1] => vec![c0.clone(), c1 - c0],
        [c0, c1, c2] => {
            let two = Rat::from_integer(2.into());
            vec![c0.clone(), (c1 - c0).scale(&two), &(c0 - &c1.scale(&two)) + c2]
        }
        _ => return Err(Error::UnsupportedDegree { found: controls.len() - 1, max: 2 }),
    };
    Ok(QuaternionPolynomial::new(coeffs))
}

/// Term-wise antiderivative placed at `origin` for `t = 0`.
pub fn integrate(h: &Hodograph, origin: &[Rat; 3]) -> PolynomialCurve {
    let f = |p: &RatPoly, o: &Rat| &p.antiderivative() + &RatPoly::constant(o.clone());
    PolynomialCurve::new(f(&h.dx, &origin[0]), f(&h.dy, &origin[1]), f(&h.dz, &origin[2]))
}

/// Either polynomial form of a PH hodograph.
pub trait PhRepresentation {
    /// `σ = u² + v² + p² + q² = |z1|² + |z2|²`, the parametric speed.
    fn sigma(&self) -> RatPoly;
    fn hodograph(&self) -> Result<Hodograph>;
}

impl PhRepresentation for QuaternionPolynomial {
    fn sigma(&self) -> RatPoly {
        [self.u(), self.v(), self.p(), self.q()]
            .iter()
            .fold(RatPoly::zero(), |acc, c| &acc + &(c * c))
    }

    fn hodograph(&self) -> Result<Hodograph> {
        hodograph_from_quaternion(self)
    }
}

impl PhRepresentation for HopfPair {
    fn sigma(&self) -> RatPoly {
        &self.z1.norm_sqr() + &self.z2.norm_sqr()
    }

    fn hodograph(&self) -> Result<Hodograph> {
        hodograph_from_hopf(self)
    }
}

pub fn sigma_poly<S: PhRepresentation + ?Sized>(source: &S) -> RatPoly {
    source.sigma()
}

/// Origin used when none is given.
pub fn default_origin() -> [Rat; 3] {
    [Rat::zero(), Rat::zero(), Rat::zero()]
}
