//! Seeded generators for the two quintic helix families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curveforms::{HopfPair, Quaternion, QuaternionPolynomial};
use crate::error::{Error, Result};
use crate::polycore::{wronskian, GaussPoly, GaussRat, Rat};

/// Bounds for sampled coefficients: numerators in `[-height, height]`, denominators in `[1, height]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub height: i64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self { height: 50 }
    }
}

/// A sampled curve and how many degenerate draws were rejected before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated<T> {
    pub curve: T,
    pub resampled: u32,
}

const MAX_ATTEMPTS: u32 = 1000;

fn random_rat(rng: &mut impl Rng, p: GenParams) -> Rat {
    let h = p.height.max(1);
    Rat::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=h).into())
}

fn random_gauss(rng: &mut impl Rng, p: GenParams) -> GaussRat {
    GaussRat::new(random_rat(rng, p), random_rat(rng, p))
}

fn random_quaternion(rng: &mut impl Rng, p: GenParams) -> Quaternion {
    Quaternion::new(random_rat(rng, p), random_rat(rng, p), random_rat(rng, p), random_rat(rng, p))
}

/// `z1 = a(t − r)(t − r2)`, `z2 = b(t − r)(t − r4)`.
pub fn monotone_quintic_from_roots(
    a: &GaussRat,
    b: &GaussRat,
    r: &GaussRat,
    r2: &GaussRat,
    r4: &GaussRat,
) -> Result<HopfPair> {
    if num_traits::Zero::is_zero(a) || num_traits::Zero::is_zero(b) {
        return Err(Error::DegenerateInput("zero leading constant".into()));
    }
    if r2 == r4 {
        return Err(Error::ProportionalPair);
    }
    let shared = GaussPoly::linear_root(r);
    let z1 = (&shared * &GaussPoly::linear_root(r2)).scale(a);
    let z2 = (&shared * &GaussPoly::linear_root(r4)).scale(b);
    HopfPair::new(z1, z2)
}

/// Random Hopf pair sharing a linear factor.
pub fn generate_monotone_quintic(seed: u64, params: GenParams) -> Generated<HopfPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for resampled in 0..MAX_ATTEMPTS {
        let [a, b, r, r2, r4] = [(); 5].map(|_| random_gauss(&mut rng, params));
        if let Ok(curve) = monotone_quintic_from_roots(&a, &b, &r, &r2, &r4) {
            return Generated { curve, resampled };
        }
    }
    unreachable!("{MAX_ATTEMPTS} consecutive degenerate draws")
}

/// `A(t) = A0 + (c0·A0 + c2·A2)·t + A2·t²`, rejecting vanishing or proportional forms.
pub fn general_quintic_from(a0: &Quaternion, a2: &Quaternion, c0: &Rat, c2: &Rat) -> Result<QuaternionPolynomial> {
    let a1 = &a0.scale(c0) + &a2.scale(c2);
    let a = QuaternionPolynomial::new(vec![a0.clone(), a1, a2.clone()]);
    if a.is_zero() {
        return Err(Error::DegenerateInput("zero quaternion polynomial".into()));
    }
    let h = HopfPair::from(&a);
    if wronskian(&h.z1, &h.z2).is_zero() {
        return Err(Error::ProportionalPair);
    }
    Ok(a)
}

/// Random quaternion quadratic whose middle coefficient lies in the span of the outer two.
pub fn generate_general_quintic(seed: u64, params: GenParams) -> Generated<QuaternionPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for resampled in 0..MAX_ATTEMPTS {
        let a0 = random_quaternion(&mut rng, params);
        let a2 = random_quaternion(&mut rng, params);
        let c0 = random_rat(&mut rng, params);
        let c2 = random_rat(&mut rng, params);
        if let Ok(curve) = general_quintic_from(&a0, &a2, &c0, &c2) {
            return Generated { curve, resampled };
        }
    }
    unreachable!("{MAX_ATTEMPTS} consecutive degenerate draws")
}

/// Quaternion polynomial of the given degree with independent random coefficients.
pub fn random_quintic(seed: u64, params: GenParams, degree: usize) -> QuaternionPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = QuaternionPolynomial::new((0..=degree).map(|_| random_quaternion(&mut rng, params)).collect());
        if a.degree() == Some(degree) {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polycore::{rat, ratio};
    use crate::quintic::{classify_quintic, decompose_wronskian_quintic, DecompositionCase, QuinticKind};

    #[test]
    fn first_example_root_structure() {
        let r = GaussRat::new(rat(1), rat(2));
        let h = monotone_quintic_from_roots(
            &GaussRat::new(rat(1), rat(1)),
            &GaussRat::new(rat(1), rat(-2)),
            &r,
            &GaussRat::new(rat(2), rat(3)),
            &GaussRat::new(rat(-1), rat(4)),
        )
        .unwrap();
        assert_eq!(decompose_wronskian_quintic(&h).unwrap().case, DecompositionCase::OmegaConstant);
        assert_eq!(classify_quintic(&h).unwrap().quintic_class.kind, QuinticKind::MonotoneHelix);
    }

    #[test]
    fn proportional_roots_rejected() {
        let a = GaussRat::new(rat(2), rat(1));
        let r = GaussRat::new(rat(0), rat(1));
        let r2 = GaussRat::new(rat(3), rat(0));
        assert_eq!(monotone_quintic_from_roots(&a, &a, &r, &r2, &r2), Err(Error::ProportionalPair));
    }

    #[test]
    fn reproduces_second_example() {
        let e = fixtures::example_two();
        let a = general_quintic_from(&e.coeff(0), &e.coeff(2), &ratio(-6, 7), &ratio(-6, 7)).unwrap();
        assert_eq!(a.coeff(1), Quaternion::from_ints(12, 18, -12, 24));
        assert_eq!(a, e);
        let a = general_quintic_from(&e.coeff(0), &e.coeff(2), &rat(0), &rat(0)).unwrap();
        assert!(a.coeff(1).is_zero());
    }

    #[test]
    fn deterministic_given_seed() {
        let p = GenParams::default();
        assert_eq!(generate_monotone_quintic(7, p), generate_monotone_quintic(7, p));
        assert_eq!(generate_general_quintic(7, p), generate_general_quintic(7, p));
        assert_ne!(generate_general_quintic(7, p), generate_general_quintic(8, p));
    }
}
