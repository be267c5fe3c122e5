use num_traits::One;

use super::cross::is_2ph;
use crate::curveforms::{vector, Hodograph};
use crate::error::{Error, Result};
use crate::polycore::{Rat, RatPoly, RationalFunction};

pub type RationalVector = [RationalFunction; 3];

/// Rational Frenet frame of a 2-PH curve.
///
/// Each stored vector is exact up to a positive constant: the unit tangent is
/// `tangent / √tangent_scale` and the unit binormal is `binormal / √frame_scale`.
/// Both scales are 1 whenever the square roots are rational, which holds for
/// every quaternion-generated curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrenetFrame {
    pub tangent: RationalVector,
    pub binormal: RationalVector,
    /// `binormal ∧ tangent`; its squared length is `tangent_scale · frame_scale`.
    pub normal: RationalVector,
    pub tangent_scale: Rat,
    pub frame_scale: Rat,
}

impl FrenetFrame {
    pub fn eval(&self, t: &Rat) -> Option<[[Rat; 3]; 3]> {
        let ev = |v: &RationalVector| -> Option<[Rat; 3]> {
            Some([v[0].eval(t)?, v[1].eval(t)?, v[2].eval(t)?])
        };
        Some([ev(&self.tangent)?, ev(&self.normal)?, ev(&self.binormal)?])
    }
}

pub fn dot(a: &RationalVector, b: &RationalVector) -> RationalFunction {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

pub fn cross(a: &RationalVector, b: &RationalVector) -> RationalVector {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

fn divide(v: &[RatPoly; 3], d: &RatPoly) -> Result<RationalVector> {
    Ok([
        RationalFunction::new(v[0].clone(), d.clone())?,
        RationalFunction::new(v[1].clone(), d.clone())?,
        RationalFunction::new(v[2].clone(), d.clone())?,
    ])
}

/// `t = α′/σ`, `b = (α′ ∧ α″)/ρ`, `n = b ∧ t`.
pub fn frenet_frame(h: &Hodograph) -> Result<FrenetFrame> {
    let (sigma, rho) = is_2ph(h).ok_or(Error::NotRationalFrame)?;
    if rho.is_zero() {
        return Err(Error::LineDegeneracy);
    }
    let (sigma, rho) = (sigma.folded(), rho.folded());
    let a1 = h.vector();
    let c = vector::cross(&a1, &vector::derivative(&a1));
    let tangent = divide(&a1, &sigma.body)?;
    let binormal = divide(&c, &rho.body)?;
    let normal = cross(&binormal, &tangent);
    Ok(FrenetFrame { tangent, binormal, normal, tangent_scale: sigma.scale, frame_scale: rho.scale })
}

impl FrenetFrame {
    /// Checks the orthonormality relations exactly.
    pub fn verify(&self) -> bool {
        let tt = dot(&self.tangent, &self.tangent).as_constant();
        let bb = dot(&self.binormal, &self.binormal).as_constant();
        let nn = dot(&self.normal, &self.normal).as_constant();
        tt.as_ref() == Some(&self.tangent_scale)
            && bb.as_ref() == Some(&self.frame_scale)
            && nn == Some(&self.tangent_scale * &self.frame_scale)
            && dot(&self.tangent, &self.binormal).is_zero()
            && dot(&self.tangent, &self.normal).is_zero()
            && dot(&self.binormal, &self.normal).is_zero()
            && cross(&self.binormal, &self.tangent) == self.normal
    }

    pub fn is_normalized(&self) -> bool {
        self.tangent_scale.is_one() && self.frame_scale.is_one()
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::fixtures;
    use crate::polycore::rat;

    #[test]
    fn planar_cubic_frame() {
        let h = Hodograph::from_ints(&[0, 2], &[1, 0, -1], &[]).unwrap();
        let f = frenet_frame(&h).unwrap();
        let den = RatPoly::from_ints(&[1, 0, 1]);
        assert_eq!(f.tangent[0], RationalFunction::new(RatPoly::from_ints(&[0, 2]), den.clone()).unwrap());
        assert_eq!(f.tangent[1], RationalFunction::new(RatPoly::from_ints(&[1, 0, -1]), den).unwrap());
        assert!(f.tangent[2].is_zero());
        assert_eq!(f.binormal[2].as_constant().map(|c| c.abs()), Some(rat(1)));
        assert!(f.is_normalized());
        assert!(f.verify());
    }

    #[test]
    fn counterexample_frame_at_zero() {
        let f = frenet_frame(&fixtures::counterexample_hodograph()).unwrap();
        assert!(f.is_normalized());
        assert!(f.verify());
        let [t, _, b] = f.eval(&rat(0)).unwrap();
        assert_eq!(t, [rat(-1), rat(0), rat(0)]);
        assert_eq!(b, [rat(0), rat(0), rat(-1)]);
    }

    #[test]
    fn errors() {
        let line = Hodograph::from_ints(&[1], &[2], &[3]).unwrap();
        assert_eq!(frenet_frame(&line), Err(Error::LineDegeneracy));
        let not_ph = Hodograph::from_ints(&[1], &[0, 1], &[0, 0, 1]).unwrap();
        assert_eq!(frenet_frame(&not_ph), Err(Error::NotRationalFrame));
    }

    #[test]
    fn irrational_speed_keeps_scale() {
        // (2t, 1 − t²) rotated by 45° and scaled by √2: σ = √2·(1 + t²)
        let h = Hodograph::from_ints(&[-1, 2, 1], &[1, 2, -1], &[]).unwrap();
        let f = frenet_frame(&h).unwrap();
        assert_eq!(f.tangent_scale, rat(2));
        assert_eq!(f.frame_scale, rat(1));
        assert!(!f.is_normalized());
        assert!(f.verify());
    }
}
