use crate::curveforms::{vector, Hodograph};
use crate::polycore::{perfect_square_root, RatPoly, ScaledSqrt};

/// `ρ² = |α′ ∧ α″|²` and, when it is a square, `ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossNorm {
    pub rho_squared: RatPoly,
    pub rho: Option<ScaledSqrt>,
}

pub fn cross_norm(h: &Hodograph) -> CrossNorm {
    let a1 = h.vector();
    let c = vector::cross(&a1, &vector::derivative(&a1));
    let rho_squared = vector::norm_sqr(&c);
    let rho = perfect_square_root(&rho_squared);
    CrossNorm { rho_squared, rho }
}

/// The parametric speed `σ = |α′|`, if it is a polynomial.
pub fn is_ph(h: &Hodograph) -> Option<ScaledSqrt> {
    perfect_square_root(&h.speed_squared())
}

/// `(σ, ρ)` when both `|α′|` and `|α′ ∧ α″|` are polynomials.
pub fn is_2ph(h: &Hodograph) -> Option<(ScaledSqrt, ScaledSqrt)> {
    let sigma = is_ph(h)?;
    let rho = cross_norm(h).rho?;
    Some((sigma, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polycore::{rat, ratio};

    #[test]
    fn straight_line() {
        let n = cross_norm(&Hodograph::from_ints(&[1], &[], &[]).unwrap());
        assert!(n.rho_squared.is_zero());
        assert_eq!(n.rho, Some(ScaledSqrt::zero()));
    }

    #[test]
    fn planar_ph_hodographs() {
        let s = is_ph(&Hodograph::from_ints(&[1], &[], &[]).unwrap()).unwrap();
        assert_eq!(s.squared(), RatPoly::one());
        let s = is_ph(&Hodograph::from_ints(&[0, 2], &[1, 0, -1], &[]).unwrap()).unwrap();
        assert_eq!(s.rational_form(), Some(RatPoly::from_ints(&[1, 0, 1])));
        let s = is_ph(&Hodograph::from_ints(&[0, 0, 3], &[0, 0, 4], &[]).unwrap()).unwrap();
        assert_eq!(s.rational_form(), Some(RatPoly::from_ints(&[0, 0, 5])));
        assert_eq!(is_ph(&Hodograph::from_ints(&[1], &[0, 1], &[]).unwrap()), None);
    }

    #[test]
    fn counterexample_norms() {
        let h = fixtures::counterexample_hodograph();
        let (sigma, rho) = is_2ph(&h).unwrap();
        let body = RatPoly::from_ints(&[9, 0, 9, 0, 3, 0, 1]);
        assert_eq!(sigma.scale, ratio(1, 9));
        assert_eq!(sigma.body, body);
        assert_eq!(rho.scale, rat(4));
        assert_eq!(rho.body, &RatPoly::from_ints(&[1, 0, 1]) * &body);
    }

    #[test]
    fn first_example_is_2ph() {
        let h = crate::curveforms::hodograph_from_quaternion(&fixtures::example_one()).unwrap();
        assert!(is_2ph(&h).is_some());
    }
}
