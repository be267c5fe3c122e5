//! Square-free decomposition over ℚ (Yun's algorithm).

use super::gcd::gcd;
use super::poly::RatPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition {
    /// Leading coefficient of the input; every factor is monic.
    pub content: Rat,
    /// Pairwise coprime, square-free, monic, non-constant factors with their multiplicities,
    /// in increasing multiplicity.
    pub factors: Vec<(RatPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

pub fn squarefree_decompose(p: &RatPoly) -> Result<SquarefreeDecomposition> {
    let content = p
        .leading()
        .cloned()
        .ok_or_else(|| Error::DegenerateInput("square-free decomposition of zero".into()))?;
    let p = p.monic();
    let mut factors = Vec::new();
    if p.is_constant() {
        return Ok(SquarefreeDecomposition { content, factors });
    }
    let dp = p.derivative();
    let a0 = gcd(&p, &dp)?;
    let mut b = p.exact_div(&a0).expect("gcd divides p");
    let c = dp.exact_div(&a0).expect("gcd divides p'");
    let mut d = &c - &b.derivative();
    let mut mult = 1u32;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        if !a.is_constant() {
            factors.push((a.clone(), mult));
        }
        b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(SquarefreeDecomposition { content, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::rat;

    #[test]
    fn cubic_with_double_root() {
        let d = squarefree_decompose(&RatPoly::from_ints(&[0, 0, 1, 1])).unwrap();
        assert_eq!(d.content, rat(1));
        assert_eq!(
            d.factors,
            vec![(RatPoly::from_ints(&[1, 1]), 1), (RatPoly::from_ints(&[0, 1]), 2)]
        );
    }

    #[test]
    fn square_of_irreducible_quadratic() {
        let q = RatPoly::from_ints(&[1, 0, 1]);
        let d = squarefree_decompose(&q.pow(2)).unwrap();
        assert_eq!(d.content, rat(1));
        assert_eq!(d.factors, vec![(q, 2)]);
    }

    #[test]
    fn counterexample_cross_norm_squared() {
        // 4(1+t²)²(9+9t²+3t⁴+t⁶)²
        let a = RatPoly::from_ints(&[1, 0, 1]);
        let b = RatPoly::from_ints(&[9, 0, 9, 0, 3, 0, 1]);
        let p = (&a.pow(2) * &b.pow(2)).scale(&rat(4));
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.content, rat(4));
        assert_eq!(d.factors, vec![(&a * &b, 2)]);
        assert_eq!(d.reconstruct(), p);
    }

    #[test]
    fn constants_and_zero() {
        let d = squarefree_decompose(&RatPoly::from_ints(&[-3])).unwrap();
        assert_eq!(d.content, rat(-3));
        assert!(d.factors.is_empty());
        assert!(squarefree_decompose(&RatPoly::zero()).is_err());
    }
}
