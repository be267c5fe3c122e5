//! Helpers for the exact rational coefficient field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `n/d` for a positive `d`, reducing through `n mod d` first so that a large
/// numerator over a small denominator stays cheap.
pub fn rat_over(n: BigInt, d: &BigInt) -> Rat {
    debug_assert!(d.is_positive());
    if d.is_one() {
        return Rat::from_integer(n);
    }
    let g = int_gcd(&n.mod_floor(d), d);
    if g.is_one() {
        Rat::new_raw(n, d.clone())
    } else {
        Rat::new_raw(n / &g, d / &g)
    }
}

/// Parses `"p/q"`, `"p"`, with an optional sign. Zero denominators are rejected.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Exact square root of a non-negative rational, when it is itself rational.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = int_sqrt(x.numer())?;
    let d = int_sqrt(x.denom())?;
    Some(Rat::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Gcd of two integers, starting with one division step so that operands of
/// very different sizes are cheap.
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = if a.magnitude() >= b.magnitude() { (a, b) } else { (b, a) };
    if b.is_zero() {
        return a.abs();
    }
    (a % b).gcd(b)
}

/// Non-negative gcd of a list of integers, zero for an all-zero list.
pub fn content_gcd<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut xs: Vec<&BigInt> = xs.into_iter().filter(|x| !x.is_zero()).collect();
    xs.sort_by_key(|x| x.bits());
    let mut g = BigInt::zero();
    for x in xs {
        g = int_gcd(&g, x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Least common multiple of the denominators.
pub fn denominators_lcm<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| {
        if x.denom().is_one() {
            acc
        } else {
            let g = int_gcd(&acc, x.denom());
            acc / g * x.denom()
        }
    })
}

/// Gcd of the numerators (zero when all inputs are zero).
pub fn numerators_gcd<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    content_gcd(xs.into_iter().map(|x| x.numer()))
}

/// Scales a list of rationals to coprime integers (sign preserved).
pub fn clear_to_integers(xs: &[Rat]) -> Vec<BigInt> {
    let l = denominators_lcm(xs);
    let ints: Vec<BigInt> = xs.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = content_gcd(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rat("-7"), Some(rat(-7)));
        assert_eq!(parse_rat(" 4 / -8 "), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1.5"), None);
        assert_eq!(parse_rat(""), None);
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rat_sqrt(&ratio(4, 9)), Some(ratio(2, 3)));
        assert_eq!(rat_sqrt(&rat(2)), None);
        assert_eq!(rat_sqrt(&rat(-4)), None);
        assert_eq!(rat_sqrt(&rat(0)), Some(rat(0)));
    }

    #[test]
    fn clearing() {
        let v = clear_to_integers(&[ratio(1, 2), ratio(-3, 4), rat(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
