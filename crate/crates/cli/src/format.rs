//! Exact decimal rendering of rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use ph_helix::polycore::Rat;

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// `10^e` as a rational, for any sign of `e`.
fn pow10_rat(e: i64) -> Rat {
    if e >= 0 {
        Rat::from_integer(pow10(e as u32))
    } else {
        Rat::new(BigInt::one(), pow10((-e) as u32))
    }
}

/// Largest `e` with `10^e ≤ x`, for positive `x`.
fn decimal_exponent(x: &Rat) -> i64 {
    let mut e = (x.numer().bits() as i64 - x.denom().bits() as i64) * 3 / 10;
    while pow10_rat(e) > *x {
        e -= 1;
    }
    while pow10_rat(e + 1) <= *x {
        e += 1;
    }
    e
}

/// `x` rounded half away from zero to `digits` significant digits, in plain
/// positional notation with trailing zeros after the point removed.
pub fn decimal(x: &Rat, digits: usize) -> String {
    let digits = digits.max(1) as i64;
    if x.is_zero() {
        return "0".into();
    }
    let mag = x.abs();
    let mut e = decimal_exponent(&mag);
    let round = |e: i64| {
        let scaled = &mag * pow10_rat(digits - 1 - e);
        let two = BigInt::from(2);
        ((scaled.numer() * &two + scaled.denom()) / (scaled.denom() * &two)).clone()
    };
    let mut n = round(e);
    if n >= pow10(digits as u32) {
        e += 1;
        n = round(e);
    }
    let s = n.to_string();
    let point = e + 1;
    let mut out = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), s)
    } else if point as usize >= s.len() {
        format!("{}{}", s, "0".repeat(point as usize - s.len()))
    } else {
        format!("{}.{}", &s[..point as usize], &s[point as usize..])
    };
    if out.contains('.') {
        out = out.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if x.is_negative() {
        out.insert(0, '-');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ph_helix::polycore::{rat, ratio};

    #[test]
    fn significant_digits() {
        assert_eq!(decimal(&ratio(-184, 105), 12), "-1.75238095238");
        assert_eq!(decimal(&ratio(5, 2), 12), "2.5");
        assert_eq!(decimal(&rat(-2), 12), "-2");
        assert_eq!(decimal(&rat(0), 5), "0");
        assert_eq!(decimal(&ratio(1, 3), 3), "0.333");
        assert_eq!(decimal(&ratio(2, 3), 3), "0.667");
        assert_eq!(decimal(&ratio(1, 1000), 2), "0.001");
        assert_eq!(decimal(&ratio(9999, 1), 2), "10000");
        assert_eq!(decimal(&ratio(995, 1000), 2), "1");
        assert_eq!(decimal(&ratio(123456, 1), 3), "123000");
        assert_eq!(decimal(&ratio(-5, 100), 1), "-0.05");
        assert_eq!(decimal(&ratio(1, 8), 2), "0.13");
    }
}
