//! Vectors of rational polynomials.

use crate::polycore::{Rat, RatPoly};

pub type PolyVec3 = [RatPoly; 3];

pub fn dot(a: &PolyVec3, b: &PolyVec3) -> RatPoly {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub fn cross(a: &PolyVec3, b: &PolyVec3) -> PolyVec3 {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn norm_sqr(a: &PolyVec3) -> RatPoly {
    dot(a, a)
}

pub fn derivative(a: &PolyVec3) -> PolyVec3 {
    [a[0].derivative(), a[1].derivative(), a[2].derivative()]
}

pub fn scale(a: &PolyVec3, k: &RatPoly) -> PolyVec3 {
    [&a[0] * k, &a[1] * k, &a[2] * k]
}

pub fn add(a: &PolyVec3, b: &PolyVec3) -> PolyVec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

/// `⟨u, a(t)⟩` for a constant vector `u`.
pub fn dot_const(u: &[Rat; 3], a: &PolyVec3) -> RatPoly {
    (0..3).fold(RatPoly::zero(), |acc, i| &acc + &a[i].scale(&u[i]))
}

pub fn is_zero(a: &PolyVec3) -> bool {
    a.iter().all(RatPoly::is_zero)
}

/// `det(a, b, c) = a · (b × c)`
pub fn det(a: &PolyVec3, b: &PolyVec3, c: &PolyVec3) -> RatPoly {
    dot(a, &cross(b, c))
}
