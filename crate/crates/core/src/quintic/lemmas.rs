use num_traits::Zero;

use super::decompose::{decompose_wronskian_quintic, DecompositionCase};
use crate::curveforms::{HopfPair, Quaternion, QuaternionPolynomial};
use crate::error::{Error, Result};
use crate::polycore::{gcd, GaussPoly, Rat};

/// Non-constant `gcd(z1, z2)`: the shared linear factor of a monotone helix.
pub fn monotone_test(h: &HopfPair) -> Option<GaussPoly> {
    gcd(&h.z1, &h.z2).ok().filter(|g| !g.is_constant())
}

/// Solution of `A1 = c0·A0 + c2·A2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependence {
    pub c0: Rat,
    pub c2: Rat,
    /// `A0` and `A2` are themselves linearly dependent, so the solution is not unique.
    pub degenerate: bool,
}

impl Dependence {
    pub fn residual(&self, a0: &Quaternion, a1: &Quaternion, a2: &Quaternion) -> Quaternion {
        a1 - &(&a0.scale(&self.c0) + &a2.scale(&self.c2))
    }
}

/// Solves the four real equations `A1 = c0·A0 + c2·A2` in two unknowns exactly.
pub fn quaternion_dependence(a0: &Quaternion, a1: &Quaternion, a2: &Quaternion) -> Option<Dependence> {
    let g00 = a0.norm_sqr();
    let g02 = a0.dot(a2);
    let g22 = a2.norm_sqr();
    let det = &g00 * &g22 - &g02 * &g02;
    let r0 = a0.dot(a1);
    let r2 = a2.dot(a1);

    let candidate = if !det.is_zero() {
        Dependence {
            c0: (&r0 * &g22 - &r2 * &g02) / &det,
            c2: (&g00 * &r2 - &g02 * &r0) / &det,
            degenerate: false,
        }
    } else if !g00.is_zero() {
        Dependence { c0: r0 / g00, c2: Rat::zero(), degenerate: true }
    } else if !g22.is_zero() {
        Dependence { c0: Rat::zero(), c2: r2 / g22, degenerate: true }
    } else {
        Dependence { c0: Rat::zero(), c2: Rat::zero(), degenerate: true }
    };
    candidate.residual(a0, a1, a2).is_zero().then_some(candidate)
}

/// Branch-free quantities from the z-constant case: `tan 2θ`, `m1²`, and
/// `m0·m1`, `m2·m1` where `ω = m0 + m1·t + m2·t²` is normalized by `|z| = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaTwoParameters {
    /// `None` when `a_z c − a_y c_x + a_x c_y − a c_z = 0`.
    pub tan_two_theta: Option<Rat>,
    pub m1_squared: Rat,
    /// Present when `z` may be taken constant and `m1 ≠ 0`.
    pub m0_m1: Option<Rat>,
    pub m2_m1: Option<Rat>,
}

impl LemmaTwoParameters {
    /// `(c0, c2) = (2m2/m1, 2m0/m1)`, the predicted coefficients of `A1` over `A0` and `A2`.
    ///
    /// The constant term of `W` pairs `A0` with `A1` and the `t²` term pairs
    /// `A1` with `A2`, so `m0` carries `c2` and `m2` carries `c0`.
    pub fn predicted_dependence(&self) -> Option<(Rat, Rat)> {
        if self.m1_squared.is_zero() {
            return None;
        }
        let two = Rat::from_integer(2.into());
        let c0 = &two * self.m2_m1.as_ref()? / &self.m1_squared;
        let c2 = &two * self.m0_m1.as_ref()? / &self.m1_squared;
        Some((c0, c2))
    }
}

pub fn lemma_two_parameters(a: &QuaternionPolynomial) -> Result<LemmaTwoParameters> {
    if let Some(d) = a.degree().filter(|&d| d > 2) {
        return Err(Error::UnsupportedDegree { found: d, max: 2 });
    }
    let (a0, a2) = (a.coeff(0), a.coeff(2));
    let (a_, ax, ay, az) = (&a0.w, &a0.x, &a0.y, &a0.z);
    let (c, cx, cy, cz) = (&a2.w, &a2.x, &a2.y, &a2.z);
    let num = ay * c + az * cx - a_ * cy - ax * cz;
    let den = az * c - ay * cx + ax * cy - a_ * cz;
    let four = Rat::from_integer(4.into());
    let m1_squared = four * (&num * &num + &den * &den);
    let tan_two_theta = (!den.is_zero()).then(|| &num / &den);

    let (mut m0_m1, mut m2_m1) = (None, None);
    if !a.is_zero() {
        if let Ok(d) = decompose_wronskian_quintic(&HopfPair::from(a)) {
            let z_const = matches!(d.case, DecompositionCase::ZConstant | DecompositionCase::BothConstant)
                || (d.case == DecompositionCase::OmegaConstant && d.z_constant_applies());
            if z_const && !m1_squared.is_zero() {
                // ω is real up to the phase of z²; the ratios m0/m1, m2/m1 are phase free
                let w = d.wronskian();
                let w1 = w.coeff(1);
                if !w1.is_zero() {
                    let ratio = |k: usize| (&w.coeff(k) / &w1).re;
                    m0_m1 = Some(ratio(0) * &m1_squared);
                    m2_m1 = Some(ratio(2) * &m1_squared);
                }
            }
        }
    }
    Ok(LemmaTwoParameters { tan_two_theta, m1_squared, m0_m1, m2_m1 })
}
