//! Curvature, torsion and the Lancret helix test.
//!
//! With `σ² = |α′|²`, `ρ² = |α′ ∧ α″|²` and `Δ = det(α′, α″, α‴)`:
//! `κ = ρ/σ³`, `τ = Δ/ρ²`, and `(τ/κ)² = Δ²·(σ²)³/(ρ²)³`, which is always a
//! rational function even when `σ` or `ρ` is not a polynomial.
//!
//! Constancy of `(τ/κ)²` is enough for constancy of `τ/κ`: if `(τ/κ)² = λ² ≠ 0`
//! then `Δ·σ³ = ±λ·ρ³`, and switching branch would need a zero of the left
//! side at a parameter where the right side is non-zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cross::{cross_norm, is_ph, CrossNorm};
use crate::curveforms::vector::{self, PolyVec3};
use crate::curveforms::Hodograph;
use crate::error::{Error, Result};
use crate::polycore::rat::clear_to_integers;
use crate::polycore::{Rat, RatPoly, RationalFunction, ScaledSqrt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureData {
    pub sigma_squared: RatPoly,
    /// `σ`, when the curve is PH.
    pub sigma: Option<ScaledSqrt>,
    pub cross: CrossNorm,
    /// `det(α′, α″, α‴)`
    pub torsion_numerator: RatPoly,
    /// `(τ/κ)²`, reduced.
    pub lancret_ratio_squared: RationalFunction,
}

impl CurvatureData {
    /// `κ² = ρ²/(σ²)³`
    pub fn curvature_squared(&self) -> RationalFunction {
        RationalFunction::new(self.cross.rho_squared.clone(), self.sigma_squared.pow(3))
            .expect("σ² is non-zero for a hodograph")
    }

    /// `τ = Δ/ρ²`
    pub fn torsion(&self) -> RationalFunction {
        RationalFunction::new(self.torsion_numerator.clone(), self.cross.rho_squared.clone())
            .expect("ρ² is non-zero")
    }
}

pub fn curvature_torsion(h: &Hodograph) -> Result<CurvatureData> {
    let cross = cross_norm(h);
    if cross.rho_squared.is_zero() {
        return Err(Error::LineDegeneracy);
    }
    let a1 = h.vector();
    let a2 = vector::derivative(&a1);
    let a3 = vector::derivative(&a2);
    let det = vector::det(&a1, &a2, &a3);
    let sigma_squared = h.speed_squared();

    // (τ/κ)² = (Δ/ρ²)² · (σ²)³/ρ²; each factor is reduced before multiplying
    let torsion = RationalFunction::new(det.clone(), cross.rho_squared.clone())?;
    let speed_part = RationalFunction::new(sigma_squared.pow(3), cross.rho_squared.clone())?;
    let lancret_ratio_squared = torsion.pow(2).mul(&speed_part);

    Ok(CurvatureData {
        sigma: is_ph(h),
        sigma_squared,
        cross,
        torsion_numerator: det,
        lancret_ratio_squared,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HelixKind {
    /// `α′ ∧ α″ ≡ 0`
    Line,
    /// Zero torsion; the axis is the plane normal.
    Planar,
    /// Constant non-zero `τ/κ`.
    Helix,
    NotHelix,
}

/// Constant axis `u⃗` with `⟨u⃗, α′⟩² = c²·|u⃗|²·σ²` for the slope `c² = slope_squared`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HelixAxis {
    /// Coprime integers, first non-zero entry positive.
    pub axis: [BigInt; 3],
    pub slope_squared: Rat,
}

impl HelixAxis {
    pub fn axis_rat(&self) -> [Rat; 3] {
        self.axis.clone().map(Rat::from_integer)
    }

    pub fn axis_norm_squared(&self) -> Rat {
        self.axis_rat().iter().map(|c| c * c).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HelixVerdict {
    pub kind: HelixKind,
    /// Present for `Planar` and `Helix`.
    pub axis: Option<HelixAxis>,
    /// `(τ/κ)²` when the curve is not a line.
    pub lancret_ratio_squared: Option<RationalFunction>,
}

impl HelixVerdict {
    pub fn slope_squared(&self) -> Option<&Rat> {
        self.axis.as_ref().map(|a| &a.slope_squared)
    }

    /// Helix in the wide sense, counting planar curves.
    pub fn satisfies_lancret(&self) -> bool {
        matches!(self.kind, HelixKind::Helix | HelixKind::Planar)
    }
}

/// Lancret test on the exact `(τ/κ)²`.
///
/// Only an internal inconsistency (a constant ratio without a constant axis)
/// is reported as an error.
pub fn is_helix(h: &Hodograph) -> Result<HelixVerdict> {
    let data = match curvature_torsion(h) {
        Ok(d) => d,
        Err(Error::LineDegeneracy) => {
            return Ok(HelixVerdict { kind: HelixKind::Line, axis: None, lancret_ratio_squared: None })
        }
        Err(e) => return Err(e),
    };
    let kind = if data.torsion_numerator.is_zero() {
        HelixKind::Planar
    } else if data.lancret_ratio_squared.as_constant().is_some() {
        HelixKind::Helix
    } else {
        HelixKind::NotHelix
    };
    let axis = match kind {
        HelixKind::Planar | HelixKind::Helix => Some(extract_axis(h, &data)?),
        _ => None,
    };
    Ok(HelixVerdict { kind, axis, lancret_ratio_squared: Some(data.lancret_ratio_squared) })
}

/// Axis and slope for a curve already judged `Helix` or `Planar`.
pub fn helix_axis(h: &Hodograph, verdict: &HelixVerdict) -> Result<HelixAxis> {
    if !verdict.satisfies_lancret() {
        return Err(Error::Precondition(format!(
            "helix axis requested for a {:?} verdict",
            verdict.kind
        )));
    }
    let data = curvature_torsion(h)?;
    extract_axis(h, &data)
}

/// The Darboux direction `τ·t + κ·b`, cleared of denominators, is
/// `Δ·σ²·α′ + ρ²·(α′ ∧ α″)`; for a helix it is a polynomial multiple of a
/// constant vector.
fn extract_axis(h: &Hodograph, data: &CurvatureData) -> Result<HelixAxis> {
    let a1 = h.vector();
    let c = vector::cross(&a1, &vector::derivative(&a1));
    let darboux = vector::add(
        &vector::scale(&a1, &(&data.torsion_numerator * &data.sigma_squared)),
        &vector::scale(&c, &data.cross.rho_squared),
    );
    let direction = constant_direction(&darboux).ok_or_else(|| {
        Error::InternalInconsistency("constant Lancret ratio but the Darboux direction varies".into())
    })?;
    let axis = clear_to_integers(&direction);
    let sign_flip = axis.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigInt::zero());
    let axis: [BigInt; 3] = [0, 1, 2].map(|i| if sign_flip { -&axis[i] } else { axis[i].clone() });
    let u = axis.clone().map(Rat::from_integer);
    let u_norm: Rat = u.iter().map(|x| x * x).sum();

    let along = vector::dot_const(&u, &a1);
    let along_sq = &along * &along;
    let reference = data.sigma_squared.scale(&u_norm);
    let slope_squared = match along_sq.leading() {
        None => Rat::zero(),
        Some(lc) => lc / reference.leading().expect("σ² is non-zero"),
    };
    if !(&along_sq - &reference.scale(&slope_squared)).is_zero() {
        return Err(Error::InternalInconsistency("tangent makes a varying angle with the axis".into()));
    }
    let bin = vector::dot_const(&u, &c);
    let bin_rest = data.cross.rho_squared.scale(&(&u_norm * &(Rat::one() - &slope_squared)));
    if !(&(&bin * &bin) - &bin_rest).is_zero() {
        return Err(Error::InternalInconsistency("binormal makes a varying angle with the axis".into()));
    }
    Ok(HelixAxis { axis, slope_squared })
}

/// `v(t) = f(t)·d` for a constant `d`; returns `d` normalized on its first non-zero entry.
fn constant_direction(v: &PolyVec3) -> Option<[Rat; 3]> {
    let pivot = v.iter().find(|p| !p.is_zero())?;
    let lp = pivot.leading().unwrap();
    let mut out = [Rat::zero(), Rat::zero(), Rat::zero()];
    for (i, comp) in v.iter().enumerate() {
        let Some(lc) = comp.leading() else { continue };
        if !(&comp.scale(lp) - &pivot.scale(lc)).is_zero() {
            return None;
        }
        out[i] = lc / lp;
    }
    Some(out)
}
