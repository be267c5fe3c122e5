use super::decompose::{decompose_wronskian_quintic, DecompositionCase, WronskianDecomposition};
use super::lemmas::{lemma_two_parameters, monotone_test, quaternion_dependence, Dependence, LemmaTwoParameters};
use crate::analysis::{is_2ph, is_helix, is_ph, HelixKind, HelixVerdict};
use crate::curveforms::{hodograph_from_quaternion, Hodograph, HopfPair, QuaternionPolynomial};
use crate::error::{Error, Result};
use crate::polycore::{wronskian, GaussPoly, ScaledSqrt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuinticKind {
    MonotoneHelix,
    GeneralHelix,
    NotHelix,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticClass {
    pub kind: QuinticKind,
    /// `A1 = c0·A0 + c2·A2`, recorded for general helices.
    pub dependence: Option<Dependence>,
    /// Non-constant `gcd(z1, z2)`, recorded for monotone helices.
    pub shared_factor: Option<GaussPoly>,
    /// Why a curve was judged degenerate.
    pub reason: Option<String>,
}

impl QuinticClass {
    fn degenerate(reason: impl Into<String>) -> Self {
        Self { kind: QuinticKind::Degenerate, dependence: None, shared_factor: None, reason: Some(reason.into()) }
    }

    pub fn is_helix(&self) -> bool {
        matches!(self.kind, QuinticKind::MonotoneHelix | QuinticKind::GeneralHelix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub quaternion: QuaternionPolynomial,
    pub hopf: HopfPair,
    pub hodograph: Hodograph,
    pub ph: Option<ScaledSqrt>,
    pub two_ph: Option<(ScaledSqrt, ScaledSqrt)>,
    pub wronskian: GaussPoly,
    pub decomposition: Option<WronskianDecomposition>,
    pub lemma_two: Option<LemmaTwoParameters>,
    pub quintic_class: QuinticClass,
    pub lancret: HelixVerdict,
}

pub enum QuinticSource<'a> {
    Quaternion(&'a QuaternionPolynomial),
    Hopf(&'a HopfPair),
}

impl<'a> From<&'a QuaternionPolynomial> for QuinticSource<'a> {
    fn from(a: &'a QuaternionPolynomial) -> Self {
        Self::Quaternion(a)
    }
}

impl<'a> From<&'a HopfPair> for QuinticSource<'a> {
    fn from(h: &'a HopfPair) -> Self {
        Self::Hopf(h)
    }
}

/// Classifies a PH curve given by a quaternion polynomial of degree ≤ 2.
///
/// The algebraic route (decomposition, shared factor, quaternion dependence)
/// and the Lancret test run independently; the result is returned only if
/// they agree that the curve is a helix exactly when it is 2-PH.
pub fn classify_quintic<'a>(source: impl Into<QuinticSource<'a>>) -> Result<ClassificationReport> {
    let quaternion = match source.into() {
        QuinticSource::Quaternion(a) => a.clone(),
        QuinticSource::Hopf(h) => QuaternionPolynomial::from(h),
    };
    let degree = quaternion
        .degree()
        .ok_or_else(|| Error::DegenerateInput("zero quaternion polynomial".into()))?;
    if degree > 2 {
        return Err(Error::UnsupportedDegree { found: degree, max: 2 });
    }
    let hopf = HopfPair::from(&quaternion);
    let hodograph = hodograph_from_quaternion(&quaternion)?;
    let ph = is_ph(&hodograph);
    let two_ph = is_2ph(&hodograph);
    let w = wronskian(&hopf.z1, &hopf.z2);
    let lancret = is_helix(&hodograph)?;

    let (decomposition, quintic_class, lemma_two) = if w.is_zero() {
        (None, QuinticClass::degenerate("z1/z2 is constant: the tangent direction never changes"), None)
    } else if degree < 2 {
        let d = decompose_wronskian_quintic(&hopf)?;
        (Some(d), QuinticClass::degenerate(format!("degree-{degree} quaternion polynomial: not a quintic")), None)
    } else {
        let d = decompose_wronskian_quintic(&hopf)?;
        let lemma_two = lemma_two_parameters(&quaternion)?;
        let class = route(&quaternion, &hopf, &d)?;
        (Some(d), class, Some(lemma_two))
    };

    let report = ClassificationReport {
        quaternion,
        hopf,
        hodograph,
        ph,
        two_ph,
        wronskian: w,
        decomposition,
        lemma_two,
        quintic_class,
        lancret,
    };
    cross_check(&report)?;
    Ok(report)
}

fn route(a: &QuaternionPolynomial, hopf: &HopfPair, d: &WronskianDecomposition) -> Result<QuinticClass> {
    use DecompositionCase::*;
    if d.case == Degenerate {
        return Ok(QuinticClass { kind: QuinticKind::NotHelix, dependence: None, shared_factor: None, reason: None });
    }
    let shared = monotone_test(hopf);
    if matches!(d.case, OmegaConstant | BothConstant) {
        if let Some(g) = shared {
            return Ok(QuinticClass {
                kind: QuinticKind::MonotoneHelix,
                dependence: None,
                shared_factor: Some(g),
                reason: None,
            });
        }
    }
    if d.z_constant_applies() {
        if let Some(dep) = quaternion_dependence(&a.coeff(0), &a.coeff(1), &a.coeff(2)) {
            return Ok(QuinticClass {
                kind: QuinticKind::GeneralHelix,
                dependence: Some(dep),
                shared_factor: shared,
                reason: None,
            });
        }
    }
    Err(Error::InternalInconsistency(format!(
        "{:?} decomposition with neither a shared factor of z1, z2 nor dependent quaternions",
        d.case
    )))
}

fn cross_check(r: &ClassificationReport) -> Result<()> {
    if r.wronskian.is_zero() {
        if r.lancret.kind != HelixKind::Line {
            return Err(Error::InternalInconsistency("vanishing Wronskian but the curve is not a line".into()));
        }
        return Ok(());
    }
    if r.ph.is_none() {
        return Err(Error::InternalInconsistency("quaternion hodograph is not PH".into()));
    }
    let two_ph = r.two_ph.is_some();
    if two_ph != r.lancret.satisfies_lancret() {
        return Err(Error::InternalInconsistency(format!(
            "2-PH = {two_ph} but the Lancret verdict is {:?}",
            r.lancret.kind
        )));
    }
    if let Some(d) = &r.decomposition {
        if d.exists() != two_ph {
            return Err(Error::InternalInconsistency(format!(
                "Wronskian decomposition {:?} disagrees with 2-PH = {two_ph}",
                d.case
            )));
        }
    }
    if r.quintic_class.kind != QuinticKind::Degenerate && r.quintic_class.is_helix() != two_ph {
        return Err(Error::InternalInconsistency(format!(
            "class {:?} disagrees with 2-PH = {two_ph}",
            r.quintic_class.kind
        )));
    }
    Ok(())
}
