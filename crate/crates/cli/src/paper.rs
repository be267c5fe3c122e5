//! Built-in worked examples with their expected values stored as data.
//!
//! Polynomials are listed as ascending coefficients; complex coefficients as
//! consecutive `re, im` pairs. Every computed quantity is flattened the same
//! way and compared exactly.

use serde::Serialize;

use ph_helix::analysis::{cross_norm, curvature_torsion, is_helix, is_ph};
use ph_helix::curveforms::HopfPair;
use ph_helix::fixtures;
use ph_helix::polycore::{parse_rat, GaussPoly, Rat, RatPoly};
use ph_helix::quintic::{classify_quintic, ClassificationReport};

use crate::error::CliError;
use crate::spec::CurveSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PaperExample {
    Example1,
    Example2,
    Counterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Z1,
    Z2,
    Wronskian,
    Omega,
    ZSquared,
    SharedFactor,
    Dependence,
    TanTwoTheta,
    M1Squared,
    Sigma,
    Rho,
    LancretNumerator,
    LancretDenominator,
    /// `α(1)` with the curve's own origin.
    PointAtOne,
    QuinticClass,
    TwoPh,
    Lancret,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Values(Vec<String>),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub quantity: Quantity,
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub example: PaperExample,
    pub input: CurveSpec,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub quantity: Quantity,
    pub expected: Expected,
    pub computed: Option<Expected>,
    pub pass: bool,
}

fn values(xs: &[&str]) -> Expected {
    Expected::Values(xs.iter().map(|s| s.to_string()).collect())
}

fn label(s: &str) -> Expected {
    Expected::Label(s.into())
}

fn check(quantity: Quantity, expected: Expected) -> Check {
    Check { quantity, expected }
}

pub fn fixture(example: PaperExample) -> Fixture {
    use Quantity::*;
    match example {
        PaperExample::Example1 => Fixture {
            example,
            input: CurveSpec::from_quaternion(&fixtures::example_one()),
            checks: vec![
                check(Z1, values(&["0", "10", "-3", "-5", "1", "1"])),
                check(Z2, values(&["10", "5", "-9", "3", "1", "-2"])),
                check(Wronskian, values(&["25", "25", "-30", "10", "1", "-7"])),
                check(Omega, values(&["1"])),
                check(ZSquared, values(&["25", "25", "-30", "10", "1", "-7"])),
                check(SharedFactor, values(&["-1", "-2", "1", "0"])),
                check(QuinticClass, label("MonotoneHelix")),
                check(TwoPh, label("true")),
                check(Lancret, label("Helix")),
            ],
        },
        PaperExample::Example2 => Fixture {
            example,
            input: CurveSpec::from_quaternion(&fixtures::example_two()),
            checks: vec![
                check(Z1, values(&["5", "1", "12", "18", "-19", "-22"])),
                check(Z2, values(&["3", "-1", "24", "-12", "-31", "15"])),
                check(Wronskian, values(&["-78", "78", "182", "-182", "-78", "78"])),
                check(Omega, values(&["3", "-7", "3"])),
                check(ZSquared, values(&["-26", "26"])),
                check(Dependence, values(&["-6/7", "-6/7"])),
                check(TanTwoTheta, values(&["-1"])),
                check(M1Squared, values(&["66248"])),
                check(QuinticClass, label("GeneralHelix")),
                check(TwoPh, label("true")),
                check(Lancret, label("Helix")),
            ],
        },
        PaperExample::Counterexample => Fixture {
            example,
            input: CurveSpec::from_curve(&fixtures::counterexample_curve()),
            checks: vec![
                check(Sigma, values(&["3", "0", "3", "0", "1", "0", "1/3"])),
                check(Rho, values(&["18", "0", "36", "0", "24", "0", "8", "0", "2"])),
                check(
                    LancretNumerator,
                    values(&["1", "0", "0", "0", "-2", "0", "-4/9", "0", "1", "0", "4/9", "0", "4/81"]),
                ),
                check(LancretDenominator, values(&["1", "0", "4", "0", "6", "0", "4", "0", "1"])),
                check(PointAtOne, values(&["-184/105", "5/2", "-2"])),
                check(TwoPh, label("true")),
                check(Lancret, label("NotHelix")),
            ],
        },
    }
}

fn flat(p: &RatPoly) -> Vec<Rat> {
    p.coeffs().to_vec()
}

fn flat_gauss(p: &GaussPoly) -> Vec<Rat> {
    p.coeffs().iter().flat_map(|c| [c.re.clone(), c.im.clone()]).collect()
}

struct Computed {
    hopf: Option<HopfPair>,
    report: Option<ClassificationReport>,
    spec: crate::spec::ParsedSpec,
}

fn compute(c: &Computed, q: Quantity) -> Result<Option<Expected>, CliError> {
    use Quantity::*;
    let vals = |v: Vec<Rat>| Some(Expected::Values(v.iter().map(Rat::to_string).collect()));
    let h = c.spec.hodograph()?;
    Ok(match q {
        Z1 => c.hopf.as_ref().and_then(|p| vals(flat_gauss(&p.z1))),
        Z2 => c.hopf.as_ref().and_then(|p| vals(flat_gauss(&p.z2))),
        Wronskian => c.report.as_ref().and_then(|r| vals(flat_gauss(&r.wronskian))),
        Omega => c.report.as_ref().and_then(|r| r.decomposition.as_ref()).and_then(|d| vals(flat(&d.omega))),
        ZSquared => {
            c.report.as_ref().and_then(|r| r.decomposition.as_ref()).and_then(|d| vals(flat_gauss(&d.z_squared)))
        }
        SharedFactor => c
            .report
            .as_ref()
            .and_then(|r| r.quintic_class.shared_factor.as_ref())
            .and_then(|g| vals(flat_gauss(g))),
        Dependence => c
            .report
            .as_ref()
            .and_then(|r| r.quintic_class.dependence.as_ref())
            .and_then(|d| vals(vec![d.c0.clone(), d.c2.clone()])),
        TanTwoTheta => c
            .report
            .as_ref()
            .and_then(|r| r.lemma_two.as_ref())
            .and_then(|p| p.tan_two_theta.clone())
            .and_then(|t| vals(vec![t])),
        M1Squared => c.report.as_ref().and_then(|r| r.lemma_two.as_ref()).and_then(|p| vals(vec![p.m1_squared.clone()])),
        Sigma => is_ph(&h).and_then(|s| s.rational_form()).and_then(|p| vals(flat(&p))),
        Rho => cross_norm(&h).rho.and_then(|s| s.rational_form()).and_then(|p| vals(flat(&p))),
        LancretNumerator => vals(flat(curvature_torsion(&h)?.lancret_ratio_squared.num())),
        LancretDenominator => vals(flat(curvature_torsion(&h)?.lancret_ratio_squared.den())),
        PointAtOne => vals(c.spec.curve()?.eval(&Rat::from_integer(1.into())).to_vec()),
        QuinticClass => c.report.as_ref().map(|r| Expected::Label(format!("{:?}", r.quintic_class.kind))),
        TwoPh => {
            let two_ph = is_ph(&h).is_some() && cross_norm(&h).rho.is_some();
            Some(Expected::Label(two_ph.to_string()))
        }
        Lancret => Some(Expected::Label(format!("{:?}", is_helix(&h)?.kind))),
    })
}

/// Exact comparison: values are compared as rationals, labels as strings.
fn matches(expected: &Expected, computed: &Expected) -> bool {
    match (expected, computed) {
        (Expected::Label(a), Expected::Label(b)) => a == b,
        (Expected::Values(a), Expected::Values(b)) => {
            a.len() == b.len()
                && a.iter().zip(b).all(|(x, y)| match (parse_rat(x), parse_rat(y)) {
                    (Some(x), Some(y)) => x == y,
                    _ => false,
                })
        }
        _ => false,
    }
}

pub fn run_fixture(f: &Fixture) -> Result<Vec<CheckResult>, CliError> {
    let spec = f.input.parse()?;
    let quintic = spec.quintic();
    let report = quintic.as_ref().map(classify_quintic).transpose()?;
    let hopf = quintic.as_ref().map(HopfPair::from);
    let computed = Computed { hopf, report, spec };
    f.checks
        .iter()
        .map(|c| {
            let got = compute(&computed, c.quantity)?;
            let pass = got.as_ref().is_some_and(|g| matches(&c.expected, g));
            Ok(CheckResult { quantity: c.quantity, expected: c.expected.clone(), computed: got, pass })
        })
        .collect()
}
