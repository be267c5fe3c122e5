//! Curve specification documents.
//!
//! Rationals are always strings such as `"-3/7"` or `"12"`; JSON numbers are
//! rejected so that no value ever passes through a float.

use serde::{Deserialize, Serialize};

use ph_helix::curveforms::{
    bezier_to_power, default_origin, hodograph_from_hopf, hodograph_from_quaternion, integrate, Hodograph,
    HopfPair, PolynomialCurve, Quaternion, QuaternionPolynomial,
};
use ph_helix::polycore::{parse_rat, GaussPoly, GaussRat, Rat, RatPoly};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CurveSpec {
    /// Power-basis coefficients `A0, A1, A2` of `A(t)`, each `[w, x, y, z]`.
    Quaternion {
        coefficients: Vec<[String; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        origin: Option<[String; 3]>,
    },
    /// Bézier control quaternions on `[0, 1]`.
    BezierQuaternion {
        control_points: Vec<[String; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        origin: Option<[String; 3]>,
    },
    /// `z1`, `z2` as ascending `[re, im]` coefficients.
    Hopf {
        z1: Vec<[String; 2]>,
        z2: Vec<[String; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        origin: Option<[String; 3]>,
    },
    /// Ascending coefficients of `α′`.
    Hodograph {
        x: Vec<String>,
        y: Vec<String>,
        z: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        origin: Option<[String; 3]>,
    },
    /// Ascending coefficients of `α` itself.
    Curve { x: Vec<String>, y: Vec<String>, z: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedCurve {
    Quaternion(QuaternionPolynomial),
    Hopf(HopfPair),
    Hodograph(Hodograph),
    Polynomial(PolynomialCurve),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedSpec {
    pub curve: ParsedCurve,
    pub origin: [Rat; 3],
}

fn rat(s: &str) -> Result<Rat, CliError> {
    parse_rat(s).ok_or_else(|| CliError::Parse(format!("malformed rational {s:?}")))
}

fn rats(xs: &[String]) -> Result<Vec<Rat>, CliError> {
    xs.iter().map(|s| rat(s)).collect()
}

fn poly(xs: &[String]) -> Result<RatPoly, CliError> {
    Ok(RatPoly::new(rats(xs)?))
}

fn gauss_poly(xs: &[[String; 2]]) -> Result<GaussPoly, CliError> {
    let cs = xs.iter().map(|[re, im]| Ok(GaussRat::new(rat(re)?, rat(im)?))).collect::<Result<_, CliError>>()?;
    Ok(GaussPoly::new(cs))
}

fn quaternion(q: &[String; 4]) -> Result<Quaternion, CliError> {
    let [w, x, y, z] = q;
    Ok(Quaternion::new(rat(w)?, rat(x)?, rat(y)?, rat(z)?))
}

fn origin(o: &Option<[String; 3]>) -> Result<[Rat; 3], CliError> {
    match o {
        None => Ok(default_origin()),
        Some([x, y, z]) => Ok([rat(x)?, rat(y)?, rat(z)?]),
    }
}

fn non_empty(empty: bool) -> Result<(), CliError> {
    if empty {
        Err(CliError::Parse("empty coefficient list".into()))
    } else {
        Ok(())
    }
}

fn strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(Rat::to_string).collect()
}

fn gauss_strings(p: &GaussPoly) -> Vec<[String; 2]> {
    p.coeffs().iter().map(|c| [c.re.to_string(), c.im.to_string()]).collect()
}

impl CurveSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs always serialize")
    }

    pub fn from_quaternion(a: &QuaternionPolynomial) -> Self {
        let coefficients = a
            .coeffs()
            .iter()
            .map(|q| [q.w.to_string(), q.x.to_string(), q.y.to_string(), q.z.to_string()])
            .collect();
        Self::Quaternion { coefficients, origin: None }
    }

    pub fn from_hopf(h: &HopfPair) -> Self {
        Self::Hopf { z1: gauss_strings(&h.z1), z2: gauss_strings(&h.z2), origin: None }
    }

    pub fn from_hodograph(h: &Hodograph) -> Self {
        Self::Hodograph { x: strings(&h.dx), y: strings(&h.dy), z: strings(&h.dz), origin: None }
    }

    pub fn from_curve(c: &PolynomialCurve) -> Self {
        Self::Curve { x: strings(&c.x), y: strings(&c.y), z: strings(&c.z) }
    }

    pub fn form(&self) -> &'static str {
        match self {
            Self::Quaternion { .. } => "quaternion",
            Self::BezierQuaternion { .. } => "bezier-quaternion",
            Self::Hopf { .. } => "hopf",
            Self::Hodograph { .. } => "hodograph",
            Self::Curve { .. } => "curve",
        }
    }

    /// Validates every coefficient and the per-form degree limits.
    pub fn parse(&self) -> Result<ParsedSpec, CliError> {
        let (curve, origin) = match self {
            Self::Quaternion { coefficients, origin: o } => {
                non_empty(coefficients.is_empty())?;
                if coefficients.len() > 3 {
                    return Err(CliError::Parse(format!(
                        "quaternion form takes at most 3 coefficients, found {}",
                        coefficients.len()
                    )));
                }
                let qs = coefficients.iter().map(quaternion).collect::<Result<_, _>>()?;
                (ParsedCurve::Quaternion(QuaternionPolynomial::new(qs)), origin(o)?)
            }
            Self::BezierQuaternion { control_points, origin: o } => {
                non_empty(control_points.is_empty())?;
                let qs: Vec<Quaternion> = control_points.iter().map(quaternion).collect::<Result<_, _>>()?;
                let a = bezier_to_power(&qs).map_err(|e| CliError::Parse(e.to_string()))?;
                (ParsedCurve::Quaternion(a), origin(o)?)
            }
            Self::Hopf { z1, z2, origin: o } => {
                non_empty(z1.is_empty() && z2.is_empty())?;
                let pair = HopfPair::new(gauss_poly(z1)?, gauss_poly(z2)?)?;
                (ParsedCurve::Hopf(pair), origin(o)?)
            }
            Self::Hodograph { x, y, z, origin: o } => {
                non_empty(x.is_empty() && y.is_empty() && z.is_empty())?;
                (ParsedCurve::Hodograph(Hodograph::new(poly(x)?, poly(y)?, poly(z)?)?), origin(o)?)
            }
            Self::Curve { x, y, z } => {
                non_empty(x.is_empty() && y.is_empty() && z.is_empty())?;
                let c = PolynomialCurve::new(poly(x)?, poly(y)?, poly(z)?);
                let o = c.origin();
                (ParsedCurve::Polynomial(c), o)
            }
        };
        Ok(ParsedSpec { curve, origin })
    }
}

impl ParsedSpec {
    pub fn hodograph(&self) -> Result<Hodograph, CliError> {
        Ok(match &self.curve {
            ParsedCurve::Quaternion(a) => hodograph_from_quaternion(a)?,
            ParsedCurve::Hopf(h) => hodograph_from_hopf(h)?,
            ParsedCurve::Hodograph(h) => h.clone(),
            ParsedCurve::Polynomial(c) => c.hodograph()?,
        })
    }

    /// The curve itself: integrated from the stored origin unless given directly.
    pub fn curve(&self) -> Result<PolynomialCurve, CliError> {
        match &self.curve {
            ParsedCurve::Polynomial(c) => Ok(c.clone()),
            _ => Ok(integrate(&self.hodograph()?, &self.origin)),
        }
    }

    /// The quaternion polynomial when the input is a genuine quintic candidate.
    pub fn quintic(&self) -> Option<QuaternionPolynomial> {
        let a = match &self.curve {
            ParsedCurve::Quaternion(a) => a.clone(),
            ParsedCurve::Hopf(h) => QuaternionPolynomial::from(h),
            _ => return None,
        };
        (a.degree() == Some(2)).then_some(a)
    }
}
