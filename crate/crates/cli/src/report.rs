//! Serializable reports. Every exact quantity is carried as its canonical
//! string so that documents round-trip losslessly.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use ph_helix::analysis::{cross_norm, curvature_torsion, frenet_frame, is_helix, is_ph, FrenetFrame, HelixKind, HelixVerdict};
use ph_helix::curveforms::Hodograph;
use ph_helix::polycore::{RationalFunction, ScaledSqrt};
use ph_helix::quintic::{classify_quintic, ClassificationReport, QuinticKind};
use ph_helix::Error;

use crate::error::CliError;
use crate::spec::{CurveSpec, ParsedSpec};

pub const TOOL: &str = concat!("ph-helix ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub input: CurveSpec,
    pub hodograph: [String; 3],
    pub speed_squared: String,
    pub sigma: Option<String>,
    pub rho_squared: String,
    pub rho: Option<String>,
    pub ph: bool,
    pub two_ph: bool,
    pub quintic: Option<QuinticDoc>,
    pub lancret: LancretDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<AnalysisDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuinticDoc {
    pub z1: String,
    pub z2: String,
    pub wronskian: String,
    pub decomposition: Option<DecompositionDoc>,
    pub lemma_two: Option<LemmaTwoDoc>,
    pub class: String,
    pub shared_factor: Option<String>,
    pub dependence: Option<[String; 2]>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub case: String,
    pub omega: String,
    pub z_squared: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaTwoDoc {
    pub tan_two_theta: Option<String>,
    pub m1_squared: String,
    pub m0_m1: Option<String>,
    pub m2_m1: Option<String>,
    pub predicted_dependence: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LancretDoc {
    pub verdict: String,
    pub ratio_squared: Option<String>,
    pub axis: Option<[String; 3]>,
    pub slope_squared: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDoc {
    pub curvature_squared: Option<String>,
    pub torsion: Option<String>,
    pub frenet: Option<FrenetDoc>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrenetDoc {
    pub tangent: [String; 3],
    pub normal: [String; 3],
    pub binormal: [String; 3],
    pub tangent_scale: String,
    pub frame_scale: String,
}

fn root_string(s: &ScaledSqrt) -> String {
    s.to_string()
}

fn rf_string(r: &RationalFunction) -> String {
    match r.as_constant() {
        Some(c) => c.to_string(),
        None => r.to_string(),
    }
}

fn kind_name(k: HelixKind) -> String {
    format!("{k:?}")
}

fn lancret_doc(v: &HelixVerdict) -> LancretDoc {
    LancretDoc {
        verdict: kind_name(v.kind),
        ratio_squared: v.lancret_ratio_squared.as_ref().map(rf_string),
        axis: v.axis.as_ref().map(|a| a.axis.clone().map(|x| x.to_string())),
        slope_squared: v.slope_squared().map(|c| c.to_string()),
    }
}

fn quintic_doc(r: &ClassificationReport) -> QuinticDoc {
    let class = &r.quintic_class;
    QuinticDoc {
        z1: r.hopf.z1.to_string(),
        z2: r.hopf.z2.to_string(),
        wronskian: r.wronskian.to_string(),
        decomposition: r.decomposition.as_ref().map(|d| DecompositionDoc {
            case: format!("{:?}", d.case),
            omega: d.omega.to_string(),
            z_squared: d.z_squared.to_string(),
        }),
        lemma_two: r.lemma_two.as_ref().map(|p| LemmaTwoDoc {
            tan_two_theta: p.tan_two_theta.as_ref().map(ToString::to_string),
            m1_squared: p.m1_squared.to_string(),
            m0_m1: p.m0_m1.as_ref().map(ToString::to_string),
            m2_m1: p.m2_m1.as_ref().map(ToString::to_string),
            predicted_dependence: p.predicted_dependence().map(|(a, b)| [a.to_string(), b.to_string()]),
        }),
        class: format!("{:?}", class.kind),
        shared_factor: class.shared_factor.as_ref().map(ToString::to_string),
        dependence: class.dependence.as_ref().map(|d| [d.c0.to_string(), d.c2.to_string()]),
        reason: class.reason.clone(),
    }
}

fn frenet_doc(f: &FrenetFrame) -> FrenetDoc {
    let v = |x: &[RationalFunction; 3]| [0, 1, 2].map(|i| rf_string(&x[i]));
    FrenetDoc {
        tangent: v(&f.tangent),
        normal: v(&f.normal),
        binormal: v(&f.binormal),
        tangent_scale: f.tangent_scale.to_string(),
        frame_scale: f.frame_scale.to_string(),
    }
}

fn base_document(command: &str, input: &CurveSpec, h: &Hodograph, lancret: &HelixVerdict) -> ReportDocument {
    let cross = cross_norm(h);
    let sigma = is_ph(h);
    ReportDocument {
        tool: TOOL.into(),
        command: command.into(),
        seed: None,
        input: input.clone(),
        hodograph: [h.dx.to_string(), h.dy.to_string(), h.dz.to_string()],
        speed_squared: h.speed_squared().to_string(),
        ph: sigma.is_some(),
        two_ph: sigma.is_some() && cross.rho.is_some(),
        sigma: sigma.as_ref().map(root_string),
        rho_squared: cross.rho_squared.to_string(),
        rho: cross.rho.as_ref().map(root_string),
        quintic: None,
        lancret: lancret_doc(lancret),
        analysis: None,
    }
}

/// Classification: the quintic classifier for quadratic quaternion input,
/// the PH/2-PH and Lancret tests for everything else.
pub fn classify(command: &str, input: &CurveSpec, parsed: &ParsedSpec) -> Result<ReportDocument, CliError> {
    let h = parsed.hodograph()?;
    if let Some(a) = parsed.quintic() {
        let r = classify_quintic(&a)?;
        let mut doc = base_document(command, input, &r.hodograph, &r.lancret);
        doc.quintic = Some(quintic_doc(&r));
        return Ok(doc);
    }
    let lancret = is_helix(&h)?;
    Ok(base_document(command, input, &h, &lancret))
}

/// Classification plus curvature, torsion and the rational Frenet frame.
pub fn analyze(input: &CurveSpec, parsed: &ParsedSpec) -> Result<ReportDocument, CliError> {
    let mut doc = classify("analyze", input, parsed)?;
    let h = parsed.hodograph()?;
    let mut analysis = AnalysisDoc { curvature_squared: None, torsion: None, frenet: None, notes: Vec::new() };
    match curvature_torsion(&h) {
        Ok(d) => {
            analysis.curvature_squared = Some(rf_string(&d.curvature_squared()));
            analysis.torsion = Some(rf_string(&d.torsion()));
        }
        Err(Error::LineDegeneracy) => {
            analysis.notes.push("straight line: curvature vanishes and the Frenet frame is undefined".into());
        }
        Err(e) => return Err(e.into()),
    }
    match frenet_frame(&h) {
        Ok(f) => analysis.frenet = Some(frenet_doc(&f)),
        Err(Error::NotRationalFrame) => {
            analysis.notes.push("not 2-PH: the Frenet frame is not rational".into());
        }
        Err(Error::LineDegeneracy) => {}
        Err(e) => return Err(e.into()),
    }
    doc.analysis = Some(analysis);
    Ok(doc)
}

impl ReportDocument {
    /// A line, a constant tangent direction, or an input outside the classifier's domain.
    pub fn is_degenerate(&self) -> bool {
        self.lancret.verdict == kind_name(HelixKind::Line)
            || self.quintic.as_ref().is_some_and(|q| q.class == format!("{:?}", QuinticKind::Degenerate))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(s, "form: {}", self.input.form());
        let _ = writeln!(s, "x'(t) = {}", self.hodograph[0]);
        let _ = writeln!(s, "y'(t) = {}", self.hodograph[1]);
        let _ = writeln!(s, "z'(t) = {}", self.hodograph[2]);
        let _ = writeln!(s, "|a'|^2 = {}", self.speed_squared);
        let _ = writeln!(s, "PH: {}", yes(self.ph));
        if let Some(sigma) = &self.sigma {
            let _ = writeln!(s, "sigma = {sigma}");
        }
        let _ = writeln!(s, "|a' x a''|^2 = {}", self.rho_squared);
        if let Some(rho) = &self.rho {
            let _ = writeln!(s, "rho = {rho}");
        }
        let _ = writeln!(s, "2-PH: {}", yes(self.two_ph));
        if let Some(q) = &self.quintic {
            let _ = writeln!(s, "z1 = {}", q.z1);
            let _ = writeln!(s, "z2 = {}", q.z2);
            let _ = writeln!(s, "W = {}", q.wronskian);
            if let Some(d) = &q.decomposition {
                let _ = writeln!(s, "decomposition: {} (omega = {}, z^2 = {})", d.case, d.omega, d.z_squared);
            }
            if let Some(p) = &q.lemma_two {
                let tan = p.tan_two_theta.as_deref().unwrap_or("undefined");
                let _ = writeln!(s, "tan(2 theta) = {tan}, m1^2 = {}", p.m1_squared);
            }
            let _ = writeln!(s, "class: {}", q.class);
            if let Some(g) = &q.shared_factor {
                let _ = writeln!(s, "shared factor: {g}");
            }
            if let Some([c0, c2]) = &q.dependence {
                let _ = writeln!(s, "dependence: A1 = {c0}*A0 + {c2}*A2");
            }
            if let Some(r) = &q.reason {
                let _ = writeln!(s, "reason: {r}");
            }
        }
        let _ = writeln!(s, "Lancret: {}", self.lancret.verdict);
        if let Some(r) = &self.lancret.ratio_squared {
            let _ = writeln!(s, "(tau/kappa)^2 = {r}");
        }
        if let (Some([a, b, c]), Some(c2)) = (&self.lancret.axis, &self.lancret.slope_squared) {
            let _ = writeln!(s, "axis: ({a}, {b}, {c}), cos^2 = {c2}");
        }
        if let Some(a) = &self.analysis {
            if let Some(k) = &a.curvature_squared {
                let _ = writeln!(s, "kappa^2 = {k}");
            }
            if let Some(t) = &a.torsion {
                let _ = writeln!(s, "tau = {t}");
            }
            if let Some(f) = &a.frenet {
                let v = |x: &[String; 3]| format!("({}, {}, {})", x[0], x[1], x[2]);
                let _ = writeln!(s, "tangent = {}", v(&f.tangent));
                let _ = writeln!(s, "normal = {}", v(&f.normal));
                let _ = writeln!(s, "binormal = {}", v(&f.binormal));
                if f.tangent_scale != "1" || f.frame_scale != "1" {
                    let _ = writeln!(
                        s,
                        "scales: tangent / sqrt({}), binormal / sqrt({})",
                        f.tangent_scale, f.frame_scale
                    );
                }
            }
            for n in &a.notes {
                let _ = writeln!(s, "note: {n}");
            }
        }
        s
    }
}
