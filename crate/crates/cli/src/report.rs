//! JSON shapes of the command outputs. Field order is the declaration
//! order; non-finite reals are written as the strings "inf", "-inf", "nan".

use expdisk_core::geometry::SubordinationCertificate;
use expdisk_core::theorems::{HypothesisReport, MemberCertificate};
use expdisk_core::Complex;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let x = self.0;
        if x.is_finite() {
            s.serialize_f64(x)
        } else if x.is_nan() {
            s.serialize_str("nan")
        } else if x > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Point {
    pub re: Real,
    pub im: Real,
}

impl From<Complex> for Point {
    fn from(z: Complex) -> Self {
        Point { re: Real(z.re), im: Real(z.im) }
    }
}

#[derive(Debug, Serialize)]
pub struct EvalRecord {
    pub z_re: Real,
    pub z_im: Real,
    pub f_re: Real,
    pub f_im: Real,
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub status: &'static str,
    pub max_log_mod: Real,
    pub witness: Point,
    pub margin: Real,
    pub radii: Vec<f64>,
    pub angles: usize,
    pub refine_factor: usize,
    pub zero_encountered: bool,
    pub eval_uncertainty: Real,
    pub circle_max: Vec<Real>,
}

impl From<&SubordinationCertificate> for CertificateJson {
    fn from(c: &SubordinationCertificate) -> Self {
        CertificateJson {
            status: c.status.as_str(),
            max_log_mod: Real(c.max_log_mod),
            witness: c.witness.into(),
            margin: Real(c.margin),
            radii: c.plan_used.radii().to_vec(),
            angles: c.plan_used.angles(),
            refine_factor: c.plan_used.refine_factor(),
            zero_encountered: c.zero_encountered,
            eval_uncertainty: Real(c.eval_uncertainty),
            circle_max: c.circle_max.iter().map(|&x| Real(x)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConditionJson {
    pub label: String,
    pub satisfied: bool,
    pub slack: Real,
    pub strict: bool,
}

#[derive(Debug, Serialize)]
pub struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Real>,
}

#[derive(Debug, Serialize)]
pub struct MemberJson {
    pub label: String,
    pub class: &'static str,
    pub certificate: CertificateJson,
}

impl From<&MemberCertificate> for MemberJson {
    fn from(m: &MemberCertificate) -> Self {
        MemberJson { label: m.label.clone(), class: m.class.as_str(), certificate: (&m.certificate).into() }
    }
}

#[derive(Debug, Serialize)]
pub struct HypothesisJson {
    pub theorem: &'static str,
    pub params: ParamsJson,
    pub conditions: Vec<ConditionJson>,
    pub all_satisfied: bool,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<MemberJson>>,
}

impl HypothesisJson {
    pub fn new(report: &HypothesisReport, certificates: Option<&[MemberCertificate]>) -> Self {
        let p = &report.params;
        HypothesisJson {
            theorem: report.theorem.as_str(),
            params: ParamsJson {
                a: p.a.map(Point::from),
                c: p.c.map(Point::from),
                mu: p.mu.map(Point::from),
                nu: p.nu.map(Point::from),
                kappa: p.kappa.map(Point::from),
                delta: p.delta.map(Real),
            },
            conditions: report
                .conditions
                .iter()
                .map(|c| ConditionJson {
                    label: c.label.clone(),
                    satisfied: c.satisfied,
                    slack: Real(c.slack),
                    strict: c.strict,
                })
                .collect(),
            all_satisfied: report.all_satisfied,
            notes: report.notes.clone(),
            certificates: certificates.map(|cs| cs.iter().map(MemberJson::from).collect()),
        }
    }
}
