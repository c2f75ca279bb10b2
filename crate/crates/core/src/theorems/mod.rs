//! The inclusion results as data: for each result, a checker that evaluates
//! every inequality of its hypothesis with a signed slack, and a constructor
//! for the function(s) it places in 𝒫ₑ, 𝒮ₑ* or 𝒦ₑ.

pub mod constants;
mod hypotheses;
mod members;

pub use hypotheses::check_hypothesis;
pub use members::{
    claimed_member, convolution_closure_check, verify_instance, ClaimedMember, MemberCertificate, Verification,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Complex, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `Φ(a;c;·) ∈ 𝒫ₑ`.
    ChP,
    /// `Λ(a;c;·) ∈ 𝒦ₑ`.
    ChK,
    /// `zΦ(a;c;·) ∈ 𝒮ₑ*`.
    ChS,
    /// `g_δ = Φ(1;1+δ;·)` in 𝒦ₑ.
    ChGdelta,
    /// `h_δ = zΦ(1;1+δ;·)` in 𝒮ₑ*.
    ChHdelta,
    /// `h_{μ,ν} ∈ 𝒦ₑ`.
    LomK,
    /// Alexander transform of `h_{μ,ν}` in 𝒦ₑ, `h_{μ,ν}` in 𝒮ₑ*.
    LomAlex,
    /// `h_{μ,ν}(z)/z ∈ 𝒫ₑ`.
    LomP,
    /// `u_ν ∈ 𝒫ₑ`.
    StrP,
    /// `(2κ/cz)(1 − 2zu′ − u) ∈ 𝒫ₑ`.
    StrPRec,
    /// `χ_ν = 6κ(1 − u_ν)/c ∈ 𝒦ₑ`.
    StrK,
    /// Normalized Struve `𝓗_ν` version of `StrK`.
    StrH,
    /// Normalized modified Struve `𝓛_ν` version of `StrK`.
    StrL,
    /// `χ_ν ∗ f ∈ 𝒦ₑ` for convex `f`.
    StrConv,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::ChP,
        TheoremId::ChK,
        TheoremId::ChS,
        TheoremId::ChGdelta,
        TheoremId::ChHdelta,
        TheoremId::LomK,
        TheoremId::LomAlex,
        TheoremId::LomP,
        TheoremId::StrP,
        TheoremId::StrPRec,
        TheoremId::StrK,
        TheoremId::StrH,
        TheoremId::StrL,
        TheoremId::StrConv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ChP => "CH_P",
            TheoremId::ChK => "CH_K",
            TheoremId::ChS => "CH_S",
            TheoremId::ChGdelta => "CH_GDELTA",
            TheoremId::ChHdelta => "CH_HDELTA",
            TheoremId::LomK => "LOM_K",
            TheoremId::LomAlex => "LOM_ALEX",
            TheoremId::LomP => "LOM_P",
            TheoremId::StrP => "STR_P",
            TheoremId::StrPRec => "STR_P_REC",
            TheoremId::StrK => "STR_K",
            TheoremId::StrH => "STR_H",
            TheoremId::StrL => "STR_L",
            TheoremId::StrConv => "STR_CONV",
        }
    }

    /// Case-insensitive; `-` and `_` are interchangeable.
    pub fn parse(s: &str) -> Option<Self> {
        let norm: String = s.chars().map(|ch| if ch == '-' { '_' } else { ch.to_ascii_uppercase() }).collect();
        Self::ALL.iter().copied().find(|id| id.as_str() == norm)
    }
}

impl core::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters of a result. Which fields are required depends on the result;
/// the Struve parameter `c` shares the field with the Kummer `c`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Params {
    pub a: Option<Complex>,
    pub c: Option<Complex>,
    pub mu: Option<Complex>,
    pub nu: Option<Complex>,
    pub kappa: Option<Complex>,
    pub delta: Option<f64>,
}

impl Params {
    pub fn kummer(a: f64, c: f64) -> Self {
        Self { a: Some(Complex::new(a, 0.0)), c: Some(Complex::new(c, 0.0)), ..Self::default() }
    }

    pub fn kummer_complex(a: Complex, c: Complex) -> Self {
        Self { a: Some(a), c: Some(c), ..Self::default() }
    }

    pub fn lommel(mu: f64, nu: f64) -> Self {
        Self { mu: Some(Complex::new(mu, 0.0)), nu: Some(Complex::new(nu, 0.0)), ..Self::default() }
    }

    pub fn lommel_complex(mu: Complex, nu: Complex) -> Self {
        Self { mu: Some(mu), nu: Some(nu), ..Self::default() }
    }

    pub fn struve(kappa: Complex, c: Complex) -> Self {
        Self { kappa: Some(kappa), c: Some(c), ..Self::default() }
    }

    /// Order `ν` of the classical (modified) Struve function.
    pub fn order(nu: f64) -> Self {
        Self { nu: Some(Complex::new(nu, 0.0)), ..Self::default() }
    }

    pub fn delta(delta: f64) -> Self {
        Self { delta: Some(delta), ..Self::default() }
    }

    fn get(field: Option<Complex>, name: &str) -> Result<Complex> {
        let v = field.ok_or_else(|| Error::Parameter(alloc::format!("missing parameter {name}")))?;
        crate::numerics::ensure_finite(v, "theorem parameter")
    }

    pub(crate) fn complex(&self, name: &str) -> Result<Complex> {
        let field = match name {
            "a" => self.a,
            "c" => self.c,
            "mu" => self.mu,
            "nu" => self.nu,
            "kappa" => self.kappa,
            _ => None,
        };
        Self::get(field, name)
    }

    pub(crate) fn real(&self, name: &str) -> Result<f64> {
        if name == "delta" {
            let d = self.delta.ok_or_else(|| Error::Parameter("missing parameter delta".into()))?;
            if !d.is_finite() {
                return Err(Error::NonFinite("parameter delta"));
            }
            return Ok(d);
        }
        let v = self.complex(name)?;
        if v.im != 0.0 {
            return Err(Error::Parameter(alloc::format!("parameter {name} must be real, got {v}")));
        }
        Ok(v.re)
    }
}

/// One inequality of a hypothesis. `slack` is (satisfied side) − (threshold
/// side), so a satisfied strict condition has positive slack and a satisfied
/// non-strict one nonnegative slack.
#[derive(Debug, Clone, PartialEq)]
pub struct Condition {
    pub label: String,
    pub satisfied: bool,
    pub slack: f64,
    pub strict: bool,
}

impl Condition {
    pub(crate) fn at_least(label: &str, slack: f64) -> Self {
        Self { label: label.into(), satisfied: slack >= 0.0, slack, strict: false }
    }

    pub(crate) fn greater(label: &str, slack: f64) -> Self {
        Self { label: label.into(), satisfied: slack > 0.0, slack, strict: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub conditions: Vec<Condition>,
    pub all_satisfied: bool,
    /// Remarks on inputs where the hypothesis admits two readings.
    pub notes: Vec<String>,
}

impl HypothesisReport {
    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_roundtrip() {
        for id in TheoremId::ALL {
            assert_eq!(TheoremId::parse(id.as_str()), Some(id));
        }
        assert_eq!(TheoremId::parse("str-p-rec"), Some(TheoremId::StrPRec));
        assert_eq!(TheoremId::parse("XYZ"), None);
    }

    #[test]
    fn real_parameters_reject_imaginary_parts() {
        let p = Params::kummer_complex(Complex::new(1.0, 0.5), Complex::new(2.0, 0.0));
        assert!(p.real("a").is_err());
        assert_eq!(p.real("c").unwrap(), 2.0);
        assert!(p.real("mu").is_err());
    }
}
