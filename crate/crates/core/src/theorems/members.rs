use alloc::string::String;
use alloc::vec::Vec;

use super::{check_hypothesis, HypothesisReport, Params, TheoremId};
use crate::geometry::{
    alexander_kernel, class_membership, geometric_kernel, hadamard, libera_kernel, AnalyticMap, ExpClass, SamplingPlan,
    SubordinationCertificate,
};
use crate::specfun::{
    kummer_lambda_series, kummer_series, kummer_upsilon_series, lommel_alexander_series, lommel_series,
    struve_chi_series, struve_u_series,
};
use crate::{Complex, Error, Result};

/// Series are built on the closed unit disk.
const R_REF: f64 = 1.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimedMember {
    pub label: String,
    pub map: AnalyticMap,
    pub class: ExpClass,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MemberCertificate {
    pub label: String,
    pub class: ExpClass,
    pub certificate: SubordinationCertificate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub report: HypothesisReport,
    pub certificates: Vec<MemberCertificate>,
}

impl Verification {
    /// Hypothesis satisfied and every certificate verified.
    pub fn all_verified(&self) -> bool {
        self.report.all_satisfied && self.certificates.iter().all(|m| m.certificate.is_verified())
    }
}

fn member(label: &str, map: AnalyticMap, class: ExpClass) -> ClaimedMember {
    ClaimedMember { label: label.into(), map, class }
}

fn real(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

fn chi(kappa: f64, c: Complex) -> Result<AnalyticMap> {
    AnalyticMap::normalized(struve_chi_series(real(kappa), c, R_REF)?)
}

/// `z χ′(z)`; its starlike quantity is the convex quantity of `χ`.
fn z_derivative(f: &AnalyticMap) -> Result<AnalyticMap> {
    AnalyticMap::normalized(f.series().derivative().shift_up(1))
}

/// `(2κ/cz)(1 − 2zu′ − u)`, assembled from the series of `u_ν` itself.
fn recursion_member(kappa: Complex, c: Complex) -> Result<AnalyticMap> {
    let u = struve_u_series(kappa, c, R_REF)?;
    let one = real(1.0);
    // 1 − u − 2zu′ has coefficients −(2k+1)u_k for k ≥ 1 and 1 − u_0 = 0.
    let combo = u.map_coeffs(1.0, |k, uk| if k == 0 { one - uk } else { -uk * (2 * k + 1) as f64 });
    let tail = u.tail_bound() * 2.0 * (u.len() as f64 + 1.0);
    let shifted = combo.with_tail_bound(tail).shift_down(1)?;
    Ok(AnalyticMap::raw(shifted.scale(2.0 * kappa / c)))
}

/// The function(s) the result places in a class, with the class.
pub fn claimed_member(id: TheoremId, params: &Params) -> Result<Vec<ClaimedMember>> {
    let members = match id {
        TheoremId::ChP => {
            let (a, c) = (params.complex("a")?, params.complex("c")?);
            alloc::vec![member("Phi(a;c;z)", AnalyticMap::raw(kummer_series(a, c, R_REF)?), ExpClass::Pe)]
        }
        TheoremId::ChK => {
            let (a, c) = (params.real("a")?, params.real("c")?);
            let lam = AnalyticMap::normalized(kummer_lambda_series(real(a), real(c), R_REF)?)?;
            alloc::vec![member("(Phi(a;c;z)-1)c/a", lam, ExpClass::Ke)]
        }
        TheoremId::ChS => {
            let (a, c) = (params.real("a")?, params.real("c")?);
            let ups = AnalyticMap::normalized(kummer_upsilon_series(real(a), real(c), R_REF)?)?;
            alloc::vec![member("z Phi(a;c;z)", ups, ExpClass::SeStar)]
        }
        TheoremId::ChGdelta => {
            // g_δ(0) = 1, so it is carried as (g_δ − 1)(1+δ), which has the
            // same 1 + zg″/g′.
            let delta = params.real("delta")?;
            let g = AnalyticMap::normalized(kummer_lambda_series(real(1.0), real(1.0 + delta), R_REF)?)?;
            alloc::vec![member("g_delta = Phi(1;1+delta;z)", g, ExpClass::Ke)]
        }
        TheoremId::ChHdelta => {
            let delta = params.real("delta")?;
            let h = AnalyticMap::normalized(kummer_upsilon_series(real(1.0), real(1.0 + delta), R_REF)?)?;
            alloc::vec![member("h_delta = z Phi(1;1+delta;z)", h, ExpClass::SeStar)]
        }
        TheoremId::LomK => {
            let (mu, nu) = (params.real("mu")?, params.real("nu")?);
            let h = AnalyticMap::normalized(lommel_series(real(mu), real(nu), R_REF)?)?;
            alloc::vec![member("h_{mu,nu}", h, ExpClass::Ke)]
        }
        TheoremId::LomAlex => {
            let (mu, nu) = (params.real("mu")?, params.real("nu")?);
            let f = AnalyticMap::normalized(lommel_alexander_series(real(mu), real(nu), R_REF)?)?;
            let h = AnalyticMap::normalized(lommel_series(real(mu), real(nu), R_REF)?)?;
            alloc::vec![member("f_{mu,nu}", f, ExpClass::Ke), member("h_{mu,nu}", h, ExpClass::SeStar)]
        }
        TheoremId::LomP => {
            let (mu, nu) = (params.complex("mu")?, params.complex("nu")?);
            let h = lommel_series(mu, nu, R_REF)?;
            alloc::vec![member("h_{mu,nu}(z)/z", AnalyticMap::raw(h.shift_down(1)?), ExpClass::Pe)]
        }
        TheoremId::StrP => {
            let (kappa, c) = (params.complex("kappa")?, params.complex("c")?);
            alloc::vec![member("u_nu", AnalyticMap::raw(struve_u_series(kappa, c, R_REF)?), ExpClass::Pe)]
        }
        TheoremId::StrPRec => {
            let (kappa, c) = (params.complex("kappa")?, params.complex("c")?);
            if c == real(0.0) {
                return Err(Error::Parameter("c must be nonzero".into()));
            }
            alloc::vec![member("(2k/cz)(1 - 2zu' - u)", recursion_member(kappa, c)?, ExpClass::Pe)]
        }
        TheoremId::StrK => {
            let (kappa, c) = (params.real("kappa")?, params.complex("c")?);
            alloc::vec![member("6k(1-u_nu)/c", chi(kappa, c)?, ExpClass::Ke)]
        }
        TheoremId::StrH | TheoremId::StrL => {
            // As a function of z the normalized Struve member is χ with
            // κ = ν + 3/2 and c = ±1, composed with z²; the class statement
            // is about the normalized map in the series variable, i.e. χ.
            let nu = params.real("nu")?;
            let c = if id == TheoremId::StrH { 1.0 } else { -1.0 };
            let f = chi(nu + 1.5, real(c))?;
            let zf = z_derivative(&f)?;
            let (lf, lz) = if id == TheoremId::StrH {
                ("-3(2nu+3)(H_nu - 1)", "-3(2nu+3) z H_nu'")
            } else {
                ("3(2nu+3)(L_nu - 1)", "3(2nu+3) z L_nu'")
            };
            alloc::vec![member(lf, f, ExpClass::Ke), member(lz, zf, ExpClass::SeStar)]
        }
        TheoremId::StrConv => {
            let (kappa, c) = (params.real("kappa")?, params.complex("c")?);
            let f = chi(kappa, c)?;
            let n = f.series().len();
            alloc::vec![
                member("chi * z/(1-z)", hadamard(&f, &geometric_kernel(n))?, ExpClass::Ke),
                member("A[chi] = chi * -log(1-z)", hadamard(&f, &alexander_kernel(n))?, ExpClass::Ke),
                member("L[chi] = chi * -2(z+log(1-z))/z", hadamard(&f, &libera_kernel(n))?, ExpClass::Ke),
            ]
        }
    };
    Ok(members)
}

/// Hypothesis report plus a certificate for every claimed membership. The
/// certificates are computed whether or not the hypothesis holds.
pub fn verify_instance(id: TheoremId, params: &Params, plan: &SamplingPlan) -> Result<Verification> {
    let report = check_hypothesis(id, params)?;
    let certificates = claimed_member(id, params)?
        .into_iter()
        .map(|m| {
            class_membership(&m.map, m.class, plan).map(|certificate| MemberCertificate {
                label: m.label,
                class: m.class,
                certificate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Verification { report, certificates })
}

/// 𝒦ₑ certificate for `χ_ν ∗ f`; the caller vouches that `f` is convex.
pub fn convolution_closure_check(
    kappa: f64,
    c: Complex,
    f_convex: &AnalyticMap,
    plan: &SamplingPlan,
) -> Result<SubordinationCertificate> {
    let report = check_hypothesis(TheoremId::StrConv, &Params::struve(real(kappa), c))?;
    if !report.all_satisfied {
        return Err(Error::Precondition(alloc::format!(
            "convexity condition on (kappa, c) fails with slack {}",
            report.conditions[0].slack
        )));
    }
    let f = hadamard(&chi(kappa, c)?, f_convex)?;
    class_membership(&f, ExpClass::Ke, plan)
}
