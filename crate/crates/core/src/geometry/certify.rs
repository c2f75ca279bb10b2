use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{convex_quantity, starlike_quantity, AnalyticMap};
use crate::numerics::principal_log;
use crate::{Complex, Error, Result};

/// Samples with `|Log p| > 1 + REFUTE_EXCESS` refute subordination.
pub const REFUTE_EXCESS: f64 = 1e-12;
/// Maxima within this distance below 1 are reported as inconclusive.
pub const INCONCLUSIVE_BAND: f64 = 1e-9;
/// Number of zoom levels in the local refinement around an argmax.
const REFINE_LEVELS: usize = 4;
const MIN_ANGLES: usize = 256;
const ORIGIN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SamplingPlan {
    radii: Vec<f64>,
    angles: usize,
    refine_factor: usize,
}

impl SamplingPlan {
    pub const DEFAULT_RADII: [f64; 3] = [0.9, 0.99, 0.999];
    pub const DEFAULT_ANGLES: usize = 4096;
    pub const DEFAULT_REFINE: usize = 8;

    pub fn new(radii: Vec<f64>, angles: usize, refine_factor: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::Parameter("sampling plan needs at least one radius".into()));
        }
        if radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::Parameter("sampling radii must lie in (0, 1)".into()));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter("sampling radii must be strictly ascending".into()));
        }
        if angles < MIN_ANGLES {
            return Err(Error::Parameter(alloc::format!(
                "at least {MIN_ANGLES} angles per circle are required, got {angles}"
            )));
        }
        if refine_factor == 0 {
            return Err(Error::Parameter("refine factor must be positive".into()));
        }
        Ok(Self { radii, angles, refine_factor })
    }

    pub fn with_angles(&self, angles: usize) -> Result<Self> {
        Self::new(self.radii.clone(), angles, self.refine_factor)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> usize {
        self.angles
    }

    pub fn refine_factor(&self) -> usize {
        self.refine_factor
    }

    pub fn max_radius(&self) -> f64 {
        *self.radii.last().expect("nonempty radii")
    }
}

impl Default for SamplingPlan {
    fn default() -> Self {
        Self { radii: Self::DEFAULT_RADII.to_vec(), angles: Self::DEFAULT_ANGLES, refine_factor: Self::DEFAULT_REFINE }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateStatus {
    VerifiedOnGrid,
    Refuted,
    Inconclusive,
}

impl CertificateStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::VerifiedOnGrid => "verified_on_grid",
            Self::Refuted => "refuted",
            Self::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubordinationCertificate {
    pub status: CertificateStatus,
    pub max_log_mod: f64,
    pub witness: Complex,
    pub margin: f64,
    pub plan_used: SamplingPlan,
    pub zero_encountered: bool,
    /// Maximum of `|Log p|` on each circle of the plan, in plan order.
    pub circle_max: Vec<f64>,
    /// Bound on the evaluation error of `|Log p|` implied by the series
    /// truncation: `tail_bound / min |p|` over the samples.
    pub eval_uncertainty: f64,
}

impl SubordinationCertificate {
    pub fn is_verified(&self) -> bool {
        self.status == CertificateStatus::VerifiedOnGrid
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpClass {
    /// `p(0) = 1` and `p ≺ e^z`.
    Pe,
    /// Normalized `f` with `z f'/f ∈ 𝒫ₑ`.
    SeStar,
    /// Normalized `f` with `1 + z f''/f' ∈ 𝒫ₑ`.
    Ke,
}

impl ExpClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pe => "Pe",
            Self::SeStar => "Se_star",
            Self::Ke => "Ke",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Pe" | "pe" | "P" => Some(Self::Pe),
            "Se_star" | "Se" | "se_star" | "S" => Some(Self::SeStar),
            "Ke" | "ke" | "K" => Some(Self::Ke),
            _ => None,
        }
    }
}

/// Running state of the scan: the largest `|Log p|` seen and where, the
/// smallest `|p|`, and whether `p` vanished.
struct Scan<'a> {
    p: &'a AnalyticMap,
    min_abs: f64,
    zero: Option<Complex>,
}

impl Scan<'_> {
    fn sample(&mut self, z: Complex) -> f64 {
        let w = self.p.series().horner(z);
        let abs = w.norm();
        self.min_abs = self.min_abs.min(abs);
        match principal_log(w) {
            Ok(l) if l.re.is_finite() && l.im.is_finite() => l.norm(),
            _ => {
                if self.zero.is_none() {
                    self.zero = Some(z);
                }
                f64::INFINITY
            }
        }
    }
}

/// Scans `|Log p|` over the plan's circles and classifies the result.
pub fn certify_subordination_to_exp(p: &AnalyticMap, plan: &SamplingPlan) -> Result<SubordinationCertificate> {
    let series = p.series();
    let p0 = series.coeff(0);
    if (p0 - Complex::new(1.0, 0.0)).norm() > ORIGIN_TOLERANCE {
        return Err(Error::Precondition(alloc::format!("p(0) must be 1, got {p0}")));
    }
    let outer = plan.max_radius();
    if outer > series.r_ref() {
        return Err(Error::OutOfDomain { radius: outer, r_ref: series.r_ref() });
    }

    let mut scan = Scan { p, min_abs: f64::INFINITY, zero: None };
    let mut best = (0.0f64, Complex::new(0.0, 0.0));
    let mut circle_max = Vec::with_capacity(plan.radii.len());
    let step = 2.0 * PI / plan.angles as f64;

    for &r in &plan.radii {
        let mut local = (f64::NEG_INFINITY, 0.0f64);
        for j in 0..plan.angles {
            let theta = step * j as f64;
            let v = scan.sample(Complex::from_polar(r, theta));
            if v > local.0 {
                local = (v, theta);
            }
        }
        // Zoom in on the argmax: each level samples the bracket around the
        // current best angle refine_factor times more finely.
        let mut h = step;
        let k = plan.refine_factor as i64;
        if local.0.is_finite() {
            for _ in 0..REFINE_LEVELS {
                let center = local.1;
                for i in -k..=k {
                    if i == 0 {
                        continue;
                    }
                    let theta = center + h * i as f64 / k as f64;
                    let v = scan.sample(Complex::from_polar(r, theta));
                    if v > local.0 {
                        local = (v, theta);
                    }
                }
                h /= k as f64;
            }
        }
        circle_max.push(local.0);
        if local.0 > best.0 {
            best = (local.0, Complex::from_polar(r, local.1));
        }
    }

    let eval_uncertainty = if series.tail_bound() == 0.0 {
        0.0
    } else if scan.min_abs > 0.0 {
        series.tail_bound() / scan.min_abs
    } else {
        f64::INFINITY
    };

    let zero_encountered = scan.zero.is_some();
    let (max_log_mod, witness) = match scan.zero {
        Some(z) => (f64::INFINITY, z),
        None => best,
    };
    let status = if zero_encountered || max_log_mod - eval_uncertainty > 1.0 + REFUTE_EXCESS {
        CertificateStatus::Refuted
    } else if max_log_mod + eval_uncertainty < 1.0 - INCONCLUSIVE_BAND {
        CertificateStatus::VerifiedOnGrid
    } else {
        CertificateStatus::Inconclusive
    };

    Ok(SubordinationCertificate {
        status,
        max_log_mod,
        witness,
        margin: 1.0 - max_log_mod,
        plan_used: plan.clone(),
        zero_encountered,
        circle_max,
        eval_uncertainty,
    })
}

/// Certifies `f` itself (𝒫ₑ), its starlike quantity (𝒮ₑ*) or its convex
/// quantity (𝒦ₑ).
pub fn class_membership(f: &AnalyticMap, cls: ExpClass, plan: &SamplingPlan) -> Result<SubordinationCertificate> {
    match cls {
        ExpClass::Pe => certify_subordination_to_exp(f, plan),
        ExpClass::SeStar | ExpClass::Ke => {
            if !f.is_normalized() {
                return Err(Error::Precondition(alloc::format!("class {} requires a normalized map", cls.as_str())));
            }
            let q = if cls == ExpClass::SeStar { starlike_quantity(f)? } else { convex_quantity(f)? };
            certify_subordination_to_exp(&q, plan)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PowerSeries;
    use crate::specfun::{kummer_lambda_series, kummer_series, kummer_upsilon_series};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn raw(coeffs: &[f64]) -> AnalyticMap {
        AnalyticMap::raw(PowerSeries::from_real(coeffs).unwrap())
    }

    #[test]
    fn plan_validation() {
        assert!(SamplingPlan::new(alloc::vec![0.5, 0.4], 512, 2).is_err());
        assert!(SamplingPlan::new(alloc::vec![0.5, 1.0], 512, 2).is_err());
        assert!(SamplingPlan::new(alloc::vec![0.5], 100, 2).is_err());
        assert!(SamplingPlan::new(alloc::vec![0.5], 512, 0).is_err());
        assert!(SamplingPlan::new(alloc::vec![], 512, 1).is_err());
        assert!(SamplingPlan::new(alloc::vec![0.5, 0.9], 256, 1).is_ok());
    }

    #[test]
    fn constant_one_is_verified_with_zero_max() {
        let cert = certify_subordination_to_exp(&raw(&[1.0]), &SamplingPlan::default()).unwrap();
        assert_eq!(cert.status, CertificateStatus::VerifiedOnGrid);
        assert_eq!(cert.max_log_mod, 0.0);
        assert_eq!(cert.margin, 1.0);
    }

    #[test]
    fn exponential_reaches_outer_radius() {
        let exp = AnalyticMap::raw(kummer_series(c(1.0, 0.0), c(1.0, 0.0), 1.0).unwrap());
        let cert = certify_subordination_to_exp(&exp, &SamplingPlan::default()).unwrap();
        assert!(cert.is_verified());
        assert!((cert.max_log_mod - 0.999).abs() < 1e-12, "{}", cert.max_log_mod);
    }

    #[test]
    fn one_minus_z_over_three() {
        let cert = certify_subordination_to_exp(&raw(&[1.0, -1.0 / 3.0]), &SamplingPlan::default()).unwrap();
        assert!(cert.is_verified());
        let expected = libm::log(1.0 + 0.999 / 3.0).max(-libm::log(1.0 - 0.999 / 3.0));
        assert!((cert.max_log_mod - expected).abs() < 1e-9);
        assert!((cert.witness - c(0.999, 0.0)).norm() < 1e-6);
        assert_eq!(cert.circle_max.len(), 3);
        assert!(cert.circle_max.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn one_plus_two_z_is_refuted() {
        let cert = certify_subordination_to_exp(&raw(&[1.0, 2.0]), &SamplingPlan::default()).unwrap();
        assert_eq!(cert.status, CertificateStatus::Refuted);
        assert!(cert.max_log_mod > 1.09);
        assert!(cert.witness.norm() < 1.0);
        // 1 + 2z crosses the negative axis near z = -1, where |Log| ≈ π.
        assert!(cert.max_log_mod > 3.0);
        let w = 1.0 + 2.0 * cert.witness;
        assert!((principal_log(w).unwrap().norm() - cert.max_log_mod).abs() < 1e-12);
    }

    #[test]
    fn zero_on_grid_refutes() {
        // 1 - z/0.9 vanishes at z = 0.9, which is a grid point.
        let cert = certify_subordination_to_exp(&raw(&[1.0, -1.0 / 0.9]), &SamplingPlan::default()).unwrap();
        assert_eq!(cert.status, CertificateStatus::Refuted);
        assert!(cert.max_log_mod > 1.0);
    }

    #[test]
    fn precondition_on_constant_term() {
        assert!(matches!(
            certify_subordination_to_exp(&raw(&[2.0, 1.0]), &SamplingPlan::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn class_dispatch() {
        let plan = SamplingPlan::default();
        let id = AnalyticMap::identity();
        for cls in [ExpClass::SeStar, ExpClass::Ke] {
            let cert = class_membership(&id, cls, &plan).unwrap();
            assert!(cert.is_verified());
            assert_eq!(cert.max_log_mod, 0.0);
        }
        let ups = AnalyticMap::normalized(kummer_upsilon_series(c(2.0, 0.0), c(3.0, 0.0), 1.0).unwrap()).unwrap();
        assert!(class_membership(&ups, ExpClass::SeStar, &plan).unwrap().is_verified());
        let lam = AnalyticMap::normalized(kummer_lambda_series(c(1.0, 0.0), c(2.0, 0.0), 1.0).unwrap()).unwrap();
        assert!(class_membership(&lam, ExpClass::Ke, &plan).unwrap().is_verified());
        assert!(class_membership(&raw(&[0.0, 1.0]), ExpClass::Ke, &plan).is_err());
    }

    #[test]
    fn doubling_angles_is_stable() {
        let plan = SamplingPlan::default();
        let doubled = plan.with_angles(2 * plan.angles()).unwrap();
        for (a, cc) in [(-1.0, 3.0), (-3.0, 5.0), (-25.0, 27.0)] {
            let p = AnalyticMap::raw(kummer_series(c(a, 0.0), c(cc, 0.0), 1.0).unwrap());
            let m1 = certify_subordination_to_exp(&p, &plan).unwrap().max_log_mod;
            let m2 = certify_subordination_to_exp(&p, &doubled).unwrap().max_log_mod;
            assert!((m1 - m2).abs() < 1e-6, "({a}, {cc}): {m1} vs {m2}");
        }
    }

    #[test]
    fn class_names_roundtrip() {
        for cls in [ExpClass::Pe, ExpClass::SeStar, ExpClass::Ke] {
            assert_eq!(ExpClass::parse(cls.as_str()), Some(cls));
        }
        assert_eq!(ExpClass::parse("nope"), None);
    }
}
