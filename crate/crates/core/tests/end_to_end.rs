use expdisk_core::geometry::{certify_subordination_to_exp, AnalyticMap, CertificateStatus, SamplingPlan};
use expdisk_core::numerics::PowerSeries;
use expdisk_core::specfun::{kummer_eval, kummer_quadrature_oracle};
use expdisk_core::theorems::{check_hypothesis, verify_instance, Params, TheoremId};
use expdisk_core::{Complex, Error};

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn feasible(id: TheoremId) -> Params {
    use TheoremId::*;
    match id {
        ChP => Params::kummer(-1.0, 3.0),
        ChK => Params::kummer(1.0, 2.0),
        ChS => Params::kummer(2.0, 3.0),
        ChGdelta => Params::delta(1.0),
        ChHdelta => Params::delta(2.0),
        LomK => Params::lommel(7.0, 0.0),
        LomAlex => Params::lommel(5.0, 4.0),
        LomP => Params::lommel(1.0, 0.0),
        StrP | StrPRec => Params::struve(c(2.0, 0.0), c(1.0, 0.0)),
        StrK | StrConv => Params::struve(c(16.0, 0.0), c(1.0, 0.0)),
        StrH | StrL => Params::order(14.5),
    }
}

#[test]
fn every_result_verifies_at_a_feasible_point() {
    let plan = SamplingPlan::default();
    for id in TheoremId::ALL {
        let v = verify_instance(id, &feasible(id), &plan).unwrap_or_else(|e| panic!("{id}: {e}"));
        assert!(v.report.all_satisfied, "{id}: {:?}", v.report.conditions);
        assert!(!v.certificates.is_empty(), "{id}");
        for m in &v.certificates {
            assert_eq!(m.certificate.status, CertificateStatus::VerifiedOnGrid, "{id} {}", m.label);
        }
        assert!(v.all_verified());
    }
}

#[test]
fn theorem_names_round_trip() {
    for id in TheoremId::ALL {
        assert_eq!(TheoremId::parse(id.as_str()), Some(id));
        assert_eq!(TheoremId::parse(&id.as_str().to_lowercase().replace('_', "-")), Some(id));
    }
    assert_eq!(TheoremId::parse("CH_Q"), None);
}

#[test]
fn missing_parameters_are_reported() {
    assert!(matches!(check_hypothesis(TheoremId::ChP, &Params::lommel(1.0, 0.0)), Err(Error::Parameter(_))));
    assert!(check_hypothesis(TheoremId::StrH, &Params::kummer(1.0, 2.0)).is_err());
}

#[test]
fn kummer_series_agrees_with_integral_representation() {
    // Re c > Re a > 0 is where the Euler integral converges.
    for (a, cc) in [(c(1.0, 0.0), c(2.0, 0.0)), (c(0.7, 0.3), c(3.2, -0.4)), (c(2.5, 0.0), c(4.0, 1.0))] {
        for z in [c(0.3, 0.0), c(-0.8, 0.2), c(0.0, 0.99), c(0.6, -0.7)] {
            let series = kummer_eval(a, cc, z).unwrap();
            let oracle = kummer_quadrature_oracle(a, cc, z).unwrap();
            assert!((series - oracle).norm() <= 1e-10 * oracle.norm().max(1.0), "a={a} c={cc} z={z}");
        }
    }
}

#[test]
fn certifier_brackets_known_maxima() {
    // |log(1 + z/2)| on |z| = 0.999 peaks on the negative axis
    let p = AnalyticMap::raw(PowerSeries::from_real(&[1.0, 0.5]).unwrap());
    let cert = certify_subordination_to_exp(&p, &SamplingPlan::default()).unwrap();
    let expected = -(1.0f64 - 0.4995).ln();
    assert!((cert.max_log_mod - expected).abs() < 1e-9);
    assert_eq!(cert.status, CertificateStatus::VerifiedOnGrid);
}
