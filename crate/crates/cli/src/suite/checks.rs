use std::f64::consts::{E, FRAC_PI_2, PI, TAU};
use std::time::Duration;

use expdisk_core::geometry::{
    alexander, alexander_kernel, certify_subordination_to_exp, class_membership, convex_quantity, geometric_kernel,
    hadamard, libera_kernel, starlike_quantity, AnalyticMap, CertificateStatus, ExpClass, SamplingPlan,
};
use expdisk_core::numerics::{principal_log, PowerSeries};
use expdisk_core::specfun::{
    bessel_j_eval, kummer_contiguous_check, kummer_eval, kummer_lambda_series, kummer_ode_residual, kummer_residual,
    kummer_series, kummer_upsilon_series, lommel_residual, lommel_series, mod_struve_l_eval, struve_h_eval,
    struve_u_residual, struve_u_series,
};
use expdisk_core::theorems::constants::{g_delta_radius, h_delta_radius};
use expdisk_core::theorems::{
    check_hypothesis, claimed_member, convolution_closure_check, verify_instance, Params, TheoremId, Verification,
};
use expdisk_core::Complex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{CheckDef, CriterionDef, Probe};

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub static CRITERIA: [CriterionDef; 10] = [
    CriterionDef {
        number: 1,
        title: "Kummer identities",
        runtime_limit: secs(5),
        checks: &[
            CheckDef { name: "kummer-exp-identity", tags: &["kummer"], run: kummer_exp_identity },
            CheckDef { name: "kummer-contiguous", tags: &["kummer"], run: kummer_contiguous },
        ],
    },
    CriterionDef {
        number: 2,
        title: "ODE residuals at r = 0.99",
        runtime_limit: secs(30),
        checks: &[
            CheckDef { name: "ode-kummer", tags: &["kummer", "ode"], run: ode_kummer },
            CheckDef { name: "ode-lommel", tags: &["lommel", "ode"], run: ode_lommel },
            CheckDef { name: "ode-struve", tags: &["struve", "ode"], run: ode_struve },
        ],
    },
    CriterionDef {
        number: 3,
        title: "closed-form anchors",
        runtime_limit: secs(10),
        checks: &[
            CheckDef { name: "lommel-bessel-anchor", tags: &["lommel", "anchor"], run: lommel_bessel_anchor },
            CheckDef { name: "struve-cosine-anchor", tags: &["struve", "anchor"], run: struve_cosine_anchor },
            CheckDef { name: "struve-h-l-relation", tags: &["struve", "anchor"], run: struve_h_l_relation },
        ],
    },
    CriterionDef {
        number: 4,
        title: "Kummer members of P_e",
        runtime_limit: secs(20),
        checks: &[
            CheckDef { name: "ch-p-a-1-c3", tags: &["kummer", "certify"], run: |r, p| kummer_pe(r, p, -1.0, 3.0) },
            CheckDef { name: "ch-p-a-2-c4", tags: &["kummer", "certify"], run: |r, p| kummer_pe(r, p, -2.0, 4.0) },
            CheckDef { name: "ch-p-a-3-c5", tags: &["kummer", "certify"], run: |r, p| kummer_pe(r, p, -3.0, 5.0) },
            CheckDef { name: "ch-p-a-25-c27", tags: &["kummer", "certify"], run: |r, p| kummer_pe(r, p, -25.0, 27.0) },
            CheckDef {
                name: "ch-p-a-100-c102",
                tags: &["kummer", "certify"],
                run: |r, p| kummer_pe(r, p, -100.0, 102.0),
            },
        ],
    },
    CriterionDef {
        number: 5,
        title: "Lambda(1;2) in K_e and z Phi(2;3) in S_e*",
        runtime_limit: secs(10),
        checks: &[
            CheckDef { name: "lambda-1-2-convex", tags: &["kummer", "certify"], run: lambda_convex },
            CheckDef { name: "upsilon-2-3-starlike", tags: &["kummer", "certify"], run: upsilon_starlike },
            CheckDef { name: "quantities-match-q", tags: &["kummer"], run: quantities_match_q },
        ],
    },
    CriterionDef {
        number: 6,
        title: "Lommel h_{1,0}(z)/z in P_e",
        runtime_limit: secs(5),
        checks: &[CheckDef { name: "lom-p-1-0", tags: &["lommel", "certify"], run: lommel_pe }],
    },
    CriterionDef {
        number: 7,
        title: "generalized Struve members",
        runtime_limit: secs(20),
        checks: &[
            CheckDef { name: "str-p-2-1", tags: &["struve", "certify"], run: struve_pe },
            CheckDef { name: "str-k-16-1", tags: &["struve", "certify"], run: struve_ke },
            CheckDef { name: "str-p-rec-shift", tags: &["struve"], run: struve_recursion_member },
        ],
    },
    CriterionDef {
        number: 8,
        title: "delta family at the extreme admissible delta",
        runtime_limit: secs(10),
        checks: &[
            CheckDef { name: "delta-thresholds", tags: &["kummer", "delta"], run: delta_thresholds },
            CheckDef {
                name: "g-delta-lower",
                tags: &["kummer", "delta", "certify"],
                run: |r, p| delta_member(r, p, true, false),
            },
            CheckDef {
                name: "g-delta-upper",
                tags: &["kummer", "delta", "certify"],
                run: |r, p| delta_member(r, p, true, true),
            },
            CheckDef {
                name: "h-delta-lower",
                tags: &["kummer", "delta", "certify"],
                run: |r, p| delta_member(r, p, false, false),
            },
            CheckDef {
                name: "h-delta-upper",
                tags: &["kummer", "delta", "certify"],
                run: |r, p| delta_member(r, p, false, true),
            },
        ],
    },
    CriterionDef {
        number: 9,
        title: "operator laws",
        runtime_limit: secs(15),
        checks: &[
            CheckDef { name: "alexander-duality", tags: &["operators"], run: alexander_duality },
            CheckDef { name: "convolution-identity", tags: &["operators"], run: convolution_identity },
            CheckDef {
                name: "str-conv-alexander",
                tags: &["operators", "struve", "certify"],
                run: |r, p| struve_conv(r, p, false),
            },
            CheckDef {
                name: "str-conv-libera",
                tags: &["operators", "struve", "certify"],
                run: |r, p| struve_conv(r, p, true),
            },
        ],
    },
    CriterionDef {
        number: 10,
        title: "negative controls",
        runtime_limit: secs(5),
        checks: &[
            CheckDef { name: "refute-1-plus-2z", tags: &["controls", "certify"], run: refute_linear },
            CheckDef { name: "ch-p-failing-slack", tags: &["controls", "kummer"], run: failing_slack },
            CheckDef { name: "kummer-sign-mutation", tags: &["controls", "kummer"], run: kummer_mutation },
        ],
    },
];

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Uniform in the disk `|z| <= r`.
fn disk_point(rng: &mut ChaCha8Rng, r: f64) -> Complex {
    let radius = r * rng.gen::<f64>().sqrt();
    Complex::from_polar(radius, TAU * rng.gen::<f64>())
}

/// Uniform in the annulus `lo <= |z| <= hi`.
fn annulus_point(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex {
    let radius = (lo * lo + (hi * hi - lo * lo) * rng.gen::<f64>()).sqrt();
    Complex::from_polar(radius, TAU * rng.gen::<f64>())
}

fn box_point(rng: &mut ChaCha8Rng, re: (f64, f64), im: (f64, f64)) -> Complex {
    c(rng.gen_range(re.0..re.1), rng.gen_range(im.0..im.1))
}

fn record_certificate(probe: &mut Probe, prefix: &str, cert: &expdisk_core::geometry::SubordinationCertificate) {
    probe.record(format!("{prefix}max_log_mod"), cert.max_log_mod);
    probe.record(format!("{prefix}margin"), cert.margin);
    probe.require(
        cert.is_verified(),
        format!("{prefix}certificate {} (max |Log| {})", cert.status.as_str(), cert.max_log_mod),
    );
}

/// Hypothesis satisfied and every claimed membership verified on the
/// default plan.
fn require_verified(probe: &mut Probe, v: &Verification) {
    for cond in &v.report.conditions {
        probe.record(format!("slack[{}]", cond.label), cond.slack);
    }
    probe.require(v.report.all_satisfied, format!("{} hypothesis not satisfied", v.report.theorem));
    for m in &v.certificates {
        record_certificate(probe, &format!("{}:{}:", m.label, m.class.as_str()), &m.certificate);
    }
}

fn kummer_exp_identity(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for a in [c(1.0, 0.0), c(2.0, 0.0), c(3.5, 0.0), c(2.0, 1.0)] {
        for _ in 0..200 {
            let z = disk_point(rng, 0.999);
            if let Some(v) = probe.attempt("kummer_eval", kummer_eval(a, a, z)) {
                worst = worst.max((v - z.exp()).norm());
            }
        }
    }
    probe.record("max_abs_error", worst);
    probe.require(worst <= 1e-12, format!("|Phi(a;a;z) - e^z| = {worst:e} > 1e-12"));
}

fn kummer_contiguous(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let a = box_point(rng, (-5.0, 5.0), (-1.0, 1.0));
        let cc = box_point(rng, (0.5, 6.0), (-1.0, 1.0));
        let z = disk_point(rng, 0.999);
        if let Some(r) = probe.attempt("contiguous check", kummer_contiguous_check(a, cc, z)) {
            worst = worst.max(r);
        }
    }
    probe.record("max_residual", worst);
    probe.require(worst <= 1e-11, format!("contiguous residual {worst:e} > 1e-11"));
}

fn ode_kummer(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = box_point(rng, (-10.0, 10.0), (-2.0, 2.0));
        let cc = box_point(rng, (0.5, 10.0), (-2.0, 2.0));
        if let Some(r) = probe.attempt("kummer_residual", kummer_residual(a, cc, 0.99)) {
            worst = worst.max(r.max_abs_residual);
        }
    }
    probe.record("max_residual", worst);
    probe.require(worst <= 1e-9, format!("Kummer residual {worst:e} > 1e-9"));
}

fn ode_lommel(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let mu = c(rng.gen_range(0.0..10.0), 0.0);
        let nu = c(rng.gen_range(-2.0..2.0), 0.0);
        if let Some(r) = probe.attempt("lommel_residual", lommel_residual(mu, nu, 0.99)) {
            worst = worst.max(r.max_abs_residual);
        }
    }
    probe.record("max_residual", worst);
    probe.require(worst <= 1e-9, format!("Lommel residual {worst:e} > 1e-9"));
}

fn ode_struve(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let kappa = box_point(rng, (0.5, 20.0), (-2.0, 2.0));
        let cc = disk_point(rng, 4.0);
        if let Some(r) = probe.attempt("struve_u_residual", struve_u_residual(kappa, cc, 0.99)) {
            worst = worst.max(r.max_abs_residual);
        }
    }
    probe.record("max_residual", worst);
    probe.require(worst <= 1e-9, format!("Struve residual {worst:e} > 1e-9"));
}

fn lommel_bessel_anchor(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let Some(h) = probe.attempt("lommel_series", lommel_series(c(1.0, 0.0), c(0.0, 0.0), 1.0)) else { return };
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let z = disk_point(rng, 0.999);
        let (Some(v), Some(j0)) = (probe.attempt("eval", h.eval(z)), probe.attempt("J0", bessel_j_eval(0.0, z.sqrt())))
        else {
            return;
        };
        worst = worst.max((v - (4.0 - 4.0 * j0)).norm());
    }
    probe.record("max_abs_error", worst);
    probe.require(worst <= 1e-10, format!("|h_10 - (4 - 4 J0(sqrt z))| = {worst:e} > 1e-10"));
}

fn struve_cosine_anchor(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let Some(u) = probe.attempt("struve_u_series", struve_u_series(c(2.0, 0.0), c(1.0, 0.0), 1.0)) else { return };
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let z = disk_point(rng, 0.999);
        let Some(v) = probe.attempt("eval", u.eval(z)) else { return };
        worst = worst.max((v * z - (2.0 - 2.0 * z.sqrt().cos())).norm());
    }
    probe.record("max_abs_error", worst);
    probe.require(worst <= 1e-11, format!("|z u - (2 - 2 cos sqrt z)| = {worst:e} > 1e-11"));
}

/// `L_ν(z) = −i e^{−iνπ/2} H_ν(iz)` on principal branches, for
/// `−π < arg z ≤ π/2`.
fn struve_h_l_relation(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let i = c(0.0, 1.0);
    for nu in [0.5, 1.0, 2.0] {
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let r = rng.gen_range(0.05..2.0);
            let arg = rng.gen_range((-PI + 0.05)..(FRAC_PI_2 - 0.05));
            let z = Complex::from_polar(r, arg);
            let (Some(l), Some(h)) =
                (probe.attempt("L", mod_struve_l_eval(nu, z)), probe.attempt("H", struve_h_eval(nu, i * z)))
            else {
                return;
            };
            let rhs = -i * Complex::from_polar(1.0, -nu * FRAC_PI_2) * h;
            worst = worst.max((l - rhs).norm());
        }
        probe.record(format!("max_abs_error[nu={nu}]"), worst);
        probe.require(worst <= 1e-10, format!("Struve relation at nu = {nu}: {worst:e} > 1e-10"));
    }
}

#[allow(clippy::excessive_precision)]
fn kummer_pe(_: &mut ChaCha8Rng, probe: &mut Probe, a: f64, cc: f64) {
    let plan = SamplingPlan::default();
    let Some(v) = probe.attempt("verify CH_P", verify_instance(TheoremId::ChP, &Params::kummer(a, cc), &plan)) else {
        return;
    };
    require_verified(probe, &v);
    let cert = &v.certificates[0].certificate;
    probe.require(cert.margin > 0.1, format!("margin {:.4} is not > 0.1", cert.margin));
    if (a, cc) == (-1.0, 3.0) {
        // brute-force maximum of |log(1 - z/3)| on |z| = 0.999
        let expected = 0.404_965_862_535_197_27;
        probe.require(
            (cert.max_log_mod - expected).abs() <= 0.01,
            format!("max |Log| {} differs from {expected} by more than 0.01", cert.max_log_mod),
        );
    }
}

fn lambda_convex(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let plan = SamplingPlan::default();
    if let Some(v) = probe.attempt("verify CH_K", verify_instance(TheoremId::ChK, &Params::kummer(1.0, 2.0), &plan)) {
        require_verified(probe, &v);
    }
}

fn upsilon_starlike(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let plan = SamplingPlan::default();
    if let Some(v) = probe.attempt("verify CH_S", verify_instance(TheoremId::ChS, &Params::kummer(2.0, 3.0), &plan)) {
        require_verified(probe, &v);
    }
}

fn quantities_match_q(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let maps = (
        kummer_lambda_series(c(1.0, 0.0), c(2.0, 0.0), 1.0).and_then(AnalyticMap::normalized),
        kummer_upsilon_series(c(2.0, 0.0), c(3.0, 0.0), 1.0).and_then(AnalyticMap::normalized),
    );
    let (Some(lam), Some(ups)) = (probe.attempt("Lambda(1;2)", maps.0), probe.attempt("z Phi(2;3)", maps.1)) else {
        return;
    };
    let (Some(conv), Some(star)) = (
        probe.attempt("convex quantity", convex_quantity(&lam)),
        probe.attempt("starlike quantity", starlike_quantity(&ups)),
    ) else {
        return;
    };
    let mut worst = 0.0f64;
    for _ in 0..100 {
        // q has a removable 0/0 at the origin, so stay away from it
        let z = annulus_point(rng, 0.1, 0.999);
        let ez = z.exp();
        let q = (ez * (1.0 - z + z * z) - 1.0) / (ez * (z - 1.0) + 1.0);
        for quantity in [&conv, &star] {
            if let Some(v) = probe.attempt("eval", quantity.eval(z)) {
                worst = worst.max((v - q).norm());
            }
        }
    }
    probe.record("max_abs_error", worst);
    probe.require(worst <= 1e-9, format!("quantity vs q(z): {worst:e} > 1e-9"));
}

fn lommel_pe(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let plan = SamplingPlan::default();
    let Some(v) = probe.attempt("verify LOM_P", verify_instance(TheoremId::LomP, &Params::lommel(1.0, 0.0), &plan))
    else {
        return;
    };
    require_verified(probe, &v);
    let expected = 4.0 - (4.0 * (E - 1.0) - 3.0);
    let slack = v.report.conditions[0].slack;
    probe.require(slack > 0.0, format!("slack {slack} is not positive"));
    probe.require((slack - expected).abs() <= 1e-14, format!("slack {slack} differs from {expected}"));
}

fn struve_pe(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let plan = SamplingPlan::default();
    let params = Params::struve(c(2.0, 0.0), c(1.0, 0.0));
    if let Some(v) = probe.attempt("verify STR_P", verify_instance(TheoremId::StrP, &params, &plan)) {
        require_verified(probe, &v);
    }
}

fn struve_ke(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let plan = SamplingPlan::default();
    let params = Params::struve(c(16.0, 0.0), c(1.0, 0.0));
    if let Some(v) = probe.attempt("verify STR_K", verify_instance(TheoremId::StrK, &params, &plan)) {
        require_verified(probe, &v);
    }
}

fn struve_recursion_member(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let kappa = box_point(rng, (0.5, 20.0), (-2.0, 2.0));
        let cc = annulus_point(rng, 0.1, 4.0);
        let params = Params::struve(kappa, cc);
        let (Some(member), Some(next)) = (
            probe.attempt("recursion member", claimed_member(TheoremId::StrPRec, &params)),
            probe.attempt("u(kappa+1)", struve_u_series(kappa + 1.0, cc, 1.0)),
        ) else {
            return;
        };
        let m = member[0].map.series();
        for k in 0..m.len().max(next.len()) {
            worst = worst.max((m.coeff(k) - next.coeff(k)).norm());
        }
    }
    probe.record("max_coefficient_error", worst);
    probe.require(worst <= 1e-13, format!("recursion member vs u(kappa+1): {worst:e} > 1e-13"));
}

#[allow(clippy::excessive_precision)]
fn delta_thresholds(_: &mut ChaCha8Rng, probe: &mut Probe) {
    // independently evaluated to 30 digits
    let g_expected = 0.282_688_009_894_060_883_720_998_499_918;
    let h_expected = 0.864_664_716_763_387_308_106_000_505_028;
    let (g, h) = (g_delta_radius(), h_delta_radius());
    probe.record("g_delta_radius", g);
    probe.record("h_delta_radius", h);
    probe.require((g - g_expected).abs() <= 1e-14, format!("g-delta radius {g} vs {g_expected}"));
    probe.require((h - h_expected).abs() <= 1e-14, format!("h-delta radius {h} vs {h_expected}"));
}

/// Steps a float by one unit in the last place toward `target`.
fn step_toward(x: f64, target: f64) -> f64 {
    if x < target {
        f64::from_bits(x.to_bits() + 1)
    } else {
        f64::from_bits(x.to_bits() - 1)
    }
}

/// The float `delta` furthest from `centre` on the given side at which the
/// hypothesis still holds.
fn extreme_delta(id: TheoremId, centre: f64, radius: f64, upper: bool) -> Result<f64, expdisk_core::Error> {
    let mut delta = if upper { centre + radius } else { centre - radius };
    let holds = |d: f64| check_hypothesis(id, &Params::delta(d)).map(|r| r.all_satisfied);
    while !holds(delta)? {
        delta = step_toward(delta, centre);
    }
    loop {
        let outward = step_toward(delta, if upper { f64::INFINITY } else { f64::NEG_INFINITY });
        if !holds(outward)? {
            return Ok(delta);
        }
        delta = outward;
    }
}

fn delta_member(_: &mut ChaCha8Rng, probe: &mut Probe, g_family: bool, upper: bool) {
    let (id, centre, radius) = if g_family {
        (TheoremId::ChGdelta, 1.0, g_delta_radius())
    } else {
        (TheoremId::ChHdelta, 2.0, h_delta_radius())
    };
    let Some(delta) = probe.attempt("extreme delta", extreme_delta(id, centre, radius, upper)) else { return };
    probe.record("delta", delta);
    if let Some(v) = probe.attempt("verify", verify_instance(id, &Params::delta(delta), &SamplingPlan::default())) {
        require_verified(probe, &v);
        let w = v.certificates[0].certificate.witness;
        probe.record("witness_re", w.re);
        probe.record("witness_im", w.im);
    }
}

fn random_normalized(rng: &mut ChaCha8Rng, degree: usize, decay: bool) -> AnalyticMap {
    let mut coeffs = vec![c(0.0, 0.0), c(1.0, 0.0)];
    for k in 2..=degree {
        let z = box_point(rng, (-1.0, 1.0), (-1.0, 1.0));
        coeffs.push(if decay { z / (k * k) as f64 } else { z });
    }
    AnalyticMap::normalized(PowerSeries::polynomial(coeffs).expect("finite")).expect("normalized")
}

fn alexander_duality(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = random_normalized(rng, 20, true);
        let lhs = alexander(&f).and_then(|g| convex_quantity(&g));
        let rhs = starlike_quantity(&f);
        let (Some(lhs), Some(rhs)) = (probe.attempt("convex(A[f])", lhs), probe.attempt("starlike(f)", rhs)) else {
            return;
        };
        let (l, r) = (lhs.series(), rhs.series());
        for k in 0..l.len().max(r.len()) {
            let (x, y) = (l.coeff(k), r.coeff(k));
            worst = worst.max((x - y).norm() / y.norm().max(1.0));
        }
    }
    probe.record("max_relative_error", worst);
    probe.require(worst <= 1e-12, format!("Alexander duality: {worst:e} > 1e-12"));
}

fn convolution_identity(rng: &mut ChaCha8Rng, probe: &mut Probe) {
    let mut mismatches = 0usize;
    for _ in 0..100 {
        let f = random_normalized(rng, 30, false);
        let kernel = geometric_kernel(f.series().len() + 10);
        if let Some(g) = probe.attempt("hadamard", hadamard(&f, &kernel)) {
            if g.series().coeffs() != f.series().coeffs() {
                mismatches += 1;
            }
        }
    }
    probe.record("mismatches", mismatches as f64);
    probe.require(mismatches == 0, format!("{mismatches} of 100 products with z/(1-z) differ from f"));
}

fn struve_conv(_: &mut ChaCha8Rng, probe: &mut Probe, libera: bool) {
    let n = match expdisk_core::specfun::struve_chi_series(c(16.0, 0.0), c(1.0, 0.0), 1.0) {
        Ok(s) => s.len(),
        Err(e) => {
            probe.require(false, format!("chi: {e}"));
            return;
        }
    };
    let kernel = if libera { libera_kernel(n) } else { alexander_kernel(n) };
    if let Some(cert) =
        probe.attempt("closure check", convolution_closure_check(16.0, c(1.0, 0.0), &kernel, &SamplingPlan::default()))
    {
        record_certificate(probe, "", &cert);
    }
}

fn refute_linear(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let p = AnalyticMap::raw(PowerSeries::from_real(&[1.0, 2.0]).expect("finite"));
    let Some(cert) = probe.attempt("certify", certify_subordination_to_exp(&p, &SamplingPlan::default())) else {
        return;
    };
    probe.record("max_log_mod", cert.max_log_mod);
    probe.require(cert.status == CertificateStatus::Refuted, format!("status {}", cert.status.as_str()));
    let at_witness = principal_log(1.0 + 2.0 * cert.witness).map(|l| l.norm()).unwrap_or(f64::INFINITY);
    probe.record("log_mod_at_witness", at_witness);
    probe.require(cert.witness.norm() < 1.0, "witness is not interior");
    probe.require(at_witness > 1.09, format!("|log p(witness)| = {at_witness} is not > 1.09"));
}

fn failing_slack(_: &mut ChaCha8Rng, probe: &mut Probe) {
    if let Some(r) = probe.attempt("check CH_P", check_hypothesis(TheoremId::ChP, &Params::kummer(5.0, 3.0))) {
        let slack = r.conditions[0].slack;
        probe.record("slack", slack);
        probe.require(!r.all_satisfied, "CH_P at (5, 3) reported satisfied");
        probe.require(slack == -4.0, format!("slack {slack} != -4"));
    }
}

/// Flipping the sign of any coefficient of Φ(−3;5;·) must show up in the
/// ODE residual or spoil the 𝒫ₑ certificate.
fn kummer_mutation(_: &mut ChaCha8Rng, probe: &mut Probe) {
    let (a, cc) = (c(-3.0, 0.0), c(5.0, 0.0));
    let Some(series) = probe.attempt("Phi(-3;5)", kummer_series(a, cc, 1.0)) else { return };
    let plan = SamplingPlan::default();
    let mut by_residual = 0usize;
    let mut by_certificate = 0usize;
    for k in 0..series.len() {
        let mut coeffs = series.coeffs().to_vec();
        coeffs[k] = -coeffs[k];
        let Some(mutant) = probe.attempt("mutant", PowerSeries::new(coeffs, series.tail_bound(), 1.0)) else {
            return;
        };
        let residual_caught =
            kummer_ode_residual(&mutant, a, cc, 0.99).map(|r| r.max_abs_residual > 1e-9).unwrap_or(true);
        let cert_caught = match class_membership(&AnalyticMap::raw(mutant), ExpClass::Pe, &plan) {
            Ok(cert) => !(cert.is_verified() && cert.margin > 0.1),
            Err(_) => true,
        };
        by_residual += residual_caught as usize;
        by_certificate += cert_caught as usize;
        probe.require(residual_caught || cert_caught, format!("sign flip of coefficient {k} went unnoticed"));
    }
    probe.record("mutants", series.len() as f64);
    probe.record("caught_by_residual", by_residual as f64);
    probe.record("caught_by_certificate", by_certificate as f64);
}
