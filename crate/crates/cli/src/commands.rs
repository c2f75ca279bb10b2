use std::f64::consts::TAU;
use std::fs;
use std::io::Write;
use std::path::Path;

use expdisk_core::geometry::{
    class_membership, convex_quantity, starlike_quantity, CertificateStatus, ExpClass, SamplingPlan,
};
use expdisk_core::theorems::{check_hypothesis, verify_instance, Params, TheoremId};
use expdisk_core::Complex;
use serde::Serialize;

use crate::args::{CertifyArgs, CheckArgs, Cli, Command, EvalArgs, FigureArgs, ParamArgs, PlanArgs, SuiteArgs};
use crate::functions::{eval_at, map_for};
use crate::report::{CertificateJson, EvalRecord, HypothesisJson, Real};
use crate::suite::{run_suite, SuiteConfig};
use crate::{exit, CliError};

pub const ANGLES_ENV: &str = "EXPDISK_ANGLES";

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Eval(args) => run_eval(&args),
        Command::Certify(args) => run_certify(&args),
        Command::Check(args) => run_check(&args),
        Command::Figure(args) => emit_figure_csv(&args),
        Command::Suite(args) => run_suite_command(&args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit::INPUT
    })
}

fn default_angles() -> Result<usize, CliError> {
    match std::env::var(ANGLES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::input(format!("{ANGLES_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(SamplingPlan::DEFAULT_ANGLES),
    }
}

pub fn plan_from(args: &PlanArgs) -> Result<SamplingPlan, CliError> {
    let radii = args.radii.clone().unwrap_or_else(|| SamplingPlan::DEFAULT_RADII.to_vec());
    let angles = match args.angles {
        Some(n) => n,
        None => default_angles()?,
    };
    let refine = args.refine.unwrap_or(SamplingPlan::DEFAULT_REFINE);
    Ok(SamplingPlan::new(radii, angles, refine)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_output(path, &text)
}

fn status_code(status: CertificateStatus) -> i32 {
    match status {
        CertificateStatus::VerifiedOnGrid => exit::OK,
        CertificateStatus::Refuted => exit::REFUTED,
        CertificateStatus::Inconclusive => exit::INCONCLUSIVE,
    }
}

pub fn run_eval(args: &EvalArgs) -> Result<i32, CliError> {
    let records = args
        .points
        .iter()
        .map(|&z| {
            let f = eval_at(args.family, &args.params, z)?;
            Ok(EvalRecord { z_re: Real(z.re), z_im: Real(z.im), f_re: Real(f.re), f_im: Real(f.im) })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    write_json(args.output.as_deref(), &records)?;
    Ok(exit::OK)
}

pub fn run_certify(args: &CertifyArgs) -> Result<i32, CliError> {
    let plan = plan_from(&args.plan)?;
    let map = map_for(args.family, &args.params)?;
    let cert = class_membership(&map, args.class.into(), &plan)?;
    write_json(args.output.as_deref(), &CertificateJson::from(&cert))?;
    Ok(status_code(cert.status))
}

fn theorem_params(p: &ParamArgs, delta: Option<f64>) -> Result<Params, CliError> {
    if p.c.is_some() && p.cparam.is_some() {
        return Err(CliError::input("give either --c or --cparam, not both"));
    }
    if p.coeffs.is_some() {
        return Err(CliError::input("--coeffs does not apply to `check`"));
    }
    Ok(Params { a: p.a, c: p.c.or(p.cparam), mu: p.mu, nu: p.nu, kappa: p.kappa, delta })
}

/// 0 when the hypothesis holds (and every certificate verifies); 2 on a
/// failed hypothesis or refuted certificate; 3 when only inconclusive
/// certificates stand in the way.
pub fn run_check(args: &CheckArgs) -> Result<i32, CliError> {
    let id = TheoremId::parse(&args.theorem)
        .ok_or_else(|| CliError::input(format!("unknown result id {:?}", args.theorem)))?;
    let params = theorem_params(&args.params, args.delta)?;
    if !args.verify {
        let report = check_hypothesis(id, &params)?;
        write_json(args.output.as_deref(), &HypothesisJson::new(&report, None))?;
        return Ok(if report.all_satisfied { exit::OK } else { exit::REFUTED });
    }
    let plan = plan_from(&args.plan)?;
    let v = verify_instance(id, &params, &plan)?;
    write_json(args.output.as_deref(), &HypothesisJson::new(&v.report, Some(&v.certificates)))?;
    let statuses = v.certificates.iter().map(|m| m.certificate.status);
    let code = if !v.report.all_satisfied || statuses.clone().any(|s| s == CertificateStatus::Refuted) {
        exit::REFUTED
    } else if statuses.clone().any(|s| s == CertificateStatus::Inconclusive) {
        exit::INCONCLUSIVE
    } else {
        exit::OK
    };
    Ok(code)
}

/// CSV `theta,curve,re,im`: the image of `|z| = radius` under the quantity of
/// the chosen class (`image`), then `exp(e^{iθ})` (`boundary`). Each curve runs
/// over θ_j = 2πj/N, j = 0..=N; the row at 2π repeats the values at 0.
pub fn emit_figure_csv(args: &FigureArgs) -> Result<i32, CliError> {
    let angles = match args.angles {
        Some(n) => n,
        None => default_angles()?,
    };
    if angles == 0 {
        return Err(CliError::input("angle count must be positive"));
    }
    if !(args.radius > 0.0 && args.radius <= 1.0) {
        return Err(CliError::input(format!("radius {} outside (0, 1]", args.radius)));
    }
    let map = map_for(args.family, &args.params)?;
    let quantity = match ExpClass::from(args.class) {
        ExpClass::Pe => map,
        ExpClass::SeStar => starlike_quantity(&map)?,
        ExpClass::Ke => convex_quantity(&map)?,
    };
    let curve = |f: &dyn Fn(f64) -> Result<Complex, CliError>| -> Result<Vec<(f64, Complex)>, CliError> {
        let mut rows = Vec::with_capacity(angles + 1);
        for j in 0..angles {
            let theta = TAU * j as f64 / angles as f64;
            rows.push((theta, f(theta)?));
        }
        rows.push((TAU, rows[0].1));
        Ok(rows)
    };
    let image = curve(&|t| Ok(quantity.eval(Complex::from_polar(args.radius, t))?))?;
    let boundary = curve(&|t| Ok(Complex::from_polar(1.0, t).exp()))?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["theta", "curve", "re", "im"])?;
    for (name, rows) in [("image", &image), ("boundary", &boundary)] {
        for (theta, w) in rows {
            writer.write_record([theta.to_string(), name.to_string(), w.re.to_string(), w.im.to_string()])?;
        }
    }
    let bytes = writer.into_inner().map_err(|e| CliError::input(format!("csv: {e}")))?;
    write_output(args.output.as_deref(), &String::from_utf8(bytes).expect("ascii csv"))?;
    Ok(exit::OK)
}

fn run_suite_command(args: &SuiteArgs) -> Result<i32, CliError> {
    let outcome = run_suite(&SuiteConfig { filter: args.filter.clone(), seed: args.seed });
    for criterion in &outcome.criteria {
        eprintln!("{}", criterion.summary_line());
    }
    if outcome.criteria.is_empty() {
        return Err(CliError::input(format!("filter {:?} selects no checks", args.filter.as_deref().unwrap_or(""))));
    }
    write_json(args.output.as_deref(), &outcome)?;
    Ok(if outcome.passed { exit::OK } else { exit::REFUTED })
}
