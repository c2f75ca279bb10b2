use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expdisk_core::geometry::ExpClass;
use expdisk_core::Complex;

#[derive(Debug, Parser)]
#[command(name = "expdisk", version, about = "Special functions and exponential-disk subordination checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at one or more points.
    Eval(EvalArgs),
    /// Certify that a function (or its starlike/convex quantity) maps into exp(D).
    Certify(CertifyArgs),
    /// Check the hypothesis of an inclusion result, optionally certifying its conclusion.
    Check(CheckArgs),
    /// Write the image of a circle under a quantity, next to the boundary of exp(D), as CSV.
    Figure(FigureArgs),
    /// Run the acceptance checks.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Kummer,
    KummerLambda,
    KummerUpsilon,
    Lommel,
    LommelAlexander,
    StruveU,
    StruveChi,
    StruveH,
    StruveL,
    BesselJ,
    Exp,
    Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    #[value(name = "Pe", alias = "pe")]
    Pe,
    #[value(name = "Se_star", alias = "se_star", alias = "Se")]
    SeStar,
    #[value(name = "Ke", alias = "ke")]
    Ke,
}

impl From<ClassArg> for ExpClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Pe => ExpClass::Pe,
            ClassArg::SeStar => ExpClass::SeStar,
            ClassArg::Ke => ExpClass::Ke,
        }
    }
}

/// `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("invalid number {p:?}: {e}"));
    let z = match parts.as_slice() {
        [re] => Complex::new(num(re)?, 0.0),
        [re, im] => Complex::new(num(re)?, num(im)?),
        _ => return Err(format!("expected `re` or `re,im`, got {s:?}")),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("non-finite value {s:?}"));
    }
    Ok(z)
}

/// A whole comma-separated list in one flag. The alias keeps clap from
/// treating the field as a repeated argument.
pub type RealList = Vec<f64>;

pub fn parse_reals(s: &str) -> Result<RealList, String> {
    s.split(',')
        .map(|p| {
            let x = p.trim().parse::<f64>().map_err(|e| format!("invalid number {p:?}: {e}"))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(format!("non-finite value {p:?}"))
            }
        })
        .collect()
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub a: Option<Complex>,
    /// Kummer denominator parameter.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub c: Option<Complex>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub mu: Option<Complex>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub nu: Option<Complex>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub kappa: Option<Complex>,
    /// Struve parameter c.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub cparam: Option<Complex>,
    /// Real polynomial coefficients c0,c1,... for `poly`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_reals)]
    pub coeffs: Option<RealList>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PlanArgs {
    /// Comma-separated ascending radii in (0, 1).
    #[arg(long, value_parser = parse_reals)]
    pub radii: Option<RealList>,
    /// Samples per circle; defaults to EXPDISK_ANGLES or 4096.
    #[arg(long)]
    pub angles: Option<usize>,
    #[arg(long)]
    pub refine: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Evaluation point `re,im`; repeatable.
    #[arg(long = "z", required = true, allow_hyphen_values = true, value_parser = parse_complex)]
    pub points: Vec<Complex>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long = "fn", value_enum)]
    pub family: Family,
    #[arg(long, value_enum)]
    pub class: ClassArg,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub plan: PlanArgs,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Result id, e.g. CH_P, LOM_ALEX, STR_K.
    pub theorem: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<f64>,
    /// Also certify the claimed member(s).
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub plan: PlanArgs,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long = "fn", value_enum)]
    pub family: Family,
    #[arg(long, value_enum, default_value = "Pe")]
    pub class: ClassArg,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 0.999)]
    pub radius: f64,
    #[arg(long)]
    pub angles: Option<usize>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Run only checks carrying this tag or whose name contains it.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, default_value_t = crate::suite::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
