use expdisk_core::geometry::AnalyticMap;
use expdisk_core::numerics::PowerSeries;
use expdisk_core::specfun::{
    bessel_j_eval, kummer_lambda_series, kummer_series, kummer_upsilon_series, lommel_alexander_series, lommel_series,
    mod_struve_l_eval, struve_chi_series, struve_h_eval, struve_u_series,
};
use expdisk_core::Complex;

use crate::args::{Family, ParamArgs};
use crate::CliError;

/// Series are built on the closed unit disk.
const R_REF: f64 = 1.0;

fn need(value: Option<Complex>, flag: &str, family: Family) -> Result<Complex, CliError> {
    value.ok_or_else(|| CliError::input(format!("{} requires {flag}", family_name(family))))
}

fn need_real(value: Option<Complex>, flag: &str, family: Family) -> Result<f64, CliError> {
    let v = need(value, flag, family)?;
    if v.im != 0.0 {
        return Err(CliError::input(format!("{flag} must be real for {}", family_name(family))));
    }
    Ok(v.re)
}

pub fn family_name(family: Family) -> &'static str {
    match family {
        Family::Kummer => "kummer",
        Family::KummerLambda => "kummer-lambda",
        Family::KummerUpsilon => "kummer-upsilon",
        Family::Lommel => "lommel",
        Family::LommelAlexander => "lommel-alexander",
        Family::StruveU => "struve-u",
        Family::StruveChi => "struve-chi",
        Family::StruveH => "struve-h",
        Family::StruveL => "struve-l",
        Family::BesselJ => "bessel-j",
        Family::Exp => "exp",
        Family::Poly => "poly",
    }
}

/// Power series about the origin for the series-backed families.
pub fn series_for(family: Family, p: &ParamArgs) -> Result<PowerSeries, CliError> {
    let one = Complex::new(1.0, 0.0);
    let series = match family {
        Family::Kummer => kummer_series(need(p.a, "--a", family)?, need(p.c, "--c", family)?, R_REF)?,
        Family::KummerLambda => kummer_lambda_series(need(p.a, "--a", family)?, need(p.c, "--c", family)?, R_REF)?,
        Family::KummerUpsilon => kummer_upsilon_series(need(p.a, "--a", family)?, need(p.c, "--c", family)?, R_REF)?,
        Family::Lommel => lommel_series(need(p.mu, "--mu", family)?, need(p.nu, "--nu", family)?, R_REF)?,
        Family::LommelAlexander => {
            lommel_alexander_series(need(p.mu, "--mu", family)?, need(p.nu, "--nu", family)?, R_REF)?
        }
        Family::StruveU => {
            struve_u_series(need(p.kappa, "--kappa", family)?, need(p.cparam, "--cparam", family)?, R_REF)?
        }
        Family::StruveChi => {
            struve_chi_series(need(p.kappa, "--kappa", family)?, need(p.cparam, "--cparam", family)?, R_REF)?
        }
        Family::Exp => kummer_series(one, one, R_REF)?,
        Family::Poly => {
            let coeffs = p.coeffs.as_ref().ok_or_else(|| CliError::input("poly requires --coeffs"))?;
            PowerSeries::from_real(coeffs)?
        }
        Family::StruveH | Family::StruveL | Family::BesselJ => {
            return Err(CliError::input(format!(
                "{} has a branch point at the origin and no power series; use `eval`",
                family_name(family)
            )))
        }
    };
    Ok(series)
}

/// Normalized when the series starts `0 + 1·z` exactly, raw otherwise.
pub fn map_for(family: Family, p: &ParamArgs) -> Result<AnalyticMap, CliError> {
    let series = series_for(family, p)?;
    if series.coeff(0) == Complex::new(0.0, 0.0) && series.coeff(1) == Complex::new(1.0, 0.0) {
        Ok(AnalyticMap::normalized(series)?)
    } else {
        Ok(AnalyticMap::raw(series))
    }
}

pub fn eval_at(family: Family, p: &ParamArgs, z: Complex) -> Result<Complex, CliError> {
    let value = match family {
        Family::StruveH => struve_h_eval(need_real(p.nu, "--nu", family)?, z)?,
        Family::StruveL => mod_struve_l_eval(need_real(p.nu, "--nu", family)?, z)?,
        Family::BesselJ => bessel_j_eval(need_real(p.nu, "--nu", family)?, z)?,
        _ => series_for(family, p)?.eval(z)?,
    };
    Ok(value)
}
