//! The special function families as power series about the origin, closed
//! evaluators for the classical Struve and Bessel functions, and checks that
//! tie each series to its defining differential equation or recurrence.
//!
//! Normalized functions (`h_{μ,ν}`, `u_ν`) are defined by their series in `z`;
//! nothing in this module composes with `√z`.

mod bessel;
mod kummer;
mod lommel;
mod struve;

pub use bessel::bessel_j_eval;
pub use kummer::{
    kummer_contiguous_check, kummer_eval, kummer_lambda_series, kummer_ode_residual, kummer_quadrature_oracle,
    kummer_residual, kummer_series, kummer_upsilon_series,
};
pub use lommel::{lommel_alexander_series, lommel_ode_residual, lommel_residual, lommel_series};
pub use struve::{
    mod_struve_l_eval, struve_chi_series, struve_h_eval, struve_normalized_from_h, struve_normalized_from_l,
    struve_recursion_check, struve_u_ode_residual, struve_u_residual, struve_u_series,
};

use crate::numerics::{is_nonpositive_integer, PowerSeries};
use crate::{Complex, Error, Result};
use core::f64::consts::PI;

/// Side length of the polar grid used by the ODE residual reports.
pub const RESIDUAL_GRID: usize = 32;

/// One function of the families handled here, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialFunctionId {
    Kummer {
        a: Complex,
        c: Complex,
    },
    NormalizedLommel {
        mu: f64,
        nu: f64,
    },
    LommelAlexander {
        mu: f64,
        nu: f64,
    },
    /// `kappa = ν + (b + 2)/2`.
    GeneralizedStruve {
        kappa: Complex,
        c: Complex,
    },
    StruveH {
        nu: f64,
    },
    ModStruveL {
        nu: f64,
    },
    BesselJ {
        nu: f64,
    },
    /// `Λ(a;c;z) = (Φ(a;c;z) - 1) c / a`.
    KummerLambda {
        a: f64,
        c: f64,
    },
    /// `χ_ν = 6κ(1 - u_ν)/c`.
    StruveChi {
        kappa: f64,
        c: Complex,
    },
}

impl SpecialFunctionId {
    /// Checks the family's parameter exclusions.
    pub fn validate(&self) -> Result<()> {
        match *self {
            SpecialFunctionId::Kummer { c, .. } => check_kummer_c(c),
            SpecialFunctionId::NormalizedLommel { mu, nu } | SpecialFunctionId::LommelAlexander { mu, nu } => {
                check_lommel(real(mu), real(nu))
            }
            SpecialFunctionId::GeneralizedStruve { kappa, .. } => check_kappa(kappa),
            SpecialFunctionId::StruveH { nu } | SpecialFunctionId::ModStruveL { nu } => check_struve_order(nu),
            SpecialFunctionId::BesselJ { nu } => {
                if is_nonpositive_integer(real(nu + 1.0)) {
                    Err(Error::Parameter(alloc::format!("nu + 1 = {} is a nonpositive integer", nu + 1.0)))
                } else {
                    Ok(())
                }
            }
            SpecialFunctionId::KummerLambda { a, c } => {
                if a == 0.0 {
                    return Err(Error::Parameter("a = 0 is excluded for Λ(a;c;z)".into()));
                }
                check_kummer_c(real(c))
            }
            SpecialFunctionId::StruveChi { kappa, c } => {
                if c == Complex::new(0.0, 0.0) {
                    return Err(Error::Parameter("c = 0 is excluded for χ".into()));
                }
                check_kappa(real(kappa))
            }
        }
    }

    /// Series about the origin for the series-backed families; `None` for the
    /// classical Struve and Bessel functions, which carry a branch point.
    pub fn series(&self, r_ref: f64) -> Option<Result<PowerSeries>> {
        Some(match *self {
            SpecialFunctionId::Kummer { a, c } => kummer_series(a, c, r_ref),
            SpecialFunctionId::NormalizedLommel { mu, nu } => lommel_series(real(mu), real(nu), r_ref),
            SpecialFunctionId::LommelAlexander { mu, nu } => lommel_alexander_series(real(mu), real(nu), r_ref),
            SpecialFunctionId::GeneralizedStruve { kappa, c } => struve_u_series(kappa, c, r_ref),
            SpecialFunctionId::KummerLambda { a, c } => kummer_lambda_series(real(a), real(c), r_ref),
            SpecialFunctionId::StruveChi { kappa, c } => struve_chi_series(real(kappa), c, r_ref),
            SpecialFunctionId::StruveH { .. }
            | SpecialFunctionId::ModStruveL { .. }
            | SpecialFunctionId::BesselJ { .. } => return None,
        })
    }

    /// Value at `z`; series-backed families require `|z| <= 1`.
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        self.validate()?;
        match *self {
            SpecialFunctionId::StruveH { nu } => struve_h_eval(nu, z),
            SpecialFunctionId::ModStruveL { nu } => mod_struve_l_eval(nu, z),
            SpecialFunctionId::BesselJ { nu } => bessel_j_eval(nu, z),
            _ => {
                let series = self.series(1.0).expect("series-backed family")?;
                series.eval(z)
            }
        }
    }
}

/// Worst `|residual|` found on a polar grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeResidualReport {
    pub max_abs_residual: f64,
    pub sample_count: usize,
    pub worst_z: Complex,
}

/// Maximizes `|residual(z)|` over the `RESIDUAL_GRID`² polar grid with radii
/// `region_r·i/RESIDUAL_GRID`, `i = 1..=RESIDUAL_GRID`.
pub(crate) fn polar_residual<F>(region_r: f64, mut residual: F) -> Result<OdeResidualReport>
where
    F: FnMut(Complex) -> Result<Complex>,
{
    check_region(region_r)?;
    let mut report = OdeResidualReport { max_abs_residual: 0.0, sample_count: 0, worst_z: Complex::new(0.0, 0.0) };
    for i in 1..=RESIDUAL_GRID {
        let r = region_r * i as f64 / RESIDUAL_GRID as f64;
        for j in 0..RESIDUAL_GRID {
            let z = Complex::from_polar(r, 2.0 * PI * j as f64 / RESIDUAL_GRID as f64);
            let value = residual(z)?.norm();
            if !value.is_finite() {
                return Err(Error::NonFinite("ODE residual"));
            }
            report.sample_count += 1;
            if value > report.max_abs_residual {
                report.max_abs_residual = value;
                report.worst_z = z;
            }
        }
    }
    Ok(report)
}

pub(crate) fn check_region(region_r: f64) -> Result<()> {
    if region_r > 0.0 && region_r <= 1.0 {
        Ok(())
    } else {
        Err(Error::Precondition(alloc::format!("region radius {region_r} outside (0, 1]")))
    }
}

pub(crate) fn real(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

pub(crate) fn check_kummer_c(c: Complex) -> Result<()> {
    crate::numerics::ensure_finite(c, "parameter c")?;
    if is_nonpositive_integer(c) {
        Err(Error::Parameter(alloc::format!("c = {} is in {{0, -1, -2, ...}}", c.re)))
    } else {
        Ok(())
    }
}

pub(crate) fn check_kappa(kappa: Complex) -> Result<()> {
    crate::numerics::ensure_finite(kappa, "parameter kappa")?;
    if is_nonpositive_integer(kappa) {
        Err(Error::Parameter(alloc::format!("kappa = {} is in {{0, -1, -2, ...}}", kappa.re)))
    } else {
        Ok(())
    }
}

fn is_negative_odd_integer(x: Complex) -> bool {
    x.im == 0.0 && x.re < 0.0 && libm::floor(x.re) == x.re && libm::fmod(x.re, 2.0) != 0.0
}

pub(crate) fn check_lommel(mu: Complex, nu: Complex) -> Result<()> {
    crate::numerics::ensure_finite(mu, "parameter mu")?;
    crate::numerics::ensure_finite(nu, "parameter nu")?;
    if is_negative_odd_integer(mu - nu) {
        return Err(Error::Parameter("mu - nu is a negative odd integer".into()));
    }
    if is_negative_odd_integer(mu + nu) {
        return Err(Error::Parameter("mu + nu is a negative odd integer".into()));
    }
    Ok(())
}

pub(crate) fn check_struve_order(nu: f64) -> Result<()> {
    if !nu.is_finite() {
        return Err(Error::NonFinite("parameter nu"));
    }
    if is_nonpositive_integer(real(nu + 1.5)) {
        Err(Error::Parameter(alloc::format!("nu + 3/2 = {} is a nonpositive integer", nu + 1.5)))
    } else {
        Ok(())
    }
}

/// `(z/2)^p` on the principal branch. Integer powers are single valued;
/// other powers reject the closed negative real axis (the origin is allowed
/// when `p > 0`).
pub(crate) fn half_power(z: Complex, p: f64) -> Result<Complex> {
    let half = z * 0.5;
    let is_zero = z.re == 0.0 && z.im == 0.0;
    if libm::floor(p) == p && libm::fabs(p) < 1e9 {
        if is_zero && p < 0.0 {
            return Err(Error::Domain("negative power of zero".into()));
        }
        return Ok(half.powi(p as i32));
    }
    if is_zero {
        return if p > 0.0 {
            Ok(Complex::new(0.0, 0.0))
        } else {
            Err(Error::Domain("non-positive power of zero".into()))
        };
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(alloc::format!("z = {} lies on the branch cut (-inf, 0]", z.re)));
    }
    let log = crate::numerics::principal_log(half)?;
    Ok((log * p).exp())
}

/// Sums `sum_n t_n` with `t_{n+1} = t_n * ratio(n)` until the terms are
/// negligible.
pub(crate) fn sum_ratio_terms<F>(first: Complex, mut ratio: F) -> Result<Complex>
where
    F: FnMut(usize) -> Complex,
{
    let mut acc = crate::numerics::CompensatedSum::new();
    let mut term = first;
    let mut biggest = first.norm();
    for n in 0..crate::numerics::MAX_TERMS {
        acc.add(term);
        let q = ratio(n);
        term *= q;
        if !(term.re.is_finite() && term.im.is_finite()) {
            return Err(Error::NonFinite("series term"));
        }
        biggest = biggest.max(term.norm());
        if term.norm() <= 1e-18 * biggest && q.norm() < 0.5 {
            acc.add(term);
            return Ok(acc.value());
        }
    }
    Err(Error::NoConvergence { terms: crate::numerics::MAX_TERMS })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_validate_exclusions() {
        let c0 = real(0.0);
        assert!(SpecialFunctionId::Kummer { a: real(1.0), c: real(-2.0) }.validate().is_err());
        assert!(SpecialFunctionId::Kummer { a: real(1.0), c: real(3.0) }.validate().is_ok());
        assert!(SpecialFunctionId::NormalizedLommel { mu: 0.0, nu: 3.0 }.validate().is_err());
        assert!(SpecialFunctionId::NormalizedLommel { mu: 0.0, nu: 2.0 }.validate().is_ok());
        assert!(SpecialFunctionId::GeneralizedStruve { kappa: real(-1.0), c: c0 }.validate().is_err());
        assert!(SpecialFunctionId::KummerLambda { a: 0.0, c: 2.0 }.validate().is_err());
        assert!(SpecialFunctionId::StruveChi { kappa: 2.0, c: c0 }.validate().is_err());
        assert!(SpecialFunctionId::StruveH { nu: -1.5 }.validate().is_err());
        assert!(SpecialFunctionId::BesselJ { nu: -1.0 }.validate().is_err());
    }

    #[test]
    fn id_eval_dispatches() {
        let e = SpecialFunctionId::Kummer { a: real(2.0), c: real(2.0) }.eval(real(1.0)).unwrap();
        assert!((e.re - core::f64::consts::E).abs() < 1e-14);
        let j = SpecialFunctionId::BesselJ { nu: 0.0 }.eval(real(0.0)).unwrap();
        assert_eq!(j, real(1.0));
        assert!(SpecialFunctionId::StruveH { nu: 0.0 }.series(1.0).is_none());
    }

    #[test]
    fn half_power_branches() {
        assert!(half_power(real(-1.0), 0.5).is_err());
        assert_eq!(half_power(real(-2.0), 2.0).unwrap(), real(1.0));
        assert_eq!(half_power(real(0.0), 0.5).unwrap(), real(0.0));
        let v = half_power(real(8.0), 0.5).unwrap();
        assert!((v.re - 2.0).abs() < 1e-15);
    }
}
