//! Generalized Struve function in its normalized form
//! `u_ν(z) = Σ (-c/4)^n / ((3/2)_n (κ)_n) z^n`, and the classical `H_ν`, `L_ν`.

use super::{
    check_kappa, check_region, check_struve_order, half_power, polar_residual, real, sum_ratio_terms, OdeResidualReport,
};
use crate::numerics::{complex_gamma, ensure_finite, PowerSeries};
use crate::{Complex, Error, Result};
use core::f64::consts::PI;

fn struve_ratio(kappa: Complex, c: Complex) -> impl Fn(usize) -> Complex {
    move |n| {
        let n = n as f64;
        -c * 0.25 / ((n + 1.5) * (kappa + n))
    }
}

pub fn struve_u_series(kappa: Complex, c: Complex, r_ref: f64) -> Result<PowerSeries> {
    check_kappa(kappa)?;
    ensure_finite(c, "parameter c")?;
    PowerSeries::from_ratio(0, real(1.0), r_ref, struve_ratio(kappa, c))
}

/// `χ_ν = 6κ(1 - u_ν)/c`: the constant term of `u_ν` is dropped and the rest
/// scaled; the linear coefficient is exactly 1.
pub fn struve_chi_series(kappa: Complex, c: Complex, r_ref: f64) -> Result<PowerSeries> {
    check_kappa(kappa)?;
    ensure_finite(c, "parameter c")?;
    if c == real(0.0) {
        return Err(Error::Parameter("c = 0 is excluded for χ".into()));
    }
    let ratio = struve_ratio(kappa, c);
    PowerSeries::from_ratio(1, real(1.0), r_ref, ratio)
}

/// `|4z²u'' + 2(2κ+1)zu' + (cz + 2(κ-1))u - 2(κ-1)|` on the grid.
pub fn struve_u_ode_residual(
    series: &PowerSeries,
    kappa: Complex,
    c: Complex,
    region_r: f64,
) -> Result<OdeResidualReport> {
    check_region(region_r)?;
    let d1 = series.derivative();
    let d2 = d1.derivative();
    polar_residual(region_r, |z| {
        let (u, u1, u2) = (series.eval(z)?, d1.eval(z)?, d2.eval(z)?);
        Ok(z * z * u2 * 4.0 + (kappa * 2.0 + 1.0) * z * u1 * 2.0 + (c * z + (kappa - 1.0) * 2.0) * u
            - (kappa - 1.0) * 2.0)
    })
}

pub fn struve_u_residual(kappa: Complex, c: Complex, region_r: f64) -> Result<OdeResidualReport> {
    check_region(region_r)?;
    let series = struve_u_series(kappa, c, region_r)?;
    struve_u_ode_residual(&series, kappa, c, region_r)
}

/// `|u_ν(z) + 2zu_ν'(z) + (cz/2κ)u_{ν+1}(z) - 1|`, where `u_{ν+1}` has `κ + 1`.
pub fn struve_recursion_check(kappa: Complex, c: Complex, z: Complex) -> Result<f64> {
    ensure_finite(z, "evaluation point")?;
    if z.norm() > 1.0 {
        return Err(Error::OutOfDomain { radius: z.norm(), r_ref: 1.0 });
    }
    let u = struve_u_series(kappa, c, 1.0)?;
    let next = struve_u_series(kappa + 1.0, c, 1.0)?;
    let value = u.eval(z)? + z * u.derivative().eval(z)? * 2.0 + c * z / (kappa * 2.0) * next.eval(z)?;
    Ok((value - 1.0).norm())
}

fn struve_sum(nu: f64, z: Complex, sign: f64) -> Result<Complex> {
    check_struve_order(nu)?;
    ensure_finite(z, "evaluation point")?;
    let prefactor = half_power(z, nu + 1.0)?;
    let w = z * z * 0.25 * sign;
    let first = real(1.0) / (complex_gamma(real(1.5))? * complex_gamma(real(nu + 1.5))?);
    let sum = sum_ratio_terms(first, |n| {
        let n = n as f64;
        w / ((n + 1.5) * (nu + n + 1.5))
    })?;
    Ok(prefactor * sum)
}

/// Struve function `H_ν(z) = Σ (-1)^n (z/2)^{2n+ν+1} / (Γ(n+3/2) Γ(ν+n+3/2))`.
/// Non-integer `ν` uses the principal branch and rejects `z ∈ (-∞, 0)`.
pub fn struve_h_eval(nu: f64, z: Complex) -> Result<Complex> {
    struve_sum(nu, z, -1.0)
}

/// Modified Struve function `L_ν`, same series without the alternating sign.
pub fn mod_struve_l_eval(nu: f64, z: Complex) -> Result<Complex> {
    struve_sum(nu, z, 1.0)
}

fn normalization(nu: f64, z: Complex) -> Result<Complex> {
    let scale = libm::pow(2.0, nu) * libm::sqrt(PI) * complex_gamma(real(nu + 1.5))?;
    // z^{-(ν+1)} = 2^{-(ν+1)} (z/2)^{-(ν+1)}
    Ok(half_power(z, -(nu + 1.0))? * scale * libm::pow(2.0, -(nu + 1.0)))
}

/// `𝓗_ν(z) = 2^ν √π Γ(ν+3/2) z^{-(ν+1)} H_ν(z)`, with the value 1 at the
/// origin. Computed from `H_ν` directly, not from the `u` series.
pub fn struve_normalized_from_h(nu: f64, z: Complex) -> Result<Complex> {
    check_struve_order(nu)?;
    if z == real(0.0) {
        return Ok(real(1.0));
    }
    Ok(normalization(nu, z)? * struve_h_eval(nu, z)?)
}

/// `𝓛_ν(z) = 2^ν √π Γ(ν+3/2) z^{-(ν+1)} L_ν(z)`.
pub fn struve_normalized_from_l(nu: f64, z: Complex) -> Result<Complex> {
    check_struve_order(nu)?;
    if z == real(0.0) {
        return Ok(real(1.0));
    }
    Ok(normalization(nu, z)? * mod_struve_l_eval(nu, z)?)
}
