//! Confluent hypergeometric function `Φ(a;c;z) = Σ (a)_n/((c)_n n!) z^n`.

use super::{check_kummer_c, check_region, polar_residual, real, OdeResidualReport};
use crate::numerics::{complex_gamma, ensure_finite, integrate_adaptive, PowerSeries};
use crate::{Complex, Error, Result};

fn kummer_ratio(a: Complex, c: Complex) -> impl Fn(usize) -> Complex {
    move |n| {
        let n = n as f64;
        (a + n) / ((c + n) * (n + 1.0))
    }
}

/// Series of `Φ(a;c;z)` with tail controlled on `|z| <= r_ref`. Terminates
/// exactly at degree `-a` when `a` is a nonpositive integer.
pub fn kummer_series(a: Complex, c: Complex, r_ref: f64) -> Result<PowerSeries> {
    ensure_finite(a, "parameter a")?;
    check_kummer_c(c)?;
    match terminating_degree(a) {
        Some(m) => PowerSeries::from_ratio_exact(0, real(1.0), m + 1, r_ref, kummer_ratio(a, c)),
        None => PowerSeries::from_ratio(0, real(1.0), r_ref, kummer_ratio(a, c)),
    }
}

/// `Some(-a)` when `a` is a nonpositive integer.
fn terminating_degree(a: Complex) -> Option<usize> {
    if crate::numerics::is_nonpositive_integer(a) && a.re > -(crate::numerics::MAX_TERMS as f64) {
        Some(-a.re as usize)
    } else {
        None
    }
}

/// `Λ(a;c;z) = (Φ(a;c;z) - 1) c/a`, built with `c_0 = 0` and `c_1 = 1` exactly.
pub fn kummer_lambda_series(a: Complex, c: Complex, r_ref: f64) -> Result<PowerSeries> {
    ensure_finite(a, "parameter a")?;
    check_kummer_c(c)?;
    if a == real(0.0) {
        return Err(Error::Parameter("a = 0 is excluded for Λ(a;c;z)".into()));
    }
    match terminating_degree(a) {
        Some(m) => PowerSeries::from_ratio_exact(1, real(1.0), m, r_ref, kummer_ratio(a, c)),
        None => PowerSeries::from_ratio(1, real(1.0), r_ref, kummer_ratio(a, c)),
    }
}

/// `zΦ(a;c;z)`, normalized by construction.
pub fn kummer_upsilon_series(a: Complex, c: Complex, r_ref: f64) -> Result<PowerSeries> {
    ensure_finite(a, "parameter a")?;
    check_kummer_c(c)?;
    let ratio = kummer_ratio(a, c);
    match terminating_degree(a) {
        Some(m) => PowerSeries::from_ratio_exact(1, real(1.0), m + 1, r_ref, move |k| ratio(k - 1)),
        None => PowerSeries::from_ratio(1, real(1.0), r_ref, move |k| ratio(k - 1)),
    }
}

/// `Φ(a;c;z)` for `|z| <= 1`.
pub fn kummer_eval(a: Complex, c: Complex, z: Complex) -> Result<Complex> {
    ensure_finite(z, "evaluation point")?;
    if z.norm() > 1.0 {
        return Err(Error::OutOfDomain { radius: z.norm(), r_ref: 1.0 });
    }
    kummer_series(a, c, 1.0)?.eval(z)
}

/// Independent evaluation of `Φ(a;c;z)` through the Euler integral
/// `Γ(c)/(Γ(a)Γ(c-a)) ∫_0^1 t^{a-1}(1-t)^{c-a-1} e^{tz} dt`.
///
/// The interval is split at 1/2 and each half is mapped by `t = u^k/2`
/// (resp. `1 - t = v^k/2`) with `k` large enough that the endpoint factor
/// behaves like `u^{3+}`, so the adaptive Gauss–Legendre rule sees a smooth
/// integrand.
pub fn kummer_quadrature_oracle(a: Complex, c: Complex, z: Complex) -> Result<Complex> {
    ensure_finite(a, "parameter a")?;
    ensure_finite(c, "parameter c")?;
    ensure_finite(z, "evaluation point")?;
    let b = c - a;
    if !(a.re > 0.0 && b.re > 0.0) {
        return Err(Error::Domain("Euler integral needs Re a > 0 and Re(c - a) > 0".into()));
    }
    let norm = complex_gamma(c)? / (complex_gamma(a)? * complex_gamma(b)?);
    let tol = 1e-13 / norm.norm().max(1.0);

    // ∫_0^{1/2} t^{a-1} (1-t)^{b-1} e^{tz} dt with t = u^k / 2
    let k_left = substitution_power(a);
    let left = integrate_adaptive(
        |u| {
            if u == 0.0 {
                return real(0.0);
            }
            let t = 0.5 * libm::pow(u, k_left);
            let jac = (real(libm::log(u)) * (a * k_left - 1.0)).exp() * k_left * (real(0.5).ln() * a).exp();
            jac * (real(libm::log1p(-t)) * (b - 1.0)).exp() * (z * t).exp()
        },
        0.0,
        1.0,
        tol,
    )?;
    // ∫_{1/2}^1 with 1 - t = v^k / 2
    let k_right = substitution_power(b);
    let right = integrate_adaptive(
        |v| {
            if v == 0.0 {
                return real(0.0);
            }
            let s = 0.5 * libm::pow(v, k_right);
            let t = 1.0 - s;
            let jac = (real(libm::log(v)) * (b * k_right - 1.0)).exp() * k_right * (real(0.5).ln() * b).exp();
            jac * (real(libm::log(t)) * (a - 1.0)).exp() * (z * t).exp()
        },
        0.0,
        1.0,
        tol,
    )?;
    Ok(norm * (left + right))
}

fn substitution_power(exponent: Complex) -> f64 {
    if exponent.re >= 4.0 {
        1.0
    } else {
        libm::ceil(4.0 / exponent.re)
    }
}

/// `|zΦ'' + (c - z)Φ' - aΦ|` maximized on the residual grid for an arbitrary
/// series standing in for `Φ(a;c;·)`.
pub fn kummer_ode_residual(series: &PowerSeries, a: Complex, c: Complex, region_r: f64) -> Result<OdeResidualReport> {
    check_region(region_r)?;
    let d1 = series.derivative();
    let d2 = d1.derivative();
    polar_residual(region_r, |z| {
        let (f, f1, f2) = (series.eval(z)?, d1.eval(z)?, d2.eval(z)?);
        Ok(z * f2 + (c - z) * f1 - a * f)
    })
}

/// ODE residual of the library's own `Φ(a;c;·)` on `|z| <= region_r`.
pub fn kummer_residual(a: Complex, c: Complex, region_r: f64) -> Result<OdeResidualReport> {
    check_region(region_r)?;
    let series = kummer_series(a, c, region_r)?;
    kummer_ode_residual(&series, a, c, region_r)
}

/// `|aΦ(a+1;c+1;z) - cΦ'(a;c;z)|`.
pub fn kummer_contiguous_check(a: Complex, c: Complex, z: Complex) -> Result<f64> {
    let r_ref = z.norm().clamp(f64::MIN_POSITIVE, 1.0);
    if z.norm() > 1.0 {
        return Err(Error::OutOfDomain { radius: z.norm(), r_ref: 1.0 });
    }
    let shifted = kummer_series(a + 1.0, c + 1.0, r_ref)?.eval(z)?;
    let derivative = kummer_series(a, c, r_ref)?.derivative().eval(z)?;
    Ok((a * shifted - c * derivative).norm())
}
