use super::{half_power, real, sum_ratio_terms};
use crate::numerics::{complex_gamma, ensure_finite, is_nonpositive_integer};
use crate::{Complex, Error, Result};

/// Bessel function of the first kind,
/// `J_ν(z) = Σ (-1)^n (z/2)^{2n+ν} / (n! Γ(ν+n+1))`.
///
/// Requires `ν + 1 ∉ {0, -1, ...}`; non-integer orders use the principal
/// branch of `(z/2)^ν`.
pub fn bessel_j_eval(nu: f64, z: Complex) -> Result<Complex> {
    ensure_finite(z, "evaluation point")?;
    if !nu.is_finite() {
        return Err(Error::NonFinite("parameter nu"));
    }
    if is_nonpositive_integer(real(nu + 1.0)) {
        return Err(Error::Parameter(alloc::format!("nu + 1 = {} is a nonpositive integer", nu + 1.0)));
    }
    let prefactor = half_power(z, nu)?;
    let w = -z * z * 0.25;
    let first = real(1.0) / complex_gamma(real(nu + 1.0))?;
    let sum = sum_ratio_terms(first, |n| {
        let n = n as f64;
        w / ((n + 1.0) * (nu + n + 1.0))
    })?;
    Ok(prefactor * sum)
}
