//! Normalized Lommel function of the first kind
//! `h_{μ,ν}(z) = z + Σ_{n≥1} (-1/4)^n / (((μ-ν+3)/2)_n ((μ+ν+3)/2)_n) z^{n+1}`.

use super::{check_lommel, check_region, polar_residual, real, OdeResidualReport};
use crate::numerics::PowerSeries;
use crate::{Complex, Result};

fn lommel_ratio(mu: Complex, nu: Complex) -> impl Fn(usize) -> Complex {
    let alpha = (mu - nu + 3.0) * 0.5;
    let beta = (mu + nu + 3.0) * 0.5;
    // c_{k+1} / c_k for k >= 1
    move |k| {
        let n = (k - 1) as f64;
        real(-0.25) / ((alpha + n) * (beta + n))
    }
}

pub fn lommel_series(mu: Complex, nu: Complex, r_ref: f64) -> Result<PowerSeries> {
    check_lommel(mu, nu)?;
    PowerSeries::from_ratio(1, real(1.0), r_ref, lommel_ratio(mu, nu))
}

/// Alexander transform `f_{μ,ν}(z) = ∫_0^z h_{μ,ν}(t)/t dt`; coefficient `k`
/// is the Lommel coefficient divided by `k`.
pub fn lommel_alexander_series(mu: Complex, nu: Complex, r_ref: f64) -> Result<PowerSeries> {
    let h = lommel_series(mu, nu, r_ref)?;
    Ok(h.map_coeffs(1.0, |k, c| if k <= 1 { c } else { c / k as f64 }))
}

/// `|z²h'' + μzh' + ((μ-1)² - ν² + z)h/4 - ((μ+1)² - ν²)z/4|` on the grid.
pub fn lommel_ode_residual(series: &PowerSeries, mu: Complex, nu: Complex, region_r: f64) -> Result<OdeResidualReport> {
    check_region(region_r)?;
    let d1 = series.derivative();
    let d2 = d1.derivative();
    let lower = (mu - 1.0) * (mu - 1.0) - nu * nu;
    let upper = (mu + 1.0) * (mu + 1.0) - nu * nu;
    polar_residual(region_r, |z| {
        let (h, h1, h2) = (series.eval(z)?, d1.eval(z)?, d2.eval(z)?);
        Ok(z * z * h2 + mu * z * h1 + (lower + z) * h * 0.25 - upper * z * 0.25)
    })
}

pub fn lommel_residual(mu: Complex, nu: Complex, region_r: f64) -> Result<OdeResidualReport> {
    check_region(region_r)?;
    let series = lommel_series(mu, nu, region_r)?;
    lommel_ode_residual(&series, mu, nu, region_r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn series_examples() {
        let h = lommel_series(real(1.0), real(0.0), 1.0).unwrap();
        assert_eq!(h.coeff(0), real(0.0));
        assert_eq!(h.coeff(1), real(1.0));
        assert!((h.coeff(2) - real(-1.0 / 16.0)).norm() < 1e-17);
        assert!((h.coeff(3) - real(1.0 / 576.0)).norm() < 1e-18);
        let h = lommel_series(real(3.0), real(1.0), 1.0).unwrap();
        assert!((h.coeff(2) - real(-1.0 / 35.0)).norm() < 1e-17);
        for (mu, nu) in [(0.2, 0.7), (-0.5, 0.1), (10.0, 33f64.sqrt())] {
            assert_eq!(lommel_series(real(mu), real(nu), 0.5).unwrap().coeff(1), real(1.0));
        }
    }

    #[test]
    fn excluded_parameters() {
        assert!(matches!(lommel_series(real(0.0), real(3.0), 1.0), Err(Error::Parameter(_))));
        assert!(matches!(lommel_series(real(-2.0), real(1.0), 1.0), Err(Error::Parameter(_))));
        assert!(lommel_series(real(-2.0), real(0.0), 1.0).is_ok());
    }

    #[test]
    fn alexander_examples() {
        let f = lommel_alexander_series(real(1.0), real(0.0), 1.0).unwrap();
        assert_eq!(f.coeff(1), real(1.0));
        assert!((f.coeff(2) - real(-1.0 / 32.0)).norm() < 1e-17);
        // z f' = h
        let h = lommel_series(real(1.0), real(0.0), 1.0).unwrap();
        let zf1 = f.derivative().shift_up(1);
        for k in 0..h.len() {
            assert!((zf1.coeff(k) - h.coeff(k)).norm() <= 4.0 * f64::EPSILON * h.coeff(k).norm());
        }
    }

    #[test]
    fn residual_examples() {
        assert!(lommel_residual(real(1.0), real(0.0), 0.9).unwrap().max_abs_residual <= 1e-10);
        assert!(lommel_residual(real(2.0), real(1.0), 0.5).unwrap().max_abs_residual <= 1e-11);
        // at the origin both sides vanish
        let h = lommel_series(real(1.0), real(0.0), 1.0).unwrap();
        assert_eq!(h.eval(real(0.0)).unwrap(), real(0.0));
    }
}
