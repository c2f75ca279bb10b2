use alloc::vec::Vec;

use super::AnalyticMap;
use crate::numerics::PowerSeries;
use crate::{Complex, Error, Result};

fn require_normalized(f: &AnalyticMap, what: &str) -> Result<()> {
    if !f.is_normalized() {
        return Err(Error::Precondition(alloc::format!("{what} requires normalized maps")));
    }
    Ok(())
}

/// `0 · ∞` counts as 0 here: a polynomial factor has no tail to amplify.
fn tail_product(tail: f64, sup: f64) -> f64 {
    if tail == 0.0 || sup == 0.0 {
        0.0
    } else {
        tail * sup
    }
}

/// Real factors scale componentwise, so multiplying by a real kernel
/// coefficient of 1 is exact.
fn product(x: Complex, y: Complex) -> Complex {
    if y.im == 0.0 {
        x * y.re
    } else if x.im == 0.0 {
        y * x.re
    } else {
        x * y
    }
}

/// Coefficientwise product, truncated to the shorter of the two series.
///
/// The dropped part of `f ∗ g` is bounded by either tail times the largest
/// retained coefficient of the other factor (both factors are evaluated on
/// the smaller reference disk); the smaller bound is kept.
pub fn hadamard(f: &AnalyticMap, g: &AnalyticMap) -> Result<AnalyticMap> {
    require_normalized(f, "hadamard product")?;
    require_normalized(g, "hadamard product")?;
    let (a, b) = (f.series(), g.series());
    let n = a.len().min(b.len());
    let coeffs: Vec<Complex> = (0..n).map(|k| product(a.coeff(k), b.coeff(k))).collect();
    let sup = |s: &PowerSeries| s.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let tail = tail_product(a.tail_bound(), sup(b)).min(tail_product(b.tail_bound(), sup(a)));
    let r_ref = a.r_ref().min(b.r_ref());
    AnalyticMap::normalized(PowerSeries::new(coeffs, tail, r_ref)?)
}

/// `A[f](z) = ∫₀^z f(t)/t dt`: coefficient `n` becomes `a_n / n`.
pub fn alexander(f: &AnalyticMap) -> Result<AnalyticMap> {
    require_normalized(f, "Alexander transform")?;
    let s = f.series().map_coeffs(1.0, |k, c| if k == 0 { c } else { c / k as f64 });
    AnalyticMap::normalized(s)
}

/// `L[f](z) = (2/z) ∫₀^z f(t) dt`: coefficient `n` becomes `2 a_n / (n+1)`.
pub fn libera(f: &AnalyticMap) -> Result<AnalyticMap> {
    require_normalized(f, "Libera transform")?;
    let s = f.series().map_coeffs(1.0, |k, c| c * (2.0 / (k + 1) as f64));
    AnalyticMap::normalized(s)
}

fn kernel<F: Fn(usize) -> f64>(degree: usize, coeff: F) -> AnalyticMap {
    let mut coeffs = alloc::vec![Complex::new(0.0, 0.0)];
    coeffs.extend((1..=degree.max(1)).map(|k| Complex::new(coeff(k), 0.0)));
    // These kernels do not converge absolutely on the closed disk, so the
    // truncation carries no finite tail bound of its own.
    let s = PowerSeries::new(coeffs, f64::INFINITY, 1.0).expect("finite kernel coefficients");
    AnalyticMap::normalized(s).expect("normalized kernel")
}

/// `z/(1−z)` to the given degree: the identity for `∗`.
pub fn geometric_kernel(degree: usize) -> AnalyticMap {
    kernel(degree, |_| 1.0)
}

/// `−log(1−z)`, whose convolution is the Alexander transform.
pub fn alexander_kernel(degree: usize) -> AnalyticMap {
    kernel(degree, |k| 1.0 / k as f64)
}

/// `−2(z + log(1−z))/z`, whose convolution is the Libera transform.
pub fn libera_kernel(degree: usize) -> AnalyticMap {
    kernel(degree, |k| 2.0 / (k + 1) as f64)
}
