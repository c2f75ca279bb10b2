use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Complex, Error, Result};

const RULE_POINTS: usize = 20;
const MAX_DEPTH: usize = 48;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`,
/// found by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_rule(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if libm::fabs(dx) < 1e-16 {
                dp = legendre_with_derivative(n, x).1;
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn apply_rule<F: FnMut(f64) -> Complex>(rule: &[(f64, f64)], f: &mut F, a: f64, b: f64) -> Complex {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = Complex::new(0.0, 0.0);
    for &(x, w) in rule {
        acc += f(mid + half * x) * w;
    }
    acc * half
}

/// Adaptive Gauss–Legendre integration of a complex integrand over `[a, b]`.
///
/// Each panel is accepted when the 20-point rule on the panel agrees with the
/// sum over its two halves to within the panel's share of `abs_tol`.
pub fn integrate_adaptive<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> Result<Complex>
where
    F: FnMut(f64) -> Complex,
{
    let rule = gauss_legendre_rule(RULE_POINTS);
    let whole = apply_rule(&rule, &mut f, a, b);
    let mut stack: Vec<(f64, f64, Complex, usize)> = alloc::vec![(a, b, whole, 0)];
    let mut total = Complex::new(0.0, 0.0);
    let width = b - a;
    while let Some((lo, hi, coarse, depth)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = apply_rule(&rule, &mut f, lo, mid);
        let right = apply_rule(&rule, &mut f, mid, hi);
        let fine = left + right;
        let tol = abs_tol * (hi - lo) / width;
        if (fine - coarse).norm() <= tol {
            total += fine;
        } else if depth >= MAX_DEPTH {
            return Err(Error::NoConvergence { terms: depth });
        } else {
            stack.push((lo, mid, left, depth + 1));
            stack.push((mid, hi, right, depth + 1));
        }
    }
    if total.re.is_finite() && total.im.is_finite() {
        Ok(total)
    } else {
        Err(Error::NonFinite("quadrature"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = gauss_legendre_rule(RULE_POINTS);
        let wsum: f64 = rule.iter().map(|r| r.1).sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        // x^38 is the highest even degree the rule is exact for
        let m: f64 = rule.iter().map(|&(x, w)| w * x.powi(38)).sum();
        assert!((m - 2.0 / 39.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_handles_oscillation() {
        let v = integrate_adaptive(|t| Complex::new(0.0, 40.0 * t).exp(), 0.0, 1.0, 1e-13).unwrap();
        let exact = (Complex::new(0.0, 40.0).exp() - 1.0) / Complex::new(0.0, 40.0);
        assert!((v - exact).norm() < 1e-12);
    }

    #[test]
    fn adaptive_handles_endpoint_sqrt() {
        let v = integrate_adaptive(|t| Complex::new(t.sqrt(), 0.0), 0.0, 1.0, 1e-12).unwrap();
        assert!((v.re - 2.0 / 3.0).abs() < 1e-11);
    }
}
