//! Complex elementary functions, gamma and Pochhammer symbols, compensated
//! summation, truncated power series and Gauss–Legendre quadrature.

mod quad;
mod series;

pub use quad::{gauss_legendre_rule, integrate_adaptive};
pub use series::{PowerSeries, MAX_TERMS, MIN_DEGREE};

use crate::{Complex, Error, Result};
use core::f64::consts::PI;

/// Lanczos parameter and coefficients for `g = 7`, `n = 9`.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn ensure_finite(z: Complex, what: &'static str) -> Result<Complex> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// True when `z` is one of `0, -1, -2, ...`.
pub fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && libm::floor(z.re) == z.re
}

/// Principal logarithm with imaginary part in `(-π, π]`.
pub fn principal_log(w: Complex) -> Result<Complex> {
    ensure_finite(w, "principal_log argument")?;
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    let modulus = libm::hypot(w.re, w.im);
    // atan2 returns -π on the negative real axis when im is -0.0
    let arg = if w.im == 0.0 && w.re < 0.0 { PI } else { libm::atan2(w.im, w.re) };
    Ok(Complex::new(libm::log(modulus), arg))
}

/// Euler gamma function via the Lanczos approximation, with reflection for
/// `Re z < 1/2`.
pub fn complex_gamma(z: Complex) -> Result<Complex> {
    ensure_finite(z, "gamma argument")?;
    if is_nonpositive_integer(z) {
        return Err(Error::Domain(alloc::format!("gamma pole at z = {}", z.re)));
    }
    if z.im == 0.0 && z.re <= 171.0 && libm::floor(z.re) == z.re {
        // exact factorial while representable
        let mut acc = 1.0;
        for k in 2..(z.re as u32) {
            acc *= k as f64;
        }
        return Ok(Complex::new(acc, 0.0));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex) -> Complex {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return PI / (s * gamma_unchecked(Complex::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &p) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let log_part = (z + 0.5) * t.ln() - t;
    libm::sqrt(2.0 * PI) * log_part.exp() * x
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: Complex, n: usize) -> Complex {
    let mut acc = Complex::new(1.0, 0.0);
    for k in 0..n {
        acc *= x + k as f64;
    }
    acc
}

/// Error-free sum of two doubles (Knuth's TwoSum).
#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Running complex sum with Kahan–Babuška compensation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex,
    comp: Complex,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Complex) {
        let (re, ere) = two_sum(self.sum.re, term.re);
        let (im, eim) = two_sum(self.sum.im, term.im);
        self.sum = Complex::new(re, im);
        self.comp += Complex::new(ere, eim);
    }

    pub fn value(&self) -> Complex {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn rel(a: Complex, b: Complex) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn log_examples() {
        assert_eq!(principal_log(c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        let one = principal_log(c(core::f64::consts::E, 0.0)).unwrap();
        assert!((one - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(principal_log(c(-1.0, 0.0)).unwrap(), c(0.0, PI));
        assert_eq!(principal_log(c(-1.0, -0.0)).unwrap(), c(0.0, PI));
        assert!(matches!(principal_log(c(0.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(principal_log(c(f64::NAN, 0.0)), Err(Error::NonFinite(_))));
    }

    #[test]
    fn gamma_examples() {
        assert!(rel(complex_gamma(c(1.0, 0.0)).unwrap(), c(1.0, 0.0)) < 1e-14);
        assert!(rel(complex_gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0)) < 1e-14);
        let sqrt_pi = libm::sqrt(PI);
        assert!(rel(complex_gamma(c(0.5, 0.0)).unwrap(), c(sqrt_pi, 0.0)) < 1e-14);
        for k in 0..5 {
            assert!(complex_gamma(c(-(k as f64), 0.0)).is_err());
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(c(3.0, 0.0), 0), c(1.0, 0.0));
        assert_eq!(pochhammer(c(2.0, 0.0), 2), c(6.0, 0.0));
        assert_eq!(pochhammer(c(1.5, 0.0), 2), c(3.75, 0.0));
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let mut s = CompensatedSum::new();
        s.add(c(1e16, 0.0));
        s.add(c(1.0, 0.0));
        s.add(c(-1e16, 0.0));
        assert_eq!(s.value(), c(1.0, 0.0));
    }

    proptest! {
        #[test]
        fn exp_inverts_log(lm in -6.0f64..6.0, arg in -core::f64::consts::PI..core::f64::consts::PI) {
            let w = Complex::from_polar(libm::pow(10.0, lm), arg);
            let back = principal_log(w).unwrap().exp();
            prop_assert!(rel(back, w) < 1e-13);
        }

        #[test]
        fn pochhammer_step(re in -20.0f64..20.0, im in -5.0f64..5.0, n in 0usize..40) {
            let x = c(re, im);
            prop_assert_eq!(pochhammer(x, n + 1), pochhammer(x, n) * (x + n as f64));
        }

        #[test]
        fn gamma_recurrence(re in -20.0f64..20.0, im in -20.0f64..20.0) {
            let z = c(re, im);
            let nearest = libm::round(re);
            prop_assume!(!(nearest <= 0.0 && (z - c(nearest, 0.0)).norm() < 0.1));
            prop_assume!((z + 1.0).norm() <= 50.0);
            let lhs = complex_gamma(z + 1.0).unwrap();
            let rhs = z * complex_gamma(z).unwrap();
            prop_assert!(rel(lhs, rhs) < 1e-11, "z = {z}: {lhs} vs {rhs}");
        }
    }
}
