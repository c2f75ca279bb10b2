//! Geometric function theory on the unit disk: the starlike and convex
//! quantities of a normalized map, the test for membership in `exp(𝔻)`, the
//! grid certifier for subordination to `e^z`, and the convolution operators.

mod certify;
mod ops;

pub use certify::{
    certify_subordination_to_exp, class_membership, CertificateStatus, ExpClass, SamplingPlan,
    SubordinationCertificate, INCONCLUSIVE_BAND, REFUTE_EXCESS,
};
pub use ops::{alexander, alexander_kernel, geometric_kernel, hadamard, libera, libera_kernel};

use crate::numerics::{principal_log, PowerSeries};
use crate::{Complex, Error, Result};

/// Quotient series are extended until their estimated tail drops below this.
const QUANTITY_TAIL_TARGET: f64 = 1e-15;
/// Hard cap on the degree of a quotient series.
pub const QUANTITY_MAX_DEGREE: usize = 4096;
const QUANTITY_MIN_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    /// Arbitrary analytic function given by its series.
    Raw,
    /// Member of 𝒜: `c_0 = 0` and `c_1 = 1` exactly.
    Normalized,
}

/// An analytic function on the disk, carried as its power series.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticMap {
    series: PowerSeries,
    kind: MapKind,
}

impl AnalyticMap {
    pub fn raw(series: PowerSeries) -> Self {
        Self { series, kind: MapKind::Raw }
    }

    /// Fails unless `c_0 = 0` and `c_1 = 1` hold exactly.
    pub fn normalized(series: PowerSeries) -> Result<Self> {
        if series.coeff(0) != Complex::new(0.0, 0.0) || series.coeff(1) != Complex::new(1.0, 0.0) {
            return Err(Error::Precondition(alloc::format!(
                "normalized map needs f(0) = 0 and f'(0) = 1, got c0 = {}, c1 = {}",
                series.coeff(0),
                series.coeff(1)
            )));
        }
        Ok(Self { series, kind: MapKind::Normalized })
    }

    /// The identity map `f(z) = z`.
    pub fn identity() -> Self {
        Self::normalized(PowerSeries::from_real(&[0.0, 1.0]).expect("finite")).expect("normalized")
    }

    pub fn series(&self) -> &PowerSeries {
        &self.series
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_normalized(&self) -> bool {
        self.kind == MapKind::Normalized
    }

    pub fn eval(&self, z: Complex) -> Result<Complex> {
        self.series.eval(z)
    }

    pub fn into_series(self) -> PowerSeries {
        self.series
    }
}

/// `(g + z g') / g = 1 + z g'/g`, extended until the coefficients have
/// visibly decayed.
fn log_derivative_quantity(g: &PowerSeries) -> Result<PowerSeries> {
    let num = g.map_coeffs(1.0, |k, c| c * (k + 1) as f64);
    let mut degree = (2 * g.len()).max(QUANTITY_MIN_DEGREE);
    loop {
        let q = PowerSeries::quotient(&num, g, degree)?;
        if q.tail_bound() <= QUANTITY_TAIL_TARGET || degree >= QUANTITY_MAX_DEGREE {
            let tail = q.tail_bound() + num.tail_bound();
            return Ok(q.with_tail_bound(tail));
        }
        degree = (degree * 2).min(QUANTITY_MAX_DEGREE);
    }
}

fn require_vanishing_origin(f: &AnalyticMap) -> Result<()> {
    if f.series.coeff(0) != Complex::new(0.0, 0.0) {
        return Err(Error::Precondition("map must vanish at the origin".into()));
    }
    Ok(())
}

/// Series of `z f'(z) / f(z)`, equal to 1 at the origin.
pub fn starlike_quantity(f: &AnalyticMap) -> Result<AnalyticMap> {
    require_vanishing_origin(f)?;
    let g = f.series.shift_down(1)?;
    if g.coeff(0) == Complex::new(0.0, 0.0) {
        return Err(Error::Degenerate("f(z)/z vanishes at the origin".into()));
    }
    Ok(AnalyticMap::raw(log_derivative_quantity(&g)?))
}

/// Series of `1 + z f''(z) / f'(z)`, equal to 1 at the origin.
pub fn convex_quantity(f: &AnalyticMap) -> Result<AnalyticMap> {
    require_vanishing_origin(f)?;
    let g = f.series.derivative();
    if g.coeff(0) == Complex::new(0.0, 0.0) {
        return Err(Error::Degenerate("f'(0) = 0".into()));
    }
    Ok(AnalyticMap::raw(log_derivative_quantity(&g)?))
}

/// Whether `w` lies in `exp(𝔻)`, together with `|Log w|` (infinite at 0).
///
/// `exp` is univalent on 𝔻 and `|Im u| < 1 < π` there, so the principal
/// logarithm recovers the preimage.
pub fn in_exp_disk(w: Complex) -> (bool, f64) {
    match principal_log(w) {
        Ok(log) => {
            let m = log.norm();
            (m < 1.0, m)
        }
        Err(_) => (false, f64::INFINITY),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{kummer_lambda_series, kummer_upsilon_series};
    use core::f64::consts::E;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn q_closed_form(z: Complex) -> Complex {
        let ez = z.exp();
        (ez * (1.0 - z + z * z) - 1.0) / (ez * (z - 1.0) + 1.0)
    }

    #[test]
    fn identity_quantities_are_one() {
        let id = AnalyticMap::identity();
        for q in [starlike_quantity(&id).unwrap(), convex_quantity(&id).unwrap()] {
            assert_eq!(q.series().coeff(0), c(1.0, 0.0));
            assert!(q.series().coeffs().iter().skip(1).all(|x| x.norm() == 0.0));
            assert_eq!(q.series().tail_bound(), 0.0);
        }
    }

    #[test]
    fn simple_algebraic_quantities() {
        let f = AnalyticMap::normalized(PowerSeries::from_real(&[0.0, 1.0, 1.0]).unwrap()).unwrap();
        let s = starlike_quantity(&f).unwrap();
        assert!((s.eval(c(0.5, 0.0)).unwrap() - c(4.0 / 3.0, 0.0)).norm() < 1e-14);
        // z/(1-z) up to a degree where the truncation is invisible at 0.3
        let mut coeffs = alloc::vec![0.0];
        coeffs.extend(core::iter::repeat_n(1.0, 80));
        let f = AnalyticMap::normalized(PowerSeries::from_real(&coeffs).unwrap()).unwrap();
        let k = convex_quantity(&f).unwrap();
        assert!((k.eval(c(0.3, 0.0)).unwrap() - c(13.0 / 7.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn figure_three_quantities_match_closed_form() {
        let ups = AnalyticMap::normalized(kummer_upsilon_series(c(2.0, 0.0), c(3.0, 0.0), 1.0).unwrap()).unwrap();
        let lam = AnalyticMap::normalized(kummer_lambda_series(c(1.0, 0.0), c(2.0, 0.0), 1.0).unwrap()).unwrap();
        let star = starlike_quantity(&ups).unwrap();
        let conv = convex_quantity(&lam).unwrap();
        for j in 0..100 {
            let z = Complex::from_polar(0.05 + 0.94 * (j % 10) as f64 / 9.0, 0.7 * j as f64);
            let expected = q_closed_form(z);
            assert!((star.eval(z).unwrap() - expected).norm() < 1e-10, "z = {z}");
            assert!((conv.eval(z).unwrap() - expected).norm() < 1e-10, "z = {z}");
        }
    }

    #[test]
    fn degenerate_inputs() {
        let f = AnalyticMap::raw(PowerSeries::from_real(&[0.0, 0.0, 1.0]).unwrap());
        assert!(matches!(starlike_quantity(&f), Err(Error::Degenerate(_))));
        assert!(matches!(convex_quantity(&f), Err(Error::Degenerate(_))));
        let g = AnalyticMap::raw(PowerSeries::from_real(&[1.0, 1.0]).unwrap());
        assert!(starlike_quantity(&g).is_err());
        assert!(AnalyticMap::normalized(PowerSeries::from_real(&[0.0, 2.0]).unwrap()).is_err());
    }

    #[test]
    fn exp_disk_examples() {
        assert_eq!(in_exp_disk(c(1.0, 0.0)), (true, 0.0));
        let (inside, m) = in_exp_disk(c(E, 0.0));
        assert!(!inside || m < 1.0);
        assert!((m - 1.0).abs() < 1e-15);
        let (inside, m) = in_exp_disk(c(0.5, 0.0));
        assert!(inside);
        assert!((m - core::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(in_exp_disk(c(0.0, 0.0)), (false, f64::INFINITY));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn exp_disk_sound_inside(r in 0.0f64..0.999_999, th in 0.0f64..core::f64::consts::TAU) {
            prop_assert!(in_exp_disk(Complex::from_polar(r, th).exp()).0);
        }

        #[test]
        fn exp_disk_sound_outside(r in 1.000_001f64..core::f64::consts::FRAC_PI_2, th in 0.0f64..core::f64::consts::TAU) {
            prop_assert!(!in_exp_disk(Complex::from_polar(r, th).exp()).0);
        }

        #[test]
        fn alexander_duality(coeffs in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 19)) {
            let mut cs = alloc::vec![c(0.0, 0.0), c(1.0, 0.0)];
            cs.extend(coeffs.iter().enumerate().map(|(k, &(a, b))| c(a, b) / ((k + 2) * (k + 2)) as f64));
            let f = AnalyticMap::normalized(PowerSeries::polynomial(cs).unwrap()).unwrap();
            let lhs = convex_quantity(&alexander(&f).unwrap()).unwrap();
            let rhs = starlike_quantity(&f).unwrap();
            let n = lhs.series().len().min(rhs.series().len());
            for k in 0..n {
                let (a, b) = (lhs.series().coeff(k), rhs.series().coeff(k));
                prop_assert!((a - b).norm() <= 1e-12 * b.norm().max(1.0), "k = {}: {} vs {}", k, a, b);
            }
        }
    }
}
