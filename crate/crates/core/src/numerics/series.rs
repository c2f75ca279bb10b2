use alloc::vec;
use alloc::vec::Vec;

use super::{ensure_finite, two_sum};
use crate::{Complex, Error, Result};

/// Every generated series carries at least this many coefficients unless it
/// terminates exactly.
pub const MIN_DEGREE: usize = 30;
/// Generation fails once this many terms have been produced without the
/// ratio test settling.
pub const MAX_TERMS: usize = 10_000;

/// Generation stops once the geometric majorant of the tail drops below this
/// fraction of the largest term.
const TAIL_REL: f64 = f64::EPSILON / 16.0;
/// Ratio below which the geometric majorant is trusted.
const MAJORANT_RATIO: f64 = 0.5;
/// Window length used when estimating the tail from computed coefficients.
const TAIL_WINDOW: usize = 8;

/// Truncated Taylor expansion `c_0 + c_1 z + ... + c_N z^N` about the origin.
///
/// `tail_bound` bounds the omitted part `sum_{k>N} |c_k| r_ref^k` when the
/// series comes from a convergent definition; it is `f64::INFINITY` when no
/// bound is known.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex>,
    tail_bound: f64,
    r_ref: f64,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex>, tail_bound: f64, r_ref: f64) -> Result<Self> {
        for &c in &coeffs {
            ensure_finite(c, "series coefficient")?;
        }
        if tail_bound.is_nan() || tail_bound < 0.0 {
            return Err(Error::Precondition("tail bound must be nonnegative".into()));
        }
        if !(r_ref > 0.0 && r_ref <= 1.0) {
            return Err(Error::Precondition(alloc::format!("reference radius {r_ref} outside (0, 1]")));
        }
        Ok(Self { coeffs, tail_bound, r_ref })
    }

    /// Exact polynomial, valid on the closed unit disk.
    pub fn polynomial(coeffs: Vec<Complex>) -> Result<Self> {
        Self::new(coeffs, 0.0, 1.0)
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::polynomial(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    /// Builds a series whose first nonzero coefficient sits at index `start`,
    /// with `c_{k+1} = c_k * ratio(k)` for `k >= start`.
    ///
    /// Terms are generated until the degree reaches [`MIN_DEGREE`], the scaled
    /// term ratio `|ratio(k)| r_ref` is below 1/2, and the geometric majorant
    /// of the remainder is negligible next to the largest term. The majorant
    /// assumes the ratios keep decreasing, which holds for every entire
    /// hypergeometric-type series used here. A coefficient that comes out
    /// exactly zero terminates the series with a zero tail.
    pub fn from_ratio<F>(start: usize, first: Complex, r_ref: f64, mut ratio: F) -> Result<Self>
    where
        F: FnMut(usize) -> Complex,
    {
        ensure_finite(first, "leading coefficient")?;
        let mut coeffs = vec![Complex::new(0.0, 0.0); start];
        coeffs.push(first);
        if first == Complex::new(0.0, 0.0) {
            return Self::new(coeffs, 0.0, r_ref);
        }
        let mut term = first;
        let mut k = start;
        let mut r_pow = libm::pow(r_ref, start as f64);
        let mut scale = first.norm() * r_pow;
        let tail_bound = loop {
            if coeffs.len() > MAX_TERMS {
                return Err(Error::NoConvergence { terms: MAX_TERMS });
            }
            let q = ratio(k);
            let next = term * q;
            ensure_finite(next, "series coefficient")?;
            if next.re == 0.0 && next.im == 0.0 {
                break 0.0;
            }
            let rho = q.norm() * r_ref;
            if k >= MIN_DEGREE && rho < MAJORANT_RATIO {
                let tail = term.norm() * r_pow * rho / (1.0 - rho);
                if tail <= TAIL_REL * scale {
                    break tail;
                }
            }
            coeffs.push(next);
            term = next;
            k += 1;
            r_pow *= r_ref;
            scale = scale.max(term.norm() * r_pow);
        };
        Self::new(coeffs, tail_bound, r_ref)
    }

    /// Exactly `count` coefficients `c_start, ..., c_{start+count-1}` from the
    /// same ratio recurrence, with a zero tail. Used for terminating series.
    pub fn from_ratio_exact<F>(start: usize, first: Complex, count: usize, r_ref: f64, mut ratio: F) -> Result<Self>
    where
        F: FnMut(usize) -> Complex,
    {
        let mut coeffs = vec![Complex::new(0.0, 0.0); start];
        let mut term = first;
        for k in start..start + count {
            ensure_finite(term, "series coefficient")?;
            coeffs.push(term);
            term *= ratio(k);
        }
        Self::new(coeffs, 0.0, r_ref)
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Coefficient `k`, zero past the stored degree.
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn r_ref(&self) -> f64 {
        self.r_ref
    }

    pub fn into_coeffs(self) -> Vec<Complex> {
        self.coeffs
    }

    /// Horner evaluation with the addition errors carried in a compensation
    /// term. Fails when `|z| > r_ref`.
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        ensure_finite(z, "evaluation point")?;
        let radius = z.norm();
        if radius > self.r_ref * (1.0 + 4.0 * f64::EPSILON) {
            return Err(Error::OutOfDomain { radius, r_ref: self.r_ref });
        }
        Ok(self.horner(z))
    }

    pub(crate) fn horner(&self, z: Complex) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        let mut comp = Complex::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            let p = acc * z;
            let (re, ere) = two_sum(p.re, c.re);
            let (im, eim) = two_sum(p.im, c.im);
            acc = Complex::new(re, im);
            comp = comp * z + Complex::new(ere, eim);
        }
        acc + comp
    }

    /// Term-by-term derivative. The tail bound is scaled by `2(N+1)/r_ref`,
    /// which dominates the differentiated geometric majorant when the term
    /// ratio is below 1/2 (a heuristic for series without that guarantee).
    pub fn derivative(&self) -> PowerSeries {
        let coeffs: Vec<Complex> = self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect();
        let n = self.coeffs.len() as f64;
        let tail = if self.tail_bound == 0.0 { 0.0 } else { self.tail_bound * 2.0 * (n + 1.0) / self.r_ref };
        PowerSeries { coeffs, tail_bound: tail, r_ref: self.r_ref }
    }

    pub fn scale(&self, factor: Complex) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
            tail_bound: self.tail_bound * factor.norm(),
            r_ref: self.r_ref,
        }
    }

    /// `alpha * self + beta * other`, valid on the smaller reference disk.
    pub fn linear_combination(&self, alpha: Complex, other: &PowerSeries, beta: Complex) -> PowerSeries {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| alpha * self.coeff(k) + beta * other.coeff(k)).collect();
        PowerSeries {
            coeffs,
            tail_bound: alpha.norm() * self.tail_bound + beta.norm() * other.tail_bound,
            r_ref: self.r_ref.min(other.r_ref),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> PowerSeries {
        let mut coeffs = vec![Complex::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs, tail_bound: self.tail_bound * libm::pow(self.r_ref, k as f64), r_ref: self.r_ref }
    }

    /// Division by `z^k`; the dropped low coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Result<PowerSeries> {
        if self.coeffs.iter().take(k).any(|c| c.re != 0.0 || c.im != 0.0) {
            return Err(Error::Degenerate(alloc::format!("series does not vanish to order {k} at the origin")));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().skip(k).copied().collect(),
            tail_bound: self.tail_bound / libm::pow(self.r_ref, k as f64),
            r_ref: self.r_ref,
        })
    }

    /// Applies `f(k, c_k)` to each coefficient; the tail is scaled by
    /// `tail_factor`.
    pub fn map_coeffs<F>(&self, tail_factor: f64, mut f: F) -> PowerSeries
    where
        F: FnMut(usize, Complex) -> Complex,
    {
        PowerSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(k, &c)| f(k, c)).collect(),
            tail_bound: self.tail_bound * tail_factor,
            r_ref: self.r_ref,
        }
    }

    pub fn with_tail_bound(mut self, tail_bound: f64) -> PowerSeries {
        self.tail_bound = tail_bound;
        self
    }

    /// Coefficients `0..=degree` of `num / den`, solved recursively. The tail
    /// bound of the result is the ratio-majorant estimate on the unit disk
    /// from the last computed coefficients.
    pub fn quotient(num: &PowerSeries, den: &PowerSeries, degree: usize) -> Result<PowerSeries> {
        let d0 = den.coeff(0);
        if d0.re == 0.0 && d0.im == 0.0 {
            return Err(Error::Degenerate("quotient denominator vanishes at the origin".into()));
        }
        let dens = den.coeffs();
        let mut q: Vec<Complex> = Vec::with_capacity(degree + 1);
        for n in 0..=degree {
            let mut acc = super::CompensatedSum::new();
            acc.add(num.coeff(n));
            for (k, &dk) in dens.iter().enumerate().skip(1).take(n) {
                acc.add(-dk * q[n - k]);
            }
            let qn = acc.value() / d0;
            ensure_finite(qn, "quotient coefficient")?;
            q.push(qn);
        }
        let tail = estimate_tail(&q, 1.0);
        Ok(PowerSeries { coeffs: q, tail_bound: tail, r_ref: 1.0 })
    }
}

/// Ratio-majorant estimate of `sum_{k>N} |c_k| r^k` from the decay of the
/// last two windows of coefficients; infinite when no decay is visible.
pub(crate) fn estimate_tail(coeffs: &[Complex], r: f64) -> f64 {
    let n = coeffs.len();
    let weighted = |k: usize| coeffs[k].norm() * libm::pow(r, k as f64);
    if n < 2 * TAIL_WINDOW {
        return if coeffs.iter().all(|c| c.norm() == 0.0) { 0.0 } else { f64::INFINITY };
    }
    let last = (n - TAIL_WINDOW..n).map(weighted).fold(0.0, f64::max);
    if last == 0.0 {
        return 0.0;
    }
    let prev = (n - 2 * TAIL_WINDOW..n - TAIL_WINDOW).map(weighted).fold(0.0, f64::max);
    if prev == 0.0 {
        return f64::INFINITY;
    }
    let rho = libm::pow(last / prev, 1.0 / TAIL_WINDOW as f64);
    if rho >= 1.0 {
        return f64::INFINITY;
    }
    last * rho / (1.0 - rho)
}
