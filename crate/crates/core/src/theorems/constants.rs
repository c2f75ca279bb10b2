//! Composite constants of the sufficient conditions, computed from `e` and
//! `sin 1` at call time.

use core::f64::consts::E;

fn sin1() -> f64 {
    libm::sin(1.0)
}

/// `(e−1)²(e+1)/e²`, the bound shared by the convex and starlike Kummer
/// conditions.
pub fn kummer_convex_bound() -> f64 {
    (E - 1.0) * (E - 1.0) * (E + 1.0) / (E * E)
}

/// `(e³ − 2e² − e + 1)/(e²(e−1))`: admissible `|δ − 1|` for `g_δ`.
pub fn g_delta_radius() -> f64 {
    (E * E * E - 2.0 * E * E - E + 1.0) / (E * E * (E - 1.0))
}

/// `(e² − 1)/e²`: admissible `|δ − 2|` for `h_δ`.
pub fn h_delta_radius() -> f64 {
    (E * E - 1.0) / (E * E)
}

/// Right side of the Lommel convexity inequality.
pub fn lommel_convex_rhs() -> f64 {
    libm::pow(E, 4.0) - 3.0 * E * E * E + 13.0 * E * E / 4.0 - 3.0 * E / 4.0 - 3.0 / E + 2.0 - 2.0 * sin1()
}

/// Coefficient of `μ` on the left of the Lommel convexity inequality.
pub fn lommel_convex_mu_factor() -> f64 {
    1.0 + 2.0 * sin1()
}

/// Right side of the condition for the Alexander transform of `h_{μ,ν}`.
pub fn lommel_alexander_rhs() -> f64 {
    E * E * E - E * E + 13.0 * E / 4.0 - 4.0
}

/// `(2/e)(4 sin 1 + 3 − e)`: the left side of the Struve convexity
/// condition is this times `κ`.
pub fn struve_convex_kappa_factor() -> f64 {
    2.0 / E * (4.0 * sin1() + 3.0 - E)
}

fn struve_convex_constant() -> f64 {
    4.0 * libm::pow(E - 1.0, 3.0) + 6.0 * (E - 1.0) * (E - 1.0) + 6.0 / E - 12.0 / (E * E)
}

/// Right side of the Struve convexity condition for a given `|c|`.
pub fn struve_convex_rhs(c_abs: f64) -> f64 {
    (E + 1.0) * c_abs + struve_convex_constant()
}

/// Lower bound on `ν` for the normalized Struve `𝓗_ν` and `𝓛_ν` results.
pub fn struve_order_threshold() -> f64 {
    E / (8.0 * sin1() + 6.0 - 2.0 * E) * (struve_convex_constant() + (E + 1.0)) - 1.5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        // Independently evaluated to 30 digits and rounded.
        assert!((kummer_convex_bound() - 1.485_737_670_524_215_6).abs() < 1e-14);
        assert!((g_delta_radius() - 0.282_688_009_894_060_9).abs() < 1e-14);
        assert!((h_delta_radius() - 0.864_664_716_763_387_3).abs() < 1e-14);
        assert!((lommel_convex_rhs() - 15.530_679_920_631_445).abs() < 1e-12);
        assert!((lommel_alexander_rhs() - 17.530_896_766_748_915).abs() < 1e-12);
    }

    #[test]
    fn struve_threshold_is_the_kappa_threshold_at_unit_c() {
        let kappa = struve_convex_rhs(1.0) / struve_convex_kappa_factor();
        assert!((struve_order_threshold() + 1.5 - kappa).abs() < 1e-12);
        assert!((kappa - 15.765).abs() < 1e-3);
    }
}
