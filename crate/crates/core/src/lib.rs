//! Power-series evaluation of the confluent hypergeometric, normalized Lommel
//! and generalized Struve functions, together with a grid certifier for
//! subordination to `e^z` on the unit disk.
//!
//! The crate is `no_std` and needs only an allocator. Elementary functions go
//! through `libm`.
//!
//! Layout:
//!
//! - [`numerics`]: complex log/gamma/Pochhammer, truncated power series, quadrature.
//! - [`specfun`]: the special function families as series, with ODE residual checks.
//! - [`geometry`]: starlike/convex quantities, the exp-disk test, the certifier,
//!   Hadamard products and the Alexander/Libera operators.
//! - [`theorems`]: hypothesis checkers and claimed members for every result.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod geometry;
pub mod numerics;
pub mod specfun;
pub mod theorems;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex scalar used throughout the crate.
pub type Complex = Complex64;
