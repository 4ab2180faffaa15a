//! Blends: two-point Hermite interpolational polynomials built from
//! truncated Taylor series at both ends of an interval.
//!
//! Two Taylor series for the same function, one at each endpoint, combine
//! into a single polynomial of grade (degree at most) `m + n + 1` that
//! matches `m + 1` derivatives on the left and `n + 1` on the right. The
//! result usually approximates far better than either series alone, and
//! it can be worked with cheaply and stably:
//!
//! * evaluation and arbitrary-order derivatives in `O(m + n)` per point
//!   via an adapted Horner scheme ([`Blend::eval`],
//!   [`Blend::eval_derivatives`]);
//! * exact full-interval integration and antiderivative blends
//!   ([`Blend::integrate`], [`Blend::antiderivative`]);
//! * exact-rational quadrature rules of exactness degree `m + n + 1`
//!   ([`calculus::quadrature_weights`]);
//! * conditioning analysis via the Lebesgue function, rounding-error
//!   bounds, and an exact-rational oracle ([`analysis`]);
//! * piecewise "strings of blends" over knot sequences with composite
//!   quadrature ([`BlendString`]).
//!
//! ```
//! use blends::Blend;
//!
//! // blend f(z) = z^3 on [0, 1] from value+derivative data at both ends
//! let bl = Blend::from_derivatives(0.0, 1.0, &[0.0, 0.0], &[1.0, 3.0]).unwrap();
//! assert!((bl.eval(0.5) - 0.125).abs() < 1e-15);     // cubics reproduce exactly
//! assert!((bl.integrate() - 0.25).abs() < 1e-15);    // and integrate exactly
//! ```
//!
//! The `examples/` directory walks through each capability; the `blend`
//! binary exposes them on the command line.

pub mod analysis;
pub mod blend;
pub mod calculus;
pub mod error;
pub mod eval;
pub mod generators;
pub mod io;
pub mod jet;
mod rational;
pub mod scalar;
pub mod string;

pub use blend::Blend;
pub use calculus::{
    integration_error_bound, quadrature_weights, truncation_error_bound, QuadratureRule,
};
pub use error::BlendError;
pub use eval::hsf;
pub use jet::Jet;
pub use scalar::Scalar;
pub use string::BlendString;
