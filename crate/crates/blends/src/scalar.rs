//! The scalar abstraction shared by every evaluation path.
//!
//! Blends store binary64 coefficients but can be evaluated at real or
//! complex points with the same code. The accuracy contract (backward
//! stability, Lebesgue bounds) only covers real points in `[0, 1]`;
//! complex evaluation works but amplification grows quickly away from
//! the interval.

use num_traits::Num;
use std::fmt::Debug;
use std::ops::Neg;

/// Types a blend can be evaluated at: `f64` and `Complex64`.
///
/// The bound set is exactly what the Horner kernel needs: ring/field ops,
/// negation, and lifting of real constants.
pub trait Scalar: Num + Neg<Output = Self> + Copy + Debug + From<f64> + 'static {}

impl<T> Scalar for T where T: Num + Neg<Output = Self> + Copy + Debug + From<f64> + 'static {}
