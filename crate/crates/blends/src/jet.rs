//! Truncated Taylor polynomials ("jets") used to carry derivatives
//! through the Horner kernel.
//!
//! A jet of order `nder` holds coefficients `c_0..c_nder`; coefficient
//! `k` is the k-th derivative of the carried value divided by `k!`.
//! Running the evaluation kernel on jets seeded with `(s, 1, 0, ...)`
//! yields the value and all derivatives up to `nder` in one pass.

use crate::scalar::Scalar;

/// A truncated Taylor polynomial of fixed order.
///
/// Arithmetic is closed at the construction order. Every operation the
/// kernel needs keeps cost linear in the order: addition, scaling by a
/// constant, and multiplication by an *affine* jet `a0 + a1*t` (the only
/// kind of jet the evaluation variable ever produces).
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Jet<T> {
    /// Jet with value `v` and all derivatives zero.
    pub fn constant(order: usize, v: T) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[0] = v;
        Jet { coeffs }
    }

    /// Jet seeded as the evaluation variable: `(v, 1, 0, ...)`.
    pub fn variable(order: usize, v: T) -> Self {
        let mut jet = Jet::constant(order, v);
        if order >= 1 {
            jet.coeffs[1] = T::one();
        }
        jet
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn value(&self) -> T {
        self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Elementwise sum. Both jets must have the same order.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "jet order mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&x, &y)| x + y)
            .collect();
        Jet { coeffs }
    }

    /// Multiply every coefficient by the constant `c`.
    pub fn scale(&self, c: T) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    /// Divide every coefficient by the constant `c`.
    pub fn div_scale(&self, c: T) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|&x| x / c).collect(),
        }
    }

    /// Multiply by the affine jet `a0 + a1*t`, truncated at this order.
    ///
    /// Coefficient `k` of the product is `c_k*a0 + c_{k-1}*a1`, so the cost
    /// is linear in the order and coefficient `k` of the result depends only
    /// on coefficients `<= k` of the input: lower-order jets are exact
    /// prefixes of higher-order ones.
    pub fn mul_affine(&self, a0: T, a1: T) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n);
        coeffs.push(self.coeffs[0] * a0);
        for k in 1..n {
            coeffs.push(self.coeffs[k] * a0 + self.coeffs[k - 1] * a1);
        }
        Jet { coeffs }
    }

    /// Full truncated product (Cauchy convolution up to the order).
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "jet order mismatch");
        let n = self.coeffs.len();
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let mut acc = T::zero();
            for i in 0..=k {
                acc = acc + self.coeffs[i] * rhs.coeffs[k - i];
            }
            *c = acc;
        }
        Jet { coeffs }
    }
}
