//! The blend data model: two truncated Taylor series, one at each end of
//! an interval, blended into a single Hermite interpolational polynomial.
//!
//! A blend of grade `(m, n)` matches `m + 1` Taylor coefficients at the
//! left endpoint and `n + 1` at the right, and represents a polynomial of
//! grade (degree at most) `m + n + 1`. The exact degree may be lower and
//! is never assumed.

use crate::error::BlendError;

/// A two-point Hermite interpolational polynomial.
///
/// Coefficients are stored in scaled `s`-units, where `z = a + s*(b - a)`
/// maps the interval to `[0, 1]`: `p[j] = f^(j)(a) * h^j / j!` and
/// `q[j] = f^(j)(b) * h^j / j!` with `h = b - a`. One of `p`, `q` may be
/// empty, in which case the blend degenerates to a plain Taylor
/// polynomial at the other end.
///
/// Values are immutable after construction and all operations are pure,
/// so blends can be shared freely across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct Blend {
    a: f64,
    b: f64,
    p: Vec<f64>,
    q: Vec<f64>,
}

impl Blend {
    /// Build a blend from endpoints and scaled coefficient arrays.
    ///
    /// The grade `(m, n)` is deduced from the array lengths: `m = p.len() - 1`
    /// and `n = q.len() - 1`. Exactly one of the arrays may be empty (a
    /// one-sided blend, grade `-1` on that side).
    pub fn new(a: f64, b: f64, p: Vec<f64>, q: Vec<f64>) -> Result<Self, BlendError> {
        if a == b {
            return Err(BlendError::EqualEndpoints(a));
        }
        if p.is_empty() && q.is_empty() {
            return Err(BlendError::NoCoefficients);
        }
        Ok(Blend { a, b, p, q })
    }

    /// Build a blend from raw derivative values `f^(j)(a)` and `f^(j)(b)`.
    ///
    /// Applies the `h^j / j!` scaling so that the stored coefficients live
    /// in `s`-units.
    pub fn from_derivatives(a: f64, b: f64, dp: &[f64], dq: &[f64]) -> Result<Self, BlendError> {
        if a == b {
            return Err(BlendError::EqualEndpoints(a));
        }
        let h = b - a;
        Blend::new(a, b, scale_derivatives(dp, h), scale_derivatives(dq, h))
    }

    /// Truncate to an explicitly requested grade, dropping higher-order
    /// coefficients. Grades larger than the stored arrays are left alone.
    ///
    /// A grade of `-1` empties that side entirely (useful for comparing a
    /// blend against its one-sided Taylor polynomials).
    pub fn truncated(&self, m: i64, n: i64) -> Result<Self, BlendError> {
        let take_p = self.p.len().min((m + 1).max(0) as usize);
        let take_q = self.q.len().min((n + 1).max(0) as usize);
        Blend::new(
            self.a,
            self.b,
            self.p[..take_p].to_vec(),
            self.q[..take_q].to_vec(),
        )
    }

    /// The blend of `g(s) = f(1 - s)`: coefficient arrays are exchanged
    /// with alternating signs, so that evaluating the result at `s` equals
    /// evaluating the original at `1 - s`.
    ///
    /// This is an involution on the coefficients.
    pub fn reflect(&self) -> Self {
        Blend {
            a: self.a,
            b: self.b,
            p: alternate_signs(&self.q),
            q: alternate_signs(&self.p),
        }
    }

    /// Left endpoint in `z`-units.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Right endpoint in `z`-units.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Interval width `b - a`.
    pub fn h(&self) -> f64 {
        self.b - self.a
    }

    /// Scaled Taylor coefficients at `s = 0`.
    pub fn p(&self) -> &[f64] {
        &self.p
    }

    /// Scaled Taylor coefficients at `s = 1`.
    pub fn q(&self) -> &[f64] {
        &self.q
    }

    /// Left grade: `p.len() - 1`, or `-1` for a right-sided blend.
    pub fn m(&self) -> i64 {
        self.p.len() as i64 - 1
    }

    /// Right grade: `q.len() - 1`, or `-1` for a left-sided blend.
    pub fn n(&self) -> i64 {
        self.q.len() as i64 - 1
    }

    /// Grade of the represented polynomial: degree at most `m + n + 1`.
    pub fn grade(&self) -> i64 {
        self.m() + self.n() + 1
    }
}

/// `d[j] * h^j / j!`, with the power/factorial ratio built incrementally
/// so neither factor overflows on its own.
fn scale_derivatives(d: &[f64], h: f64) -> Vec<f64> {
    let mut factor = 1.0;
    d.iter()
        .enumerate()
        .map(|(j, &v)| {
            if j > 0 {
                factor *= h / j as f64;
            }
            v * factor
        })
        .collect()
}

pub(crate) fn alternate_signs(w: &[f64]) -> Vec<f64> {
    w.iter()
        .enumerate()
        .map(|(j, &v)| if j % 2 == 0 { v } else { -v })
        .collect()
}
