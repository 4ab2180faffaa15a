//! Exact integration of blends, antiderivative blends, quadrature rules,
//! and the truncation/integration error bounds.
//!
//! The full-interval integral of a grade-`(m, n)` blend is a weighted sum
//! of its coefficients with weights that are exact rationals. Weights are
//! computed with exact integer factorials and converted to binary64 only
//! when a rule is applied: factorials overflow binary64 near `171!` while
//! the weight ratios themselves stay moderate.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::blend::Blend;
use crate::error::BlendError;
use crate::rational::{factorial, ratio_to_f64};

/// Exact weight vectors for integrating a grade-`(m, n)` blend over the
/// unit interval: `integral = sum_j wp[j] p[j] + sum_j wq[j] q[j]`.
///
/// The rule integrates every polynomial of degree up to `m + n + 1`
/// exactly (in exact arithmetic). The alternating signs of the right-hand
/// sum are folded into `wq`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    m: i64,
    n: i64,
    wp: Vec<BigRational>,
    wq: Vec<BigRational>,
}

impl QuadratureRule {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Weights applied to the left coefficients `p`.
    pub fn wp(&self) -> &[BigRational] {
        &self.wp
    }

    /// Weights applied to the right coefficients `q` (signs included).
    pub fn wq(&self) -> &[BigRational] {
        &self.wq
    }

    /// Largest polynomial degree integrated exactly.
    pub fn exactness_grade(&self) -> i64 {
        self.m + self.n + 1
    }

    /// Apply the rule to scaled coefficient arrays, rounding each weight
    /// to binary64 at application time. Terms are accumulated left to
    /// right, `p` first.
    pub fn apply(&self, p: &[f64], q: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (w, &c) in self.wp.iter().zip(p) {
            acc += ratio_to_f64(w) * c;
        }
        for (w, &c) in self.wq.iter().zip(q) {
            acc += ratio_to_f64(w) * c;
        }
        acc
    }
}

/// Exact quadrature weights for a grade-`(m, n)` blend on `[0, 1]`:
///
/// ```text
/// wp[j] = (m+1)!/(m+n+2)! * (n+m-j+1)!/((j+1)(m-j)!)
/// wq[j] = (-1)^j (n+1)!/(m+n+2)! * (n+m-j+1)!/((j+1)(n-j)!)
/// ```
///
/// Either grade may be `-1` (empty side); the formula then degenerates to
/// the plain Taylor-polynomial integral `wp[j] = 1/(j+1)`.
pub fn quadrature_weights(m: i64, n: i64) -> QuadratureRule {
    assert!(m >= -1 && n >= -1, "grades must be at least -1");
    let total = factorial((m + n + 2).max(0) as u64);

    let wp = side_weights(m, n, &total);
    let mut wq = side_weights(n, m, &total);
    for (j, w) in wq.iter_mut().enumerate() {
        if j % 2 == 1 {
            *w = -w.clone();
        }
    }
    QuadratureRule { m, n, wp, wq }
}

/// Unsigned weights for one side: `(m+1)!/(m+n+2)! * (n+m-j+1)!/((j+1)(m-j)!)`.
fn side_weights(m: i64, n: i64, total: &BigInt) -> Vec<BigRational> {
    if m < 0 {
        return Vec::new();
    }
    let lead = factorial((m + 1) as u64);
    (0..=m as u64)
        .map(|j| {
            let num = &lead * factorial((n + m - j as i64 + 1) as u64);
            let den = total * (j + 1) * factorial(m as u64 - j);
            BigRational::new(num, den)
        })
        .collect()
}

impl Blend {
    /// Exact (up to roundoff) integral of the blend over `[0, 1]` in
    /// `s`-units.
    pub fn integrate_unit(&self) -> f64 {
        quadrature_weights(self.m(), self.n()).apply(self.p(), self.q())
    }

    /// Exact (up to roundoff) integral over `[a, b]`: `h` times the
    /// unit-interval integral.
    pub fn integrate(&self) -> f64 {
        self.h() * self.integrate_unit()
    }

    /// Blend of the running integral `F(x) = f0 + int_0^x H(s) ds`
    /// (in `s`-units), a grade-`(m+1, n+1)` blend on the same interval.
    ///
    /// The represented polynomial actually has degree at most `m + n + 2`,
    /// one lower than the new grade; the redundant highest coefficient is
    /// kept rather than trimmed.
    pub fn antiderivative(&self, f0: f64) -> Blend {
        let full = self.integrate_unit();

        let mut p = Vec::with_capacity(self.p().len() + 1);
        p.push(f0);
        p.extend(
            self.p()
                .iter()
                .enumerate()
                .map(|(j, &c)| c / (j + 1) as f64),
        );

        let mut q = Vec::with_capacity(self.q().len() + 1);
        q.push(f0 + full);
        q.extend(
            self.q()
                .iter()
                .enumerate()
                .map(|(j, &c)| c / (j + 1) as f64),
        );

        Blend::new(self.a(), self.b(), p, q).expect("endpoints already validated")
    }
}

/// Bound on `|f - H|` over `[0, 1]` for a grade-`(m, n)` blend of `f`,
/// given a bound `M >= |f^(m+n+2)|` on the interval:
///
/// ```text
/// M/(m+n+2)! * max_{s in [0,1]} s^(m+1) (1-s)^(n+1)
/// ```
///
/// The maximizer is `s* = (m+1)/(m+n+2)`. Computed in log scale so large
/// grades underflow gracefully instead of overflowing the factorial.
pub fn truncation_error_bound(m: i64, n: i64, big_m: f64) -> Result<f64, BlendError> {
    if big_m < 0.0 {
        return Err(BlendError::NegativeBound(big_m));
    }
    if big_m == 0.0 {
        return Ok(0.0);
    }
    let mp = (m + 1) as f64;
    let np = (n + 1) as f64;
    // max of s^(m+1)(1-s)^(n+1); an exponent of zero pushes the peak to
    // the corresponding endpoint where the factor is 1
    let ln_peak = if m + 1 == 0 || n + 1 == 0 {
        0.0
    } else {
        let st = mp / (mp + np);
        mp * st.ln() + np * (1.0 - st).ln()
    };
    Ok((big_m.ln() - ln_factorial(m + n + 2) + ln_peak).exp())
}

/// Bound on the full-interval integration error of a grade-`(m, n)` rule,
/// `(m+1)!(n+1)!/(m+n+3)! * M/(m+n+2)!`, from the mean value theorem for
/// integrals.
pub fn integration_error_bound(m: i64, n: i64, big_m: f64) -> Result<f64, BlendError> {
    if big_m < 0.0 {
        return Err(BlendError::NegativeBound(big_m));
    }
    let num = factorial((m + 1).max(0) as u64) * factorial((n + 1).max(0) as u64);
    let den = factorial((m + n + 3).max(0) as u64) * factorial((m + n + 2).max(0) as u64);
    Ok(ratio_to_f64(&BigRational::new(num, den)) * big_m)
}

fn ln_factorial(k: i64) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}
