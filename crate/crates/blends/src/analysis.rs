//! Conditioning and rounding-error analysis: the Lebesgue function of the
//! blend basis, the standard gamma rounding-error bounds, binomial-growth
//! diagnostics, and an exact-rational reference evaluator.
//!
//! Inside `[0, 1]` every basis term is positive, so the Lebesgue function
//! is itself a blend (all left coefficients 1, alternating right
//! coefficients) and is evaluated by the fast kernel. Outside the
//! interval the per-term absolute values are applied explicitly.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::blend::Blend;
use crate::error::BlendError;
use crate::eval::hsf;
use crate::rational::{binomial, ratio_abs, ratio_from_f64, ratio_to_f64};

/// Unit roundoff of binary64 round-to-nearest: `2^-53`.
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// The standard accumulated-rounding bound `gamma_j = j*mu / (1 - j*mu)`,
/// valid while `j*mu < 1`. A perturbation accumulated over `j` rounding
/// errors is bounded in relative size by `gamma_j`.
pub fn gamma_bound(j: u64, mu: f64) -> Result<f64, BlendError> {
    let jm = j as f64 * mu;
    if !(0.0..1.0).contains(&jm) {
        return Err(BlendError::GammaOutOfRange { j, mu });
    }
    Ok(jm / (1.0 - jm))
}

/// Rounding-error model: a working-precision unit roundoff and a count of
/// accumulated rounding errors.
#[derive(Clone, Copy, Debug)]
pub struct ErrorModelParams {
    mu: f64,
    j: u64,
}

impl ErrorModelParams {
    pub fn new(j: u64, mu: f64) -> Result<Self, BlendError> {
        gamma_bound(j, mu)?;
        Ok(ErrorModelParams { mu, j })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn gamma(&self) -> f64 {
        gamma_bound(self.j, self.mu).expect("validated at construction")
    }
}

/// Backward-error bound on the left coefficients of a grade-`(m, n)`
/// blend evaluated in binary64 on `[0, 1]`: each `p_j` is perturbed by at
/// most `gamma_{3m+2n+4}` in relative size.
pub fn backward_gamma_p(m: i64, n: i64) -> f64 {
    gamma_bound((3 * m + 2 * n + 4).max(0) as u64, UNIT_ROUNDOFF).expect("grade out of range")
}

/// Backward-error bound on the right coefficients: `gamma_{2m+3n+4}`.
pub fn backward_gamma_q(m: i64, n: i64) -> f64 {
    gamma_bound((2 * m + 3 * n + 4).max(0) as u64, UNIT_ROUNDOFF).expect("grade out of range")
}

/// Lebesgue function of the grade-`(m, n)` blend basis at `s`: the sum of
/// absolute values of every term multiplying a coefficient.
///
/// Inside `[0, 1]` this equals the blend with all `p_j = 1` and
/// `q_j = (-1)^j` (every term is already positive) and costs `O(m + n)`;
/// outside, absolute values are applied per term.
pub fn lebesgue(m: i64, n: i64, s: f64) -> f64 {
    if (0.0..=1.0).contains(&s) {
        let ones_p = vec![1.0; (m + 1).max(0) as usize];
        let ones_q = vec![1.0; (n + 1).max(0) as usize];
        hsf(m, n, s, &ones_p) + hsf(n, m, 1.0 - s, &ones_q)
    } else {
        lebesgue_half(m, n, s) + lebesgue_half(n, m, 1.0 - s)
    }
}

/// One half of the Lebesgue sum with explicit absolute values:
/// `sum_j |sigma|^j |1-sigma|^(n+1) |sum_{k<=m-j} C(n+k,k) sigma^k|`.
fn lebesgue_half(m: i64, n: i64, sigma: f64) -> f64 {
    if m < 0 {
        return 0.0;
    }
    let mu = m as usize;
    let mut a = vec![0.0; mu + 1];
    a[0] = 1.0;
    for k in 1..=mu {
        a[k] = a[k - 1] * sigma * (n + k as i64) as f64 / k as f64;
    }
    for k in 1..=mu {
        a[k] += a[k - 1];
    }
    let abs_s = sigma.abs();
    let mut u = 0.0;
    for j in (0..=mu).rev() {
        u = a[mu - j].abs() + abs_s * u;
    }
    let mut c = 1.0;
    for _ in 0..(n + 1).max(0) {
        c *= (1.0 - sigma).abs();
    }
    c * u
}

/// A blend with exact rational data, the reference oracle for the
/// floating-point evaluator.
///
/// Evaluation expands the defining double sum term by term in exact
/// rational arithmetic. This path is independent of the Horner kernel and
/// is intended for test-time use; it is far slower than the fast path.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactBlend {
    pub a: BigRational,
    pub b: BigRational,
    pub p: Vec<BigRational>,
    pub q: Vec<BigRational>,
}

impl ExactBlend {
    /// Exact mirror of a binary64 blend (every finite binary64 value is a
    /// rational).
    pub fn from_blend(blend: &Blend) -> Option<Self> {
        let lift = |w: &[f64]| -> Option<Vec<BigRational>> {
            w.iter().map(|&x| ratio_from_f64(x)).collect()
        };
        Some(ExactBlend {
            a: ratio_from_f64(blend.a())?,
            b: ratio_from_f64(blend.b())?,
            p: lift(blend.p())?,
            q: lift(blend.q())?,
        })
    }

    /// Round to the binary64 working type.
    pub fn to_blend(&self) -> Result<Blend, BlendError> {
        Blend::new(
            ratio_to_f64(&self.a),
            ratio_to_f64(&self.b),
            self.p.iter().map(ratio_to_f64).collect(),
            self.q.iter().map(ratio_to_f64).collect(),
        )
    }

    pub fn m(&self) -> i64 {
        self.p.len() as i64 - 1
    }

    pub fn n(&self) -> i64 {
        self.q.len() as i64 - 1
    }

    /// Evaluate the blend at a rational `s`, term by term.
    pub fn eval(&self, s: &BigRational) -> BigRational {
        let m = self.m();
        let n = self.n();
        let one_minus_s = BigRational::one() - s;

        // powers of s up to index m+1 and of (1-s) up to index n+1
        let s_pows = powers(s, (m + 2).max(1) as usize);
        let t_pows = powers(&one_minus_s, (n + 2).max(1) as usize);

        let mut acc = BigRational::zero();
        for j in 0..=m {
            let mut inner = BigRational::zero();
            for k in 0..=(m - j) {
                inner += BigRational::from(binomial((n + k) as u64, k as u64))
                    * &s_pows[(k + j) as usize];
            }
            acc += &self.p[j as usize] * inner * &t_pows[(n + 1).max(0) as usize];
        }
        for j in 0..=n {
            let mut inner = BigRational::zero();
            for k in 0..=(n - j) {
                inner += BigRational::from(binomial((m + k) as u64, k as u64))
                    * &t_pows[(k + j) as usize];
            }
            let signed = if j % 2 == 0 {
                self.q[j as usize].clone()
            } else {
                -self.q[j as usize].clone()
            };
            acc += signed * inner * &s_pows[(m + 1).max(0) as usize];
        }
        acc
    }

    /// Exact integral over `[a, b]`: `h` times the exact unit-interval
    /// rule applied to the rational coefficients.
    pub fn integrate(&self) -> BigRational {
        let rule = crate::calculus::quadrature_weights(self.m(), self.n());
        let mut acc = BigRational::zero();
        for (w, c) in rule.wp().iter().zip(&self.p) {
            acc += w * c;
        }
        for (w, c) in rule.wq().iter().zip(&self.q) {
            acc += w * c;
        }
        (&self.b - &self.a) * acc
    }

    /// The two Lebesgue-style term sums `sum_j |p_j| B_j(s)` and
    /// `sum_j |q_j| B~_j(s)` over the same basis, used as the weights in
    /// the backward-error envelope.
    pub fn term_sums(&self, s: &BigRational) -> (BigRational, BigRational) {
        let zeros_q = vec![BigRational::zero(); self.q.len()];
        let zeros_p = vec![BigRational::zero(); self.p.len()];
        let p_side = ExactBlend {
            a: self.a.clone(),
            b: self.b.clone(),
            p: self.p.iter().map(ratio_abs).collect(),
            q: zeros_q,
        };
        // fold the alternating sign in so each term contributes |q_j| B~_j
        let q_side = ExactBlend {
            a: self.a.clone(),
            b: self.b.clone(),
            p: zeros_p,
            q: self
                .q
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let a = ratio_abs(c);
                    if j % 2 == 1 {
                        -a
                    } else {
                        a
                    }
                })
                .collect(),
        };
        (p_side.eval(s), q_side.eval(s))
    }
}

fn powers(x: &BigRational, count: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(count);
    out.push(BigRational::one());
    for i in 1..count {
        let next = &out[i - 1] * x;
        out.push(next);
    }
    out
}

/// log10 of the central-binomial asymptotic `C(2m, m) ~ 4^m / sqrt(pi m)`,
/// in log scale because the value itself overflows binary64 past
/// `m = 514`.
pub fn central_binomial_log10(m: u64) -> f64 {
    assert!(m >= 1);
    m as f64 * 4f64.log10() - 0.5 * (std::f64::consts::PI * m as f64).log10()
}

/// log10 of `C(a, k)` by summing logs; usable far past the binary64 range.
pub fn binomial_log10(a: u64, k: u64) -> f64 {
    assert!(k <= a);
    let k = k.min(a - k);
    (1..=k)
        .map(|i| ((a - k + i) as f64).log10() - (i as f64).log10())
        .sum()
}

/// Whether evaluating a grade-`(m, n)` blend involves binomial
/// coefficients `C(m+n, min(m,n))` beyond the binary64 range, in which
/// case overflow/underflow produces NaNs in the flat regions. This is a
/// diagnostic, not an error: values that come out finite are still
/// correct.
pub fn binomial_overflows(m: i64, n: i64) -> bool {
    if m < 0 || n < 0 {
        return false;
    }
    binomial_log10((m + n) as u64, m.min(n) as u64) > f64::MAX.log10()
}
