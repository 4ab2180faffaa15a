//! Linear-cost Horner-form evaluation of blends, with arbitrary-order
//! derivatives via jet arithmetic.
//!
//! The two sums of the blend are related by a symmetry: exchange the
//! grades, exchange `s` and `1 - s`, and fold the alternating signs into
//! the right-hand coefficients. One half-sum kernel therefore serves both
//! sides. Binomial factors are folded into the running recurrence
//! `(n + k) * sigma / k` instead of being precomputed, which keeps
//! intermediate magnitudes small for `sigma` in `[0, 1]`, and the
//! `(1 - sigma)^(n+1)` factor is built by repeated multiplication, never
//! by expanding powers of a subtraction.
//!
//! There is no overflow mitigation: for grades high enough that the
//! implied binomial coefficients exceed the binary64 range, evaluation
//! yields NaN in the flat regions (and remains correct where the
//! intermediate terms stay finite).

use crate::blend::{alternate_signs, Blend};
use crate::jet::Jet;
use crate::scalar::Scalar;
use rayon::prelude::*;

/// Half-sum of the blend formula in adapted Horner form.
///
/// Computes `(1 - sigma)^(n+1) * sum_j w[j] * sigma^j *
/// sum_{k<=m-j} C(n+k, k) sigma^k` in `O(m) + O(n)` operations.
/// `w` must hold `m + 1` coefficients; `m = -1` with empty `w` returns
/// zero (the one-sided case, which reduces the blend to a plain Taylor
/// polynomial evaluated by ordinary Horner).
///
/// The full blend is this half-sum with `(m, n, s, p)` plus the half-sum
/// with `(n, m, 1 - s, q~)` where `q~[j] = (-1)^j q[j]`.
pub fn hsf<T: Scalar>(m: i64, n: i64, sigma: T, w: &[T]) -> T {
    debug_assert_eq!(w.len() as i64, m + 1);
    if m < 0 {
        return T::zero();
    }
    let mu = m as usize;

    // a[k] = C(n+k, k) * sigma^k, built by the Horner-like splitting
    // C(n+k, k) = C(n+k-1, k-1) * (n+k)/k.
    let mut a = vec![T::zero(); mu + 1];
    a[0] = T::one();
    for k in 1..=mu {
        let nk = T::from((n + k as i64) as f64);
        let kk = T::from(k as f64);
        a[k] = a[k - 1] * sigma * nk / kk;
    }
    // prefix sums: a[k] = sum_{i<=k} C(n+i, i) sigma^i
    for k in 1..=mu {
        a[k] = a[k - 1] + a[k];
    }

    let mut u = T::zero();
    for j in (0..=mu).rev() {
        u = a[mu - j] * w[j] + sigma * u;
    }

    let mut c = T::one();
    let one = T::one();
    for _ in 0..(n + 1).max(0) {
        c = (one - sigma) * c;
    }
    c * u
}

/// Jet counterpart of [`hsf`]: the evaluation variable is the affine jet
/// `sigma0 + sigma1*t`, and every line mirrors the scalar kernel so that
/// coefficient 0 of the result is bit-identical to `hsf`.
fn hsf_jet<T: Scalar>(m: i64, n: i64, sigma0: T, sigma1: T, w: &[T], order: usize) -> Jet<T> {
    debug_assert_eq!(w.len() as i64, m + 1);
    if m < 0 {
        return Jet::constant(order, T::zero());
    }
    let mu = m as usize;

    let mut a = Vec::with_capacity(mu + 1);
    a.push(Jet::constant(order, T::one()));
    for k in 1..=mu {
        let nk = T::from((n + k as i64) as f64);
        let kk = T::from(k as f64);
        a.push(a[k - 1].mul_affine(sigma0, sigma1).scale(nk).div_scale(kk));
    }
    for k in 1..=mu {
        a[k] = a[k - 1].add(&a[k]);
    }

    let mut u = Jet::constant(order, T::zero());
    for j in (0..=mu).rev() {
        u = a[mu - j].scale(w[j]).add(&u.mul_affine(sigma0, sigma1));
    }

    let mut c = Jet::constant(order, T::one());
    let one = T::one();
    for _ in 0..(n + 1).max(0) {
        c = c.mul_affine(one - sigma0, -sigma1);
    }
    c.mul(&u)
}

impl Blend {
    /// Evaluate the blend at real `s`, where `s = 0` and `s = 1` are the
    /// two endpoints.
    ///
    /// Costs `O(m) + O(n)` scalar operations. The accuracy contract only
    /// holds for `s` in `[0, 1]`; outside, amplification grows like a
    /// degree `m + n + 1` polynomial in `|s|`.
    pub fn eval(&self, s: f64) -> f64 {
        self.eval_at(s)
    }

    /// Evaluate the blend and its first `nder` derivatives at real `s`.
    ///
    /// Entry `k` of the result is `d^k H / dz^k` at `z = a + s*h`, i.e.
    /// the `s`-derivative divided by `h^k`.
    pub fn eval_derivatives(&self, s: f64, nder: usize) -> Vec<f64> {
        self.eval_derivatives_at(s, nder)
    }

    /// [`Blend::eval`] generalized over the point type (`f64` or
    /// `Complex64`); the same code path serves both.
    pub fn eval_at<T: Scalar>(&self, s: T) -> T {
        let p = lift::<T>(self.p());
        let qt = lift::<T>(&alternate_signs(self.q()));
        hsf(self.m(), self.n(), s, &p) + hsf(self.n(), self.m(), T::one() - s, &qt)
    }

    /// [`Blend::eval_derivatives`] generalized over the point type.
    ///
    /// The kernel runs once on jets of order `nder` seeded with
    /// `(s, 1, 0, ...)` for the left half-sum and `(1 - s, -1, 0, ...)`
    /// for the right, so sign alternation in odd derivatives is
    /// automatic. Cost `O((m + n) * nder)`.
    pub fn eval_derivatives_at<T: Scalar>(&self, s: T, nder: usize) -> Vec<T> {
        let p = lift::<T>(self.p());
        let qt = lift::<T>(&alternate_signs(self.q()));
        let one = T::one();
        let left = hsf_jet(self.m(), self.n(), s, one, &p, nder);
        let right = hsf_jet(self.n(), self.m(), one - s, -one, &qt, nder);
        let mut out = left.add(&right).into_coeffs();
        // jet coefficient k is the k-th s-derivative over k!; convert to
        // z-units with k!/h^k, built incrementally
        let mut factor = 1.0;
        for (k, v) in out.iter_mut().enumerate().skip(1) {
            factor *= k as f64 / self.h();
            *v = *v * T::from(factor);
        }
        out
    }

    /// Evaluate derivatives up to `nder` at each of `points` (in `s`-units).
    ///
    /// Returns one row per point, in input order; NaN entries are
    /// preserved. Rows are computed in parallel.
    pub fn eval_grid(&self, points: &[f64], nder: usize) -> Vec<Vec<f64>> {
        points
            .par_iter()
            .map(|&s| self.eval_derivatives(s, nder))
            .collect()
    }
}

fn lift<T: Scalar>(w: &[f64]) -> Vec<T> {
    w.iter().map(|&x| T::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_complex::Complex64;

    #[test]
    fn hsf_trivial_cases() {
        // (0,0): (1 - sigma) * w0
        assert_eq!(hsf(0, 0, 0.3, &[1.0]), 0.7);
        // sigma = 0 leaves only w0
        assert_eq!(hsf(3, 2, 0.0, &[4.0, 1.0, 1.0, 1.0]), 4.0);
        // m = -1: empty half-sum
        assert_eq!(hsf(-1, 5, 0.4, &[]), 0.0);
    }

    #[test]
    fn hsf_grade_one_zero() {
        // (1 - s) * [(1 + s) w0 + s w1] at s = 0.5 with w = [1, 1]
        assert_eq!(hsf(1, 0, 0.5, &[1.0, 1.0]), 1.0);
    }

    #[test]
    fn eval_examples() {
        let step = Blend::new(0.0, 1.0, vec![-1.0], vec![1.0]).unwrap();
        assert_eq!(step.eval(0.5), 0.0);

        let bl = Blend::new(0.0, 1.0, vec![0.0, 1.0], vec![1.0, 0.0]).unwrap();
        // s(1-s)^2 + s^2(3-2s) at 0.5
        assert_relative_eq!(bl.eval(0.5), 0.625, max_relative = 1e-15);
    }

    #[test]
    fn derivatives_at_endpoints_are_interpolation_conditions() {
        let bl = Blend::new(0.0, 1.0, vec![0.0, 1.0], vec![1.0, 0.0]).unwrap();
        let d0 = bl.eval_derivatives(0.0, 1);
        assert_eq!(d0, vec![0.0, 1.0]);
        let d1 = bl.eval_derivatives(1.0, 1);
        assert_eq!(d1, vec![1.0, 0.0]);
    }

    #[test]
    fn derivatives_in_z_units() {
        // blend of f(z) = z on [0, 2]: H(s) = 2s, dH/dz = 1
        let bl = Blend::new(0.0, 2.0, vec![0.0, 2.0], vec![2.0, 2.0]).unwrap();
        for i in 0..=10 {
            let s = i as f64 / 10.0;
            let d = bl.eval_derivatives(s, 1);
            assert_relative_eq!(d[0], 2.0 * s, epsilon = 1e-14);
            assert_relative_eq!(d[1], 1.0, max_relative = 1e-13);
        }
    }

    #[test]
    fn one_sided_is_plain_horner_bitwise() {
        let p = vec![0.3, -1.25, 0.7, 0.125, -2.0];
        let bl = Blend::new(0.0, 1.0, p.clone(), vec![]).unwrap();
        for i in 0..=20 {
            let s = i as f64 / 20.0;
            let horner = p.iter().rev().fold(0.0, |acc, &c| c + s * acc);
            assert_eq!(bl.eval(s), horner);
        }
    }

    #[test]
    fn jet_value_matches_scalar_eval_bitwise() {
        let bl = Blend::new(0.0, 1.0, vec![0.2, -0.4, 1.1], vec![0.9, 0.3]).unwrap();
        for i in 0..=10 {
            let s = i as f64 / 10.0;
            assert_eq!(bl.eval_derivatives(s, 3)[0], bl.eval(s));
        }
    }

    #[test]
    fn lower_order_jets_are_prefixes() {
        let bl = Blend::new(0.0, 1.0, vec![0.2, -0.4, 1.1, 0.05], vec![0.9, 0.3, -0.7]).unwrap();
        let d4 = bl.eval_derivatives(0.37, 4);
        for k in 0..4 {
            let dk = bl.eval_derivatives(0.37, k);
            assert_eq!(dk, d4[..=k].to_vec());
        }
    }

    #[test]
    fn grid_rows_follow_input_order() {
        let c = Blend::new(0.0, 1.0, vec![3.5], vec![3.5]).unwrap();
        let rows = c.eval_grid(&[0.0, 0.25, 1.0], 0);
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert_eq!(row.len(), 1);
            assert!((row[0] - 3.5).abs() < 1e-15);
        }
        assert!(c.eval_grid(&[], 2).is_empty());
    }

    #[test]
    fn complex_evaluation_agrees_with_real_on_axis() {
        let bl = Blend::new(0.0, 1.0, vec![0.2, -0.4, 1.1], vec![0.9, 0.3]).unwrap();
        for i in 0..=10 {
            let s = i as f64 / 10.0;
            let z = bl.eval_at(Complex64::new(s, 0.0));
            assert_relative_eq!(z.re, bl.eval(s), max_relative = 1e-14);
            assert_eq!(z.im, 0.0);
        }
    }
}
