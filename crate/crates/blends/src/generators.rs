//! Built-in Taylor-coefficient generators for the stock test functions
//! used throughout the test suite and exposed through the `gen` command.
//!
//! All generated blends live on `[0, 1]` (so `s`- and `z`-units agree).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::blend::Blend;
use crate::error::BlendError;
use crate::rational::ratio_to_f64;

/// Blend of `cos(pi s)` from its Taylor series at both ends.
///
/// At `s = 0` the coefficients are `0` for odd orders and
/// `(-1)^(j/2) pi^j / j!` for even ones; the coefficients at `s = 1` are
/// their negatives.
pub fn cospi(m: i64, n: i64) -> Blend {
    let p: Vec<f64> = (0..=m).map(cospi_coefficient).collect();
    let q: Vec<f64> = (0..=n).map(|j| -cospi_coefficient(j)).collect();
    Blend::new(0.0, 1.0, p, q).expect("unit interval")
}

fn cospi_coefficient(j: i64) -> f64 {
    if j % 2 == 1 {
        return 0.0;
    }
    // pi^j / j! built incrementally
    let mut t = 1.0;
    for i in 1..=j {
        t *= std::f64::consts::PI / i as f64;
    }
    if j % 4 == 0 {
        t
    } else {
        -t
    }
}

/// Blend of `exp(-1/s)`: every right-sided derivative at `s = 0+` is
/// zero, while the coefficients at `s = 1` are exact rational multiples
/// of `exp(-1)`.
///
/// The blend therefore carries `m + 1` zeros on the left and the first
/// `n + 1` Taylor coefficients of `exp(-1/x)` at `x = 1` on the right.
/// The rationals are carried exactly and multiplied by binary64
/// `exp(-1)` at the end.
pub fn exp_recip(m: i64, n: i64) -> Blend {
    let e_inv = (-1f64).exp();
    let nums = exp_recip_numerators(n);
    let mut fact = BigInt::one();
    let q = nums
        .into_iter()
        .enumerate()
        .map(|(k, nk)| {
            if k > 0 {
                fact *= k;
            }
            // unreduced n_k / k!; reduction buys nothing before rounding
            ratio_to_f64(&BigRational::new_raw(nk, fact.clone())) * e_inv
        })
        .collect();
    Blend::new(0.0, 1.0, vec![0.0; (m + 1).max(0) as usize], q).expect("unit interval")
}

/// The exact rationals `r_j` with `f^(j)(1)/j! = r_j * exp(-1)` for
/// `f(x) = exp(-1/x)`.
///
/// From `x^2 f' = f` expanded at `x = 1 + t`:
/// `(k+1) r_{k+1} = (1 - 2k) r_k - (k-1) r_{k-1}`, `r_0 = r_1 = 1`.
pub fn exp_recip_coefficients(n: i64) -> Vec<BigRational> {
    let mut fact = BigInt::one();
    exp_recip_numerators(n)
        .into_iter()
        .enumerate()
        .map(|(k, nk)| {
            if k > 0 {
                fact *= k;
            }
            BigRational::new(nk, fact.clone())
        })
        .collect()
}

/// Integer numerators of the recurrence over the factorial denominators:
/// writing `r_k = n_k / k!` clears the divisions, leaving
/// `n_{k+1} = (1 - 2k) n_k - k(k-1) n_{k-1}` with `n_0 = n_1 = 1`.
fn exp_recip_numerators(n: i64) -> Vec<BigInt> {
    let count = (n + 1).max(0) as usize;
    let mut nums = Vec::with_capacity(count);
    if count >= 1 {
        nums.push(BigInt::one());
    }
    if count >= 2 {
        nums.push(BigInt::one());
    }
    for k in 1..count.saturating_sub(1) as i64 {
        let next = (1 - 2 * k) * &nums[k as usize] - (k * (k - 1)) * &nums[(k - 1) as usize];
        nums.push(next);
    }
    nums
}

/// Blend of the step function: value `-1` at `s = 0` and `+1` at `s = 1`,
/// all derivatives zero at both ends.
///
/// The step lands near `s = (m+1)/(m+n+2)`; unbalanced grades move it.
pub fn step(m: i64, n: i64) -> Blend {
    assert!(m >= 0 && n >= 0, "step blend needs data at both ends");
    let mut p = vec![0.0; (m + 1) as usize];
    let mut q = vec![0.0; (n + 1) as usize];
    p[0] = -1.0;
    q[0] = 1.0;
    Blend::new(0.0, 1.0, p, q).expect("unit interval")
}

/// Blend of an explicit polynomial `sum_i coeffs[i] z^i` on `[a, b]` with
/// the requested grades, from its exact Taylor shifts at both endpoints.
///
/// When `m + n + 1` reaches the degree the blend reproduces the
/// polynomial, which makes this the natural source for reproduction and
/// exactness oracles.
pub fn poly(coeffs: &[f64], a: f64, b: f64, m: i64, n: i64) -> Result<Blend, BlendError> {
    if a == b {
        return Err(BlendError::EqualEndpoints(a));
    }
    let h = b - a;
    let side = |x0: f64, grade: i64| -> Vec<f64> {
        let local = taylor_shift(coeffs, x0);
        let mut hp = 1.0;
        (0..=grade)
            .map(|j| {
                if j > 0 {
                    hp *= h;
                }
                local.get(j as usize).copied().unwrap_or(0.0) * hp
            })
            .collect()
    };
    Blend::new(a, b, side(a, m), side(b, n))
}

/// Coefficients of `P(x0 + t)` in `t`, by repeated synthetic division.
/// Entry `j` is `P^(j)(x0) / j!`.
fn taylor_shift(coeffs: &[f64], x0: f64) -> Vec<f64> {
    let mut c = coeffs.to_vec();
    if c.is_empty() {
        return vec![0.0];
    }
    let d = c.len();
    for i in 0..d - 1 {
        for k in (i..d - 1).rev() {
            c[k] += x0 * c[k + 1];
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn cospi_coefficients() {
        let bl = cospi(2, 2);
        assert_eq!(bl.p().len(), 3);
        assert_eq!(bl.q().len(), 3);
        assert_eq!(bl.p()[0], 1.0);
        assert_eq!(bl.p()[1], 0.0);
        assert_relative_eq!(bl.p()[2], -PI * PI / 2.0, max_relative = 1e-15);
        assert_eq!(bl.q()[0], -1.0);
        assert_relative_eq!(bl.q()[2], PI * PI / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn cospi_sides_are_negatives() {
        let bl = cospi(8, 6);
        for j in 0..=6 {
            assert_eq!(bl.p()[j], -bl.q()[j]);
        }
    }

    #[test]
    fn exp_recip_first_rationals() {
        // apart from sign, the first five are 1/k!; the degree-5 term
        // breaks the pattern with -19/120
        let r = exp_recip_coefficients(5);
        assert_eq!(r[0], ratio(1, 1));
        assert_eq!(r[1], ratio(1, 1));
        assert_eq!(r[2], ratio(-1, 2));
        assert_eq!(r[3], ratio(1, 6));
        assert_eq!(r[4], ratio(1, 24));
        assert_eq!(r[5], ratio(-19, 120));
    }

    #[test]
    fn exp_recip_blend_shape() {
        let bl = exp_recip(3, 5);
        assert_eq!(bl.p(), &[0.0; 4]);
        assert_eq!(bl.q().len(), 6);
        assert_relative_eq!(bl.q()[0], (-1f64).exp(), max_relative = 1e-15);
        assert_relative_eq!(bl.eval(1.0), (-1f64).exp(), max_relative = 1e-15);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn exp_recip_recurrence_vs_finite_differences() {
        // high-order finite differences of exp(-1/x) at x = 1 as an
        // independent check of the rational recurrence. Real-axis stencils
        // handle orders up to 6; for 7 and 8 their truncation/rounding
        // trade-off bottoms out near 2e-6, so those use the equispaced
        // complex-circle stencil instead.
        let f = |x: f64| (-1.0 / x).exp();
        let r = exp_recip_coefficients(8);
        let e_inv = f(1.0);
        for j in 1..=8usize {
            let expect = ratio_to_f64(&r[j]) * e_inv; // f^(j)(1)/j!
            let fd = if j <= 6 {
                let mut jfact = 1.0;
                for i in 1..=j {
                    jfact *= i as f64;
                }
                fornberg_derivative(f, 1.0, j, 8, 0.04) / jfact
            } else {
                circle_taylor_coefficient(1.0, j, 32, 0.5)
            };
            assert_relative_eq!(fd, expect, max_relative = 1e-6);
        }
    }

    /// j-th Taylor coefficient of exp(-1/x) at x0 from the 32-point
    /// equispaced stencil on a circle of radius r.
    fn circle_taylor_coefficient(x0: f64, j: usize, n: usize, r: f64) -> f64 {
        use num_complex::Complex64;
        let mut acc = 0.0;
        for t in 0..n {
            let theta = 2.0 * std::f64::consts::PI * t as f64 / n as f64;
            let z = Complex64::new(x0 + r * theta.cos(), r * theta.sin());
            let fv = (-z.inv()).exp();
            acc += (fv * Complex64::from_polar(1.0, -(j as f64) * theta)).re;
        }
        acc / (n as f64 * r.powi(j as i32))
    }

    /// j-th derivative at x0 from a symmetric (2*half+1)-point stencil
    /// with Fornberg weights.
    fn fornberg_derivative(f: impl Fn(f64) -> f64, x0: f64, j: usize, half: usize, h: f64) -> f64 {
        let nodes: Vec<f64> = (-(half as i64)..=half as i64)
            .map(|i| x0 + i as f64 * h)
            .collect();
        let w = fornberg_weights(x0, &nodes, j);
        nodes.iter().zip(&w).map(|(&x, &wi)| wi * f(x)).sum()
    }

    /// Fornberg's recurrence for finite-difference weights of the m-th
    /// derivative at z on arbitrary nodes.
    fn fornberg_weights(z: f64, x: &[f64], m: usize) -> Vec<f64> {
        let n = x.len();
        let mut c = vec![vec![0.0; m + 1]; n];
        let mut c1 = 1.0;
        let mut c4 = x[0] - z;
        c[0][0] = 1.0;
        for i in 1..n {
            let mn = i.min(m);
            let mut c2 = 1.0;
            let c5 = c4;
            c4 = x[i] - z;
            for j in 0..i {
                let c3 = x[i] - x[j];
                c2 *= c3;
                if j == i - 1 {
                    for k in (1..=mn).rev() {
                        c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                    }
                    c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
                }
                for k in (1..=mn).rev() {
                    c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
                }
                c[j][0] = c4 * c[j][0] / c3;
            }
            c1 = c2;
        }
        c.iter().map(|row| row[m]).collect()
    }

    #[test]
    fn step_blends() {
        let bl = step(0, 0);
        assert_eq!(bl.p(), &[-1.0]);
        assert_eq!(bl.q(), &[1.0]);
        for i in 0..=10 {
            let s = i as f64 / 10.0;
            assert_relative_eq!(bl.eval(s), -1.0 + 2.0 * s, epsilon = 1e-15);
        }

        // (3,5): smooth sigmoid crossing zero near s = (3+1)/(3+5+2) = 0.4
        let bl = step(3, 5);
        assert_eq!(bl.p().len(), 4);
        assert_eq!(bl.q().len(), 6);
        let mut crossing = None;
        let mut prev = bl.eval(0.0);
        for i in 1..=1000 {
            let s = i as f64 / 1000.0;
            let v = bl.eval(s);
            if prev < 0.0 && v >= 0.0 {
                crossing = Some(s);
            }
            prev = v;
        }
        let c = crossing.expect("step must cross zero");
        assert!((c - 0.4).abs() < 0.05, "crossing at {c}");
    }

    #[test]
    fn poly_taylor_shift() {
        // z^2 on [0,1] with grades (1,1): p = [0,0], q = [1,2]
        let bl = poly(&[0.0, 0.0, 1.0], 0.0, 1.0, 1, 1).unwrap();
        assert_eq!(bl.p(), &[0.0, 0.0]);
        assert_eq!(bl.q(), &[1.0, 2.0]);

        // constants pad with zeros
        let bl = poly(&[3.25], 0.0, 1.0, 2, 1).unwrap();
        assert_eq!(bl.p(), &[3.25, 0.0, 0.0]);
        assert_eq!(bl.q(), &[3.25, 0.0]);
    }

    #[test]
    fn poly_reproduces_high_degree() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(42);
        // random degree-7 polynomial, (3,3) blend has grade 7
        let coeffs: Vec<f64> = (0..8).map(|_| rng.random_range(-1.0..1.0)).collect();
        let horner = |z: f64| coeffs.iter().rev().fold(0.0, |acc, &c| c + z * acc);
        let bl = poly(&coeffs, 0.0, 1.0, 3, 3).unwrap();
        for i in 0..=100 {
            let s = i as f64 / 100.0;
            assert_relative_eq!(bl.eval(s), horner(s), max_relative = 1e-12, epsilon = 1e-13);
        }
    }

    #[test]
    fn generators_produce_requested_lengths() {
        for (m, n) in [(0i64, 0i64), (2, 7), (9, 1)] {
            assert_eq!(cospi(m, n).p().len() as i64, m + 1);
            assert_eq!(cospi(m, n).q().len() as i64, n + 1);
            assert_eq!(step(m, n).p().len() as i64, m + 1);
            assert_eq!(step(m, n).q().len() as i64, n + 1);
            assert_eq!(exp_recip(m, n).p().len() as i64, m + 1);
            assert_eq!(exp_recip(m, n).q().len() as i64, n + 1);
        }
    }
}
