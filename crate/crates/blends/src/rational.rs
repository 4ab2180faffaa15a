//! Small exact-arithmetic helpers shared by the calculus and analysis
//! modules. Factorials and binomials are kept as exact big integers;
//! rounding to binary64 happens only where a caller applies a rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// Exact `k!`.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// Exact `C(a, k)` for `a >= k >= 0`, by the multiplicative recurrence.
pub fn binomial(a: u64, k: u64) -> BigInt {
    debug_assert!(k <= a);
    let k = k.min(a - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (a - k + i) / i;
    }
    acc
}

/// Round an exact rational to the nearest binary64.
///
/// `num-rational`'s conversion handles numerators and denominators far
/// outside the binary64 range; a unit test below guards that assumption.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational equal to a finite binary64 value.
pub fn ratio_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Absolute value of an exact rational.
pub fn ratio_abs(r: &BigRational) -> BigRational {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

/// Rational from an integer pair, convenience for tests.
#[cfg(test)]
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn big_ratio_to_f64_survives_huge_terms() {
        // numerator and denominator each overflow f64 on their own
        let big = factorial(300);
        let r = BigRational::new(big.clone() * 3, big * 2);
        assert_eq!(ratio_to_f64(&r), 1.5);
    }

    #[test]
    fn big_ratio_to_f64_is_correctly_rounded_nearby_one() {
        // 1 + 2^-53 rounds to 1 + 2^-52 or 1 under round-to-even; the
        // exact value sits halfway, so nearest-even gives 1.0
        let one = BigInt::from(1u8) << 500;
        let r = BigRational::new((BigInt::from(1u8) << 500) + (BigInt::from(1u8) << 447), one);
        let x = ratio_to_f64(&r);
        assert!(x == 1.0 || x == 1.0 + f64::EPSILON);
        // 1 + 2^-52 must round to exactly 1 + f64::EPSILON
        let r = BigRational::new(
            (BigInt::from(1u8) << 500) + (BigInt::from(1u8) << 448),
            BigInt::from(1u8) << 500,
        );
        assert_eq!(ratio_to_f64(&r), 1.0 + f64::EPSILON);
    }

    #[test]
    fn ratio_from_f64_round_trips() {
        for x in [0.1, -3.75, 1e-300, 2.2e18] {
            let r = ratio_from_f64(x).unwrap();
            assert_eq!(ratio_to_f64(&r), x);
        }
        assert!(ratio_from_f64(f64::NAN).is_none());
    }
}
