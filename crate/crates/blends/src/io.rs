//! Blend and string spec files (JSON).
//!
//! A blend spec is an object with keys `"a"`, `"b"`, `"p"`, `"q"`; a
//! string spec has `"knots"` and `"taylor"`. Every numeric value may be
//! either a JSON number or a decimal string such as `"0.1"` or
//! `"-2.5e-3"`. Decimal strings are parsed at full precision: they round
//! correctly to binary64 on the fast path and stay exact on the rational
//! path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::analysis::ExactBlend;
use crate::blend::Blend;
use crate::error::BlendError;
use crate::rational::ratio_from_f64;
use crate::string::BlendString;

/// A numeric spec value: plain JSON number or decimal string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpecNumber {
    Number(f64),
    Literal(String),
}

impl SpecNumber {
    /// Round to binary64. Decimal strings go through the correctly
    /// rounded standard parser.
    pub fn to_f64(&self) -> Result<f64, BlendError> {
        match self {
            SpecNumber::Number(x) => Ok(*x),
            SpecNumber::Literal(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| BlendError::BadNumber(s.clone())),
        }
    }

    /// Exact rational value: a JSON number means its exact binary64
    /// value, a decimal string means the exact decimal it spells.
    pub fn to_rational(&self) -> Result<BigRational, BlendError> {
        match self {
            SpecNumber::Number(x) => {
                ratio_from_f64(*x).ok_or_else(|| BlendError::NotRational(format!("{x}")))
            }
            SpecNumber::Literal(s) => parse_decimal(s),
        }
    }
}

/// Exact rational from a decimal literal with optional sign, fraction
/// part and exponent (`-12.34e-5`).
pub fn parse_decimal(text: &str) -> Result<BigRational, BlendError> {
    let s = text.trim();
    let bad = || BlendError::BadNumber(text.to_string());

    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }

    let mut numer = BigInt::zero();
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numer = numer * 10 + (b - b'0');
    }
    numer *= sign;
    let shift = exp10 - frac_part.len() as i64;
    let scale = BigInt::from(10u8).pow(shift.unsigned_abs() as u32);
    Ok(if shift >= 0 {
        BigRational::new(numer * scale, BigInt::one())
    } else {
        BigRational::new(numer, scale)
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct BlendSpec {
    a: SpecNumber,
    b: SpecNumber,
    p: Vec<SpecNumber>,
    q: Vec<SpecNumber>,
}

#[derive(Debug, Serialize, Deserialize)]
struct StringSpec {
    knots: Vec<SpecNumber>,
    taylor: Vec<Vec<SpecNumber>>,
}

/// Parse a blend spec into the binary64 working type.
pub fn parse_blend_spec(json: &str) -> Result<Blend, BlendError> {
    let spec: BlendSpec = serde_json::from_str(json)?;
    Blend::new(
        spec.a.to_f64()?,
        spec.b.to_f64()?,
        to_f64_vec(&spec.p)?,
        to_f64_vec(&spec.q)?,
    )
}

/// Parse a blend spec into exact rationals (for `--exact` integration and
/// oracle work).
pub fn parse_blend_spec_exact(json: &str) -> Result<ExactBlend, BlendError> {
    let spec: BlendSpec = serde_json::from_str(json)?;
    let lift = |v: &[SpecNumber]| -> Result<Vec<BigRational>, BlendError> {
        v.iter().map(|x| x.to_rational()).collect()
    };
    let exact = ExactBlend {
        a: spec.a.to_rational()?,
        b: spec.b.to_rational()?,
        p: lift(&spec.p)?,
        q: lift(&spec.q)?,
    };
    if exact.a == exact.b {
        return Err(BlendError::EqualEndpoints(spec.a.to_f64()?));
    }
    if exact.p.is_empty() && exact.q.is_empty() {
        return Err(BlendError::NoCoefficients);
    }
    Ok(exact)
}

/// Emit a blend spec as JSON (plain numbers; binary64 round-trips
/// losslessly through serde's shortest representation).
pub fn blend_to_json(blend: &Blend) -> String {
    let spec = BlendSpec {
        a: SpecNumber::Number(blend.a()),
        b: SpecNumber::Number(blend.b()),
        p: blend.p().iter().map(|&x| SpecNumber::Number(x)).collect(),
        q: blend.q().iter().map(|&x| SpecNumber::Number(x)).collect(),
    };
    serde_json::to_string(&spec).expect("plain data serializes")
}

/// Parse a string-of-blends spec.
pub fn parse_string_spec(json: &str) -> Result<BlendString, BlendError> {
    let spec: StringSpec = serde_json::from_str(json)?;
    let knots = to_f64_vec(&spec.knots)?;
    let taylor = spec
        .taylor
        .iter()
        .map(|t| to_f64_vec(t))
        .collect::<Result<Vec<_>, _>>()?;
    BlendString::new(knots, taylor)
}

/// Emit a string spec as JSON.
pub fn string_to_json(bs: &BlendString) -> String {
    let spec = StringSpec {
        knots: bs.knots().iter().map(|&x| SpecNumber::Number(x)).collect(),
        taylor: bs
            .taylor()
            .iter()
            .map(|t| t.iter().map(|&x| SpecNumber::Number(x)).collect())
            .collect(),
    };
    serde_json::to_string(&spec).expect("plain data serializes")
}

fn to_f64_vec(v: &[SpecNumber]) -> Result<Vec<f64>, BlendError> {
    v.iter().map(|x| x.to_f64()).collect()
}
