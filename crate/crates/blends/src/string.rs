//! Strings of blends: piecewise blends over a knot sequence, where
//! adjacent pieces share the Taylor data stored at their common knot.
//!
//! Knot data is stored raw (local Taylor coefficients `f^(j)(z_i)/j!`,
//! unscaled): each piece applies its own `h_i^j` scaling at construction,
//! because one knot serves two pieces with different widths.

use crate::blend::Blend;
use crate::error::BlendError;

/// A piecewise blend over strictly increasing knots `z_0 < ... < z_K`.
///
/// Piece `i` lives on `[z_i, z_{i+1})` (the last piece is closed on the
/// right) and is the blend built from the Taylor data at knots `i` and
/// `i + 1`. Continuity across a knot holds automatically up to the
/// derivative order shared there.
#[derive(Clone, Debug, PartialEq)]
pub struct BlendString {
    knots: Vec<f64>,
    taylor: Vec<Vec<f64>>,
}

impl BlendString {
    /// Build a string from knots and one local Taylor array per knot.
    pub fn new(knots: Vec<f64>, taylor: Vec<Vec<f64>>) -> Result<Self, BlendError> {
        if knots.len() < 2 {
            return Err(BlendError::TooFewKnots(knots.len()));
        }
        if knots.len() != taylor.len() {
            return Err(BlendError::KnotDataMismatch {
                knots: knots.len(),
                arrays: taylor.len(),
            });
        }
        for i in 1..knots.len() {
            // NaN knots must fail too, so compare through partial_cmp
            if knots[i].partial_cmp(&knots[i - 1]) != Some(std::cmp::Ordering::Greater) {
                return Err(BlendError::KnotsNotIncreasing(i));
            }
        }
        if let Some(i) = taylor.iter().position(|t| t.is_empty()) {
            return Err(BlendError::EmptyKnotData(i));
        }
        Ok(BlendString { knots, taylor })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn taylor(&self) -> &[Vec<f64>] {
        &self.taylor
    }

    pub fn num_pieces(&self) -> usize {
        self.knots.len() - 1
    }

    /// The blend for piece `i`, with the `h_i^j` scaling applied.
    pub fn piece(&self, i: usize) -> Blend {
        let (za, zb) = (self.knots[i], self.knots[i + 1]);
        let h = zb - za;
        Blend::new(
            za,
            zb,
            scale_taylor(&self.taylor[i], h),
            scale_taylor(&self.taylor[i + 1], h),
        )
        .expect("knots are strictly increasing")
    }

    /// Index of the piece whose half-open interval contains `z`.
    pub fn find_piece(&self, z: f64) -> Result<usize, BlendError> {
        let lo = self.knots[0];
        let hi = *self.knots.last().expect("at least two knots");
        if !(lo..=hi).contains(&z) {
            return Err(BlendError::OutOfRange { z, lo, hi });
        }
        let idx = self.knots.partition_point(|&k| k <= z);
        Ok((idx - 1).min(self.num_pieces() - 1))
    }

    /// Evaluate the string and `nder` derivatives at `z` (in `z`-units).
    pub fn eval(&self, z: f64, nder: usize) -> Result<Vec<f64>, BlendError> {
        let i = self.find_piece(z)?;
        let piece = self.piece(i);
        let s = (z - piece.a()) / piece.h();
        Ok(piece.eval_derivatives(s, nder))
    }

    /// Composite integral over the whole knot range: the per-piece
    /// integrals accumulated left to right.
    ///
    /// For equally spaced knots and balanced grades the interior
    /// derivative terms telescope, leaving only endpoint corrections.
    pub fn integrate(&self) -> f64 {
        (0..self.num_pieces())
            .map(|i| self.piece(i).integrate())
            .sum()
    }

    /// String for the running integral `F(z) = f0 + int_{z_0}^z f`, one
    /// grade higher at every knot.
    ///
    /// Piece integrals accumulate left to right into each knot's new
    /// leading value, so the result is continuous and its value at `z_K`
    /// is `f0 + integrate()`.
    pub fn antiderivative(&self, f0: f64) -> BlendString {
        let mut acc = f0;
        let mut taylor = Vec::with_capacity(self.taylor.len());
        for (i, t) in self.taylor.iter().enumerate() {
            let mut nt = Vec::with_capacity(t.len() + 1);
            nt.push(acc);
            nt.extend(t.iter().enumerate().map(|(j, &c)| c / (j + 1) as f64));
            taylor.push(nt);
            if i < self.num_pieces() {
                acc += self.piece(i).integrate();
            }
        }
        BlendString {
            knots: self.knots.clone(),
            taylor,
        }
    }
}

/// `t[j] * h^j`, incrementally.
fn scale_taylor(t: &[f64], h: f64) -> Vec<f64> {
    let mut hp = 1.0;
    t.iter()
        .enumerate()
        .map(|(j, &c)| {
            if j > 0 {
                hp *= h;
            }
            c * hp
        })
        .collect()
}
