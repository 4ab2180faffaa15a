//! Stress test: overflow behaviour at extreme grades.
//!
//! Blending the step function (-1 with all derivatives zero at s = 0, +1
//! at s = 1) at grade (987, 610) involves binomial coefficients around
//! 3.5e459, far beyond binary64. Overflow and underflow produce NaNs, but
//! only in the flat regions; across the transition band every finite
//! value is correct, and the step lands near s = (m+1)/(m+n+2) as the
//! Fibonacci ratio predicts.
//!
//! Run with: cargo run --release --example step_overflow

use blends::analysis::{binomial_log10, binomial_overflows};
use blends::generators;

fn main() {
    let (m, n) = (987i64, 610i64);
    println!(
        "largest binomial coefficient ~ 10^{:.1}; overflow expected: {}",
        binomial_log10((m + n) as u64, n as u64),
        binomial_overflows(m, n)
    );

    let bl = generators::step(m, n);
    let grid: Vec<f64> = (0..2021).map(|i| i as f64 / 2020.0).collect();
    let rows = bl.eval_grid(&grid, 0);

    let nans = rows.iter().filter(|r| r[0].is_nan()).count();
    let finite = rows.len() - nans;
    println!("{finite} finite values, {nans} NaNs (flat regions)");

    let lo = rows.iter().position(|r| r[0].is_finite()).unwrap();
    let hi = rows.iter().rposition(|r| r[0].is_finite()).unwrap();
    println!("finite band: s in [{:.4}, {:.4}]", grid[lo], grid[hi]);

    println!(
        "step location: H[1248] = {:+.4}, H[1249] = {:+.4} (sign change at s ~ {:.4})",
        rows[1248][0],
        rows[1249][0],
        (m + 1) as f64 / (m + n + 2) as f64
    );
}
