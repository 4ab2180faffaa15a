//! Accuracy of a balanced blend on a very smooth function.
//!
//! Blends cos(pi s) from its Taylor series at both endpoints (the
//! right-hand coefficients are just the negatives of the left-hand ones)
//! and compares against the reference on a dense grid, alongside the a
//! priori truncation bound. Derivative errors are scaled by powers of pi
//! to make the orders comparable.
//!
//! Run with: cargo run --release --example cos_accuracy

use std::f64::consts::PI;

use blends::calculus::truncation_error_bound;
use blends::generators;

fn main() {
    let (m, n) = (8, 8);
    let bl = generators::cospi(m, n);
    println!(
        "blend of cos(pi s), grade ({m},{n}), degree at most {}",
        bl.grade()
    );

    // |d^18 cos(pi s)| <= pi^18
    let bound = truncation_error_bound(m, n, PI.powi((m + n + 2) as i32)).unwrap();
    println!("a priori truncation bound: {bound:.3e}\n");

    let nder = 3;
    let mut max_err = vec![0.0f64; nder + 1];
    for i in 0..2021 {
        let s = i as f64 / 2020.0;
        let got = bl.eval_derivatives(s, nder);
        let reference = [
            (PI * s).cos(),
            -PI * (PI * s).sin(),
            -PI * PI * (PI * s).cos(),
            PI * PI * PI * (PI * s).sin(),
        ];
        for k in 0..=nder {
            let scaled = (got[k] - reference[k]).abs() / PI.powi(k as i32);
            max_err[k] = max_err[k].max(scaled);
        }
    }

    println!("max errors over 2021 equally spaced points (scaled by pi^-k):");
    for (k, err) in max_err.iter().enumerate() {
        println!("  order {k}: {err:.3e}");
    }
    println!("\nthe value error sits below the truncation bound and near unit");
    println!("roundoff; each derivative loses roughly one order of accuracy");
}
