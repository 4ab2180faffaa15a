//! Conditioning of the blend basis via its Lebesgue function.
//!
//! Errors in the coefficients are amplified by at most the Lebesgue
//! function of the basis. For balanced blends it stays between 1 and 2 on
//! the interval no matter how large the grade; unbalanced blends can
//! reach (at worst) the larger of the two grades. Outside [0, 1] it grows
//! like a degree m+n+1 polynomial, which is why blends are approximants
//! on their interval only.
//!
//! Run with: cargo run --release --example lebesgue_bounds

use blends::analysis::{backward_gamma_p, backward_gamma_q, lebesgue};

fn grid_max(m: i64, n: i64) -> f64 {
    (0..=2020)
        .map(|i| lebesgue(m, n, i as f64 / 2020.0))
        .fold(f64::NEG_INFINITY, f64::max)
}

fn main() {
    println!("balanced blends: max Lebesgue function over [0, 1]");
    let mut m = 1;
    while m <= 256 {
        println!("  L_{{{m},{m}}}: {:.6}", grid_max(m, m));
        m *= 2;
    }

    println!("\nunbalanced blends (m = 4n):");
    for k in 0..=6u32 {
        let (m, n) = (4 * 2i64.pow(k), 2i64.pow(k));
        println!(
            "  L_{{{m},{n}}}: {:>9.4}   (max(m,n) = {m})",
            grid_max(m, n)
        );
    }

    println!("\ngrowth away from the interval for (4,4):");
    for s in [1.0, 1.25, 1.5, 2.0, 3.0] {
        println!("  L(s = {s:>4}): {:.4e}", lebesgue(4, 4, s));
    }

    // combine with the backward-error bounds: coefficient perturbations
    // from rounding are below gamma_(3m+2n+4), so the value error of a
    // balanced blend is at most ~2 gamma ||coeffs||
    let (m, n) = (9, 9);
    println!(
        "\nbackward bounds at grade ({m},{n}): p side {:.3e}, q side {:.3e}",
        backward_gamma_p(m, n),
        backward_gamma_q(m, n)
    );
}
