//! Piecewise approximation with a string of blends.
//!
//! A string stores one local Taylor array per knot; each piece blends the
//! data of its two knots, so adjacent pieces share derivatives and the
//! string is smooth at the knots up to the shared order. Integrating a
//! string gives composite quadrature (interior derivative corrections
//! telescope for equal spacing); antidifferentiation accumulates piece
//! integrals left to right and raises every knot one order.
//!
//! Run with: cargo run --example string_of_blends

use blends::BlendString;

fn main() {
    // sin(z) on [0, pi] from value + first two derivatives at 5 knots
    let knots: Vec<f64> = (0..=4)
        .map(|i| i as f64 * std::f64::consts::PI / 4.0)
        .collect();
    let taylor: Vec<Vec<f64>> = knots
        .iter()
        .map(|&z| vec![z.sin(), z.cos(), -z.sin() / 2.0]) // f, f'/1!, f''/2!
        .collect();
    let bs = BlendString::new(knots, taylor).unwrap();

    println!(
        "string of (2,2) blends for sin on [0, pi], {} pieces",
        bs.num_pieces()
    );
    let mut max_err = 0.0f64;
    for i in 0..=400 {
        let z = std::f64::consts::PI * i as f64 / 400.0;
        let err = (bs.eval(z, 0).unwrap()[0] - z.sin()).abs();
        max_err = max_err.max(err);
    }
    println!("max |string - sin| on a 401-point grid: {max_err:.3e}");

    let integral = bs.integrate();
    println!(
        "composite integral: {integral:.12} (exact 2, err {:+.2e})",
        integral - 2.0
    );

    // accumulate the running integral: the antiderivative string matches
    // 1 - cos(z)
    let anti = bs.antiderivative(0.0);
    let mut max_err = 0.0f64;
    for i in 0..=400 {
        let z = std::f64::consts::PI * i as f64 / 400.0;
        let err = (anti.eval(z, 0).unwrap()[0] - (1.0 - z.cos())).abs();
        max_err = max_err.max(err);
    }
    println!("max |antiderivative - (1 - cos)|: {max_err:.3e}");
    println!(
        "value at the last knot: {:.12} = initial + integral",
        anti.eval(std::f64::consts::PI, 0).unwrap()[0]
    );
}
