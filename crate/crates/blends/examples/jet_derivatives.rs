//! Arbitrary-order derivatives in one pass.
//!
//! The Horner kernel runs on truncated Taylor polynomials (jets) seeded
//! with the evaluation point, so asking for nder derivatives costs
//! O((m+n) * nder) instead of one pass per order. Derivatives come back
//! in z-units (the 1/h^k chain-rule factors are applied).
//!
//! Run with: cargo run --example jet_derivatives

use blends::generators;
use blends::Blend;

fn main() {
    // f(z) = z^4 - 2z on [1, 3]; a (2,2) blend has grade 5 and represents
    // the quartic exactly, derivatives included
    let (a, b) = (1.0, 3.0);
    let f = |z: f64| z.powi(4) - 2.0 * z;
    let bl = generators::poly(&[0.0, -2.0, 0.0, 0.0, 1.0], a, b, 2, 2).unwrap();

    println!(
        "blend of z^4 - 2z on [{a}, {b}], grade ({},{})",
        bl.m(),
        bl.n()
    );
    println!(
        "{:>5}  {:>12}  {:>12}  {:>12}  {:>12}",
        "z", "H", "H'", "H''", "H'''"
    );
    for i in 0..=4 {
        let s = i as f64 / 4.0;
        let z = a + s * (b - a);
        let d = bl.eval_derivatives(s, 3);
        println!(
            "{z:>5.2}  {:>12.6}  {:>12.6}  {:>12.6}  {:>12.6}",
            d[0], d[1], d[2], d[3]
        );
        let exact = [f(z), 4.0 * z.powi(3) - 2.0, 12.0 * z.powi(2), 24.0 * z];
        for k in 0..=3 {
            assert!((d[k] - exact[k]).abs() < 1e-10 * (1.0 + exact[k].abs()));
        }
    }
    println!("(all rows verified against the analytic derivatives)");

    // one-sided blends degenerate to plain Taylor polynomials
    let taylor = Blend::new(0.0, 1.0, vec![1.0, 1.0, 0.5, 1.0 / 6.0], vec![]).unwrap();
    println!(
        "\none-sided cubic Taylor proxy for exp: H(1) = {:.6} vs e = {:.6}",
        taylor.eval(1.0),
        std::f64::consts::E
    );
}
