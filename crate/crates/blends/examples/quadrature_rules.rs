//! Quadrature rules generated by blends.
//!
//! The full-interval integral of a grade-(m,n) blend is a weighted sum of
//! its coefficients with exact rational weights; the rule integrates
//! every polynomial of degree up to m+n+1 exactly. Grade (0,0) is the
//! trapezoidal rule and grade (1,1) the corrected trapezoidal rule with
//! the h^2/12 (f'(a) - f'(b)) endpoint term.
//!
//! Run with: cargo run --example quadrature_rules

use blends::calculus::{integration_error_bound, quadrature_weights};
use blends::Blend;

fn main() {
    for (m, n) in [(0i64, 0i64), (1, 1), (4, 4), (2, 5)] {
        let rule = quadrature_weights(m, n);
        let wp: Vec<String> = rule.wp().iter().map(|w| w.to_string()).collect();
        let wq: Vec<String> = rule.wq().iter().map(|w| w.to_string()).collect();
        println!(
            "grade ({m},{n}), exact on degree <= {}:",
            rule.exactness_grade()
        );
        println!("  wp = [{}]", wp.join(", "));
        println!("  wq = [{}]", wq.join(", "));
    }

    // corrected trapezoid on f(z) = exp(z) over [0, 1/2]
    let (a, b) = (0.0, 0.5);
    let h: f64 = b - a;
    let bl = Blend::from_derivatives(a, b, &[a.exp(), a.exp()], &[b.exp(), b.exp()]).unwrap();
    let exact = b.exp() - a.exp();
    let plain_trapezoid = h / 2.0 * (a.exp() + b.exp());
    println!("\nintegral of exp over [{a}, {b}]:");
    println!("  exact               {exact:.12}");
    println!(
        "  trapezoid           {plain_trapezoid:.12}  (err {:+.2e})",
        plain_trapezoid - exact
    );
    println!(
        "  corrected trapezoid {:.12}  (err {:+.2e})",
        bl.integrate(),
        bl.integrate() - exact
    );
    // z-space bound: h for dz plus h^4 to convert the fourth derivative
    println!(
        "  error bound (M = e^b): {:.2e}",
        h.powi(5) * integration_error_bound(1, 1, b.exp()).unwrap()
    );
}
