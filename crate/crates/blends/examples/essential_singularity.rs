//! Stress test: blending across an essential singularity.
//!
//! f(s) = exp(-1/s) has every right-sided derivative zero at s = 0+, so
//! the left side of the blend contributes nothing but zeros, while the
//! Taylor coefficients at s = 1 come from an exact rational recurrence.
//! With 101 zeros on the left and 901 coefficients on the right the
//! grade-1001 blend stays within about 1e-5 of the function everywhere,
//! even though the binomial coefficients involved reach ~6.4e139. A pure
//! degree-900 Taylor polynomial at s = 1 diverges at the other end.
//!
//! Run with: cargo run --release --example essential_singularity

use blends::generators;

fn main() {
    let (m, n) = (100, 900);
    let t0 = std::time::Instant::now();
    let bl = generators::exp_recip(m, n);
    println!(
        "built the ({m},{n})-information blend of exp(-1/s) in {:?}",
        t0.elapsed()
    );

    let f = |s: f64| if s == 0.0 { 0.0 } else { (-1.0_f64 / s).exp() };
    let mut max_err = 0.0f64;
    let mut argmax = 0.0f64;
    for i in 0..2021 {
        let s = i as f64 / 2020.0;
        let err = (bl.eval(s) - f(s)).abs();
        if err > max_err {
            max_err = err;
            argmax = s;
        }
    }
    println!("max |H - f| over 2021 points: {max_err:.3e} at s = {argmax:.4}");

    // drop the left-side information entirely: a one-sided Taylor
    // polynomial of the same degree at s = 1
    let taylor = bl.truncated(-1, n).unwrap();
    println!(
        "one-sided degree-{n} Taylor polynomial error at s = 0: {:+.4}",
        taylor.eval(0.0) - f(0.0)
    );
    println!("the blend wins by about four orders of magnitude");
}
