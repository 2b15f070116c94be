//! Letting the third radius be ξ² and shrinking it to zero.
//!
//! The curvature `1/r1 + 1/r2 + 1/ξ² ± (2/ξ)√(ξ²/(r1r2) + 1/r1 + 1/r2)` has
//! a pole at ξ = 0; its `C_0` is `1/r1 + 1/r2`, the curvature of the
//! Bankoff circle.

use descartes_dbz::{xi_substitution_dbz, Rational, Scalar, DEFAULT_ORDER};

fn main() {
    // exact mode needs 1/r1 + 1/r2 to be a rational square: 1 is, 4/3 is not
    for (r1, r2) in [(2, 2), (1, 3)] {
        let (a, b) = (Rational::from_i64(r1), Rational::from_i64(r2));
        match xi_substitution_dbz(&a, &b, true, DEFAULT_ORDER) {
            Ok(k) => println!("exact r1 = {r1}, r2 = {r2}: curvature {k}, radius {}", k.recip()),
            Err(e) => println!("exact r1 = {r1}, r2 = {r2}: {e}"),
        }
    }
    let (a, b) = (Rational::from_ratio(1, 2), Rational::from_ratio(1, 2));
    let k = xi_substitution_dbz(&a, &b, false, DEFAULT_ORDER).unwrap();
    println!("exact r1 = r2 = 1/2: curvature {k}, radius {}", k.recip());

    for (r1, r2) in [(2.0, 1.0), (0.3, 7.5)] {
        let plus = xi_substitution_dbz(&r1, &r2, true, DEFAULT_ORDER).unwrap();
        let minus = xi_substitution_dbz(&r1, &r2, false, DEFAULT_ORDER).unwrap();
        println!("float r1 = {r1}, r2 = {r2}: {plus} / {minus}, bankoff radius {}", r1 * r2 / (r1 + r2));
    }
}
