//! Laurent series arithmetic and the division by zero calculus.

use descartes_dbz::{LaurentSeries, Rational, Scalar};

fn main() {
    let zero = Rational::from_i64(0);

    // 1/(w(1 − w)) = 1/w + 1 + w + w² + ...
    let p = LaurentSeries::parse(zero.clone(), "-1*w^2 + 1*w^1").unwrap();
    let q = p.recip(6).unwrap();
    println!("1/(w − w²) = {q}");
    println!("  C_0 = {}  (the value assigned at w = 0)", q.dbz_eval().unwrap());
    println!("  C_3 = {}  via shift_divide", q.shift_divide(3).dbz_eval().unwrap());
    println!("  3rd derivative at 0 = {}", q.dbz_derivative(3).unwrap());

    // √(4 + w) = 2 + w/4 − w²/64 + ...
    let s = LaurentSeries::parse(zero.clone(), "4 + 1*w").unwrap().sqrt(4).unwrap();
    println!("sqrt(4 + w) = {s}");
    println!("  squared back: {}", s.mul(&s).unwrap());

    // the classic example: 1/0 = 0, and 1/w has C_0 = 0 at w = 0
    let inv = LaurentSeries::monomial(zero, -1, Rational::from_i64(1));
    println!("1/w at 0 -> {}", inv.dbz_eval().unwrap());

    // floats work the same way
    let f = LaurentSeries::parse(0.0, "1*w^-2 + 0.5*w^-1 + 3").unwrap();
    println!("C_0 of {f} = {}", f.dbz_eval().unwrap());
}
