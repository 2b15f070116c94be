use descartes_dbz::{solve_fourth, Branch, GeneralizedCircle, Point, Rational, Scalar};

fn q(p: i64, d: i64) -> Rational {
    Rational::from_ratio(p, d)
}

fn report(name: &str, triple: [GeneralizedCircle<Rational>; 3]) {
    let sol = solve_fourth(&triple[0], &triple[1], &triple[2], Branch::Plus).unwrap();
    println!("{name:<28} class {:<26} k4 = {:<4} r4 = {:<4} {:?}", sol.class, sol.curvature4, sol.radius(), sol.note);
    println!("{:<28} -> {}", "", serde_json::to_string(&sol.circle4).unwrap());
}

/// Every configuration where a zero curvature enters, solved exactly.
fn main() {
    let line = |y: i64| GeneralizedCircle::horizontal_line(q(y, 1));
    let unit = |x: i64, y: i64| GeneralizedCircle::Circle { center: Point::new(q(x, 1), q(y, 1)), radius: q(1, 1) };
    let pt = |x: i64, y: i64| GeneralizedCircle::point(q(x, 1), q(y, 1));

    report("two parallel lines + circle", [line(0), line(2), unit(0, 1)]);
    report("three parallel lines", [line(0), line(1), line(5)]);
    report("three points", [pt(3, 4), pt(3, 4), pt(3, 4)]);
    report("two points + circle", [pt(1, 1), unit(0, 1), pt(1, 1)]);
    report("point + two circles", [pt(0, 0), unit(-1, 0), unit(1, 0)]);
}
