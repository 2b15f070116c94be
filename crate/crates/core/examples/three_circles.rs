//! Both fourth circles of three unit circles, and of a nested triple.
//!
//! cargo run --example three_circles

use descartes_dbz::{solve_fourth, verify_tangency, Branch, GeneralizedCircle, Point};

fn circle(x: f64, y: f64, r: f64) -> GeneralizedCircle<f64> {
    GeneralizedCircle::circle(Point::new(x, y), r).expect("positive radius")
}

fn show(title: &str, inputs: &[GeneralizedCircle<f64>; 3]) {
    println!("{title}");
    for branch in [Branch::Plus, Branch::Minus] {
        let sol = solve_fourth(&inputs[0], &inputs[1], &inputs[2], branch).expect("tangent triple");
        let worst = inputs.iter().map(|c| verify_tangency(&sol.circle4, c, 1e-9).residual).fold(0.0, f64::max);
        let center = sol.circle4.center().expect("proper circle");
        println!(
            "  {branch:>5}: k4 = {:+.12}  r4 = {:.12}  center = ({:.9}, {:.9})  enclosing = {}  residual = {worst:.1e}",
            sol.curvature4.0, sol.radius(), center.x, center.y, sol.enclosing
        );
    }
}

fn main() {
    show("three unit circles", &[circle(-1.0, 0.0, 1.0), circle(1.0, 0.0, 1.0), circle(0.0, 3f64.sqrt(), 1.0)]);

    // Two circles of radius 1 inside one of radius 2: the enclosing circle
    // has negative curvature, and the two answers are the circles of
    // radius 2/3 above and below.
    show("nested", &[circle(0.0, 0.0, 2.0), circle(-1.0, 0.0, 1.0), circle(1.0, 0.0, 1.0)]);
}
