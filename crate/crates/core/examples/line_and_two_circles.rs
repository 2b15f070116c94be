//! Circles of radius r1 and r2 resting on a line.
//!
//! The plus branch gives the circle squeezed between them with
//! `1/√r4 = 1/√r1 + 1/√r2`; the minus branch gives the circle on the far side
//! of the smaller one, `1/√r4 = 1/√r2 − 1/√r1`, which degenerates to the
//! second common tangent line when `r1 = r2`.

use descartes_dbz::cli::line_case_inputs;
use descartes_dbz::{minus_branch_line_case, plus_branch_line_case, solve_fourth, Branch, Rational, Scalar};

fn main() {
    for (r1, r2) in [(4, 1), (9, 4), (1, 1)] {
        let (q1, q2) = (Rational::from_i64(r1), Rational::from_i64(r2));
        let plus = plus_branch_line_case(&q1, &q2).unwrap();
        let minus = minus_branch_line_case(&q1, &q2).unwrap();
        println!("r1 = {r1}, r2 = {r2}");
        println!("  exact plus  r4 = {plus}");
        if minus.degenerate_equal_radii {
            println!("  exact minus: the second common tangent (curvature 0)");
        } else {
            println!("  exact minus r4 = {}", minus.radius);
        }

        let [a, b, line] = line_case_inputs(r1 as f64, r2 as f64);
        for branch in [Branch::Plus, Branch::Minus] {
            let sol = solve_fourth(&a, &b, &line, branch).unwrap();
            println!("  solver {branch:<5} {:?} ({:?})", sol.circle4, sol.note);
        }
    }
}
