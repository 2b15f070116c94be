//! Fourth tangent circle for every configuration of three mutually tangent
//! generalized circles (circles, lines, point circles).
//!
//! Lines and point circles have curvature zero under the convention
//! `1/0 = 0`, which lets the Descartes relation cover them directly. The one
//! configuration where it breaks, a point circle at the contact of two
//! circles, is handled with the division by zero calculus on Laurent
//! series, which yields the Bankoff circle and the incircle of the arbelos.
//!
//! Every computation is generic over [`Scalar`]: `f64`, or [`Rational`] when
//! the identities should hold exactly.
//!
//! ```
//! use descartes_dbz::{solve_fourth, Branch, GeneralizedCircle, Point};
//!
//! let line = GeneralizedCircle::horizontal_line(0.0);
//! let big = GeneralizedCircle::circle(Point::new(0.0, 4.0), 4.0).unwrap();
//! let small = GeneralizedCircle::circle(Point::new(4.0, 1.0), 1.0).unwrap();
//! let sol = solve_fourth(&big, &small, &line, Branch::Plus).unwrap();
//! assert!((sol.radius() - 4.0 / 9.0).abs() < 1e-12);
//! ```

pub mod arbelos;
pub mod cli;
pub mod descartes;
pub mod error;
pub mod geometry;
pub mod scalar;
pub mod series;
pub mod svg;

pub use arbelos::{
    dbz_family_extract, family_equation_coeffs, family_member, ow_circle, xi_substitution_dbz, ArbelosConfig,
    ArbelosExtraction, FamilyMember,
};
pub use descartes::{
    classify, descartes_curvature, internal_tangency_check, minus_branch_line_case, plus_branch_line_case,
    solve_fourth, solve_fourth_with, Branch, ConfigurationClass, FourthCircleSolution, LineCaseRadius,
    SolutionNote, SolveOptions,
};
pub use error::{Error, Result};
pub use geometry::{
    curvature, equation_to_circle, exact_tangency, verify_tangency, CircleEquation, Curvature, GeneralizedCircle,
    Point, TangencyKind, TangencyReport,
};
pub use scalar::{dbz_inv, Rational, Scalar, DEFAULT_TOLERANCE};
pub use series::{LaurentSeries, DEFAULT_ORDER};
