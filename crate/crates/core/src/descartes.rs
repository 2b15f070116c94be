//! Fourth tangent circle for three mutually tangent generalized circles.
//!
//! `k4 = k1 + k2 + k3 ± 2√(k1k2 + k2k3 + k3k1)` with `k = 1/r` and the
//! convention `1/0 = 0`, so lines and point circles enter with curvature
//! zero. A circle that encloses the other two carries negative curvature.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arbelos::{dbz_family_extract, ArbelosConfig, ArbelosExtraction};
use crate::error::{Error, Result};
use crate::geometry::{verify_tangency, Curvature, Frame, GeneralizedCircle, Point, TangencyKind};
use crate::scalar::{dbz_inv, Scalar, DEFAULT_TOLERANCE};
use crate::series::DEFAULT_ORDER;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign<S: Scalar>(self) -> S {
        match self {
            Branch::Plus => S::one(),
            Branch::Minus => -S::one(),
        }
    }

    pub fn other(self) -> Branch {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigurationClass {
    ThreeCircles,
    OneLineTwoCircles,
    TwoParallelLinesOneCircle,
    OnePointTwoCircles,
    TwoPointsOneCircle,
    ThreePoints,
    ThreeLines,
}

impl fmt::Display for ConfigurationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Why a solution is not an ordinary fourth circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolutionNote {
    /// `k4 = 0` from exact cancellation; the fourth "circle" is a line.
    DegenerateEqualRadii,
    /// Between two parallel lines: a translated copy of the input circle.
    CongruentCopy,
    /// Two point circles on a circle: the answer is that circle.
    CoincidentWithInput,
    /// Three point circles: `r4 = 0` at the common point.
    PointCircle,
    /// Three parallel lines: `r4 = 0`, a point circle at the origin, which
    /// stands for the point at infinity.
    PointAtInfinity,
    /// Point circle between two circles: the Bankoff circle, obtained by the
    /// division by zero calculus rather than by touching.
    DivisionByZeroCalculus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourthCircleSolution<S> {
    pub class: ConfigurationClass,
    pub branch: Branch,
    pub curvature4: Curvature<S>,
    pub circle4: GeneralizedCircle<S>,
    /// `circle4` encloses the inputs (negative curvature).
    pub enclosing: bool,
    pub note: Option<SolutionNote>,
    /// Present for [`ConfigurationClass::OnePointTwoCircles`], in world
    /// coordinates.
    pub extraction: Option<ArbelosExtraction<S>>,
}

impl<S: Scalar> FourthCircleSolution<S> {
    /// `|1/k4|`, zero for lines and points.
    pub fn radius(&self) -> S {
        self.circle4.radius()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    pub tolerance: f64,
    pub order: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { tolerance: DEFAULT_TOLERANCE, order: DEFAULT_ORDER }
    }
}

/// `k1 + k2 + k3 ± 2√(k1k2 + k2k3 + k3k1)`.
pub fn descartes_curvature<S: Scalar>(k1: &S, k2: &S, k3: &S, branch: Branch) -> Result<Curvature<S>> {
    let products = [k1.clone() * k2.clone(), k2.clone() * k3.clone(), k3.clone() * k1.clone()];
    let scale = products.iter().fold(S::zero(), |acc, p| acc + p.abs());
    let mut radicand = products.into_iter().fold(S::zero(), |acc, p| acc + p);
    // float rounding around a zero radicand; the root would amplify it
    if radicand.negligible(&(scale * S::from_i64(100))) {
        radicand = S::zero();
    }
    if radicand < S::zero() {
        return Err(Error::NoRealSolution(radicand.to_string()));
    }
    let root = radicand.sqrt().ok_or_else(|| Error::InexactSqrt(radicand.to_string()))?;
    let sum = k1.clone() + k2.clone() + k3.clone();
    Ok(Curvature(sum + branch.sign::<S>() * S::two() * root))
}

fn check_mutual_tangency<S: Scalar>(cs: [&GeneralizedCircle<S>; 3], tol: f64) -> Result<[TangencyKind; 3]> {
    let pairs = [(0, 1), (1, 2), (0, 2)];
    let mut kinds = [TangencyKind::NotTangent; 3];
    for (slot, &(i, j)) in pairs.iter().enumerate() {
        let report = verify_tangency(cs[i], cs[j], tol);
        if !report.is_tangent() {
            return Err(Error::NotMutuallyTangent(i, j, report.residual));
        }
        kinds[slot] = report.kind;
    }
    Ok(kinds)
}

/// Classifies a mutually tangent triple by how many circles, lines and
/// points it holds.
pub fn classify<S: Scalar>(
    c1: &GeneralizedCircle<S>,
    c2: &GeneralizedCircle<S>,
    c3: &GeneralizedCircle<S>,
    tol: f64,
) -> Result<ConfigurationClass> {
    check_mutual_tangency([c1, c2, c3], tol)?;
    classify_by_count([c1, c2, c3])
}

fn classify_by_count<S: Scalar>(cs: [&GeneralizedCircle<S>; 3]) -> Result<ConfigurationClass> {
    use ConfigurationClass::*;
    let count = |kind: &str| cs.iter().filter(|c| c.kind_name() == kind).count();
    match (count("circle"), count("line"), count("point")) {
        (3, 0, 0) => Ok(ThreeCircles),
        (2, 1, 0) => Ok(OneLineTwoCircles),
        (1, 2, 0) => Ok(TwoParallelLinesOneCircle),
        (2, 0, 1) => Ok(OnePointTwoCircles),
        (1, 0, 2) => Ok(TwoPointsOneCircle),
        (0, 0, 3) => Ok(ThreePoints),
        (0, 3, 0) => Ok(ThreeLines),
        (c, l, p) => Err(Error::UnsupportedConfiguration(format!("{c} circles, {l} lines, {p} points"))),
    }
}

/// Fourth circle touching `c1`, `c2`, `c3` at the default tolerance.
pub fn solve_fourth<S: Scalar>(
    c1: &GeneralizedCircle<S>,
    c2: &GeneralizedCircle<S>,
    c3: &GeneralizedCircle<S>,
    branch: Branch,
) -> Result<FourthCircleSolution<S>> {
    solve_fourth_with(c1, c2, c3, branch, &SolveOptions::default())
}

pub fn solve_fourth_with<S: Scalar>(
    c1: &GeneralizedCircle<S>,
    c2: &GeneralizedCircle<S>,
    c3: &GeneralizedCircle<S>,
    branch: Branch,
    opts: &SolveOptions,
) -> Result<FourthCircleSolution<S>> {
    let inputs = [c1, c2, c3];
    let kinds = check_mutual_tangency(inputs, opts.tolerance)?;
    let class = classify_by_count(inputs)?;
    let circles: Vec<&GeneralizedCircle<S>> = inputs.iter().copied().filter(|c| c.kind_name() == "circle").collect();
    let lines: Vec<&GeneralizedCircle<S>> = inputs.iter().copied().filter(|c| c.kind_name() == "line").collect();
    let points: Vec<&GeneralizedCircle<S>> = inputs.iter().copied().filter(|c| c.kind_name() == "point").collect();

    let plain = |curvature4: Curvature<S>, circle4, enclosing, note| FourthCircleSolution {
        class,
        branch,
        curvature4,
        circle4,
        enclosing,
        note,
        extraction: None,
    };

    use ConfigurationClass::*;
    match class {
        ThreeCircles | OneLineTwoCircles => {
            if class == OneLineTwoCircles && kinds.contains(&TangencyKind::Internal) {
                return Err(Error::UnsupportedConfiguration("nested circles touching a line".into()));
            }
            solve_by_curvature(class, branch, inputs, &circles, lines.first().copied(), opts)
        }
        TwoParallelLinesOneCircle => {
            let (center, radius) = circle_parts(circles[0]);
            let GeneralizedCircle::Line { normal, .. } = lines[0] else { unreachable!() };
            let mut dir = normal.perp();
            if dir.x < S::zero() || (dir.x.is_zero() && dir.y < S::zero()) {
                dir = dir.scale(&-S::one());
            }
            let step = branch.sign::<S>() * S::two() * radius.clone();
            let circle4 = GeneralizedCircle::Circle { center: center.add(&dir.scale(&step)), radius: radius.clone() };
            Ok(plain(Curvature(radius.recip()), circle4, false, Some(SolutionNote::CongruentCopy)))
        }
        TwoPointsOneCircle => {
            let circle4 = circles[0].clone();
            Ok(plain(Curvature(circle4.radius().recip()), circle4, false, Some(SolutionNote::CoincidentWithInput)))
        }
        ThreePoints | ThreeLines => {
            let zero = S::zero();
            let k4 = descartes_curvature(&zero, &zero, &zero, branch)?;
            debug_assert!(dbz_inv(k4.value()).is_zero());
            let (at, note) = if class == ThreePoints {
                let at = points
                    .iter()
                    .filter_map(|p| p.center().cloned())
                    .min_by(lex_order)
                    .expect("three points");
                (at, SolutionNote::PointCircle)
            } else {
                (Point::origin(), SolutionNote::PointAtInfinity)
            };
            Ok(plain(k4, GeneralizedCircle::Point { at }, false, Some(note)))
        }
        OnePointTwoCircles => {
            if kinds.contains(&TangencyKind::Internal) {
                return Err(Error::UnsupportedConfiguration("point circle between nested circles".into()));
            }
            solve_point_between(branch, &circles, opts)
        }
    }
}

fn lex_order<S: Scalar>(a: &Point<S>, b: &Point<S>) -> std::cmp::Ordering {
    a.x.partial_cmp(&b.x)
        .unwrap_or(std::cmp::Ordering::Equal)
        .then(a.y.partial_cmp(&b.y).unwrap_or(std::cmp::Ordering::Equal))
}

fn circle_parts<S: Scalar>(g: &GeneralizedCircle<S>) -> (&Point<S>, &S) {
    match g {
        GeneralizedCircle::Circle { center, radius } => (center, radius),
        _ => unreachable!("caller filtered proper circles"),
    }
}

/// Signed curvature of proper circle `i`: negative when it encloses the
/// other circles it touches.
fn signed_curvatures<S: Scalar>(circles: &[&GeneralizedCircle<S>], tol: f64) -> Vec<S> {
    circles
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let r = c.radius();
            let encloses = circles.len() > 1
                && circles.iter().enumerate().filter(|&(j, _)| j != i).all(|(_, other)| {
                    other.radius() < r && verify_tangency(*c, *other, tol).kind == TangencyKind::Internal
                });
            if encloses {
                -r.recip()
            } else {
                r.recip()
            }
        })
        .collect()
}

fn max_residual<S: Scalar>(g: &GeneralizedCircle<S>, inputs: [&GeneralizedCircle<S>; 3], tol: f64) -> f64 {
    inputs.iter().map(|c| verify_tangency(g, *c, tol).residual).fold(0.0, f64::max)
}

fn solve_by_curvature<S: Scalar>(
    class: ConfigurationClass,
    branch: Branch,
    inputs: [&GeneralizedCircle<S>; 3],
    circles: &[&GeneralizedCircle<S>],
    line: Option<&GeneralizedCircle<S>>,
    opts: &SolveOptions,
) -> Result<FourthCircleSolution<S>> {
    let mut ks = signed_curvatures(circles, opts.tolerance);
    ks.resize(3, S::zero());
    let k4 = descartes_curvature(&ks[0], &ks[1], &ks[2], branch)?;
    let scale = ks.iter().fold(S::zero(), |acc, k| acc + k.abs());

    let (circle4, enclosing, note) = if k4.value().negligible(&scale) {
        let avoid = line.filter(|_| class == ConfigurationClass::OneLineTwoCircles);
        let tangent = common_tangent_line(circles, &ks, inputs, avoid, opts.tolerance)?;
        (tangent, false, Some(SolutionNote::DegenerateEqualRadii))
    } else {
        let rho4 = k4.value().recip();
        // zero radicand: both branches give one curvature and two mirror
        // image circles, one per branch
        let other = descartes_curvature(&ks[0], &ks[1], &ks[2], branch.other())?;
        let double_root = (other.value() == k4.value()).then_some(branch);
        let center = recover_center(circles, &ks, &rho4, inputs, opts.tolerance, double_root)?;
        let circle4 = GeneralizedCircle::circle(center, rho4.abs())?;
        (circle4, *k4.value() < S::zero(), None)
    };
    let worst = max_residual(&circle4, inputs, opts.tolerance);
    if worst >= opts.tolerance {
        return Err(Error::UnsupportedConfiguration(format!(
            "recovered fourth circle misses an input by {worst:e}"
        )));
    }
    Ok(FourthCircleSolution { class, branch, curvature4: k4, circle4, enclosing, note, extraction: None })
}

/// Solves `|p − p_i| = |ρ_i + ρ4|` for pairs of input circles and keeps the
/// candidate that best touches all three inputs.
///
/// With `double_root` set, every candidate within tolerance is a solution;
/// the plus branch takes the lexicographically first and the minus branch
/// the one farthest from it.
fn recover_center<S: Scalar>(
    circles: &[&GeneralizedCircle<S>],
    ks: &[S],
    rho4: &S,
    inputs: [&GeneralizedCircle<S>; 3],
    tol: f64,
    double_root: Option<Branch>,
) -> Result<Point<S>> {
    let mut best: Option<(f64, Point<S>)> = None;
    let mut valid: Vec<Point<S>> = Vec::new();
    let mut inexact = None;
    for i in 0..circles.len() {
        for j in i + 1..circles.len() {
            let (pi, _) = circle_parts(circles[i]);
            let (pj, _) = circle_parts(circles[j]);
            let (rho_i, rho_j) = (ks[i].recip(), ks[j].recip());
            let dij = if S::EXACT {
                (rho_i.clone() + rho_j.clone()).abs()
            } else {
                S::from_f64(pi.to_f64().dist(&pj.to_f64())).expect("finite distance")
            };
            let di2 = (rho_i + rho4.clone()).square();
            let dj2 = (rho_j + rho4.clone()).square();
            let along = (dij.square() + di2.clone() - dj2) / (S::two() * dij.clone());
            let mut h2 = di2.clone() - along.square();
            if h2 < S::zero() {
                if !h2.negligible(&(di2 * S::from_i64(1000))) {
                    continue;
                }
                h2 = S::zero();
            }
            let Some(h) = h2.sqrt() else {
                inexact = Some(h2.to_string());
                continue;
            };
            let axis = pj.sub(pi).scale(&dij.recip());
            let foot = pi.add(&axis.scale(&along));
            for sign in [S::one(), -S::one()] {
                let cand = foot.add(&axis.perp().scale(&(sign * h.clone())));
                let probe = GeneralizedCircle::circle_or_point(cand.clone(), rho4.abs())?;
                let res = max_residual(&probe, inputs, tol);
                if res < tol {
                    valid.push(cand.clone());
                }
                if best.as_ref().is_none_or(|(b, _)| res < *b) {
                    best = Some((res, cand));
                }
            }
        }
    }
    if let (Some(branch), Some(first)) = (double_root, valid.iter().min_by(|a, b| lex_order(a, b)).cloned()) {
        return Ok(match branch {
            Branch::Plus => first,
            Branch::Minus => valid
                .into_iter()
                .max_by(|a, b| a.dist2(&first).partial_cmp(&b.dist2(&first)).unwrap_or(std::cmp::Ordering::Equal))
                .unwrap_or(first),
        });
    }
    match (best, inexact) {
        (Some((_, p)), _) => Ok(p),
        (None, Some(v)) => Err(Error::InexactSqrt(v)),
        (None, None) => Err(Error::UnsupportedConfiguration("no real center for the fourth circle".into())),
    }
}

/// A line touching every input circle, found among the two external common
/// tangents of the first two circles. With `avoid` set, the candidate that
/// coincides with that line is skipped.
fn common_tangent_line<S: Scalar>(
    circles: &[&GeneralizedCircle<S>],
    ks: &[S],
    inputs: [&GeneralizedCircle<S>; 3],
    avoid: Option<&GeneralizedCircle<S>>,
    tol: f64,
) -> Result<GeneralizedCircle<S>> {
    if ks.iter().any(|k| *k < S::zero()) {
        return Err(Error::UnsupportedConfiguration("tangent line to an enclosing circle".into()));
    }
    let (p1, r1) = circle_parts(circles[0]);
    let (p2, r2) = circle_parts(circles[1]);
    let d = r1.clone() + r2.clone();
    let u = p2.sub(p1).scale(&d.recip());
    let cos = (r2.clone() - r1.clone()) / d;
    let sin2 = S::one() - cos.square();
    let sin = sin2.sqrt().ok_or_else(|| Error::InexactSqrt(sin2.to_string()))?;
    let mut best: Option<(f64, GeneralizedCircle<S>)> = None;
    for sign in [S::one(), -S::one()] {
        // circles lie on the side the normal points to
        let n = u.scale(&cos).add(&u.perp().scale(&(sign * sin.clone())));
        let offset = n.dot(p1) - r1.clone();
        let cand = GeneralizedCircle::Line { normal: n, offset };
        let score = match avoid {
            Some(line) => -line_mismatch(&cand, line),
            None => max_residual(&cand, inputs, tol),
        };
        if best.as_ref().is_none_or(|(b, _)| score < *b) {
            best = Some((score, cand));
        }
    }
    Ok(best.expect("two candidates").1)
}

fn line_mismatch<S: Scalar>(a: &GeneralizedCircle<S>, b: &GeneralizedCircle<S>) -> f64 {
    let (GeneralizedCircle::Line { normal: n1, offset: o1 }, GeneralizedCircle::Line { normal: n2, offset: o2 }) =
        (a.to_f64(), b.to_f64())
    else {
        return f64::INFINITY;
    };
    [1.0, -1.0]
        .into_iter()
        .map(|s| (n1.x - s * n2.x).abs() + (n1.y - s * n2.y).abs() + (o1 - s * o2).abs())
        .fold(f64::INFINITY, f64::min)
}

/// A point circle at the contact of two circles: rotate the pair onto the
/// arbelos frame (`C1` at `(−r1, 0)`, `C2` at `(r2, 0)`), run the division
/// by zero cascade and map the result back. `C1` is the larger circle, with
/// ties broken by center order, so the answer does not depend on input
/// order. Both branches give the same value: the `±` term has no constant
/// coefficient.
fn solve_point_between<S: Scalar>(
    branch: Branch,
    circles: &[&GeneralizedCircle<S>],
    opts: &SolveOptions,
) -> Result<FourthCircleSolution<S>> {
    let mut pair = [circles[0], circles[1]];
    pair.sort_by(|a, b| {
        let (pa, ra) = circle_parts(a);
        let (pb, rb) = circle_parts(b);
        rb.partial_cmp(ra).unwrap_or(std::cmp::Ordering::Equal).then(lex_order(pa, pb))
    });
    let (p1, r1) = circle_parts(pair[0]);
    let (p2, r2) = circle_parts(pair[1]);
    let d = if S::EXACT {
        r1.clone() + r2.clone()
    } else {
        S::from_f64(p1.to_f64().dist(&p2.to_f64())).expect("finite distance")
    };
    let ex = p2.sub(p1).scale(&d.recip());
    let frame = Frame { origin: p1.add(&ex.scale(r1)), ex: ex.clone(), ey: ex.perp() };
    let local = dbz_family_extract(&ArbelosConfig::new(r1.clone(), r2.clone())?, opts.order)?;
    let extraction = ArbelosExtraction {
        point: frame.map(&local.point),
        bankoff: frame.map(&local.bankoff),
        incircle: frame.map(&local.incircle),
        forms: local.forms,
    };
    Ok(FourthCircleSolution {
        class: ConfigurationClass::OnePointTwoCircles,
        branch,
        curvature4: Curvature(extraction.bankoff.radius().recip()),
        circle4: extraction.bankoff.clone(),
        enclosing: false,
        note: Some(SolutionNote::DivisionByZeroCalculus),
        extraction: Some(extraction),
    })
}

/// Radius from the minus branch with a line and two circles `r1 ≥ r2`:
/// `1/√r4 = 1/√r2 − 1/√r1`, where `C2` becomes the incircle of the other
/// three.
#[derive(Clone, Debug, PartialEq)]
pub struct LineCaseRadius<S> {
    /// Zero when degenerate.
    pub radius: S,
    /// `r1 = r2`: the two roots cancel and the solution is the second common
    /// tangent line.
    pub degenerate_equal_radii: bool,
}

pub fn minus_branch_line_case<S: Scalar>(r1: &S, r2: &S) -> Result<LineCaseRadius<S>> {
    if *r2 <= S::zero() {
        return Err(Error::InvalidRadius(r2.to_string()));
    }
    if r1 < r2 {
        return Err(Error::Precondition(format!("expected r1 >= r2, got r1 = {r1}, r2 = {r2}")));
    }
    let k4 = descartes_curvature(&r1.recip(), &r2.recip(), &S::zero(), Branch::Minus)?;
    Ok(LineCaseRadius { radius: dbz_inv(k4.value()), degenerate_equal_radii: k4.value().is_zero() })
}

/// The plus-branch counterpart: `1/√r4 = 1/√r1 + 1/√r2`.
pub fn plus_branch_line_case<S: Scalar>(r1: &S, r2: &S) -> Result<S> {
    for r in [r1, r2] {
        if *r <= S::zero() {
            return Err(Error::InvalidRadius(r.to_string()));
        }
    }
    let k4 = descartes_curvature(&r1.recip(), &r2.recip(), &S::zero(), Branch::Plus)?;
    Ok(k4.value().recip())
}

/// `r4` from the descartes identity with `r3 = −(r1 + r2)`, the circle on
/// which `C1` and `C2` sit internally. Equals the arbelos incircle radius.
pub fn internal_tangency_check<S: Scalar>(r1: &S, r2: &S) -> Result<S> {
    for r in [r1, r2] {
        if *r <= S::zero() {
            return Err(Error::InvalidRadius(r.to_string()));
        }
    }
    let k3 = -(r1.clone() + r2.clone()).recip();
    let k4 = descartes_curvature(&r1.recip(), &r2.recip(), &k3, Branch::Plus)?;
    Ok(k4.value().recip())
}
