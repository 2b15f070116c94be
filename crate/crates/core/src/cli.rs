//! Command implementations behind the `descartes-dbz` binary.
//!
//! Each command takes parsed input and returns the text to print, or a
//! [`CliError`] carrying the process exit code. Nothing here touches stdin,
//! stdout or the process; the binary does that.

use std::fmt;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::arbelos::{dbz_family_extract, family_member, ow_circle, ArbelosConfig};
use crate::descartes::{classify, solve_fourth_with, Branch, FourthCircleSolution, SolveOptions};
use crate::error::Error;
use crate::geometry::{verify_tangency, GeneralizedCircle, Point};
use crate::scalar::{round_sig15, Rational, Scalar, DEFAULT_TOLERANCE};
use crate::series::DEFAULT_ORDER;
use crate::svg::{self, Shape};

pub const EXIT_NOT_TANGENT: i32 = 2;
pub const EXIT_NO_REAL_SOLUTION: i32 = 3;
pub const EXIT_BAD_INPUT: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Self {
        Self::new(EXIT_BAD_INPUT, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (exit {})", self.message, self.code)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotMutuallyTangent(..) => EXIT_NOT_TANGENT,
            Error::NoRealSolution(_) | Error::VanishingDenominator(_) => EXIT_NO_REAL_SOLUTION,
            _ => EXIT_BAD_INPUT,
        };
        CliError::new(code, e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// Command-line values that override the scene file.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Overrides {
    pub branch: Option<Branch>,
    pub tolerance: Option<f64>,
    pub mode: Option<Mode>,
    pub order: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SceneOptions {
    pub branch: Branch,
    pub tolerance: f64,
    pub mode: Mode,
    pub order: usize,
}

impl Default for SceneOptions {
    fn default() -> Self {
        SceneOptions { branch: Branch::Plus, tolerance: DEFAULT_TOLERANCE, mode: Mode::Float, order: DEFAULT_ORDER }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneFile {
    circles: Vec<Value>,
    #[serde(default)]
    branch: Option<Branch>,
    #[serde(default)]
    tolerance: Option<f64>,
    #[serde(default)]
    mode: Option<Mode>,
    #[serde(default)]
    order: Option<usize>,
}

/// Input circles plus options, before the coefficient domain is chosen.
#[derive(Clone, Debug, PartialEq)]
pub struct SceneDescription {
    circles: Vec<Value>,
    pub options: SceneOptions,
}

impl SceneDescription {
    /// Parses `{"circles": [...], "branch": .., "tolerance": .., "mode": .., "order": ..}`
    /// (options optional); a bare array of circles is accepted too.
    pub fn parse(text: &str, overrides: &Overrides) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed scene: {e}")))?;
        let file = match value {
            Value::Array(circles) => SceneFile { circles, branch: None, tolerance: None, mode: None, order: None },
            other => serde_json::from_value(other).map_err(|e| CliError::input(format!("malformed scene: {e}")))?,
        };
        let defaults = SceneOptions::default();
        let options = SceneOptions {
            branch: overrides.branch.or(file.branch).unwrap_or(defaults.branch),
            tolerance: overrides.tolerance.or(file.tolerance).unwrap_or(defaults.tolerance),
            mode: overrides.mode.or(file.mode).unwrap_or(defaults.mode),
            order: overrides.order.or(file.order).unwrap_or(defaults.order),
        };
        if !(options.tolerance > 0.0 && options.tolerance.is_finite()) {
            return Err(CliError::input(format!("tolerance must be positive, got {}", options.tolerance)));
        }
        Ok(SceneDescription { circles: file.circles, options })
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn circles<S: Scalar>(&self) -> Result<Vec<GeneralizedCircle<S>>, CliError> {
        self.circles
            .iter()
            .enumerate()
            .map(|(i, v)| {
                serde_json::from_value(v.clone()).map_err(|e| CliError::input(format!("circle {i}: {e}")))
            })
            .collect()
    }

    fn triple<S: Scalar>(&self) -> Result<[GeneralizedCircle<S>; 3], CliError> {
        let cs = self.circles::<S>()?;
        <[GeneralizedCircle<S>; 3]>::try_from(cs)
            .map_err(|cs| CliError::input(format!("expected 3 circles, got {}", cs.len())))
    }

    fn solve_options(&self) -> SolveOptions {
        SolveOptions { tolerance: self.options.tolerance, order: self.options.order }
    }
}

fn num(x: f64) -> Value {
    json!(round_sig15(x))
}

fn to_value<S: Scalar>(g: &GeneralizedCircle<S>) -> Value {
    serde_json::to_value(g).expect("circle encodes")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json encodes") + "\n"
}

fn solution_json<S: Scalar>(sol: &FourthCircleSolution<S>, inputs: &[GeneralizedCircle<S>], tol: f64) -> Value {
    let mut out = Map::new();
    out.insert("class".into(), json!(sol.class.to_string()));
    out.insert("branch".into(), json!(sol.branch.to_string()));
    out.insert("circle4".into(), to_value(&sol.circle4));
    out.insert("curvature4".into(), num(sol.curvature4.0.to_f64()));
    out.insert("r4".into(), num(sol.radius().to_f64()));
    out.insert("enclosing".into(), json!(sol.enclosing));
    out.insert("note".into(), serde_json::to_value(sol.note).expect("note encodes"));
    let residuals: Vec<Value> = inputs.iter().map(|c| num(verify_tangency(&sol.circle4, c, tol).residual)).collect();
    out.insert("residuals".into(), Value::Array(residuals));
    if let Some(x) = &sol.extraction {
        out.insert("point".into(), to_value(&x.point));
        out.insert("bankoff".into(), to_value(&x.bankoff));
        out.insert("incircle".into(), to_value(&x.incircle));
    }
    if S::EXACT {
        let mut exact = Map::new();
        exact.insert("curvature4".into(), json!(sol.curvature4.0.rational_repr()));
        exact.insert("r4".into(), json!(sol.radius().rational_repr()));
        out.insert("rational".into(), Value::Object(exact));
    }
    Value::Object(out)
}

fn solve_in<S: Scalar>(scene: &SceneDescription) -> Result<Value, CliError> {
    let [a, b, c] = scene.triple::<S>()?;
    let sol = solve_fourth_with(&a, &b, &c, scene.options.branch, &scene.solve_options())?;
    Ok(solution_json(&sol, &[a, b, c], scene.options.tolerance))
}

/// `solve`: classify, solve, and report oracle residuals against each input.
pub fn cmd_solve(scene: &SceneDescription) -> Result<String, CliError> {
    let v = match scene.options.mode {
        Mode::Float => solve_in::<f64>(scene)?,
        Mode::Exact => solve_in::<Rational>(scene)?,
    };
    Ok(pretty(&v))
}

/// `classify`: the configuration class of a mutually tangent triple.
pub fn cmd_classify(scene: &SceneDescription) -> Result<String, CliError> {
    let class = match scene.options.mode {
        Mode::Float => {
            let [a, b, c] = scene.triple::<f64>()?;
            classify(&a, &b, &c, scene.options.tolerance)?
        }
        Mode::Exact => {
            let [a, b, c] = scene.triple::<Rational>()?;
            classify(&a, &b, &c, scene.options.tolerance)?
        }
    };
    Ok(pretty(&json!({ "class": class.to_string() })))
}

/// `verify`: the tangency oracle on every pair of circles in the scene.
/// Exits with [`EXIT_NOT_TANGENT`] when some pair fails, after printing.
pub fn cmd_verify(scene: &SceneDescription) -> (String, i32) {
    let circles = match scene.options.mode {
        Mode::Float => scene.circles::<f64>(),
        Mode::Exact => scene.circles::<Rational>().map(|cs| cs.iter().map(GeneralizedCircle::to_f64).collect()),
    };
    let circles = match circles {
        Ok(cs) => cs,
        Err(e) => return (pretty(&json!({ "error": e.message })), e.code),
    };
    let mut pairs = Vec::new();
    let mut all = true;
    for i in 0..circles.len() {
        for j in i + 1..circles.len() {
            let r = verify_tangency(&circles[i], &circles[j], scene.options.tolerance);
            all &= r.is_tangent();
            pairs.push(json!({ "i": i, "j": j, "kind": r.kind, "residual": num(r.residual) }));
        }
    }
    let code = if all { 0 } else { EXIT_NOT_TANGENT };
    (pretty(&json!({ "all_tangent": all, "pairs": pairs })), code)
}

fn family_in<S: Scalar>(cfg: &ArbelosConfig<S>, ws: &[f64], tol: f64) -> (Vec<Value>, bool) {
    let mut failed = false;
    let records = ws
        .iter()
        .map(|&w| {
            let Some(w_s) = S::from_f64(w) else {
                failed = true;
                return json!({ "w": w, "error": "non-finite w" });
            };
            match family_member(&w_s, cfg) {
                Ok(m) => {
                    let mut rec = Map::new();
                    rec.insert("w".into(), num(w));
                    rec.insert("x4".into(), num(m.x4.to_f64()));
                    rec.insert("y4".into(), num(m.y4.to_f64()));
                    rec.insert("r4".into(), num(m.r4.to_f64()));
                    rec.insert("D".into(), num(m.d.to_f64()));
                    let circle = m.circle();
                    let mut res = Map::new();
                    res.insert("c1".into(), num(verify_tangency(&circle, &cfg.c1(), tol).residual));
                    res.insert("c2".into(), num(verify_tangency(&circle, &cfg.c2(), tol).residual));
                    if !w_s.is_zero() {
                        if let Ok(c3) = ow_circle(&w_s.recip(), cfg) {
                            res.insert("c3".into(), num(verify_tangency(&circle, &c3, tol).residual));
                        }
                    }
                    rec.insert("residuals".into(), Value::Object(res));
                    if S::EXACT {
                        rec.insert(
                            "rational".into(),
                            json!({
                                "x4": m.x4.rational_repr(),
                                "y4": m.y4.rational_repr(),
                                "r4": m.r4.rational_repr(),
                                "D": m.d.rational_repr(),
                            }),
                        );
                    }
                    Value::Object(rec)
                }
                Err(e) => {
                    failed = true;
                    json!({ "w": num(w), "error": e.to_string() })
                }
            }
        })
        .collect();
    (records, failed)
}

/// `family`: samples of the fourth-circle family, one record per `w`.
/// Entries with `D = 0` carry an error and the exit code becomes
/// [`EXIT_NO_REAL_SOLUTION`].
pub fn cmd_family(r1: f64, r2: f64, ws: &[f64], mode: Mode, tol: f64) -> Result<(String, i32), CliError> {
    let (records, failed) = match mode {
        Mode::Float => family_in(&ArbelosConfig::new(r1, r2)?, ws, tol),
        Mode::Exact => {
            let conv = |x: f64| <Rational as Scalar>::from_f64(x).ok_or_else(|| CliError::input("non-finite radius"));
            let cfg = ArbelosConfig::new(conv(r1)?, conv(r2)?)?;
            cfg.sqrt_r1r2()?;
            family_in(&cfg, ws, tol)
        }
    };
    let code = if failed { EXIT_NO_REAL_SOLUTION } else { 0 };
    Ok((pretty(&Value::Array(records)), code))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// Line and two circles, plus branch: the incircle of the curvilinear
    /// triangle.
    LineIncircle,
    /// Same, minus branch: the smaller circle becomes the incircle.
    LineExcircle,
    /// Arbelos with the Bankoff circle (red) and incircle (green).
    Arbelos,
}

impl Figure {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "fig1" => Some(Figure::LineIncircle),
            "fig2" => Some(Figure::LineExcircle),
            "fig3" => Some(Figure::Arbelos),
            _ => None,
        }
    }

    /// Radii used when none are given.
    pub fn default_radii(self) -> (f64, f64) {
        match self {
            Figure::LineIncircle | Figure::LineExcircle => (4.0, 1.0),
            Figure::Arbelos => (2.0, 1.0),
        }
    }
}

/// Circles `r1`, `r2` resting on `y = 0` and touching each other.
pub fn line_case_inputs(r1: f64, r2: f64) -> [GeneralizedCircle<f64>; 3] {
    [
        GeneralizedCircle::Circle { center: Point::new(0.0, r1), radius: r1 },
        GeneralizedCircle::Circle { center: Point::new(2.0 * (r1 * r2).sqrt(), r2), radius: r2 },
        GeneralizedCircle::horizontal_line(0.0),
    ]
}

/// Shapes drawn for a figure, in stroke order.
pub fn figure_shapes(fig: Figure, r1: f64, r2: f64) -> Result<Vec<Shape>, CliError> {
    match fig {
        Figure::LineIncircle | Figure::LineExcircle => {
            let branch = if fig == Figure::LineIncircle { Branch::Plus } else { Branch::Minus };
            let [a, b, line] = line_case_inputs(r1, r2);
            let sol = solve_fourth_with(&a, &b, &line, branch, &SolveOptions::default())?;
            Ok(vec![
                Shape::new("line", "black", line),
                Shape::new("c1", "black", a),
                Shape::new("c2", "black", b),
                Shape::new("c4", "blue", sol.circle4),
            ])
        }
        Figure::Arbelos => {
            let cfg = ArbelosConfig::new(r1, r2)?;
            let x = dbz_family_extract(&cfg, DEFAULT_ORDER)?;
            Ok(vec![
                Shape::new("outer", "black", cfg.outer()),
                Shape::new("c1", "black", cfg.c1()),
                Shape::new("c2", "black", cfg.c2()),
                Shape::new("bankoff", "red", x.bankoff),
                Shape::new("incircle", "green", x.incircle),
                Shape::new("origin", "black", x.point),
            ])
        }
    }
}

/// Inputs in black, plus the fourth circle in blue when the scene is a
/// solvable triple.
pub fn scene_shapes(scene: &SceneDescription) -> Result<Vec<Shape>, CliError> {
    if scene.is_empty() {
        return Err(CliError::input("empty scene"));
    }
    let circles = scene.circles::<f64>()?;
    let mut shapes: Vec<Shape> =
        circles.iter().enumerate().map(|(i, c)| Shape::new(format!("in{i}"), "black", c.clone())).collect();
    if let [a, b, c] = circles.as_slice() {
        let sol = solve_fourth_with(a, b, c, scene.options.branch, &scene.solve_options())?;
        shapes.push(Shape::new("c4", "blue", sol.circle4));
    }
    Ok(shapes)
}

pub enum RenderTarget<'a> {
    Figure { figure: Figure, r1: f64, r2: f64 },
    Scene(&'a SceneDescription),
}

/// `render`: writes an SVG file.
pub fn cmd_render(target: &RenderTarget<'_>, out: &Path) -> Result<(), CliError> {
    let shapes = match target {
        RenderTarget::Figure { figure, r1, r2 } => figure_shapes(*figure, *r1, *r2)?,
        RenderTarget::Scene(scene) => scene_shapes(scene)?,
    };
    std::fs::write(out, svg::render(&shapes))
        .map_err(|e| CliError::new(EXIT_IO, format!("cannot write {}: {e}", out.display())))
}
