//! Generalized circles (proper circles, lines, point circles), their
//! quadratic-form equations, and the numeric tangency oracle.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{dbz_inv, round_sig15, Scalar, DEFAULT_TOLERANCE};

#[derive(Clone, Debug, PartialEq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(S::zero(), S::zero())
    }

    pub fn dist2(&self, other: &Self) -> S {
        (self.x.clone() - other.x.clone()).square() + (self.y.clone() - other.y.clone()).square()
    }

    pub fn to_f64(&self) -> Point<f64> {
        Point::new(self.x.to_f64(), self.y.to_f64())
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        Point::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        Point::new(self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }

    pub(crate) fn scale(&self, k: &S) -> Self {
        Point::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub(crate) fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// Counterclockwise quarter turn.
    pub(crate) fn perp(&self) -> Self {
        Point::new(-self.y.clone(), self.x.clone())
    }
}

impl Point<f64> {
    pub fn dist(&self, other: &Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A proper circle, a straight line, or a point circle.
///
/// Zero radius is always a [`GeneralizedCircle::Point`], never a circle with
/// `radius == 0`. Lines keep a unit normal and the signed distance of the
/// line from the origin along it: the line is `{p : normal · p = offset}`.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneralizedCircle<S> {
    Circle { center: Point<S>, radius: S },
    Line { normal: Point<S>, offset: S },
    Point { at: Point<S> },
}

/// Signed curvature. Zero for lines and point circles; negative for a
/// circle that encloses the others it touches.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Curvature<S>(pub S);

impl<S: Scalar> Curvature<S> {
    pub fn value(&self) -> &S {
        &self.0
    }

    /// `1/k` under `1/0 = 0`; the signed radius.
    pub fn signed_radius(&self) -> S {
        dbz_inv(&self.0)
    }
}

impl<S: Scalar> fmt::Display for Curvature<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<S: Scalar> GeneralizedCircle<S> {
    pub fn circle(center: Point<S>, radius: S) -> Result<Self> {
        if radius > S::zero() {
            Ok(GeneralizedCircle::Circle { center, radius })
        } else {
            Err(Error::InvalidRadius(radius.to_string()))
        }
    }

    /// Builds a circle, or a point circle when `radius` is zero.
    pub fn circle_or_point(center: Point<S>, radius: S) -> Result<Self> {
        if radius.is_zero() {
            Ok(GeneralizedCircle::Point { at: center })
        } else {
            Self::circle(center, radius)
        }
    }

    /// Line `normal · p = offset`; the normal is normalized here.
    pub fn line(normal: Point<S>, offset: S) -> Result<Self> {
        let n2 = normal.dot(&normal);
        if n2.is_zero() {
            return Err(Error::DegenerateLine);
        }
        let norm = n2.sqrt().ok_or_else(|| Error::InexactSqrt(n2.to_string()))?;
        Ok(GeneralizedCircle::Line {
            normal: Point::new(normal.x / norm.clone(), normal.y / norm.clone()),
            offset: offset / norm,
        })
    }

    /// The line `y = y0`.
    pub fn horizontal_line(y0: S) -> Self {
        GeneralizedCircle::Line { normal: Point::new(S::zero(), S::one()), offset: y0 }
    }

    pub fn point(x: S, y: S) -> Self {
        GeneralizedCircle::Point { at: Point::new(x, y) }
    }

    /// Radius, with lines and point circles at `r = 0`.
    pub fn radius(&self) -> S {
        match self {
            GeneralizedCircle::Circle { radius, .. } => radius.clone(),
            _ => S::zero(),
        }
    }

    pub fn center(&self) -> Option<&Point<S>> {
        match self {
            GeneralizedCircle::Circle { center, .. } => Some(center),
            GeneralizedCircle::Point { at } => Some(at),
            GeneralizedCircle::Line { .. } => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            GeneralizedCircle::Circle { .. } => "circle",
            GeneralizedCircle::Line { .. } => "line",
            GeneralizedCircle::Point { .. } => "point",
        }
    }

    pub fn to_f64(&self) -> GeneralizedCircle<f64> {
        match self {
            GeneralizedCircle::Circle { center, radius } => {
                GeneralizedCircle::Circle { center: center.to_f64(), radius: radius.to_f64() }
            }
            GeneralizedCircle::Line { normal, offset } => {
                GeneralizedCircle::Line { normal: normal.to_f64(), offset: offset.to_f64() }
            }
            GeneralizedCircle::Point { at } => GeneralizedCircle::Point { at: at.to_f64() },
        }
    }

    pub fn to_equation(&self) -> CircleEquation<S> {
        CircleEquation::from_circle(self)
    }
}

/// Unsigned curvature of a single generalized circle: `1/r`, and `0` for
/// lines and point circles.
pub fn curvature<S: Scalar>(g: &GeneralizedCircle<S>) -> Curvature<S> {
    Curvature(dbz_inv(&g.radius()))
}

/// `A(x² + y²) + Bx + Cy + D = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleEquation<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> CircleEquation<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        CircleEquation { a, b, c, d }
    }

    pub fn zero() -> Self {
        CircleEquation::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn from_circle(g: &GeneralizedCircle<S>) -> Self {
        match g {
            GeneralizedCircle::Circle { center, radius } => Self::centered(center, &radius.square()),
            GeneralizedCircle::Point { at } => Self::centered(at, &S::zero()),
            GeneralizedCircle::Line { normal, offset } => {
                CircleEquation::new(S::zero(), normal.x.clone(), normal.y.clone(), -offset.clone())
            }
        }
    }

    fn centered(center: &Point<S>, r2: &S) -> Self {
        let two = S::two();
        CircleEquation::new(
            S::one(),
            -(two.clone() * center.x.clone()),
            -(two * center.y.clone()),
            center.dot(center) - r2.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// `B² + C² − 4AD`.
    pub fn discriminant(&self) -> S {
        self.b.square() + self.c.square() - S::from_i64(4) * self.a.clone() * self.d.clone()
    }

    pub fn evaluate(&self, p: &Point<S>) -> S {
        self.a.clone() * p.dot(p) + self.b.clone() * p.x.clone() + self.c.clone() * p.y.clone() + self.d.clone()
    }

    pub fn scale(&self, k: &S) -> Self {
        CircleEquation::new(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.c.clone() * k.clone(),
            self.d.clone() * k.clone(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        CircleEquation::new(
            self.a.clone() + other.a.clone(),
            self.b.clone() + other.b.clone(),
            self.c.clone() + other.c.clone(),
            self.d.clone() + other.d.clone(),
        )
    }

    /// The vanishing locus as a generalized circle.
    ///
    /// Exact in the rational domain whenever the radius and line normal
    /// are rational; otherwise [`Error::InexactSqrt`].
    pub fn to_circle(&self) -> Result<GeneralizedCircle<S>> {
        equation_to_circle(self)
    }
}

pub fn equation_to_circle<S: Scalar>(e: &CircleEquation<S>) -> Result<GeneralizedCircle<S>> {
    if e.a.is_zero() {
        if e.b.is_zero() && e.c.is_zero() {
            return Err(Error::AllZeroEquation);
        }
        return GeneralizedCircle::line(Point::new(e.b.clone(), e.c.clone()), -e.d.clone());
    }
    let two_a = S::two() * e.a.clone();
    let center = Point::new(-e.b.clone() / two_a.clone(), -e.c.clone() / two_a.clone());
    let disc = e.discriminant();
    let scale = e.b.square() + e.c.square() + (S::from_i64(4) * e.a.clone() * e.d.clone()).abs();
    if disc.negligible(&scale) {
        return Ok(GeneralizedCircle::Point { at: center });
    }
    if disc < S::zero() {
        return Err(Error::EmptyLocus);
    }
    let root = disc.sqrt().ok_or_else(|| Error::InexactSqrt(disc.to_string()))?;
    GeneralizedCircle::circle(center, root / two_a.abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TangencyKind {
    External,
    Internal,
    NotTangent,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangencyReport {
    pub kind: TangencyKind,
    pub residual: f64,
}

impl TangencyReport {
    pub fn is_tangent(&self) -> bool {
        self.kind != TangencyKind::NotTangent
    }

    fn judge(kind: TangencyKind, residual: f64, tol: f64) -> Self {
        if residual < tol {
            TangencyReport { kind, residual }
        } else {
            TangencyReport { kind: TangencyKind::NotTangent, residual }
        }
    }
}

/// Numeric tangency oracle, evaluated in double precision regardless of the
/// domain of the inputs.
///
/// Circles touching circles compare the center distance with the sum and
/// difference of the radii. Lines touch circles at distance `r`, and lines
/// touch lines when parallel (at infinity). For point circles tangency is
/// incidence.
pub fn verify_tangency<S: Scalar>(a: &GeneralizedCircle<S>, b: &GeneralizedCircle<S>, tol: f64) -> TangencyReport {
    use GeneralizedCircle as G;
    use TangencyKind::*;
    let (a, b) = (a.to_f64(), b.to_f64());
    match (&a, &b) {
        (G::Circle { center: c1, radius: r1 }, G::Circle { center: c2, radius: r2 }) => {
            let d = c1.dist(c2);
            let ext = (d - (r1 + r2)).abs();
            let int = (d - (r1 - r2).abs()).abs();
            if ext <= int {
                TangencyReport::judge(External, ext, tol)
            } else {
                TangencyReport::judge(Internal, int, tol)
            }
        }
        (G::Circle { center, radius }, G::Line { normal, offset })
        | (G::Line { normal, offset }, G::Circle { center, radius }) => {
            let dist = (normal.dot(center) - offset).abs();
            TangencyReport::judge(External, (dist - radius).abs(), tol)
        }
        (G::Circle { center, radius }, G::Point { at }) | (G::Point { at }, G::Circle { center, radius }) => {
            TangencyReport::judge(External, (center.dist(at) - radius).abs(), tol)
        }
        (G::Line { normal: n1, .. }, G::Line { normal: n2, .. }) => {
            TangencyReport::judge(External, (n1.x * n2.y - n1.y * n2.x).abs(), tol)
        }
        (G::Line { normal, offset }, G::Point { at }) | (G::Point { at }, G::Line { normal, offset }) => {
            TangencyReport::judge(External, (normal.dot(at) - offset).abs(), tol)
        }
        (G::Point { at: p }, G::Point { at: q }) => TangencyReport::judge(External, p.dist(q), tol),
    }
}

/// [`verify_tangency`] at [`DEFAULT_TOLERANCE`].
pub fn is_tangent<S: Scalar>(a: &GeneralizedCircle<S>, b: &GeneralizedCircle<S>) -> bool {
    verify_tangency(a, b, DEFAULT_TOLERANCE).is_tangent()
}

/// Tangency decided with squared quantities in the input domain, so it is
/// exact over rationals. Returns `None` when not tangent.
pub fn exact_tangency<S: Scalar>(a: &GeneralizedCircle<S>, b: &GeneralizedCircle<S>) -> Option<TangencyKind> {
    use GeneralizedCircle as G;
    use TangencyKind::*;
    let hit = |cond: bool, kind| cond.then_some(kind);
    match (a, b) {
        (G::Circle { center: c1, radius: r1 }, G::Circle { center: c2, radius: r2 }) => {
            let d2 = c1.dist2(c2);
            if d2 == (r1.clone() + r2.clone()).square() {
                Some(External)
            } else {
                hit(d2 == (r1.clone() - r2.clone()).square(), Internal)
            }
        }
        (G::Circle { center, radius }, G::Line { normal, offset })
        | (G::Line { normal, offset }, G::Circle { center, radius }) => {
            hit((normal.dot(center) - offset.clone()).square() == radius.square(), External)
        }
        (G::Circle { center, radius }, G::Point { at }) | (G::Point { at }, G::Circle { center, radius }) => {
            hit(center.dist2(at) == radius.square(), External)
        }
        (G::Line { normal: n1, .. }, G::Line { normal: n2, .. }) => {
            hit((n1.x.clone() * n2.y.clone() - n1.y.clone() * n2.x.clone()).is_zero(), External)
        }
        (G::Line { normal, offset }, G::Point { at }) | (G::Point { at }, G::Line { normal, offset }) => {
            hit(normal.dot(at) == *offset, External)
        }
        (G::Point { at: p }, G::Point { at: q }) => hit(p == q, External),
    }
}

/// Orthonormal frame: local `(x, y)` maps to `origin + x·ex + y·ey`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame<S> {
    pub origin: Point<S>,
    pub ex: Point<S>,
    pub ey: Point<S>,
}

impl<S: Scalar> Frame<S> {
    pub fn identity() -> Self {
        Frame {
            origin: Point::origin(),
            ex: Point::new(S::one(), S::zero()),
            ey: Point::new(S::zero(), S::one()),
        }
    }

    pub fn map_point(&self, p: &Point<S>) -> Point<S> {
        self.origin.add(&self.ex.scale(&p.x)).add(&self.ey.scale(&p.y))
    }

    pub fn map(&self, g: &GeneralizedCircle<S>) -> GeneralizedCircle<S> {
        match g {
            GeneralizedCircle::Circle { center, radius } => {
                GeneralizedCircle::Circle { center: self.map_point(center), radius: radius.clone() }
            }
            GeneralizedCircle::Point { at } => GeneralizedCircle::Point { at: self.map_point(at) },
            GeneralizedCircle::Line { normal, offset } => {
                let n = self.ex.scale(&normal.x).add(&self.ey.scale(&normal.y));
                let off = offset.clone() + n.dot(&self.origin);
                GeneralizedCircle::Line { normal: n, offset: off }
            }
        }
    }
}

// JSON encoding

#[derive(Serialize, Deserialize, Default, Debug, Clone, PartialEq)]
struct RationalFields {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    center: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    radius: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    normal: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    offset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    at: Option<[String; 2]>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum CircleJson {
    Circle {
        center: [f64; 2],
        radius: f64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        rational: Option<RationalFields>,
    },
    Line {
        normal: [f64; 2],
        offset: f64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        rational: Option<RationalFields>,
    },
    Point {
        at: [f64; 2],
        #[serde(skip_serializing_if = "Option::is_none", default)]
        rational: Option<RationalFields>,
    },
}

fn pair_f64<S: Scalar>(p: &Point<S>) -> [f64; 2] {
    [round_sig15(p.x.to_f64()), round_sig15(p.y.to_f64())]
}

fn pair_rat<S: Scalar>(p: &Point<S>) -> Option<[String; 2]> {
    Some([p.x.rational_repr()?, p.y.rational_repr()?])
}

impl<S: Scalar> From<&GeneralizedCircle<S>> for CircleJson {
    fn from(g: &GeneralizedCircle<S>) -> Self {
        match g {
            GeneralizedCircle::Circle { center, radius } => CircleJson::Circle {
                center: pair_f64(center),
                radius: round_sig15(radius.to_f64()),
                rational: S::EXACT.then(|| RationalFields {
                    center: pair_rat(center),
                    radius: radius.rational_repr(),
                    ..Default::default()
                }),
            },
            GeneralizedCircle::Line { normal, offset } => CircleJson::Line {
                normal: pair_f64(normal),
                offset: round_sig15(offset.to_f64()),
                rational: S::EXACT.then(|| RationalFields {
                    normal: pair_rat(normal),
                    offset: offset.rational_repr(),
                    ..Default::default()
                }),
            },
            GeneralizedCircle::Point { at } => CircleJson::Point {
                at: pair_f64(at),
                rational: S::EXACT.then(|| RationalFields { at: pair_rat(at), ..Default::default() }),
            },
        }
    }
}

fn scalar_from<S: Scalar>(exact: Option<&String>, fallback: f64) -> Result<S> {
    match exact {
        Some(text) => S::parse_scalar(text).ok_or_else(|| Error::Parse(format!("bad rational {text:?}"))),
        None => S::from_f64(fallback).ok_or_else(|| Error::Parse(format!("non-finite number {fallback}"))),
    }
}

fn point_from<S: Scalar>(exact: Option<&[String; 2]>, fallback: [f64; 2]) -> Result<Point<S>> {
    Ok(Point::new(
        scalar_from(exact.map(|p| &p[0]), fallback[0])?,
        scalar_from(exact.map(|p| &p[1]), fallback[1])?,
    ))
}

impl CircleJson {
    fn into_circle<S: Scalar>(self) -> Result<GeneralizedCircle<S>> {
        match self {
            CircleJson::Circle { center, radius, rational } => {
                let r = rational.unwrap_or_default();
                GeneralizedCircle::circle(point_from(r.center.as_ref(), center)?, scalar_from(r.radius.as_ref(), radius)?)
            }
            CircleJson::Line { normal, offset, rational } => {
                let r = rational.unwrap_or_default();
                GeneralizedCircle::line(point_from(r.normal.as_ref(), normal)?, scalar_from(r.offset.as_ref(), offset)?)
            }
            CircleJson::Point { at, rational } => {
                let r = rational.unwrap_or_default();
                Ok(GeneralizedCircle::Point { at: point_from(r.at.as_ref(), at)? })
            }
        }
    }
}

impl<S: Scalar> Serialize for GeneralizedCircle<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        CircleJson::from(self).serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for GeneralizedCircle<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        CircleJson::deserialize(deserializer)?.into_circle().map_err(serde::de::Error::custom)
    }
}
