//! Deterministic SVG 1.1 output.
//!
//! Shapes are written in world coordinates inside a single group whose
//! transform flips the y axis and scales to the canvas, so every `<circle>`
//! carries the solver's own numbers.

use std::fmt::Write;

use crate::geometry::{GeneralizedCircle, Point};

const CANVAS: f64 = 800.0;
const STROKE_PX: f64 = 1.5;

#[derive(Clone, Debug, PartialEq)]
pub struct Shape {
    pub id: String,
    pub color: &'static str,
    pub shape: GeneralizedCircle<f64>,
}

impl Shape {
    pub fn new(id: impl Into<String>, color: &'static str, shape: GeneralizedCircle<f64>) -> Self {
        Shape { id: id.into(), color, shape }
    }
}

struct Bounds {
    min: Point<f64>,
    max: Point<f64>,
}

fn bounds(shapes: &[Shape]) -> Bounds {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for s in shapes {
        let (c, r) = match &s.shape {
            GeneralizedCircle::Circle { center, radius } => (center, *radius),
            GeneralizedCircle::Point { at } => (at, 0.0),
            GeneralizedCircle::Line { .. } => continue,
        };
        min = Point::new(min.x.min(c.x - r), min.y.min(c.y - r));
        max = Point::new(max.x.max(c.x + r), max.y.max(c.y + r));
    }
    if !min.x.is_finite() {
        // lines only
        return Bounds { min: Point::new(-1.0, -1.0), max: Point::new(1.0, 1.0) };
    }
    let pad = 0.08 * (max.x - min.x).max(max.y - min.y).max(1e-6);
    Bounds { min: Point::new(min.x - pad, min.y - pad), max: Point::new(max.x + pad, max.y + pad) }
}

pub fn render(shapes: &[Shape]) -> String {
    let b = bounds(shapes);
    let (w, h) = (b.max.x - b.min.x, b.max.y - b.min.y);
    let scale = CANVAS / w.max(h);
    let (px_w, px_h) = (w * scale, h * scale);
    let stroke = STROKE_PX / scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{px_w}\" height=\"{px_h}\" viewBox=\"0 0 {px_w} {px_h}\">"
    );
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{px_w}\" height=\"{px_h}\" fill=\"white\"/>");
    let _ = writeln!(
        out,
        "<g transform=\"matrix({scale} 0 0 {neg} {tx} {ty})\" fill=\"none\" stroke-width=\"{stroke}\">",
        neg = -scale,
        tx = -b.min.x * scale,
        ty = b.max.y * scale,
    );
    let reach = 2.0 * (w + h);
    for s in shapes {
        match &s.shape {
            GeneralizedCircle::Circle { center, radius } => {
                let _ = writeln!(
                    out,
                    "<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" stroke=\"{}\"/>",
                    s.id, center.x, center.y, radius, s.color
                );
            }
            GeneralizedCircle::Point { at } => {
                let _ = writeln!(
                    out,
                    "<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"none\"/>",
                    s.id,
                    at.x,
                    at.y,
                    2.0 * stroke,
                    s.color
                );
            }
            GeneralizedCircle::Line { normal, offset } => {
                let mid = Point::new((b.min.x + b.max.x) / 2.0, (b.min.y + b.max.y) / 2.0);
                // foot of the perpendicular from the view center
                let t = normal.x * mid.x + normal.y * mid.y - offset;
                let foot = Point::new(mid.x - t * normal.x, mid.y - t * normal.y);
                let dir = Point::new(-normal.y, normal.x);
                let _ = writeln!(
                    out,
                    "<line id=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>",
                    s.id,
                    foot.x - reach * dir.x,
                    foot.y - reach * dir.y,
                    foot.x + reach * dir.x,
                    foot.y + reach * dir.y,
                    s.color
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
