//! Cross-section of a 3-dimensional fan by the plane `x1 + x2 + x3 = 1`.
//!
//! The orthant rays sit at the triangle corners. Each ray is drawn as a dot
//! labelled by its inequality index and each wall (two-dimensional cone) as
//! a segment. Floating point is only used for drawing coordinates.

use std::fmt::Write;

use mckay_core::{Fan, Rational};
use num_traits::ToPrimitive;

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 560.0;
const CORNERS: [(f64, f64); 3] = [(60.0, 500.0), (520.0, 500.0), (290.0, 101.6)];
const CENTROID: (f64, f64) = (290.0, 367.2);

fn to_plane(ray: &[Rational]) -> (f64, f64) {
    let c: Vec<f64> = ray.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let s: f64 = c.iter().sum();
    let mut x = 0.0;
    let mut y = 0.0;
    for (w, (cx, cy)) in c.iter().zip(CORNERS) {
        x += w / s * cx;
        y += w / s * cy;
    }
    (x, y)
}

fn coords(ray: &[Rational]) -> String {
    let parts: Vec<String> = ray.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Returns `None` unless the fan lives in dimension 3.
pub fn render_fan(fan: &Fan, title: &str) -> Option<String> {
    if fan.dim != 3 {
        return None;
    }
    let pts: Vec<(f64, f64)> = fan.rays.iter().map(|r| to_plane(r)).collect();
    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).ok()?;
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="14">"#
    )
    .ok()?;
    writeln!(s, r#"<title>{}</title>"#, escape(title)).ok()?;
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).ok()?;
    let [a, b, c] = CORNERS;
    writeln!(
        s,
        r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        a.0, a.1, b.0, b.1, c.0, c.1
    )
    .ok()?;
    writeln!(s, r#"<g stroke="black" stroke-width="1">"#).ok()?;
    for cone in fan.cones.iter().filter(|c| c.dim == 2) {
        let (p, q) = (pts[cone.rays[0]], pts[cone.rays[1]]);
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            p.0, p.1, q.0, q.1
        )
        .ok()?;
    }
    writeln!(s, "</g>").ok()?;
    for (i, &(x, y)) in pts.iter().enumerate() {
        // Push labels away from the middle of the triangle.
        let (dx, dy) = (x - CENTROID.0, y - CENTROID.1);
        let len = (dx * dx + dy * dy).sqrt().max(1.0);
        let (lx, ly) = (x + 14.0 * dx / len, y + 14.0 * dy / len + 5.0);
        writeln!(
            s,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="black"/>"#
        )
        .ok()?;
        writeln!(
            s,
            r#"<text x="{lx:.2}" y="{ly:.2}" text-anchor="middle">{i}</text>"#
        )
        .ok()?;
    }
    writeln!(s, r#"<g font-size="13">"#).ok()?;
    writeln!(
        s,
        r#"<text x="580" y="40" font-weight="bold">ray: inner normal</text>"#
    )
    .ok()?;
    for (i, r) in fan.rays.iter().enumerate() {
        writeln!(
            s,
            r#"<text x="580" y="{}">{i}: {}</text>"#,
            62 + 20 * i,
            coords(r)
        )
        .ok()?;
    }
    writeln!(s, "</g>").ok()?;
    writeln!(s, "</svg>").ok()?;
    Some(s)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
