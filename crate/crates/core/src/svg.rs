//! SVG pictures of staircase regions with their convex hulls.

use std::fmt::Write;

use crate::polygon::NewtonPolygon;
use crate::square::Staircase;

const CELL: i64 = 24;
const MARGIN: i64 = 32;

/// Draws the region `corners + N^2` as shaded cells, its boundary staircase,
/// and the lower hull of `poly` on top.
pub fn render(stair: &Staircase, poly: Option<&NewtonPolygon>) -> String {
    let pts = stair.corners();
    let max_a = pts.iter().map(|p| p.0).max().unwrap_or(0).max(0) + 2;
    let max_b = pts.iter().map(|p| p.1).max().unwrap_or(0).max(0) + 2;
    let min_a = pts.iter().map(|p| p.0).min().unwrap_or(0).min(0);
    let min_b = pts.iter().map(|p| p.1).min().unwrap_or(0).min(0);
    let (w, h) = ((max_a - min_a) * CELL, (max_b - min_b) * CELL);
    let x = |a: i64| MARGIN + (a - min_a) * CELL;
    let y = |b: i64| MARGIN + h - (b - min_b) * CELL;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="12">"#,
        w + 2 * MARGIN,
        h + 2 * MARGIN
    );
    for a in min_a..max_a {
        for b in min_b..max_b {
            if stair.contains((a, b)) {
                let _ = writeln!(
                    s,
                    r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="#cfe0f5" stroke="#9fb8d8"/>"##,
                    x(a),
                    y(b + 1)
                );
            }
        }
    }
    for p in pts {
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="4" fill="#1f4e8c"/>"##, x(p.0), y(p.1));
    }
    if let Some(poly) = poly {
        let e = poly.extremes();
        if !e.is_empty() {
            let mut path = format!("M {} {}", x(e[0].0), y(max_b));
            for p in e {
                let _ = write!(path, " L {} {}", x(p.0), y(p.1));
            }
            let last = e[e.len() - 1];
            let _ = write!(path, " L {} {}", x(max_a), y(last.1));
            let _ = writeln!(s, r##"<path d="{path}" fill="none" stroke="#c0392b" stroke-width="2"/>"##);
        }
    }
    // axes through the origin of the drawn window
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        x(min_a),
        y(min_b),
        x(max_a),
        y(min_b)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        x(min_a),
        y(min_b),
        x(min_a),
        y(max_b)
    );
    let _ = writeln!(s, r#"<text x="{}" y="{}">a</text>"#, x(max_a) + 6, y(min_b) + 4);
    let _ = writeln!(s, r#"<text x="{}" y="{}">b</text>"#, x(min_a) - 4, y(max_b) - 8);
    s.push_str("</svg>\n");
    s
}
