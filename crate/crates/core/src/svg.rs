//! Monochrome SVG output for lattice and symmetric planar drawings.
//!
//! Edges are grouped by class (`<g class="class-i">`, one `<line>` each),
//! vertices are `<circle>`s. The y axis points up, so coordinates are
//! negated on output. Numbers are printed with at most six decimals, so the
//! same drawing always produces the same bytes.

use std::fmt::Write as _;

use crate::planar::SymmetricDrawing;
use crate::projection::PlanarPlacement;

#[derive(Clone, Debug, PartialEq)]
pub struct Style {
    /// Drawing units per unit of layout.
    pub scale: f64,
    pub stroke: String,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub vertex_fill: String,
    pub background: Option<String>,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            scale: 20.0,
            stroke: "black".into(),
            stroke_width: 1.5,
            vertex_radius: 3.0,
            vertex_fill: "black".into(),
            background: None,
        }
    }
}

/// Points and class-labelled segments in layout units.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub points: Vec<(f64, f64)>,
    pub edges: Vec<(usize, usize, usize)>,
}

impl Scene {
    pub fn class_count(&self) -> usize {
        self.edges.iter().map(|e| e.2 + 1).max().unwrap_or(0)
    }
}

impl From<&PlanarPlacement> for Scene {
    fn from(p: &PlanarPlacement) -> Self {
        Scene {
            points: p.pos.iter().map(|&(x, y)| (x as f64, y as f64)).collect(),
            edges: p.edges.clone(),
        }
    }
}

impl From<&SymmetricDrawing> for Scene {
    fn from(d: &SymmetricDrawing) -> Self {
        Scene {
            points: d.pos.clone(),
            edges: d.edges.clone(),
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn render(scene: &Scene, style: &Style) -> String {
    let k = style.scale;
    let pts: Vec<(f64, f64)> = scene.points.iter().map(|&(x, y)| (x * k, -y * k)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    // One layout unit of padding on every side.
    let (x0, y0, w, h) = (x0 - k, y0 - k, x1 - x0 + 2.0 * k, y1 - y0 + 2.0 * k);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        num(x0),
        num(y0),
        num(w),
        num(h),
        num(w),
        num(h)
    )
    .unwrap();
    if let Some(bg) = &style.background {
        writeln!(
            out,
            r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="{bg}"/>"#,
            num(x0),
            num(y0),
            num(w),
            num(h)
        )
        .unwrap();
    }
    for c in 0..scene.class_count() {
        writeln!(
            out,
            r#"  <g class="class-{c}" stroke="{}" stroke-width="{}" stroke-linecap="round">"#,
            style.stroke,
            num(style.stroke_width)
        )
        .unwrap();
        for &(u, v, _) in scene.edges.iter().filter(|e| e.2 == c) {
            let (a, b) = (pts[u], pts[v]);
            writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(a.0),
                num(a.1),
                num(b.0),
                num(b.1)
            )
            .unwrap();
        }
        out.push_str("  </g>\n");
    }
    writeln!(out, r#"  <g class="vertices" fill="{}">"#, style.vertex_fill).unwrap();
    for &(x, y) in &pts {
        writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="{}"/>"#,
            num(x),
            num(y),
            num(style.vertex_radius)
        )
        .unwrap();
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Scene {
        Scene {
            points: vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            edges: vec![(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)],
        }
    }

    #[test]
    fn counts_elements() {
        let s = render(&square(), &Style::default());
        assert_eq!(s.matches("<circle").count(), 4);
        assert_eq!(s.matches("<line").count(), 4);
        assert_eq!(s.matches("<g class=\"class-").count(), 2);
    }

    #[test]
    fn flips_y_and_pads() {
        let s = render(&square(), &Style::default());
        assert!(s.contains(r#"viewBox="-20 -40 60 60""#), "{s}");
        assert!(s.contains(r#"<circle cx="20" cy="-20""#));
    }

    #[test]
    fn number_formatting_is_stable() {
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(1.0 / 3.0), "0.333333");
        assert_eq!(num(2.5), "2.5");
        assert_eq!(num(-1e-9), "0");
    }
}
