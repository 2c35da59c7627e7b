//! SVG drawing of a subdivision. Coordinates are converted to decimals here
//! and nowhere else; nothing drawn feeds back into the geometry.

use std::fmt::Write;

use crate::arrangement::Subdivision;
use crate::exact_geom::Pt;

#[derive(Clone, Debug)]
pub struct SvgStyle {
    /// Side of the square drawing area in pixels, margin excluded.
    pub size: u32,
    pub margin: u32,
    pub stroke_width: f64,
    pub line_color: String,
    pub triangle_fill: String,
    pub quad_fill: String,
    /// Any cell that is neither, which would be a counterexample.
    pub other_fill: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            size: 800,
            margin: 16,
            stroke_width: 0.6,
            line_color: "#1a1a1a".into(),
            triangle_fill: "#cfe3f6".into(),
            quad_fill: "#f7d9a8".into(),
            other_fill: "#e0301e".into(),
        }
    }
}

/// Draws every cell filled by vertex count, then every source line clipped
/// to the rectangle, then the frame. Output is a pure function of the input.
pub fn render_svg(sub: &Subdivision, style: &SvgStyle) -> String {
    let rect = &sub.rect;
    let (x0, y0) = (rect.x_min.to_f64(), rect.y_min.to_f64());
    let w = rect.x_max.to_f64() - x0;
    let h = rect.y_max.to_f64() - y0;
    let scale = style.size as f64 / w.max(h);
    let m = style.margin as f64;
    let width = (w * scale + 2.0 * m).round() as u32;
    let height = (h * scale + 2.0 * m).round() as u32;
    // y grows downward in SVG
    let map = |p: &Pt| (m + (p.x.to_f64() - x0) * scale, m + (y0 + h - p.y.to_f64()) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(out, r#"<g id="cells" stroke="none">"#);
    for cell in &sub.cells {
        let fill = match cell.vertex_count() {
            3 => &style.triangle_fill,
            4 => &style.quad_fill,
            _ => &style.other_fill,
        };
        let points: Vec<String> = cell
            .boundary
            .vertices()
            .iter()
            .map(|p| {
                let (x, y) = map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(out, r#"<polygon points="{}" fill="{fill}"/>"#, points.join(" "));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g id="lines" stroke="{}" stroke-width="{}" stroke-linecap="round">"#,
        style.line_color, style.stroke_width
    );
    for (line, vs) in &sub.line_vertices {
        if vs.len() < 2 || sub.lines.binary_search(line).is_err() {
            continue;
        }
        let (ax, ay) = map(&sub.vertices[vs[0]]);
        let (bx, by) = map(&sub.vertices[vs[vs.len() - 1]]);
        let _ = writeln!(out, r#"<line x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}"/>"#);
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<rect x="{m:.3}" y="{m:.3}" width="{:.3}" height="{:.3}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        w * scale,
        h * scale,
        style.line_color,
        style.stroke_width * 2.0
    );
    out.push_str("</svg>\n");
    out
}
