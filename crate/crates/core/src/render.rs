//! Coordinate files and SVG output.

use std::fmt::Write as _;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::tree::RootedTree;

/// Metadata carried in the `#` header line of a coordinates file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordsHeader {
    pub algorithm: String,
    pub pair: Option<(u64, u64)>,
}

/// `vertex<TAB>x<TAB>y` lines after a one-line `#` header.
pub fn write_coords_tsv(drawing: &Drawing, header: &CoordsHeader) -> String {
    let mut out = String::with_capacity(drawing.n() * 16 + 64);
    let (f, d) = match header.pair {
        Some((f, d)) => (f.to_string(), d.to_string()),
        None => ("-".into(), "-".into()),
    };
    let _ = writeln!(
        out,
        "# n={} algorithm={} f={} d={} width={} height={}",
        drawing.n(),
        header.algorithm,
        f,
        d,
        drawing.width(),
        drawing.height()
    );
    for (v, &(x, y)) in drawing.coords().iter().enumerate() {
        let _ = writeln!(out, "{v}\t{x}\t{y}");
    }
    out
}

/// Reads a coordinates file. Lines starting with `#` and blank lines are
/// skipped; every vertex `0..n` must appear exactly once, in any order.
pub fn parse_coords_tsv(text: &str) -> Result<Drawing> {
    let mut rows: Vec<Option<(i64, i64)>> = Vec::new();
    let mut seen = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Coords {
            line,
            msg: msg.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(v), Some(x), Some(y), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(err("expected vertex, x and y"));
        };
        let v: usize = v.parse().map_err(|_| err("bad vertex id"))?;
        let x: i64 = x.parse().map_err(|_| err("bad x coordinate"))?;
        let y: i64 = y.parse().map_err(|_| err("bad y coordinate"))?;
        if v >= rows.len() {
            rows.resize(v + 1, None);
        }
        if rows[v].replace((x, y)).is_some() {
            return Err(err(&format!("vertex {v} listed twice")));
        }
        seen += 1;
    }
    if seen != rows.len() {
        let missing = rows.iter().position(Option::is_none).unwrap_or(0);
        return Err(Error::Coords {
            line: 0,
            msg: format!("vertex {missing} has no coordinates"),
        });
    }
    Ok(Drawing::from_coords(rows.into_iter().flatten().collect()))
}

/// Static SVG: edges as segments, vertices as dots, `scale` pixels per grid
/// unit, y flipped so the drawing grows upwards on screen.
pub fn to_svg(tree: &RootedTree, drawing: &Drawing, scale: f64) -> Result<String> {
    if drawing.n() != tree.n() {
        return Err(Error::DrawingSize {
            expected: tree.n(),
            got: drawing.n(),
        });
    }
    let margin = 10.0;
    let (x0, y1) = drawing
        .coords()
        .iter()
        .fold((i64::MAX, i64::MIN), |(x0, y1), &(x, y)| (x0.min(x), y1.max(y)));
    let px = |(x, y): (i64, i64)| (margin + (x - x0) as f64 * scale, margin + (y1 - y) as f64 * scale);
    let w = drawing.width() as f64 * scale + 2.0 * margin;
    let h = drawing.height() as f64 * scale + 2.0 * margin;
    let r = (scale * 0.25).clamp(0.5, 4.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    out.push_str("<g stroke=\"#333\" stroke-width=\"1\">\n");
    for v in 0..tree.n() {
        if let Some(p) = tree.parent(v) {
            let (ax, ay) = px(drawing.point(p));
            let (bx, by) = px(drawing.point(v));
            let _ = writeln!(out, r#"<line x1="{ax:.1}" y1="{ay:.1}" x2="{bx:.1}" y2="{by:.1}"/>"#);
        }
    }
    out.push_str("</g>\n<g fill=\"#c33\">\n");
    for &p in drawing.coords() {
        let (cx, cy) = px(p);
        let _ = writeln!(out, r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{r:.1}"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
