//! Number formatting, CSV rows and SVG plots.

use std::fmt::Write;

use specrange_core::{Boundary2D, Mesh3D};

/// A real with at most 12 significant digits, plain notation for moderate
/// magnitudes and exponent notation otherwise.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let mag = rounded.abs();
    if (1e-6..1e15).contains(&mag) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

pub fn csv_row(fields: &[String]) -> String {
    let mut s = fields.join(",");
    s.push('\n');
    s
}

const SIZE: f64 = 480.0;
const PAD: f64 = 20.0;

struct Frame {
    lo: [f64; 2],
    scale: f64,
}

impl Frame {
    fn fit<'a>(points: impl Iterator<Item = &'a [f64]>) -> Self {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(f64::MIN_POSITIVE);
        Frame {
            lo,
            scale: (SIZE - 2.0 * PAD) / span,
        }
    }

    fn map(&self, p: &[f64]) -> (f64, f64) {
        (
            PAD + (p[0] - self.lo[0]) * self.scale,
            SIZE - PAD - (p[1] - self.lo[1]) * self.scale,
        )
    }
}

fn header() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

/// The hull as a closed polygon with the sampled face vertices as dots.
pub fn svg_boundary(b: &Boundary2D) -> String {
    let frame = Frame::fit(b.hull.iter().map(|p| p.as_slice()));
    let mut s = header();
    let pts: Vec<String> = b
        .hull
        .iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        s,
        "<polygon points=\"{}\" fill=\"#dde8f6\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"/>",
        pts.join(" ")
    );
    for v in b.vertices() {
        let (x, y) = frame.map(v);
        let _ = writeln!(s, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"1.5\" fill=\"#c0392b\"/>");
    }
    s.push_str("</svg>\n");
    s
}

/// Mesh triangles projected onto the first two coordinates.
pub fn svg_mesh(m: &Mesh3D) -> String {
    let frame = Frame::fit(m.points.iter().map(|p| &p[..2]));
    let mut s = header();
    for t in &m.triangles {
        let pts: Vec<String> = t
            .iter()
            .map(|&i| {
                let (x, y) = frame.map(&m.points[i]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            s,
            "<polygon points=\"{}\" fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"0.4\"/>",
            pts.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}
