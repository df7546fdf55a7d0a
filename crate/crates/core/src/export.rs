//! Text serializations: Wavefront OBJ, SVG crease patterns and CSV tables.

use crate::curve::V3;
use crate::strip::{OrigamiMap, StripMesh};
use std::fmt::Write;

fn write_vertices(out: &mut String, mesh: &StripMesh) {
    for v in &mesh.vertices {
        writeln!(out, "v {:.6} {:.6} {:.6}", v.x, v.y, v.z).unwrap();
    }
}

fn write_faces(out: &mut String, mesh: &StripMesh, offset: usize) {
    for f in &mesh.faces {
        writeln!(out, "f {} {} {}", f[0] + offset + 1, f[1] + offset + 1, f[2] + offset + 1).unwrap();
    }
}

/// Single strip mesh.
pub fn mesh_obj(mesh: &StripMesh, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "o {name}").unwrap();
    write_vertices(&mut out, mesh);
    write_faces(&mut out, mesh, 0);
    out
}

/// Both halves of a curved folding plus the crease polyline as `l` records.
pub fn origami_obj(upper: &StripMesh, lower: &StripMesh, crease: &[V3], closed: bool) -> String {
    let mut out = String::new();
    writeln!(out, "o upper").unwrap();
    write_vertices(&mut out, upper);
    write_faces(&mut out, upper, 0);
    writeln!(out, "o lower").unwrap();
    write_vertices(&mut out, lower);
    write_faces(&mut out, lower, upper.vertices.len());
    writeln!(out, "o crease").unwrap();
    let base = upper.vertices.len() + lower.vertices.len();
    for p in crease {
        writeln!(out, "v {:.6} {:.6} {:.6}", p.x, p.y, p.z).unwrap();
    }
    let mut line = String::from("l");
    for k in 0..crease.len() {
        write!(line, " {}", base + k + 1).unwrap();
    }
    if closed {
        write!(line, " {}", base + 1).unwrap();
    }
    writeln!(out, "{line}").unwrap();
    out
}

/// Crease pattern with ruling ticks: β_L measured counter-clockwise from the
/// tangent on the left, β_R clockwise on the right.
pub fn crease_pattern_svg(map: &OrigamiMap, ticks: usize) -> String {
    let pts = map.crease_pattern.points();
    let heading = map.crease_pattern.headings();
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for p in pts {
        lo = lo.inf(p);
        hi = hi.sup(p);
    }
    let span = (hi - lo).max();
    let tick = 0.05 * span;
    let margin = tick * 1.5;
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    // flip y so the pattern reads with the usual orientation
    let tx = |x: f64| x - lo.x + margin;
    let ty = |y: f64| hi.y - y + margin;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.6}" height="{:.6}" viewBox="0 0 {:.6} {:.6}">"#,
        w * 100.0,
        h * 100.0,
        w,
        h
    )
    .unwrap();
    let stroke = span * 0.002;
    let mut path = String::new();
    for (k, p) in pts.iter().enumerate() {
        write!(path, "{}{:.6},{:.6}", if k == 0 { "M" } else { " L" }, tx(p.x), ty(p.y)).unwrap();
    }
    writeln!(out, r#"<path id="crease" d="{path}" fill="none" stroke="black" stroke-width="{stroke:.6}"/>"#).unwrap();
    let n = map.beta_left.len();
    let every = (n / ticks.max(1)).max(1);
    writeln!(out, r#"<g id="rulings" stroke-width="{:.6}">"#, stroke * 0.5).unwrap();
    for i in (0..n).step_by(every) {
        let p = pts[i];
        let th = heading[i];
        let left = th + map.beta_left[i];
        let right = th - map.beta_right[i];
        for (ang, colour) in [(left, "red"), (right, "blue")] {
            let q = p + crate::curve::V2::new(ang.cos(), ang.sin()) * tick;
            writeln!(
                out,
                r#"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="{colour}"/>"#,
                tx(p.x),
                ty(p.y),
                tx(q.x),
                ty(q.y)
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// Comma-separated table with a header row; values printed with 12
/// significant digits.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:.12e}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
