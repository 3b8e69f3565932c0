//! CSV, SVG and DOT emitters.

use std::fmt::Write;

use crate::int::Int;
use crate::record::GraphRecord;

pub fn csv(header: &str, points: &[[Int; 2]]) -> String {
    let mut out = format!("{header}\n");
    for [x, y] in points {
        writeln!(out, "{x},{y}").unwrap();
    }
    out
}

/// A static polyline through the points on a square canvas covering
/// `[-window, window]^2`, with the axes drawn in grey.
pub fn svg(points: &[[Int; 2]], window: u64) -> String {
    const SIZE: f64 = 480.0;
    let w = window.max(1) as f64;
    let scale = SIZE / (2.0 * w + 2.0);
    let to_px = |x: &Int, flip: bool| {
        let v: f64 = x.0.to_string().parse().unwrap_or(0.0);
        let v = if flip { -v } else { v };
        (v + w + 1.0) * scale
    };
    let mid = (w + 1.0) * scale;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##).unwrap();
    writeln!(
        out,
        r##"<line x1="0" y1="{mid:.2}" x2="{SIZE}" y2="{mid:.2}" stroke="#bbb"/><line x1="{mid:.2}" y1="0" x2="{mid:.2}" y2="{SIZE}" stroke="#bbb"/>"##
    )
    .unwrap();
    let coords: Vec<String> = points
        .iter()
        .map(|[x, y]| format!("{:.2},{:.2}", to_px(x, false), to_px(y, true)))
        .collect();
    writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#1f5fa8" stroke-width="1.5"/>"##,
        coords.join(" ")
    )
    .unwrap();
    for c in &coords {
        let (x, y) = c.split_once(',').unwrap();
        writeln!(out, r##"<circle cx="{x}" cy="{y}" r="2" fill="#1f5fa8"/>"##).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

const PALETTE: [&str; 5] = ["#8dd3c7", "#fdb462", "#bebada", "#fb8072", "#80b1d3"];

fn node_id([x, y]: &[Int; 2]) -> String {
    format!("\"({x},{y})\"")
}

/// Undirected DOT graph; vertices are filled by orbit, edges labelled by generator.
pub fn dot(g: &GraphRecord) -> String {
    let mut orbits: Vec<&str> = g.vertices.iter().map(|v| v.orbit.as_str()).collect();
    orbits.sort_unstable();
    orbits.dedup();
    let color = |o: &str| PALETTE[orbits.iter().position(|x| *x == o).unwrap() % PALETTE.len()];

    let mut out = format!("graph {} {{\n  node [style=filled, shape=ellipse];\n", g.plane);
    for v in &g.vertices {
        writeln!(
            out,
            "  {} [label=\"{}\\n{}\", fillcolor=\"{}\", orbit=\"{}\"];",
            node_id(&v.coords),
            node_id(&v.coords).trim_matches('"'),
            v.distance,
            color(&v.orbit),
            v.orbit
        )
        .unwrap();
    }
    for e in &g.edges {
        writeln!(out, "  {} -- {} [label=\"{}\"];", node_id(&e.from), node_id(&e.to), e.label).unwrap();
    }
    out.push_str("}\n");
    out
}
