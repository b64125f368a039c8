// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic text exporters. Floats are written in the shortest form
//! that parses back to the same `f64` (at most 17 significant digits),
//! switching to exponent notation for very large or small magnitudes.

use std::fmt::Write as _;

use nalgebra::{Vector2, Vector3};

use super::mesh::StripMesh;
use crate::curve::FrenetData;
use crate::develop::CreasePattern;
use crate::error::{Error, Result};
use crate::fold::MeanCurvatureTable;

/// Header of the mean curvature table.
pub const CSV_HEADER: &str = "t,H_base,H_dual,H_inv,H_invdual";

/// Wavefront OBJ with `v` and `f` lines only, 1-based indices.
pub fn export_obj(mesh: &StripMesh) -> Result<Vec<u8>> {
    if mesh.is_empty() {
        return Err(Error::EmptyMesh);
    }
    let mut out = String::with_capacity(mesh.vertices.len() * 64);
    for v in &mesh.vertices {
        writeln!(out, "v {:?} {:?} {:?}", v.x, v.y, v.z).unwrap();
    }
    for [a, b, c] in &mesh.faces {
        writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1).unwrap();
    }
    Ok(out.into_bytes())
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse { input: format!("OBJ line {line}"), message: message.to_string() }
}

/// Vertices and triangles read from an OBJ file.
pub type ObjData = (Vec<Vector3<f64>>, Vec<[usize; 3]>);

/// Reads back the `v` and `f` lines of an OBJ file; other lines are ignored.
pub fn parse_obj(bytes: &[u8]) -> Result<ObjData> {
    let text = std::str::from_utf8(bytes).map_err(|_| parse_error(0, "not UTF-8"))?;
    let (mut vertices, mut faces) = (Vec::new(), Vec::new());
    for (n, line) in text.lines().enumerate() {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("v") => {
                let xyz: Vec<f64> = words
                    .map(|w| w.parse::<f64>().map_err(|_| parse_error(n + 1, "bad coordinate")))
                    .collect::<Result<_>>()?;
                if xyz.len() != 3 {
                    return Err(parse_error(n + 1, "expected three coordinates"));
                }
                vertices.push(Vector3::new(xyz[0], xyz[1], xyz[2]));
            }
            Some("f") => {
                let idx: Vec<usize> = words
                    .map(|w| {
                        let head = w.split('/').next().unwrap_or(w);
                        match head.parse::<usize>() {
                            Ok(i) if i >= 1 => Ok(i - 1),
                            _ => Err(parse_error(n + 1, "bad face index")),
                        }
                    })
                    .collect::<Result<_>>()?;
                if idx.len() != 3 {
                    return Err(parse_error(n + 1, "expected a triangle"));
                }
                faces.push([idx[0], idx[1], idx[2]]);
            }
            _ => {}
        }
    }
    if let Some(bad) = faces.iter().flatten().find(|&&i| i >= vertices.len()) {
        return Err(parse_error(0, &format!("face index {} out of range", bad + 1)));
    }
    Ok((vertices, faces))
}

/// SVG 1.1 drawing of a crease pattern in y-up coordinates: one polyline
/// for the crease and one line per ruling, classed by side.
pub fn export_svg(pattern: &CreasePattern) -> Result<Vec<u8>> {
    let points = pattern.curve.points();
    if points.is_empty() {
        return Err(Error::EmptyMesh);
    }
    let mut lo = Vector2::repeat(f64::INFINITY);
    let mut hi = Vector2::repeat(f64::NEG_INFINITY);
    for k in 0..points.len() {
        for (p, q) in pattern.segments(k) {
            lo = lo.inf(&p).inf(&q);
            hi = hi.sup(&p).sup(&q);
        }
    }
    let size = hi - lo;
    let margin = 0.05 * size.max();
    let stroke = 0.002 * size.max();
    let (x0, y0) = (lo.x - margin, -(hi.y + margin));
    let (w, h) = (size.x + 2.0 * margin, size.y + 2.0 * margin);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{x0:?} {y0:?} {w:?} {h:?}\" data-variant=\"{}\">",
        pattern.variant
    )
    .unwrap();
    writeln!(
        out,
        "<style>.crease{{fill:none;stroke:#000;stroke-width:{:?}}} .ruling-upper{{stroke:#c0392b;stroke-width:{stroke:?}}} .ruling-lower{{stroke:#2471a3;stroke-width:{stroke:?}}}</style>",
        2.0 * stroke
    )
    .unwrap();
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    for k in 0..points.len() {
        let [(p, q), (r, s)] = pattern.segments(k);
        writeln!(
            out,
            "<line class=\"ruling-upper\" x1=\"{:?}\" y1=\"{:?}\" x2=\"{:?}\" y2=\"{:?}\"/>",
            p.x, p.y, q.x, q.y
        )
        .unwrap();
        writeln!(
            out,
            "<line class=\"ruling-lower\" x1=\"{:?}\" y1=\"{:?}\" x2=\"{:?}\" y2=\"{:?}\"/>",
            r.x, r.y, s.x, s.y
        )
        .unwrap();
    }
    out.push_str("<polyline class=\"crease\" points=\"");
    for (k, p) in points.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        write!(out, "{:?},{:?}", p.x, p.y).unwrap();
    }
    out.push_str("\"/>\n</g>\n</svg>\n");
    Ok(out.into_bytes())
}

/// `|H|` per sample for the four strips, aligned on the original crease.
pub fn export_csv(table: &MeanCurvatureTable) -> Result<Vec<u8>> {
    if table.params.is_empty() {
        return Err(Error::InvalidGrid("empty profile table".into()));
    }
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (k, t) in table.params.iter().enumerate() {
        write!(out, "{t:?}").unwrap();
        for col in &table.columns {
            write!(out, ",{:?}", col[k]).unwrap();
        }
        out.push('\n');
    }
    Ok(out.into_bytes())
}

/// Curvature, torsion and frame per sample.
pub fn export_frenet_csv(frenet: &FrenetData) -> Result<Vec<u8>> {
    if frenet.is_empty() {
        return Err(Error::InvalidGrid("empty Frenet table".into()));
    }
    let mut out = String::from("t,kappa,tau,e_x,e_y,e_z,n_x,n_y,n_z,b_x,b_y,b_z\n");
    for k in 0..frenet.len() {
        write!(out, "{:?},{:?},{:?}", frenet.params[k], frenet.curvature[k], frenet.torsion[k]).unwrap();
        for v in [frenet.tangent[k], frenet.normal[k], frenet.binormal[k]] {
            write!(out, ",{:?},{:?},{:?}", v.x, v.y, v.z).unwrap();
        }
        out.push('\n');
    }
    Ok(out.into_bytes())
}
