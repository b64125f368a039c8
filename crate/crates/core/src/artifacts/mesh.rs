// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::fold::OrigamiMap;

/// Triangles with less area than this are degenerate.
pub const MIN_TRIANGLE_AREA: f64 = 1e-14;

/// Structured triangle mesh of an origami map's image.
#[derive(Clone, Debug, PartialEq)]
pub struct StripMesh {
    pub vertices: Vec<Vector3<f64>>,
    pub faces: Vec<[usize; 3]>,
    /// Vertices along the crease.
    pub n_t: usize,
    /// Cells across the strip; there are `n_v + 1` vertex columns.
    pub n_v: usize,
    pub label: String,
    pub eps: f64,
}

impl StripMesh {
    /// Index of the vertex at `(t_i, v_j)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * (self.n_v + 1) + j
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() || self.faces.is_empty()
    }

    /// Vertices of the row `v = 0`.
    pub fn crease_row(&self) -> Vec<Vector3<f64>> {
        (0..self.n_t).map(|i| self.vertices[self.index(i, self.n_v / 2)]).collect()
    }

    pub fn triangle(&self, f: usize) -> [Vector3<f64>; 3] {
        let [a, b, c] = self.faces[f];
        [self.vertices[a], self.vertices[b], self.vertices[c]]
    }
}

fn area(tri: &[Vector3<f64>; 3]) -> f64 {
    0.5 * (tri[1] - tri[0]).cross(&(tri[2] - tri[0])).norm()
}

/// Meshes `map` over its whole domain with `n_t` vertices along the crease
/// and `n_v` (even) cells across, two triangles per cell.
pub fn mesh_from_origami(map: &OrigamiMap, n_t: usize, n_v: usize) -> Result<StripMesh> {
    let grid = map.grid(n_t, n_v)?;
    let cols = n_v + 1;
    let mut faces = Vec::with_capacity(2 * (n_t - 1) * n_v);
    for i in 0..n_t - 1 {
        for j in 0..n_v {
            let a = i * cols + j;
            let (b, c, d) = (a + 1, a + cols, a + cols + 1);
            for tri in [[a, c, d], [a, d, b]] {
                let ar = area(&[grid.points[tri[0]], grid.points[tri[1]], grid.points[tri[2]]]);
                if !(ar > MIN_TRIANGLE_AREA) {
                    return Err(Error::DegenerateCell { i, j, area: ar });
                }
                faces.push(tri);
            }
        }
    }
    Ok(StripMesh { vertices: grid.points, faces, n_t, n_v, label: map.label(), eps: map.eps() })
}

/// Möller–Trumbore: whether the segment `p q` crosses the triangle.
fn segment_hits_triangle(p: &Vector3<f64>, q: &Vector3<f64>, tri: &[Vector3<f64>; 3]) -> bool {
    const EPS: f64 = 1e-12;
    let dir = q - p;
    let (e1, e2) = (tri[1] - tri[0], tri[2] - tri[0]);
    let h = dir.cross(&e2);
    let det = e1.dot(&h);
    if det.abs() < EPS * e1.norm() * e2.norm() * dir.norm() {
        return false;
    }
    let inv = 1.0 / det;
    let s = p - tri[0];
    let u = inv * s.dot(&h);
    if !(EPS..=1.0 - EPS).contains(&u) {
        return false;
    }
    let qv = s.cross(&e1);
    let v = inv * dir.dot(&qv);
    if v < EPS || u + v > 1.0 - EPS {
        return false;
    }
    let t = inv * e2.dot(&qv);
    (EPS..=1.0 - EPS).contains(&t)
}

fn triangles_intersect(a: &[Vector3<f64>; 3], b: &[Vector3<f64>; 3]) -> bool {
    let edges = [(0, 1), (1, 2), (2, 0)];
    edges.iter().any(|&(i, j)| segment_hits_triangle(&a[i], &a[j], b))
        || edges.iter().any(|&(i, j)| segment_hits_triangle(&b[i], &b[j], a))
}

/// Pairs of faces sharing no vertex that intersect, found through a
/// uniform spatial hash of face bounding boxes.
pub fn self_intersections(mesh: &StripMesh) -> Vec<(usize, usize)> {
    if mesh.faces.is_empty() {
        return Vec::new();
    }
    let boxes: Vec<(Vector3<f64>, Vector3<f64>)> = (0..mesh.faces.len())
        .map(|f| {
            let t = mesh.triangle(f);
            (t[0].inf(&t[1]).inf(&t[2]), t[0].sup(&t[1]).sup(&t[2]))
        })
        .collect();
    let cell = boxes.iter().map(|(lo, hi)| (hi - lo).max()).sum::<f64>() / boxes.len() as f64;
    let cell = if cell > 0.0 { cell } else { 1.0 };
    let key = |x: f64| (x / cell).floor() as i64;
    let mut hash: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
    for (f, (lo, hi)) in boxes.iter().enumerate() {
        for x in key(lo.x)..=key(hi.x) {
            for y in key(lo.y)..=key(hi.y) {
                for z in key(lo.z)..=key(hi.z) {
                    hash.entry((x, y, z)).or_default().push(f);
                }
            }
        }
    }
    let mut found = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for members in hash.values() {
        for (k, &f) in members.iter().enumerate() {
            for &g in &members[k + 1..] {
                let (f, g) = (f.min(g), f.max(g));
                let (fa, ga) = (&mesh.faces[f], &mesh.faces[g]);
                if fa.iter().any(|v| ga.contains(v)) {
                    continue;
                }
                let ((lo1, hi1), (lo2, hi2)) = (&boxes[f], &boxes[g]);
                if (0..3).any(|d| hi1[d] < lo2[d] || hi2[d] < lo1[d]) {
                    continue;
                }
                if seen.insert((f, g)) && triangles_intersect(&mesh.triangle(f), &mesh.triangle(g)) {
                    found.push((f, g));
                }
            }
        }
    }
    found.sort_unstable();
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat(n_t: usize, n_v: usize) -> StripMesh {
        let mut vertices = Vec::new();
        for i in 0..n_t {
            for j in 0..=n_v {
                vertices.push(Vector3::new(i as f64, j as f64, 0.0));
            }
        }
        let cols = n_v + 1;
        let mut faces = Vec::new();
        for i in 0..n_t - 1 {
            for j in 0..n_v {
                let a = i * cols + j;
                faces.push([a, a + cols, a + cols + 1]);
                faces.push([a, a + cols + 1, a + 1]);
            }
        }
        StripMesh { vertices, faces, n_t, n_v, label: "flat".into(), eps: 1.0 }
    }

    #[test]
    fn segment_triangle_test() {
        let tri = [Vector3::zeros(), Vector3::x(), Vector3::y()];
        let p = Vector3::new(0.2, 0.2, -1.0);
        assert!(segment_hits_triangle(&p, &Vector3::new(0.2, 0.2, 1.0), &tri));
        assert!(!segment_hits_triangle(&p, &Vector3::new(0.2, 0.2, -0.5), &tri));
        assert!(!segment_hits_triangle(&Vector3::new(0.8, 0.8, -1.0), &Vector3::new(0.8, 0.8, 1.0), &tri));
    }

    #[test]
    fn flat_sheet_is_clean_and_a_pierced_one_is_not() {
        let mut m = flat(6, 4);
        assert!(self_intersections(&m).is_empty());
        // fold the last row of vertices back through the sheet
        for j in 0..=4 {
            let k = m.index(5, j);
            m.vertices[k] = Vector3::new(1.5, j as f64 + 0.25, if j % 2 == 0 { 1.0 } else { -1.0 });
        }
        assert!(!self_intersections(&m).is_empty());
    }
}
