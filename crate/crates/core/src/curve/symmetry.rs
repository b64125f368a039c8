// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Symmetries of a crease, decided from its curvature and torsion profiles.
//!
//! By the fundamental theorem of space curves an isometry fixing an arc
//! setwise either fixes it pointwise or reverses it. Fixing pointwise with a
//! non-identity isometry needs a planar arc (reflection in its plane);
//! reversing needs `kappa(t) = kappa(a+b-t)` with `tau` even (proper) or odd
//! (improper) under the same reflection of the parameter.

use nalgebra::{Matrix3, Vector3};

use super::frenet::FrenetData;
use super::space::SpaceCurve;
use crate::isometry::RigidMotion;

/// Default relative tolerance for symmetry decisions.
pub const SYMMETRY_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetryReport {
    /// `kappa(t) = kappa(a+b-t)` and `tau(t) = tau(a+b-t)`.
    pub has_reversal_direct: bool,
    /// `kappa(t) = kappa(a+b-t)` and `tau(t) = -tau(a+b-t)`.
    pub has_reversal_indirect: bool,
    /// `tau = 0`.
    pub is_planar: bool,
    /// Relative mismatch of each condition, in the order above.
    pub direct_mismatch: f64,
    pub indirect_mismatch: f64,
    pub planar_mismatch: f64,
    pub tol: f64,
}

impl SymmetryReport {
    pub fn has_any(&self) -> bool {
        self.has_reversal_direct || self.has_reversal_indirect || self.is_planar
    }

    /// Distance to the closest symmetry class.
    pub fn min_mismatch(&self) -> f64 {
        self.direct_mismatch.min(self.indirect_mismatch).min(self.planar_mismatch)
    }
}

/// Compares the profiles against each symmetry class; mismatches are
/// relative to the largest curvature.
pub fn detect_symmetry(frenet: &FrenetData, tol: f64) -> SymmetryReport {
    let n = frenet.len();
    let scale = frenet.curvature.iter().fold(0.0f64, |m, k| m.max(k.abs()));
    let (k, t) = (&frenet.curvature, &frenet.torsion);
    let max_over = |f: &dyn Fn(usize) -> f64| (0..n).map(f).fold(0.0f64, f64::max) / scale;
    let kappa_rev = max_over(&|i| (k[i] - k[n - 1 - i]).abs());
    let tau_even = max_over(&|i| (t[i] - t[n - 1 - i]).abs());
    let tau_odd = max_over(&|i| (t[i] + t[n - 1 - i]).abs());
    let planar_mismatch = max_over(&|i| t[i].abs());
    let direct_mismatch = kappa_rev.max(tau_even);
    let indirect_mismatch = kappa_rev.max(tau_odd);
    SymmetryReport {
        has_reversal_direct: direct_mismatch < tol,
        has_reversal_indirect: indirect_mismatch < tol,
        is_planar: planar_mismatch < tol,
        direct_mismatch,
        indirect_mismatch,
        planar_mismatch,
        tol,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryKind {
    Identity,
    /// Reflection in the plane of a planar crease; fixes it pointwise.
    PlaneReflection,
    /// Proper isometry reversing the crease.
    ReversalDirect,
    /// Improper isometry reversing the crease.
    ReversalIndirect,
}

/// An isometry mapping the crease onto itself.
#[derive(Clone, Copy, Debug)]
pub struct CreaseSymmetry {
    pub kind: SymmetryKind,
    pub motion: RigidMotion,
    /// Whether sample `i` goes to sample `n-1-i` rather than to itself.
    pub reverses: bool,
    /// Largest deviation of the moved samples from their targets.
    pub deviation: f64,
}

fn frame(frenet: &FrenetData, i: usize) -> Matrix3<f64> {
    Matrix3::from_columns(&[frenet.tangent[i], frenet.normal[i], frenet.binormal[i]])
}

/// The identity plus every symmetry allowed by `report`, each built from
/// the Frenet frames at the middle sample and validated on all samples
/// within `tol` times the crease length.
pub fn crease_symmetries(
    curve: &SpaceCurve,
    frenet: &FrenetData,
    report: &SymmetryReport,
    tol: f64,
) -> Vec<CreaseSymmetry> {
    let n = curve.len();
    let mid = n / 2;
    let points = curve.points();
    let mut candidates = vec![(SymmetryKind::Identity, Vector3::new(1.0, 1.0, 1.0), false)];
    if report.is_planar {
        candidates.push((SymmetryKind::PlaneReflection, Vector3::new(1.0, 1.0, -1.0), false));
    }
    if report.has_reversal_direct {
        candidates.push((SymmetryKind::ReversalDirect, Vector3::new(-1.0, 1.0, -1.0), true));
    }
    if report.has_reversal_indirect {
        candidates.push((SymmetryKind::ReversalIndirect, Vector3::new(-1.0, 1.0, 1.0), true));
    }
    let scale = curve.length().max(1.0);
    candidates
        .into_iter()
        .filter_map(|(kind, d, reverses)| {
            let target = if reverses { n - 1 - mid } else { mid };
            let linear = frame(frenet, target) * Matrix3::from_diagonal(&d) * frame(frenet, mid).transpose();
            let translation = points[target] - linear * points[mid];
            let motion = RigidMotion::new(linear, translation);
            let deviation = (0..n)
                .map(|i| {
                    let j = if reverses { n - 1 - i } else { i };
                    (motion.apply(&points[i]) - points[j]).norm()
                })
                .fold(0.0, f64::max);
            (deviation <= tol * scale).then_some(CreaseSymmetry { kind, motion, reverses, deviation })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{frenet_apparatus, CurvePreset};

    #[test]
    fn c0_has_no_symmetry() {
        let c = SpaceCurve::from_preset(CurvePreset::PaperC0, None, 512).unwrap();
        let f = frenet_apparatus(&c).unwrap();
        let r = detect_symmetry(&f, SYMMETRY_TOL);
        assert!(!r.has_any());
        assert!(r.min_mismatch() > 1e-2);
        let syms = crease_symmetries(&c, &f, &r, 1e-8);
        assert_eq!(syms.len(), 1);
        assert!(syms[0].motion.is_identity(1e-12));
    }

    #[test]
    fn circle_arc_has_the_two_reflections_and_their_product() {
        let c = SpaceCurve::from_preset(CurvePreset::CircleArc { radius: 1.0 }, None, 512).unwrap();
        let f = frenet_apparatus(&c).unwrap();
        let r = detect_symmetry(&f, SYMMETRY_TOL);
        assert!(r.is_planar && r.has_reversal_direct && r.has_reversal_indirect);
        let syms = crease_symmetries(&c, &f, &r, 1e-8);
        assert_eq!(syms.len(), 4);
        let s = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0));
        let t = Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, 1.0));
        let expect = [Matrix3::identity(), s, s * t, t];
        for (sym, m) in syms.iter().zip(expect) {
            assert!((sym.motion.linear - m).abs().max() < 1e-12, "{:?}", sym.kind);
            assert!(sym.motion.translation.norm() < 1e-12);
            assert!(sym.deviation < 1e-12);
        }
    }

    #[test]
    fn helix_reversal_is_a_half_turn() {
        let c = SpaceCurve::from_preset(CurvePreset::Helix { radius: 1.0, pitch: 0.5 }, None, 256).unwrap();
        let f = frenet_apparatus(&c).unwrap();
        let r = detect_symmetry(&f, SYMMETRY_TOL);
        assert!(r.has_reversal_direct && !r.has_reversal_indirect && !r.is_planar);
        let syms = crease_symmetries(&c, &f, &r, 1e-8);
        assert_eq!(syms.len(), 2);
        let half_turn = &syms[1].motion;
        assert!(half_turn.is_proper());
        assert!((half_turn.linear.trace() + 1.0).abs() < 1e-12);
    }
}
