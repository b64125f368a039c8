// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::Vector3;
use proptest::prelude::*;

use curvefold::artifacts::mesh_from_origami;
use curvefold::curve::{
    detect_symmetry, frenet_apparatus, resample_arclength, CurveInput, CurvePreset, DerivativeMode, PlanePattern,
    SpaceCurve, SYMMETRY_TOL,
};
use curvefold::expr::Expr;
use curvefold::fold::{classify_congruence, overlap_fraction, FoldQuadruple, OverlapOptions, Verdict, PROFILE_TOL};
use curvefold::isometry::RigidMotion;
use curvefold::strip::{Variant, DEFAULT_EPS};
use curvefold::Error;

fn c0(n: usize) -> (SpaceCurve, PlanePattern) {
    let c = SpaceCurve::from_preset(CurvePreset::PaperC0, None, n).unwrap();
    let p = PlanePattern::from_alpha(&c, Expr::parse("pi*(t+10)/24").unwrap()).unwrap();
    (c, p)
}

#[test]
fn quadruple_is_invariant_under_rigid_motions() {
    let (c, p) = c0(256);
    let m = RigidMotion::rotation(Vector3::new(0.3, -1.0, 0.7), 2.1, Vector3::new(4.0, -2.0, 9.0));
    let moved = c.transformed(&m);
    let (q, r) =
        (FoldQuadruple::build(&c, &p, DEFAULT_EPS).unwrap(), FoldQuadruple::build(&moved, &p, DEFAULT_EPS).unwrap());
    let (hq, hr) = (q.mean_curvature_table().unwrap(), r.mean_curvature_table().unwrap());
    for v in Variant::ALL {
        for (a, b) in hq.column(v).iter().zip(hr.column(v)) {
            assert!((a - b).abs() < 1e-9);
        }
    }
    for (a, b) in q.maps().iter().zip(r.maps()) {
        for k in (0..256).step_by(5) {
            for v in [-0.2, -0.05, 0.0, 0.11, 0.2] {
                assert!((m.apply(&a.at_sample(k, v)) - b.at_sample(k, v)).norm() < 1e-9);
            }
        }
    }
    let (cq, cr) = (classify_congruence(&q, PROFILE_TOL).unwrap(), classify_congruence(&r, PROFILE_TOL).unwrap());
    assert_eq!(cq.verdicts, cr.verdicts);
    let opts = OverlapOptions { n_t: 256, ..OverlapOptions::for_eps(DEFAULT_EPS) };
    let o = |q: &FoldQuadruple| overlap_fraction(&q.maps()[0], &q.maps()[1], &opts).unwrap();
    assert!((o(&q) - o(&r)).abs() < 1e-12);
}

#[test]
fn finite_differences_track_the_analytic_construction() {
    let (c, p) = c0(512);
    let fd = c.with_mode(DerivativeMode::FiniteDifference).unwrap();
    let (a, b) =
        (FoldQuadruple::build(&c, &p, DEFAULT_EPS).unwrap(), FoldQuadruple::build(&fd, &p, DEFAULT_EPS).unwrap());
    assert!(!b.strip(Variant::Base).is_analytic());
    let (ha, hb) = (a.mean_curvature_table().unwrap(), b.mean_curvature_table().unwrap());
    for v in Variant::ALL {
        for (x, y) in ha.column(v).iter().zip(hb.column(v)) {
            assert!((x - y).abs() < 1e-5, "{v}: {x} vs {y}");
        }
        assert!(b.strip(v).developability_residual() < 1e-6);
    }
    assert_eq!(ha.separation().order, hb.separation().order);
}

#[test]
fn negative_pattern_curvature_is_reflected() {
    let c = SpaceCurve::from_preset(CurvePreset::CircleArc { radius: 1.0 }, None, 128).unwrap();
    let p = PlanePattern::from_curvature_expr(Expr::parse("-0.5").unwrap(), c.domain(), c.len()).unwrap();
    assert!(p.is_reflected());
    assert!(p.curvature().iter().all(|m| (m - 0.5).abs() < 1e-15));
    let q = FoldQuadruple::build(&c, &p, DEFAULT_EPS).unwrap();
    for s in q.strip(Variant::Base).samples() {
        assert!((s.alpha - std::f64::consts::FRAC_PI_3).abs() < 1e-12);
    }
}

#[test]
fn inadmissible_inputs_are_reported() {
    let c = SpaceCurve::from_preset(CurvePreset::CircleArc { radius: 1.0 }, None, 128).unwrap();
    let inflected = PlanePattern::from_curvature_expr(Expr::parse("t").unwrap(), c.domain(), c.len());
    assert!(matches!(inflected, Err(Error::InflectionDetected { .. })));
    let too_curved = PlanePattern::from_curvature_expr(Expr::parse("1.2").unwrap(), c.domain(), c.len()).unwrap();
    assert!(matches!(FoldQuadruple::build(&c, &too_curved, DEFAULT_EPS), Err(Error::PatternTooCurved { .. })));
    let fine = PlanePattern::from_curvature_expr(Expr::parse("0.5").unwrap(), c.domain(), c.len()).unwrap();
    assert!(FoldQuadruple::build(&c, &fine, 0.0).is_err());
    let shifted = PlanePattern::from_curvature_expr(Expr::parse("0.5").unwrap(), (0.0, 1.0), c.len()).unwrap();
    assert!(matches!(FoldQuadruple::build(&c, &shifted, DEFAULT_EPS), Err(Error::DomainMismatch(_))));

    let params: Vec<f64> = (0..50).map(|k| k as f64 / 49.0).collect();
    let line = params.iter().map(|&t| Vector3::new(t, 2.0 * t, -t)).collect();
    let straight = resample_arclength(&CurveInput::Points { params, points: line }, 64).unwrap();
    assert!(matches!(frenet_apparatus(&straight), Err(Error::VanishingCurvature { .. })));
}

#[test]
fn mesh_crease_row_is_the_crease() {
    let (c, p) = c0(512);
    let q = FoldQuadruple::build(&c, &p, DEFAULT_EPS).unwrap();
    for (i, map) in q.maps().iter().enumerate() {
        let mesh = mesh_from_origami(map, 512, 64).unwrap();
        let row = mesh.crease_row();
        let crease = map.upper().curve();
        for (a, b) in row.iter().zip(crease.points()) {
            assert!((a - b).norm() < 1e-15, "P{}", i + 1);
        }
        // both sheets share the crease vertices
        assert_eq!(mesh.vertices.len(), 512 * 65);
    }
}

#[test]
fn helix_quadruple_has_mixed_congruence() {
    let c = SpaceCurve::from_preset(CurvePreset::Helix { radius: 1.0, pitch: 0.5 }, None, 256).unwrap();
    let p = PlanePattern::from_alpha(&c, Expr::parse("pi/3").unwrap()).unwrap();
    let q = FoldQuadruple::build(&c, &p, DEFAULT_EPS).unwrap();
    let report = classify_congruence(&q, PROFILE_TOL).unwrap();
    assert!(report.symmetry.has_reversal_direct && !report.symmetry.is_planar);
    assert!(report.inconclusive_pairs().is_empty());
    assert!(report.max_witness_deviation() < 1e-8);
    assert_eq!(report.verdicts[0][2], Verdict::Congruent);
}

/// A helix with curvature-breaking Fourier terms added to its height.
fn perturbed_helix(coef: &[f64; 3]) -> SpaceCurve {
    let params: Vec<f64> = (0..=600).map(|k| 3.0 * k as f64 / 600.0).collect();
    let points = params
        .iter()
        .map(|&s| {
            let bump: f64 = coef.iter().enumerate().map(|(j, a)| a * ((j + 2) as f64 * s + 0.3 * j as f64).sin()).sum();
            Vector3::new(s.cos(), s.sin(), 0.5 * s + bump)
        })
        .collect();
    resample_arclength(&CurveInput::Points { params, points }, 512).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn generic_perturbations_break_every_symmetry(
        a in 0.02f64..0.08, b in 0.02f64..0.08, c in 0.02f64..0.08,
        signs in prop::array::uniform3(any::<bool>()),
    ) {
        let s = |x: f64, neg: bool| if neg { -x } else { x };
        let curve = perturbed_helix(&[s(a, signs[0]), s(b, signs[1]), s(c, signs[2])]);
        let report = detect_symmetry(&frenet_apparatus(&curve).unwrap(), SYMMETRY_TOL);
        prop_assert!(!report.has_any());
        prop_assert!(report.min_mismatch() > 10.0 * SYMMETRY_TOL, "{:?}", report);
    }
}
