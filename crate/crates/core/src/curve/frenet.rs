// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Frenet apparatus with the torsion convention `tau = n' . b`.

use nalgebra::Vector3;

use super::space::{DerivativeMode, SpaceCurve};
use crate::error::{Error, Result};
use crate::jet::{self, Jet, JetVec3};
use crate::stencil;

/// Curvatures below this count as vanishing.
pub const MIN_CURVATURE: f64 = 1e-9;

/// Per-sample curvature, torsion and frame.
#[derive(Clone, Debug)]
pub struct FrenetData {
    pub params: Vec<f64>,
    pub curvature: Vec<f64>,
    pub torsion: Vec<f64>,
    pub tangent: Vec<Vector3<f64>>,
    pub normal: Vec<Vector3<f64>>,
    pub binormal: Vec<Vector3<f64>>,
}

/// Frame quantities as jets in arc length at one point.
#[derive(Clone, Copy, Debug)]
pub(crate) struct FrameJet {
    pub position: JetVec3,
    pub acceleration: JetVec3,
    pub tangent: JetVec3,
    pub normal: JetVec3,
    pub binormal: JetVec3,
    pub curvature: Jet,
    pub torsion: Jet,
}

impl FrameJet {
    pub fn new(position: JetVec3) -> FrameJet {
        let tangent = jet::deriv(&position);
        let acceleration = jet::deriv(&tangent);
        let curvature = jet::norm(&acceleration);
        let normal = jet::scale(curvature.recip(), &acceleration);
        let binormal = jet::cross(&tangent, &normal);
        let torsion = jet::dot(&jet::deriv(&normal), &binormal);
        FrameJet { position, acceleration, tangent, normal, binormal, curvature, torsion }
    }
}

impl FrenetData {
    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Worst deviation of `{e, n, b}` from a right-handed orthonormal frame.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.len() {
            let (e, n, b) = (self.tangent[i], self.normal[i], self.binormal[i]);
            let errs = [
                (e.norm() - 1.0).abs(),
                (n.norm() - 1.0).abs(),
                (b.norm() - 1.0).abs(),
                e.dot(&n).abs(),
                e.dot(&b).abs(),
                n.dot(&b).abs(),
                (e.cross(&n) - b).norm(),
            ];
            worst = errs.into_iter().fold(worst, f64::max);
        }
        worst
    }
}

/// Curvature, torsion and Frenet frame at every sample of `curve`.
pub fn frenet_apparatus(curve: &SpaceCurve) -> Result<FrenetData> {
    let data = match curve.analytic() {
        Some(analytic) => {
            let frames: Vec<FrameJet> =
                curve.params().iter().map(|&s| FrameJet::new(analytic.position_jet(s))).collect();
            FrenetData {
                params: curve.params().to_vec(),
                curvature: frames.iter().map(|f| f.curvature.value()).collect(),
                torsion: frames.iter().map(|f| f.torsion.value()).collect(),
                tangent: frames.iter().map(|f| jet::values(&f.tangent)).collect(),
                normal: frames.iter().map(|f| jet::values(&f.normal)).collect(),
                binormal: frames.iter().map(|f| jet::values(&f.binormal)).collect(),
            }
        }
        None => finite_difference_frames(curve),
    };
    if let Some(i) = (0..data.len()).find(|&i| !(data.curvature[i] >= MIN_CURVATURE)) {
        return Err(Error::VanishingCurvature { t: data.params[i], curvature: data.curvature[i] });
    }
    Ok(data)
}

fn finite_difference_frames(curve: &SpaceCurve) -> FrenetData {
    let h = curve.step();
    let d1 = stencil::differentiate(curve.points(), h, 1);
    let d2 = stencil::differentiate(curve.points(), h, 2);
    let curvature: Vec<f64> = d2.iter().map(|a| a.norm()).collect();
    let tangent: Vec<Vector3<f64>> = d1.iter().map(|v| v.normalize()).collect();
    // Gram-Schmidt keeps the frame orthonormal at the level of rounding.
    let normal: Vec<Vector3<f64>> = d2
        .iter()
        .zip(&tangent)
        .map(|(a, e)| {
            let perp = a - e * a.dot(e);
            if perp.norm() > 0.0 {
                perp.normalize()
            } else {
                Vector3::zeros()
            }
        })
        .collect();
    let binormal: Vec<Vector3<f64>> = tangent.iter().zip(&normal).map(|(e, n)| e.cross(n)).collect();
    let dn = stencil::differentiate(&normal, h, 1);
    let torsion = dn.iter().zip(&binormal).map(|(dn, b)| dn.dot(b)).collect();
    FrenetData { params: curve.params().to_vec(), curvature, torsion, tangent, normal, binormal }
}

/// Largest Frenet–Serret residuals `(|e' - k n|, |n' + k e - t b|, |b' + t n|)`.
///
/// Derivatives of the frame use the curve's own scheme.
pub fn frenet_serret_residuals(curve: &SpaceCurve, frenet: &FrenetData) -> [f64; 3] {
    let mut worst = [0.0f64; 3];
    let mut record = |i: usize, de: Vector3<f64>, dn: Vector3<f64>, db: Vector3<f64>| {
        let (k, t) = (frenet.curvature[i], frenet.torsion[i]);
        let (e, n, b) = (frenet.tangent[i], frenet.normal[i], frenet.binormal[i]);
        worst[0] = worst[0].max((de - n * k).norm());
        worst[1] = worst[1].max((dn + e * k - b * t).norm());
        worst[2] = worst[2].max((db + n * t).norm());
    };
    match curve.mode() {
        DerivativeMode::Analytic => {
            let analytic = curve.analytic().expect("analytic mode implies a closed-form source");
            for (i, &s) in curve.params().iter().enumerate() {
                let f = FrameJet::new(analytic.position_jet(s));
                record(
                    i,
                    jet::values(&jet::deriv(&f.tangent)),
                    jet::values(&jet::deriv(&f.normal)),
                    jet::values(&jet::deriv(&f.binormal)),
                );
            }
        }
        DerivativeMode::FiniteDifference => {
            let h = curve.step();
            let de = stencil::differentiate(&frenet.tangent, h, 1);
            let dn = stencil::differentiate(&frenet.normal, h, 1);
            let db = stencil::differentiate(&frenet.binormal, h, 1);
            for i in 0..frenet.len() {
                record(i, de[i], dn[i], db[i]);
            }
        }
    }
    worst
}
