// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Isometric development of strips into the plane.

use nalgebra::Vector2;

use crate::curve::{integrate_turning_with_angle, PlanePattern};
use crate::error::{Error, Result};
use crate::stencil;
use crate::strip::{DevelopableStrip, Variant};

/// A developed crease with the rulings of the two strips glued along it.
#[derive(Clone, Debug)]
pub struct CreasePattern {
    pub curve: PlanePattern,
    /// Tangent angle of the developed curve per sample.
    pub angles: Vec<f64>,
    /// Unit directions of the `v >= 0` rulings, on the left of the curve.
    pub rulings_upper: Vec<Vector2<f64>>,
    /// Unit directions of the `v < 0` rulings as drawn away from the
    /// curve, on its right.
    pub rulings_lower: Vec<Vector2<f64>>,
    /// Length of every ruling segment.
    pub eps: f64,
    /// Variant of the upper strip.
    pub variant: Variant,
}

struct Development {
    pattern: PlanePattern,
    angles: Vec<f64>,
}

fn develop(strip: &DevelopableStrip) -> Result<Development> {
    let params = strip.params();
    let mu: Vec<f64> = strip.samples().iter().map(|p| p.geodesic_curvature).collect();
    let (a, h) = (params[0], strip.curve().step());
    let (points, angles) = integrate_turning_with_angle(params, |t| {
        let k = ((t - a) / h).round();
        if (t - (a + k * h)).abs() <= 1e-12 * h && k >= 0.0 && (k as usize) < mu.len() {
            mu[k as usize]
        } else if strip.is_analytic() {
            strip.local(t).map(|p| p.geodesic_curvature).unwrap_or(f64::NAN)
        } else {
            stencil::interpolate(&mu, a, h, t, 4)
        }
    });
    let pattern = PlanePattern::from_parts(params.to_vec(), points, mu)?;
    Ok(Development { pattern, angles })
}

/// The generator of `strip`: the plane curve with curvature `mu_f`, from
/// the origin with initial tangent `(1, 0)`.
pub fn develop_generator(strip: &DevelopableStrip) -> Result<PlanePattern> {
    develop(strip).map(|d| d.pattern)
}

/// Develops an origami-map pair and attaches its rulings: the upper strip's
/// at angle `beta` on the left of the curve and the lower strip's (its
/// `v < 0` half) at angle `beta~` from the backward tangent on the right.
/// In the plane every ruling of the lower strip is the straight
/// continuation of a ruling line through the crease.
pub fn pattern_with_rulings(upper: &DevelopableStrip, lower: &DevelopableStrip, eps: f64) -> Result<CreasePattern> {
    if lower.variant() != upper.variant().dual() {
        return Err(Error::InvalidScenario(format!(
            "rulings come from a strip and its dual, got {} and {}",
            upper.variant(),
            lower.variant()
        )));
    }
    let Development { pattern, angles } = develop(upper)?;
    let mut rulings_upper = Vec::with_capacity(angles.len());
    let mut rulings_lower = Vec::with_capacity(angles.len());
    for (k, &theta) in angles.iter().enumerate() {
        let tangent = Vector2::new(theta.cos(), theta.sin());
        let left = Vector2::new(-theta.sin(), theta.cos());
        let (b, b_dual) = (upper.samples()[k].beta, lower.samples()[k].beta);
        rulings_upper.push(tangent * b.cos() + left * b.sin());
        rulings_lower.push(-(tangent * b_dual.cos() + left * b_dual.sin()));
    }
    Ok(CreasePattern { curve: pattern, angles, rulings_upper, rulings_lower, eps, variant: upper.variant() })
}

impl CreasePattern {
    /// End points of the upper and lower ruling segments at sample `k`.
    pub fn segments(&self, k: usize) -> [(Vector2<f64>, Vector2<f64>); 2] {
        let p = self.curve.points()[k];
        [(p, p + self.rulings_upper[k] * self.eps), (p, p + self.rulings_lower[k] * self.eps)]
    }
}

/// Distance between two sampled plane curves after the best proper rigid
/// alignment, trying both orientations of the second.
pub fn aligned_distance(a: &[Vector2<f64>], b: &[Vector2<f64>]) -> f64 {
    let fit = |b: &[Vector2<f64>]| {
        let n = a.len() as f64;
        let ca = a.iter().sum::<Vector2<f64>>() / n;
        let cb = b.iter().sum::<Vector2<f64>>() / n;
        let (mut dot, mut cross) = (0.0, 0.0);
        for (p, q) in a.iter().zip(b) {
            let (p, q) = (p - ca, q - cb);
            dot += q.dot(&p);
            cross += q.x * p.y - q.y * p.x;
        }
        let (s, c) = cross.atan2(dot).sin_cos();
        a.iter()
            .zip(b)
            .map(|(p, q)| {
                let q = q - cb;
                (Vector2::new(c * q.x - s * q.y, s * q.x + c * q.y) + ca - p).norm()
            })
            .fold(0.0, f64::max)
    };
    let reversed: Vec<_> = b.iter().rev().copied().collect();
    fit(b).min(fit(&reversed))
}
