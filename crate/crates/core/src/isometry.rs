// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{Matrix3, Unit, Vector3};

use crate::jet::{Jet, JetVec3};

/// A Euclidean isometry `x -> linear * x + translation` with orthogonal
/// `linear` (proper or improper).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidMotion {
    pub linear: Matrix3<f64>,
    pub translation: Vector3<f64>,
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion { linear: Matrix3::identity(), translation: Vector3::zeros() }
    }

    pub fn new(linear: Matrix3<f64>, translation: Vector3<f64>) -> Self {
        RigidMotion { linear, translation }
    }

    /// Rotation by `angle` about `axis` through the origin, then translation.
    pub fn rotation(axis: Vector3<f64>, angle: f64, translation: Vector3<f64>) -> Self {
        let r = nalgebra::Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle);
        RigidMotion { linear: *r.matrix(), translation }
    }

    /// Reflection across the plane through the origin with the given normal.
    pub fn reflection(normal: Vector3<f64>) -> Self {
        let n = normal.normalize();
        RigidMotion { linear: Matrix3::identity() - 2.0 * n * n.transpose(), translation: Vector3::zeros() }
    }

    pub fn apply(&self, p: &Vector3<f64>) -> Vector3<f64> {
        self.linear * p + self.translation
    }

    pub fn apply_vector(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.linear * v
    }

    pub fn apply_jet(&self, p: &JetVec3) -> JetVec3 {
        let m = &self.linear;
        let row =
            |r: usize| p[0] * m[(r, 0)] + p[1] * m[(r, 1)] + p[2] * m[(r, 2)] + Jet::constant(self.translation[r]);
        [row(0), row(1), row(2)]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        RigidMotion {
            linear: self.linear * other.linear,
            translation: self.linear * other.translation + self.translation,
        }
    }

    /// The inverse motion, using `linear^T` as the inverse of `linear`.
    pub fn inverse(&self) -> RigidMotion {
        let linear = self.linear.transpose();
        RigidMotion { linear, translation: -(linear * self.translation) }
    }

    pub fn is_proper(&self) -> bool {
        self.linear.determinant() > 0.0
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        (self.linear - Matrix3::identity()).abs().max() <= tol && self.translation.abs().max() <= tol
    }

    /// Largest entry of `M^T M - I`.
    pub fn orthogonality_error(&self) -> f64 {
        (self.linear.transpose() * self.linear - Matrix3::identity()).abs().max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflections_are_improper_involutions() {
        let s = RigidMotion::reflection(Vector3::z());
        assert!(!s.is_proper());
        assert!(s.compose(&s).is_identity(1e-15));
        let p = Vector3::new(1.0, 2.0, 3.0);
        assert_eq!(s.apply(&p), Vector3::new(1.0, 2.0, -3.0));
    }

    #[test]
    fn composition_order() {
        let r = RigidMotion::rotation(Vector3::z(), std::f64::consts::FRAC_PI_2, Vector3::new(1.0, 0.0, 0.0));
        let t = RigidMotion::reflection(Vector3::y());
        let p = Vector3::new(1.0, 1.0, 0.0);
        assert!((r.compose(&t).apply(&p) - r.apply(&t.apply(&p))).norm() < 1e-15);
        assert!(r.orthogonality_error() < 1e-15);
        assert!(r.compose(&r.inverse()).is_identity(1e-15));
    }
}
