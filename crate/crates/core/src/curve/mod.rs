// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Space curves, plane curves and their symmetries.

mod frenet;
mod plane;
mod preset;
pub mod quadrature;
mod space;
mod symmetry;

pub(crate) use frenet::FrameJet;
pub use frenet::{frenet_apparatus, frenet_serret_residuals, FrenetData, MIN_CURVATURE};
pub(crate) use plane::integrate_turning_with_angle;
pub use plane::{integrate_turning, plane_curvature, signed_curvature, PlanePattern, INFLECTION_TOL};
pub use preset::CurvePreset;
pub use space::{
    resample_arclength, uniform_grid, AnalyticCurve, CurveInput, DerivativeMode, SpaceCurve, MIN_SAMPLES, MIN_SPEED,
};
pub use symmetry::{crease_symmetries, detect_symmetry, CreaseSymmetry, SymmetryKind, SymmetryReport, SYMMETRY_TOL};
