// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("curve is not regular near parameter {t}: speed {speed:e}")]
    NonRegularCurve { t: f64, speed: f64 },

    #[error("at least {min} samples are required, got {got}")]
    TooFewSamples { got: usize, min: usize },

    #[error("curvature vanishes at t = {t}: |c''| = {curvature:e}")]
    VanishingCurvature { t: f64, curvature: f64 },

    #[error("plane curve has an inflection near t = {t}: curvature {curvature:e}")]
    InflectionDetected { t: f64, curvature: f64 },

    #[error("crease pattern is too curved at t = {t}: mu = {mu} >= kappa = {kappa}")]
    PatternTooCurved { t: f64, mu: f64, kappa: f64 },

    #[error("crease pattern curvature is not positive at t = {t}: mu = {mu}")]
    PatternNonPositive { t: f64, mu: f64 },

    #[error("({t}, {v}) lies outside the strip domain")]
    OutOfDomain { t: f64, v: f64 },

    #[error("the two mean curvature expressions disagree at t = {t} (relative {relative:e})")]
    FormulaMismatch { t: f64, relative: f64 },

    #[error("degenerate mesh cell at ({i}, {j}): area {area:e}")]
    DegenerateCell { i: usize, j: usize, area: f64 },

    #[error("refusing to export an empty mesh")]
    EmptyMesh,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("crease and pattern domains differ: {0}")]
    DomainMismatch(String),

    #[error("cannot parse '{input}': {message}")]
    Parse { input: String, message: String },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
