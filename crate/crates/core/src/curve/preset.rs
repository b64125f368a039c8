// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form space curves.

use std::f64::consts::{FRAC_PI_6, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::jet::{Jet, JetVec3};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum CurvePreset {
    /// `(arctan t, log(1+t^2)/sqrt 2, t - arctan t)`, unit speed, with
    /// `kappa = tau = sqrt 2 / (1+t^2)`.
    #[default]
    PaperC0,
    /// Circle of the given radius in the `xy` plane, parametrized by angle.
    CircleArc { radius: f64 },
    /// Circular helix parametrized by arc length.
    Helix { radius: f64, pitch: f64 },
}

impl CurvePreset {
    pub fn name(&self) -> &'static str {
        match self {
            CurvePreset::PaperC0 => "paper-c0",
            CurvePreset::CircleArc { .. } => "circle-arc",
            CurvePreset::Helix { .. } => "helix",
        }
    }

    /// Native parameter interval used when none is given.
    pub fn default_interval(&self) -> (f64, f64) {
        match self {
            CurvePreset::PaperC0 => (0.1, 0.9),
            CurvePreset::CircleArc { .. } => (-FRAC_PI_6, FRAC_PI_6),
            CurvePreset::Helix { .. } => (0.0, 3.0),
        }
    }

    /// Whether the native parameter is already arc length.
    pub fn is_unit_speed(&self) -> bool {
        match self {
            CurvePreset::PaperC0 | CurvePreset::Helix { .. } => true,
            CurvePreset::CircleArc { radius } => *radius == 1.0,
        }
    }

    pub fn position(&self, x: Jet) -> JetVec3 {
        match *self {
            CurvePreset::PaperC0 => {
                let atan = x.atan();
                [atan, (Jet::constant(1.0) + x * x).ln() / SQRT_2, x - atan]
            }
            CurvePreset::CircleArc { radius } => {
                let (s, c) = x.sin_cos();
                [c * radius, s * radius, Jet::constant(0.0)]
            }
            CurvePreset::Helix { radius, pitch } => {
                let speed = radius.hypot(pitch);
                let angle = x / speed;
                let (s, c) = angle.sin_cos();
                [c * radius, s * radius, angle * pitch]
            }
        }
    }
}

impl fmt::Display for CurvePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurvePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper-c0" => Ok(CurvePreset::PaperC0),
            "circle-arc" => Ok(CurvePreset::CircleArc { radius: 1.0 }),
            "helix" => Ok(CurvePreset::Helix { radius: 1.0, pitch: 0.5 }),
            other => Err(Error::InvalidScenario(format!(
                "unknown curve preset '{other}' (expected paper-c0, circle-arc or helix)"
            ))),
        }
    }
}
