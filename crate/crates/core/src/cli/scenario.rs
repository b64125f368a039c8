// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario descriptors: built-in presets, TOML files and point lists.

use std::fs;
use std::path::{Path, PathBuf};

use nalgebra::{Vector2, Vector3};
use serde::Deserialize;

use crate::curve::{
    plane_curvature, resample_arclength, CurveInput, CurvePreset, PlanePattern, SpaceCurve, MIN_SAMPLES,
};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::fold::PROFILE_TOL;
use crate::strip::DEFAULT_EPS;

/// Where the crease comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum CreaseSpec {
    Analytic {
        preset: CurvePreset,
        interval: (f64, f64),
    },
    /// CSV rows `t,x,y,z`, resampled by arc length.
    Points(PathBuf),
}

/// Where the crease pattern comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum PatternSpec {
    /// First angular function; the pattern curvature is `kappa cos alpha`.
    Alpha(String),
    /// Pattern curvature as a function of arc length.
    Mu(String),
    /// CSV rows `t,x,y` of a plane curve, resampled by arc length.
    Points(PathBuf),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub crease: CreaseSpec,
    pub pattern: PatternSpec,
    pub samples: usize,
    pub eps: f64,
    /// Profile tolerance used by the separation and congruence checks.
    pub tol: f64,
    pub out: PathBuf,
}

/// Optional overrides, in the shape of the command-line flags.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub samples: Option<usize>,
    pub eps: Option<f64>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub alpha: Option<String>,
    pub mu: Option<String>,
}

/// On-disk form of a scenario.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    kind: Option<String>,
    preset: Option<String>,
    radius: Option<f64>,
    pitch: Option<f64>,
    interval: Option<[f64; 2]>,
    points: Option<PathBuf>,
    pattern_points: Option<PathBuf>,
    samples: Option<usize>,
    eps: Option<f64>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    alpha: Option<String>,
    mu: Option<String>,
}

fn default_alpha(preset: CurvePreset) -> &'static str {
    match preset {
        CurvePreset::PaperC0 => "pi*(t+10)/24",
        CurvePreset::CircleArc { .. } => "pi/4 + t/2",
        CurvePreset::Helix { .. } => "pi/3",
    }
}

impl Scenario {
    /// The built-in scenario named `name`.
    pub fn preset(name: &str) -> Result<Scenario> {
        let preset: CurvePreset = name.parse()?;
        Ok(Scenario {
            crease: CreaseSpec::Analytic { preset, interval: preset.default_interval() },
            pattern: PatternSpec::Alpha(default_alpha(preset).to_string()),
            samples: 512,
            eps: DEFAULT_EPS,
            tol: PROFILE_TOL,
            out: PathBuf::from("out"),
        })
    }

    /// Parses a TOML scenario; relative point-list paths are resolved
    /// against `base`.
    pub fn from_toml(text: &str, base: &Path) -> Result<Scenario> {
        let file: ScenarioFile = toml::from_str(text)
            .map_err(|e| Error::Parse { input: "scenario".into(), message: e.message().to_string() })?;
        let kind = file.kind.as_deref().unwrap_or(if file.points.is_some() { "points" } else { "analytic" });
        let mut scenario = match kind {
            "analytic" => {
                if file.points.is_some() {
                    return Err(Error::InvalidScenario("'points' requires kind = \"points\"".into()));
                }
                let name = file
                    .preset
                    .as_deref()
                    .ok_or_else(|| Error::InvalidScenario("an analytic crease needs a 'preset'".into()))?;
                let mut s = Scenario::preset(name)?;
                if let CreaseSpec::Analytic { preset, interval } = &mut s.crease {
                    match preset {
                        CurvePreset::CircleArc { radius } => {
                            if file.pitch.is_some() {
                                return Err(Error::InvalidScenario("'pitch' only applies to the helix".into()));
                            }
                            *radius = file.radius.unwrap_or(*radius);
                        }
                        CurvePreset::Helix { radius, pitch } => {
                            *radius = file.radius.unwrap_or(*radius);
                            *pitch = file.pitch.unwrap_or(*pitch);
                        }
                        CurvePreset::PaperC0 => {
                            if file.radius.is_some() || file.pitch.is_some() {
                                return Err(Error::InvalidScenario("paper-c0 takes no shape parameters".into()));
                            }
                        }
                    }
                    if let Some([a, b]) = file.interval {
                        *interval = (a, b);
                    }
                }
                s
            }
            "points" => {
                if file.preset.is_some() || file.interval.is_some() {
                    return Err(Error::InvalidScenario("a point-list crease takes no 'preset' or 'interval'".into()));
                }
                let path = file
                    .points
                    .ok_or_else(|| Error::InvalidScenario("kind = \"points\" needs a 'points' file".into()))?;
                let mut s = Scenario::preset("paper-c0")?;
                s.crease = CreaseSpec::Points(base.join(path));
                s
            }
            other => {
                return Err(Error::InvalidScenario(format!("unknown kind '{other}' (expected analytic or points)")))
            }
        };
        let pattern_sources = [file.alpha.is_some(), file.mu.is_some(), file.pattern_points.is_some()];
        if pattern_sources.iter().filter(|x| **x).count() > 1 {
            return Err(Error::InvalidScenario("give at most one of 'alpha', 'mu' and 'pattern_points'".into()));
        }
        if let Some(path) = file.pattern_points {
            scenario.pattern = PatternSpec::Points(base.join(path));
        } else if file.alpha.is_none() && file.mu.is_none() && matches!(scenario.crease, CreaseSpec::Points(_)) {
            return Err(Error::InvalidScenario("a point-list crease needs 'alpha', 'mu' or 'pattern_points'".into()));
        }
        scenario.apply(&Overrides {
            samples: file.samples,
            eps: file.eps,
            tol: file.tol,
            out: file.out,
            alpha: file.alpha,
            mu: file.mu,
        })?;
        Ok(scenario)
    }

    pub fn from_file(path: &Path) -> Result<Scenario> {
        let text = fs::read_to_string(path)?;
        Scenario::from_toml(&text, path.parent().unwrap_or(Path::new(".")))
    }

    /// Applies overrides and re-validates.
    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        if o.alpha.is_some() && o.mu.is_some() {
            return Err(Error::InvalidScenario("give either alpha or mu, not both".into()));
        }
        if let Some(n) = o.samples {
            self.samples = n;
        }
        if let Some(eps) = o.eps {
            self.eps = eps;
        }
        if let Some(tol) = o.tol {
            self.tol = tol;
        }
        if let Some(out) = &o.out {
            self.out = out.clone();
        }
        if let Some(a) = &o.alpha {
            self.pattern = PatternSpec::Alpha(a.clone());
        }
        if let Some(m) = &o.mu {
            self.pattern = PatternSpec::Mu(m.clone());
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < MIN_SAMPLES {
            return Err(Error::TooFewSamples { got: self.samples, min: MIN_SAMPLES });
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidScenario(format!("eps must be positive, got {}", self.eps)));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidScenario(format!("tol must be positive, got {}", self.tol)));
        }
        if let CreaseSpec::Analytic { interval: (a, b), .. } = self.crease {
            if !(a < b) {
                return Err(Error::InvalidScenario(format!("empty interval [{a}, {b}]")));
            }
        }
        match &self.pattern {
            PatternSpec::Alpha(e) | PatternSpec::Mu(e) => Expr::parse(e).map(|_| ()),
            PatternSpec::Points(_) => Ok(()),
        }
    }

    /// Samples the crease.
    pub fn crease(&self) -> Result<SpaceCurve> {
        match &self.crease {
            CreaseSpec::Analytic { preset, interval } => {
                SpaceCurve::from_preset(*preset, Some(*interval), self.samples)
            }
            CreaseSpec::Points(path) => {
                let rows = read_rows::<4>(path)?;
                let params = rows.iter().map(|r| r[0]).collect();
                let points = rows.iter().map(|r| Vector3::new(r[1], r[2], r[3])).collect();
                resample_arclength(&CurveInput::Points { params, points }, self.samples)
            }
        }
    }

    /// Builds the crease pattern on the crease's arc-length domain.
    pub fn pattern(&self, crease: &SpaceCurve) -> Result<PlanePattern> {
        let pattern = match &self.pattern {
            PatternSpec::Alpha(e) => PlanePattern::from_alpha(crease, Expr::parse(e)?)?,
            PatternSpec::Mu(e) => PlanePattern::from_curvature_expr(Expr::parse(e)?, crease.domain(), crease.len())?,
            PatternSpec::Points(path) => {
                let rows = read_rows::<3>(path)?;
                let params: Vec<f64> = rows.iter().map(|r| r[0]).collect();
                let points: Vec<Vector2<f64>> = rows.iter().map(|r| Vector2::new(r[1], r[2])).collect();
                plane_curvature(&params, &points, crease.len())?
            }
        };
        pattern.check_domain(crease.domain())?;
        Ok(pattern)
    }

    /// Short description for report headers.
    pub fn describe(&self) -> String {
        let crease = match &self.crease {
            CreaseSpec::Analytic { preset, interval } => format!("{preset} on [{:?}, {:?}]", interval.0, interval.1),
            CreaseSpec::Points(p) => format!("points {}", p.display()),
        };
        let pattern = match &self.pattern {
            PatternSpec::Alpha(e) => format!("alpha = {e}"),
            PatternSpec::Mu(e) => format!("mu = {e}"),
            PatternSpec::Points(p) => format!("pattern points {}", p.display()),
        };
        format!("crease {crease}, {pattern}, n = {}, eps = {:?}", self.samples, self.eps)
    }
}

/// Reads comma-separated rows of `N` numbers, skipping blank lines, `#`
/// comments and a non-numeric header line.
fn read_rows<const N: usize>(path: &Path) -> Result<Vec<[f64; N]>> {
    let text = fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, _> = fields.iter().map(|f| f.parse::<f64>()).collect();
        match parsed {
            Ok(v) if v.len() == N => rows.push(v.try_into().unwrap()),
            Err(_) if rows.is_empty() && n == 0 => {}
            _ => {
                return Err(Error::Parse {
                    input: format!("{}:{}", path.display(), n + 1),
                    message: format!("expected {N} numbers"),
                })
            }
        }
    }
    Ok(rows)
}
