// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Plane curves given by their signed curvature.

use nalgebra::{Vector2, Vector3};

use super::frenet::FrameJet;
use super::space::{resample_points, uniform_grid, AnalyticCurve, SpaceCurve};
use crate::curve::frenet_apparatus;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::jet::Jet;
use crate::stencil;

/// Curvatures with magnitude below this count as an inflection.
pub const INFLECTION_TOL: f64 = 1e-8;

/// Allowed absolute disagreement between domain endpoints.
const DOMAIN_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
enum PatternSource {
    /// `mu(t)` in closed form.
    Curvature(Expr),
    /// `mu = kappa cos(alpha)` along a closed-form crease.
    AlphaOnCrease { alpha: Expr, crease: AnalyticCurve },
    /// Only the sampled profile is known.
    Samples,
}

/// A crease pattern: a plane curve on a uniform arc-length grid together
/// with its curvature, normalized so that the curvature is positive.
#[derive(Clone, Debug)]
pub struct PlanePattern {
    params: Vec<f64>,
    points: Vec<Vector2<f64>>,
    curvature: Vec<f64>,
    source: PatternSource,
    /// `-1` when the input was reflected to make the curvature positive.
    sign: f64,
}

impl PlanePattern {
    /// Pattern with curvature `mu(t)` on `domain`.
    pub fn from_curvature_expr(mu: Expr, domain: (f64, f64), n: usize) -> Result<Self> {
        let params = grid(domain, n)?;
        let raw: Vec<f64> = params.iter().map(|&t| mu.eval(t)).collect();
        Self::assemble(params, raw, PatternSource::Curvature(mu))
    }

    /// Pattern induced by a first angular function on `crease`, through
    /// `mu = kappa cos(alpha)`. Closed-form creases keep the pattern closed-form.
    pub fn from_alpha(crease: &SpaceCurve, alpha: Expr) -> Result<Self> {
        let params = crease.params().to_vec();
        match crease.closed_form() {
            Some(curve) => {
                let curve = curve.clone();
                let raw = params
                    .iter()
                    .map(|&t| FrameJet::new(curve.position_jet(t)).curvature.value() * alpha.eval(t).cos())
                    .collect();
                Self::assemble(params, raw, PatternSource::AlphaOnCrease { alpha, crease: curve })
            }
            None => {
                let frenet = frenet_apparatus(crease)?;
                let raw = params.iter().zip(&frenet.curvature).map(|(&t, k)| k * alpha.eval(t).cos()).collect();
                Self::assemble(params, raw, PatternSource::Samples)
            }
        }
    }

    /// A sampled pattern whose points were already integrated from `curvature`.
    pub(crate) fn from_parts(params: Vec<f64>, points: Vec<Vector2<f64>>, curvature: Vec<f64>) -> Result<Self> {
        let sign = orientation(&params, &curvature)?;
        let mut pattern = PlanePattern { params, points, curvature, source: PatternSource::Samples, sign: 1.0 };
        if sign < 0.0 {
            pattern.points.iter_mut().for_each(|p| p.y = -p.y);
            pattern.curvature.iter_mut().for_each(|m| *m = -*m);
            pattern.sign = -1.0;
        }
        Ok(pattern)
    }

    /// Pattern with a sampled curvature profile on a uniform grid.
    pub fn from_curvature_samples(params: Vec<f64>, mu: Vec<f64>) -> Result<Self> {
        if params.len() != mu.len() {
            return Err(Error::InvalidGrid("parameter and curvature counts differ".into()));
        }
        grid((params[0], params[params.len() - 1]), params.len())?;
        Self::assemble(params, mu, PatternSource::Samples)
    }

    fn assemble(params: Vec<f64>, raw: Vec<f64>, source: PatternSource) -> Result<Self> {
        let sign = orientation(&params, &raw)?;
        let curvature: Vec<f64> = raw.iter().map(|m| m * sign).collect();
        let mut pattern = PlanePattern { params, points: Vec::new(), curvature, source, sign };
        pattern.points = integrate_turning(&pattern.params, |t| pattern.curvature_at(t));
        Ok(pattern)
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn points(&self) -> &[Vector2<f64>] {
        &self.points
    }

    /// Positive curvature per sample.
    pub fn curvature(&self) -> &[f64] {
        &self.curvature
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.params[0], self.params[self.len() - 1])
    }

    pub fn step(&self) -> f64 {
        (self.domain().1 - self.domain().0) / (self.len() - 1) as f64
    }

    /// Whether the input orientation was flipped to make the curvature positive.
    pub fn is_reflected(&self) -> bool {
        self.sign < 0.0
    }

    pub fn is_analytic(&self) -> bool {
        !matches!(self.source, PatternSource::Samples)
    }

    /// Curvature jet at `t` in closed form, if available.
    pub fn curvature_jet(&self, t: Jet) -> Option<Jet> {
        let mu = match &self.source {
            PatternSource::Curvature(mu) => mu.eval_jet(t),
            PatternSource::AlphaOnCrease { alpha, crease } => {
                // The crease curvature is a jet in its own arc length.
                let kappa = FrameJet::new(crease.position_jet(t.value())).curvature;
                let shift = t - t.value();
                kappa.compose(shift) * alpha.eval_jet(t).cos()
            }
            PatternSource::Samples => return None,
        };
        Some(mu * self.sign)
    }

    /// Curvature at any `t` of the domain.
    pub fn curvature_at(&self, t: f64) -> f64 {
        match self.curvature_jet(Jet::constant(t)) {
            Some(mu) => mu.value(),
            None => stencil::interpolate(&self.curvature, self.params[0], self.step(), t, 4),
        }
    }

    /// Fails unless `domain` matches this pattern's parameter interval.
    pub fn check_domain(&self, domain: (f64, f64)) -> Result<()> {
        let (a, b) = self.domain();
        if (a - domain.0).abs() > DOMAIN_TOL || (b - domain.1).abs() > DOMAIN_TOL {
            return Err(Error::DomainMismatch(format!(
                "pattern on [{a}, {b}], crease on [{}, {}]",
                domain.0, domain.1
            )));
        }
        Ok(())
    }
}

fn grid(domain: (f64, f64), n: usize) -> Result<Vec<f64>> {
    if n < super::space::MIN_SAMPLES {
        return Err(Error::TooFewSamples { got: n, min: super::space::MIN_SAMPLES });
    }
    if !(domain.0 < domain.1) {
        return Err(Error::InvalidGrid(format!("interval [{}, {}] is empty", domain.0, domain.1)));
    }
    Ok(uniform_grid(domain.0, domain.1, n))
}

/// `+1` or `-1` so that the curvature becomes positive; errors on inflections.
fn orientation(params: &[f64], mu: &[f64]) -> Result<f64> {
    let sign = if mu[0] < 0.0 { -1.0 } else { 1.0 };
    for (&t, &m) in params.iter().zip(mu) {
        if !(m * sign >= INFLECTION_TOL) {
            return Err(Error::InflectionDetected { t, curvature: m });
        }
    }
    Ok(sign)
}

/// Integrates `theta' = mu`, `(x, y)' = (cos theta, sin theta)` from the
/// origin with initial tangent `(1, 0)` by classical Runge–Kutta.
pub fn integrate_turning(params: &[f64], mu: impl Fn(f64) -> f64) -> Vec<Vector2<f64>> {
    integrate_turning_with_angle(params, mu).0
}

/// [`integrate_turning`] that also returns the tangent angle per sample.
pub(crate) fn integrate_turning_with_angle(params: &[f64], mu: impl Fn(f64) -> f64) -> (Vec<Vector2<f64>>, Vec<f64>) {
    let rhs = |t: f64, theta: f64| Vector3::new(mu(t), theta.cos(), theta.sin());
    let mut state = Vector3::zeros();
    let mut points = Vec::with_capacity(params.len());
    let mut angles = Vec::with_capacity(params.len());
    points.push(Vector2::zeros());
    angles.push(0.0);
    for w in params.windows(2) {
        let (t, h) = (w[0], w[1] - w[0]);
        let k1 = rhs(t, state[0]);
        let k2 = rhs(t + 0.5 * h, state[0] + 0.5 * h * k1[0]);
        let k3 = rhs(t + 0.5 * h, state[0] + 0.5 * h * k2[0]);
        let k4 = rhs(t + h, state[0] + h * k3[0]);
        state += (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (h / 6.0);
        points.push(Vector2::new(state[1], state[2]));
        angles.push(state[0]);
    }
    (points, angles)
}

/// Signed curvature `(x'y'' - y'x'') / |r'|^3` of uniformly sampled points.
pub fn signed_curvature(points: &[Vector2<f64>], h: f64) -> Vec<f64> {
    let d1 = stencil::differentiate(points, h, 1);
    let d2 = stencil::differentiate(points, h, 2);
    d1.iter().zip(&d2).map(|(a, b)| (a.x * b.y - a.y * b.x) / a.norm().powi(3)).collect()
}

/// Crease pattern from raw plane points: arc-length resampling to `n`
/// samples, then finite-difference curvature. Clockwise curves are
/// reflected across the x axis so the curvature is positive.
pub fn plane_curvature(params: &[f64], points: &[Vector2<f64>], n: usize) -> Result<PlanePattern> {
    let (params, mut points) = resample_points(params, points, n)?;
    let h = (params[n - 1] - params[0]) / (n - 1) as f64;
    let raw = signed_curvature(&points, h);
    let sign = orientation(&params, &raw)?;
    if sign < 0.0 {
        points.iter_mut().for_each(|p| p.y = -p.y);
    }
    let curvature = raw.iter().map(|m| m * sign).collect();
    Ok(PlanePattern { params, points, curvature, source: PatternSource::Samples, sign })
}
