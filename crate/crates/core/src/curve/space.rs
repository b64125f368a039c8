// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Arc-length parametrized space curves.

use std::sync::Arc;

use nalgebra::{SVector, Vector3};

use super::preset::CurvePreset;
use super::quadrature;
use crate::error::{Error, Result};
use crate::isometry::RigidMotion;
use crate::jet::{self, Jet, JetVec3, JET_LEN};
use crate::stencil;

/// Smallest sample count accepted by [`resample_arclength`].
pub const MIN_SAMPLES: usize = 16;

/// Speeds below this are treated as a singular parametrization.
pub const MIN_SPEED: f64 = 1e-12;

const TABLE_SEGMENTS: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivativeMode {
    /// Exact derivatives of a closed-form curve, propagated with jets.
    Analytic,
    /// Fourth-order finite differences on the sample grid.
    FiniteDifference,
}

/// Raw input to [`resample_arclength`].
#[derive(Clone, Debug)]
pub enum CurveInput {
    Analytic {
        preset: CurvePreset,
        interval: Option<(f64, f64)>,
    },
    /// Points with an increasing but otherwise arbitrary parameter.
    Points {
        params: Vec<f64>,
        points: Vec<Vector3<f64>>,
    },
}

#[derive(Debug)]
struct ArcLengthTable {
    knots: Vec<f64>,
    cumulative: Vec<f64>,
}

/// A closed-form curve re-expressed in arc length on `domain`.
///
/// The domain starts at the native start parameter; for unit-speed presets
/// the two parametrizations coincide.
#[derive(Clone, Debug)]
pub struct AnalyticCurve {
    preset: CurvePreset,
    native: (f64, f64),
    domain: (f64, f64),
    table: Option<Arc<ArcLengthTable>>,
    reversed: bool,
    motion: Option<RigidMotion>,
}

impl AnalyticCurve {
    pub fn new(preset: CurvePreset, native: (f64, f64)) -> Result<Self> {
        let (lo, hi) = native;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidGrid(format!("interval [{lo}, {hi}] is empty")));
        }
        let mut curve = AnalyticCurve { preset, native, domain: native, table: None, reversed: false, motion: None };
        let h = (hi - lo) / TABLE_SEGMENTS as f64;
        let mut knots = Vec::with_capacity(TABLE_SEGMENTS + 1);
        let mut cumulative = Vec::with_capacity(TABLE_SEGMENTS + 1);
        let mut total = 0.0;
        for k in 0..=TABLE_SEGMENTS {
            let theta = if k == TABLE_SEGMENTS { hi } else { lo + k as f64 * h };
            knots.push(theta);
            cumulative.push(total);
            if k < TABLE_SEGMENTS {
                let next = if k + 1 == TABLE_SEGMENTS { hi } else { lo + (k + 1) as f64 * h };
                for (_, x) in quadrature::gauss_legendre() {
                    let at = 0.5 * (theta + next) + 0.5 * (next - theta) * x;
                    let speed = curve.native_speed(at);
                    if !(speed >= MIN_SPEED) {
                        return Err(Error::NonRegularCurve { t: at, speed });
                    }
                }
                total += quadrature::integrate(theta, next, |x| curve.native_speed(x));
            }
        }
        if !preset.is_unit_speed() {
            curve.domain = (lo, lo + total);
            curve.table = Some(Arc::new(ArcLengthTable { knots, cumulative }));
        }
        Ok(curve)
    }

    pub fn preset(&self) -> CurvePreset {
        self.preset
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn length(&self) -> f64 {
        self.domain.1 - self.domain.0
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    /// The same curve traversed backwards on the same domain.
    pub fn reversed(&self) -> Self {
        AnalyticCurve { reversed: !self.reversed, ..self.clone() }
    }

    fn native_speed(&self, theta: f64) -> f64 {
        let p = self.preset.position(Jet::variable(theta));
        jet::values(&jet::deriv(&p)).norm()
    }

    fn native_of(&self, s: f64) -> f64 {
        let Some(table) = &self.table else {
            return self.native.0 + (s - self.domain.0);
        };
        let rel = (s - self.domain.0).clamp(0.0, self.length());
        let k = table.cumulative.partition_point(|&c| c <= rel).saturating_sub(1).min(TABLE_SEGMENTS - 1);
        let (t0, t1) = (table.knots[k], table.knots[k + 1]);
        let (s0, s1) = (table.cumulative[k], table.cumulative[k + 1]);
        let mut theta = t0 + (t1 - t0) * (rel - s0) / (s1 - s0);
        for _ in 0..50 {
            let arc = s0 + quadrature::integrate(t0, theta, |x| self.native_speed(x));
            let step = (arc - rel) / self.native_speed(theta);
            theta = (theta - step).clamp(t0, t1);
            if step.abs() <= 1e-16 * (1.0 + theta.abs()) {
                break;
            }
        }
        theta
    }

    /// Jet of the native parameter as a function of arc length around `s`
    /// (`sign = -1` for the reversed traversal).
    fn native_jet(&self, s: f64, sign: f64) -> Jet {
        let theta0 = self.native_of(s);
        if self.table.is_none() {
            return Jet::linear(theta0, sign);
        }
        // Revert the series s(theta0 + eta) - s = sign * h.
        let speed = jet::norm(&jet::deriv(&self.preset.position(Jet::variable(theta0))));
        let mut arc = [0.0; JET_LEN];
        for k in 1..JET_LEN {
            arc[k] = speed.coeffs()[k - 1] / k as f64;
        }
        let arc = Jet::from_coeffs(arc);
        let target = Jet::linear(0.0, sign);
        let mut eta = Jet::constant(0.0);
        for _ in 0..JET_LEN {
            eta = eta - (arc.compose(eta) - target) / speed.value();
            let mut c = *eta.coeffs();
            c[0] = 0.0;
            eta = Jet::from_coeffs(c);
        }
        eta + theta0
    }

    /// Position jet at arc length `s` (derivatives with respect to arc length).
    pub fn position_jet(&self, s: f64) -> JetVec3 {
        let (along, sign) = if self.reversed { (self.domain.0 + self.domain.1 - s, -1.0) } else { (s, 1.0) };
        let p = self.preset.position(self.native_jet(along, sign));
        match &self.motion {
            Some(m) => m.apply_jet(&p),
            None => p,
        }
    }

    /// The curve moved by a rigid motion (applied after any earlier one).
    pub fn moved(&self, motion: &RigidMotion) -> Self {
        let motion = match &self.motion {
            Some(m) => motion.compose(m),
            None => *motion,
        };
        AnalyticCurve { motion: Some(motion), ..self.clone() }
    }

    pub fn position(&self, s: f64) -> Vector3<f64> {
        jet::values(&self.position_jet(s))
    }
}

#[derive(Clone, Debug)]
enum CurveSource {
    Analytic(AnalyticCurve),
    Points,
}

/// A curve sampled on a uniform arc-length grid over `[a, b]`.
#[derive(Clone, Debug)]
pub struct SpaceCurve {
    params: Vec<f64>,
    points: Vec<Vector3<f64>>,
    source: CurveSource,
    mode: DerivativeMode,
}

/// `n` equally spaced parameters from `a` to `b`, hitting both ends exactly.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let last = n - 1;
    (0..n).map(|i| if i == last { b } else { a + (b - a) * (i as f64 / last as f64) }).collect()
}

impl SpaceCurve {
    /// Samples a closed-form preset with analytic derivatives.
    pub fn from_preset(preset: CurvePreset, interval: Option<(f64, f64)>, n: usize) -> Result<Self> {
        resample_arclength(&CurveInput::Analytic { preset, interval }, n)
    }

    pub fn from_analytic(curve: AnalyticCurve, n: usize) -> Result<Self> {
        check_samples(n)?;
        let (a, b) = curve.domain();
        let params = uniform_grid(a, b, n);
        let points = params.iter().map(|&s| curve.position(s)).collect();
        Ok(SpaceCurve { params, points, source: CurveSource::Analytic(curve), mode: DerivativeMode::Analytic })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn points(&self) -> &[Vector3<f64>] {
        &self.points
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

    pub fn length(&self) -> f64 {
        self.domain().1 - self.domain().0
    }

    /// Grid spacing.
    pub fn step(&self) -> f64 {
        self.length() / (self.len() - 1) as f64
    }

    pub fn mode(&self) -> DerivativeMode {
        self.mode
    }

    pub fn analytic(&self) -> Option<&AnalyticCurve> {
        match (&self.source, self.mode) {
            (CurveSource::Analytic(c), DerivativeMode::Analytic) => Some(c),
            _ => None,
        }
    }

    /// Switches the derivative scheme. Analytic derivatives need a
    /// closed-form source.
    pub fn with_mode(&self, mode: DerivativeMode) -> Result<Self> {
        if mode == DerivativeMode::Analytic && !matches!(self.source, CurveSource::Analytic(_)) {
            return Err(Error::InvalidScenario(
                "analytic derivatives need a closed-form curve; point lists use finite differences".into(),
            ));
        }
        Ok(SpaceCurve { mode, ..self.clone() })
    }

    /// The closed-form source, whatever the derivative scheme.
    pub fn closed_form(&self) -> Option<&AnalyticCurve> {
        match &self.source {
            CurveSource::Analytic(c) => Some(c),
            CurveSource::Points => None,
        }
    }

    /// Position jet at an arbitrary parameter, when analytic.
    pub fn position_jet(&self, s: f64) -> Option<JetVec3> {
        self.analytic().map(|c| c.position_jet(s))
    }

    /// Position at an arbitrary parameter in the domain.
    pub fn position_at(&self, s: f64) -> Vector3<f64> {
        match self.analytic() {
            Some(c) => c.position(s),
            None => stencil::interpolate(&self.points, self.params[0], self.step(), s, 6),
        }
    }

    /// The orientation-reversed curve `c(a + b - t)` on the same domain.
    pub fn reverse(&self) -> SpaceCurve {
        let mut points = self.points.clone();
        points.reverse();
        let source = match &self.source {
            CurveSource::Analytic(c) => CurveSource::Analytic(c.reversed()),
            CurveSource::Points => CurveSource::Points,
        };
        SpaceCurve { params: self.params.clone(), points, source, mode: self.mode }
    }

    /// Applies a rigid motion; closed-form sources stay closed-form.
    pub fn transformed(&self, motion: &RigidMotion) -> SpaceCurve {
        let points = self.points.iter().map(|p| motion.apply(p)).collect();
        let source = match &self.source {
            CurveSource::Analytic(c) => CurveSource::Analytic(c.moved(motion)),
            CurveSource::Points => CurveSource::Points,
        };
        SpaceCurve { params: self.params.clone(), points, source, mode: self.mode }
    }
}

fn check_samples(n: usize) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples { got: n, min: MIN_SAMPLES });
    }
    Ok(())
}

/// Resamples a curve on `n` points equally spaced in arc length.
///
/// Closed-form input keeps its analytic source for exact derivatives. Point
/// input is interpolated piecewise by quintics in the given parameter; its
/// arc length is integrated by Gauss–Legendre quadrature per interval and
/// inverted by Newton iteration.
pub fn resample_arclength(input: &CurveInput, n: usize) -> Result<SpaceCurve> {
    check_samples(n)?;
    match input {
        CurveInput::Analytic { preset, interval } => {
            let curve = AnalyticCurve::new(*preset, interval.unwrap_or_else(|| preset.default_interval()))?;
            SpaceCurve::from_analytic(curve, n)
        }
        CurveInput::Points { params, points } => {
            let (params, points) = resample_points(params, points, n)?;
            Ok(SpaceCurve { params, points, source: CurveSource::Points, mode: DerivativeMode::FiniteDifference })
        }
    }
}

const PIECE_NODES: usize = 6;

/// Piecewise quintic interpolant through scattered samples.
struct Piecewise<'a, const D: usize> {
    params: &'a [f64],
    points: &'a [SVector<f64, D>],
}

impl<const D: usize> Piecewise<'_, D> {
    fn window(&self, k: usize) -> usize {
        k.saturating_sub(PIECE_NODES / 2 - 1).min(self.params.len() - PIECE_NODES)
    }

    fn eval(&self, k: usize, x: f64, order: usize) -> SVector<f64, D> {
        let start = self.window(k);
        let nodes = &self.params[start..start + PIECE_NODES];
        let weights = stencil::fornberg_weights(x, nodes, order);
        weights.iter().zip(&self.points[start..start + PIECE_NODES]).fold(SVector::zeros(), |acc, (w, p)| acc + p * *w)
    }

    fn speed(&self, k: usize, x: f64) -> f64 {
        self.eval(k, x, 1).norm()
    }
}

/// Arc-length resampling of raw points in any dimension; returns the new
/// parameters (starting at the first input parameter) and points.
pub(crate) fn resample_points<const D: usize>(
    params: &[f64],
    points: &[SVector<f64, D>],
    n: usize,
) -> Result<(Vec<f64>, Vec<SVector<f64, D>>)> {
    check_samples(n)?;
    if params.len() != points.len() {
        return Err(Error::InvalidGrid("parameter and point counts differ".into()));
    }
    if params.len() < PIECE_NODES {
        return Err(Error::TooFewSamples { got: params.len(), min: PIECE_NODES });
    }
    if let Some(w) = params.windows(2).find(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidGrid(format!("parameters must increase strictly (at {})", w[0])));
    }
    let piece = Piecewise { params, points };
    let segments = params.len() - 1;
    let mut cumulative = Vec::with_capacity(params.len());
    let mut total = 0.0;
    cumulative.push(0.0);
    for k in 0..segments {
        let (lo, hi) = (params[k], params[k + 1]);
        for (_, x) in quadrature::gauss_legendre() {
            let at = 0.5 * (lo + hi) + 0.5 * (hi - lo) * x;
            let speed = piece.speed(k, at);
            if !(speed >= MIN_SPEED) {
                return Err(Error::NonRegularCurve { t: at, speed });
            }
        }
        total += quadrature::integrate(lo, hi, |x| piece.speed(k, x));
        cumulative.push(total);
    }
    let a = params[0];
    let grid = uniform_grid(a, a + total, n);
    let mut out = Vec::with_capacity(n);
    for &s in &grid {
        let rel = (s - a).clamp(0.0, total);
        let k = cumulative.partition_point(|&c| c <= rel).saturating_sub(1).min(segments - 1);
        let (lo, hi) = (params[k], params[k + 1]);
        let (s0, s1) = (cumulative[k], cumulative[k + 1]);
        let mut x = lo + (hi - lo) * (rel - s0) / (s1 - s0);
        for _ in 0..50 {
            let arc = s0 + quadrature::integrate(lo, x, |y| piece.speed(k, y));
            let step = (arc - rel) / piece.speed(k, x);
            x = (x - step).clamp(lo, hi);
            if step.abs() <= 1e-16 * (1.0 + x.abs()) {
                break;
            }
        }
        out.push(piece.eval(k, x, 0));
    }
    Ok((grid, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_6;

    #[test]
    fn unit_speed_presets_keep_their_parameter() {
        let c = SpaceCurve::from_preset(CurvePreset::Helix { radius: 1.0, pitch: 0.5 }, None, 100).unwrap();
        for &s in c.params() {
            let speed = jet::values(&jet::deriv(&c.position_jet(s).unwrap())).norm();
            assert!((speed - 1.0).abs() < 1e-10);
        }
        let c0 = SpaceCurve::from_preset(CurvePreset::PaperC0, None, 512).unwrap();
        assert_eq!(c0.domain(), (0.1, 0.9));
        assert!((c0.length() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn circle_of_radius_two_by_angle_has_length_two() {
        let c = SpaceCurve::from_preset(CurvePreset::CircleArc { radius: 2.0 }, Some((0.0, 1.0)), 64).unwrap();
        assert!((c.length() - 2.0).abs() < 1e-12);
        // unit speed in the new parameter, and samples on the circle
        for &s in c.params() {
            let d = jet::values(&jet::deriv(&c.position_jet(s).unwrap()));
            assert!((d.norm() - 1.0).abs() < 1e-12);
            let p = c.position_at(s);
            assert!((p - Vector3::new(2.0 * (s / 2.0).cos(), 2.0 * (s / 2.0).sin(), 0.0)).norm() < 1e-12);
        }
        // higher derivatives of the reverted series: c'' = -x/4 on the radius-2 circle
        let j = c.position_jet(0.7).unwrap();
        let d2 = jet::values(&jet::deriv(&jet::deriv(&j)));
        assert!((d2 + c.position_at(0.7) / 4.0).norm() < 1e-12);
    }

    #[test]
    fn point_lists_are_resampled_by_arc_length() {
        // radius-2 arc sampled at uneven angles
        let params: Vec<f64> = (0..200).map(|i| (i as f64 / 199.0).powf(1.3)).collect();
        let points: Vec<Vector3<f64>> =
            params.iter().map(|&t| Vector3::new(2.0 * t.cos(), 2.0 * t.sin(), 0.0)).collect();
        let c = resample_arclength(&CurveInput::Points { params, points }, 128).unwrap();
        assert!((c.length() - 2.0).abs() < 1e-8);
        assert_eq!(c.mode(), DerivativeMode::FiniteDifference);
        let h = c.step();
        let chord = 4.0 * (h / 4.0).sin();
        for w in c.points().windows(2) {
            assert!(((w[1] - w[0]).norm() - chord).abs() < 1e-9);
        }
    }

    #[test]
    fn reverse_is_an_involution() {
        let c = SpaceCurve::from_preset(CurvePreset::PaperC0, None, 64).unwrap();
        let r = c.reverse();
        assert!((r.points()[0] - c.points()[63]).norm() == 0.0);
        let rr = r.reverse();
        for (p, q) in rr.points().iter().zip(c.points()) {
            assert!((p - q).norm() < 1e-12);
        }
        // the analytic source follows the reversal
        let s = 0.37;
        assert!((r.position_at(s) - c.position_at(1.0 - s)).norm() < 1e-15);
        let arc = SpaceCurve::from_preset(CurvePreset::CircleArc { radius: 1.0 }, None, 32).unwrap();
        assert!((arc.reverse().position_at(0.2) - arc.position_at(-0.2)).norm() < 1e-15);
        assert_eq!(arc.domain(), (-FRAC_PI_6, FRAC_PI_6));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(SpaceCurve::from_preset(CurvePreset::PaperC0, None, 8), Err(Error::TooFewSamples { .. })));
        let params: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let points = vec![Vector3::new(1.0, 2.0, 3.0); 20];
        assert!(matches!(
            resample_arclength(&CurveInput::Points { params, points }, 32),
            Err(Error::NonRegularCurve { .. })
        ));
        assert!(CurvePreset::CircleArc { radius: 0.0 }.position(Jet::variable(0.0))[0].value() == 0.0);
        assert!(matches!(
            AnalyticCurve::new(CurvePreset::CircleArc { radius: 0.0 }, (0.0, 1.0)),
            Err(Error::NonRegularCurve { .. })
        ));
    }

    mod properties {
        use super::*;
        use crate::curve::frenet_apparatus;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn reversal_is_an_involution(a in -2.0f64..1.0, len in 0.2f64..2.0, n in 16usize..200) {
                let c = SpaceCurve::from_preset(CurvePreset::PaperC0, Some((a, a + len)), n).unwrap();
                let r = c.reverse();
                prop_assert_eq!(r.domain(), c.domain());
                let rr = r.reverse();
                for i in 0..n {
                    prop_assert!((rr.params()[i] - c.params()[i]).abs() < 1e-12);
                    prop_assert!((rr.points()[i] - c.points()[i]).norm() < 1e-12);
                    prop_assert!((r.points()[i] - c.points()[n - 1 - i]).norm() < 1e-12);
                }
                let (f, g) = (frenet_apparatus(&c).unwrap(), frenet_apparatus(&r).unwrap());
                for i in 0..n {
                    let j = n - 1 - i;
                    prop_assert!((g.curvature[i] - f.curvature[j]).abs() < 1e-12);
                    prop_assert!((g.torsion[i] - f.torsion[j]).abs() < 1e-12);
                    prop_assert!((g.tangent[i] + f.tangent[j]).norm() < 1e-12);
                    prop_assert!((g.normal[i] - f.normal[j]).norm() < 1e-12);
                    prop_assert!((g.binormal[i] + f.binormal[j]).norm() < 1e-12);
                }
            }
        }
    }
}
