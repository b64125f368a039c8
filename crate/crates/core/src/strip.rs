// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Developable strips `f(t, v) = c(t) + v xi(t)` along a crease.
//!
//! A strip is fixed by its crease, a crease pattern with curvature `mu`, and
//! a variant choosing the orientation of the crease and the sign of the
//! first angular function:
//!
//! | variant       | curve              | first angular function            |
//! |---------------|--------------------|-----------------------------------|
//! | `Base`        | `c(t)`             | `alpha = arccos(mu / kappa)`      |
//! | `Dual`        | `c(t)`             | `-alpha`                          |
//! | `Inverse`     | `c(a + b - t)`     | `alpha* = arccos(mu / kappa#)`    |
//! | `InverseDual` | `c(a + b - t)`     | `-alpha*`                         |
//!
//! With a signed first angular function `alpha`, the second one is the angle
//! `beta` in `(0, pi)` with `cot beta = (alpha' + tau) / (kappa sin alpha)`.

use std::fmt;
use std::ops::{Add, Mul};

use nalgebra::Vector3;

use crate::curve::{frenet_apparatus, FrameJet, PlanePattern, SpaceCurve};
use crate::error::{Error, Result};
use crate::jet::{self, Jet, JetVec3};
use crate::stencil;

/// Default strip half-width.
pub const DEFAULT_EPS: f64 = 0.2;

/// Relative tolerance between the two mean curvature expressions.
pub const MEAN_CURVATURE_TOL: f64 = 1e-9;

/// Slack allowed when checking that `t` lies in the domain.
const DOMAIN_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Base,
    Dual,
    Inverse,
    InverseDual,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Base, Variant::Dual, Variant::Inverse, Variant::InverseDual];

    /// The variant with the opposite first angular function on the same curve.
    pub fn dual(self) -> Variant {
        match self {
            Variant::Base => Variant::Dual,
            Variant::Dual => Variant::Base,
            Variant::Inverse => Variant::InverseDual,
            Variant::InverseDual => Variant::Inverse,
        }
    }

    /// Whether the strip runs along the reversed crease.
    pub fn is_inverse(self) -> bool {
        matches!(self, Variant::Inverse | Variant::InverseDual)
    }

    /// Whether the first angular function is negative.
    pub fn is_dual(self) -> bool {
        matches!(self, Variant::Dual | Variant::InverseDual)
    }

    fn angle_sign(self) -> f64 {
        if self.is_dual() {
            -1.0
        } else {
            1.0
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Base => "base",
            Variant::Dual => "dual",
            Variant::Inverse => "inv",
            Variant::InverseDual => "invdual",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything a strip knows at one parameter along its crease.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripPoint {
    pub t: f64,
    pub position: Vector3<f64>,
    pub tangent: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub binormal: Vector3<f64>,
    pub curvature: f64,
    pub torsion: f64,
    /// Signed first angular function.
    pub alpha: f64,
    pub alpha_prime: f64,
    pub beta: f64,
    pub beta_prime: f64,
    pub ruling: Vector3<f64>,
    pub ruling_prime: Vector3<f64>,
    /// Unit surface normal `nu = -sin(alpha) n + cos(alpha) b`.
    pub surface_normal: Vector3<f64>,
    pub surface_normal_prime: Vector3<f64>,
    /// Unit co-normal `N = cos(alpha) n + sin(alpha) b`.
    pub conormal: Vector3<f64>,
    /// `c'' . N`.
    pub geodesic_curvature: f64,
}

macro_rules! linear_fields {
    ($($field:ident),*) => {
        impl Add for StripPoint {
            type Output = StripPoint;
            fn add(self, o: StripPoint) -> StripPoint {
                StripPoint { $($field: self.$field + o.$field),* }
            }
        }
        impl Mul<f64> for StripPoint {
            type Output = StripPoint;
            fn mul(self, s: f64) -> StripPoint {
                StripPoint { $($field: self.$field * s),* }
            }
        }
    };
}

linear_fields!(
    t,
    position,
    tangent,
    normal,
    binormal,
    curvature,
    torsion,
    alpha,
    alpha_prime,
    beta,
    beta_prime,
    ruling,
    ruling_prime,
    surface_normal,
    surface_normal_prime,
    conormal,
    geodesic_curvature
);

impl StripPoint {
    /// `f(t, v)`.
    pub fn surface(&self, v: f64) -> Vector3<f64> {
        self.position + self.ruling * v
    }

    /// `|det(c', xi, xi')| / (|xi'| + kappa)`.
    pub fn developability_residual(&self) -> f64 {
        self.tangent.dot(&self.ruling.cross(&self.ruling_prime)).abs() / (self.ruling_prime.norm() + self.curvature)
    }

    /// `-kappa sin(alpha) / (2 sin^2 beta)`.
    pub fn mean_curvature(&self) -> f64 {
        -self.curvature * self.alpha.sin() / (2.0 * self.beta.sin().powi(2))
    }

    /// `-(kappa^2 sin^2 alpha + (alpha' + tau)^2) / (2 kappa sin alpha)`.
    pub fn mean_curvature_alt(&self) -> f64 {
        let (k, s) = (self.curvature, self.alpha.sin());
        -(k * k * s * s + (self.alpha_prime + self.torsion).powi(2)) / (2.0 * k * s)
    }
}

/// The angular functions per sample.
#[derive(Clone, Debug, PartialEq)]
pub struct AngularProfile {
    pub alpha: Vec<f64>,
    pub alpha_prime: Vec<f64>,
    pub beta: Vec<f64>,
}

/// Profiles along the crease.
#[derive(Clone, Debug, PartialEq)]
pub struct StripProfiles {
    pub params: Vec<f64>,
    pub mean_curvature: Vec<f64>,
    pub geodesic_curvature: Vec<f64>,
    pub first_form: Vec<FirstForm>,
    pub second_form: Vec<SecondForm>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FirstForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecondForm {
    pub l: f64,
    pub m: f64,
    pub n: f64,
}

impl SecondForm {
    /// `LN - M^2`.
    pub fn determinant(&self) -> f64 {
        self.l * self.n - self.m * self.m
    }
}

/// `alpha = arccos(mu / kappa)` per sample, enforcing `0 < mu < kappa`.
pub fn first_angular(params: &[f64], mu: &[f64], kappa: &[f64]) -> Result<Vec<f64>> {
    params
        .iter()
        .zip(mu.iter().zip(kappa))
        .map(|(&t, (&mu, &kappa))| {
            if !(mu > 0.0) {
                Err(Error::PatternNonPositive { t, mu })
            } else if !(mu < kappa) {
                Err(Error::PatternTooCurved { t, mu, kappa })
            } else {
                Ok((mu / kappa).acos())
            }
        })
        .collect()
}

/// The angle in `(0, pi)` with `cot beta = (alpha' + tau) / (kappa sin alpha)`
/// for a signed, nonzero `alpha`.
pub fn second_angular(alpha: f64, alpha_prime: f64, kappa: f64, tau: f64) -> f64 {
    let s = alpha.signum();
    (kappa * alpha.sin() * s).atan2((alpha_prime + tau) * s)
}

/// `xi = cos(beta) e + sin(beta) (cos(alpha) n + sin(alpha) b)`.
pub fn ruling_field(
    alpha: f64,
    beta: f64,
    tangent: &Vector3<f64>,
    normal: &Vector3<f64>,
    binormal: &Vector3<f64>,
) -> Vector3<f64> {
    let conormal = normal * alpha.cos() + binormal * alpha.sin();
    tangent * beta.cos() + conormal * beta.sin()
}

/// A developable strip of half-width `eps`.
#[derive(Clone, Debug)]
pub struct DevelopableStrip {
    variant: Variant,
    /// The crease as given, before any reversal.
    origin: SpaceCurve,
    /// The strip's own crease curve (reversed for inverse variants).
    curve: SpaceCurve,
    pattern: PlanePattern,
    eps: f64,
    samples: Vec<StripPoint>,
    analytic: bool,
}

/// Builds the strip of `variant` along `crease` with pattern `pattern`.
pub fn make_variant(
    crease: &SpaceCurve,
    pattern: &PlanePattern,
    variant: Variant,
    eps: f64,
) -> Result<DevelopableStrip> {
    DevelopableStrip::new(crease, pattern, variant, eps)
}

impl DevelopableStrip {
    pub fn new(crease: &SpaceCurve, pattern: &PlanePattern, variant: Variant, eps: f64) -> Result<Self> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::InvalidScenario(format!("strip half-width must be positive, got {eps}")));
        }
        pattern.check_domain(crease.domain())?;
        let curve = if variant.is_inverse() { crease.reverse() } else { crease.clone() };
        let analytic = curve.analytic().is_some() && pattern.is_analytic();
        let mut strip = DevelopableStrip {
            variant,
            origin: crease.clone(),
            curve,
            pattern: pattern.clone(),
            eps,
            samples: Vec::new(),
            analytic,
        };
        strip.samples = if analytic { strip.analytic_samples()? } else { strip.sampled_samples()? };
        Ok(strip)
    }

    fn analytic_samples(&self) -> Result<Vec<StripPoint>> {
        self.curve.params().iter().map(|&t| self.analytic_point(t)).collect()
    }

    fn analytic_point(&self, t: f64) -> Result<StripPoint> {
        let curve = self.curve.analytic().expect("analytic strips have a closed-form crease");
        let frame = FrameJet::new(curve.position_jet(t));
        let mu = self.pattern.curvature_jet(Jet::variable(t)).expect("analytic strips have a closed-form pattern");
        let kappa = frame.curvature;
        let (mu0, kappa0) = (mu.value(), kappa.value());
        first_angular(&[t], &[mu0], &[kappa0])?;
        let s = self.variant.angle_sign();
        let alpha = (mu / kappa).acos() * s;
        let alpha_prime = alpha.deriv();
        let beta = (kappa * alpha.sin() * s).atan2((alpha_prime + frame.torsion) * s);
        let (sin_a, cos_a) = alpha.sin_cos();
        let (sin_b, cos_b) = beta.sin_cos();
        let conormal = jet::add(&jet::scale(cos_a, &frame.normal), &jet::scale(sin_a, &frame.binormal));
        let surface_normal = jet::add(&jet::scale(-sin_a, &frame.normal), &jet::scale(cos_a, &frame.binormal));
        let ruling: JetVec3 = jet::add(&jet::scale(cos_b, &frame.tangent), &jet::scale(sin_b, &conormal));
        Ok(StripPoint {
            t,
            position: jet::values(&frame.position),
            tangent: jet::values(&frame.tangent),
            normal: jet::values(&frame.normal),
            binormal: jet::values(&frame.binormal),
            curvature: kappa0,
            torsion: frame.torsion.value(),
            alpha: alpha.value(),
            alpha_prime: alpha_prime.value(),
            beta: beta.value(),
            beta_prime: beta.derivative(1),
            ruling: jet::values(&ruling),
            ruling_prime: jet::values(&jet::deriv(&ruling)),
            surface_normal: jet::values(&surface_normal),
            surface_normal_prime: jet::values(&jet::deriv(&surface_normal)),
            conormal: jet::values(&conormal),
            geodesic_curvature: jet::dot(&frame.acceleration, &conormal).value(),
        })
    }

    fn sampled_samples(&self) -> Result<Vec<StripPoint>> {
        let frenet = frenet_apparatus(&self.curve)?;
        let params = self.curve.params();
        let h = self.curve.step();
        let mu: Vec<f64> = params.iter().map(|&t| self.pattern.curvature_at(t)).collect();
        let s = self.variant.angle_sign();
        let alpha: Vec<f64> = first_angular(params, &mu, &frenet.curvature)?.into_iter().map(|a| a * s).collect();
        let alpha_prime = stencil::differentiate(&alpha, h, 1);
        let beta: Vec<f64> = (0..params.len())
            .map(|i| second_angular(alpha[i], alpha_prime[i], frenet.curvature[i], frenet.torsion[i]))
            .collect();
        let beta_prime = stencil::differentiate(&beta, h, 1);
        let ruling: Vec<Vector3<f64>> = (0..params.len())
            .map(|i| ruling_field(alpha[i], beta[i], &frenet.tangent[i], &frenet.normal[i], &frenet.binormal[i]))
            .collect();
        let ruling_prime = stencil::differentiate(&ruling, h, 1);
        let surface_normal: Vec<Vector3<f64>> = (0..params.len())
            .map(|i| frenet.binormal[i] * alpha[i].cos() - frenet.normal[i] * alpha[i].sin())
            .collect();
        let surface_normal_prime = stencil::differentiate(&surface_normal, h, 1);
        let acceleration = stencil::differentiate(self.curve.points(), h, 2);
        Ok((0..params.len())
            .map(|i| {
                let conormal = frenet.normal[i] * alpha[i].cos() + frenet.binormal[i] * alpha[i].sin();
                StripPoint {
                    t: params[i],
                    position: self.curve.points()[i],
                    tangent: frenet.tangent[i],
                    normal: frenet.normal[i],
                    binormal: frenet.binormal[i],
                    curvature: frenet.curvature[i],
                    torsion: frenet.torsion[i],
                    alpha: alpha[i],
                    alpha_prime: alpha_prime[i],
                    beta: beta[i],
                    beta_prime: beta_prime[i],
                    ruling: ruling[i],
                    ruling_prime: ruling_prime[i],
                    surface_normal: surface_normal[i],
                    surface_normal_prime: surface_normal_prime[i],
                    conormal,
                    geodesic_curvature: acceleration[i].dot(&conormal),
                }
            })
            .collect())
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The crease as passed in, before any reversal.
    pub fn crease(&self) -> &SpaceCurve {
        &self.origin
    }

    /// The curve the strip is ruled along (`c` or `c#`).
    pub fn curve(&self) -> &SpaceCurve {
        &self.curve
    }

    pub fn pattern(&self) -> &PlanePattern {
        &self.pattern
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Whether local quantities come from closed forms.
    pub fn is_analytic(&self) -> bool {
        self.analytic
    }

    pub fn samples(&self) -> &[StripPoint] {
        &self.samples
    }

    pub fn params(&self) -> &[f64] {
        self.curve.params()
    }

    pub fn domain(&self) -> (f64, f64) {
        self.curve.domain()
    }

    /// The same construction with the opposite first angular function.
    pub fn dual(&self) -> Result<DevelopableStrip> {
        DevelopableStrip::new(&self.origin, &self.pattern, self.variant.dual(), self.eps)
    }

    /// Local quantities at any `t` in the domain; exact for closed-form
    /// input, interpolated from the samples otherwise.
    pub fn local(&self, t: f64) -> Result<StripPoint> {
        let (a, b) = self.domain();
        let slack = DOMAIN_SLACK * (b - a);
        if !(t >= a - slack && t <= b + slack) {
            return Err(Error::OutOfDomain { t, v: 0.0 });
        }
        let t = t.clamp(a, b);
        if self.analytic {
            return self.analytic_point(t);
        }
        let mut p = stencil::interpolate(&self.samples, a, self.curve.step(), t, 6);
        p.ruling = p.ruling.normalize();
        Ok(p)
    }

    /// `f(t, v)` for `t` in the domain and `|v| <= eps`.
    pub fn surface(&self, t: f64, v: f64) -> Result<Vector3<f64>> {
        if !(v.abs() <= self.eps) {
            return Err(Error::OutOfDomain { t, v });
        }
        self.local(t).map(|p| p.surface(v)).map_err(|_| Error::OutOfDomain { t, v })
    }

    pub fn angular(&self) -> AngularProfile {
        AngularProfile {
            alpha: self.samples.iter().map(|p| p.alpha).collect(),
            alpha_prime: self.samples.iter().map(|p| p.alpha_prime).collect(),
            beta: self.samples.iter().map(|p| p.beta).collect(),
        }
    }

    pub fn ruling(&self) -> Vec<Vector3<f64>> {
        self.samples.iter().map(|p| p.ruling).collect()
    }

    /// Largest normalized developability residual over the samples.
    pub fn developability_residual(&self) -> f64 {
        self.samples.iter().map(StripPoint::developability_residual).fold(0.0, f64::max)
    }

    /// The first fundamental form at `(t, v)` from the surface partials
    /// `f_t = c' + v xi'` and `f_v = xi`.
    pub fn first_form(&self, t: f64, v: f64) -> Result<FirstForm> {
        if !(v.abs() <= self.eps) {
            return Err(Error::OutOfDomain { t, v });
        }
        let p = self.local(t)?;
        let ft = p.tangent + p.ruling_prime * v;
        Ok(FirstForm { e: ft.norm_squared(), f: ft.dot(&p.ruling), g: p.ruling.norm_squared() })
    }

    /// The first fundamental form at `(t, v)` in closed form, with the
    /// geodesic curvature in the `E` coefficient.
    pub fn first_form_closed(&self, t: f64, v: f64) -> Result<FirstForm> {
        if !(v.abs() <= self.eps) {
            return Err(Error::OutOfDomain { t, v });
        }
        let p = self.local(t)?;
        let (sb, cb) = p.beta.sin_cos();
        let e = (sb - v * (p.beta_prime + p.geodesic_curvature)).powi(2) + cb * cb;
        Ok(FirstForm { e, f: cb, g: 1.0 })
    }

    /// The second fundamental form along the crease:
    /// `L = -f_t . nu'`, `M = f_tv . nu`, `N = f_vv . nu`.
    pub fn second_form(&self, t: f64) -> Result<SecondForm> {
        let p = self.local(t)?;
        Ok(SecondForm {
            l: -p.tangent.dot(&p.surface_normal_prime),
            m: p.ruling_prime.dot(&p.surface_normal),
            // f_vv vanishes identically on a ruled surface
            n: Vector3::zeros().dot(&p.surface_normal),
        })
    }

    /// Mean curvature along the crease, cross-checked between its two
    /// closed forms.
    pub fn mean_curvature(&self) -> Result<Vec<f64>> {
        self.samples
            .iter()
            .map(|p| {
                let (h1, h2) = (p.mean_curvature(), p.mean_curvature_alt());
                let relative = (h1 - h2).abs() / h1.abs().max(h2.abs());
                if !(relative <= MEAN_CURVATURE_TOL) {
                    return Err(Error::FormulaMismatch { t: p.t, relative });
                }
                Ok(h1)
            })
            .collect()
    }

    pub fn profiles(&self) -> Result<StripProfiles> {
        let mean_curvature = self.mean_curvature()?;
        let mut first_form = Vec::with_capacity(self.samples.len());
        let mut second_form = Vec::with_capacity(self.samples.len());
        for p in &self.samples {
            first_form.push(FirstForm { e: 1.0, f: p.tangent.dot(&p.ruling), g: p.ruling.norm_squared() });
            second_form.push(SecondForm {
                l: -p.tangent.dot(&p.surface_normal_prime),
                m: p.ruling_prime.dot(&p.surface_normal),
                n: 0.0,
            });
        }
        Ok(StripProfiles {
            params: self.params().to_vec(),
            mean_curvature,
            geodesic_curvature: self.samples.iter().map(|p| p.geodesic_curvature).collect(),
            first_form,
            second_form,
        })
    }
}

/// Mean curvature of a strip along its crease.
pub fn mean_curvature_profile(strip: &DevelopableStrip) -> Result<Vec<f64>> {
    strip.mean_curvature()
}
