// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated Taylor series ("jets") for exact derivatives of closed-form
//! curves and angle profiles.
//!
//! A [`Jet`] stores the normalized Taylor coefficients `f(x0), f'(x0),
//! f''(x0)/2!, ...` of a function around a point. Arithmetic and the
//! elementary functions propagate all coefficients, so evaluating a
//! closed-form expression on [`Jet::variable`] yields its derivatives up to
//! order `JET_LEN - 1` to machine precision.
//!
//! Differentiating a jet shifts its coefficients down by one; the vacated top
//! coefficient is set to NaN so that any quantity depending on an order that
//! is no longer known shows up as NaN instead of a silently wrong number.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of Taylor coefficients carried by a [`Jet`].
pub const JET_LEN: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    coeffs: [f64; JET_LEN],
}

impl Jet {
    pub const fn constant(value: f64) -> Self {
        let mut coeffs = [0.0; JET_LEN];
        coeffs[0] = value;
        Jet { coeffs }
    }

    /// The independent variable `x0 + h`.
    pub const fn variable(x0: f64) -> Self {
        let mut coeffs = [0.0; JET_LEN];
        coeffs[0] = x0;
        coeffs[1] = 1.0;
        Jet { coeffs }
    }

    /// `x0 + slope * h`.
    pub const fn linear(x0: f64, slope: f64) -> Self {
        let mut coeffs = [0.0; JET_LEN];
        coeffs[0] = x0;
        coeffs[1] = slope;
        Jet { coeffs }
    }

    pub const fn from_coeffs(coeffs: [f64; JET_LEN]) -> Self {
        Jet { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; JET_LEN] {
        &self.coeffs
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// The `k`-th derivative at the expansion point.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut factorial = 1.0;
        for i in 2..=k {
            factorial *= i as f64;
        }
        self.coeffs[k] * factorial
    }

    /// Jet of the derivative function.
    pub fn deriv(&self) -> Jet {
        let mut coeffs = [f64::NAN; JET_LEN];
        for k in 0..JET_LEN - 1 {
            coeffs[k] = (k + 1) as f64 * self.coeffs[k + 1];
        }
        Jet { coeffs }
    }

    /// Jet of the antiderivative taking `value` at the expansion point.
    fn integrate(&self, value: f64) -> Jet {
        let mut coeffs = [0.0; JET_LEN];
        coeffs[0] = value;
        for k in 1..JET_LEN {
            coeffs[k] = self.coeffs[k - 1] / k as f64;
        }
        Jet { coeffs }
    }

    pub fn recip(self) -> Jet {
        Jet::constant(1.0) / self
    }

    pub fn sqr(self) -> Jet {
        self * self
    }

    pub fn sqrt(self) -> Jet {
        let a = &self.coeffs;
        let mut r = [0.0; JET_LEN];
        r[0] = a[0].sqrt();
        for k in 1..JET_LEN {
            let mut acc = a[k];
            for j in 1..k {
                acc -= r[j] * r[k - j];
            }
            r[k] = acc / (2.0 * r[0]);
        }
        Jet { coeffs: r }
    }

    pub fn exp(self) -> Jet {
        let a = &self.coeffs;
        let mut e = [0.0; JET_LEN];
        e[0] = a[0].exp();
        for k in 1..JET_LEN {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * a[j] * e[k - j];
            }
            e[k] = acc / k as f64;
        }
        Jet { coeffs: e }
    }

    pub fn ln(self) -> Jet {
        let a = &self.coeffs;
        let mut l = [0.0; JET_LEN];
        l[0] = a[0].ln();
        for k in 1..JET_LEN {
            let mut acc = 0.0;
            for j in 1..k {
                acc += j as f64 * l[j] * a[k - j];
            }
            l[k] = (a[k] - acc / k as f64) / a[0];
        }
        Jet { coeffs: l }
    }

    pub fn sin_cos(self) -> (Jet, Jet) {
        let a = &self.coeffs;
        let mut s = [0.0; JET_LEN];
        let mut c = [0.0; JET_LEN];
        s[0] = a[0].sin();
        c[0] = a[0].cos();
        for k in 1..JET_LEN {
            let mut acc_s = 0.0;
            let mut acc_c = 0.0;
            for j in 1..=k {
                acc_s += j as f64 * a[j] * c[k - j];
                acc_c += j as f64 * a[j] * s[k - j];
            }
            s[k] = acc_s / k as f64;
            c[k] = -acc_c / k as f64;
        }
        (Jet { coeffs: s }, Jet { coeffs: c })
    }

    pub fn sin(self) -> Jet {
        self.sin_cos().0
    }

    pub fn cos(self) -> Jet {
        self.sin_cos().1
    }

    pub fn tan(self) -> Jet {
        let (s, c) = self.sin_cos();
        s / c
    }

    pub fn atan(self) -> Jet {
        let slope = self.deriv() / (Jet::constant(1.0) + self * self);
        slope.integrate(self.value().atan())
    }

    pub fn asin(self) -> Jet {
        let slope = self.deriv() / (Jet::constant(1.0) - self * self).sqrt();
        slope.integrate(self.value().asin())
    }

    pub fn acos(self) -> Jet {
        let slope = -self.deriv() / (Jet::constant(1.0) - self * self).sqrt();
        slope.integrate(self.value().acos())
    }

    /// Two-argument arctangent `atan2(self, x)`, continuous along the jet.
    pub fn atan2(self, x: Jet) -> Jet {
        let y = self;
        let slope = (x * y.deriv() - y * x.deriv()) / (x * x + y * y);
        slope.integrate(y.value().atan2(x.value()))
    }

    /// `self^p` for a constant exponent.
    pub fn powf(self, p: f64) -> Jet {
        let a = &self.coeffs;
        let mut y = [0.0; JET_LEN];
        y[0] = if p.fract() == 0.0 && p.abs() < i32::MAX as f64 { a[0].powi(p as i32) } else { a[0].powf(p) };
        for k in 1..JET_LEN {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += (p * j as f64 - (k - j) as f64) * a[j] * y[k - j];
            }
            y[k] = acc / (k as f64 * a[0]);
        }
        Jet { coeffs: y }
    }

    /// Evaluates the polynomial with these coefficients at a jet `h` whose
    /// constant term is zero, i.e. the composition `self(x0 + h)`.
    pub fn compose(&self, h: Jet) -> Jet {
        debug_assert!(h.value() == 0.0);
        // Sum a_k h^k term by term so an unknown (NaN) coefficient only
        // reaches the orders it actually affects.
        let mut out = [0.0; JET_LEN];
        out[0] = self.coeffs[0];
        let mut power = h;
        for k in 1..JET_LEN {
            for m in k..JET_LEN {
                out[m] += self.coeffs[k] * power.coeffs[m];
            }
            power = power * h;
        }
        Jet { coeffs: out }
    }
}

impl From<f64> for Jet {
    fn from(value: f64) -> Self {
        Jet::constant(value)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c += r;
        }
        Jet { coeffs }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c -= r;
        }
        Jet { coeffs }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        let mut coeffs = self.coeffs;
        for c in coeffs.iter_mut() {
            *c = -*c;
        }
        Jet { coeffs }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut coeffs = [0.0; JET_LEN];
        for k in 0..JET_LEN {
            let mut acc = 0.0;
            for j in 0..=k {
                acc += self.coeffs[j] * rhs.coeffs[k - j];
            }
            coeffs[k] = acc;
        }
        Jet { coeffs }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        let mut q = [0.0; JET_LEN];
        for k in 0..JET_LEN {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= rhs.coeffs[j] * q[k - j];
            }
            q[k] = acc / rhs.coeffs[0];
        }
        Jet { coeffs: q }
    }
}

macro_rules! scalar_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<f64> for Jet {
            type Output = Jet;
            fn $method(self, rhs: f64) -> Jet {
                $trait::$method(self, Jet::constant(rhs))
            }
        }
        impl $trait<Jet> for f64 {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                $trait::$method(Jet::constant(self), rhs)
            }
        }
    )*};
}

scalar_ops!(Add add, Sub sub, Mul mul, Div div);

/// A 3-vector of jets.
pub type JetVec3 = [Jet; 3];

pub fn dot(a: &JetVec3, b: &JetVec3) -> Jet {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &JetVec3, b: &JetVec3) -> JetVec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub fn scale(s: Jet, a: &JetVec3) -> JetVec3 {
    [s * a[0], s * a[1], s * a[2]]
}

pub fn add(a: &JetVec3, b: &JetVec3) -> JetVec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn deriv(a: &JetVec3) -> JetVec3 {
    [a[0].deriv(), a[1].deriv(), a[2].deriv()]
}

pub fn norm(a: &JetVec3) -> Jet {
    dot(a, a).sqrt()
}

pub fn values(a: &JetVec3) -> nalgebra::Vector3<f64> {
    nalgebra::Vector3::new(a[0].value(), a[1].value(), a[2].value())
}
