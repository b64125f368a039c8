// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Number of Gauss–Legendre nodes used for arc-length integrals.
pub const GAUSS_NODES: usize = 16;

/// `(weight, node)` pairs on [-1, 1].
pub fn gauss_legendre() -> &'static [(f64, f64)] {
    static TABLE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| legendre_rule(GAUSS_NODES))
}

fn legendre_rule(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        rule.push((2.0 / ((1.0 - x * x) * dp * dp), x));
    }
    rule.sort_by(|a, b| a.1.total_cmp(&b.1));
    rule
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integral of `f` over `[lo, hi]`.
pub fn integrate(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    gauss_legendre().iter().map(|(w, x)| w * f(mid + half * x)).sum::<f64>() * half
}
