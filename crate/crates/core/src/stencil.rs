// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Finite-difference stencils on uniform grids.
//!
//! Weights come from Fornberg's recursion, so any derivative order and any
//! node placement share one code path. Interior points use the narrowest
//! centered stencil of fourth order (five points for first and second
//! derivatives); points too close to an end use a shifted window of
//! `order + 4` nodes, which is fourth order as well.

use std::ops::{Add, Mul};

/// Accuracy order of every stencil built here.
pub const ACCURACY: usize = 4;

/// Weights `w_k` such that `sum_k w_k f(nodes[k])` approximates the
/// `order`-th derivative of `f` at `z`.
pub fn fornberg_weights(z: f64, nodes: &[f64], order: usize) -> Vec<f64> {
    let n = nodes.len();
    assert!(n > order, "need more nodes than the derivative order");
    let mut c = vec![vec![0.0; order + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - z;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[order]).collect()
}

fn central_width(order: usize) -> usize {
    2 * order.div_ceil(2) + ACCURACY - 1
}

fn window(i: usize, width: usize, len: usize) -> usize {
    (i.saturating_sub(width / 2)).min(len - width)
}

/// Derivative of uniformly sampled values with spacing `h`.
pub fn differentiate<T>(values: &[T], h: f64, order: usize) -> Vec<T>
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    let len = values.len();
    let central = central_width(order);
    let edge = order + ACCURACY;
    assert!(len >= edge, "too few samples for a fourth-order stencil");
    let scale = h.powi(-(order as i32));
    let half = central / 2;
    let interior: Vec<f64> = {
        let nodes: Vec<f64> = (0..central).map(|k| k as f64 - half as f64).collect();
        fornberg_weights(0.0, &nodes, order)
    };
    (0..len)
        .map(|i| {
            let boundary;
            let (start, weights): (usize, &[f64]) = if i >= half && i + half < len {
                (i - half, &interior)
            } else {
                let start = window(i, edge, len);
                let nodes: Vec<f64> = (0..edge).map(|k| (start + k) as f64 - i as f64).collect();
                boundary = fornberg_weights(0.0, &nodes, order);
                (start, &boundary)
            };
            let mut acc = values[start] * (weights[0] * scale);
            for (k, w) in weights.iter().enumerate().skip(1) {
                acc = acc + values[start + k] * (w * scale);
            }
            acc
        })
        .collect()
}

/// Local Lagrange interpolation of uniformly sampled values at `t`, using
/// `width` nodes around `t` (four nodes gives a cubic).
pub fn interpolate<T>(values: &[T], start: f64, h: f64, t: f64, width: usize) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    let len = values.len();
    let width = width.min(len);
    let x = (t - start) / h;
    let nearest = x.round();
    if (x - nearest).abs() < 1e-12 && nearest >= 0.0 && (nearest as usize) < len {
        return values[nearest as usize];
    }
    let base = x.floor().max(0.0) as usize;
    let first = (base + 1).saturating_sub(width / 2).min(len - width);
    let nodes: Vec<f64> = (first..first + width).map(|k| k as f64).collect();
    let weights = fornberg_weights(x, &nodes, 0);
    let mut acc = values[first] * weights[0];
    for (k, w) in weights.iter().enumerate().skip(1) {
        acc = acc + values[first + k] * *w;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_central_weights() {
        let w = fornberg_weights(0.0, &[-2.0, -1.0, 0.0, 1.0, 2.0], 1);
        let expected = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
        for (a, b) in w.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
        let w = fornberg_weights(0.0, &[-2.0, -1.0, 0.0, 1.0, 2.0], 2);
        let expected = [-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0];
        for (a, b) in w.iter().zip(expected) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn exact_on_quartics_including_endpoints() {
        let h = 0.1;
        let xs: Vec<f64> = (0..12).map(|i| i as f64 * h).collect();
        let f: Vec<f64> = xs.iter().map(|x| 1.0 + x - 2.0 * x * x + 0.5 * x.powi(3) + x.powi(4)).collect();
        let d1 = differentiate(&f, h, 1);
        let d3 = differentiate(&f, h, 3);
        for (i, x) in xs.iter().enumerate() {
            let exact1 = 1.0 - 4.0 * x + 1.5 * x * x + 4.0 * x.powi(3);
            let exact3 = 3.0 + 24.0 * x;
            assert!((d1[i] - exact1).abs() < 1e-11, "d1 at {i}");
            assert!((d3[i] - exact3).abs() < 1e-7, "d3 at {i}");
        }
    }

    #[test]
    fn fourth_order_convergence_of_first_derivative() {
        let err = |n: usize| {
            let h = 1.0 / (n - 1) as f64;
            let f: Vec<f64> = (0..n).map(|i| (3.0 * i as f64 * h).sin()).collect();
            differentiate(&f, h, 1)
                .iter()
                .enumerate()
                .map(|(i, d)| (d - 3.0 * (3.0 * i as f64 * h).cos()).abs())
                .fold(0.0, f64::max)
        };
        let ratio = err(33) / err(65);
        assert!(ratio > 14.0, "observed ratio {ratio}");
    }

    #[test]
    fn cubic_interpolation_is_exact_on_cubics() {
        let h = 0.25;
        let f: Vec<f64> = (0..9).map(|i| (i as f64 * h).powi(3) - i as f64 * h).collect();
        for t in [0.01, 0.3, 1.13, 1.9, 1.99] {
            let v = interpolate(&f, 0.0, h, t, 4);
            assert!((v - (t * t * t - t)).abs() < 1e-13, "t = {t}");
        }
        assert_eq!(interpolate(&f, 0.0, h, 0.5, 4), f[2]);
    }
}
