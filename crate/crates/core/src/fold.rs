// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Origami maps, the quadruple of curved foldings sharing a crease and a
//! crease pattern, and the tests that tell them apart.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::thread;

use nalgebra::Vector3;

use crate::curve::{
    crease_symmetries, detect_symmetry, frenet_apparatus, PlanePattern, SpaceCurve, SymmetryKind, SymmetryReport,
    SYMMETRY_TOL,
};
use crate::error::{Error, Result};
use crate::isometry::RigidMotion;
use crate::strip::{DevelopableStrip, StripPoint, Variant};

/// Default tolerance on relative mean curvature mismatch.
pub const PROFILE_TOL: f64 = 1e-6;

/// Largest image deviation accepted from a witness isometry.
pub const WITNESS_TOL: f64 = 1e-8;

/// Profile mismatches above `DISTINCT_FACTOR * tol` are decisive.
pub const DISTINCT_FACTOR: f64 = 10.0;

/// Number of `v` cells used when validating witnesses.
const WITNESS_V_CELLS: usize = 16;

/// Two strips glued along their common crease: `upper` for `v >= 0` and
/// `lower` for `v < 0`.
#[derive(Clone, Debug)]
pub struct OrigamiMap {
    upper: Arc<DevelopableStrip>,
    lower: Arc<DevelopableStrip>,
}

impl OrigamiMap {
    /// Glues a strip and its dual; fails unless they share the crease and
    /// have opposite first angular functions.
    pub fn new(upper: Arc<DevelopableStrip>, lower: Arc<DevelopableStrip>) -> Result<Self> {
        if lower.variant() != upper.variant().dual() {
            return Err(Error::InvalidScenario(format!(
                "an origami map glues a strip to its dual, got {} and {}",
                upper.variant(),
                lower.variant()
            )));
        }
        let mismatch = upper
            .samples()
            .iter()
            .zip(lower.samples())
            .map(|(a, b)| (a.position - b.position).norm())
            .fold(0.0, f64::max);
        if upper.samples().len() != lower.samples().len() || mismatch > 1e-12 {
            return Err(Error::InvalidScenario("the two halves of an origami map must share the crease".into()));
        }
        Ok(OrigamiMap { upper, lower })
    }

    /// `phi_f`: `f` for `v >= 0`, its dual for `v < 0`.
    pub fn phi(strip: &DevelopableStrip) -> Result<Self> {
        OrigamiMap::new(Arc::new(strip.clone()), Arc::new(strip.dual()?))
    }

    /// `psi_f`: the dual of `f` for `v >= 0`, `f` for `v < 0`.
    pub fn psi(strip: &DevelopableStrip) -> Result<Self> {
        OrigamiMap::new(Arc::new(strip.dual()?), Arc::new(strip.clone()))
    }

    pub fn upper(&self) -> &DevelopableStrip {
        &self.upper
    }

    pub fn lower(&self) -> &DevelopableStrip {
        &self.lower
    }

    pub fn eps(&self) -> f64 {
        self.upper.eps()
    }

    pub fn domain(&self) -> (f64, f64) {
        self.upper.domain()
    }

    /// Name of the map, after the strip used for `v >= 0`.
    pub fn label(&self) -> String {
        format!("phi_{}", self.upper.variant())
    }

    pub fn eval(&self, t: f64, v: f64) -> Result<Vector3<f64>> {
        if v >= 0.0 {
            self.upper.surface(t, v)
        } else {
            self.lower.surface(t, v)
        }
    }

    /// Image point at crease sample `k`.
    pub fn at_sample(&self, k: usize, v: f64) -> Vector3<f64> {
        if v >= 0.0 {
            self.upper.samples()[k].surface(v)
        } else {
            self.lower.samples()[k].surface(v)
        }
    }

    /// Structured sample of the image: `n_t` parameters along the crease
    /// times `n_v + 1` values of `v` from `-eps` to `eps`. Rows are indexed
    /// by `t`; `n_v` must be even so the crease is a grid line.
    pub fn grid(&self, n_t: usize, n_v: usize) -> Result<Grid> {
        if n_t < 2 || n_v < 2 || !n_v.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("need n_t >= 2 and even n_v >= 2, got {n_t} x {n_v}")));
        }
        let (a, b) = self.domain();
        let eps = self.eps();
        let ts = crate::curve::uniform_grid(a, b, n_t);
        let vs: Vec<f64> = (0..=n_v).map(|j| eps * (2.0 * j as f64 - n_v as f64) / n_v as f64).collect();
        let mut points = Vec::with_capacity(n_t * vs.len());
        for &t in &ts {
            let (up, low) = (self.upper.local(t)?, self.lower.local(t)?);
            points.extend(vs.iter().map(|&v| if v >= 0.0 { up.surface(v) } else { low.surface(v) }));
        }
        Ok(Grid { ts, vs, points })
    }
}

/// Sampled image of an origami map on a `t x v` grid.
#[derive(Clone, Debug)]
pub struct Grid {
    pub ts: Vec<f64>,
    pub vs: Vec<f64>,
    /// Row-major: `points[i * vs.len() + j]` is the image of `(ts[i], vs[j])`.
    pub points: Vec<Vector3<f64>>,
}

impl Grid {
    pub fn point(&self, i: usize, j: usize) -> Vector3<f64> {
        self.points[i * self.vs.len() + j]
    }
}

/// The four curved foldings `phi_f`, `phi_f~`, `phi_f*`, `phi_f~*` with a
/// common crease and crease pattern.
#[derive(Clone, Debug)]
pub struct FoldQuadruple {
    crease: SpaceCurve,
    pattern: PlanePattern,
    eps: f64,
    strips: [Arc<DevelopableStrip>; 4],
    maps: [OrigamiMap; 4],
}

impl FoldQuadruple {
    /// Builds all four strips (in parallel) and glues them into the four maps.
    pub fn build(crease: &SpaceCurve, pattern: &PlanePattern, eps: f64) -> Result<Self> {
        let built: Vec<Result<DevelopableStrip>> = thread::scope(|scope| {
            let handles: Vec<_> = Variant::ALL
                .iter()
                .map(|&v| scope.spawn(move || DevelopableStrip::new(crease, pattern, v, eps)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("strip construction panicked")).collect()
        });
        let mut strips = Vec::with_capacity(4);
        for s in built {
            strips.push(Arc::new(s?));
        }
        let strips: [Arc<DevelopableStrip>; 4] = strips.try_into().expect("four variants");
        let glue = |up: Variant, low: Variant| {
            OrigamiMap::new(Arc::clone(&strips[up as usize]), Arc::clone(&strips[low as usize]))
        };
        let maps = [
            glue(Variant::Base, Variant::Dual)?,
            glue(Variant::Dual, Variant::Base)?,
            glue(Variant::Inverse, Variant::InverseDual)?,
            glue(Variant::InverseDual, Variant::Inverse)?,
        ];
        Ok(FoldQuadruple { crease: crease.clone(), pattern: pattern.clone(), eps, strips, maps })
    }

    pub fn crease(&self) -> &SpaceCurve {
        &self.crease
    }

    pub fn pattern(&self) -> &PlanePattern {
        &self.pattern
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn strip(&self, variant: Variant) -> &DevelopableStrip {
        &self.strips[variant as usize]
    }

    /// `P1 .. P4` in order.
    pub fn maps(&self) -> &[OrigamiMap; 4] {
        &self.maps
    }

    /// `|H|` of each strip against the parameter of the original crease, so
    /// that every column refers to the same crease point in each row.
    pub fn mean_curvature_table(&self) -> Result<MeanCurvatureTable> {
        let mut columns: [Vec<f64>; 4] = Default::default();
        for v in Variant::ALL {
            let mut h: Vec<f64> = self.strip(v).mean_curvature()?.iter().map(|h| h.abs()).collect();
            if v.is_inverse() {
                h.reverse();
            }
            columns[v as usize] = h;
        }
        Ok(MeanCurvatureTable { params: self.crease.params().to_vec(), columns })
    }
}

/// Aligned `|H|` profiles, one column per variant.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanCurvatureTable {
    pub params: Vec<f64>,
    pub columns: [Vec<f64>; 4],
}

/// Outcome of comparing the four aligned `|H|` profiles.
#[derive(Clone, Debug, PartialEq)]
pub struct Separation {
    /// Variants from smallest to largest `|H|`, when one order holds at
    /// every sample.
    pub order: Option<[Variant; 4]>,
    /// Smallest gap between consecutive profiles (absolute).
    pub min_gap: f64,
    /// Smallest gap relative to the largest `|H|`.
    pub min_relative_gap: f64,
    /// Parameter where the smallest gap occurs.
    pub at: f64,
}

impl MeanCurvatureTable {
    pub fn column(&self, v: Variant) -> &[f64] {
        &self.columns[v as usize]
    }

    pub fn separation(&self) -> Separation {
        let scale = self.columns.iter().flatten().fold(0.0f64, |m, h| m.max(*h));
        let mut order: Option<[Variant; 4]> = None;
        let mut consistent = true;
        let (mut min_gap, mut at) = (f64::INFINITY, self.params[0]);
        for k in 0..self.params.len() {
            let mut row = Variant::ALL;
            row.sort_by(|a, b| self.columns[*a as usize][k].total_cmp(&self.columns[*b as usize][k]));
            for w in row.windows(2) {
                let gap = self.columns[w[1] as usize][k] - self.columns[w[0] as usize][k];
                if gap < min_gap {
                    min_gap = gap;
                    at = self.params[k];
                }
            }
            match order {
                None => order = Some(row),
                Some(o) if o != row => consistent = false,
                Some(_) => {}
            }
        }
        Separation { order: if consistent { order } else { None }, min_gap, min_relative_gap: min_gap / scale, at }
    }

    /// Whether `|H_a| < |H_b|` at every sample.
    pub fn below(&self, a: Variant, b: Variant) -> bool {
        self.column(a).iter().zip(self.column(b)).all(|(x, y)| x < y)
    }
}

/// Parameters of the overlap proxy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OverlapOptions {
    /// Distance threshold, also the half-width of the excluded crease band.
    pub delta: f64,
    pub n_t: usize,
    pub n_v: usize,
    pub exclude_crease_band: bool,
}

impl OverlapOptions {
    /// `delta = eps / 50` on a 512 x 64 grid, crease band excluded.
    pub fn for_eps(eps: f64) -> Self {
        OverlapOptions { delta: eps / 50.0, n_t: 512, n_v: 64, exclude_crease_band: true }
    }
}

/// Fraction of the grid samples of `a` that lie within `delta` of a grid
/// sample of `b`; samples with `|v| < delta` are skipped when the crease
/// band is excluded.
pub fn overlap_fraction(a: &OrigamiMap, b: &OrigamiMap, options: &OverlapOptions) -> Result<f64> {
    let delta = options.delta;
    if !(delta > 0.0) {
        return Err(Error::InvalidScenario(format!("overlap threshold must be positive, got {delta}")));
    }
    let ga = a.grid(options.n_t, options.n_v)?;
    let gb = b.grid(options.n_t, options.n_v)?;
    let cell = |p: &Vector3<f64>| {
        let q = p / delta;
        (q.x.floor() as i64, q.y.floor() as i64, q.z.floor() as i64)
    };
    let mut hash: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
    for (k, p) in gb.points.iter().enumerate() {
        hash.entry(cell(p)).or_default().push(k);
    }
    let (mut hits, mut total) = (0usize, 0usize);
    for (i, _) in ga.ts.iter().enumerate() {
        for (j, &v) in ga.vs.iter().enumerate() {
            if options.exclude_crease_band && v.abs() < delta {
                continue;
            }
            total += 1;
            let p = ga.point(i, j);
            let (cx, cy, cz) = cell(&p);
            let near = (-1..=1).any(|dx| {
                (-1..=1).any(|dy| {
                    (-1..=1).any(|dz| {
                        hash.get(&(cx + dx, cy + dy, cz + dz))
                            .is_some_and(|ks| ks.iter().any(|&k| (gb.points[k] - p).norm() <= delta))
                    })
                })
            });
            hits += near as usize;
        }
    }
    Ok(if total == 0 { 0.0 } else { hits as f64 / total as f64 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Congruent,
    Distinct,
    /// Profiles agree but no witness isometry was found, or the mismatch
    /// is too close to the tolerance to decide.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Congruent => "congruent",
            Verdict::Distinct => "distinct",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// An isometry taking one folding onto another, with the grid
/// correspondence it was validated on.
#[derive(Clone, Copy, Debug)]
pub struct Witness {
    pub motion: RigidMotion,
    pub kind: SymmetryKind,
    /// Sample `k` of the source maps to sample `n-1-k` of the target.
    pub reverse_t: bool,
    /// `v` maps to `-v`.
    pub mirror_v: bool,
    /// Largest image deviation on the validation grid.
    pub deviation: f64,
}

#[derive(Clone, Debug)]
pub struct CongruenceReport {
    pub verdicts: [[Verdict; 4]; 4],
    /// Relative `|H|` profile mismatch per pair.
    pub evidence: [[f64; 4]; 4],
    /// `witnesses[i][j]` maps the image of `P_i` onto that of `P_j`.
    pub witnesses: [[Option<Witness>; 4]; 4],
    /// Per pair of strips (in variant order), the largest `|xi_i x xi_j|` at
    /// common crease points; zero iff the strips have the same image.
    pub strip_gaps: [[f64; 4]; 4],
    pub symmetry: SymmetryReport,
    pub tol: f64,
}

impl CongruenceReport {
    fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize)> {
        (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))
    }

    pub fn all_distinct(&self) -> bool {
        self.off_diagonal().all(|(i, j)| self.verdicts[i][j] == Verdict::Distinct)
    }

    pub fn all_congruent(&self) -> bool {
        self.off_diagonal().all(|(i, j)| self.verdicts[i][j] == Verdict::Congruent)
    }

    pub fn inconclusive_pairs(&self) -> Vec<(usize, usize)> {
        self.off_diagonal().filter(|&(i, j)| self.verdicts[i][j] == Verdict::Inconclusive).collect()
    }

    /// Largest deviation among the congruent pairs' witnesses.
    pub fn max_witness_deviation(&self) -> f64 {
        self.witnesses.iter().flatten().flatten().map(|w| w.deviation).fold(0.0, f64::max)
    }
}

/// `|H|` of the concave (`v >= 0`) and convex halves in the map's own parameter.
fn signature(map: &OrigamiMap) -> Result<(Vec<f64>, Vec<f64>)> {
    let abs = |s: &DevelopableStrip| s.mean_curvature().map(|h| h.iter().map(|x| x.abs()).collect());
    Ok((abs(map.upper())?, abs(map.lower())?))
}

fn profile_mismatch(a: &(Vec<f64>, Vec<f64>), b: &(Vec<f64>, Vec<f64>), scale: f64) -> f64 {
    let n = a.0.len();
    let run = |reverse: bool| {
        (0..n)
            .map(|k| {
                let m = if reverse { n - 1 - k } else { k };
                (a.0[k] - b.0[m]).abs().max((a.1[k] - b.1[m]).abs())
            })
            .fold(0.0, f64::max)
    };
    run(false).min(run(true)) / scale
}

fn witness_deviation(a: &OrigamiMap, b: &OrigamiMap, motion: &RigidMotion, reverse_t: bool, mirror_v: bool) -> f64 {
    let n = a.upper().samples().len();
    let eps = a.eps();
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let m = if reverse_t { n - 1 - k } else { k };
        for j in 0..=WITNESS_V_CELLS {
            let v = eps * (2.0 * j as f64 - WITNESS_V_CELLS as f64) / WITNESS_V_CELLS as f64;
            let w = if mirror_v { -v } else { v };
            worst = worst.max((motion.apply(&a.at_sample(k, v)) - b.at_sample(m, w)).norm());
        }
    }
    worst
}

fn strip_gap(a: &DevelopableStrip, b: &DevelopableStrip) -> f64 {
    let (sa, sb): (&[StripPoint], &[StripPoint]) = (a.samples(), b.samples());
    let n = sa.len();
    let flip = a.variant().is_inverse() != b.variant().is_inverse();
    (0..n).map(|k| sa[k].ruling.cross(&sb[if flip { n - 1 - k } else { k }].ruling).norm()).fold(0.0, f64::max)
}

/// Decides which of the four foldings are congruent.
///
/// A pair is distinct when its `|H|` profiles differ by more than
/// `DISTINCT_FACTOR * tol` under both alignments of the parameter. Pairs
/// whose profiles agree within `tol` are congruent only if an isometry
/// built from a symmetry of the crease maps one sampled image onto the
/// other within [`WITNESS_TOL`]; everything else is inconclusive.
pub fn classify_congruence(quad: &FoldQuadruple, tol: f64) -> Result<CongruenceReport> {
    let crease = quad.crease();
    let frenet = frenet_apparatus(crease)?;
    let symmetry = detect_symmetry(&frenet, SYMMETRY_TOL.max(tol));
    let candidates = crease_symmetries(crease, &frenet, &symmetry, WITNESS_TOL);
    let maps = quad.maps();
    let signatures = maps.iter().map(signature).collect::<Result<Vec<_>>>()?;
    let scale = signatures.iter().flat_map(|(u, l)| u.iter().chain(l)).fold(0.0f64, |m, h| m.max(*h));
    let geometry_scale = crease.length().max(quad.eps()).max(1.0);

    let mut verdicts = [[Verdict::Inconclusive; 4]; 4];
    let mut evidence = [[0.0; 4]; 4];
    let mut witnesses: [[Option<Witness>; 4]; 4] = [[None; 4]; 4];
    let mut strip_gaps = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            strip_gaps[i][j] = strip_gap(quad.strip(Variant::ALL[i]), quad.strip(Variant::ALL[j]));
        }
    }
    for i in 0..4 {
        for j in i..4 {
            let mismatch = profile_mismatch(&signatures[i], &signatures[j], scale);
            evidence[i][j] = mismatch;
            evidence[j][i] = mismatch;
            let verdict = if mismatch > DISTINCT_FACTOR * tol {
                Verdict::Distinct
            } else if mismatch <= tol {
                let mut best: Option<Witness> = None;
                for c in &candidates {
                    for (reverse_t, mirror_v) in [(false, false), (true, false), (false, true), (true, true)] {
                        let deviation = witness_deviation(&maps[i], &maps[j], &c.motion, reverse_t, mirror_v);
                        if deviation <= WITNESS_TOL * geometry_scale && best.is_none_or(|b| deviation < b.deviation) {
                            best = Some(Witness { motion: c.motion, kind: c.kind, reverse_t, mirror_v, deviation });
                        }
                    }
                }
                if let Some(w) = best {
                    witnesses[i][j] = Some(w);
                    let back = Witness { motion: w.motion.inverse(), ..w };
                    witnesses[j][i] = Some(Witness {
                        deviation: witness_deviation(&maps[j], &maps[i], &back.motion, w.reverse_t, w.mirror_v),
                        ..back
                    });
                    Verdict::Congruent
                } else {
                    Verdict::Inconclusive
                }
            } else {
                Verdict::Inconclusive
            };
            verdicts[i][j] = verdict;
            verdicts[j][i] = verdict;
        }
    }
    Ok(CongruenceReport { verdicts, evidence, witnesses, strip_gaps, symmetry, tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurvePreset;
    use crate::expr::Expr;
    use crate::strip::DEFAULT_EPS;
    use nalgebra::Matrix3;

    fn quadruple(preset: CurvePreset, alpha: &str, n: usize) -> FoldQuadruple {
        let c = SpaceCurve::from_preset(preset, None, n).unwrap();
        let p = PlanePattern::from_alpha(&c, Expr::parse(alpha).unwrap()).unwrap();
        FoldQuadruple::build(&c, &p, DEFAULT_EPS).unwrap()
    }

    #[test]
    fn maps_agree_on_the_crease_and_match_their_definitions() {
        let q = quadruple(CurvePreset::PaperC0, "pi*(t+10)/24", 128);
        let base = q.strip(Variant::Base);
        let phi = OrigamiMap::phi(base).unwrap();
        let psi = OrigamiMap::psi(base).unwrap();
        // phi_f = psi_f~ and psi_f = phi_f~
        let psi_dual = OrigamiMap::psi(q.strip(Variant::Dual)).unwrap();
        let phi_dual = &q.maps()[1];
        for t in [0.1, 0.37, 0.9] {
            for v in [-0.2, -0.05, 0.0, 0.13, 0.2] {
                assert_eq!(phi.eval(t, v).unwrap(), psi_dual.eval(t, v).unwrap());
                assert_eq!(psi.eval(t, v).unwrap(), phi_dual.eval(t, v).unwrap());
                assert_eq!(phi.eval(t, v).unwrap(), q.maps()[0].eval(t, v).unwrap());
            }
            assert!((phi.eval(t, 0.0).unwrap() - q.crease().position_at(t)).norm() < 1e-15);
        }
        assert!(OrigamiMap::new(Arc::new(base.clone()), Arc::new(base.clone())).is_err());
    }

    #[test]
    fn self_overlap_is_total_and_the_pair_meets_only_at_the_crease() {
        let q = quadruple(CurvePreset::PaperC0, "pi*(t+10)/24", 256);
        let opts = OverlapOptions::for_eps(q.eps());
        let [p1, p2, ..] = q.maps();
        assert_eq!(overlap_fraction(p1, p1, &opts).unwrap(), 1.0);
        assert!(overlap_fraction(p1, p2, &opts).unwrap() < 0.02);
        let with_band = OverlapOptions { exclude_crease_band: false, ..opts };
        // one grid row of 65 lies inside the band
        assert!(overlap_fraction(p1, p2, &with_band).unwrap() >= 1.0 / 65.0);
    }

    #[test]
    fn c0_quadruple_is_pairwise_distinct() {
        let q = quadruple(CurvePreset::PaperC0, "pi*(t+10)/24", 512);
        let r = classify_congruence(&q, PROFILE_TOL).unwrap();
        assert!(!r.symmetry.has_any());
        assert!(r.all_distinct(), "{:?}", r.evidence);
        for i in 0..4 {
            assert_eq!(r.verdicts[i][i], Verdict::Congruent);
            assert!(r.witnesses[i][i].unwrap().motion.is_identity(1e-12));
        }
        let sep = q.mean_curvature_table().unwrap().separation();
        assert!(sep.order.is_some() && sep.min_relative_gap > DISTINCT_FACTOR * PROFILE_TOL);
    }

    #[test]
    fn circle_arc_quadruple_is_congruent_through_the_reflections() {
        let q = quadruple(CurvePreset::CircleArc { radius: 1.0 }, "pi/4 + t/2", 256);
        let r = classify_congruence(&q, PROFILE_TOL).unwrap();
        assert!(r.all_congruent(), "{:?}", r.verdicts);
        assert!(r.max_witness_deviation() < 1e-8);
        let s = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0));
        let t = Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, 1.0));
        let close = |w: &Option<Witness>, m: Matrix3<f64>| (w.unwrap().motion.linear - m).abs().max() < 1e-12;
        assert!(close(&r.witnesses[0][1], s));
        assert!(close(&r.witnesses[0][2], t * s));
        assert!(close(&r.witnesses[0][3], t));
        // the strips themselves are four different surfaces
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r.strip_gaps[i][j] > 1e-3, i != j, "{i} {j}");
            }
        }
    }

    #[test]
    fn planar_fold_angle() {
        let q = quadruple(CurvePreset::CircleArc { radius: 1.0 }, "pi/4 + t/2", 64);
        let base = q.strip(Variant::Base);
        let dual = q.strip(Variant::Dual);
        for (f, g) in base.samples().iter().zip(dual.samples()) {
            // in-surface directions leaving the crease on either side
            let up = f.conormal;
            let down = -g.conormal;
            let angle = up.dot(&down).clamp(-1.0, 1.0).acos();
            assert!((angle - (std::f64::consts::PI - 2.0 * f.alpha)).abs() < 1e-12);
        }
    }

    #[test]
    fn grids_need_an_even_v_count() {
        let q = quadruple(CurvePreset::PaperC0, "pi*(t+10)/24", 64);
        assert!(matches!(q.maps()[0].grid(8, 3), Err(Error::InvalidGrid(_))));
        let g = q.maps()[0].grid(8, 4).unwrap();
        assert_eq!(g.vs[2], 0.0);
        assert_eq!(g.points.len(), 40);
    }
}
