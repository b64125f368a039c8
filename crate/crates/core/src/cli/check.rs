// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! The invariant suite behind `curvefold check`.

use std::fmt;

use crate::curve::{
    detect_symmetry, frenet_apparatus, frenet_serret_residuals, signed_curvature, PlanePattern, SpaceCurve,
    SYMMETRY_TOL,
};
use crate::develop::{aligned_distance, develop_generator};
use crate::error::Result;
use crate::fold::{
    classify_congruence, overlap_fraction, FoldQuadruple, OverlapOptions, Verdict, DISTINCT_FACTOR, WITNESS_TOL,
};
use crate::strip::{Variant, MEAN_CURVATURE_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this scenario.
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One line of the check report.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostic {
    pub name: String,
    pub status: Status,
    /// Where the worst value occurs, when it has a location.
    pub t: Option<f64>,
    pub value: f64,
    /// Comparison the value must satisfy, e.g. `<= 1e-6`.
    pub bound: String,
    /// What is being checked.
    pub anchor: &'static str,
    pub detail: String,
}

impl Diagnostic {
    fn below(name: impl Into<String>, anchor: &'static str, (t, value): (Option<f64>, f64), limit: f64) -> Self {
        Diagnostic {
            name: name.into(),
            status: if value <= limit { Status::Pass } else { Status::Fail },
            t,
            value,
            bound: format!("<= {limit:e}"),
            anchor,
            detail: String::new(),
        }
    }

    fn above(name: impl Into<String>, anchor: &'static str, (t, value): (Option<f64>, f64), limit: f64) -> Self {
        Diagnostic {
            status: if value > limit { Status::Pass } else { Status::Fail },
            bound: format!("> {limit:e}"),
            ..Self::below(name, anchor, (t, value), limit)
        }
    }

    fn skip(name: impl Into<String>, anchor: &'static str, why: &str) -> Self {
        Diagnostic {
            name: name.into(),
            status: Status::Skip,
            t: None,
            value: f64::NAN,
            bound: "-".into(),
            anchor,
            detail: why.into(),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.name)?;
        match self.t {
            Some(t) => write!(f, " t={t:?}")?,
            None => write!(f, " t=-")?,
        }
        write!(f, " value={:e} bound=\"{}\" anchor=\"{}\"", self.value, self.bound, self.anchor)?;
        if !self.detail.is_empty() {
            write!(f, " detail=\"{}\"", self.detail)?;
        }
        Ok(())
    }
}

/// Largest value and its parameter.
fn worst(params: &[f64], values: impl IntoIterator<Item = f64>) -> (Option<f64>, f64) {
    let mut best = (None, 0.0f64);
    for (t, v) in params.iter().zip(values) {
        if best.0.is_none() || v > best.1 || v.is_nan() {
            best = (Some(*t), v);
        }
    }
    best
}

/// Smallest value and its parameter.
fn least(params: &[f64], values: impl IntoIterator<Item = f64>) -> (Option<f64>, f64) {
    let (t, v) = worst(params, values.into_iter().map(|v| -v));
    (t, -v)
}

/// Thresholds matched to the derivative scheme.
struct Limits {
    frame: f64,
    serret: f64,
    developability: f64,
    development: f64,
}

fn limits(crease: &SpaceCurve) -> Limits {
    if crease.analytic().is_some() {
        Limits { frame: 1e-10, serret: 1e-6, developability: 1e-6, development: 1e-6 }
    } else {
        Limits { frame: 1e-8, serret: 1e-3, developability: 1e-4, development: 1e-4 }
    }
}

/// Runs every check on the quadruple built from `crease` and `pattern`.
pub fn run_checks(crease: &SpaceCurve, pattern: &PlanePattern, eps: f64, tol: f64) -> Result<Vec<Diagnostic>> {
    let lim = limits(crease);
    let mut out = Vec::new();
    let frenet = frenet_apparatus(crease)?;
    out.push(Diagnostic::below(
        "frenet-orthonormality",
        "orthonormal Frenet frame",
        (None, frenet.orthonormality_error()),
        lim.frame,
    ));
    let serret = frenet_serret_residuals(crease, &frenet);
    out.push(
        Diagnostic::below(
            "frenet-serret",
            "Frenet-Serret equations",
            (None, serret.iter().fold(0.0, |m, r| m.max(*r))),
            lim.serret,
        )
        .with_detail(format!("e'={:e} n'={:e} b'={:e}", serret[0], serret[1], serret[2])),
    );

    let quad = FoldQuadruple::build(crease, pattern, eps)?;
    let params = crease.params();
    for v in Variant::ALL {
        let strip = quad.strip(v);
        let s = strip.samples();
        out.push(Diagnostic::below(
            format!("developability[{v}]"),
            "developability determinant det(c', xi, xi')",
            worst(params, s.iter().map(|p| p.developability_residual())),
            lim.developability,
        ));
        out.push(Diagnostic::below(
            format!("mean-curvature-forms[{v}]"),
            "agreement of the two mean curvature closed forms",
            worst(
                params,
                s.iter().map(|p| {
                    let (a, b) = (p.mean_curvature(), p.mean_curvature_alt());
                    (a - b).abs() / a.abs().max(b.abs())
                }),
            ),
            MEAN_CURVATURE_TOL,
        ));
        out.push(Diagnostic::above(
            format!("mean-curvature-nonzero[{v}]"),
            "mean curvature never vanishes",
            least(params, s.iter().map(|p| p.mean_curvature().abs())),
            0.0,
        ));
        out.push(Diagnostic::below(
            format!("geodesic-curvature[{v}]"),
            "geodesic curvature mu_f = kappa cos alpha",
            worst(
                params,
                s.iter().zip(strip.pattern().curvature()).map(|(p, mu)| {
                    (p.geodesic_curvature - mu).abs().max((p.geodesic_curvature - p.curvature * p.alpha.cos()).abs())
                }),
            ),
            1e-10,
        ));
    }

    let report = detect_symmetry(&frenet, SYMMETRY_TOL.max(tol));
    let table = quad.mean_curvature_table()?;
    if report.has_any() {
        out.push(Diagnostic::skip(
            "mean-curvature-separation",
            "strict order of the four |H| profiles",
            "crease has a symmetry",
        ));
    } else {
        let sep = table.separation();
        let name = "mean-curvature-separation";
        let anchor = "strict order of the four |H| profiles";
        let limit = DISTINCT_FACTOR * tol;
        let d = match sep.order {
            Some(order) => Diagnostic::above(name, anchor, (Some(sep.at), sep.min_relative_gap), limit)
                .with_detail(format!("order=|H_{}|<|H_{}|<|H_{}|<|H_{}|", order[0], order[1], order[2], order[3])),
            None => Diagnostic {
                status: Status::Fail,
                ..Diagnostic::above(name, anchor, (Some(sep.at), sep.min_relative_gap), limit)
            }
            .with_detail("profiles cross"),
        };
        out.push(d);
    }
    out.push(
        Diagnostic {
            status: Status::Pass,
            ..Diagnostic::below(
                "symmetry",
                "curvature and torsion symmetry classes",
                (None, report.min_mismatch()),
                f64::INFINITY,
            )
        }
        .with_detail(format!(
            "reversal_direct={} reversal_indirect={} planar={} mismatch={:e},{:e},{:e}",
            report.has_reversal_direct,
            report.has_reversal_indirect,
            report.is_planar,
            report.direct_mismatch,
            report.indirect_mismatch,
            report.planar_mismatch
        )),
    );

    let maps = quad.maps();
    let options = OverlapOptions::for_eps(eps);
    out.push(Diagnostic::below(
        "overlap",
        "adjacent foldings meet only along the crease",
        (None, overlap_fraction(&maps[0], &maps[1], &options)?),
        0.02,
    ));
    let own = overlap_fraction(&maps[0], &maps[0], &options)?;
    out.push(Diagnostic {
        status: if own == 1.0 { Status::Pass } else { Status::Fail },
        bound: "== 1".into(),
        ..Diagnostic::below("overlap-self", "a folding overlaps itself everywhere", (None, own), 1.0)
    });

    let mut generators = Vec::with_capacity(4);
    for v in Variant::ALL {
        let strip = quad.strip(v);
        let g = develop_generator(strip)?;
        let measured = signed_curvature(g.points(), g.step());
        out.push(Diagnostic::below(
            format!("development[{v}]"),
            "developed generator has curvature kappa cos alpha",
            worst(params, measured.iter().zip(strip.samples()).map(|(m, p)| (m - p.curvature * p.alpha.cos()).abs())),
            lim.development,
        ));
        generators.push(g);
    }
    let spread =
        generators[1..].iter().map(|g| aligned_distance(generators[0].points(), g.points())).fold(0.0, f64::max);
    out.push(Diagnostic::below(
        "development-agreement",
        "all four strips develop to the crease pattern",
        (None, spread),
        lim.development,
    ));

    let beta_gap = |a: Variant, b: Variant| {
        worst(params, quad.strip(a).samples().iter().zip(quad.strip(b).samples()).map(|(p, q)| (p.beta - q.beta).abs()))
    };
    if report.is_planar {
        let (t0, g0) = beta_gap(Variant::Base, Variant::Dual);
        let (t1, g1) = beta_gap(Variant::Inverse, Variant::InverseDual);
        let at = if g0 >= g1 { (t0, g0) } else { (t1, g1) };
        out.push(Diagnostic::below("planar-dual-angle", "planar crease: beta equals the dual's beta", at, 1e-10));
    } else {
        out.push(Diagnostic::skip(
            "planar-dual-angle",
            "planar crease: beta equals the dual's beta",
            "crease is not planar",
        ));
    }

    let congruence = classify_congruence(&quad, tol)?;
    let mut summary = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut s = format!("P{}~P{}:{}", i + 1, j + 1, congruence.verdicts[i][j]);
            if let Some(w) = congruence.witnesses[i][j] {
                s.push_str(&format!("({:?})", w.kind));
            }
            summary.push(s);
        }
    }
    let inconclusive = congruence.inconclusive_pairs().len();
    let name = "congruence";
    let anchor = "congruence classes of the four foldings";
    let mut d = Diagnostic::below(name, anchor, (None, inconclusive as f64), 0.0).with_detail(summary.join(" "));
    d.bound = "0 inconclusive pairs".into();
    if !report.has_any() && !congruence.all_distinct() {
        d.status = Status::Fail;
        d.detail.push_str(" (crease has no symmetry, all pairs must be distinct)");
    }
    out.push(d);
    let scale = crease.length().max(eps).max(1.0);
    let any_congruent = (0..4).any(|i| (i + 1..4).any(|j| congruence.verdicts[i][j] == Verdict::Congruent));
    if any_congruent {
        out.push(Diagnostic::below(
            "congruence-witness",
            "witness isometry maps one folding onto the other",
            (None, congruence.max_witness_deviation()),
            WITNESS_TOL * scale,
        ));
    } else {
        out.push(Diagnostic::skip(
            "congruence-witness",
            "witness isometry maps one folding onto the other",
            "no congruent pair",
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagnostics_render_on_one_line() {
        let d = Diagnostic::below(
            "developability[base]",
            "developability determinant det(c', xi, xi')",
            (Some(0.5), 2e-3),
            1e-6,
        );
        assert_eq!(d.status, Status::Fail);
        assert_eq!(
            d.to_string(),
            "FAIL developability[base] t=0.5 value=2e-3 bound=\"<= 1e-6\" anchor=\"developability determinant det(c', xi, xi')\""
        );
    }
}
