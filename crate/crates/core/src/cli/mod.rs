// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line driver.

mod check;
mod scenario;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub use check::{run_checks, Diagnostic, Status};
pub use scenario::{CreaseSpec, Overrides, PatternSpec, Scenario};

use crate::artifacts::{export_csv, export_frenet_csv, export_obj, export_svg, mesh_from_origami, self_intersections};
use crate::curve::{crease_symmetries, detect_symmetry, frenet_apparatus, SYMMETRY_TOL};
use crate::develop::pattern_with_rulings;
use crate::error::{Error, Result};
use crate::fold::{FoldQuadruple, WITNESS_TOL};

/// Mesh cells across each strip pair in exported OBJ files.
pub const MESH_V_CELLS: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "curvefold", version, about = "Curved foldings sharing a crease and a crease pattern")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub scenario: ScenarioArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Curvature, torsion and frame of the crease as CSV.
    Frenet,
    /// The four foldings as OBJ meshes plus the |H| table.
    Quadruple,
    /// One SVG crease pattern with rulings per folding.
    Develop,
    /// Run the invariant suite; exit status 0 iff every check passes.
    Check,
    /// Report the symmetries of the crease.
    Symmetry,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ScenarioArgs {
    /// Built-in scenario: paper-c0, circle-arc or helix.
    #[arg(long, global = true, conflicts_with = "scenario")]
    pub preset: Option<String>,
    /// TOML scenario file.
    #[arg(long, global = true, value_name = "FILE")]
    pub scenario: Option<PathBuf>,
    /// Samples along the crease.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Strip half-width.
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    /// Profile tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output directory.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// First angular function of the crease pattern, in t.
    #[arg(long, global = true, conflicts_with = "mu", allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Curvature of the crease pattern, in t.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,
}

impl ScenarioArgs {
    pub fn resolve(&self) -> Result<Scenario> {
        let mut scenario = match (&self.scenario, &self.preset) {
            (Some(path), _) => Scenario::from_file(path)?,
            (None, Some(name)) => Scenario::preset(name)?,
            (None, None) => Scenario::preset("paper-c0")?,
        };
        scenario.apply(&Overrides {
            samples: self.samples,
            eps: self.eps,
            tol: self.tol,
            out: self.out.clone(),
            alpha: self.alpha.clone(),
            mu: self.mu.clone(),
        })?;
        Ok(scenario)
    }
}

fn write_file(dir: &Path, name: &str, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, bytes)?;
    writeln!(stdout, "wrote {}", path.display())?;
    Ok(())
}

/// Runs `command` on `scenario`, printing to `stdout`. Returns whether
/// every check passed; commands other than `check` pass once they finish.
pub fn execute(command: Command, scenario: &Scenario, stdout: &mut dyn Write) -> Result<bool> {
    let crease = scenario.crease()?;
    let out = &scenario.out;
    match command {
        Command::Frenet => {
            let frenet = frenet_apparatus(&crease)?;
            write_file(out, "frenet.csv", &export_frenet_csv(&frenet)?, stdout)?;
        }
        Command::Quadruple => {
            let pattern = scenario.pattern(&crease)?;
            let quad = FoldQuadruple::build(&crease, &pattern, scenario.eps)?;
            for (i, map) in quad.maps().iter().enumerate() {
                let mesh = mesh_from_origami(map, scenario.samples, MESH_V_CELLS)?;
                let hits = self_intersections(&mesh);
                write_file(out, &format!("p{}_{}.obj", i + 1, map.label()), &export_obj(&mesh)?, stdout)?;
                writeln!(stdout, "self-intersections P{} {}", i + 1, hits.len())?;
            }
            write_file(out, "mean_curvature.csv", &export_csv(&quad.mean_curvature_table()?)?, stdout)?;
        }
        Command::Develop => {
            let pattern = scenario.pattern(&crease)?;
            let quad = FoldQuadruple::build(&crease, &pattern, scenario.eps)?;
            for (i, map) in quad.maps().iter().enumerate() {
                let cp = pattern_with_rulings(map.upper(), map.lower(), scenario.eps)?;
                write_file(out, &format!("pattern_p{}_{}.svg", i + 1, map.label()), &export_svg(&cp)?, stdout)?;
            }
        }
        Command::Check => {
            let pattern = scenario.pattern(&crease)?;
            writeln!(stdout, "scenario {}", scenario.describe())?;
            let diagnostics = run_checks(&crease, &pattern, scenario.eps, scenario.tol)?;
            for d in &diagnostics {
                writeln!(stdout, "{d}")?;
            }
            let failed = diagnostics.iter().filter(|d| d.status == Status::Fail).count();
            writeln!(stdout, "summary checks={} failed={failed}", diagnostics.len())?;
            return Ok(failed == 0);
        }
        Command::Symmetry => {
            let frenet = frenet_apparatus(&crease)?;
            let tol = SYMMETRY_TOL.max(scenario.tol);
            let r = detect_symmetry(&frenet, tol);
            writeln!(stdout, "reversal-direct {} mismatch={:e}", r.has_reversal_direct, r.direct_mismatch)?;
            writeln!(stdout, "reversal-indirect {} mismatch={:e}", r.has_reversal_indirect, r.indirect_mismatch)?;
            writeln!(stdout, "planar {} mismatch={:e}", r.is_planar, r.planar_mismatch)?;
            writeln!(stdout, "any {} tol={:e}", r.has_any(), r.tol)?;
            for s in crease_symmetries(&crease, &frenet, &r, WITNESS_TOL) {
                writeln!(
                    stdout,
                    "isometry {:?} proper={} reverses={} deviation={:e}",
                    s.kind,
                    s.motion.is_proper(),
                    s.reverses,
                    s.deviation
                )?;
            }
        }
    }
    Ok(true)
}

/// Parses `args` (including the program name) and runs the command.
/// Exit status 0 on success, 1 when a check fails, 2 on errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = cli.scenario.resolve().and_then(|s| execute(cli.command, &s, stdout));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error kind={} message=\"{e}\"", error_kind(&e));
            2
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonRegularCurve { .. } => "non-regular-curve",
        Error::TooFewSamples { .. } => "too-few-samples",
        Error::VanishingCurvature { .. } => "vanishing-curvature",
        Error::InflectionDetected { .. } => "inflection",
        Error::PatternTooCurved { .. } => "pattern-too-curved",
        Error::PatternNonPositive { .. } => "pattern-non-positive",
        Error::OutOfDomain { .. } => "out-of-domain",
        Error::FormulaMismatch { .. } => "formula-mismatch",
        Error::DegenerateCell { .. } => "degenerate-cell",
        Error::EmptyMesh => "empty-mesh",
        Error::InvalidGrid(_) => "invalid-grid",
        Error::DomainMismatch(_) => "domain-mismatch",
        Error::Parse { .. } => "parse",
        Error::InvalidScenario(_) => "invalid-scenario",
        Error::Io(_) => "io",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_presets() {
        let cli =
            Cli::try_parse_from(["curvefold", "check", "--preset", "circle-arc", "--alpha", "pi/3", "--samples", "64"])
                .unwrap();
        assert_eq!(cli.command, Command::Check);
        let s = cli.scenario.resolve().unwrap();
        assert_eq!(s.pattern, PatternSpec::Alpha("pi/3".into()));
        assert_eq!(s.samples, 64);
        assert!(Cli::try_parse_from(["curvefold", "check", "--alpha", "1", "--mu", "1"]).is_err());
    }

    #[test]
    fn errors_exit_with_status_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["curvefold", "check", "--preset", "nope"], &mut out, &mut err), 2);
        assert!(String::from_utf8(err).unwrap().starts_with("error kind=invalid-scenario"));
    }
}
