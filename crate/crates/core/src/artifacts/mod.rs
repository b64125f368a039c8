// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! Meshes and file exporters.

mod export;
mod mesh;

pub use export::{export_csv, export_frenet_csv, export_obj, export_svg, parse_obj, ObjData, CSV_HEADER};
pub use mesh::{mesh_from_origami, self_intersections, StripMesh, MIN_TRIANGLE_AREA};
