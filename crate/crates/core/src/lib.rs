// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

// NaN must fail range checks, so they are written as negated comparisons.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod artifacts;
pub mod cli;
pub mod curve;
pub mod develop;
pub mod error;
pub mod expr;
pub mod fold;
pub mod isometry;
pub mod jet;
pub mod stencil;
pub mod strip;

pub use error::{Error, Result};
