//! Entanglement and teleportation fidelity near higher-dimensional black holes.
//!
//! Units are natural (G = c = ħ = k_B = 1) except in [`estimates`], which
//! works in SI.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod cli;
pub mod error;
pub mod estimates;
pub mod fock_oracle;
pub mod geometry;
pub mod linalg;
pub mod modes;
pub mod report;
mod special;
pub mod sweep;

pub use error::{Error, Result};
pub use geometry::{RotatingBH, SchwarzschildBH};
pub use modes::{ModeSpec, SqueezingParams, Statistics};
pub use special::{gamma_half, sphere_volume};
