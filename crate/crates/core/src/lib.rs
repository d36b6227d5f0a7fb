//! Electromagnetism-based radar propagation models for square PEC plates,
//! and a Monte Carlo simulator of automotive radar success probability.
//!
//! - [`specfun`]: complex Fresnel integral and the Γ transition function.
//! - [`scattering`]: distance-dependent RCS of flat and curved plates and a
//!   physical-optics quadrature oracle.
//! - [`propagation`]: Friis, radar-equation, ray-tracing and plate-based
//!   received-power models for any path-loss law.
//! - [`netsim`]: Poisson multi-lane road scenario with Swerling fluctuations.
//! - [`config`] and [`report`]: `key = value` run settings and CSV tables.

// `!(x > 0.0)` is used deliberately so that NaN is rejected with the rest.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod netsim;
pub mod propagation;
pub mod radio;
pub mod report;
pub mod scattering;
pub mod specfun;
pub mod units;

pub use error::{Error, Result};
pub use radio::RadioConfig;
