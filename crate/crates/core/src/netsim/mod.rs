//! Monte Carlo success probability of a radar on a multi-lane road.
//!
//! Vehicles form independent 1-D Poisson processes per lane; each vehicle's
//! radar is active with a fixed probability. Oncoming radars whose main lobe
//! and the ego's main lobe cover each other add one-way Friis interference.
//! The target echo follows a deterministic mean model scaled by a Swerling
//! fluctuation.

mod realization;
mod rng;
mod scenario;
mod sinr;
mod success;
mod swerling;

pub use realization::{sample_realization, Realization, Vehicle};
pub use rng::{StreamPurpose, TrialStreams};
pub use scenario::{default_noise_power, ScenarioConfig, SwerlingKind, TargetModel};
pub use sinr::{interference_power, mutually_illuminated, sinr, sinr_with_fluctuation};
pub use success::{success_probability, SuccessCurve};
pub use swerling::{unit_fluctuation, SwerlingModel};
