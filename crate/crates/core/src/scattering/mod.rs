//! Backscatter of square PEC plates: effective distances, distance-dependent
//! RCS, validity predicates for the closed forms, and a physical-optics
//! quadrature oracle for the scattered field.

mod fields;
mod oracle;
mod rcs;
mod target;
mod validity;

pub use fields::{
    scattered_field, scattered_field_far, scattered_field_raytracing, DipoleSource,
    RadiationPattern,
};
pub use oracle::{oracle_scattered_field, OracleField, QuadratureSpec};
pub use rcs::{rcs_curved, rcs_curved_approx, rcs_flat};
pub use target::{effective_distances, CurvatureRadius, EffectiveDistances, PlateTarget};
pub use validity::{spa_valid, taylor_phase_error, taylor_valid, AxisValidity, DEFAULT_MARGIN};
