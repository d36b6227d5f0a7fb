use crate::error::{Error, Result};
use crate::radio::RadioConfig;

use super::target::{effective_distances, PlateTarget};

/// Factor by which "much greater than" must hold.
pub const DEFAULT_MARGIN: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisValidity {
    pub y: bool,
    pub z: bool,
}

impl AxisValidity {
    pub fn both(self) -> bool {
        self.y && self.z
    }
}

/// Stationary-phase condition `a ≥ margin·√(m·λ·R̃)` on each axis, where
/// `m` is the (odd) number of Fresnel zones that must fit on the plate.
pub fn spa_valid(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    zones: u32,
    margin: f64,
) -> Result<AxisValidity> {
    if zones == 0 || zones.is_multiple_of(2) {
        return Err(Error::InvalidParameter {
            name: "Fresnel zone count",
            reason: format!("must be a positive odd integer, got {zones}"),
        });
    }
    if !(margin > 1.0) || !margin.is_finite() {
        return Err(Error::InvalidParameter {
            name: "margin",
            reason: format!("must be a finite value above 1, got {margin}"),
        });
    }
    let d = effective_distances(range_m, target)?;
    let lambda = radio.wavelength();
    let a = target.side_m();
    let holds = |r_tilde: f64| a >= margin * (f64::from(zones) * lambda * r_tilde).sqrt();
    Ok(AxisValidity {
        y: holds(d.r_tilde_y),
        z: holds(d.r_tilde_z),
    })
}

/// Phase error, in radians, of the quadratic expansion of the two-way path
/// `2kR'`, taken as the largest residual over the plate corner and edge
/// midpoints. For a flat plate this is `k a⁴ / (16 R³)` to leading order;
/// a curved plate adds the sag `s = y²/2C_y + z²/2C_z` to the axial offset.
pub fn taylor_phase_error(range_m: f64, target: &PlateTarget, radio: &RadioConfig) -> Result<f64> {
    crate::error::ensure_positive("range", range_m)?;
    let h = 0.5 * target.side_m();
    let (iy, iz) = (
        target.curvature_y().inverse(),
        target.curvature_z().inverse(),
    );
    let residual = |y: f64, z: f64| {
        let axial = range_m + 0.5 * (y * y * iy + z * z * iz);
        let rho2 = y * y + z * z;
        // √(axial² + ρ²) − axial, written without cancellation
        let exact = rho2 / ((axial * axial + rho2).sqrt() + axial);
        (exact - rho2 / (2.0 * range_m)).abs()
    };
    let worst = residual(h, h).max(residual(h, 0.0)).max(residual(0.0, h));
    Ok(2.0 * radio.wavenumber() * worst)
}

/// Whether the quadratic phase expansion holds to within `max_phase_error`.
pub fn taylor_valid(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    max_phase_error: f64,
) -> Result<bool> {
    Ok(taylor_phase_error(range_m, target, radio)? <= max_phase_error)
}
