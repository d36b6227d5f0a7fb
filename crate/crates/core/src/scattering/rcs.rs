use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::radio::RadioConfig;
use crate::specfun::{gamma_fn, gamma_mod_approx, GammaApproxOrder};

use super::target::{effective_distances, PlateTarget};

/// RCS of a flat plate, `πR²|Γ(R/R_F)|²`.
pub fn rcs_flat(range_m: f64, target: &PlateTarget, radio: &RadioConfig) -> Result<f64> {
    if !target.is_flat() {
        return Err(Error::Contract(
            "rcs_flat needs a flat plate; use rcs_curved".into(),
        ));
    }
    rcs_curved(range_m, target, radio)
}

/// RCS of a doubly curved plate, `π R̃y R̃z |Γ(R̃y/R_F) Γ(R̃z/R_F)|`.
pub fn rcs_curved(range_m: f64, target: &PlateTarget, radio: &RadioConfig) -> Result<f64> {
    let d = effective_distances(range_m, target)?;
    let rf = target.fraunhofer_distance(radio.wavelength());
    let gy = gamma_fn(d.r_tilde_y / rf)?.norm();
    let gz = gamma_fn(d.r_tilde_z / rf)?.norm();
    Ok(PI * (d.r_tilde_y * gy) * (d.r_tilde_z * gz))
}

/// Closed-form approximation
/// `π R_F² [(1+(R_F/R̃y)ⁿ)(1+(R_F/R̃z)ⁿ)]^(−1/n)`.
pub fn rcs_curved_approx(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    order: GammaApproxOrder,
) -> Result<f64> {
    let d = effective_distances(range_m, target)?;
    let rf = target.fraunhofer_distance(radio.wavelength());
    // R̃·(1+(R̃/R_F)ⁿ)^(−1/n) == R_F·(1+(R_F/R̃)ⁿ)^(−1/n), without overflow
    let ly = d.r_tilde_y * gamma_mod_approx(d.r_tilde_y / rf, order)?;
    let lz = d.r_tilde_z * gamma_mod_approx(d.r_tilde_z / rf, order)?;
    Ok(PI * ly * lz)
}
