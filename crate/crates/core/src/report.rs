//! CSV tables. Every table starts with its header row; numbers use the
//! shortest representation that round-trips, so equal values always give
//! equal bytes. Any NaN aborts the table with [`Error::NotANumber`].

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::netsim::SuccessCurve;
use crate::propagation::{
    radar_power_const_rcs, radar_power_new, radar_power_new_approx, radar_power_raytracing,
    PathLossModel, ReflectionCoefficient,
};
use crate::radio::RadioConfig;
use crate::scattering::{rcs_curved, rcs_curved_approx, PlateTarget};
use crate::specfun::{gamma_fn, gamma_mod_approx, GammaApproxOrder};
use crate::units::rcs_dbsm;

pub const GAMMA_HEADER: &str = "x,gamma_re,gamma_im,gamma_mod,gamma_angle_rad,gamma_mod_approx";
pub const RCS_HEADER: &str = "distance_m,rcs_m2,rcs_dbsm,rcs_approx_m2,model";
pub const POWER_HEADER: &str = "distance_m,p_rt_w,p_rcs_w,p_new_w,p_new_approx_w";
pub const SUCCESS_HEADER: &str = "distance_m,success_prob,ci_halfwidth,model,swerling,seed,trials";

fn push_row(out: &mut String, what: &str, values: &[f64], tail: &[&str]) -> Result<()> {
    if values.iter().any(|v| v.is_nan()) {
        return Err(Error::NotANumber {
            what: format!("{what} row `{values:?}`"),
        });
    }
    let mut first = true;
    for v in values {
        if !first {
            out.push(',');
        }
        first = false;
        // normalise −0 so that Γ(0) prints as `0,-1`
        let v = if *v == 0.0 { 0.0 } else { *v };
        let _ = write!(out, "{v}");
    }
    for t in tail {
        out.push(',');
        out.push_str(t);
    }
    out.push('\n');
    Ok(())
}

/// Γ and its modulus approximation at each `x`.
pub fn gamma_csv(xs: &[f64], order: GammaApproxOrder) -> Result<String> {
    let mut out = format!("{GAMMA_HEADER}\n");
    for &x in xs {
        let g = gamma_fn(x)?;
        let approx = gamma_mod_approx(x, order)?;
        push_row(
            &mut out,
            "gamma",
            &[x, g.re, g.im, g.norm(), g.arg(), approx],
            &[],
        )?;
    }
    Ok(out)
}

/// One RCS sweep over `distances_m`, labeled in the `model` column.
#[derive(Debug, Clone, PartialEq)]
pub struct RcsBlock {
    pub label: String,
    pub target: PlateTarget,
    pub radio: RadioConfig,
}

/// Exact and approximate RCS, one block of rows per [`RcsBlock`].
pub fn rcs_csv(
    blocks: &[RcsBlock],
    distances_m: &[f64],
    order: GammaApproxOrder,
) -> Result<String> {
    let mut out = format!("{RCS_HEADER}\n");
    for b in blocks {
        for &r in distances_m {
            let s = rcs_curved(r, &b.target, &b.radio)?;
            let a = rcs_curved_approx(r, &b.target, &b.radio, order)?;
            push_row(&mut out, "rcs", &[r, s, rcs_dbsm(s), a], &[&b.label])?;
        }
    }
    Ok(out)
}

/// Inputs of the received-power comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerModels {
    pub radio: RadioConfig,
    pub pathloss: PathLossModel,
    pub target: PlateTarget,
    pub const_rcs_m2: f64,
    pub order: GammaApproxOrder,
}

/// Ray-tracing, constant-RCS, plate and approximate plate received power.
pub fn power_csv(models: &PowerModels, distances_m: &[f64]) -> Result<String> {
    let PowerModels {
        radio,
        pathloss,
        target,
        const_rcs_m2,
        order,
    } = models;
    let mut out = format!("{POWER_HEADER}\n");
    for &r in distances_m {
        let row = [
            r,
            radar_power_raytracing(r, ReflectionCoefficient::pec(), radio, pathloss)?,
            radar_power_const_rcs(r, *const_rcs_m2, radio, pathloss)?,
            radar_power_new(r, target, radio, pathloss)?,
            radar_power_new_approx(r, target, radio, pathloss, *order)?,
        ];
        push_row(&mut out, "power", &row, &[])?;
    }
    Ok(out)
}

/// Success curves, one block per labeled curve.
pub fn success_csv(curves: &[(String, SuccessCurve)]) -> Result<String> {
    let mut out = format!("{SUCCESS_HEADER}\n");
    for (label, c) in curves {
        let swerling = c.swerling.to_string();
        let seed = c.seed.to_string();
        let trials = c.num_trials.to_string();
        for i in 0..c.distances_m.len() {
            push_row(
                &mut out,
                "success",
                &[c.distances_m[i], c.success_prob[i], c.ci_halfwidth[i]],
                &[label, &swerling, &seed, &trials],
            )?;
        }
    }
    Ok(out)
}
