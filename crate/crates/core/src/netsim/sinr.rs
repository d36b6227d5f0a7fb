use rand::Rng;

use crate::error::Result;
use crate::propagation::friis_power;

use super::realization::{Realization, Vehicle};
use super::scenario::ScenarioConfig;
use super::swerling::unit_fluctuation;

/// Whether `v` and the ego radar illuminate each other: each must lie
/// inside the other's main-lobe sector of width `beamwidth`.
pub fn mutually_illuminated(v: &Vehicle, cfg: &ScenarioConfig) -> bool {
    let half = 0.5 * cfg.radio.beamwidth_rad();
    let dx = v.x_m;
    let dy = (cfg.lane_offset_m(v.lane) - cfg.lane_offset_m(cfg.ego_lane())).abs();
    // ego heads towards +x
    let in_ego_beam = dx > 0.0 && dy.atan2(dx) <= half;
    let along = -dx * v.heading;
    let ego_in_their_beam = along > 0.0 && dy.atan2(along) <= half;
    in_ego_beam && ego_in_their_beam
}

/// Sum of one-way Friis powers from active, mutually illuminated radars.
pub fn interference_power(realization: &Realization, cfg: &ScenarioConfig) -> Result<f64> {
    let ego_y = cfg.lane_offset_m(cfg.ego_lane());
    let mut total = 0.0;
    for v in realization
        .active()
        .filter(|v| mutually_illuminated(v, cfg))
    {
        let d = v.x_m.hypot(cfg.lane_offset_m(v.lane) - ego_y);
        total += friis_power(d, &cfg.radio, &cfg.pathloss)?;
    }
    Ok(total)
}

/// SINR of the echo from a target at `distance_m`, with the RCS fluctuation
/// drawn from `rng` according to the configured Swerling model.
pub fn sinr<R: Rng + ?Sized>(
    realization: &Realization,
    cfg: &ScenarioConfig,
    distance_m: f64,
    rng: &mut R,
) -> Result<f64> {
    let fluctuation = unit_fluctuation(cfg.swerling, rng);
    sinr_with_fluctuation(realization, cfg, distance_m, fluctuation)
}

/// SINR of the echo from a target at `distance_m` whose RCS is scaled by
/// the unit-mean fluctuation draw `fluctuation`. Infinite when noise and
/// interference both vanish.
pub fn sinr_with_fluctuation(
    realization: &Realization,
    cfg: &ScenarioConfig,
    distance_m: f64,
    fluctuation: f64,
) -> Result<f64> {
    let signal = cfg
        .target
        .echo_power(distance_m, &cfg.radio, &cfg.pathloss)?
        * fluctuation;
    let denom = cfg.noise_power_w + interference_power(realization, cfg)?;
    Ok(signal / denom)
}
