use rand::Rng;
use rand_distr::{Distribution, Exp};

use super::rng::{StreamPurpose, TrialStreams};
use super::scenario::ScenarioConfig;

/// One vehicle on the road. The ego radar sits at `x = 0` in
/// [`ScenarioConfig::ego_lane`] and is not part of the realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vehicle {
    pub x_m: f64,
    pub lane: u32,
    /// +1 towards +x, −1 towards −x.
    pub heading: f64,
    /// Radar transmitting in this trial.
    pub active: bool,
}

/// Vehicles of one trial on `[−L, L]`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Realization {
    pub vehicles: Vec<Vehicle>,
}

impl Realization {
    pub fn active(&self) -> impl Iterator<Item = &Vehicle> {
        self.vehicles.iter().filter(|v| v.active)
    }
}

/// Draws a 1-D Poisson point process per lane, each vehicle marked active
/// with the interference probability.
///
/// Each lane half is generated outward from the ego on its own stream, so a
/// longer road only appends far vehicles, and a higher activity probability
/// only switches additional vehicles on.
pub fn sample_realization(cfg: &ScenarioConfig, streams: &TrialStreams) -> Realization {
    let mut vehicles = Vec::new();
    if cfg.vehicle_density_per_m <= 0.0 {
        return Realization { vehicles };
    }
    let gap = Exp::new(cfg.vehicle_density_per_m).expect("positive density");
    for lane in 0..cfg.num_lanes {
        let heading = cfg.lane_heading(lane);
        for forward in [true, false] {
            let mut rng = streams.stream(StreamPurpose::Lane { lane, forward });
            let sign = if forward { 1.0 } else { -1.0 };
            let mut dist = 0.0;
            loop {
                dist += gap.sample(&mut rng);
                let u: f64 = rng.random();
                if dist > cfg.road_halflength_m {
                    break;
                }
                vehicles.push(Vehicle {
                    x_m: sign * dist,
                    lane,
                    heading,
                    active: u < cfg.interference_probability,
                });
            }
        }
    }
    Realization { vehicles }
}
