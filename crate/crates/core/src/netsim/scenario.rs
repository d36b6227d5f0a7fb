use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::propagation::{
    radar_power_const_rcs, radar_power_new, radar_power_new_approx, radar_power_raytracing,
    PathLossModel, ReflectionCoefficient,
};
use crate::radio::RadioConfig;
use crate::scattering::PlateTarget;
use crate::specfun::GammaApproxOrder;
use crate::units::{db_to_linear, thermal_noise_power};

/// RCS fluctuation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SwerlingKind {
    /// Exponential (chi-square, 2 degrees of freedom).
    I,
    /// Chi-square with 4 degrees of freedom.
    III,
    /// Non-fluctuating.
    V,
}

impl fmt::Display for SwerlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "I",
            Self::III => "III",
            Self::V => "V",
        })
    }
}

impl FromStr for SwerlingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(Self::I),
            "III" | "3" => Ok(Self::III),
            "V" | "5" | "0" => Ok(Self::V),
            other => Err(Error::InvalidParameter {
                name: "Swerling model",
                reason: format!("expected I, III or V, got `{other}`"),
            }),
        }
    }
}

/// Deterministic mean echo model of the target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetModel {
    RayTracing {
        rho: ReflectionCoefficient,
    },
    ConstRcs {
        sigma_m2: f64,
    },
    Plate {
        target: PlateTarget,
    },
    PlateApprox {
        target: PlateTarget,
        order: GammaApproxOrder,
    },
}

impl TargetModel {
    /// Mean received echo power at `range_m`.
    pub fn echo_power(&self, range_m: f64, radio: &RadioConfig, pl: &PathLossModel) -> Result<f64> {
        match *self {
            Self::RayTracing { rho } => radar_power_raytracing(range_m, rho, radio, pl),
            Self::ConstRcs { sigma_m2 } => radar_power_const_rcs(range_m, sigma_m2, radio, pl),
            Self::Plate { target } => radar_power_new(range_m, &target, radio, pl),
            Self::PlateApprox { target, order } => {
                radar_power_new_approx(range_m, &target, radio, pl, order)
            }
        }
    }

    /// Short identifier used in CSV output.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::RayTracing { .. } => "raytracing",
            Self::ConstRcs { .. } => "const_rcs",
            Self::Plate { .. } => "new",
            Self::PlateApprox { .. } => "new_approx",
        }
    }
}

/// Parameters of the multi-lane road scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    /// Vehicles per metre, per lane.
    pub vehicle_density_per_m: f64,
    pub num_lanes: u32,
    pub lane_width_m: f64,
    pub interference_probability: f64,
    /// Linear SINR threshold.
    pub sinr_threshold: f64,
    pub noise_power_w: f64,
    pub road_halflength_m: f64,
    pub swerling: SwerlingKind,
    pub radio: RadioConfig,
    pub pathloss: PathLossModel,
    pub target: TargetModel,
}

/// Default receiver noise: 1 GHz bandwidth, 290 K, 10 dB noise figure.
pub fn default_noise_power() -> f64 {
    thermal_noise_power(1e9, 10.0)
}

impl ScenarioConfig {
    /// The highway scenario: 10 vehicles/km per lane, 5 lanes of 3.6 m,
    /// 1% interference probability, 10 dB threshold, free space, and the
    /// radio of [`RadioConfig::table1`].
    pub fn table1(target: TargetModel, swerling: SwerlingKind) -> Self {
        Self {
            vehicle_density_per_m: 10.0 / 1000.0,
            num_lanes: 5,
            lane_width_m: 3.6,
            interference_probability: 0.01,
            sinr_threshold: db_to_linear(10.0),
            noise_power_w: default_noise_power(),
            road_halflength_m: 5000.0,
            swerling,
            radio: RadioConfig::table1(),
            pathloss: PathLossModel::free_space(),
            target,
        }
    }

    /// Checks ranges, and that the road is long enough for `max_distance_m`.
    pub fn validate(&self, max_distance_m: f64) -> Result<()> {
        let bad =
            |name: &'static str, reason: String| Err(Error::InvalidParameter { name, reason });
        if !(self.vehicle_density_per_m >= 0.0 && self.vehicle_density_per_m.is_finite()) {
            return bad("vehicle density", format!("{}", self.vehicle_density_per_m));
        }
        if self.num_lanes == 0 {
            return bad("number of lanes", "need at least one lane".into());
        }
        if !(self.lane_width_m > 0.0 && self.lane_width_m.is_finite()) {
            return bad("lane width", format!("{}", self.lane_width_m));
        }
        if !(0.0..=1.0).contains(&self.interference_probability) {
            return bad(
                "interference probability",
                format!("{}", self.interference_probability),
            );
        }
        if !(self.sinr_threshold > 0.0 && self.sinr_threshold.is_finite()) {
            return bad("SINR threshold", format!("{}", self.sinr_threshold));
        }
        if !(self.noise_power_w >= 0.0 && self.noise_power_w.is_finite()) {
            return bad("noise power", format!("{}", self.noise_power_w));
        }
        if !(self.road_halflength_m.is_finite() && self.road_halflength_m >= 10.0 * max_distance_m)
        {
            return bad(
                "road half-length",
                format!(
                    "{} m is shorter than 10 × the largest target distance ({max_distance_m} m)",
                    self.road_halflength_m
                ),
            );
        }
        Ok(())
    }

    /// Lane the ego radar drives in: the innermost lane of its direction.
    pub fn ego_lane(&self) -> u32 {
        self.num_lanes.div_ceil(2) - 1
    }

    /// Lanes `0..⌈n/2⌉` head towards +x, the others towards −x.
    pub fn lane_heading(&self, lane: u32) -> f64 {
        if lane < self.num_lanes.div_ceil(2) {
            1.0
        } else {
            -1.0
        }
    }

    pub fn lane_offset_m(&self, lane: u32) -> f64 {
        f64::from(lane) * self.lane_width_m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ScenarioConfig {
        ScenarioConfig::table1(TargetModel::ConstRcs { sigma_m2: 1000.0 }, SwerlingKind::V)
    }

    #[test]
    fn swerling_parse_round_trip() {
        for k in [SwerlingKind::I, SwerlingKind::III, SwerlingKind::V] {
            assert_eq!(k.to_string().parse::<SwerlingKind>().unwrap(), k);
        }
        assert!("II".parse::<SwerlingKind>().is_err());
    }

    #[test]
    fn lane_layout() {
        let c = cfg();
        assert_eq!(c.ego_lane(), 2);
        assert_eq!(c.lane_heading(2), 1.0);
        assert_eq!(c.lane_heading(3), -1.0);
        let mut one = cfg();
        one.num_lanes = 1;
        assert_eq!(one.ego_lane(), 0);
    }

    #[test]
    fn truncation_check() {
        let c = cfg();
        assert!(c.validate(500.0).is_ok());
        assert!(c.validate(501.0).is_err());
    }

    #[test]
    fn rejects_out_of_range() {
        let mut c = cfg();
        c.interference_probability = 1.5;
        assert!(c.validate(1.0).is_err());
        let mut c = cfg();
        c.num_lanes = 0;
        assert!(c.validate(1.0).is_err());
    }
}
