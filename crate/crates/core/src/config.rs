//! Flat `key = value` run configuration with unit-suffixed keys.
//!
//! Every key is optional; missing keys keep the `table1` preset value.
//! Lines starting with `#` and blank lines are ignored. Unknown keys,
//! duplicate keys and unparsable values are errors that name the key.
//!
//! ```text
//! vehicle_density_per_km = 10
//! eirp_dbm = 10
//! plate_curvature_z_m = inf
//! swerling = I
//! ```

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::netsim::{default_noise_power, ScenarioConfig, SwerlingKind, TargetModel};
use crate::propagation::{PathLossModel, ReflectionCoefficient};
use crate::radio::RadioConfig;
use crate::scattering::{CurvatureRadius, PlateTarget};
use crate::specfun::GammaApproxOrder;
use crate::units::{db_to_linear, dbm_to_watt, dbw_to_watt, linear_to_db, thermal_noise_power};

/// Target model selection; `Fig5` expands to the model set of the
/// success-probability comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelChoice {
    RayTracing,
    ConstRcs,
    New,
    NewApprox,
    Fig5,
}

impl ModelChoice {
    pub fn name(self) -> &'static str {
        match self {
            Self::RayTracing => "raytracing",
            Self::ConstRcs => "const_rcs",
            Self::New => "new",
            Self::NewApprox => "new_approx",
            Self::Fig5 => "fig5",
        }
    }
}

impl FromStr for ModelChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "raytracing" | "ray_tracing" | "rt" => Ok(Self::RayTracing),
            "const_rcs" | "constant_rcs" => Ok(Self::ConstRcs),
            "new" => Ok(Self::New),
            "new_approx" => Ok(Self::NewApprox),
            "fig5" | "all" => Ok(Self::Fig5),
            other => Err(Error::InvalidParameter {
                name: "model",
                reason: format!(
                    "expected raytracing, const_rcs, new, new_approx or fig5, got `{other}`"
                ),
            }),
        }
    }
}

/// Effective settings of a run, in SI base units.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub radio: RadioConfig,
    pub pathloss: PathLossModel,
    pub plate: PlateTarget,
    /// Vertical curvature radius of the curved plate in the `fig5` set.
    pub fig5_curvature_z: CurvatureRadius,
    pub const_rcs_m2: f64,
    pub approx_order: GammaApproxOrder,
    pub model: ModelChoice,
    pub swerling: SwerlingKind,
    pub vehicle_density_per_m: f64,
    pub num_lanes: u32,
    pub lane_width_m: f64,
    pub interference_probability: f64,
    pub sinr_threshold: f64,
    pub noise_power_w: f64,
    /// `None`: ten times the largest distance.
    pub road_halflength_m: Option<f64>,
    pub distances_m: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Self::table1()
    }
}

/// `start, start+step, …` up to and including `stop` (within rounding).
fn arange(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| start + step * i as f64).collect()
}

impl Settings {
    /// Scenario parameters of the automotive study: 76.5 GHz, 10 dBm EIRP,
    /// 30 dBi receive gain, 15° beam, free space, 1 m flat plate, 30 dBsm
    /// constant RCS, 10 vehicles/km on 5 lanes of 3.6 m, 1% activity,
    /// 10 dB threshold, distances 5–150 m in 5 m steps.
    pub fn table1() -> Self {
        let scenario = ScenarioConfig::table1(
            TargetModel::RayTracing {
                rho: ReflectionCoefficient::pec(),
            },
            SwerlingKind::I,
        );
        Self {
            radio: scenario.radio,
            pathloss: scenario.pathloss,
            plate: PlateTarget::flat(1.0).expect("valid plate"),
            fig5_curvature_z: CurvatureRadius::Finite(5.0),
            const_rcs_m2: db_to_linear(30.0),
            approx_order: GammaApproxOrder::default(),
            model: ModelChoice::RayTracing,
            swerling: SwerlingKind::I,
            vehicle_density_per_m: scenario.vehicle_density_per_m,
            num_lanes: scenario.num_lanes,
            lane_width_m: scenario.lane_width_m,
            interference_probability: scenario.interference_probability,
            sinr_threshold: scenario.sinr_threshold,
            noise_power_w: default_noise_power(),
            road_halflength_m: None,
            distances_m: arange(5.0, 150.0, 5.0),
            trials: 100_000,
            seed: 1,
        }
    }

    /// Named preset.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "table1" => Ok(Self::table1()),
            other => Err(Error::Config {
                key: "preset".into(),
                reason: format!("unknown preset `{other}` (available: table1)"),
            }),
        }
    }

    /// Applies a config text over `self`.
    pub fn apply_text(mut self, text: &str) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut noise_bw: Option<f64> = None;
        let mut noise_nf: Option<f64> = None;
        let mut explicit_noise = false;
        let mut range: [Option<f64>; 3] = [None; 3];
        let mut radio = RadioParts::from(&self.radio);
        let mut plate = PlateParts::from(&self.plate);
        let mut alpha = self.pathloss.alpha();
        let mut beta = self.pathloss.beta();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Config {
                    key: format!("line {}", lineno + 1),
                    reason: format!("expected `key = value`, got `{line}`"),
                });
            };
            let key = key.trim();
            let value = value.split('#').next().unwrap_or("").trim();
            if !seen.insert(key.to_string()) {
                return Err(cfg_err(key, "duplicate key"));
            }
            let num = || parse_f64(key, value);
            match key {
                "carrier_frequency_hz" => radio.freq_hz = num()?,
                "carrier_frequency_ghz" => radio.freq_hz = num()? * 1e9,
                "eirp_w" => radio.eirp_w = num()?,
                "eirp_dbm" => radio.eirp_w = dbm_to_watt(num()?),
                "eirp_dbw" => radio.eirp_w = dbw_to_watt(num()?),
                "receive_gain_linear" => radio.gain = num()?,
                "receive_gain_dbi" => radio.gain = db_to_linear(num()?),
                "beamwidth_rad" => radio.beamwidth_rad = num()?,
                "beamwidth_deg" => radio.beamwidth_rad = num()?.to_radians(),
                "pathloss_alpha" => alpha = num()?,
                "pathloss_beta" => beta = parse_beta(key, value)?,
                "plate_side_m" => plate.side_m = num()?,
                "plate_curvature_y_m" => plate.cy = parse_curvature(key, value)?,
                "plate_curvature_z_m" => plate.cz = parse_curvature(key, value)?,
                "fig5_curvature_z_m" => self.fig5_curvature_z = parse_curvature(key, value)?,
                "const_rcs_m2" => self.const_rcs_m2 = num()?,
                "const_rcs_dbsm" => self.const_rcs_m2 = db_to_linear(num()?),
                "approx_order" => {
                    let n = parse_int::<u32>(key, value)?;
                    self.approx_order = GammaApproxOrder::new(n).map_err(|e| cfg_err(key, e))?;
                }
                "model" => self.model = value.parse().map_err(|e| cfg_err(key, e))?,
                "swerling" => self.swerling = value.parse().map_err(|e| cfg_err(key, e))?,
                "vehicle_density_per_m" => self.vehicle_density_per_m = num()?,
                "vehicle_density_per_km" => self.vehicle_density_per_m = num()? / 1000.0,
                "num_lanes" => self.num_lanes = parse_int(key, value)?,
                "lane_width_m" => self.lane_width_m = num()?,
                "interference_probability" => self.interference_probability = num()?,
                "sinr_threshold_db" => self.sinr_threshold = db_to_linear(num()?),
                "sinr_threshold_linear" => self.sinr_threshold = num()?,
                "noise_power_w" => {
                    self.noise_power_w = num()?;
                    explicit_noise = true;
                }
                "noise_power_dbm" => {
                    self.noise_power_w = dbm_to_watt(num()?);
                    explicit_noise = true;
                }
                "noise_bandwidth_hz" => noise_bw = Some(num()?),
                "noise_figure_db" => noise_nf = Some(num()?),
                "road_halflength_m" => self.road_halflength_m = Some(num()?),
                "distances_m" => {
                    self.distances_m = value
                        .split(',')
                        .map(|v| parse_f64(key, v.trim()))
                        .collect::<Result<_>>()?;
                }
                "distance_min_m" => range[0] = Some(num()?),
                "distance_max_m" => range[1] = Some(num()?),
                "distance_step_m" => range[2] = Some(num()?),
                "trials" => self.trials = parse_int(key, value)?,
                "seed" => self.seed = parse_int(key, value)?,
                _ => return Err(cfg_err(key, "unknown key")),
            }
        }

        if noise_bw.is_some() || noise_nf.is_some() {
            if explicit_noise {
                return Err(cfg_err(
                    "noise_bandwidth_hz",
                    "give either a noise power or bandwidth/noise figure, not both",
                ));
            }
            let bw = noise_bw.unwrap_or(1e9);
            if !(bw > 0.0) {
                return Err(cfg_err("noise_bandwidth_hz", "must be positive"));
            }
            self.noise_power_w = thermal_noise_power(bw, noise_nf.unwrap_or(10.0));
        }
        if range.iter().any(Option::is_some) {
            if seen.contains("distances_m") {
                return Err(cfg_err(
                    "distances_m",
                    "conflicts with distance_min_m/distance_max_m/distance_step_m",
                ));
            }
            let [lo, hi, step] = range;
            let (Some(lo), Some(hi), Some(step)) = (lo, hi, step) else {
                return Err(cfg_err(
                    "distance_step_m",
                    "distance_min_m, distance_max_m and distance_step_m go together",
                ));
            };
            if !(lo > 0.0 && hi >= lo && step > 0.0) {
                return Err(cfg_err(
                    "distance_step_m",
                    "need 0 < min ≤ max and step > 0",
                ));
            }
            self.distances_m = arange(lo, hi, step);
        }

        self.radio = RadioConfig::new(radio.freq_hz, radio.eirp_w, radio.gain, radio.beamwidth_rad)
            .map_err(|e| cfg_err(radio_key(&seen), e))?;
        self.pathloss =
            PathLossModel::new(beta, alpha).map_err(|e| cfg_err("pathloss_alpha", e))?;
        self.plate = PlateTarget::new(plate.side_m, plate.cy, plate.cz)
            .map_err(|e| cfg_err("plate_side_m", e))?;
        self.validate()?;
        Ok(self)
    }

    /// Range checks that name the offending key.
    pub fn validate(&self) -> Result<()> {
        if self.distances_m.is_empty()
            || self
                .distances_m
                .iter()
                .any(|d| !(d.is_finite() && *d > 0.0))
        {
            return Err(cfg_err(
                "distances_m",
                "need at least one positive, finite distance",
            ));
        }
        if !(self.const_rcs_m2 >= 0.0 && self.const_rcs_m2.is_finite()) {
            return Err(cfg_err("const_rcs_m2", "must be non-negative"));
        }
        if let CurvatureRadius::Finite(c) = self.fig5_curvature_z {
            if !(c > 0.0 && c.is_finite()) {
                return Err(cfg_err("fig5_curvature_z_m", "must be positive"));
            }
        }
        if self.trials == 0 {
            return Err(cfg_err("trials", "must be at least 1"));
        }
        let scenario = self.scenario(TargetModel::ConstRcs { sigma_m2: 0.0 });
        scenario.validate(self.max_distance()).map_err(|e| {
            let key = match &e {
                Error::InvalidParameter { name, .. } => match *name {
                    "vehicle density" => "vehicle_density_per_km",
                    "number of lanes" => "num_lanes",
                    "lane width" => "lane_width_m",
                    "interference probability" => "interference_probability",
                    "SINR threshold" => "sinr_threshold_db",
                    "noise power" => "noise_power_w",
                    "road half-length" => "road_halflength_m",
                    _ => "config",
                },
                _ => "config",
            };
            cfg_err(key, e)
        })
    }

    pub fn max_distance(&self) -> f64 {
        self.distances_m.iter().copied().fold(0.0, f64::max)
    }

    /// Scenario for one target model.
    pub fn scenario(&self, target: TargetModel) -> ScenarioConfig {
        ScenarioConfig {
            vehicle_density_per_m: self.vehicle_density_per_m,
            num_lanes: self.num_lanes,
            lane_width_m: self.lane_width_m,
            interference_probability: self.interference_probability,
            sinr_threshold: self.sinr_threshold,
            noise_power_w: self.noise_power_w,
            road_halflength_m: self.road_halflength_m.unwrap_or(10.0 * self.max_distance()),
            swerling: self.swerling,
            radio: self.radio,
            pathloss: self.pathloss,
            target,
        }
    }

    /// Labeled target models selected by `model`.
    pub fn targets(&self) -> Vec<(String, TargetModel)> {
        let plate = self.plate;
        let order = self.approx_order;
        let single = |choice: ModelChoice| match choice {
            ModelChoice::RayTracing => TargetModel::RayTracing {
                rho: ReflectionCoefficient::pec(),
            },
            ModelChoice::ConstRcs => TargetModel::ConstRcs {
                sigma_m2: self.const_rcs_m2,
            },
            ModelChoice::New => TargetModel::Plate { target: plate },
            ModelChoice::NewApprox => TargetModel::PlateApprox {
                target: plate,
                order,
            },
            ModelChoice::Fig5 => unreachable!("expanded below"),
        };
        match self.model {
            ModelChoice::Fig5 => {
                let flat = PlateTarget::flat(plate.side_m()).expect("validated side");
                let curved = PlateTarget::new(
                    plate.side_m(),
                    CurvatureRadius::Infinite,
                    self.fig5_curvature_z,
                )
                .expect("validated curvature");
                let cz = self.fig5_curvature_z;
                vec![
                    ("raytracing".into(), single(ModelChoice::RayTracing)),
                    (
                        format!("const_rcs_{}dbsm", linear_to_db(self.const_rcs_m2)),
                        single(ModelChoice::ConstRcs),
                    ),
                    ("new_flat".into(), TargetModel::Plate { target: flat }),
                    (
                        "new_approx_flat".into(),
                        TargetModel::PlateApprox {
                            target: flat,
                            order,
                        },
                    ),
                    (format!("new_cz{cz}"), TargetModel::Plate { target: curved }),
                    (
                        format!("new_approx_cz{cz}"),
                        TargetModel::PlateApprox {
                            target: curved,
                            order,
                        },
                    ),
                ]
            }
            choice => vec![(choice.name().to_string(), single(choice))],
        }
    }

    /// Canonical config text: every key, base units, fixed order. Parsing it
    /// back over any preset yields identical settings.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let mut put = |k: &str, v: String| {
            let _ = writeln!(s, "{k} = {v}");
        };
        put(
            "carrier_frequency_hz",
            self.radio.carrier_frequency_hz().to_string(),
        );
        put("eirp_w", self.radio.eirp_w().to_string());
        put("receive_gain_linear", self.radio.receive_gain().to_string());
        put("beamwidth_rad", self.radio.beamwidth_rad().to_string());
        put("pathloss_alpha", self.pathloss.alpha().to_string());
        put("pathloss_beta", self.pathloss.beta().to_string());
        put("plate_side_m", self.plate.side_m().to_string());
        put("plate_curvature_y_m", self.plate.curvature_y().to_string());
        put("plate_curvature_z_m", self.plate.curvature_z().to_string());
        put("fig5_curvature_z_m", self.fig5_curvature_z.to_string());
        put("const_rcs_m2", self.const_rcs_m2.to_string());
        put("approx_order", self.approx_order.get().to_string());
        put("model", self.model.name().to_string());
        put("swerling", self.swerling.to_string());
        put(
            "vehicle_density_per_m",
            self.vehicle_density_per_m.to_string(),
        );
        put("num_lanes", self.num_lanes.to_string());
        put("lane_width_m", self.lane_width_m.to_string());
        put(
            "interference_probability",
            self.interference_probability.to_string(),
        );
        put("sinr_threshold_linear", self.sinr_threshold.to_string());
        put("noise_power_w", self.noise_power_w.to_string());
        if let Some(l) = self.road_halflength_m {
            put("road_halflength_m", l.to_string());
        }
        put(
            "distances_m",
            self.distances_m
                .iter()
                .map(f64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        );
        put("trials", self.trials.to_string());
        put("seed", self.seed.to_string());
        s
    }
}

impl FromStr for Settings {
    type Err = Error;

    /// Parses a config text over the `table1` preset.
    fn from_str(text: &str) -> Result<Self> {
        Self::table1().apply_text(text)
    }
}

struct RadioParts {
    freq_hz: f64,
    eirp_w: f64,
    gain: f64,
    beamwidth_rad: f64,
}

impl From<&RadioConfig> for RadioParts {
    fn from(r: &RadioConfig) -> Self {
        Self {
            freq_hz: r.carrier_frequency_hz(),
            eirp_w: r.eirp_w(),
            gain: r.receive_gain(),
            beamwidth_rad: r.beamwidth_rad(),
        }
    }
}

struct PlateParts {
    side_m: f64,
    cy: CurvatureRadius,
    cz: CurvatureRadius,
}

impl From<&PlateTarget> for PlateParts {
    fn from(p: &PlateTarget) -> Self {
        Self {
            side_m: p.side_m(),
            cy: p.curvature_y(),
            cz: p.curvature_z(),
        }
    }
}

fn radio_key(seen: &BTreeSet<String>) -> &'static str {
    const KEYS: [&str; 8] = [
        "carrier_frequency_hz",
        "carrier_frequency_ghz",
        "eirp_w",
        "eirp_dbm",
        "eirp_dbw",
        "receive_gain_linear",
        "receive_gain_dbi",
        "beamwidth_deg",
    ];
    KEYS.into_iter()
        .find(|k| seen.contains(*k))
        .unwrap_or("beamwidth_rad")
}

fn cfg_err(key: &str, reason: impl ToString) -> Error {
    Error::Config {
        key: key.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .ok()
        .filter(|v| !v.is_nan())
        .ok_or_else(|| cfg_err(key, format!("`{value}` is not a number")))
}

fn parse_int<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse::<T>()
        .map_err(|_| cfg_err(key, format!("`{value}` is not a non-negative integer")))
}

fn parse_curvature(key: &str, value: &str) -> Result<CurvatureRadius> {
    value.parse().map_err(|e| cfg_err(key, e))
}

fn parse_beta(key: &str, value: &str) -> Result<f64> {
    match value.to_ascii_lowercase().replace(' ', "").as_str() {
        "4pi" | "4*pi" | "4π" => Ok(4.0 * PI),
        _ => parse_f64(key, value),
    }
}
