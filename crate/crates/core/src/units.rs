//! Physical constants and decibel conversions.
//!
//! Everything inside the crate is linear SI. Decibel values only appear at
//! the I/O boundary (config files, CSV columns).

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Impedance of free space, Ω.
pub const FREE_SPACE_IMPEDANCE: f64 = 376.730_313_412;

/// Reference noise temperature, K.
pub const REFERENCE_TEMPERATURE: f64 = 290.0;

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

pub fn dbm_to_watt(dbm: f64) -> f64 {
    db_to_linear(dbm - 30.0)
}

pub fn dbw_to_watt(dbw: f64) -> f64 {
    db_to_linear(dbw)
}

/// Radar cross section in dBsm (dB relative to 1 m²).
pub fn rcs_dbsm(sigma_m2: f64) -> f64 {
    linear_to_db(sigma_m2)
}

/// Thermal noise power k·T·B·F in watts.
pub fn thermal_noise_power(bandwidth_hz: f64, noise_figure_db: f64) -> f64 {
    BOLTZMANN * REFERENCE_TEMPERATURE * bandwidth_hz * db_to_linear(noise_figure_db)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn db_round_trip() {
        assert_relative_eq!(db_to_linear(30.0), 1000.0, max_relative = 1e-12);
        assert_relative_eq!(linear_to_db(db_to_linear(-7.25)), -7.25, epsilon = 1e-12);
        assert_relative_eq!(dbm_to_watt(10.0), 0.01, max_relative = 1e-12);
        assert_relative_eq!(dbw_to_watt(10.0), 10.0, max_relative = 1e-12);
    }

    #[test]
    fn default_noise_floor() {
        // 1 GHz, 10 dB noise figure: about -74 dBm
        let n = thermal_noise_power(1e9, 10.0);
        assert_relative_eq!(n, 4.003_882_1e-11, max_relative = 1e-6);
        assert!((linear_to_db(n) + 30.0 + 73.98).abs() < 0.01);
    }
}
