use std::f64::consts::PI;

use crate::error::{ensure_positive, Error, Result};
use crate::units::{db_to_linear, dbm_to_watt, SPEED_OF_LIGHT};

/// Transmit/receive parameters of a monostatic radar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioConfig {
    carrier_frequency_hz: f64,
    eirp_w: f64,
    receive_gain: f64,
    beamwidth_rad: f64,
}

impl RadioConfig {
    pub fn new(
        carrier_frequency_hz: f64,
        eirp_w: f64,
        receive_gain: f64,
        beamwidth_rad: f64,
    ) -> Result<Self> {
        ensure_positive("carrier frequency", carrier_frequency_hz)?;
        ensure_positive("EIRP", eirp_w)?;
        ensure_positive("receive gain", receive_gain)?;
        if !(beamwidth_rad > 0.0 && beamwidth_rad < 2.0 * PI) {
            return Err(Error::Domain {
                what: "beamwidth",
                value: beamwidth_rad,
            });
        }
        Ok(Self {
            carrier_frequency_hz,
            eirp_w,
            receive_gain,
            beamwidth_rad,
        })
    }

    /// 76.5 GHz, 10 dBm EIRP, 30 dBi receive gain, 15° beam.
    pub fn table1() -> Self {
        Self {
            carrier_frequency_hz: 76.5e9,
            eirp_w: dbm_to_watt(10.0),
            receive_gain: db_to_linear(30.0),
            beamwidth_rad: 15f64.to_radians(),
        }
    }

    pub fn carrier_frequency_hz(&self) -> f64 {
        self.carrier_frequency_hz
    }

    pub fn eirp_w(&self) -> f64 {
        self.eirp_w
    }

    pub fn receive_gain(&self) -> f64 {
        self.receive_gain
    }

    pub fn beamwidth_rad(&self) -> f64 {
        self.beamwidth_rad
    }

    pub fn wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.carrier_frequency_hz
    }

    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength()
    }

    pub fn with_carrier_frequency(self, hz: f64) -> Result<Self> {
        Self::new(hz, self.eirp_w, self.receive_gain, self.beamwidth_rad)
    }

    pub fn with_eirp(self, eirp_w: f64) -> Result<Self> {
        Self::new(
            self.carrier_frequency_hz,
            eirp_w,
            self.receive_gain,
            self.beamwidth_rad,
        )
    }

    pub fn with_receive_gain(self, gain: f64) -> Result<Self> {
        Self::new(
            self.carrier_frequency_hz,
            self.eirp_w,
            gain,
            self.beamwidth_rad,
        )
    }
}
