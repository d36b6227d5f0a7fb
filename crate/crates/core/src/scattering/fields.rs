//! Closed-form backscattered fields and the linear-antenna source they
//! are normalised to.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{ensure_positive, Result};
use crate::radio::RadioConfig;
use crate::specfun::gamma_fn;
use crate::units::FREE_SPACE_IMPEDANCE;

use super::target::{effective_distances, PlateTarget};

/// Normalised radiation pattern `F(θ)` of the source antenna, equal to 1 at boresight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadiationPattern {
    Isotropic,
    /// Short dipole aligned with `y`: `F = sin θ`, θ measured from the `y` axis.
    #[default]
    ShortDipole,
}

/// Linear antenna of length `L` carrying current `I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleSource {
    pub antenna_length_m: f64,
    pub current_a: f64,
    pub impedance_ohm: f64,
    pub pattern: RadiationPattern,
}

impl DipoleSource {
    /// Source whose EIRP `η k² L² I² / 4π` matches `radio`, with `L = λ/2`.
    pub fn from_radio(radio: &RadioConfig, pattern: RadiationPattern) -> Self {
        let length = radio.wavelength() / 2.0;
        let k = radio.wavenumber();
        let current =
            (4.0 * PI * radio.eirp_w() / (FREE_SPACE_IMPEDANCE * k * k * length * length)).sqrt();
        Self {
            antenna_length_m: length,
            current_a: current,
            impedance_ohm: FREE_SPACE_IMPEDANCE,
            pattern,
        }
    }

    pub fn eirp_w(&self, wavenumber: f64) -> f64 {
        let kli = wavenumber * self.antenna_length_m * self.current_a;
        self.impedance_ohm * kli * kli / (4.0 * PI)
    }

    /// `kηLI`, the amplitude shared by every field expression.
    pub(crate) fn moment(&self, wavenumber: f64) -> f64 {
        wavenumber * self.impedance_ohm * self.antenna_length_m * self.current_a
    }
}

fn two_way_phase(k: f64, range_m: f64) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * k * range_m)
}

/// Geometrical-optics field: the source seen at distance `2R`.
pub fn scattered_field_raytracing(
    range_m: f64,
    source: &DipoleSource,
    radio: &RadioConfig,
) -> Result<Complex64> {
    ensure_positive("range", range_m)?;
    let k = radio.wavenumber();
    let amp = source.moment(k) / (4.0 * PI * 2.0 * range_m);
    Ok(Complex64::i() * amp * two_way_phase(k, range_m))
}

/// General closed form
/// `−kηLI e^(−jk2R)/(4π·2R) · √(R̃yR̃z/R² · Γ(R̃y/R_F)Γ(R̃z/R_F))`.
///
/// The square root takes the principal branch; only the modulus is physical.
pub fn scattered_field(
    range_m: f64,
    target: &PlateTarget,
    source: &DipoleSource,
    radio: &RadioConfig,
) -> Result<Complex64> {
    let d = effective_distances(range_m, target)?;
    let k = radio.wavenumber();
    let rf = target.fraunhofer_distance(radio.wavelength());
    let product =
        gamma_fn(d.r_tilde_y / rf)? * gamma_fn(d.r_tilde_z / rf)? * (d.r_tilde_y * d.r_tilde_z)
            / (range_m * range_m);
    let amp = source.moment(k) / (4.0 * PI * 2.0 * range_m);
    Ok(-amp * two_way_phase(k, range_m) * product.sqrt())
}

/// Far-field limit of a flat plate, `kηLI e^(−j2kR)/(4πR²) · R_F/2`.
pub fn scattered_field_far(
    range_m: f64,
    target: &PlateTarget,
    source: &DipoleSource,
    radio: &RadioConfig,
) -> Result<Complex64> {
    ensure_positive("range", range_m)?;
    let k = radio.wavenumber();
    let rf = target.fraunhofer_distance(radio.wavelength());
    let amp = source.moment(k) / (4.0 * PI * range_m * range_m) * rf / 2.0;
    Ok(amp * two_way_phase(k, range_m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn source_reproduces_eirp() {
        let radio = RadioConfig::table1();
        let src = DipoleSource::from_radio(&radio, RadiationPattern::ShortDipole);
        assert_relative_eq!(
            src.eirp_w(radio.wavenumber()),
            radio.eirp_w(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn general_field_limits() {
        let radio = RadioConfig::table1();
        let src = DipoleSource::from_radio(&radio, RadiationPattern::ShortDipole);
        let plate = PlateTarget::flat(1.0).unwrap();
        let rf = plate.fraunhofer_distance(radio.wavelength());
        let rt = scattered_field_raytracing(rf * 1e-6, &src, &radio).unwrap();
        let gen = scattered_field(rf * 1e-6, &plate, &src, &radio).unwrap();
        assert!((gen.norm() / rt.norm() - 1.0).abs() < 0.01);
        let far = scattered_field_far(rf * 1e4, &plate, &src, &radio).unwrap();
        let gen = scattered_field(rf * 1e4, &plate, &src, &radio).unwrap();
        assert!((gen.norm() / far.norm() - 1.0).abs() < 1e-3);
    }
}
