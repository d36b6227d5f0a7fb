//! Received-power models: Friis, the constant-RCS radar equation, the
//! ray-tracing (geometrical optics) model and the plate-based model that
//! unifies the two, all for an arbitrary path-loss law `β⁻¹ R⁻α`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{ensure_positive, Error, Result};
use crate::radio::RadioConfig;
use crate::scattering::{effective_distances, PlateTarget};
use crate::specfun::{gamma_fn, gamma_mod_approx, GammaApproxOrder};

/// Path-loss law with intercept `β` and exponent `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLossModel {
    intercept_beta: f64,
    exponent_alpha: f64,
}

impl PathLossModel {
    pub fn new(intercept_beta: f64, exponent_alpha: f64) -> Result<Self> {
        ensure_positive("path-loss intercept", intercept_beta)?;
        ensure_positive("path-loss exponent", exponent_alpha)?;
        Ok(Self {
            intercept_beta,
            exponent_alpha,
        })
    }

    /// `β = 4π`, `α = 2`.
    pub fn free_space() -> Self {
        Self {
            intercept_beta: 4.0 * PI,
            exponent_alpha: 2.0,
        }
    }

    pub fn beta(&self) -> f64 {
        self.intercept_beta
    }

    pub fn alpha(&self) -> f64 {
        self.exponent_alpha
    }
}

impl Default for PathLossModel {
    fn default() -> Self {
        Self::free_space()
    }
}

/// Fresnel reflection coefficient of the target surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionCoefficient(Complex64);

impl ReflectionCoefficient {
    pub fn new(rho: Complex64) -> Result<Self> {
        if !(rho.re.is_finite() && rho.im.is_finite()) || rho.norm() > 1.0 + 1e-12 {
            return Err(Error::InvalidParameter {
                name: "reflection coefficient",
                reason: format!("|ρ| must not exceed 1, got {rho}"),
            });
        }
        Ok(Self(rho))
    }

    pub fn pec() -> Self {
        Self(Complex64::new(1.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}

/// `G_r λ²/(4π) · EIRP`, the factor every model starts with.
fn aperture_power(radio: &RadioConfig) -> f64 {
    let lambda = radio.wavelength();
    radio.receive_gain() * lambda * lambda / (4.0 * PI) * radio.eirp_w()
}

/// One-way link: `EIRP G_r λ²/(4π) β⁻¹ R⁻α`.
pub fn friis_power(range_m: f64, radio: &RadioConfig, pl: &PathLossModel) -> Result<f64> {
    ensure_positive("range", range_m)?;
    Ok(aperture_power(radio) / pl.beta() * range_m.powf(-pl.alpha()))
}

/// Radar equation with a fixed RCS: `G_r λ²/(4π) · EIRP/β² · R^(−2α) · σ`.
pub fn radar_power_const_rcs(
    range_m: f64,
    sigma: f64,
    radio: &RadioConfig,
    pl: &PathLossModel,
) -> Result<f64> {
    ensure_positive("range", range_m)?;
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::Domain {
            what: "RCS",
            value: sigma,
        });
    }
    Ok(aperture_power(radio) / (pl.beta() * pl.beta()) * range_m.powf(-2.0 * pl.alpha()) * sigma)
}

/// Geometrical-optics model: `|ρ|² G_r λ²/(4π) · EIRP/β · (2R)^(−α)`.
pub fn radar_power_raytracing(
    range_m: f64,
    rho: ReflectionCoefficient,
    radio: &RadioConfig,
    pl: &PathLossModel,
) -> Result<f64> {
    ensure_positive("range", range_m)?;
    Ok(rho.value().norm_sqr() * friis_power(2.0 * range_m, radio, pl)?)
}

/// `R̃y R̃z |Γ(R̃y/R_F) Γ(R̃z/R_F)|` in m², the geometric core shared by the
/// plate-based model and its RCS.
fn plate_area_factor(range_m: f64, target: &PlateTarget, radio: &RadioConfig) -> Result<f64> {
    let d = effective_distances(range_m, target)?;
    let rf = target.fraunhofer_distance(radio.wavelength());
    let gy = gamma_fn(d.r_tilde_y / rf)?.norm();
    let gz = gamma_fn(d.r_tilde_z / rf)?.norm();
    Ok((d.r_tilde_y * gy) * (d.r_tilde_z * gz))
}

/// Same as [`plate_area_factor`] with the closed-form Γ modulus.
fn plate_area_factor_approx(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    order: GammaApproxOrder,
) -> Result<f64> {
    let d = effective_distances(range_m, target)?;
    let rf = target.fraunhofer_distance(radio.wavelength());
    let ly = d.r_tilde_y * gamma_mod_approx(d.r_tilde_y / rf, order)?;
    let lz = d.r_tilde_z * gamma_mod_approx(d.r_tilde_z / rf, order)?;
    Ok(ly * lz)
}

/// Plate-based model written as the ray-tracing model times a correction:
///
/// ```text
/// P = G_r λ²/(4π) · EIRP/β · (2R)^(−α) · (R̃yR̃z)^(α/2)/R^α · |ΓyΓz|^(α/2)
/// ```
pub fn radar_power_new(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    pl: &PathLossModel,
) -> Result<f64> {
    let area = plate_area_factor(range_m, target, radio)?;
    let alpha = pl.alpha();
    let correction = (area / (range_m * range_m)).powf(alpha / 2.0);
    Ok(aperture_power(radio) / pl.beta() * (2.0 * range_m).powf(-alpha) * correction)
}

/// The same received power factored as the radar equation with the
/// path-loss-consistent distance-dependent RCS of [`generalized_rcs`].
pub fn radar_power_new_via_rcs(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    pl: &PathLossModel,
) -> Result<f64> {
    radar_power_const_rcs(
        range_m,
        generalized_rcs(range_m, target, radio, pl)?,
        radio,
        pl,
    )
}

/// Plate-based model with `|Γ|` replaced by `(1+xⁿ)^(−1/n)`:
///
/// ```text
/// P ≈ G_r λ²/(4π) · EIRP/β · (R_F/2R²)^α · [(1+(R_F/R̃y)ⁿ)(1+(R_F/R̃z)ⁿ)]^(−α/2n)
/// ```
pub fn radar_power_new_approx(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    pl: &PathLossModel,
    order: GammaApproxOrder,
) -> Result<f64> {
    let area = plate_area_factor_approx(range_m, target, radio, order)?;
    let alpha = pl.alpha();
    let correction = (area / (range_m * range_m)).powf(alpha / 2.0);
    Ok(aperture_power(radio) / pl.beta() * (2.0 * range_m).powf(-alpha) * correction)
}

/// Distance-dependent RCS consistent with the path-loss law,
/// `β (R̃yR̃z)^(α/2) / 2^α · |ΓyΓz|^(α/2)`. Equals the plate RCS in free space.
pub fn generalized_rcs(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    pl: &PathLossModel,
) -> Result<f64> {
    let area = plate_area_factor(range_m, target, radio)?;
    let alpha = pl.alpha();
    Ok(pl.beta() * area.powf(alpha / 2.0) / 2f64.powf(alpha))
}

/// Approximate counterpart of [`generalized_rcs`].
pub fn generalized_rcs_approx(
    range_m: f64,
    target: &PlateTarget,
    radio: &RadioConfig,
    pl: &PathLossModel,
    order: GammaApproxOrder,
) -> Result<f64> {
    let area = plate_area_factor_approx(range_m, target, radio, order)?;
    let alpha = pl.alpha();
    Ok(pl.beta() * area.powf(alpha / 2.0) / 2f64.powf(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{rcs_curved, rcs_curved_approx, CurvatureRadius};
    use crate::units::{db_to_linear, dbm_to_watt};
    use approx::assert_relative_eq;

    fn one_ghz() -> RadioConfig {
        RadioConfig::new(1e9, 1.0, 1.0, 0.2).unwrap()
    }

    #[test]
    fn friis_reference_value() {
        let p = friis_power(1.0, &one_ghz(), &PathLossModel::free_space()).unwrap();
        let lambda = crate::units::SPEED_OF_LIGHT / 1e9;
        assert_relative_eq!(p, (lambda / (4.0 * PI)).powi(2), max_relative = 1e-14);
        assert_relative_eq!(p, 5.69e-4, max_relative = 1e-3);
    }

    #[test]
    fn friis_exponent_law() {
        let radio = one_ghz();
        let fs = PathLossModel::free_space();
        let r = 37.0;
        assert_relative_eq!(
            friis_power(2.0 * r, &radio, &fs).unwrap() / friis_power(r, &radio, &fs).unwrap(),
            0.25,
            max_relative = 1e-14
        );
        let pl3 = PathLossModel::new(4.0 * PI, 3.0).unwrap();
        assert_relative_eq!(
            friis_power(2.0 * r, &radio, &pl3).unwrap() / friis_power(r, &radio, &pl3).unwrap(),
            0.125,
            max_relative = 1e-14
        );
    }

    #[test]
    fn const_rcs_zero_sigma() {
        assert_eq!(
            radar_power_const_rcs(10.0, 0.0, &one_ghz(), &PathLossModel::free_space()).unwrap(),
            0.0
        );
        assert!(
            radar_power_const_rcs(10.0, -1.0, &one_ghz(), &PathLossModel::free_space()).is_err()
        );
    }

    #[test]
    fn const_rcs_table1_hand_evaluation() {
        // G_r λ²/(4π) · EIRP/(4π)² · σ / R⁴ with the table1 radio, σ = 30 dBsm, R = 100 m
        let radio = RadioConfig::table1();
        let lambda = 299_792_458.0 / 76.5e9;
        let expected =
            1000.0 * lambda * lambda / (4.0 * PI) * 0.01 / (16.0 * PI * PI) * 1000.0 / 1e8;
        let got = radar_power_const_rcs(
            100.0,
            db_to_linear(30.0),
            &radio,
            &PathLossModel::free_space(),
        )
        .unwrap();
        assert_relative_eq!(got, expected, max_relative = 1e-13);
        assert_relative_eq!(got, 7.739_1e-13, max_relative = 1e-4);
        assert_eq!(radio.eirp_w(), dbm_to_watt(10.0));
    }

    #[test]
    fn raytracing_is_friis_at_twice_the_range() {
        let radio = RadioConfig::table1();
        let pl = PathLossModel::new(10.0, 2.7).unwrap();
        let r = 42.0;
        assert_relative_eq!(
            radar_power_raytracing(r, ReflectionCoefficient::pec(), &radio, &pl).unwrap(),
            friis_power(2.0 * r, &radio, &pl).unwrap(),
            max_relative = 1e-15
        );
        let zero = ReflectionCoefficient::new(Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(radar_power_raytracing(r, zero, &radio, &pl).unwrap(), 0.0);
        let half = ReflectionCoefficient::new(Complex64::new(0.0, 0.5)).unwrap();
        assert_relative_eq!(
            radar_power_raytracing(r, half, &radio, &pl).unwrap(),
            0.25 * friis_power(2.0 * r, &radio, &pl).unwrap(),
            max_relative = 1e-15
        );
        assert!(ReflectionCoefficient::new(Complex64::new(1.5, 0.0)).is_err());
    }

    #[test]
    fn free_space_rcs_is_plate_rcs() {
        let radio = RadioConfig::table1();
        let plate =
            PlateTarget::new(1.0, CurvatureRadius::Finite(5.0), CurvatureRadius::Infinite).unwrap();
        let fs = PathLossModel::free_space();
        for r in [0.5, 3.0, 40.0, 900.0] {
            assert_relative_eq!(
                generalized_rcs(r, &plate, &radio, &fs).unwrap(),
                rcs_curved(r, &plate, &radio).unwrap(),
                max_relative = 1e-13
            );
            assert_relative_eq!(
                generalized_rcs_approx(r, &plate, &radio, &fs, GammaApproxOrder::default())
                    .unwrap(),
                rcs_curved_approx(r, &plate, &radio, GammaApproxOrder::default()).unwrap(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn approx_at_fraunhofer_distance() {
        // flat plate, R = R_F, n = 4, α = 2: both bracket terms equal 2
        let radio = RadioConfig::table1();
        let plate = PlateTarget::flat(1.0).unwrap();
        let fs = PathLossModel::free_space();
        let rf = plate.fraunhofer_distance(radio.wavelength());
        let lambda = radio.wavelength();
        let expected = 1000.0 * lambda * lambda / (4.0 * PI) * 0.01 / (4.0 * PI)
            * (rf / (2.0 * rf * rf)).powi(2)
            * (2.0f64 * 2.0).powf(-2.0 / 8.0);
        let got =
            radar_power_new_approx(rf, &plate, &radio, &fs, GammaApproxOrder::default()).unwrap();
        assert_relative_eq!(got, expected, max_relative = 1e-13);
    }
}
