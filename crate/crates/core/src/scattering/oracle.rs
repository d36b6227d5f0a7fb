//! Brute-force physical-optics evaluation of the backscattered field
//!
//! ```text
//! E_s = −jkη ∫_Ω J(R',θ,φ)/(4πR') · exp(−j2kR') dΩ,   J = (2/η) E_i(R',θ) cos φ
//! ```
//!
//! on the plate surface, with the exact radar-to-surface distance and the
//! exact amplitude factors. A curved plate is represented by the paraboloid
//! `x = −(y²/2C_y + z²/2C_z)` that bulges towards the radar.
//!
//! The integral uses a tensor-product midpoint rule. The grid is doubled
//! until two successive levels agree to `rel_tol`; the returned value is the
//! Richardson extrapolation of the last two levels.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{ensure_positive, Error, Result};
use crate::radio::RadioConfig;

use super::fields::{DipoleSource, RadiationPattern};
use super::target::PlateTarget;

/// Oracle grid controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Starting resolution; at least 10.
    pub points_per_wavelength: f64,
    /// Relative agreement required between two successive grids.
    pub rel_tol: f64,
    /// How many times the grid may be doubled.
    pub max_refinements: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            points_per_wavelength: 10.0,
            rel_tol: 0.01,
            max_refinements: 4,
        }
    }
}

/// Minimum number of samples per local oscillation of the integrand.
pub const MIN_POINTS_PER_OSCILLATION: f64 = 4.0;
/// Minimum starting resolution of the grid.
pub const MIN_POINTS_PER_WAVELENGTH: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleField {
    /// y-polarised scattered field at the radar, V/m.
    pub field: Complex64,
    /// Cells per axis on the finest grid.
    pub points_per_axis: usize,
    pub refinements: usize,
    /// `|I_fine − I_coarse| / |I_fine|` of the last two levels.
    pub last_change: f64,
}

struct Geometry {
    range: f64,
    half_side: f64,
    inv_cy: f64,
    inv_cz: f64,
    k: f64,
    pattern: RadiationPattern,
}

impl Geometry {
    fn sag(&self, y: f64, z: f64) -> f64 {
        0.5 * (y * y * self.inv_cy + z * z * self.inv_cz)
    }

    /// Integrand without the constant prefactor.
    fn integrand(&self, y: f64, z: f64) -> Complex64 {
        let depth = self.range + self.sag(y, z);
        let r2 = depth * depth + y * y + z * z;
        let r = r2.sqrt();
        // F(θ)·cos φ, φ being the azimuth around the dipole (y) axis
        let transverse = (depth * depth + z * z).sqrt();
        let cos_phi = depth / transverse;
        let pattern = match self.pattern {
            RadiationPattern::Isotropic => 1.0,
            RadiationPattern::ShortDipole => transverse / r,
        };
        Complex64::from_polar(pattern * cos_phi / r2, -2.0 * self.k * r)
    }

    /// Local spatial frequency of the phase `2kR'` at the plate corner, rad/m.
    fn max_phase_gradient(&self) -> f64 {
        let h = self.half_side;
        let depth = self.range + self.sag(h, h);
        let r = (depth * depth + 2.0 * h * h).sqrt();
        let gy = (h + depth * h * self.inv_cy) / r;
        let gz = (h + depth * h * self.inv_cz) / r;
        2.0 * self.k * gy.max(gz)
    }

    fn midpoint_sum(&self, cells: usize) -> Complex64 {
        let step = 2.0 * self.half_side / cells as f64;
        let centre = |i: usize| -self.half_side + step * (i as f64 + 0.5);
        // rows in parallel, reduced in index order so the sum is reproducible
        let rows: Vec<Complex64> = (0..cells)
            .into_par_iter()
            .map(|i| {
                let y = centre(i);
                (0..cells).map(|j| self.integrand(y, centre(j))).sum()
            })
            .collect();
        rows.into_iter().sum::<Complex64>() * step * step
    }
}

pub fn oracle_scattered_field(
    range_m: f64,
    target: &PlateTarget,
    source: &DipoleSource,
    radio: &RadioConfig,
    spec: &QuadratureSpec,
) -> Result<OracleField> {
    ensure_positive("range", range_m)?;
    if !(spec.points_per_wavelength >= MIN_POINTS_PER_WAVELENGTH) {
        return Err(Error::InvalidParameter {
            name: "points per wavelength",
            reason: format!(
                "need ≥ {MIN_POINTS_PER_WAVELENGTH}, got {}",
                spec.points_per_wavelength
            ),
        });
    }
    if !(spec.rel_tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "relative tolerance",
            reason: format!("must be positive, got {}", spec.rel_tol),
        });
    }
    let lambda = radio.wavelength();
    let geo = Geometry {
        range: range_m,
        half_side: target.side_m() / 2.0,
        inv_cy: target.curvature_y().inverse(),
        inv_cz: target.curvature_z().inverse(),
        k: radio.wavenumber(),
        pattern: source.pattern,
    };

    let mut cells = (target.side_m() / lambda * spec.points_per_wavelength)
        .ceil()
        .max(2.0) as usize;
    let step = target.side_m() / cells as f64;
    let per_oscillation = 2.0 * PI / (geo.max_phase_gradient() * step);
    if per_oscillation < MIN_POINTS_PER_OSCILLATION {
        return Err(Error::UnderResolved {
            points_per_oscillation: per_oscillation,
            points_per_wavelength: lambda / step,
        });
    }

    // E_s = −jkη · (2/η)(−jkηLI/4π) /(4π) · ∫ F cos φ /R'² e^(−j2kR') dΩ
    let k = radio.wavenumber();
    let prefactor = -2.0 * k * source.moment(k) / (16.0 * PI * PI);

    let mut coarse = geo.midpoint_sum(cells);
    let mut last_change = f64::INFINITY;
    for level in 1..=spec.max_refinements {
        cells *= 2;
        let fine = geo.midpoint_sum(cells);
        last_change = (fine - coarse).norm() / fine.norm();
        if last_change < spec.rel_tol {
            let extrapolated = (fine * 4.0 - coarse) / 3.0;
            return Ok(OracleField {
                field: extrapolated * prefactor,
                points_per_axis: cells,
                refinements: level,
                last_change,
            });
        }
        coarse = fine;
    }
    Err(Error::NoConvergence {
        levels: spec.max_refinements,
        last_change,
    })
}
