use std::fmt;
use std::str::FromStr;

use crate::error::{ensure_positive, Error, Result};

/// Radius of curvature of the plate along one axis. `Infinite` is a flat axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvatureRadius {
    Infinite,
    Finite(f64),
}

impl CurvatureRadius {
    pub fn finite(radius_m: f64) -> Result<Self> {
        ensure_positive("curvature radius", radius_m).map(Self::Finite)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Self::Infinite)
    }

    /// `1/C`, zero for a flat axis.
    pub fn inverse(self) -> f64 {
        match self {
            Self::Infinite => 0.0,
            Self::Finite(c) => 1.0 / c,
        }
    }

    /// `(1/R + 1/C)⁻¹`; exactly `R` for a flat axis.
    pub fn effective_distance(self, range_m: f64) -> f64 {
        match self {
            Self::Infinite => range_m,
            Self::Finite(c) => 1.0 / (1.0 / range_m + 1.0 / c),
        }
    }
}

impl fmt::Display for CurvatureRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinite => f.write_str("inf"),
            Self::Finite(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for CurvatureRadius {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(
            t.to_ascii_lowercase().as_str(),
            "inf" | "infinity" | "flat" | "∞"
        ) {
            return Ok(Self::Infinite);
        }
        let v: f64 = t.parse().map_err(|_| Error::InvalidParameter {
            name: "curvature radius",
            reason: format!("`{t}` is neither a positive number nor `inf`"),
        })?;
        if v.is_infinite() && v > 0.0 {
            Ok(Self::Infinite)
        } else {
            Self::finite(v)
        }
    }
}

/// Square PEC plate of side `a`, facing the radar, possibly curved along
/// the horizontal (`y`) and vertical (`z`) axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateTarget {
    side_m: f64,
    curvature_y: CurvatureRadius,
    curvature_z: CurvatureRadius,
}

impl PlateTarget {
    pub fn new(
        side_m: f64,
        curvature_y: CurvatureRadius,
        curvature_z: CurvatureRadius,
    ) -> Result<Self> {
        ensure_positive("plate side", side_m)?;
        for c in [curvature_y, curvature_z] {
            if let CurvatureRadius::Finite(r) = c {
                ensure_positive("curvature radius", r)?;
            }
        }
        Ok(Self {
            side_m,
            curvature_y,
            curvature_z,
        })
    }

    pub fn flat(side_m: f64) -> Result<Self> {
        Self::new(side_m, CurvatureRadius::Infinite, CurvatureRadius::Infinite)
    }

    pub fn side_m(&self) -> f64 {
        self.side_m
    }

    pub fn curvature_y(&self) -> CurvatureRadius {
        self.curvature_y
    }

    pub fn curvature_z(&self) -> CurvatureRadius {
        self.curvature_z
    }

    pub fn is_flat(&self) -> bool {
        self.curvature_y.is_infinite() && self.curvature_z.is_infinite()
    }

    /// Fraunhofer distance `2a²/λ`.
    pub fn fraunhofer_distance(&self, wavelength_m: f64) -> f64 {
        2.0 * self.side_m * self.side_m / wavelength_m
    }

    /// Same plate with the two curvature radii swapped.
    pub fn transposed(&self) -> Self {
        Self {
            side_m: self.side_m,
            curvature_y: self.curvature_z,
            curvature_z: self.curvature_y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveDistances {
    pub r_tilde_y: f64,
    pub r_tilde_z: f64,
}

pub fn effective_distances(range_m: f64, target: &PlateTarget) -> Result<EffectiveDistances> {
    ensure_positive("range", range_m)?;
    Ok(EffectiveDistances {
        r_tilde_y: target.curvature_y.effective_distance(range_m),
        r_tilde_z: target.curvature_z.effective_distance(range_m),
    })
}
