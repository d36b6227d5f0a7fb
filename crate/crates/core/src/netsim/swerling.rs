use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma};

use crate::error::{Error, Result};

use super::scenario::SwerlingKind;

/// Fluctuating RCS with a given mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwerlingModel {
    pub kind: SwerlingKind,
    pub mean_rcs: f64,
}

impl SwerlingModel {
    pub fn new(kind: SwerlingKind, mean_rcs: f64) -> Result<Self> {
        if !(mean_rcs >= 0.0 && mean_rcs.is_finite()) {
            return Err(Error::Domain {
                what: "mean RCS",
                value: mean_rcs,
            });
        }
        Ok(Self { kind, mean_rcs })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.mean_rcs * unit_fluctuation(self.kind, rng)
    }
}

/// Unit-mean fluctuation factor.
pub fn unit_fluctuation<R: Rng + ?Sized>(kind: SwerlingKind, rng: &mut R) -> f64 {
    match kind {
        SwerlingKind::I => Exp1.sample(rng),
        // chi-square with 4 DOF scaled to unit mean: Gamma(k = 2, θ = 1/2)
        SwerlingKind::III => Gamma::new(2.0, 0.5)
            .expect("valid gamma parameters")
            .sample(rng),
        SwerlingKind::V => 1.0,
    }
}
