use thiserror::Error;

/// Errors raised by the numerical kernels, the simulator and the config loader.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} is out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error(
        "quadrature grid under-resolved: {points_per_oscillation:.2} points per oscillation, \
         {points_per_wavelength:.2} points per wavelength"
    )]
    UnderResolved {
        points_per_oscillation: f64,
        points_per_wavelength: f64,
    },

    #[error("quadrature did not converge after {levels} refinements (last relative change {last_change:.3e})")]
    NoConvergence { levels: usize, last_change: f64 },

    #[error("{what} evaluated to NaN")]
    NotANumber { what: String },

    #[error("config key `{key}`: {reason}")]
    Config { key: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_positive(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}
