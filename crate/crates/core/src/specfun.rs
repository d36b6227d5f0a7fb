//! Complex Fresnel integral and the Γ transition function.
//!
//! ```text
//! F(x) = ∫₀ˣ exp(jπt²/2) dt
//! Γ(x) = 2 (F*(√(1/(2x))))²
//! ```
//!
//! `F` is evaluated with its Maclaurin series for `|x| ≤ FRESNEL_SWITCH` and
//! with a Lentz continued fraction of the complementary error function
//! beyond, using `F(x) = (1+j)/2 · erf((1−j)·√π/2 · x)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Crossover between the power series and the continued fraction.
pub const FRESNEL_SWITCH: f64 = 1.5;

const SERIES_MAX_TERMS: usize = 200;
const CF_MAX_ITER: usize = 2000;
const TINY: f64 = 1e-300;

/// Largest `| |Γ(x)| − (1+x⁴)^(−1/4) |` over a 20 001-point log grid on
/// `[1e−2, 1e2]`, pinned from [`approximation_envelope`].
pub const GAMMA_APPROX_N4_MAX_ABS_DEV: f64 = 0.804_83;

/// Largest `|ln((1+x⁴)^(−1/4) / |Γ(x)|)|` over the same grid. Bounds the
/// ratio between approximate and exact received powers.
pub const GAMMA_APPROX_N4_MAX_LOG_DEV: f64 = 0.592_01;

/// Exponent `n` of the closed-form modulus approximation of Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GammaApproxOrder(u32);

impl GammaApproxOrder {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter {
                name: "approximation order",
                reason: "must be at least 1".into(),
            });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for GammaApproxOrder {
    fn default() -> Self {
        Self(4)
    }
}

/// Complex Fresnel integral `F(x) = C(x) + jS(x)`.
pub fn fresnel(x: f64) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(Error::Domain {
            what: "Fresnel argument",
            value: x,
        });
    }
    let ax = x.abs();
    let value = if ax == 0.0 {
        Complex64::new(0.0, 0.0)
    } else if ax <= FRESNEL_SWITCH {
        fresnel_series(ax)
    } else {
        fresnel_continued_fraction(ax)
    };
    Ok(if x < 0.0 { -value } else { value })
}

/// Maclaurin series `Σ (jπ/2)ⁿ x^(2n+1) / (n! (2n+1))`.
pub(crate) fn fresnel_series(x: f64) -> Complex64 {
    let step = Complex64::new(0.0, FRAC_PI_2 * x * x);
    let mut term = Complex64::new(x, 0.0);
    let mut sum = term;
    for n in 1..SERIES_MAX_TERMS {
        term = term * step / n as f64;
        let contribution = term / (2 * n + 1) as f64;
        sum += contribution;
        if contribution.norm() <= f64::EPSILON * 0.25 * sum.norm() {
            break;
        }
    }
    sum
}

/// Continued fraction for `x > 0`, accurate once `x ≳ 1`.
pub(crate) fn fresnel_continued_fraction(x: f64) -> Complex64 {
    let pix2 = PI * x * x;
    let mut b = Complex64::new(1.0, -pix2);
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    let mut n = -1.0;
    for _ in 1..CF_MAX_ITER {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += Complex64::new(4.0, 0.0);
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm() < 4.0 * f64::EPSILON {
            break;
        }
    }
    h *= Complex64::new(x, -x);
    let phase = half_pi_square_phase(x);
    let unit = Complex64::new(phase.cos(), phase.sin());
    Complex64::new(0.5, 0.5) * (Complex64::new(1.0, 0.0) - unit * h)
}

/// `πx²/2` reduced modulo 2π without losing the low-order bits of `x²`.
fn half_pi_square_phase(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    let reduced = hi % 4.0 + lo;
    FRAC_PI_2 * reduced
}

/// Γ transition function. `Γ(0) = −j` is returned as the analytic limit.
pub fn gamma_fn(x: f64) -> Result<Complex64> {
    if x.is_nan() || x < 0.0 || x.is_infinite() {
        return Err(Error::Domain {
            what: "Γ argument",
            value: x,
        });
    }
    let arg = (0.5 / x).sqrt();
    if x == 0.0 || !arg.is_finite() {
        return Ok(Complex64::new(0.0, -1.0));
    }
    let f = fresnel(arg)?.conj();
    Ok(f * f * 2.0)
}

/// Closed-form modulus approximation `(1/(1+xⁿ))^(1/n)`.
pub fn gamma_mod_approx(x: f64, order: GammaApproxOrder) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain {
            what: "Γ approximation argument",
            value: x,
        });
    }
    let n = f64::from(order.get());
    // factor out x beyond the knee so xⁿ never overflows
    Ok(if x <= 1.0 {
        (1.0 + x.powf(n)).powf(-1.0 / n)
    } else {
        (1.0 + x.powf(-n)).powf(-1.0 / n) / x
    })
}

/// Deviation between `|Γ|` and its closed-form approximation over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxEnvelope {
    pub max_abs_dev: f64,
    pub argmax_abs: f64,
    pub max_log_dev: f64,
    pub argmax_log: f64,
}

/// Scans `points` log-spaced abscissae on `[x_min, x_max]`.
pub fn approximation_envelope(
    order: GammaApproxOrder,
    x_min: f64,
    x_max: f64,
    points: usize,
) -> Result<ApproxEnvelope> {
    if !(x_min > 0.0 && x_max > x_min && points >= 2) {
        return Err(Error::InvalidParameter {
            name: "envelope grid",
            reason: format!(
                "need 0 < x_min < x_max and ≥ 2 points, got [{x_min}, {x_max}] × {points}"
            ),
        });
    }
    let mut env = ApproxEnvelope {
        max_abs_dev: 0.0,
        argmax_abs: x_min,
        max_log_dev: 0.0,
        argmax_log: x_min,
    };
    for x in log_grid(x_min, x_max, points) {
        let exact = gamma_fn(x)?.norm();
        let approx = gamma_mod_approx(x, order)?;
        let abs_dev = (approx - exact).abs();
        let log_dev = (approx / exact).ln().abs();
        if abs_dev > env.max_abs_dev {
            env.max_abs_dev = abs_dev;
            env.argmax_abs = x;
        }
        if log_dev > env.max_log_dev {
            env.max_log_dev = log_dev;
            env.argmax_log = x;
        }
    }
    Ok(env)
}

/// `points` logarithmically spaced values from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> impl Iterator<Item = f64> {
    let (l0, l1) = (lo.ln(), hi.ln());
    let last = points.saturating_sub(1).max(1) as f64;
    (0..points).map(move |i| {
        if i == 0 {
            lo
        } else if i + 1 == points {
            hi
        } else {
            (l0 + (l1 - l0) * i as f64 / last).exp()
        }
    })
}
