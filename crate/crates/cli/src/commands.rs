use std::fmt::Write as _;

use anyhow::{bail, Result};
use radprop::config::Settings;
use radprop::netsim::success_probability;
use radprop::report::{gamma_csv, power_csv, rcs_csv, success_csv, PowerModels, RcsBlock};
use radprop::scattering::{
    oracle_scattered_field, scattered_field, scattered_field_far, scattered_field_raytracing,
    CurvatureRadius, DipoleSource, PlateTarget, QuadratureSpec, RadiationPattern,
};
use radprop::specfun::{log_grid, GammaApproxOrder};

use crate::UsageError;

pub fn gamma(x: Option<f64>, x_min: f64, x_max: f64, points: usize, n: u32) -> Result<String> {
    let order = GammaApproxOrder::new(n).map_err(|e| UsageError(format!("--n: {e}")))?;
    let xs: Vec<f64> = match x {
        Some(x) if x >= 0.0 && x.is_finite() => vec![x],
        Some(x) => bail!(UsageError(format!(
            "--x must be a finite, non-negative number, got {x}"
        ))),
        None => {
            if !(x_min > 0.0 && x_min < x_max && x_max.is_finite()) {
                bail!(UsageError(format!(
                    "need 0 < x-min < x-max, got [{x_min}, {x_max}]"
                )));
            }
            if points < 2 {
                bail!(UsageError("--points must be at least 2".into()));
            }
            log_grid(x_min, x_max, points).collect()
        }
    };
    Ok(gamma_csv(&xs, order)?)
}

/// `"Cy:Cz"`, each `inf` or metres.
fn parse_curvature_pair(s: &str) -> Result<(CurvatureRadius, CurvatureRadius)> {
    let Some((y, z)) = s.split_once(':') else {
        bail!(UsageError(format!(
            "curvature pair `{s}` must look like `Cy:Cz`, e.g. `inf:5`"
        )));
    };
    let parse = |v: &str| {
        v.parse::<CurvatureRadius>()
            .map_err(|e| UsageError(format!("curvature `{v}`: {e}")))
    };
    Ok((parse(y)?, parse(z)?))
}

pub struct RcsSweep {
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
    pub frequencies_ghz: Vec<f64>,
    pub curvatures: Vec<String>,
}

pub fn rcs(settings: &Settings, sweep: &RcsSweep) -> Result<String> {
    if !(sweep.r_min > 0.0 && sweep.r_min < sweep.r_max && sweep.r_max.is_finite())
        || sweep.points < 2
    {
        bail!(UsageError(format!(
            "need 0 < r-min < r-max and at least 2 points, got [{}, {}] with {}",
            sweep.r_min, sweep.r_max, sweep.points
        )));
    }
    let mut blocks = Vec::new();
    for &f in &sweep.frequencies_ghz {
        let radio = settings
            .radio
            .with_carrier_frequency(f * 1e9)
            .map_err(|e| UsageError(format!("--frequencies-ghz: {e}")))?;
        for pair in &sweep.curvatures {
            let (cy, cz) = parse_curvature_pair(pair)?;
            let target = PlateTarget::new(settings.plate.side_m(), cy, cz)?;
            blocks.push(RcsBlock {
                label: format!("fc_ghz={f} cy_m={cy} cz_m={cz}"),
                target,
                radio,
            });
        }
    }
    let distances: Vec<f64> = log_grid(sweep.r_min, sweep.r_max, sweep.points).collect();
    Ok(rcs_csv(&blocks, &distances, settings.approx_order)?)
}

pub fn power(settings: &Settings) -> Result<String> {
    let models = PowerModels {
        radio: settings.radio,
        pathloss: settings.pathloss,
        target: settings.plate,
        const_rcs_m2: settings.const_rcs_m2,
        order: settings.approx_order,
    };
    Ok(power_csv(&models, &settings.distances_m)?)
}

pub fn simulate(settings: &Settings) -> Result<String> {
    let mut curves = Vec::new();
    for (label, target) in settings.targets() {
        let scenario = settings.scenario(target);
        let curve = success_probability(
            &scenario,
            &settings.distances_m,
            settings.trials,
            settings.seed,
            None,
        )?;
        curves.push((label, curve));
    }
    Ok(success_csv(&curves)?)
}

#[derive(Debug, Clone, Copy)]
enum ClosedForm {
    RayTracing,
    General,
    Far,
}

impl ClosedForm {
    fn name(self) -> &'static str {
        match self {
            Self::RayTracing => "raytracing",
            Self::General => "general",
            Self::Far => "far_field",
        }
    }
}

/// Closed-form fields against the physical-optics quadrature, on plates
/// scaled in wavelengths of the configured carrier.
pub fn oracle(settings: &Settings, points_per_wavelength: f64) -> Result<String> {
    use ClosedForm::*;
    let radio = settings.radio;
    let lambda = radio.wavelength();
    let flat = |a: f64| PlateTarget::flat(a * lambda);
    let fin = |c: f64| CurvatureRadius::Finite(c * lambda);
    let cases = [
        ("flat_a40", flat(40.0)?, 8.0, RayTracing),
        ("flat_a20", flat(20.0)?, 4.0, RayTracing),
        ("flat_a10", flat(10.0)?, 50.0, General),
        ("flat_a10", flat(10.0)?, 100.0, General),
        ("flat_a10", flat(10.0)?, 1000.0, General),
        ("flat_a10", flat(10.0)?, 1000.0, Far),
        (
            "curved_a10_cy5_cz5",
            PlateTarget::new(10.0 * lambda, fin(5.0), fin(5.0))?,
            50.0,
            General,
        ),
        (
            "curved_a10_cy5",
            PlateTarget::new(10.0 * lambda, fin(5.0), CurvatureRadius::Infinite)?,
            50.0,
            General,
        ),
    ];
    let source = DipoleSource::from_radio(&radio, RadiationPattern::ShortDipole);
    let spec = QuadratureSpec {
        points_per_wavelength,
        ..QuadratureSpec::default()
    };
    let mut out = String::from(
        "case,range_wavelengths,closed_form,closed_form_abs,oracle_abs,rel_err,points_per_axis,refinements\n",
    );
    for (name, target, r_lambda, form) in cases {
        let r = r_lambda * lambda;
        let closed = match form {
            RayTracing => scattered_field_raytracing(r, &source, &radio)?,
            General => scattered_field(r, &target, &source, &radio)?,
            Far => scattered_field_far(r, &target, &source, &radio)?,
        }
        .norm();
        let o = oracle_scattered_field(r, &target, &source, &radio, &spec)?;
        let oracle_abs = o.field.norm();
        let rel = (closed - oracle_abs).abs() / oracle_abs;
        if [closed, oracle_abs, rel].iter().any(|v| v.is_nan()) {
            return Err(radprop::Error::NotANumber {
                what: format!("oracle case {name}"),
            }
            .into());
        }
        let _ = writeln!(
            out,
            "{name},{r_lambda},{},{closed},{oracle_abs},{rel},{},{}",
            form.name(),
            o.points_per_axis,
            o.refinements
        );
    }
    Ok(out)
}
