//! Closed-form scattered fields against the physical-optics quadrature on
//! desk-scaled plates (λ = 1 m, so lengths read in wavelengths).

use std::f64::consts::FRAC_PI_8;

use radprop::scattering::{
    effective_distances, oracle_scattered_field, scattered_field, scattered_field_raytracing,
    spa_valid, taylor_valid, CurvatureRadius, DipoleSource, PlateTarget, QuadratureSpec,
    RadiationPattern, DEFAULT_MARGIN,
};
use radprop::units::SPEED_OF_LIGHT;
use radprop::RadioConfig;

fn radio() -> RadioConfig {
    RadioConfig::new(SPEED_OF_LIGHT, 1.0, 1.0, 0.3).unwrap()
}

fn plates() -> Vec<PlateTarget> {
    let c = CurvatureRadius::Finite;
    let inf = CurvatureRadius::Infinite;
    [
        (10.0, inf, inf),
        (20.0, inf, inf),
        (40.0, inf, inf),
        (10.0, c(5.0), c(5.0)),
        (10.0, c(5.0), inf),
        (20.0, c(10.0), c(10.0)),
    ]
    .into_iter()
    .map(|(a, cy, cz)| PlateTarget::new(a, cy, cz).unwrap())
    .collect()
}

fn ranges() -> impl Iterator<Item = f64> {
    (1..=10).map(|i| f64::from(1 << i))
}

struct Point {
    label: String,
    rel_err: f64,
    /// `max(R̃y, R̃z)/R_F`, the argument of the near-field Γ ripple.
    x: f64,
}

/// Every (plate, range) pair accepted by `keep`, compared against the
/// closed form the regime calls for: ray tracing for a flat plate in the
/// stationary-phase regime, the Γ form everywhere else.
fn sweep(keep: impl Fn(f64, &PlateTarget) -> bool, flat_uses_raytracing: bool) -> Vec<Point> {
    let radio = radio();
    let source = DipoleSource::from_radio(&radio, RadiationPattern::ShortDipole);
    let spec = QuadratureSpec::default();
    let mut points = Vec::new();
    for t in plates() {
        for r in ranges().filter(|&r| keep(r, &t)) {
            let closed = if flat_uses_raytracing && t.is_flat() {
                scattered_field_raytracing(r, &source, &radio)
            } else {
                scattered_field(r, &t, &source, &radio)
            }
            .unwrap()
            .norm();
            let oracle = oracle_scattered_field(r, &t, &source, &radio, &spec)
                .unwrap()
                .field
                .norm();
            let d = effective_distances(r, &t).unwrap();
            points.push(Point {
                label: format!(
                    "a={} Cy={} Cz={} R={r}",
                    t.side_m(),
                    t.curvature_y(),
                    t.curvature_z()
                ),
                rel_err: (closed - oracle).abs() / oracle,
                x: d.r_tilde_y.max(d.r_tilde_z) / t.fraunhofer_distance(radio.wavelength()),
            });
        }
    }
    points
}

fn taylor_regime() -> Vec<Point> {
    sweep(
        |r, t| taylor_valid(r, t, &radio(), FRAC_PI_8).unwrap(),
        false,
    )
}

fn spa_regime() -> Vec<Point> {
    sweep(
        |r, t| spa_valid(r, t, &radio(), 1, DEFAULT_MARGIN).unwrap().both(),
        true,
    )
}

#[test]
fn taylor_regime_matches_within_five_percent() {
    let points = taylor_regime();
    assert!(points.len() >= 20, "{}", points.len());
    for p in &points {
        assert!(p.rel_err < 0.05, "{}: {:.2}%", p.label, 100.0 * p.rel_err);
    }
}

/// The stationary-phase closed forms drop the edge contributions, whose
/// relative size is the Γ ripple; the disagreement stays inside that
/// envelope, `3√x`.
#[test]
fn spa_regime_deviation_is_within_the_near_field_ripple() {
    let points = spa_regime();
    assert!(points.len() >= 20, "{}", points.len());
    for p in &points {
        assert!(
            p.rel_err < 3.0 * p.x.sqrt(),
            "{}: {:.2}% at x = {:.4}",
            p.label,
            100.0 * p.rel_err,
            p.x
        );
    }
}

#[test]
#[ignore = "known deviation: edge-diffraction ripple reaches 27% at SPA-valid points; see README"]
fn spa_regime_matches_within_five_percent() {
    let bad: Vec<String> = spa_regime()
        .iter()
        .filter(|p| p.rel_err >= 0.05)
        .map(|p| format!("{}: {:.2}%", p.label, 100.0 * p.rel_err))
        .collect();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
