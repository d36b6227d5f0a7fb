use std::f64::consts::PI;

use proptest::prelude::*;
use radprop::propagation::{
    friis_power, generalized_rcs, radar_power_const_rcs, radar_power_new, radar_power_new_approx,
    radar_power_raytracing, PathLossModel, ReflectionCoefficient,
};
use radprop::scattering::{
    effective_distances, rcs_curved, rcs_flat, CurvatureRadius, PlateTarget,
};
use radprop::specfun::{fresnel, gamma_fn, GammaApproxOrder, GAMMA_APPROX_N4_MAX_LOG_DEV};
use radprop::RadioConfig;

fn curvature() -> impl Strategy<Value = CurvatureRadius> {
    prop_oneof![
        Just(CurvatureRadius::Infinite),
        (0.05f64..1e4).prop_map(CurvatureRadius::Finite),
    ]
}

fn plate() -> impl Strategy<Value = PlateTarget> {
    (0.05f64..3.0, curvature(), curvature())
        .prop_map(|(a, cy, cz)| PlateTarget::new(a, cy, cz).unwrap())
}

fn radio() -> impl Strategy<Value = RadioConfig> {
    (1e9f64..100e9, 1e-3f64..10.0, 1.0f64..1e4)
        .prop_map(|(f, eirp, g)| RadioConfig::new(f, eirp, g, 0.3).unwrap())
}

fn log_range() -> impl Strategy<Value = f64> {
    (-1.0f64..4.0).prop_map(|e| 10f64.powf(e))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

proptest! {
    #[test]
    fn fresnel_is_odd(x in -10.0f64..10.0) {
        let f = fresnel(x).unwrap();
        let g = fresnel(-x).unwrap();
        prop_assert!((f + g).norm() < 1e-10);
        // 2F(x) = F(x) − F(−x)
        prop_assert!((2.0 * f - (f - g)).norm() < 1e-10);
    }

    #[test]
    fn rcs_is_symmetric_in_the_curvatures(t in plate(), r in log_range(), radio in radio()) {
        let a = rcs_curved(r, &t, &radio).unwrap();
        let b = rcs_curved(r, &t.transposed(), &radio).unwrap();
        prop_assert!(close(a, b, 1e-12), "{a} vs {b}");
    }

    #[test]
    fn curved_formula_reduces_to_the_flat_one(a in 0.05f64..3.0, r in log_range(), radio in radio()) {
        let flat = PlateTarget::flat(a).unwrap();
        prop_assert_eq!(rcs_curved(r, &flat, &radio).unwrap(), rcs_flat(r, &flat, &radio).unwrap());
        let huge = CurvatureRadius::Finite(1e15);
        let nearly = PlateTarget::new(a, huge, huge).unwrap();
        let (x, y) = (rcs_curved(r, &nearly, &radio).unwrap(), rcs_flat(r, &flat, &radio).unwrap());
        prop_assert!(close(x, y, 1e-6), "{x} vs {y}");
    }

    #[test]
    fn effective_distance_never_exceeds_range_or_radius(t in plate(), r in log_range()) {
        let d = effective_distances(r, &t).unwrap();
        for (rt, c) in [(d.r_tilde_y, t.curvature_y()), (d.r_tilde_z, t.curvature_z())] {
            prop_assert!(rt > 0.0 && rt <= r);
            match c {
                CurvatureRadius::Finite(c) => prop_assert!(rt <= c),
                CurvatureRadius::Infinite => prop_assert_eq!(rt, r),
            }
        }
    }

    #[test]
    fn generalized_rcs_reproduces_the_plate_model(
        t in plate(),
        r in log_range(),
        radio in radio(),
        alpha in prop_oneof![Just(2.0), Just(2.5), Just(3.0)],
        beta in 1.0f64..1e4,
    ) {
        let pl = PathLossModel::new(beta, alpha).unwrap();
        let sigma = generalized_rcs(r, &t, &radio, &pl).unwrap();
        let direct = radar_power_new(r, &t, &radio, &pl).unwrap();
        let via = radar_power_const_rcs(r, sigma, &radio, &pl).unwrap();
        prop_assert!(close(direct, via, 1e-13), "{direct} vs {via}");
    }

    #[test]
    fn free_space_generalized_rcs_is_the_plate_rcs(t in plate(), r in log_range(), radio in radio()) {
        let fs = PathLossModel::free_space();
        let a = generalized_rcs(r, &t, &radio, &fs).unwrap();
        let b = rcs_curved(r, &t, &radio).unwrap();
        prop_assert!(close(a, b, 1e-13), "{a} vs {b}");
    }

    #[test]
    fn powers_are_linear_in_eirp_and_receive_gain(
        t in plate(),
        r in log_range(),
        radio in radio(),
        scale in 0.01f64..100.0,
    ) {
        let pl = PathLossModel::new(4.0 * PI, 2.7).unwrap();
        let louder = radio.with_eirp(radio.eirp_w() * scale).unwrap();
        let keener = radio.with_receive_gain(radio.receive_gain() * scale).unwrap();
        let order = GammaApproxOrder::default();
        type Model = Box<dyn Fn(&RadioConfig) -> f64>;
        let models: [Model; 4] = [
            Box::new(move |rc| friis_power(r, rc, &pl).unwrap()),
            Box::new(move |rc| radar_power_const_rcs(r, 10.0, rc, &pl).unwrap()),
            Box::new(move |rc| radar_power_new(r, &t, rc, &pl).unwrap()),
            Box::new(move |rc| radar_power_new_approx(r, &t, rc, &pl, order).unwrap()),
        ];
        for m in &models {
            let base = m(&radio);
            prop_assert!(close(m(&louder), scale * base, 1e-12));
            prop_assert!(close(m(&keener), scale * base, 1e-12));
        }
    }

    #[test]
    fn pec_ray_tracing_is_friis_at_twice_the_range(
        r in log_range(),
        radio in radio(),
        alpha in 2.0f64..4.0,
    ) {
        let pl = PathLossModel::new(4.0 * PI, alpha).unwrap();
        let rt = radar_power_raytracing(r, ReflectionCoefficient::pec(), &radio, &pl).unwrap();
        prop_assert!(close(rt, friis_power(2.0 * r, &radio, &pl).unwrap(), 1e-14));
    }

    #[test]
    fn approximate_power_stays_within_the_envelope(
        r in 5.0f64..150.0,
        curved in any::<bool>(),
        alpha in prop_oneof![Just(2.0), Just(2.5), Just(3.0)],
    ) {
        // the plates of the success-probability comparison
        let cz = if curved { CurvatureRadius::Finite(5.0) } else { CurvatureRadius::Infinite };
        let t = PlateTarget::new(1.0, CurvatureRadius::Infinite, cz).unwrap();
        let radio = RadioConfig::table1();
        let pl = PathLossModel::new(4.0 * PI, alpha).unwrap();
        let exact = radar_power_new(r, &t, &radio, &pl).unwrap();
        let approx = radar_power_new_approx(r, &t, &radio, &pl, GammaApproxOrder::default()).unwrap();
        prop_assert!((approx / exact).ln().abs() <= alpha * (GAMMA_APPROX_N4_MAX_LOG_DEV + 1e-5));
    }
}

#[test]
fn curved_plate_regimes() {
    let radio = RadioConfig::table1();
    let c = 1.0;
    let t = PlateTarget::new(1.0, CurvatureRadius::Finite(c), CurvatureRadius::Finite(c)).unwrap();
    assert!(c < t.fraunhofer_distance(radio.wavelength()) / 100.0);
    // R ≪ C: σ/πR² within the near-field ripple of Γ(R̃/R_F) ≈ Γ(2e-5)
    let r = c / 1000.0;
    let ratio = rcs_curved(r, &t, &radio).unwrap() / (PI * r * r);
    assert!((ratio - 1.0).abs() < 0.05, "{ratio}");
    // R ≫ C: R̃ → C, so σ settles to the constant πC²|Γ(C/R_F)|²
    let rf = t.fraunhofer_distance(radio.wavelength());
    let limit = PI * c * c * gamma_fn(c / rf).unwrap().norm_sqr();
    let far: Vec<f64> = [1e4, 1e5, 1e6]
        .iter()
        .map(|&r| rcs_curved(r, &t, &radio).unwrap())
        .collect();
    for s in &far {
        assert!(close(*s, limit, 0.005), "{far:?} vs {limit}");
    }
}

#[test]
fn flat_plate_far_field_plateau_is_pi_rf_squared() {
    let radio = RadioConfig::table1();
    let t = PlateTarget::flat(0.5).unwrap();
    let rf = t.fraunhofer_distance(radio.wavelength());
    let s = rcs_flat(1e4 * rf, &t, &radio).unwrap();
    assert!(close(s, PI * rf * rf, 1e-3), "{s}");
}
