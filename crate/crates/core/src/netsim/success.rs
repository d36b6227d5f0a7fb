use rayon::prelude::*;

use crate::error::{Error, Result};

use super::realization::sample_realization;
use super::rng::{StreamPurpose, TrialStreams};
use super::scenario::{ScenarioConfig, SwerlingKind};
use super::sinr::interference_power;
use super::swerling::unit_fluctuation;

/// Two-sided 95% normal quantile.
const Z_95: f64 = 1.96;

/// Monte Carlo estimate of the success probability versus target distance.
#[derive(Debug, Clone, PartialEq)]
pub struct SuccessCurve {
    pub distances_m: Vec<f64>,
    pub success_prob: Vec<f64>,
    /// Half-width of the 95% normal-approximation confidence interval.
    pub ci_halfwidth: Vec<f64>,
    pub num_trials: u64,
    pub seed: u64,
    pub model: &'static str,
    pub swerling: SwerlingKind,
}

/// Estimates `P(SINR ≥ threshold)` at each distance.
///
/// Trial `t` draws its road realization and one RCS fluctuation of the
/// target from streams keyed by `(seed, t)`, so results do not depend on the
/// thread count. All distances and all target models evaluated with the
/// same seed see the same traffic and the same fluctuation draw; each
/// distance still has the exact marginal law, and a model whose echo power
/// decreases with distance yields a non-increasing curve in every trial.
/// Per-distance success counts are reduced by integer addition.
pub fn success_probability(
    cfg: &ScenarioConfig,
    distances_m: &[f64],
    num_trials: u64,
    seed: u64,
    threads: Option<usize>,
) -> Result<SuccessCurve> {
    if num_trials == 0 {
        return Err(Error::InvalidParameter {
            name: "number of trials",
            reason: "must be positive".into(),
        });
    }
    if distances_m.is_empty() {
        return Err(Error::InvalidParameter {
            name: "distances",
            reason: "need at least one target distance".into(),
        });
    }
    let max_d = distances_m.iter().copied().fold(0.0, f64::max);
    cfg.validate(max_d)?;
    let echo: Vec<f64> = distances_m
        .iter()
        .map(|&d| cfg.target.echo_power(d, &cfg.radio, &cfg.pathloss))
        .collect::<Result<_>>()?;

    let run = || count_successes(cfg, &echo, num_trials, seed);
    let counts = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameter {
                name: "threads",
                reason: e.to_string(),
            })?
            .install(run)?,
        None => run()?,
    };

    let n = num_trials as f64;
    let success_prob: Vec<f64> = counts.iter().map(|&c| c as f64 / n).collect();
    let ci_halfwidth = success_prob
        .iter()
        .map(|&p| Z_95 * (p * (1.0 - p) / n).sqrt())
        .collect();
    Ok(SuccessCurve {
        distances_m: distances_m.to_vec(),
        success_prob,
        ci_halfwidth,
        num_trials,
        seed,
        model: cfg.target.kind_name(),
        swerling: cfg.swerling,
    })
}

fn count_successes(
    cfg: &ScenarioConfig,
    echo: &[f64],
    num_trials: u64,
    seed: u64,
) -> Result<Vec<u64>> {
    (0..num_trials)
        .into_par_iter()
        .try_fold(
            || vec![0u64; echo.len()],
            |mut acc, trial| {
                let streams = TrialStreams::new(seed, trial);
                let realization = sample_realization(cfg, &streams);
                let denom = cfg.noise_power_w + interference_power(&realization, cfg)?;
                let needed = cfg.sinr_threshold * denom;
                let u = unit_fluctuation(
                    cfg.swerling,
                    &mut streams.stream(StreamPurpose::Fluctuation),
                );
                for (count, &p) in acc.iter_mut().zip(echo) {
                    if p * u >= needed {
                        *count += 1;
                    }
                }
                Ok(acc)
            },
        )
        .try_reduce(
            || vec![0u64; echo.len()],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netsim::TargetModel;
    use crate::propagation::ReflectionCoefficient;

    fn cfg(swerling: SwerlingKind) -> ScenarioConfig {
        ScenarioConfig::table1(
            TargetModel::RayTracing {
                rho: ReflectionCoefficient::pec(),
            },
            swerling,
        )
    }

    const D: [f64; 4] = [10.0, 20.0, 40.0, 80.0];

    #[test]
    fn deterministic_across_thread_counts() {
        let c = cfg(SwerlingKind::I);
        let a = success_probability(&c, &D, 2000, 5, Some(1)).unwrap();
        let b = success_probability(&c, &D, 2000, 5, Some(4)).unwrap();
        let d = success_probability(&c, &D, 2000, 5, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, d);
        let other = success_probability(&c, &D, 2000, 6, Some(2)).unwrap();
        assert_ne!(a.success_prob, other.success_prob);
    }

    #[test]
    fn rejects_zero_trials_and_short_road() {
        let c = cfg(SwerlingKind::I);
        assert!(success_probability(&c, &D, 0, 1, None).is_err());
        assert!(success_probability(&c, &[600.0], 10, 1, None).is_err());
    }

    #[test]
    fn noiseless_interference_free_always_succeeds() {
        let mut c = cfg(SwerlingKind::V);
        c.noise_power_w = 0.0;
        c.interference_probability = 0.0;
        let s = success_probability(&c, &D, 100, 1, None).unwrap();
        assert!(s.success_prob.iter().all(|&p| p == 1.0));
        assert!(s.ci_halfwidth.iter().all(|&h| h == 0.0));
    }

    #[test]
    fn monotone_in_threshold_and_activity() {
        let base = cfg(SwerlingKind::I);
        let mut strict = base.clone();
        strict.sinr_threshold *= 2.0;
        let mut busy = base.clone();
        busy.interference_probability = 0.2;
        let a = success_probability(&base, &D, 3000, 9, None).unwrap();
        let b = success_probability(&strict, &D, 3000, 9, None).unwrap();
        let c = success_probability(&busy, &D, 3000, 9, None).unwrap();
        for i in 0..D.len() {
            assert!(b.success_prob[i] <= a.success_prob[i]);
            assert!(c.success_prob[i] <= a.success_prob[i]);
        }
    }

    #[test]
    fn insensitive_to_longer_road() {
        let mut c = cfg(SwerlingKind::III);
        c.road_halflength_m = 10.0 * 80.0;
        let a = success_probability(&c, &D, 20_000, 2, None).unwrap();
        c.road_halflength_m *= 2.0;
        let b = success_probability(&c, &D, 20_000, 2, None).unwrap();
        for i in 0..D.len() {
            let diff = (a.success_prob[i] - b.success_prob[i]).abs();
            assert!(
                diff <= a.ci_halfwidth[i].max(b.ci_halfwidth[i]) + 1e-12,
                "{i}: {diff}"
            );
        }
    }

    #[test]
    fn noise_only_matches_exponential_law() {
        let mut c = cfg(SwerlingKind::I);
        c.interference_probability = 0.0;
        let d = [20.0];
        let s = success_probability(&c, &d, 20_000, 11, None).unwrap();
        let p = c.target.echo_power(20.0, &c.radio, &c.pathloss).unwrap();
        let expected = (-c.sinr_threshold * c.noise_power_w / p).exp();
        assert!(
            (s.success_prob[0] - expected).abs() <= s.ci_halfwidth[0] * 1.5,
            "{s:?} vs {expected}"
        );
    }
}
