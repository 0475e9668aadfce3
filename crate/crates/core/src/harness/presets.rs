//! Named experiment configurations.
//!
//! Each preset is one of the support-recovery scenarios the library is
//! benchmarked on: a shared recipe (k = 10 joint support, k_hat = 15,
//! normal signal entries) with varying measurement ensemble, corruption
//! model, and projection budgets. Trial count and seed are defaults that
//! callers typically override.

use crate::error::{Error, Result};
use crate::problems::{CorruptionSpec, Ensemble, SupportPlacement};
use crate::sampling::SamplingScheme;

use super::{AlgorithmChoice, Budget, ExperimentConfig};

pub(crate) const DEFAULT_TRIALS: usize = 40;
pub(crate) const DEFAULT_SEED: u64 = 42;

const NAMES: [&str; 8] = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3", "fig4", "fig5", "fig7",
];

/// Names of all built-in presets, in listing order.
pub fn preset_names() -> &'static [&'static str] {
    &NAMES
}

/// Look up a built-in experiment configuration by name.
pub fn preset(name: &str) -> Result<ExperimentConfig<f64>> {
    let base = ExperimentConfig {
        m: 1000,
        n: 100,
        k: 10,
        k_hat: 15,
        signals: 300,
        ensemble: Ensemble::Gaussian,
        placement: SupportPlacement::UniformRandom,
        corruption: CorruptionSpec::fixed(1, 7.0, 1.0),
        algorithm: AlgorithmChoice::Both,
        budget: Budget::PerSignal(40),
        trials: DEFAULT_TRIALS,
        seed: DEFAULT_SEED,
        sampling: SamplingScheme::NormProportional,
        carry_joint_estimate: true,
    };
    let online = Budget::Online {
        p_stall: 0.1,
        short: (5, 15),
        long: (95, 100),
    };
    match name {
        // Large spike corruptions, one per signal.
        "fig1a" => Ok(base),
        "fig1b" => Ok(ExperimentConfig {
            ensemble: Ensemble::Uniform01,
            budget: Budget::PerSignal(80),
            signals: 600,
            ..base
        }),
        // Corruptions at signal scale instead of spikes.
        "fig2a" => Ok(ExperimentConfig {
            corruption: CorruptionSpec::fixed(1, 0.0, 1.0),
            ..base
        }),
        "fig2b" => Ok(ExperimentConfig {
            ensemble: Ensemble::Uniform01,
            corruption: CorruptionSpec::fixed(1, 0.0, 1.0),
            budget: Budget::PerSignal(80),
            signals: 600,
            ..base
        }),
        // One to three corruptions per signal.
        "fig3" => Ok(ExperimentConfig {
            corruption: CorruptionSpec::ranged(1, 3, 7.0, 1.0),
            budget: Budget::PerSignal(50),
            ..base
        }),
        // Online arrival: most signals get a short budget, a few stall
        // long. Only the online solver applies.
        "fig4" => Ok(ExperimentConfig {
            corruption: CorruptionSpec::ranged(1, 3, 7.0, 1.0),
            algorithm: AlgorithmChoice::Cmmv,
            budget: online,
            signals: 800,
            ..base
        }),
        // The same online setting on an underdetermined system.
        "fig5" => Ok(ExperimentConfig {
            m: 100,
            n: 500,
            corruption: CorruptionSpec::ranged(1, 3, 7.0, 1.0),
            algorithm: AlgorithmChoice::Cmmv,
            budget: online,
            signals: 1500,
            ..base
        }),
        // Tomography-shaped dimensions with a contiguous support block.
        "fig7" => Ok(ExperimentConfig {
            m: 248,
            n: 541,
            signals: 200,
            placement: SupportPlacement::ContiguousBlock,
            corruption: CorruptionSpec::ranged(1, 3, 7.0, 1.0),
            algorithm: AlgorithmChoice::Cmmv,
            budget: Budget::PerSignal(100),
            ..base
        }),
        other => Err(Error::invalid(
            "preset",
            format!(
                "unknown preset `{other}` (expected one of {})",
                NAMES.join(", ")
            ),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_listed_presets_resolve_and_validate() {
        for name in preset_names() {
            let config = preset(name).unwrap();
            config.validate().unwrap();
        }
        assert_eq!(preset_names().len(), 8);
    }

    #[test]
    fn unknown_preset_is_rejected() {
        assert!(preset("fig6").is_err());
    }

    #[test]
    fn fig1a_parameters() {
        let c = preset("fig1a").unwrap();
        assert_eq!(
            (c.m, c.n, c.k, c.k_hat, c.signals),
            (1000, 100, 10, 15, 300)
        );
        assert_eq!(c.budget, Budget::PerSignal(40));
        assert_eq!(c.ensemble, Ensemble::Gaussian);
        assert_eq!(c.algorithm, AlgorithmChoice::Both);
    }

    #[test]
    fn fig1b_swaps_ensemble_and_budget() {
        let c = preset("fig1b").unwrap();
        assert_eq!(c.ensemble, Ensemble::Uniform01);
        assert_eq!(c.budget, Budget::PerSignal(80));
        assert_eq!(c.signals, 600);
        assert_eq!(c.corruption.mean, 7.0);
    }

    #[test]
    fn fig2_uses_unit_scale_corruptions() {
        for name in ["fig2a", "fig2b"] {
            let c = preset(name).unwrap();
            assert_eq!(c.corruption.mean, 0.0);
            assert_eq!(c.corruption.std, 1.0);
            assert_eq!((c.corruption.count_min, c.corruption.count_max), (1, 1));
        }
    }

    #[test]
    fn fig3_varies_corruption_count() {
        let c = preset("fig3").unwrap();
        assert_eq!((c.corruption.count_min, c.corruption.count_max), (1, 3));
        assert_eq!(c.budget, Budget::PerSignal(50));
        assert!(c.describe().contains("corruptions=1..3"));
    }

    #[test]
    fn fig4_and_fig5_are_online() {
        let c4 = preset("fig4").unwrap();
        assert_eq!(c4.signals, 800);
        assert_eq!(c4.algorithm, AlgorithmChoice::Cmmv);
        assert!(matches!(c4.budget, Budget::Online { .. }));
        let c5 = preset("fig5").unwrap();
        assert_eq!((c5.m, c5.n, c5.signals), (100, 500, 1500));
        assert_eq!(c5.budget, c4.budget);
    }

    #[test]
    fn fig7_shape() {
        let c = preset("fig7").unwrap();
        assert_eq!((c.m, c.n, c.signals), (248, 541, 200));
        assert_eq!(c.placement, SupportPlacement::ContiguousBlock);
        assert_eq!(c.algorithm, AlgorithmChoice::Cmmv);
    }
}
