//! Monte-Carlo experiment harness.
//!
//! A single [`ExperimentConfig`] describes a recovery experiment: problem
//! dimensions, corruption model, projection budgets, solver choice, trial
//! count, and a base seed. Trials run independently (in parallel when a
//! rayon pool is available), each producing a support-recovery curve over
//! cumulative projections; the harness aligns the per-trial step functions
//! on a common grid and reports pointwise mean and standard deviation.

mod csv;
mod presets;

pub use csv::write_csv;
pub use presets::{preset, preset_names};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::problems::{
    gen_online_schedule, generate, CorruptionSpec, Ensemble, InstanceSpec, SupportPlacement,
};
use crate::rng::Rng;
use crate::sampling::SamplingScheme;
use crate::scalar::Real;
use crate::solvers::{cmmv_srk, mmv_srk, CmmvParams, OnlineSchedule, SrkParams};
use crate::support::SupportSet;

/// Which solver(s) an experiment runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmChoice {
    Mmv,
    Cmmv,
    Both,
}

impl AlgorithmChoice {
    pub fn runs_mmv(self) -> bool {
        matches!(self, AlgorithmChoice::Mmv | AlgorithmChoice::Both)
    }

    pub fn runs_cmmv(self) -> bool {
        matches!(self, AlgorithmChoice::Cmmv | AlgorithmChoice::Both)
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmChoice::Mmv => "mmv",
            AlgorithmChoice::Cmmv => "cmmv",
            AlgorithmChoice::Both => "both",
        }
    }
}

/// Projection budgets for one experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Budget {
    /// Every signal gets the same number of projections.
    PerSignal(usize),
    /// Random per-signal budgets: with probability `p_stall` uniform in
    /// `long`, otherwise uniform in `short` (both inclusive).
    Online {
        p_stall: f64,
        short: (usize, usize),
        long: (usize, usize),
    },
}

impl Budget {
    fn realize(&self, signals: usize, rng: &mut Rng) -> Result<OnlineSchedule> {
        match *self {
            Budget::PerSignal(tau) => OnlineSchedule::uniform(signals, tau),
            Budget::Online {
                p_stall,
                short,
                long,
            } => gen_online_schedule(signals, p_stall, short, long, rng),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Budget::PerSignal(tau) => {
                if tau == 0 {
                    return Err(Error::invalid(
                        "budget",
                        "per-signal budget must be at least 1",
                    ));
                }
            }
            Budget::Online {
                p_stall,
                short,
                long,
            } => {
                if !(0.0..=1.0).contains(&p_stall) {
                    return Err(Error::invalid(
                        "p_stall",
                        format!("must be in [0, 1], got {p_stall}"),
                    ));
                }
                for (name, (lo, hi)) in [("short", short), ("long", long)] {
                    if lo == 0 || lo > hi {
                        return Err(Error::invalid(
                            name,
                            format!("must satisfy 1 <= lo <= hi, got [{lo}, {hi}]"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Budget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Budget::PerSignal(tau) => write!(f, "{tau}/signal"),
            Budget::Online {
                p_stall,
                short,
                long,
            } => write!(
                f,
                "online(p={p_stall}, short={}..{}, long={}..{})",
                short.0, short.1, long.0, long.1
            ),
        }
    }
}

/// Full description of one recovery experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentConfig<F> {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub k_hat: usize,
    /// Number of signal columns (J).
    pub signals: usize,
    pub ensemble: Ensemble,
    pub placement: SupportPlacement,
    pub corruption: CorruptionSpec<F>,
    pub algorithm: AlgorithmChoice,
    pub budget: Budget,
    pub trials: usize,
    pub seed: u64,
    pub sampling: SamplingScheme,
    pub carry_joint_estimate: bool,
}

impl<F: Real> ExperimentConfig<F> {
    pub fn validate(&self) -> Result<()> {
        self.instance_spec().validate()?;
        if self.k_hat == 0 || self.k_hat > self.n {
            return Err(Error::invalid(
                "k_hat",
                format!("must be in [1, {}], got {}", self.n, self.k_hat),
            ));
        }
        if self.trials == 0 {
            return Err(Error::invalid("trials", "need at least one trial"));
        }
        self.budget.validate()
    }

    fn instance_spec(&self) -> InstanceSpec<F> {
        InstanceSpec {
            m: self.m,
            n: self.n,
            k: self.k,
            signals: self.signals,
            ensemble: self.ensemble,
            placement: self.placement,
            corruption: self.corruption,
        }
    }

    /// One-line parameter summary, used by `list-presets`.
    pub fn describe(&self) -> String {
        let placement = match self.placement {
            SupportPlacement::UniformRandom => "random",
            SupportPlacement::ContiguousBlock => "contiguous",
        };
        format!(
            "m={} n={} k={} k_hat={} J={} ensemble={} support={} corruptions={}..{} \
             corrupt_mean={} corrupt_std={} budget={} algorithm={} trials={}",
            self.m,
            self.n,
            self.k,
            self.k_hat,
            self.signals,
            self.ensemble.name(),
            placement,
            self.corruption.count_min,
            self.corruption.count_max,
            self.corruption.mean,
            self.corruption.std,
            self.budget,
            self.algorithm.name(),
            self.trials
        )
    }
}

/// One point of an aggregated curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub projections: usize,
    pub mean: f64,
    pub std: f64,
}

/// Support-recovery fraction against cumulative projections, averaged
/// over trials.
#[derive(Debug, Clone, PartialEq)]
pub struct RecoveryCurve {
    pub label: String,
    pub points: Vec<CurvePoint>,
    pub trials: usize,
}

impl RecoveryCurve {
    pub fn final_point(&self) -> Option<&CurvePoint> {
        self.points.last()
    }
}

/// Fraction of the true support captured by the estimate.
pub fn support_recovery_fraction(estimate: &SupportSet, truth: &SupportSet) -> Result<f64> {
    if estimate.ambient() != truth.ambient() {
        return Err(Error::dims(format!(
            "estimate ambient dimension {} does not match truth {}",
            estimate.ambient(),
            truth.ambient()
        )));
    }
    if truth.is_empty() {
        return Err(Error::invalid("truth", "true support must be nonempty"));
    }
    Ok(estimate.intersection_len(truth) as f64 / truth.len() as f64)
}

const MMV_LABEL: &str = "mmv";
const CMMV_LABEL: &str = "cmmv";

const STREAM_INSTANCE: u64 = 0;
const STREAM_SCHEDULE: u64 = 1;
const STREAM_MMV: u64 = 2;
const STREAM_CMMV: u64 = 3;

struct TrialCurve {
    label: &'static str,
    samples: Vec<(usize, f64)>,
}

fn run_trial_samples<F: Real>(
    config: &ExperimentConfig<F>,
    trial_index: usize,
) -> Result<Vec<TrialCurve>> {
    let seed = config.seed.wrapping_add(trial_index as u64);
    let mut instance_rng = Rng::with_stream(seed, STREAM_INSTANCE);
    let instance = generate(&config.instance_spec(), &mut instance_rng)?;
    let mut schedule_rng = Rng::with_stream(seed, STREAM_SCHEDULE);
    let schedule = config.budget.realize(config.signals, &mut schedule_rng)?;
    let truth = &instance.joint_support;

    let mut curves = Vec::new();
    if config.algorithm.runs_mmv() {
        // Match the online solver's total work: one outer iteration costs
        // J projections, so the batch solver gets the schedule's total
        // spread across outer iterations.
        let tau = (schedule.total_projections() / config.signals).max(1);
        let params = SrkParams {
            k_hat: config.k_hat,
            tau,
            sampling: config.sampling,
        };
        let mut rng = Rng::with_stream(seed, STREAM_MMV);
        let (_, trace) = mmv_srk(&instance.matrix, &instance.y, &params, &mut rng)?;
        curves.push(TrialCurve {
            label: MMV_LABEL,
            samples: fractions(&trace.samples, truth)?,
        });
    }
    if config.algorithm.runs_cmmv() {
        let params = CmmvParams {
            k_hat: config.k_hat,
            sampling: config.sampling,
            carry_joint_estimate: config.carry_joint_estimate,
        };
        let mut rng = Rng::with_stream(seed, STREAM_CMMV);
        let (_, _, trace) = cmmv_srk(&instance.matrix, &instance.y, &params, &schedule, &mut rng)?;
        curves.push(TrialCurve {
            label: CMMV_LABEL,
            samples: fractions(&trace.samples, truth)?,
        });
    }
    Ok(curves)
}

fn fractions(
    samples: &[crate::solvers::TraceSample],
    truth: &SupportSet,
) -> Result<Vec<(usize, f64)>> {
    samples
        .iter()
        .map(|s| {
            support_recovery_fraction(&s.support_estimate, truth).map(|f| (s.projection_index, f))
        })
        .collect()
}

/// Run a single trial, returning one curve per configured algorithm with
/// `std = 0`.
pub fn run_trial<F: Real>(
    config: &ExperimentConfig<F>,
    trial_index: usize,
) -> Result<Vec<RecoveryCurve>> {
    config.validate()?;
    let curves = run_trial_samples(config, trial_index)?;
    Ok(curves
        .into_iter()
        .map(|c| RecoveryCurve {
            label: c.label.to_string(),
            points: c
                .samples
                .into_iter()
                .map(|(projections, mean)| CurvePoint {
                    projections,
                    mean,
                    std: 0.0,
                })
                .collect(),
            trials: 1,
        })
        .collect())
}

/// Run all trials and aggregate per algorithm.
pub fn run_experiment<F: Real>(config: &ExperimentConfig<F>) -> Result<Vec<RecoveryCurve>> {
    run_experiment_with(config, |_| {})
}

/// [`run_experiment`] with a completion callback per trial index, called
/// from worker threads.
pub fn run_experiment_with<F: Real>(
    config: &ExperimentConfig<F>,
    on_trial_done: impl Fn(usize) + Sync,
) -> Result<Vec<RecoveryCurve>> {
    config.validate()?;
    let per_trial: Vec<Vec<TrialCurve>> = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let out = run_trial_samples(config, i);
            on_trial_done(i);
            out
        })
        .collect::<Result<_>>()?;

    let labels: Vec<&'static str> = per_trial[0].iter().map(|c| c.label).collect();
    labels
        .iter()
        .enumerate()
        .map(|(ci, label)| {
            let samples: Vec<&[(usize, f64)]> =
                per_trial.iter().map(|t| t[ci].samples.as_slice()).collect();
            aggregate(label, &samples)
        })
        .collect()
}

/// Align per-trial step functions on a common grid and average pointwise.
///
/// The grid is the union of all trials' sample positions, clipped so that
/// every trial has a recorded sample at or before each grid point: it
/// starts at the latest first-sample position and ends at the earliest
/// last-sample position. Values are carried forward between samples; the
/// standard deviation is the population form.
pub(crate) fn aggregate(label: &str, trials: &[&[(usize, f64)]]) -> Result<RecoveryCurve> {
    if trials.is_empty() || trials.iter().any(|t| t.is_empty()) {
        return Err(Error::invalid("trials", "every trial must produce samples"));
    }
    let start = trials.iter().map(|t| t[0].0).max().unwrap();
    let end = trials.iter().map(|t| t[t.len() - 1].0).min().unwrap();
    if end < start {
        return Err(Error::invalid(
            "trials",
            "trial curves share no common projection range".to_string(),
        ));
    }
    let mut grid: Vec<usize> = trials
        .iter()
        .flat_map(|t| t.iter().map(|&(p, _)| p))
        .filter(|&p| (start..=end).contains(&p))
        .collect();
    grid.sort_unstable();
    grid.dedup();

    let count = trials.len() as f64;
    let mut sums = vec![0.0; grid.len()];
    let mut sq_sums = vec![0.0; grid.len()];
    for t in trials {
        let mut cursor = 0;
        for (gi, &pos) in grid.iter().enumerate() {
            while cursor + 1 < t.len() && t[cursor + 1].0 <= pos {
                cursor += 1;
            }
            let v = t[cursor].1;
            sums[gi] += v;
            sq_sums[gi] += v * v;
        }
    }
    let points = grid
        .iter()
        .enumerate()
        .map(|(gi, &projections)| {
            let mean = sums[gi] / count;
            let var = (sq_sums[gi] / count - mean * mean).max(0.0);
            CurvePoint {
                projections,
                mean,
                std: var.sqrt(),
            }
        })
        .collect();
    Ok(RecoveryCurve {
        label: label.to_string(),
        points,
        trials: trials.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_config() -> ExperimentConfig<f64> {
        ExperimentConfig {
            m: 30,
            n: 10,
            k: 2,
            k_hat: 3,
            signals: 6,
            ensemble: Ensemble::Gaussian,
            placement: SupportPlacement::UniformRandom,
            corruption: CorruptionSpec::fixed(1, 7.0, 1.0),
            algorithm: AlgorithmChoice::Both,
            budget: Budget::PerSignal(25),
            trials: 3,
            seed: 11,
            sampling: SamplingScheme::NormProportional,
            carry_joint_estimate: true,
        }
    }

    #[test]
    fn metric_examples() {
        let truth = SupportSet::new(vec![1, 2, 3], 10).unwrap();
        assert_eq!(support_recovery_fraction(&truth, &truth).unwrap(), 1.0);
        let disjoint = SupportSet::new(vec![5, 6], 10).unwrap();
        assert_eq!(support_recovery_fraction(&disjoint, &truth).unwrap(), 0.0);
        let est = SupportSet::new(vec![1, 2, 4, 9], 10).unwrap();
        let truth5 = SupportSet::new(vec![1, 2, 3, 5, 7], 10).unwrap();
        assert_eq!(support_recovery_fraction(&est, &truth5).unwrap(), 0.4);
    }

    #[test]
    fn metric_rejects_empty_truth() {
        let est = SupportSet::new(vec![0], 3).unwrap();
        assert!(support_recovery_fraction(&est, &SupportSet::empty(3)).is_err());
    }

    #[test]
    fn aggregation_step_interpolates_on_clipped_grid() {
        let a: &[(usize, f64)] = &[(10, 0.2), (20, 0.6)];
        let b: &[(usize, f64)] = &[(15, 0.5), (18, 1.0)];
        let curve = aggregate("x", &[a, b]).unwrap();
        let positions: Vec<usize> = curve.points.iter().map(|p| p.projections).collect();
        assert_eq!(positions, vec![15, 18]);
        assert!((curve.points[0].mean - 0.35).abs() < 1e-15);
        assert!((curve.points[0].std - 0.15).abs() < 1e-15);
        assert!((curve.points[1].mean - 0.6).abs() < 1e-15);
        assert!((curve.points[1].std - 0.4).abs() < 1e-15);
    }

    #[test]
    fn aggregation_of_one_trial_is_identity_with_zero_std() {
        let a: &[(usize, f64)] = &[(5, 0.1), (9, 0.7)];
        let curve = aggregate("x", &[a]).unwrap();
        assert_eq!(curve.points.len(), 2);
        assert_eq!(curve.points[1].mean, 0.7);
        assert_eq!(curve.points[1].std, 0.0);
    }

    #[test]
    fn aggregation_rejects_disjoint_ranges() {
        let a: &[(usize, f64)] = &[(1, 0.0), (2, 0.0)];
        let b: &[(usize, f64)] = &[(5, 0.0), (6, 0.0)];
        assert!(aggregate("x", &[a, b]).is_err());
    }

    #[test]
    fn single_trial_experiment_matches_run_trial() {
        let mut config = tiny_config();
        config.trials = 1;
        let from_experiment = run_experiment(&config).unwrap();
        let from_trial = run_trial(&config, 0).unwrap();
        assert_eq!(from_experiment.len(), from_trial.len());
        for (a, b) in from_experiment.iter().zip(&from_trial) {
            assert_eq!(a.label, b.label);
            assert_eq!(a.points.len(), b.points.len());
            for (pa, pb) in a.points.iter().zip(&b.points) {
                assert_eq!(pa.projections, pb.projections);
                assert_eq!(pa.mean, pb.mean);
                assert_eq!(pa.std, 0.0);
            }
        }
    }

    #[test]
    fn experiments_are_deterministic() {
        let config = tiny_config();
        assert_eq!(
            run_experiment(&config).unwrap(),
            run_experiment(&config).unwrap()
        );
    }

    #[test]
    fn both_algorithms_emit_curves_in_label_order() {
        let curves = run_experiment(&tiny_config()).unwrap();
        assert_eq!(curves.len(), 2);
        assert_eq!(curves[0].label, "mmv");
        assert_eq!(curves[1].label, "cmmv");
        for curve in &curves {
            assert_eq!(curve.trials, 3);
            for p in &curve.points {
                assert!((0.0..=1.0).contains(&p.mean));
                assert!(p.std >= 0.0);
            }
        }
    }

    #[test]
    fn cmmv_only_config_emits_single_curve() {
        let mut config = tiny_config();
        config.algorithm = AlgorithmChoice::Cmmv;
        let curves = run_experiment(&config).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].label, "cmmv");
    }

    #[test]
    fn doubling_trials_moves_means_within_the_clt_band() {
        // The 4-trial run shares its trials (seed + 0..3) with the first
        // half of the 8-trial run, so |mean_4 - mean_8| is half the gap
        // between the two half-means, which the population std of the
        // 8-trial run always dominates.
        let mut few = tiny_config();
        few.trials = 4;
        let mut many = tiny_config();
        many.trials = 8;
        for (cf, cm) in run_experiment(&few)
            .unwrap()
            .iter()
            .zip(&run_experiment(&many).unwrap())
        {
            for (pf, pm) in cf.points.iter().zip(&cm.points) {
                assert_eq!(pf.projections, pm.projections);
                let slack = 2.0 * pm.std / (few.trials as f64).sqrt() + 1e-12;
                assert!(
                    (pf.mean - pm.mean).abs() <= slack,
                    "at {}: {} vs {} (slack {slack})",
                    pf.projections,
                    pf.mean,
                    pm.mean
                );
            }
        }
    }

    #[test]
    fn config_validation_catches_bad_fields() {
        let mut config = tiny_config();
        config.k_hat = 0;
        assert!(config.validate().is_err());
        let mut config = tiny_config();
        config.trials = 0;
        assert!(config.validate().is_err());
        let mut config = tiny_config();
        config.budget = Budget::PerSignal(0);
        assert!(config.validate().is_err());
        let mut config = tiny_config();
        config.budget = Budget::Online {
            p_stall: 1.5,
            short: (5, 15),
            long: (95, 100),
        };
        assert!(config.validate().is_err());
    }

    #[test]
    fn online_budget_trial_runs() {
        let mut config = tiny_config();
        config.algorithm = AlgorithmChoice::Cmmv;
        // Enough signals that every trial's total budget clears any other
        // trial's first sample, so the common grid is never empty.
        config.signals = 40;
        config.budget = Budget::Online {
            p_stall: 0.1,
            short: (5, 15),
            long: (95, 100),
        };
        let curves = run_experiment(&config).unwrap();
        assert!(!curves[0].points.is_empty());
    }
}
