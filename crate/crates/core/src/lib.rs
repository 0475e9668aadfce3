//! Sparse randomized Kaczmarz solvers for joint support recovery.
//!
//! Signals arrive as columns of `Y = Phi * X`, where the columns of `X`
//! share one sparse support but each carries a few corrupt entries of its
//! own. This crate provides the row-action solvers that recover the shared
//! support from such measurements, the random problem generators used to
//! benchmark them, and a Monte-Carlo harness that turns solver traces into
//! support-recovery curves.
//!
//! Three solvers are available:
//!
//! - [`srk`]: sparse randomized Kaczmarz on a single measurement vector.
//!   Each iteration samples a row, damps its off-support entries by
//!   `1/sqrt(t)`, and projects the iterate onto the reweighted equation.
//! - [`mmv_srk`]: the batch variant, which applies the same sampled row
//!   and the same weights to every signal column per outer iteration and
//!   estimates support from the largest row norms of the iterate matrix.
//! - [`cmmv_srk`]: the online variant for corrupted streams, which runs an
//!   independent SRK pass per signal and accumulates per-signal support
//!   votes, weighted by each signal's share of the projection budget, in a
//!   tally vector whose top entries form the joint estimate.
//!
//! Numeric kernels are generic over [`Real`] (`f32` or `f64`); the
//! experiment harness and its presets are pinned to `f64`.
//!
//! ```
//! use srk_core::{srk, Rng, RowMatrix, SrkParams};
//!
//! // A 1-sparse solution seen through four rows.
//! let matrix = RowMatrix::from_rows(&[
//!     vec![1.0, 2.0, 0.0],
//!     vec![0.0, 1.0, 1.0],
//!     vec![1.0, 0.0, 2.0],
//!     vec![2.0, 1.0, 1.0],
//! ])
//! .unwrap();
//! let y = [6.0f64, 3.0, 0.0, 3.0]; // x = (0, 3, 0)
//! let mut rng = Rng::new(7);
//! let (x, trace) = srk(&matrix, &y, &SrkParams::new(1, 200), &mut rng).unwrap();
//! assert!(trace.final_support().unwrap().contains(1));
//! assert!((x[1] - 3.0).abs() < 0.1);
//! assert_eq!(trace.samples.len(), 200);
//! ```

pub mod error;
pub mod harness;
pub mod matrix;
pub mod problems;
pub mod project;
pub mod rng;
pub mod sampling;
pub mod scalar;
pub mod solvers;
pub mod support;
pub mod weights;

pub use error::{Error, Result};
pub use harness::{
    preset, preset_names, run_experiment, run_experiment_with, run_trial,
    support_recovery_fraction, write_csv, AlgorithmChoice, Budget, CurvePoint, ExperimentConfig,
    RecoveryCurve,
};
pub use matrix::{RowMatrix, SignalMatrix};
pub use problems::{
    add_corruptions, gen_contiguous_support, gen_joint_support, gen_matrix, gen_online_schedule,
    gen_signals, generate, synthesize, CorruptionSpec, Ensemble, InstanceSpec, ProblemInstance,
    SupportPlacement,
};
pub use project::kaczmarz_project;
pub use rng::Rng;
pub use sampling::{sample_row_index, SamplingScheme};
pub use scalar::Real;
pub use solvers::{
    cmmv_srk, mmv_srk, row_norm_support, srk, tally_update, CmmvParams, OnlineSchedule, SolveTrace,
    SrkParams, TallyVector, TraceSample,
};
pub use support::{hard_threshold_support, SupportSet};
pub use weights::{row_weights, weighted_row, WeightVector};

/// Measurement matrix at experiment precision.
pub type RowMatrix64 = RowMatrix<f64>;
/// Measurement matrix in single precision.
pub type RowMatrix32 = RowMatrix<f32>;
/// Signal matrix at experiment precision.
pub type SignalMatrix64 = SignalMatrix<f64>;
/// Signal matrix in single precision.
pub type SignalMatrix32 = SignalMatrix<f32>;
/// Tally vector at experiment precision.
pub type TallyVector64 = TallyVector<f64>;
/// Problem instance at experiment precision.
pub type ProblemInstance64 = ProblemInstance<f64>;
/// Experiment configuration at experiment precision.
pub type ExperimentConfig64 = ExperimentConfig<f64>;
