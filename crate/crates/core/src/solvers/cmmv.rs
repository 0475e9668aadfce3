//! Online solver for corrupted signal streams.

use crate::error::{Error, Result};
use crate::matrix::{RowMatrix, SignalMatrix};
use crate::rng::Rng;
use crate::sampling::SamplingScheme;
use crate::scalar::Real;
use crate::support::hard_threshold_support;
use crate::support::SupportSet;

use super::srk::{sweep, SweepBuffers};
use super::{OnlineSchedule, SolveTrace, SrkParams, TallyVector};

/// Parameters for the online solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmmvParams {
    /// Assumed joint support size.
    pub k_hat: usize,
    /// Row sampling scheme for the per-signal runs.
    pub sampling: SamplingScheme,
    /// Seed each signal's first support estimate with the current joint
    /// estimate instead of thresholding the zero iterate. Either way the
    /// first iteration's weights are uniform, so this cannot change the
    /// numbers; the flag exists to make both readings testable.
    pub carry_joint_estimate: bool,
}

impl CmmvParams {
    pub fn new(k_hat: usize) -> Self {
        CmmvParams {
            k_hat,
            sampling: SamplingScheme::NormProportional,
            carry_joint_estimate: true,
        }
    }
}

/// Sparse randomized Kaczmarz over a stream of corrupted signals.
///
/// Processes signal columns in order. Each signal gets a fresh zero
/// iterate and its own budget of projections from `schedule`, with the
/// weight clock `t` restarting at 1. When a signal completes, every index
/// in its final support estimate receives a vote of `tau_j / tau_max` in
/// the tally vector; the joint estimate is the `k_hat` highest-tallied
/// indices. The trace records the joint estimate after each signal at the
/// cumulative projection count.
pub fn cmmv_srk<F: Real>(
    matrix: &RowMatrix<F>,
    y: &SignalMatrix<F>,
    params: &CmmvParams,
    schedule: &OnlineSchedule,
    rng: &mut Rng,
) -> Result<(SupportSet, TallyVector<F>, SolveTrace)> {
    let n = matrix.cols();
    if params.k_hat == 0 || params.k_hat > n {
        return Err(Error::invalid(
            "k_hat",
            format!("must be in [1, {n}], got {}", params.k_hat),
        ));
    }
    if y.rows() != matrix.rows() {
        return Err(Error::dims(format!(
            "measurement rows {} do not match matrix rows {}",
            y.rows(),
            matrix.rows()
        )));
    }
    if schedule.len() != y.cols() {
        return Err(Error::dims(format!(
            "schedule length {} does not match signal count {}",
            schedule.len(),
            y.cols()
        )));
    }

    let mut buffers = SweepBuffers::new(n);
    let mut tallies = TallyVector::new(n);
    let mut joint = tallies.top_k(params.k_hat)?;
    let mut trace = SolveTrace::with_capacity(schedule.len());
    let mut projections = 0;

    for (j, &tau_j) in schedule.budgets().iter().enumerate() {
        buffers.reset();
        let mut estimate = if params.carry_joint_estimate {
            joint.clone()
        } else {
            hard_threshold_support(&buffers.x, params.k_hat)?
        };
        let sweep_params = SrkParams {
            k_hat: params.k_hat,
            tau: tau_j,
            sampling: params.sampling,
        };
        let skipped = sweep(
            matrix,
            y.col(j),
            &sweep_params,
            rng,
            &mut buffers,
            &mut estimate,
            |_, _| {},
        )?;
        trace.skipped_projections += skipped;
        tallies.record(&estimate, tau_j, schedule.tau_max())?;
        joint = tallies.top_k(params.k_hat)?;
        projections += tau_j;
        trace.push(projections, joint.clone());
    }
    Ok((joint, tallies, trace))
}
