//! Single-vector sparse randomized Kaczmarz.

use crate::error::{Error, Result};
use crate::matrix::RowMatrix;
use crate::project::kaczmarz_project_in_place;
use crate::rng::Rng;
use crate::sampling::sample_row_index;
use crate::scalar::Real;
use crate::support::{hard_threshold_support, SupportSet};
use crate::weights::{fill_row_weights, weighted_row_into};

use super::{SolveTrace, SrkParams};

/// Scratch space for one SRK sweep, reusable across signals.
pub(super) struct SweepBuffers<F> {
    pub x: Vec<F>,
    weights: Vec<F>,
    weighted: Vec<F>,
}

impl<F: Real> SweepBuffers<F> {
    pub fn new(n: usize) -> Self {
        SweepBuffers {
            x: vec![F::zero(); n],
            weights: vec![F::zero(); n],
            weighted: vec![F::zero(); n],
        }
    }

    pub fn reset(&mut self) {
        self.x.fill(F::zero());
    }
}

/// Run `tau` weighted projections of a single vector, starting from the
/// iterate already in `buffers.x`.
///
/// `estimate` enters as the support estimate for the first iteration and
/// leaves holding the estimate thresholded from the final iterate. After
/// each projection `on_step` receives the iteration index and the freshly
/// thresholded estimate (which the next iteration will use). Returns the
/// number of projections skipped due to zero-norm weighted rows.
pub(super) fn sweep<F: Real>(
    matrix: &RowMatrix<F>,
    y: &[F],
    params: &SrkParams,
    rng: &mut Rng,
    buffers: &mut SweepBuffers<F>,
    estimate: &mut SupportSet,
    mut on_step: impl FnMut(usize, &SupportSet),
) -> Result<usize> {
    let mut skipped = 0;
    for t in 1..=params.tau {
        let i = sample_row_index(matrix, params.sampling, rng)?;
        fill_row_weights(estimate, t, &mut buffers.weights);
        weighted_row_into(matrix.row(i), &buffers.weights, &mut buffers.weighted);
        if !kaczmarz_project_in_place(&mut buffers.x, &buffers.weighted, y[i]) {
            skipped += 1;
        }
        *estimate = hard_threshold_support(&buffers.x, params.k_hat)?;
        on_step(t, estimate);
    }
    Ok(skipped)
}

/// Sparse randomized Kaczmarz on a single measurement vector.
///
/// Starts from the zero iterate and performs exactly `params.tau`
/// projections, reweighting the sampled row each iteration: weight 1 on
/// the current support estimate (the `k_hat` largest-magnitude entries of
/// the previous iterate), `1/sqrt(t)` elsewhere. The trace records the
/// support estimate after every projection.
pub fn srk<F: Real>(
    matrix: &RowMatrix<F>,
    y: &[F],
    params: &SrkParams,
    rng: &mut Rng,
) -> Result<(Vec<F>, SolveTrace)> {
    params.validate(matrix.cols())?;
    if y.len() != matrix.rows() {
        return Err(Error::dims(format!(
            "measurement length {} does not match row count {}",
            y.len(),
            matrix.rows()
        )));
    }

    let mut buffers = SweepBuffers::new(matrix.cols());
    let mut estimate = hard_threshold_support(&buffers.x, params.k_hat)?;
    let mut trace = SolveTrace::with_capacity(params.tau);
    let skipped = sweep(
        matrix,
        y,
        params,
        rng,
        &mut buffers,
        &mut estimate,
        |t, est| trace.push(t, est.clone()),
    )?;
    trace.skipped_projections = skipped;
    Ok((buffers.x, trace))
}
