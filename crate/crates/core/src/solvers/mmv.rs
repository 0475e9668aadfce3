//! Batch solver for jointly sparse signal matrices.

use crate::error::{Error, Result};
use crate::matrix::{RowMatrix, SignalMatrix};
use crate::project::kaczmarz_project_in_place;
use crate::rng::Rng;
use crate::sampling::sample_row_index;
use crate::scalar::Real;
use crate::support::{top_k_by_magnitude, SupportSet};
use crate::weights::{fill_row_weights, weighted_row_into};

use super::{SolveTrace, SrkParams};

/// Indices of the `k_hat` rows of `x` with largest L2 norm.
///
/// Ties break lexicographically, matching the thresholding rule.
pub fn row_norm_support<F: Real>(x: &SignalMatrix<F>, k_hat: usize) -> Result<SupportSet> {
    let norms = x.row_sq_norms();
    top_k_by_magnitude(&norms, k_hat, x.rows())
}

/// Sparse randomized Kaczmarz over all signal columns at once.
///
/// Each outer iteration samples one row and builds one weight vector from
/// the joint support estimate (the `k_hat` largest row norms of the
/// previous iterate), then projects every column against that same
/// weighted row. The trace records the row-norm support estimate after
/// each outer iteration at `projection_index = t * J`.
pub fn mmv_srk<F: Real>(
    matrix: &RowMatrix<F>,
    y: &SignalMatrix<F>,
    params: &SrkParams,
    rng: &mut Rng,
) -> Result<(SignalMatrix<F>, SolveTrace)> {
    params.validate(matrix.cols())?;
    if y.rows() != matrix.rows() {
        return Err(Error::dims(format!(
            "measurement rows {} do not match matrix rows {}",
            y.rows(),
            matrix.rows()
        )));
    }

    let n = matrix.cols();
    let j_count = y.cols();
    let mut x = SignalMatrix::zeros(n, j_count);
    let mut estimate = row_norm_support(&x, params.k_hat)?;
    let mut weights = vec![F::zero(); n];
    let mut weighted = vec![F::zero(); n];
    let mut trace = SolveTrace::with_capacity(params.tau);

    for t in 1..=params.tau {
        let i = sample_row_index(matrix, params.sampling, rng)?;
        fill_row_weights(&estimate, t, &mut weights);
        weighted_row_into(matrix.row(i), &weights, &mut weighted);
        for j in 0..j_count {
            if !kaczmarz_project_in_place(x.col_mut(j), &weighted, y.get(i, j)) {
                trace.skipped_projections += 1;
            }
        }
        estimate = row_norm_support(&x, params.k_hat)?;
        trace.push(t * j_count, estimate.clone());
    }
    Ok((x, trace))
}
