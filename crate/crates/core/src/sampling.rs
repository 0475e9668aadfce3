//! Row sampling schemes.
//!
//! Kaczmarz-type solvers pick one row per projection. The default scheme
//! samples row `i` with probability `||phi_i||^2 / ||Phi||_F^2`; a uniform
//! scheme is available for comparison.

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::matrix::RowMatrix;
use crate::rng::Rng;
use crate::scalar::Real;

/// How to pick the row for each projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplingScheme {
    /// Probability proportional to the squared row norm.
    NormProportional,
    /// Every row equally likely.
    Uniform,
}

impl SamplingScheme {
    pub fn name(self) -> &'static str {
        match self {
            SamplingScheme::NormProportional => "norm",
            SamplingScheme::Uniform => "uniform",
        }
    }
}

/// Draw one row index according to `scheme`.
///
/// Norm-proportional sampling inverts the CDF with a single prefix walk:
/// draw `u` uniform on `[0, ||Phi||_F^2)` and return the first row whose
/// cumulative squared norm exceeds `u`. A matrix whose rows are all zero
/// has no valid distribution and yields [`Error::DegenerateMatrix`].
pub fn sample_row_index<F: Real>(
    matrix: &RowMatrix<F>,
    scheme: SamplingScheme,
    rng: &mut Rng,
) -> Result<usize> {
    match scheme {
        SamplingScheme::Uniform => Ok(rng.gen_range(0..matrix.rows())),
        SamplingScheme::NormProportional => {
            let total = matrix.frob_sq();
            if total == F::zero() {
                return Err(Error::DegenerateMatrix);
            }
            let u = rng.gen_range(F::zero()..total);
            let mut acc = F::zero();
            for i in 0..matrix.rows() {
                acc = acc + matrix.row_sq_norm(i);
                if u < acc {
                    return Ok(i);
                }
            }
            // Rounding in the prefix sums can leave `u` marginally above
            // the accumulated total; the draw then belongs to the last
            // row with positive mass.
            Ok((0..matrix.rows())
                .rev()
                .find(|&i| matrix.row_sq_norm(i) > F::zero())
                .expect("positive total implies a positive row"))
        }
    }
}
