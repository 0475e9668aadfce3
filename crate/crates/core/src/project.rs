//! The Kaczmarz projection step.
//!
//! Given a row `a` and a measurement `y_i`, the update projects the current
//! iterate onto the hyperplane `{x : <a, x> = y_i}`:
//!
//! ```text
//! x' = x + (y_i - <a, x>) / ||a||^2 * a
//! ```

use crate::error::{Error, Result};
use crate::scalar::{dot, sq_norm, Real};

/// Orthogonal projection of `x` onto the hyperplane `<a, x> = y`.
///
/// Returns [`Error::DegenerateRow`] when `a` has zero norm, since the
/// hyperplane is then empty or all of space.
pub fn kaczmarz_project<F: Real>(x: &[F], a: &[F], y: F) -> Result<Vec<F>> {
    if x.len() != a.len() {
        return Err(Error::dims(format!(
            "iterate length {} does not match row length {}",
            x.len(),
            a.len()
        )));
    }
    let norm_sq = sq_norm(a);
    if norm_sq == F::zero() {
        return Err(Error::DegenerateRow);
    }
    let step = (y - dot(a, x)) / norm_sq;
    Ok(x.iter().zip(a).map(|(&xl, &al)| xl + step * al).collect())
}

/// In-place projection used by the solver inner loops.
///
/// Returns `false` without touching `x` when `a` has zero norm, so callers
/// can count the skip and move on.
pub(crate) fn kaczmarz_project_in_place<F: Real>(x: &mut [F], a: &[F], y: F) -> bool {
    debug_assert_eq!(x.len(), a.len());
    let norm_sq = sq_norm(a);
    if norm_sq == F::zero() {
        return false;
    }
    let step = (y - dot(a, x)) / norm_sq;
    for (xl, &al) in x.iter_mut().zip(a) {
        *xl = *xl + step * al;
    }
    true
}
