//! Iteration-dependent row weights.
//!
//! A projection step reweights the sampled row: coordinates inside the
//! current support estimate keep weight 1, the rest are damped by
//! `1/sqrt(t)`. As `t` grows the off-estimate coordinates fade, which is
//! what steers the iterate toward sparse solutions.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::support::SupportSet;

/// Length-`n` weight vector produced at iteration `t`.
///
/// Every weight is either `1` (on the generating support estimate) or
/// `1/sqrt(t)` (off it).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector<F> {
    weights: Vec<F>,
    t: usize,
}

impl<F: Real> WeightVector<F> {
    pub fn weights(&self) -> &[F] {
        &self.weights
    }

    /// Iteration index that produced this vector.
    pub fn iteration(&self) -> usize {
        self.t
    }
}

/// Weights for iteration `t >= 1`: `1` on `support`, `1/sqrt(t)` elsewhere.
pub fn row_weights<F: Real>(support: &SupportSet, t: usize, n: usize) -> Result<WeightVector<F>> {
    if t == 0 {
        return Err(Error::invalid("t", "iteration index must be at least 1"));
    }
    if support.ambient() != n {
        return Err(Error::dims(format!(
            "support ambient dimension {} does not match n = {n}",
            support.ambient()
        )));
    }
    let mut weights = vec![off_support_weight::<F>(t); n];
    for idx in support.iter() {
        weights[idx] = F::one();
    }
    Ok(WeightVector { weights, t })
}

/// The damped weight `1/sqrt(t)`.
pub(crate) fn off_support_weight<F: Real>(t: usize) -> F {
    F::one() / F::from_count(t).sqrt()
}

/// Entrywise product of a row with a weight vector.
pub fn weighted_row<F: Real>(row: &[F], w: &WeightVector<F>) -> Result<Vec<F>> {
    if row.len() != w.weights.len() {
        return Err(Error::dims(format!(
            "row length {} does not match weight length {}",
            row.len(),
            w.weights.len()
        )));
    }
    Ok(row.iter().zip(&w.weights).map(|(&r, &w)| r * w).collect())
}

/// In-place variant of [`weighted_row`] for solver inner loops.
pub(crate) fn weighted_row_into<F: Real>(row: &[F], weights: &[F], out: &mut [F]) {
    debug_assert_eq!(row.len(), weights.len());
    debug_assert_eq!(row.len(), out.len());
    for ((o, &r), &w) in out.iter_mut().zip(row).zip(weights) {
        *o = r * w;
    }
}

/// Fill `weights` in place: `1` on `support`, `1/sqrt(t)` elsewhere.
pub(crate) fn fill_row_weights<F: Real>(support: &SupportSet, t: usize, weights: &mut [F]) {
    let off = off_support_weight::<F>(t);
    weights.fill(off);
    for idx in support.iter() {
        weights[idx] = F::one();
    }
}
