//! Support sets and magnitude-based support estimation.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Ordered set of column indices in `[0, n)`.
///
/// Indices are kept strictly increasing, so iteration order (and every
/// tie-dependent output built from one) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    indices: Vec<usize>,
    n: usize,
}

impl SupportSet {
    /// Build from arbitrary-order indices; sorts and rejects duplicates or
    /// indices `>= n`.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("indices", "duplicate index in support set"));
        }
        if indices.last().is_some_and(|&last| last >= n) {
            return Err(Error::invalid(
                "indices",
                format!("index out of range for ambient dimension {n}"),
            ));
        }
        Ok(Self { indices, n })
    }

    /// Empty set over ambient dimension `n`.
    pub fn empty(n: usize) -> Self {
        Self {
            indices: Vec::new(),
            n,
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Ambient dimension.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// Ascending iteration over the member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    /// Number of indices shared with `other`.
    pub fn intersection_len(&self, other: &SupportSet) -> usize {
        // Both sides are sorted; merge walk.
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.indices.len() && j < other.indices.len() {
            match self.indices[i].cmp(&other.indices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// True when every index of `self` is in `other`.
    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.intersection_len(other) == self.len()
    }
}

/// Indices of the `k_hat` largest-magnitude entries of `x`.
///
/// Ties are broken lexicographically: among equal magnitudes the smaller
/// index wins. Always returns exactly `k_hat` indices (zeros included when
/// the vector has fewer than `k_hat` nonzeros).
pub fn hard_threshold_support<F: Real>(x: &[F], k_hat: usize) -> Result<SupportSet> {
    top_k_by_magnitude(x, k_hat, x.len())
}

/// Shared top-k selection under the order (magnitude desc, index asc).
pub(crate) fn top_k_by_magnitude<F: Real>(
    values: &[F],
    k_hat: usize,
    ambient: usize,
) -> Result<SupportSet> {
    if k_hat == 0 || k_hat > values.len() {
        return Err(Error::invalid(
            "k_hat",
            format!("must be in [1, {}], got {k_hat}", values.len()),
        ));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    let rank =
        |&a: &usize, &b: &usize| values[b].abs().total_order(values[a].abs()).then(a.cmp(&b));
    if k_hat < order.len() {
        order.select_nth_unstable_by(k_hat - 1, rank);
        order.truncate(k_hat);
    }
    order.sort_unstable();
    Ok(SupportSet {
        indices: order,
        n: ambient,
    })
}
