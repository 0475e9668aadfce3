//! The three solvers: single-vector SRK, batch MMV-SRK, and online
//! cMMV-SRK.
//!
//! All three run a fixed budget of Kaczmarz projections against weighted
//! rows and emit a [`SolveTrace`]: the sequence of support estimates as
//! projections accumulate. The batch solver updates every signal column
//! with the same sampled row per outer iteration; the online solver runs
//! an independent SRK pass per signal and merges the per-signal estimates
//! through a weighted tally vector.

mod cmmv;
mod mmv;
mod srk;

pub use cmmv::{cmmv_srk, CmmvParams};
pub use mmv::{mmv_srk, row_norm_support};
pub use srk::srk;

use crate::error::{Error, Result};
use crate::sampling::SamplingScheme;
use crate::scalar::Real;
use crate::support::{top_k_by_magnitude, SupportSet};

/// Parameters shared by the single-vector and batch solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrkParams {
    /// Assumed support size; the solver tracks the `k_hat` largest entries.
    pub k_hat: usize,
    /// Projection budget (outer iterations for the batch solver).
    pub tau: usize,
    /// Row sampling scheme.
    pub sampling: SamplingScheme,
}

impl SrkParams {
    pub fn new(k_hat: usize, tau: usize) -> Self {
        SrkParams {
            k_hat,
            tau,
            sampling: SamplingScheme::NormProportional,
        }
    }

    pub(crate) fn validate(&self, n: usize) -> Result<()> {
        if self.k_hat == 0 || self.k_hat > n {
            return Err(Error::invalid(
                "k_hat",
                format!("must be in [1, {n}], got {}", self.k_hat),
            ));
        }
        if self.tau == 0 {
            return Err(Error::invalid(
                "tau",
                "projection budget must be at least 1",
            ));
        }
        Ok(())
    }
}

/// Per-signal projection budgets for the online solver.
///
/// `tau_max` normalizes the tally votes; it defaults to the largest budget
/// but can be capped higher when the stream's maximum is known in advance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnlineSchedule {
    budgets: Vec<usize>,
    tau_max: usize,
}

impl OnlineSchedule {
    /// Schedule with `tau_max` taken as the largest budget.
    pub fn from_budgets(budgets: Vec<usize>) -> Result<Self> {
        let max = Self::check_budgets(&budgets)?;
        Ok(OnlineSchedule {
            budgets,
            tau_max: max,
        })
    }

    /// Schedule with an explicit normalizer `tau_max >= max(budgets)`.
    pub fn with_cap(budgets: Vec<usize>, tau_max: usize) -> Result<Self> {
        let max = Self::check_budgets(&budgets)?;
        if tau_max < max {
            return Err(Error::invalid(
                "tau_max",
                format!("must be at least the largest budget {max}, got {tau_max}"),
            ));
        }
        Ok(OnlineSchedule { budgets, tau_max })
    }

    /// The same budget for every one of `j` signals.
    pub fn uniform(j: usize, tau: usize) -> Result<Self> {
        Self::from_budgets(vec![tau; j])
    }

    fn check_budgets(budgets: &[usize]) -> Result<usize> {
        if budgets.is_empty() {
            return Err(Error::invalid("budgets", "schedule must not be empty"));
        }
        if budgets.contains(&0) {
            return Err(Error::invalid("budgets", "every budget must be at least 1"));
        }
        Ok(*budgets.iter().max().unwrap())
    }

    pub fn budgets(&self) -> &[usize] {
        &self.budgets
    }

    pub fn len(&self) -> usize {
        self.budgets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.budgets.is_empty()
    }

    pub fn tau_max(&self) -> usize {
        self.tau_max
    }

    /// Total projections over the whole stream.
    pub fn total_projections(&self) -> usize {
        self.budgets.iter().sum()
    }
}

/// Vote accumulator over signal indices.
///
/// Each completed signal adds `tau_j / tau_max` to every index in its
/// support estimate, so a single signal contributes at most 1 to any entry
/// and exactly `k_hat * tau_j / tau_max` in total.
#[derive(Debug, Clone, PartialEq)]
pub struct TallyVector<F> {
    values: Vec<F>,
    signals_seen: usize,
}

impl<F: Real> TallyVector<F> {
    pub fn new(n: usize) -> Self {
        TallyVector {
            values: vec![F::zero(); n],
            signals_seen: 0,
        }
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Completed signals recorded so far.
    pub fn signals_seen(&self) -> usize {
        self.signals_seen
    }

    /// Sum of all entries.
    pub fn total_mass(&self) -> F {
        self.values.iter().fold(F::zero(), |acc, &v| acc + v)
    }

    /// Add `tau_j / tau_max` to every index of `estimate`.
    pub fn record(&mut self, estimate: &SupportSet, tau_j: usize, tau_max: usize) -> Result<()> {
        if estimate.ambient() != self.values.len() {
            return Err(Error::dims(format!(
                "estimate ambient dimension {} does not match tally length {}",
                estimate.ambient(),
                self.values.len()
            )));
        }
        if tau_j == 0 {
            return Err(Error::invalid("tau_j", "budget must be at least 1"));
        }
        if tau_j > tau_max {
            return Err(Error::invalid(
                "tau_j",
                format!("budget {tau_j} exceeds the normalizer tau_max = {tau_max}"),
            ));
        }
        let vote = F::from_count(tau_j) / F::from_count(tau_max);
        for q in estimate.iter() {
            self.values[q] = self.values[q] + vote;
        }
        self.signals_seen += 1;
        Ok(())
    }

    /// Indices of the `k_hat` largest tallies (lexicographic tie-break).
    pub fn top_k(&self, k_hat: usize) -> Result<SupportSet> {
        top_k_by_magnitude(&self.values, k_hat, self.values.len())
    }
}

/// Pure form of [`TallyVector::record`]: returns the updated tally.
pub fn tally_update<F: Real>(
    b: &TallyVector<F>,
    estimate: &SupportSet,
    tau_j: usize,
    tau_max: usize,
) -> Result<TallyVector<F>> {
    let mut next = b.clone();
    next.record(estimate, tau_j, tau_max)?;
    Ok(next)
}

/// One trace entry: the support estimate in force after
/// `projection_index` projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSample {
    pub projection_index: usize,
    pub support_estimate: SupportSet,
}

/// Support-estimate history of one solver run.
///
/// Granularity varies by solver: per projection (single-vector), per outer
/// iteration (batch, `projection_index = t * J`), per completed signal
/// (online, cumulative budget). `skipped_projections` counts draws whose
/// weighted row had zero norm; those consume budget without moving the
/// iterate.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveTrace {
    pub samples: Vec<TraceSample>,
    pub skipped_projections: usize,
}

impl SolveTrace {
    pub(crate) fn with_capacity(len: usize) -> Self {
        SolveTrace {
            samples: Vec::with_capacity(len),
            skipped_projections: 0,
        }
    }

    pub(crate) fn push(&mut self, projection_index: usize, support_estimate: SupportSet) {
        self.samples.push(TraceSample {
            projection_index,
            support_estimate,
        });
    }

    /// The last recorded support estimate, if any projection was traced.
    pub fn final_support(&self) -> Option<&SupportSet> {
        self.samples.last().map(|s| &s.support_estimate)
    }
}
