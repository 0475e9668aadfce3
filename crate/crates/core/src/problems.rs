//! Random problem instances.
//!
//! An instance is a measurement matrix, a jointly sparse signal matrix
//! whose columns share one support set, per-signal corruptions outside
//! that support, and the exact measurements of the corrupted signals.
//! Everything is driven by an explicit [`Rng`], so an instance is a pure
//! function of its spec and seed.

use std::fs::File;
use std::io::{self, BufWriter, Write as _};
use std::path::Path;
use std::str::FromStr;

use rand::seq::index::sample as index_sample;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::matrix::{RowMatrix, SignalMatrix};
use crate::rng::Rng;
use crate::scalar::{dot, Real};
use crate::solvers::OnlineSchedule;
use crate::support::SupportSet;

/// Distribution of the measurement matrix entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ensemble {
    /// Entries i.i.d. standard normal.
    Gaussian,
    /// Entries i.i.d. uniform on `[0, 1)`.
    Uniform01,
}

impl Ensemble {
    pub fn name(self) -> &'static str {
        match self {
            Ensemble::Gaussian => "gaussian",
            Ensemble::Uniform01 => "uniform01",
        }
    }
}

impl FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(Ensemble::Gaussian),
            "uniform01" => Ok(Ensemble::Uniform01),
            other => Err(Error::invalid(
                "ensemble",
                format!("unknown ensemble `{other}` (expected gaussian or uniform01)"),
            )),
        }
    }
}

/// How the joint support is placed in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportPlacement {
    /// Uniformly random size-`k` subset.
    UniformRandom,
    /// Contiguous block of `k` indices at a uniformly random start.
    ContiguousBlock,
}

/// Per-signal corruption model: each column gains between `count_min` and
/// `count_max` nonzeros outside the joint support, with values drawn from
/// a normal distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorruptionSpec<F> {
    pub count_min: usize,
    pub count_max: usize,
    pub mean: F,
    pub std: F,
}

impl<F: Real> CorruptionSpec<F> {
    /// No corruptions at all.
    pub fn none() -> Self {
        CorruptionSpec {
            count_min: 0,
            count_max: 0,
            mean: F::zero(),
            std: F::zero(),
        }
    }

    /// Exactly `count` corruptions per signal.
    pub fn fixed(count: usize, mean: F, std: F) -> Self {
        CorruptionSpec {
            count_min: count,
            count_max: count,
            mean,
            std,
        }
    }

    /// Uniformly random count in `[count_min, count_max]` per signal.
    pub fn ranged(count_min: usize, count_max: usize, mean: F, std: F) -> Self {
        CorruptionSpec {
            count_min,
            count_max,
            mean,
            std,
        }
    }

    pub(crate) fn validate(&self, n: usize, k: usize) -> Result<()> {
        if self.count_min > self.count_max {
            return Err(Error::invalid(
                "count_min",
                format!(
                    "count_min {} exceeds count_max {}",
                    self.count_min, self.count_max
                ),
            ));
        }
        if self.count_max > n - k {
            return Err(Error::invalid(
                "count_max",
                format!("count_max {} exceeds n - k = {}", self.count_max, n - k),
            ));
        }
        if !self.mean.is_finite() || !self.std.is_finite() || self.std < F::zero() {
            return Err(Error::invalid(
                "std",
                "corruption mean must be finite and std finite and nonnegative".to_string(),
            ));
        }
        if self.count_max > 0 && self.mean == F::zero() && self.std == F::zero() {
            return Err(Error::invalid(
                "std",
                "corruption distribution is identically zero but corruptions were requested"
                    .to_string(),
            ));
        }
        Ok(())
    }
}

/// Everything needed to generate a [`ProblemInstance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSpec<F> {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// Number of signal columns (J).
    pub signals: usize,
    pub ensemble: Ensemble,
    pub placement: SupportPlacement,
    pub corruption: CorruptionSpec<F>,
}

impl<F: Real> InstanceSpec<F> {
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::invalid("m", "row count must be at least 1"));
        }
        if self.n == 0 {
            return Err(Error::invalid("n", "column count must be at least 1"));
        }
        if self.k == 0 || self.k > self.n {
            return Err(Error::invalid(
                "k",
                format!("must be in [1, {}], got {}", self.n, self.k),
            ));
        }
        if self.signals == 0 {
            return Err(Error::invalid("signals", "need at least one signal"));
        }
        self.corruption.validate(self.n, self.k)
    }
}

/// A generated problem: matrix, corrupted signals, exact measurements,
/// and the ground truth the solvers are judged against.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance<F> {
    pub matrix: RowMatrix<F>,
    pub x_true: SignalMatrix<F>,
    pub y: SignalMatrix<F>,
    pub joint_support: SupportSet,
    pub corruption_sets: Vec<SupportSet>,
}

impl<F: Real> ProblemInstance<F> {
    /// Check every structural invariant; used by tests and `gen-instance`.
    pub fn validate(&self) -> Result<()> {
        let (m, n) = (self.matrix.rows(), self.matrix.cols());
        let j = self.x_true.cols();
        if self.x_true.rows() != n || self.y.rows() != m || self.y.cols() != j {
            return Err(Error::dims("instance dimensions disagree".to_string()));
        }
        if self.corruption_sets.len() != j {
            return Err(Error::dims(format!(
                "{} corruption sets for {j} signals",
                self.corruption_sets.len()
            )));
        }
        for (col, corrupt) in self.corruption_sets.iter().enumerate() {
            if corrupt.ambient() != n {
                return Err(Error::dims("corruption set ambient mismatch".to_string()));
            }
            if corrupt.intersection_len(&self.joint_support) != 0 {
                return Err(Error::invalid(
                    "corruption_sets",
                    format!("signal {col} corruption overlaps the joint support"),
                ));
            }
            for q in 0..n {
                let nonzero = self.x_true.get(q, col) != F::zero();
                let expected = self.joint_support.contains(q) || corrupt.contains(q);
                if nonzero != expected {
                    return Err(Error::invalid(
                        "x_true",
                        format!("signal {col} support differs from S and C at index {q}"),
                    ));
                }
            }
        }
        let reference = synthesize(&self.matrix, &self.x_true)?;
        let tol = F::from(1e-10).unwrap();
        for col in 0..j {
            for (got, want) in self.y.col(col).iter().zip(reference.col(col)) {
                let scale = F::one().max(want.abs());
                if (*got - *want).abs() > tol * scale {
                    return Err(Error::invalid(
                        "y",
                        format!("measurements disagree with matrix * x_true at column {col}"),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Uniformly random size-`k` subset of `[0, n)`.
pub fn gen_joint_support(n: usize, k: usize, rng: &mut Rng) -> Result<SupportSet> {
    if k == 0 || k > n {
        return Err(Error::invalid("k", format!("must be in [1, {n}], got {k}")));
    }
    SupportSet::new(index_sample(rng, n, k).into_vec(), n)
}

/// Contiguous block of `k` indices with a uniformly random start.
pub fn gen_contiguous_support(n: usize, k: usize, rng: &mut Rng) -> Result<SupportSet> {
    if k == 0 || k > n {
        return Err(Error::invalid("k", format!("must be in [1, {n}], got {k}")));
    }
    let start = rng.gen_range(0..=n - k);
    SupportSet::new((start..start + k).collect(), n)
}

/// Jointly sparse signal matrix: standard-normal entries on the support
/// rows, exact zeros elsewhere.
pub fn gen_signals<F: Real>(
    n: usize,
    signals: usize,
    support: &SupportSet,
    rng: &mut Rng,
) -> Result<SignalMatrix<F>> {
    if support.ambient() != n {
        return Err(Error::dims(format!(
            "support ambient dimension {} does not match n = {n}",
            support.ambient()
        )));
    }
    let mut x = SignalMatrix::zeros(n, signals);
    for j in 0..signals {
        let col = x.col_mut(j);
        for q in support.iter() {
            col[q] = nonzero_normal(F::zero(), F::one(), rng);
        }
    }
    Ok(x)
}

/// Draw from N(mean, std^2), resampling the measure-zero exact-0.0 result
/// so generated supports are never silently smaller than intended.
fn nonzero_normal<F: Real>(mean: F, std: F, rng: &mut Rng) -> F {
    loop {
        let v = mean + std * F::standard_normal(rng);
        if v != F::zero() {
            return v;
        }
    }
}

/// Corrupt each signal column at a random set of indices outside `support`.
///
/// Column `j` gains `c_j` new nonzeros with `c_j` uniform in
/// `[count_min, count_max]`, positions uniform over the complement of the
/// joint support, values from N(mean, std^2).
pub fn add_corruptions<F: Real>(
    x: &SignalMatrix<F>,
    support: &SupportSet,
    spec: &CorruptionSpec<F>,
    rng: &mut Rng,
) -> Result<(SignalMatrix<F>, Vec<SupportSet>)> {
    let n = x.rows();
    if support.ambient() != n {
        return Err(Error::dims(format!(
            "support ambient dimension {} does not match n = {n}",
            support.ambient()
        )));
    }
    spec.validate(n, support.len())?;
    let complement: Vec<usize> = (0..n).filter(|&q| !support.contains(q)).collect();
    let mut corrupted = x.clone();
    let mut sets = Vec::with_capacity(x.cols());
    for j in 0..x.cols() {
        let count = rng.gen_range(spec.count_min..=spec.count_max);
        let mut indices = Vec::with_capacity(count);
        for pick in index_sample(rng, complement.len(), count) {
            let q = complement[pick];
            corrupted.set(q, j, nonzero_normal(spec.mean, spec.std, rng));
            indices.push(q);
        }
        sets.push(SupportSet::new(indices, n)?);
    }
    Ok((corrupted, sets))
}

/// Random `m x n` measurement matrix from the chosen ensemble.
pub fn gen_matrix<F: Real>(
    m: usize,
    n: usize,
    ensemble: Ensemble,
    rng: &mut Rng,
) -> Result<RowMatrix<F>> {
    let entries = (0..m.saturating_mul(n))
        .map(|_| match ensemble {
            Ensemble::Gaussian => F::standard_normal(rng),
            Ensemble::Uniform01 => F::unit_uniform(rng),
        })
        .collect();
    RowMatrix::from_entries(m, n, entries)
}

/// Per-signal budgets: with probability `p_stall` the budget is uniform in
/// `long_range`, otherwise uniform in `short_range` (both inclusive).
pub fn gen_online_schedule(
    signals: usize,
    p_stall: f64,
    short_range: (usize, usize),
    long_range: (usize, usize),
    rng: &mut Rng,
) -> Result<OnlineSchedule> {
    if !(0.0..=1.0).contains(&p_stall) {
        return Err(Error::invalid(
            "p_stall",
            format!("must be in [0, 1], got {p_stall}"),
        ));
    }
    for (name, (lo, hi)) in [("short_range", short_range), ("long_range", long_range)] {
        if lo == 0 || lo > hi {
            return Err(Error::invalid(
                name,
                format!("must satisfy 1 <= lo <= hi, got [{lo}, {hi}]"),
            ));
        }
    }
    if signals == 0 {
        return Err(Error::invalid("signals", "need at least one signal"));
    }
    let budgets = (0..signals)
        .map(|_| {
            let (lo, hi) = if rng.gen_bool(p_stall) {
                long_range
            } else {
                short_range
            };
            rng.gen_range(lo..=hi)
        })
        .collect();
    OnlineSchedule::from_budgets(budgets)
}

/// Exact measurements `Y = matrix * x`, column by column.
pub fn synthesize<F: Real>(matrix: &RowMatrix<F>, x: &SignalMatrix<F>) -> Result<SignalMatrix<F>> {
    if x.rows() != matrix.cols() {
        return Err(Error::dims(format!(
            "signal rows {} do not match matrix columns {}",
            x.rows(),
            matrix.cols()
        )));
    }
    let mut y = SignalMatrix::zeros(matrix.rows(), x.cols());
    for j in 0..x.cols() {
        let xj = x.col(j);
        let yj = y.col_mut(j);
        for (i, out) in yj.iter_mut().enumerate() {
            *out = dot(matrix.row(i), xj);
        }
    }
    Ok(y)
}

/// Generate a full instance from one spec and one rng stream.
///
/// Draw order is fixed (matrix, support, signals, corruptions), so equal
/// seeds give byte-identical instances.
pub fn generate<F: Real>(spec: &InstanceSpec<F>, rng: &mut Rng) -> Result<ProblemInstance<F>> {
    spec.validate()?;
    let matrix = gen_matrix(spec.m, spec.n, spec.ensemble, rng)?;
    let joint_support = match spec.placement {
        SupportPlacement::UniformRandom => gen_joint_support(spec.n, spec.k, rng)?,
        SupportPlacement::ContiguousBlock => gen_contiguous_support(spec.n, spec.k, rng)?,
    };
    let clean = gen_signals(spec.n, spec.signals, &joint_support, rng)?;
    let (x_true, corruption_sets) = add_corruptions(&clean, &joint_support, &spec.corruption, rng)?;
    let y = synthesize(&matrix, &x_true)?;
    Ok(ProblemInstance {
        matrix,
        x_true,
        y,
        joint_support,
        corruption_sets,
    })
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Dump a matrix as text: first line `m n`, then one line per row.
pub fn write_matrix_text<F: Real>(matrix: &RowMatrix<F>, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path).map_err(io_error(path))?);
    write_table(&mut out, matrix.rows(), matrix.cols(), |i, q| {
        matrix.row(i)[q]
    })
    .map_err(io_error(path))
}

/// Dump a signal (or measurement) matrix as text, row by row.
pub fn write_signals_text<F: Real>(x: &SignalMatrix<F>, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path).map_err(io_error(path))?);
    write_table(&mut out, x.rows(), x.cols(), |i, j| x.get(i, j)).map_err(io_error(path))
}

fn write_table<F: Real, W: io::Write>(
    out: &mut W,
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> F,
) -> io::Result<()> {
    writeln!(out, "{rows} {cols}")?;
    for i in 0..rows {
        for j in 0..cols {
            if j > 0 {
                write!(out, " ")?;
            }
            write!(out, "{}", entry(i, j))?;
        }
        writeln!(out)?;
    }
    out.flush()
}

/// Dump a support set: first line `len n`, second line the indices.
pub fn write_support_text(support: &SupportSet, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path).map_err(io_error(path))?);
    write_index_line(&mut out, support, true).map_err(io_error(path))
}

/// Dump per-signal corruption sets: first line `J n`, then one line per
/// signal listing its count followed by its indices.
pub fn write_corruptions_text(sets: &[SupportSet], path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path).map_err(io_error(path))?);
    let inner = |out: &mut BufWriter<File>| -> io::Result<()> {
        let n = sets.first().map_or(0, SupportSet::ambient);
        writeln!(out, "{} {n}", sets.len())?;
        for set in sets {
            write_index_line(out, set, false)?;
        }
        out.flush()
    };
    inner(&mut out).map_err(io_error(path))
}

fn write_index_line<W: io::Write>(
    out: &mut W,
    set: &SupportSet,
    with_header: bool,
) -> io::Result<()> {
    if with_header {
        writeln!(out, "{} {}", set.len(), set.ambient())?;
    } else {
        write!(out, "{}", set.len())?;
    }
    let mut first = with_header;
    for q in set.iter() {
        if first {
            write!(out, "{q}")?;
            first = false;
        } else {
            write!(out, " {q}")?;
        }
    }
    writeln!(out)?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn full_support_is_forced() {
        let mut rng = Rng::new(0);
        let s = gen_joint_support(5, 5, &mut rng).unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn support_size_and_range() {
        let mut rng = Rng::new(1);
        let s = gen_joint_support(100, 10, &mut rng).unwrap();
        assert_eq!(s.len(), 10);
        assert!(s.iter().all(|q| q < 100));
        assert!(gen_joint_support(4, 5, &mut rng).is_err());
    }

    #[test]
    fn subsets_are_uniform() {
        let mut rng = Rng::new(2);
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        let draws = 60_000;
        for _ in 0..draws {
            let s = gen_joint_support(4, 2, &mut rng).unwrap();
            *counts.entry(s.as_slice().to_vec()).or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        for (subset, count) in counts {
            let freq = count as f64 / draws as f64;
            assert!(
                (freq - 1.0 / 6.0).abs() < 0.01,
                "subset {subset:?} frequency {freq}"
            );
        }
    }

    #[test]
    fn contiguous_block_is_contiguous() {
        let mut rng = Rng::new(3);
        for _ in 0..50 {
            let s = gen_contiguous_support(20, 6, &mut rng).unwrap();
            let idx = s.as_slice();
            assert_eq!(idx.len(), 6);
            assert!(idx.windows(2).all(|w| w[1] == w[0] + 1));
            assert!(idx[5] < 20);
        }
    }

    #[test]
    fn signals_live_on_the_support() {
        let mut rng = Rng::new(4);
        let s = SupportSet::new(vec![1], 3).unwrap();
        let x: SignalMatrix<f64> = gen_signals(3, 2, &s, &mut rng).unwrap();
        for j in 0..2 {
            assert_eq!(x.get(0, j), 0.0);
            assert_ne!(x.get(1, j), 0.0);
            assert_eq!(x.get(2, j), 0.0);
        }

        let empty = SupportSet::empty(3);
        let z: SignalMatrix<f64> = gen_signals(3, 4, &empty, &mut rng).unwrap();
        assert!((0..4).all(|j| z.col(j).iter().all(|&v| v == 0.0)));
    }

    #[test]
    fn signal_moments_match_standard_normal() {
        let mut rng = Rng::new(5);
        let s = gen_joint_support(100, 10, &mut rng).unwrap();
        let x: SignalMatrix<f64> = gen_signals(100, 300, &s, &mut rng).unwrap();
        let mut values = Vec::new();
        for j in 0..300 {
            for q in s.iter() {
                values.push(x.get(q, j));
            }
        }
        let len = values.len() as f64;
        let mean = values.iter().sum::<f64>() / len;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / len;
        assert_eq!(values.len(), 3000);
        assert!(mean.abs() < 0.06, "sample mean {mean}");
        assert!((var - 1.0).abs() < 0.1, "sample variance {var}");
    }

    #[test]
    fn zero_corruption_count_changes_nothing() {
        let mut rng = Rng::new(6);
        let s = gen_joint_support(10, 3, &mut rng).unwrap();
        let x: SignalMatrix<f64> = gen_signals(10, 5, &s, &mut rng).unwrap();
        let (out, sets) = add_corruptions(&x, &s, &CorruptionSpec::none(), &mut rng).unwrap();
        assert_eq!(out, x);
        assert!(sets.iter().all(SupportSet::is_empty));
    }

    #[test]
    fn one_corruption_per_column_lands_outside_support() {
        let mut rng = Rng::new(7);
        let s = gen_joint_support(100, 10, &mut rng).unwrap();
        let x: SignalMatrix<f64> = gen_signals(100, 20, &s, &mut rng).unwrap();
        let spec = CorruptionSpec::fixed(1, 7.0, 1.0);
        let (out, sets) = add_corruptions(&x, &s, &spec, &mut rng).unwrap();
        for (j, set) in sets.iter().enumerate() {
            assert_eq!(set.len(), 1);
            assert_eq!(set.intersection_len(&s), 0);
            let q = set.as_slice()[0];
            assert_ne!(out.get(q, j), 0.0);
            assert_eq!(x.get(q, j), 0.0);
        }
    }

    #[test]
    fn corruption_values_center_on_the_mean() {
        let mut rng = Rng::new(8);
        let s = gen_joint_support(100, 10, &mut rng).unwrap();
        let x: SignalMatrix<f64> = gen_signals(100, 300, &s, &mut rng).unwrap();
        let spec = CorruptionSpec::ranged(1, 3, 7.0, 1.0);
        let (out, sets) = add_corruptions(&x, &s, &spec, &mut rng).unwrap();
        let mut values = Vec::new();
        for (j, set) in sets.iter().enumerate() {
            assert!((1..=3).contains(&set.len()));
            for q in set.iter() {
                values.push(out.get(q, j));
            }
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        assert!((mean - 7.0).abs() < 0.2, "corruption mean {mean}");
    }

    #[test]
    fn corruption_spec_bounds_are_checked() {
        let mut rng = Rng::new(9);
        let s = gen_joint_support(10, 8, &mut rng).unwrap();
        let x: SignalMatrix<f64> = gen_signals(10, 2, &s, &mut rng).unwrap();
        let too_many = CorruptionSpec::fixed(3, 7.0, 1.0);
        assert!(add_corruptions(&x, &s, &too_many, &mut rng).is_err());
        let zero_dist = CorruptionSpec::fixed(1, 0.0, 0.0);
        assert!(add_corruptions(&x, &s, &zero_dist, &mut rng).is_err());
    }

    #[test]
    fn uniform01_entries_stay_in_range() {
        let mut rng = Rng::new(10);
        let m: RowMatrix<f64> = gen_matrix(50, 20, Ensemble::Uniform01, &mut rng).unwrap();
        for i in 0..50 {
            assert!(m.row(i).iter().all(|&v| (0.0..1.0).contains(&v)));
        }
    }

    #[test]
    fn gaussian_frobenius_concentrates() {
        let mut rng = Rng::new(11);
        let m: RowMatrix<f64> = gen_matrix(1000, 100, Ensemble::Gaussian, &mut rng).unwrap();
        let f2 = m.frob_sq();
        assert!((90_000.0..110_000.0).contains(&f2), "frobenius^2 {f2}");
    }

    #[test]
    fn uniform01_mean_is_half() {
        let mut rng = Rng::new(12);
        let m: RowMatrix<f64> = gen_matrix(1000, 100, Ensemble::Uniform01, &mut rng).unwrap();
        let total: f64 = (0..1000).map(|i| m.row(i).iter().sum::<f64>()).sum();
        let mean = total / 100_000.0;
        assert!((mean - 0.5).abs() < 0.01, "mean entry {mean}");
    }

    #[test]
    fn schedule_extremes_follow_p_stall() {
        let mut rng = Rng::new(13);
        let short = gen_online_schedule(50, 0.0, (5, 15), (95, 100), &mut rng).unwrap();
        assert!(short.budgets().iter().all(|&b| (5..=15).contains(&b)));
        let long = gen_online_schedule(50, 1.0, (5, 15), (95, 100), &mut rng).unwrap();
        assert!(long.budgets().iter().all(|&b| (95..=100).contains(&b)));
    }

    #[test]
    fn schedule_long_fraction_matches_binomial() {
        let mut rng = Rng::new(14);
        let s = gen_online_schedule(800, 0.1, (5, 15), (95, 100), &mut rng).unwrap();
        let long_count = s.budgets().iter().filter(|&&b| b >= 95).count();
        assert!(
            (55..=105).contains(&long_count),
            "long budgets {long_count} outside 80 +- 25"
        );
        assert_eq!(s.tau_max(), *s.budgets().iter().max().unwrap());
    }

    #[test]
    fn schedule_validation() {
        let mut rng = Rng::new(15);
        assert!(gen_online_schedule(10, -0.1, (5, 15), (95, 100), &mut rng).is_err());
        assert!(gen_online_schedule(10, 0.5, (15, 5), (95, 100), &mut rng).is_err());
        assert!(gen_online_schedule(10, 0.5, (5, 15), (0, 100), &mut rng).is_err());
        assert!(gen_online_schedule(0, 0.5, (5, 15), (95, 100), &mut rng).is_err());
    }

    #[test]
    fn synthesize_matches_triple_loop() {
        let mut rng = Rng::new(16);
        let matrix: RowMatrix<f64> = gen_matrix(3, 2, Ensemble::Gaussian, &mut rng).unwrap();
        let x = SignalMatrix::from_columns(&[vec![1.0, -2.0], vec![0.5, 0.25]]).unwrap();
        let y = synthesize(&matrix, &x).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                let mut want = 0.0;
                for q in 0..2 {
                    want += matrix.row(i)[q] * x.get(q, j);
                }
                assert!((y.get(i, j) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn synthesize_identity_and_zero() {
        let eye = RowMatrix::<f64>::identity(3);
        let zero = SignalMatrix::zeros(3, 2);
        assert_eq!(synthesize(&eye, &zero).unwrap(), zero);
        let x = SignalMatrix::from_columns(&[vec![1.0, 2.0, 3.0]]).unwrap();
        assert_eq!(synthesize(&eye, &x).unwrap(), x);
    }

    fn small_spec() -> InstanceSpec<f64> {
        InstanceSpec {
            m: 30,
            n: 12,
            k: 3,
            signals: 8,
            ensemble: Ensemble::Gaussian,
            placement: SupportPlacement::UniformRandom,
            corruption: CorruptionSpec::fixed(2, 7.0, 1.0),
        }
    }

    #[test]
    fn generated_instances_validate() {
        for seed in 0..20 {
            let mut rng = Rng::new(seed);
            let inst = generate(&small_spec(), &mut rng).unwrap();
            inst.validate().unwrap();
            assert_eq!(inst.joint_support.len(), 3);
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let mut a = Rng::new(77);
        let mut b = Rng::new(77);
        assert_eq!(
            generate(&small_spec(), &mut a).unwrap(),
            generate(&small_spec(), &mut b).unwrap()
        );
    }

    #[test]
    fn instance_validator_rejects_tampering() {
        let mut rng = Rng::new(21);
        let mut inst = generate(&small_spec(), &mut rng).unwrap();
        let q = inst.joint_support.as_slice()[0];
        inst.x_true.set(q, 0, 0.0);
        assert!(inst.validate().is_err());
    }

    #[test]
    fn text_dumps_round_trip_values() {
        let dir = tempfile::tempdir().unwrap();
        let mut rng = Rng::new(22);
        let inst = generate(&small_spec(), &mut rng).unwrap();

        let mpath = dir.path().join("matrix.txt");
        write_matrix_text(&inst.matrix, &mpath).unwrap();
        let text = std::fs::read_to_string(&mpath).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "30 12");
        let first: Vec<f64> = lines
            .next()
            .unwrap()
            .split(' ')
            .map(|v| v.parse().unwrap())
            .collect();
        assert_eq!(&first[..], inst.matrix.row(0));

        let spath = dir.path().join("support.txt");
        write_support_text(&inst.joint_support, &spath).unwrap();
        let text = std::fs::read_to_string(&spath).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "3 12");
        let idx: Vec<usize> = lines
            .next()
            .unwrap()
            .split(' ')
            .map(|v| v.parse().unwrap())
            .collect();
        assert_eq!(&idx[..], inst.joint_support.as_slice());

        let cpath = dir.path().join("corruptions.txt");
        write_corruptions_text(&inst.corruption_sets, &cpath).unwrap();
        let text = std::fs::read_to_string(&cpath).unwrap();
        assert_eq!(text.lines().count(), 9);
        assert_eq!(text.lines().next().unwrap(), "8 12");
    }
}
