//! Dense matrix containers.
//!
//! [`RowMatrix`] is the measurement matrix: the solvers only ever touch one
//! row per projection, so it is stored row-major with per-row squared norms
//! cached at construction. [`SignalMatrix`] holds signals (or measurements)
//! as columns, stored column-major so a per-signal solve works on a
//! contiguous slice.

use crate::error::{Error, Result};
use crate::scalar::{sq_norm, Real};

/// Dense `m x n` measurement matrix with row-at-a-time access.
///
/// Row squared norms and the squared Frobenius norm are computed once at
/// construction; `frob_sq` is exactly the sum of `row_sq_norms`.
#[derive(Debug, Clone, PartialEq)]
pub struct RowMatrix<F> {
    m: usize,
    n: usize,
    entries: Vec<F>,
    row_sq_norms: Vec<F>,
    frob_sq: F,
}

impl<F: Real> RowMatrix<F> {
    /// Build from row-major entries. Requires `m, n >= 1` and finite entries.
    pub fn from_entries(m: usize, n: usize, entries: Vec<F>) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("m", "row count must be at least 1"));
        }
        if n == 0 {
            return Err(Error::invalid("n", "column count must be at least 1"));
        }
        if entries.len() != m * n {
            return Err(Error::dims(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                m * n,
                m,
                n,
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::invalid("entries", "matrix entries must be finite"));
        }
        let row_sq_norms: Vec<F> = entries.chunks_exact(n).map(sq_norm).collect();
        let frob_sq = row_sq_norms.iter().fold(F::zero(), |acc, &x| acc + x);
        Ok(Self {
            m,
            n,
            entries,
            row_sq_norms,
            frob_sq,
        })
    }

    /// Build from a list of rows.
    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::invalid("rows", "row count must be at least 1"));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::dims("rows have unequal lengths".to_string()));
        }
        let entries = rows.iter().flatten().copied().collect();
        Self::from_entries(m, n, entries)
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![F::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = F::one();
        }
        Self::from_entries(n, n, entries).expect("identity is valid")
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Row `i` as a contiguous slice.
    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Cached squared 2-norm of row `i`.
    pub fn row_sq_norm(&self, i: usize) -> F {
        self.row_sq_norms[i]
    }

    pub fn row_sq_norms(&self) -> &[F] {
        &self.row_sq_norms
    }

    /// Cached squared Frobenius norm.
    pub fn frob_sq(&self) -> F {
        self.frob_sq
    }

    /// Recompute the norm caches and check they match the stored values.
    pub fn validate_caches(&self) -> bool {
        let mut total = F::zero();
        for i in 0..self.m {
            let fresh = sq_norm(self.row(i));
            if fresh != self.row_sq_norms[i] {
                return false;
            }
            total = total + fresh;
        }
        total == self.frob_sq
    }
}

/// Dense column-major matrix whose columns are signals or measurements.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Real> SignalMatrix<F> {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    /// Build from column-major data.
    pub fn from_data(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dims(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from a list of columns.
    pub fn from_columns(columns: &[Vec<F>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, |c| c.len());
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::dims("columns have unequal lengths".to_string()));
        }
        let data = columns.iter().flatten().copied().collect();
        Self::from_data(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Column `j` as a contiguous slice.
    pub fn col(&self, j: usize) -> &[F] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn col_mut(&mut self, j: usize) -> &mut [F] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[j * self.rows + i]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.data[j * self.rows + i] = value;
    }

    /// Squared 2-norm of every row.
    pub fn row_sq_norms(&self) -> Vec<F> {
        let mut norms = vec![F::zero(); self.rows];
        for j in 0..self.cols {
            for (norm, &v) in norms.iter_mut().zip(self.col(j)) {
                *norm = *norm + v * v;
            }
        }
        norms
    }
}
