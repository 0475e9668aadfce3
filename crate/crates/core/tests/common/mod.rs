//! Shared helpers for integration tests. Each test target compiles its
//! own copy, so not every target uses every helper.
#![allow(dead_code)]

use srk_core::RowMatrix;

/// Solves the least-squares problem `min ||Ax - y||` through the normal
/// equations with Gaussian elimination. Fine as a test oracle on the small,
/// well-conditioned systems used here; not meant for production use.
#[allow(clippy::needless_range_loop)]
pub fn least_squares(matrix: &RowMatrix<f64>, y: &[f64]) -> Vec<f64> {
    let m = matrix.rows();
    let n = matrix.cols();
    assert_eq!(y.len(), m);
    assert!(m >= n, "oracle needs an overdetermined system");

    let mut gram = vec![vec![0.0f64; n]; n];
    let mut rhs = vec![0.0f64; n];
    for i in 0..m {
        let row = matrix.row(i);
        for a in 0..n {
            rhs[a] += row[a] * y[i];
            for b in 0..n {
                gram[a][b] += row[a] * row[b];
            }
        }
    }

    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| gram[a][col].abs().total_cmp(&gram[b][col].abs()))
            .unwrap();
        gram.swap(col, pivot);
        rhs.swap(col, pivot);
        assert!(
            gram[col][col].abs() > 1e-12,
            "oracle hit a singular normal matrix"
        );
        for row in col + 1..n {
            let factor = gram[row][col] / gram[col][col];
            for c in col..n {
                gram[row][c] -= factor * gram[col][c];
            }
            rhs[row] -= factor * rhs[col];
        }
    }

    let mut x = vec![0.0f64; n];
    for col in (0..n).rev() {
        let mut acc = rhs[col];
        for c in col + 1..n {
            acc -= gram[col][c] * x[c];
        }
        x[col] = acc / gram[col][col];
    }
    x
}

/// Squared residual `||Ax - y||^2`.
pub fn residual_sq(matrix: &RowMatrix<f64>, x: &[f64], y: &[f64]) -> f64 {
    (0..matrix.rows())
        .map(|i| {
            let row = matrix.row(i);
            let dot: f64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
            (dot - y[i]).powi(2)
        })
        .sum()
}
