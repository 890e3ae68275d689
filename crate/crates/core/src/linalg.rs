//! Small dense complex linear algebra used by every other module.
//!
//! Blocks are at most a few dozen rows, so everything goes through
//! nalgebra's dense Hermitian eigensolver.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Eigenvalues relative to the largest one below this count as zero.
pub const RANK_TOL: f64 = 1e-10;

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: CMatrix,
}

/// Diagonalizes the Hermitian part `(m + m†)/2` of a square matrix.
pub fn hermitian_eigen(m: &CMatrix) -> HermitianEigen {
    let n = m.nrows();
    if n == 0 {
        return HermitianEigen {
            values: Vec::new(),
            vectors: CMatrix::zeros(0, 0),
        };
    }
    let herm = (m + m.adjoint()).scale(0.5);
    let eig = SymmetricEigen::new(herm);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    HermitianEigen { values, vectors }
}

/// Largest entry of `|M - M†| / 2`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm() / 2.0;
            worst = worst.max(d);
        }
    }
    worst
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// `exp(-i t H)` for Hermitian `H`, through its eigendecomposition.
pub fn unitary_exp(h: &CMatrix, t: f64) -> CMatrix {
    let n = h.nrows();
    if t == 0.0 {
        return CMatrix::identity(n, n);
    }
    let eig = hermitian_eigen(h);
    let phases = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        n,
        eig.values.iter().map(|&v| Complex64::from_polar(1.0, -t * v)),
    ));
    &eig.vectors * phases * eig.vectors.adjoint()
}

/// Trace norm of a Hermitian matrix: the sum of its absolute eigenvalues.
pub fn trace_norm_hermitian(m: &CMatrix) -> f64 {
    hermitian_eigen(m).values.iter().map(|v| v.abs()).sum()
}

/// Max entrywise modulus, used for approximate matrix comparisons.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `x^e` with the convention `0^e = 0` for every `e`, including `e = 0`.
///
/// A zero eigenvalue or zero weight never contributes to an overlap, which
/// makes the endpoint values at `s = 0` and `s = 1` the continuous limits.
pub(crate) fn pow0(x: f64, e: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

/// Numerically stable `ln Σ exp(t_k)`; `-inf` for an empty input.
pub(crate) fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}
