//! Exact dense linear algebra: rationals, matrices, subspaces.

mod field;
mod json;
mod matrix;
mod subspace;

pub use field::{format_rational, parse_rational, rat, ratio, Field, Fp, Rational};
pub use json::{matrix_from_json, matrix_to_json, serialize_rational};
pub use matrix::{Matrix, RatMatrix, RowReduction};
pub use subspace::Subspace;

/// Subspace of `ℚⁿ`.
pub type RatSubspace = Subspace<Rational>;

pub fn rank(m: &RatMatrix) -> usize {
    m.rank()
}

pub fn kernel(m: &RatMatrix) -> RatSubspace {
    m.kernel()
}

pub fn solve_affine(m: &RatMatrix, b: &[Rational]) -> Option<(Vec<Rational>, RatSubspace)> {
    m.solve_affine(b)
}

pub fn sum_spaces(u: &RatSubspace, v: &RatSubspace) -> RatSubspace {
    u.sum(v)
}

pub fn intersect_spaces(u: &RatSubspace, v: &RatSubspace) -> RatSubspace {
    u.intersect(v)
}

pub fn preimage(m: &RatMatrix, u: &RatSubspace) -> RatSubspace {
    Subspace::preimage(m, u)
}

/// Linear map `X ↦ left · X · right` on column-major vectorized matrices.
///
/// `X` has shape `left.cols() × right.rows()`; the matrix returned acts on
/// `vec(X)` where entry `(i, j)` sits at index `i + j · rows(X)`.
pub fn sandwich<T: Field>(left: &Matrix<T>, right: &Matrix<T>) -> Matrix<T> {
    right.transpose().kron(left)
}

/// Column-major vectorization.
pub fn vectorize<T: Field>(m: &Matrix<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            out.push(m[(i, j)].clone());
        }
    }
    out
}

/// Inverse of [`vectorize`].
pub fn unvectorize<T: Field>(v: &[T], rows: usize, cols: usize) -> Matrix<T> {
    assert_eq!(v.len(), rows * cols, "contract violation: vector length");
    Matrix::from_fn(rows, cols, |i, j| v[i + j * rows].clone())
}
