//! Linear subspaces of `F^n` in canonical form.
//!
//! A subspace is stored by a basis matrix whose columns are the transposed
//! rows of the reduced row echelon form of any spanning set. That form is
//! unique, so structural equality is equality of subspaces.

use super::field::Field;
use super::matrix::Matrix;

#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// Span of the columns of `generators`.
    pub fn span_columns(generators: &Matrix<T>) -> Self {
        let ambient = generators.rows();
        let red = generators.transpose().rref();
        let k = red.pivots.len();
        let basis = red.reduced.submatrix(0..k, 0..ambient).transpose();
        Subspace { ambient, basis }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<T>]) -> Self {
        Self::span_columns(&Matrix::from_columns(ambient, vectors))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<Vec<T>> = indices
            .into_iter()
            .map(|k| {
                let mut v = vec![T::zero(); ambient];
                v[k] = T::one();
                v
            })
            .collect();
        Self::from_vectors(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis as columns.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis.columns()
    }

    fn check_ambient(&self, other: &Self) {
        assert_eq!(self.ambient, other.ambient, "contract violation: subspaces live in different ambient spaces");
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.check_ambient(other);
        Self::span_columns(&self.basis.hstack(&other.basis))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.check_ambient(other);
        // Solutions of U·x = V·y, mapped back through U.
        let stacked = self.basis.hstack(&-&other.basis);
        let k = stacked.kernel();
        let coeffs = k.basis().submatrix(0..self.dim(), 0..k.dim());
        Self::span_columns(&(&self.basis * &coeffs))
    }

    pub fn contains_vector(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient, "contract violation: vector length");
        self.basis.hstack(&Matrix::column_vector(v)).rank() == self.dim()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.check_ambient(other);
        self.basis.hstack(&other.basis).rank() == self.dim()
    }

    /// Image `M(U)` of this subspace under `map`.
    pub fn image_under(&self, map: &Matrix<T>) -> Self {
        assert_eq!(map.cols(), self.ambient, "contract violation: map domain");
        Self::span_columns(&(map * &self.basis))
    }

    /// Vectors annihilating this subspace, as columns of a `n × (n − dim)`
    /// matrix.
    pub fn annihilator(&self) -> Matrix<T> {
        self.basis.transpose().kernel().basis().clone()
    }

    /// Preimage `M⁻¹(U)`.
    pub fn preimage(map: &Matrix<T>, target: &Self) -> Self {
        assert_eq!(map.rows(), target.ambient, "contract violation: map codomain");
        let ann = target.annihilator();
        (&ann.transpose() * map).kernel()
    }

    /// Whether `map(U) ⊆ U`.
    pub fn is_invariant_under(&self, map: &Matrix<T>) -> bool {
        self.contains(&self.image_under(map))
    }
}
