//! Dense row-major matrices over a [`Field`], with exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::field::{Field, Rational};
use super::subspace::Subspace;

/// Dense matrix over the rationals.
pub type RatMatrix = Matrix<Rational>;

/// A dense `rows × cols` matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Output of a full row reduction.
#[derive(Clone, Debug)]
pub struct RowReduction<T> {
    /// Reduced row echelon form; zero rows are kept at the bottom.
    pub reduced: Matrix<T>,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows × cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from a list of rows; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64_rows<const N: usize>(rows: &[[i64; N]]) -> Self {
        Self::from_fn(rows.len(), N, |i, j| T::from_i64(rows[i][j]))
    }

    /// Column vector from a slice.
    pub fn column_vector(v: &[T]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column length mismatch");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "submatrix out of range");
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Assembles a block matrix from a grid of blocks with consistent sizes.
    pub fn block(grid: &[Vec<Self>]) -> Self {
        let mut out: Option<Self> = None;
        for row in grid {
            let mut strip: Option<Self> = None;
            for blk in row {
                strip = Some(match strip {
                    None => blk.clone(),
                    Some(s) => s.hstack(blk),
                });
            }
            let strip = strip.expect("empty block row");
            out = Some(match out {
                None => strip,
                Some(o) => o.vstack(&strip),
            });
        }
        out.expect("empty block grid")
    }

    /// Copies `blk` into `self` with its top-left corner at `(r0, c0)`, adding
    /// to what is already there.
    pub fn add_block(&mut self, r0: usize, c0: usize, blk: &Self) {
        assert!(r0 + blk.rows <= self.rows && c0 + blk.cols <= self.cols, "block out of range");
        for i in 0..blk.rows {
            for j in 0..blk.cols {
                let v = &blk[(i, j)];
                if !v.is_zero() {
                    let cell = &mut self[(r0 + i, c0 + j)];
                    *cell = cell.add(v);
                }
            }
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = other.shape();
        let mut out = Self::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * p + k, j * q + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    fn to_row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Picks the nonzero entry of least `pivot_cost` in column `col` among rows
    /// `start..`.
    fn choose_pivot(rows: &[Vec<T>], start: usize, col: usize) -> Option<usize> {
        rows.iter()
            .enumerate()
            .skip(start)
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].pivot_cost())
            .map(|(i, _)| i)
    }

    /// Exact rank by forward elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_row_vecs();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = Self::choose_pivot(&rows, rank, col) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let pivot_inv = pivot_row[col].inv();
            for row in tail.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = row[col].mul(&pivot_inv);
                row[col] = T::zero();
                for j in col + 1..self.cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = row[j].sub(&factor.mul(&pivot_row[j]));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> RowReduction<T> {
        let mut rows = self.to_row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = Self::choose_pivot(&rows, r, col) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][col].inv();
            for x in rows[r][col..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for j in col..self.cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = row[j].sub(&factor.mul(&pivot_row[j]));
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        RowReduction { reduced: Self::from_rows(rows, self.cols), pivots }
    }

    /// Null space `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace<T> {
        let RowReduction { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<T>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![T::zero(); self.cols];
                v[free] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = reduced[(i, free)].neg();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.cols, &basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace<T> {
        Subspace::span_columns(self)
    }

    /// Solves `self · x = b`. Returns `None` iff `b` is not in the image;
    /// otherwise one particular solution and the kernel.
    pub fn solve_affine(&self, b: &[T]) -> Option<(Vec<T>, Subspace<T>)> {
        assert_eq!(b.len(), self.rows, "right-hand side length must equal row count");
        let augmented = self.hstack(&Self::column_vector(b));
        let RowReduction { reduced, pivots } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(i, self.cols)].clone();
        }
        Some((x, self.kernel()))
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let RowReduction { reduced, pivots } = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        Some(reduced.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "cannot multiply {}×{} by {}×{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cell = &mut out[(i, j)];
                        *cell = cell.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in addition");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in subtraction");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(Field::neg)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}×{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::field::{rat, ratio};

    fn m<const N: usize>(rows: &[[i64; N]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rank_of_zero_identity_and_vandermonde() {
        assert_eq!(RatMatrix::zeros(3, 3).rank(), 0);
        for n in 0..5 {
            assert_eq!(RatMatrix::identity(n).rank(), n);
        }
        let vandermonde = m(&[[1, 1, 1], [1, 2, 4], [1, 3, 9]]);
        assert_eq!(vandermonde.rank(), 3);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::identity(3).kernel().dim(), 0);
        let zero = RatMatrix::zeros(2, 4);
        assert_eq!(zero.kernel(), Subspace::full(4));

        let ones = m(&[[1, 1], [1, 1]]);
        let expected = Subspace::from_vectors(2, &[vec![rat(1), rat(-1)]]);
        assert_eq!(ones.kernel(), expected);
    }

    #[test]
    fn solve_affine_examples() {
        let b = vec![rat(3), ratio(-1, 2), rat(7)];
        let (x, k) = RatMatrix::identity(3).solve_affine(&b).unwrap();
        assert_eq!(x, b);
        assert_eq!(k.dim(), 0);

        assert!(RatMatrix::zeros(2, 2).solve_affine(&[rat(1), rat(0)]).is_none());

        let a = m(&[[1, 2], [2, 4]]);
        let (x, k) = a.solve_affine(&[rat(1), rat(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(1), rat(2)]);
        assert_eq!(k, Subspace::from_vectors(2, &[vec![rat(-2), rat(1)]]));
        assert!(a.solve_affine(&[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn inverse_and_singularity() {
        let a = m(&[[2, 1], [7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(2));
        assert!(m(&[[1, 2], [2, 4]]).inverse().is_none());
        assert!(RatMatrix::zeros(2, 3).inverse().is_none());
    }

    #[test]
    fn kron_matches_definition() {
        let a = m(&[[1, 2], [3, 4]]);
        let b = m(&[[0, 5], [6, 7]]);
        let k = a.kron(&b);
        assert_eq!(k.shape(), (4, 4));
        for i in 0..2 {
            for j in 0..2 {
                for p in 0..2 {
                    for q in 0..2 {
                        assert_eq!(k[(2 * i + p, 2 * j + q)], &a[(i, j)] * &b[(p, q)]);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_shapes() {
        let e = RatMatrix::zeros(0, 3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().dim(), 3);
        let f = RatMatrix::zeros(3, 0);
        assert_eq!(f.rank(), 0);
        assert_eq!(f.kernel().dim(), 0);
        assert_eq!((&f * &e).shape(), (3, 3));
    }
}
