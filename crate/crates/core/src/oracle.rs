//! Brute-force stability oracle over tiny prime fields.
//!
//! Everything here uses its own residue arithmetic and never touches the
//! generic elimination code, so agreement with the closure algorithm is an
//! independent check.

use std::collections::HashSet;

use crate::error::{CoreError, Result};
use crate::exactmat::{Fp, Matrix, RatMatrix};

pub const MAX_DIM: usize = 4;
pub const MODULI: [u32; 2] = [2, 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    modulus: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FpMatrix {
    /// Row-major entries, reduced into `[0, modulus)`.
    pub fn new(modulus: u32, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert!(modulus >= 2, "contract violation: modulus");
        assert_eq!(entries.len(), rows * cols, "contract violation: entry count");
        let m = modulus as i64;
        let entries = entries.iter().map(|e| e.rem_euclid(m) as u32).collect();
        FpMatrix { modulus, rows, cols, entries }
    }

    pub fn zeros(modulus: u32, rows: usize, cols: usize) -> Self {
        FpMatrix::new(modulus, rows, cols, &vec![0; rows * cols])
    }

    /// Reduction of a rational matrix, `None` if a denominator vanishes mod p.
    pub fn from_rational(m: &RatMatrix, modulus: u32) -> Option<Self> {
        let mut entries = Vec::with_capacity(m.rows() * m.cols());
        for q in m.entries() {
            let p = num_bigint::BigInt::from(modulus);
            let num = (q.numer() % &p + &p) % &p;
            let den = (q.denom() % &p + &p) % &p;
            let (num, den): (u32, u32) = (num.try_into().ok()?, den.try_into().ok()?);
            if den == 0 {
                return None;
            }
            entries.push(num as u64 * inv_mod(den, modulus) as u64 % modulus as u64);
        }
        Some(FpMatrix {
            modulus,
            rows: m.rows(),
            cols: m.cols(),
            entries: entries.into_iter().map(|e| e as u32).collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "contract violation: vector length");
        let p = self.modulus as u64;
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u64 * v[j] as u64).sum::<u64>() % p)
            .map(|x| x as u32)
            .collect()
    }

    /// Same matrix in the generic field type used by the closure algorithm.
    pub fn to_field<const P: u32>(&self) -> Matrix<Fp<P>> {
        assert_eq!(P, self.modulus, "contract violation: modulus mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| Fp::<P>::new(self.get(i, j) as i64))
    }
}

fn inv_mod(x: u32, p: u32) -> u32 {
    (1..p).find(|y| (x as u64 * *y as u64) % p as u64 == 1).expect("nonzero residue mod a prime")
}

/// Reduced row echelon basis of `span(vectors)`.
fn rref_rows(p: u32, n: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = vectors.to_vec();
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut lead = 0;
    for col in 0..n {
        let Some(k) = (lead..rows.len()).find(|&k| rows[k][col] != 0) else { continue };
        rows.swap(lead, k);
        let inv = inv_mod(rows[lead][col], p);
        rows[lead] = rows[lead].iter().map(|x| (x * inv) % p).collect();
        for k in 0..rows.len() {
            if k != lead && rows[k][col] != 0 {
                let factor = rows[k][col];
                let pivot_row = rows[lead].clone();
                for (x, y) in rows[k].iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - factor * y % p) % p;
                }
            }
        }
        lead += 1;
    }
    out.extend(rows.into_iter().take(lead));
    out
}

/// Subspace of `F_p^n` stored by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpSubspace {
    modulus: u32,
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

impl FpSubspace {
    pub fn span(modulus: u32, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        FpSubspace { modulus, ambient, basis: rref_rows(modulus, ambient, vectors) }
    }

    pub fn zero(modulus: u32, ambient: usize) -> Self {
        FpSubspace { modulus, ambient, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Every vector of the subspace.
    pub fn elements(&self) -> HashSet<Vec<u32>> {
        let p = self.modulus;
        let mut out = HashSet::new();
        let total = (p as usize).pow(self.dim() as u32);
        for mut code in 0..total {
            let mut v = vec![0u32; self.ambient];
            for b in &self.basis {
                let coeff = (code % p as usize) as u32;
                code /= p as usize;
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + coeff * y) % p;
                }
            }
            out.insert(v);
        }
        out
    }
}

fn check_budget(n: usize, p: u32) -> Result<()> {
    if n > MAX_DIM || !MODULI.contains(&p) {
        return Err(CoreError::OracleBudget(format!("n = {n}, p = {p}; allowed n ≤ {MAX_DIM}, p ∈ {{2, 3}}")));
    }
    Ok(())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Every subspace of `F_p^n`, one per reduced echelon form.
pub fn all_subspaces(n: usize, p: u32) -> Result<Vec<FpSubspace>> {
    check_budget(n, p)?;
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in subsets(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(row, &pc)| ((pc + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
                .collect();
            for mut code in 0..(p as usize).pow(free.len() as u32) {
                let mut basis = vec![vec![0u32; n]; k];
                for (row, &pc) in pivots.iter().enumerate() {
                    basis[row][pc] = 1;
                }
                for &(row, c) in &free {
                    basis[row][c] = (code % p as usize) as u32;
                    code /= p as usize;
                }
                out.push(FpSubspace { modulus: p, ambient: n, basis });
            }
        }
    }
    Ok(out)
}

/// All subspaces invariant under `a` and `b` that contain `contains`.
pub fn enumerate_invariant_subspaces(a: &FpMatrix, b: &FpMatrix, contains: &FpSubspace) -> Result<Vec<FpSubspace>> {
    let (n, p) = (a.rows, a.modulus);
    assert!(a.cols == n && b.rows == n && b.cols == n, "contract violation: square operators");
    assert!(b.modulus == p && contains.modulus == p && contains.ambient == n, "contract violation: same field");
    let required = contains.basis.clone();
    let mut out = Vec::new();
    for s in all_subspaces(n, p)? {
        let members = s.elements();
        let ok = required.iter().all(|v| members.contains(v))
            && s.basis.iter().all(|v| members.contains(&a.mul_vec(v)) && members.contains(&b.mul_vec(v)));
        if ok {
            out.push(s);
        }
    }
    Ok(out)
}

/// ADHM stability by exhaustion: the only `(A, B)`-invariant subspace
/// containing `im I` is the whole space.
pub fn oracle_is_stable(a: &FpMatrix, b: &FpMatrix, i: &FpMatrix) -> Result<bool> {
    let image = FpSubspace::span(i.modulus, i.rows, &(0..i.cols).map(|j| i.column(j)).collect::<Vec<_>>());
    let invariant = enumerate_invariant_subspaces(a, b, &image)?;
    Ok(invariant.iter().all(|s| s.dim() == a.rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{ratio, RatMatrix};

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(all_subspaces(2, 2).unwrap().len(), 5);
        assert_eq!(all_subspaces(3, 2).unwrap().len(), 16);
        assert_eq!(all_subspaces(2, 3).unwrap().len(), 6);
        assert_eq!(all_subspaces(4, 2).unwrap().len(), 67);
        assert_eq!(all_subspaces(3, 3).unwrap().len(), 28);
        let subs = all_subspaces(3, 3).unwrap();
        let distinct: HashSet<_> =
            subs.iter().map(|s| s.elements().into_iter().collect::<std::collections::BTreeSet<_>>()).collect();
        assert_eq!(distinct.len(), subs.len());
    }

    #[test]
    fn budget() {
        assert_eq!(all_subspaces(5, 2).unwrap_err().code(), "oracle_budget");
        assert_eq!(all_subspaces(2, 5).unwrap_err().code(), "oracle_budget");
    }

    #[test]
    fn zero_operators_keep_everything() {
        let z = FpMatrix::zeros(2, 2, 2);
        let found = enumerate_invariant_subspaces(&z, &z, &FpSubspace::zero(2, 2)).unwrap();
        assert_eq!(found.len(), 5);
    }

    #[test]
    fn shift_with_first_basis_vector() {
        let s = FpMatrix::new(2, 3, 3, &[0, 0, 0, 1, 0, 0, 0, 1, 0]);
        let e1 = FpSubspace::span(2, 3, &[vec![1, 0, 0]]);
        let found = enumerate_invariant_subspaces(&s, &s, &e1).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].dim(), 3);
        let i = FpMatrix::new(2, 3, 1, &[1, 0, 0]);
        assert_eq!(oracle_is_stable(&s, &s, &i), Ok(true));
        assert_eq!(oracle_is_stable(&s, &s, &FpMatrix::zeros(2, 3, 1)), Ok(false));
    }

    #[test]
    fn rational_reduction() {
        let m = RatMatrix::new(1, 2, vec![ratio(1, 2), ratio(-1, 1)]);
        assert_eq!(FpMatrix::from_rational(&m, 3).unwrap().entries, vec![2, 2]);
        assert!(FpMatrix::from_rational(&m, 2).is_none());
    }
}
