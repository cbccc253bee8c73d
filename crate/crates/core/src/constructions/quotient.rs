use crate::error::{CoreError, Result};
use crate::exactmat::{rat, RatMatrix};
use crate::quiver::{AdhmRep, EnhancedRep};

/// Columns of `F` followed by the first coordinate vectors that complete them
/// to a basis of `V`. Returns the basis matrix and the completing block.
pub fn complete_image_basis(f: &RatMatrix) -> (RatMatrix, RatMatrix) {
    let c = f.rows();
    let mut basis = f.clone();
    let mut chosen = Vec::new();
    for k in 0..c {
        if basis.cols() == c {
            break;
        }
        let e = RatMatrix::from_fn(c, 1, |i, _| if i == k { rat(1) } else { rat(0) });
        let candidate = basis.hstack(&e);
        if candidate.rank() == candidate.cols() {
            basis = candidate;
            chosen.push(k);
        }
    }
    let complement = RatMatrix::from_fn(c, chosen.len(), |i, j| if i == chosen[j] { rat(1) } else { rat(0) });
    (basis, complement)
}

/// The ADHM datum induced on `V/im F`, in the basis given by the coordinate
/// vectors of [`complete_image_basis`].
pub fn quotient_adhm(x: &EnhancedRep) -> Result<AdhmRep> {
    x.require_relations()?;
    let d = x.dims();
    if x.f().rank() != d.cprime {
        return Err(CoreError::QuotientUndefined);
    }
    let (q, e) = complete_image_basis(x.f());
    let q_inv = q.inverse().expect("completed basis is invertible");
    let cq = d.c - d.cprime;
    let lower = |m: &RatMatrix| {
        let conj = &(&q_inv * m) * &q;
        conj.submatrix(d.cprime..d.c, d.cprime..d.c)
    };
    let i = (&q_inv * x.i()).submatrix(d.cprime..d.c, 0..d.r);
    let j = x.j() * &e;
    AdhmRep::new(d.r, cq, lower(x.a()), lower(x.b()), i, j)
}
