use rand::Rng;

use crate::error::{CoreError, Result};
use crate::exactmat::{rat, sandwich, unvectorize, RatMatrix, RatSubspace, Rational};
use crate::quiver::{AdhmRep, DimVector, EnhancedParts, EnhancedRep};

/// Block upper-triangular lift of an ADHM datum on `V'' ` to an enhanced
/// representation with `F = [1; 0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftAnsatz {
    pub base: AdhmRep,
    pub a_prime: RatMatrix,
    pub b_prime: RatMatrix,
    /// `c' × (c − c')` upper-right block of `A`.
    pub a_tilde: RatMatrix,
    pub b_tilde: RatMatrix,
    /// `c' × r` upper block of `I`.
    pub i_tilde: RatMatrix,
}

impl LiftAnsatz {
    pub fn cprime(&self) -> usize {
        self.a_prime.rows()
    }

    pub fn dims(&self) -> Result<DimVector> {
        DimVector::new(self.base.r, self.base.c + self.cprime(), self.cprime())
    }

    /// `A'B̃ + ÃB'' − B'Ã − B̃A'' + ĨJ''`, the upper-right block of the first relation.
    pub fn system_residual(&self) -> RatMatrix {
        let mut m = &(&self.a_prime * &self.b_tilde) + &(&self.a_tilde * &self.base.b);
        m = &m - &(&self.b_prime * &self.a_tilde);
        m = &m - &(&self.b_tilde * &self.base.a);
        &m + &(&self.i_tilde * &self.base.j)
    }
}

fn check_commuting(a_prime: &RatMatrix, b_prime: &RatMatrix) -> Result<()> {
    if !a_prime.is_square() || a_prime.shape() != b_prime.shape() {
        return Err(CoreError::ShapeMismatch {
            what: "Bprime".into(),
            expected: a_prime.shape(),
            found: b_prime.shape(),
        });
    }
    if !a_prime.commutator(b_prime).is_zero() {
        return Err(CoreError::NonCommuting);
    }
    Ok(())
}

/// `A = [[A', Ã], [0, A'']]`, likewise `B`, `I = [Ĩ; I'']`, `J = [0, J'']`,
/// `F = [1; 0]`.
pub fn assemble_lift(ansatz: &LiftAnsatz) -> Result<EnhancedRep> {
    check_commuting(&ansatz.a_prime, &ansatz.b_prime)?;
    let dims = ansatz.dims()?;
    let (cp, cq, r) = (dims.cprime, ansatz.base.c, dims.r);
    let shape = |what: &str, m: &RatMatrix, expected: (usize, usize)| -> Result<()> {
        if m.shape() != expected {
            return Err(CoreError::ShapeMismatch { what: what.into(), expected, found: m.shape() });
        }
        Ok(())
    };
    shape("Atilde", &ansatz.a_tilde, (cp, cq))?;
    shape("Btilde", &ansatz.b_tilde, (cp, cq))?;
    shape("Itilde", &ansatz.i_tilde, (cp, r))?;
    let upper = |top_left: &RatMatrix, top_right: &RatMatrix, bottom_right: &RatMatrix| {
        RatMatrix::block(&[
            vec![top_left.clone(), top_right.clone()],
            vec![RatMatrix::zeros(cq, cp), bottom_right.clone()],
        ])
    };
    let parts = EnhancedParts {
        a: upper(&ansatz.a_prime, &ansatz.a_tilde, &ansatz.base.a),
        b: upper(&ansatz.b_prime, &ansatz.b_tilde, &ansatz.base.b),
        i: ansatz.i_tilde.vstack(&ansatz.base.i),
        j: RatMatrix::zeros(r, cp).hstack(&ansatz.base.j),
        a_prime: ansatz.a_prime.clone(),
        b_prime: ansatz.b_prime.clone(),
        f: RatMatrix::identity(cp).vstack(&RatMatrix::zeros(cq, cp)),
    };
    EnhancedRep::new(dims, parts)
}

/// Solution set of the lifting system over a fixed base and `(A', B')`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftSolution {
    pub base: AdhmRep,
    pub a_prime: RatMatrix,
    pub b_prime: RatMatrix,
    /// Matrix of `(vec Ã, vec B̃, vec Ĩ) ↦ vec(system residual)`.
    pub system: RatMatrix,
    pub kernel: RatSubspace,
}

impl LiftSolution {
    pub fn unknowns(&self) -> usize {
        self.system.cols()
    }

    pub fn equations(&self) -> usize {
        self.system.rows()
    }

    pub fn rank(&self) -> usize {
        self.unknowns() - self.kernel.dim()
    }

    pub fn solution_dim(&self) -> usize {
        self.kernel.dim()
    }

    /// The zero solution, which always exists.
    pub fn particular(&self) -> LiftAnsatz {
        self.ansatz_from_vector(&vec![rat(0); self.unknowns()])
    }

    pub fn ansatz_from_vector(&self, v: &[Rational]) -> LiftAnsatz {
        assert_eq!(v.len(), self.unknowns(), "contract violation: unknown vector length");
        let (cp, cq, r) = (self.a_prime.rows(), self.base.c, self.base.r);
        let n = cp * cq;
        LiftAnsatz {
            base: self.base.clone(),
            a_prime: self.a_prime.clone(),
            b_prime: self.b_prime.clone(),
            a_tilde: unvectorize(&v[..n], cp, cq),
            b_tilde: unvectorize(&v[n..2 * n], cp, cq),
            i_tilde: unvectorize(&v[2 * n..], cp, r),
        }
    }

    /// Random integer combination of the kernel basis, coefficients in `[-bound, bound]`.
    pub fn sample<R: Rng>(&self, rng: &mut R, bound: i64) -> LiftAnsatz {
        let mut v = vec![rat(0); self.unknowns()];
        for basis_vec in self.kernel.basis_vectors() {
            let coeff = rat(rng.random_range(-bound..=bound));
            for (slot, x) in v.iter_mut().zip(basis_vec) {
                *slot = &*slot + &(&coeff * &x);
            }
        }
        self.ansatz_from_vector(&v)
    }
}

/// Linear system in `(Ã, B̃, Ĩ)`: `c'(c − c')` equations, `c'(2(c − c') + r)` unknowns.
pub fn lift_solve(base: &AdhmRep, a_prime: &RatMatrix, b_prime: &RatMatrix) -> Result<LiftSolution> {
    check_commuting(a_prime, b_prime)?;
    let cp = a_prime.rows();
    let id_p = RatMatrix::identity(cp);
    let id_q = RatMatrix::identity(base.c);
    let tilde_a = &sandwich(&id_p, &base.b) - &sandwich(b_prime, &id_q);
    let tilde_b = &sandwich(a_prime, &id_q) - &sandwich(&id_p, &base.a);
    let tilde_i = sandwich(&id_p, &base.j);
    let system = tilde_a.hstack(&tilde_b).hstack(&tilde_i);
    let kernel = system.kernel();
    Ok(LiftSolution { base: base.clone(), a_prime: a_prime.clone(), b_prime: b_prime.clone(), system, kernel })
}
