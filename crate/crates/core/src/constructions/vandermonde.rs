use crate::error::{CoreError, Result};
use crate::exactmat::{format_rational, rat, RatMatrix, Rational};
use crate::quiver::{DimVector, EnhancedParts, EnhancedRep};

/// Eigenvalues for the diagonal family; all nonzero and pairwise distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct VandermondeParams {
    r: usize,
    lambdas: Vec<Rational>,
}

impl VandermondeParams {
    pub fn new(r: usize, lambdas: Vec<Rational>) -> Result<Self> {
        if r == 0 || lambdas.is_empty() {
            return Err(CoreError::InvalidDims("need r ≥ 1 and c ≥ 1".into()));
        }
        for (k, l) in lambdas.iter().enumerate() {
            if *l == rat(0) {
                return Err(CoreError::VandermondeHypothesis(format!("λ{} = 0", k + 1)));
            }
            if lambdas[..k].contains(l) {
                return Err(CoreError::VandermondeHypothesis(format!("repeated λ = {}", format_rational(l))));
            }
        }
        Ok(VandermondeParams { r, lambdas })
    }

    /// `λ = (1, …, c)`.
    pub fn standard(r: usize, c: usize) -> Result<Self> {
        Self::new(r, (1..=c as i64).map(rat).collect())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn c(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }
}

/// `A = B = diag(λ)`, `I` with a first column of ones, `J = 0`, `F = e₁`,
/// `A' = B' = (λ₁)`.
pub fn vandermonde_rep(p: &VandermondeParams) -> Result<EnhancedRep> {
    let (r, c) = (p.r, p.c());
    let dims = DimVector::new(r, c, 1)?;
    let diag = RatMatrix::from_fn(c, c, |i, j| if i == j { p.lambdas[i].clone() } else { rat(0) });
    let mut parts = EnhancedParts::zeros(dims);
    parts.a = diag.clone();
    parts.b = diag;
    parts.i = RatMatrix::from_fn(c, r, |_, j| if j == 0 { rat(1) } else { rat(0) });
    parts.a_prime = RatMatrix::from_fn(1, 1, |_, _| p.lambdas[0].clone());
    parts.b_prime = parts.a_prime.clone();
    parts.f[(0, 0)] = rat(1);
    EnhancedRep::new(dims, parts)
}
