//! Representations of the enhanced ADHM quiver and of the ordinary ADHM
//! quiver, their defining relations, gauge action and JSON form.
//!
//! All vector spaces carry their standard bases: `W = ℚʳ`, `V = ℚᶜ`,
//! `V' = ℚᶜ'`. An enhanced representation is the tuple of matrices
//!
//! ```text
//! A, B : V → V     I : W → V     J : V → W
//! A', B' : V' → V'                F : V' → V
//! ```
//!
//! subject to the five relations
//! `[A,B] + IJ = 0`, `AF = FA'`, `BF = FB'`, `JF = 0`, `[A',B'] = 0`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::exactmat::{matrix_from_json, matrix_to_json, RatMatrix};

/// Dimension vector `(r, c, c')` of `(W, V, V')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimVector {
    pub r: usize,
    pub c: usize,
    pub cprime: usize,
}

impl DimVector {
    /// `r ≥ 1` and `c ≥ 1`; `c' = 0` is admitted as the degenerate case.
    pub fn new(r: usize, c: usize, cprime: usize) -> Result<Self> {
        if r == 0 || c == 0 {
            return Err(CoreError::InvalidDims(format!("need r ≥ 1 and c ≥ 1, got ({r},{c},{cprime})")));
        }
        Ok(DimVector { r, c, cprime })
    }

    pub(crate) fn require_cprime(&self) -> Result<()> {
        if self.cprime == 0 {
            return Err(CoreError::InvalidDims("operation requires c' ≥ 1".into()));
        }
        Ok(())
    }
}

impl std::fmt::Display for DimVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.cprime)
    }
}

/// Loose bundle of the seven matrices, used to build an [`EnhancedRep`].
#[derive(Clone, Debug, PartialEq)]
pub struct EnhancedParts {
    pub a: RatMatrix,
    pub b: RatMatrix,
    pub i: RatMatrix,
    pub j: RatMatrix,
    pub a_prime: RatMatrix,
    pub b_prime: RatMatrix,
    pub f: RatMatrix,
}

impl EnhancedParts {
    pub fn zeros(dims: DimVector) -> Self {
        let DimVector { r, c, cprime: cp } = dims;
        EnhancedParts {
            a: RatMatrix::zeros(c, c),
            b: RatMatrix::zeros(c, c),
            i: RatMatrix::zeros(c, r),
            j: RatMatrix::zeros(r, c),
            a_prime: RatMatrix::zeros(cp, cp),
            b_prime: RatMatrix::zeros(cp, cp),
            f: RatMatrix::zeros(c, cp),
        }
    }
}

/// A representation `X = (W, V, V', A, B, I, J, A', B', F)` whose matrix
/// shapes agree with its dimension vector. The relations are not enforced
/// here; see [`relation_residuals`].
#[derive(Clone, Debug, PartialEq)]
pub struct EnhancedRep {
    dims: DimVector,
    parts: EnhancedParts,
}

fn check_shape(what: &str, m: &RatMatrix, expected: (usize, usize)) -> Result<()> {
    if m.shape() != expected {
        return Err(CoreError::ShapeMismatch { what: what.to_string(), expected, found: m.shape() });
    }
    Ok(())
}

impl EnhancedRep {
    pub fn new(dims: DimVector, parts: EnhancedParts) -> Result<Self> {
        let DimVector { r, c, cprime: cp } = dims;
        check_shape("A", &parts.a, (c, c))?;
        check_shape("B", &parts.b, (c, c))?;
        check_shape("I", &parts.i, (c, r))?;
        check_shape("J", &parts.j, (r, c))?;
        check_shape("Aprime", &parts.a_prime, (cp, cp))?;
        check_shape("Bprime", &parts.b_prime, (cp, cp))?;
        check_shape("F", &parts.f, (c, cp))?;
        Ok(EnhancedRep { dims, parts })
    }

    pub fn zero(dims: DimVector) -> Self {
        EnhancedRep { dims, parts: EnhancedParts::zeros(dims) }
    }

    /// Embeds an ordinary ADHM datum with `V' = 0`.
    pub fn from_adhm(x: &AdhmRep) -> Result<Self> {
        let dims = DimVector::new(x.r, x.c, 0)?;
        let mut parts = EnhancedParts::zeros(dims);
        parts.a = x.a.clone();
        parts.b = x.b.clone();
        parts.i = x.i.clone();
        parts.j = x.j.clone();
        Self::new(dims, parts)
    }

    pub fn dims(&self) -> DimVector {
        self.dims
    }
    pub fn parts(&self) -> &EnhancedParts {
        &self.parts
    }
    pub fn into_parts(self) -> EnhancedParts {
        self.parts
    }
    pub fn a(&self) -> &RatMatrix {
        &self.parts.a
    }
    pub fn b(&self) -> &RatMatrix {
        &self.parts.b
    }
    pub fn i(&self) -> &RatMatrix {
        &self.parts.i
    }
    pub fn j(&self) -> &RatMatrix {
        &self.parts.j
    }
    pub fn a_prime(&self) -> &RatMatrix {
        &self.parts.a_prime
    }
    pub fn b_prime(&self) -> &RatMatrix {
        &self.parts.b_prime
    }
    pub fn f(&self) -> &RatMatrix {
        &self.parts.f
    }

    /// The `(W, V, A, B, I, J)` part.
    pub fn adhm_part(&self) -> AdhmRep {
        AdhmRep {
            r: self.dims.r,
            c: self.dims.c,
            a: self.parts.a.clone(),
            b: self.parts.b.clone(),
            i: self.parts.i.clone(),
            j: self.parts.j.clone(),
        }
    }

    pub fn residuals(&self) -> RelationResidual {
        relation_residuals(self)
    }

    /// Errors with the name of the first failing relation.
    pub fn require_relations(&self) -> Result<()> {
        match self.residuals().first_failure() {
            None => Ok(()),
            Some(name) => Err(CoreError::NotARepresentation(name)),
        }
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "dims": {"r": self.dims.r, "c": self.dims.c, "cprime": self.dims.cprime},
            "A": matrix_to_json(&self.parts.a),
            "B": matrix_to_json(&self.parts.b),
            "I": matrix_to_json(&self.parts.i),
            "J": matrix_to_json(&self.parts.j),
            "Aprime": matrix_to_json(&self.parts.a_prime),
            "Bprime": matrix_to_json(&self.parts.b_prime),
            "F": matrix_to_json(&self.parts.f),
        })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let dims = v.get("dims").ok_or_else(|| CoreError::MissingField("dims".into()))?;
        let dim = |k: &str| -> Result<usize> {
            dims.get(k)
                .ok_or_else(|| CoreError::MissingField(format!("dims.{k}")))?
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| CoreError::InvalidJson(format!("dims.{k} must be a non-negative integer")))
        };
        let dims = DimVector::new(dim("r")?, dim("c")?, dim("cprime")?)?;
        let field = |k: &str| -> Result<RatMatrix> {
            let m = v.get(k).ok_or_else(|| CoreError::MissingField(k.into()))?;
            matrix_from_json(m, k)
        };
        let parts = EnhancedParts {
            a: field("A")?,
            b: field("B")?,
            i: field("I")?,
            j: field("J")?,
            a_prime: field("Aprime")?,
            b_prime: field("Bprime")?,
            f: field("F")?,
        };
        Self::new(dims, parts)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| CoreError::InvalidJson(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// An ordinary ADHM datum `(W, V, A, B, I, J)` of type `(r, c)`. `c = 0` is
/// allowed (the empty datum).
#[derive(Clone, Debug, PartialEq)]
pub struct AdhmRep {
    pub r: usize,
    pub c: usize,
    pub a: RatMatrix,
    pub b: RatMatrix,
    pub i: RatMatrix,
    pub j: RatMatrix,
}

impl AdhmRep {
    pub fn new(r: usize, c: usize, a: RatMatrix, b: RatMatrix, i: RatMatrix, j: RatMatrix) -> Result<Self> {
        check_shape("A", &a, (c, c))?;
        check_shape("B", &b, (c, c))?;
        check_shape("I", &i, (c, r))?;
        check_shape("J", &j, (r, c))?;
        Ok(AdhmRep { r, c, a, b, i, j })
    }

    /// `[A, B] + IJ`.
    pub fn residual(&self) -> RatMatrix {
        &self.a.commutator(&self.b) + &(&self.i * &self.j)
    }

    pub fn satisfies_relation(&self) -> bool {
        self.residual().is_zero()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "dims": {"r": self.r, "c": self.c},
            "A": matrix_to_json(&self.a),
            "B": matrix_to_json(&self.b),
            "I": matrix_to_json(&self.i),
            "J": matrix_to_json(&self.j),
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let dims = v.get("dims").ok_or_else(|| CoreError::MissingField("dims".into()))?;
        let dim = |k: &str| -> Result<usize> {
            dims.get(k)
                .ok_or_else(|| CoreError::MissingField(format!("dims.{k}")))?
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| CoreError::InvalidJson(format!("dims.{k} must be a non-negative integer")))
        };
        let (r, c) = (dim("r")?, dim("c")?);
        if r == 0 {
            return Err(CoreError::InvalidDims("need r ≥ 1".into()));
        }
        let field = |k: &str| -> Result<RatMatrix> {
            let m = v.get(k).ok_or_else(|| CoreError::MissingField(k.into()))?;
            matrix_from_json(m, k)
        };
        Self::new(r, c, field("A")?, field("B")?, field("I")?, field("J")?)
    }
}

/// The five relation residuals of a representation.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationResidual {
    /// `[A,B] + IJ`, `c × c`.
    pub r1: RatMatrix,
    /// `AF − FA'`, `c × c'`.
    pub r2: RatMatrix,
    /// `BF − FB'`, `c × c'`.
    pub r3: RatMatrix,
    /// `JF`, `r × c'`.
    pub r4: RatMatrix,
    /// `[A',B']`, `c' × c'`.
    pub r5: RatMatrix,
}

impl RelationResidual {
    pub fn named(&self) -> [(&'static str, &RatMatrix); 5] {
        [("R1", &self.r1), ("R2", &self.r2), ("R3", &self.r3), ("R4", &self.r4), ("R5", &self.r5)]
    }

    pub fn is_zero(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.named().into_iter().find(|(_, m)| !m.is_zero()).map(|(n, _)| n)
    }
}

pub fn relation_residuals(x: &EnhancedRep) -> RelationResidual {
    let p = &x.parts;
    RelationResidual {
        r1: &p.a.commutator(&p.b) + &(&p.i * &p.j),
        r2: &(&p.a * &p.f) - &(&p.f * &p.a_prime),
        r3: &(&p.b * &p.f) - &(&p.f * &p.b_prime),
        r4: &p.j * &p.f,
        r5: p.a_prime.commutator(&p.b_prime),
    }
}

/// Action of `(h, h') ∈ GL(V) × GL(V')`:
/// `(hAh⁻¹, hBh⁻¹, hI, Jh⁻¹, h'A'h'⁻¹, h'B'h'⁻¹, hFh'⁻¹)`.
pub fn gauge_act(x: &EnhancedRep, h: &RatMatrix, h_prime: &RatMatrix) -> Result<EnhancedRep> {
    let DimVector { c, cprime, .. } = x.dims;
    if h.shape() != (c, c) || h_prime.shape() != (cprime, cprime) {
        return Err(CoreError::NotGauge);
    }
    let h_inv = h.inverse().ok_or(CoreError::NotGauge)?;
    let hp_inv = h_prime.inverse().ok_or(CoreError::NotGauge)?;
    let p = &x.parts;
    let conj = |g: &RatMatrix, m: &RatMatrix, g_inv: &RatMatrix| &(g * m) * g_inv;
    let parts = EnhancedParts {
        a: conj(h, &p.a, &h_inv),
        b: conj(h, &p.b, &h_inv),
        i: h * &p.i,
        j: &p.j * &h_inv,
        a_prime: conj(h_prime, &p.a_prime, &hp_inv),
        b_prime: conj(h_prime, &p.b_prime, &hp_inv),
        f: conj(h, &p.f, &hp_inv),
    };
    EnhancedRep::new(x.dims, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{rat, Field};

    fn diag(values: &[i64]) -> RatMatrix {
        RatMatrix::from_fn(values.len(), values.len(), |i, j| if i == j { rat(values[i]) } else { rat(0) })
    }

    /// r=1, c=2, λ=(1,2) written out by hand.
    fn vandermonde_1_2() -> EnhancedRep {
        let dims = DimVector::new(1, 2, 1).unwrap();
        let parts = EnhancedParts {
            a: diag(&[1, 2]),
            b: diag(&[1, 2]),
            i: RatMatrix::from_i64_rows(&[[1], [1]]),
            j: RatMatrix::zeros(1, 2),
            a_prime: diag(&[1]),
            b_prime: diag(&[1]),
            f: RatMatrix::from_i64_rows(&[[1], [0]]),
        };
        EnhancedRep::new(dims, parts).unwrap()
    }

    #[test]
    fn zero_maps_have_zero_residuals() {
        for (r, c, cp) in [(1, 1, 0), (2, 3, 2), (3, 1, 4)] {
            let x = EnhancedRep::zero(DimVector::new(r, c, cp).unwrap());
            assert!(x.residuals().is_zero());
        }
    }

    #[test]
    fn vandermonde_satisfies_relations() {
        assert!(vandermonde_1_2().residuals().is_zero());
    }

    #[test]
    fn ij_term_breaks_r1() {
        let dims = DimVector::new(1, 1, 0).unwrap();
        let mut parts = EnhancedParts::zeros(dims);
        parts.i = RatMatrix::identity(1);
        parts.j = RatMatrix::identity(1);
        let res = EnhancedRep::new(dims, parts).unwrap().residuals();
        assert_eq!(res.r1, RatMatrix::identity(1));
        assert_eq!(res.first_failure(), Some("R1"));
    }

    #[test]
    fn gauge_identity_and_scalar() {
        let x = vandermonde_1_2();
        assert_eq!(gauge_act(&x, &RatMatrix::identity(2), &RatMatrix::identity(1)).unwrap(), x);

        let two = RatMatrix::identity(2).scale(&rat(2));
        let y = gauge_act(&x, &two, &RatMatrix::identity(1)).unwrap();
        assert_eq!(y.a(), x.a());
        assert_eq!(y.b(), x.b());
        assert_eq!(y.i(), &x.i().scale(&rat(2)));
        assert_eq!(y.f(), &x.f().scale(&rat(2)));
        assert!(y.residuals().is_zero());
    }

    #[test]
    fn singular_gauge_rejected() {
        let x = vandermonde_1_2();
        let singular = RatMatrix::from_i64_rows(&[[1, 1], [1, 1]]);
        assert_eq!(gauge_act(&x, &singular, &RatMatrix::identity(1)), Err(CoreError::NotGauge));
        assert_eq!(gauge_act(&x, &RatMatrix::identity(2), &RatMatrix::zeros(1, 1)), Err(CoreError::NotGauge));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let x = vandermonde_1_2();
        assert_eq!(EnhancedRep::from_json(&x.to_json()).unwrap(), x);

        let mut v = x.to_json_value();
        v["A"]["entries"][0][0] = json!("1/0");
        let err = EnhancedRep::from_json_value(&v).unwrap_err();
        assert_eq!(err.code(), "malformed_rational");

        let mut v = x.to_json_value();
        v["A"] = json!({"rows": 2, "cols": 3, "entries": [["0","0","0"],["0","0","0"]]});
        let err = EnhancedRep::from_json_value(&v).unwrap_err();
        assert_eq!(err.code(), "shape_mismatch");

        let mut v = x.to_json_value();
        v.as_object_mut().unwrap().remove("F");
        assert_eq!(EnhancedRep::from_json_value(&v).unwrap_err(), CoreError::MissingField("F".into()));

        assert_eq!(EnhancedRep::from_json("{").unwrap_err().code(), "invalid_json");
    }

    #[test]
    fn adhm_json_round_trip() {
        let x = vandermonde_1_2().adhm_part();
        assert_eq!(AdhmRep::from_json_value(&x.to_json_value()).unwrap(), x);
        assert!(x.satisfies_relation());
        assert!(Field::is_zero(&x.residual()[(0, 0)]));
    }
}
