//! Finite cochain complexes of rational vector spaces and chain maps.

use serde_json::{json, Value};

use super::layout::Layout;
use crate::error::{CoreError, Result};
use crate::exactmat::{matrix_to_json, RatMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    degree_dims: Vec<usize>,
    differentials: Vec<RatMatrix>,
    layouts: Option<Vec<Layout>>,
}

impl ChainComplex {
    /// Checks shapes and `d_{i+1} d_i = 0`.
    pub fn new(degree_dims: Vec<usize>, differentials: Vec<RatMatrix>) -> Result<Self> {
        if degree_dims.is_empty() || differentials.len() + 1 != degree_dims.len() {
            return Err(CoreError::NotAComplex(format!(
                "{} differentials for {} terms",
                differentials.len(),
                degree_dims.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            let expected = (degree_dims[k + 1], degree_dims[k]);
            if d.shape() != expected {
                return Err(CoreError::ShapeMismatch { what: format!("d{k}"), expected, found: d.shape() });
            }
        }
        for k in 1..differentials.len() {
            if !(&differentials[k] * &differentials[k - 1]).is_zero() {
                return Err(CoreError::NotAComplex(format!("d{} · d{} ≠ 0", k, k - 1)));
            }
        }
        Ok(ChainComplex { degree_dims, differentials, layouts: None })
    }

    pub(crate) fn with_layouts(layouts: Vec<Layout>, differentials: Vec<RatMatrix>) -> Result<Self> {
        let dims = layouts.iter().map(Layout::dim).collect();
        let mut cx = ChainComplex::new(dims, differentials)?;
        cx.layouts = Some(layouts);
        Ok(cx)
    }

    pub fn degree_dims(&self) -> &[usize] {
        &self.degree_dims
    }

    pub fn differentials(&self) -> &[RatMatrix] {
        &self.differentials
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.degree_dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Term dimension, zero outside the complex.
    pub fn dim_at(&self, k: usize) -> usize {
        self.degree_dims.get(k).copied().unwrap_or(0)
    }

    /// `d_k`, or a zero map at either end.
    pub fn differential(&self, k: usize) -> RatMatrix {
        self.differentials.get(k).cloned().unwrap_or_else(|| RatMatrix::zeros(self.dim_at(k + 1), self.dim_at(k)))
    }

    pub fn layout(&self, k: usize) -> Option<&Layout> {
        self.layouts.as_ref().and_then(|l| l.get(k))
    }

    /// `Σ (−1)^i dim C^i`.
    pub fn euler(&self) -> i64 {
        alternating(&self.degree_dims)
    }

    pub fn to_json_value(&self) -> Value {
        let mut v = json!({
            "degree_dims": self.degree_dims,
            "differentials": self.differentials.iter().map(matrix_to_json).collect::<Vec<_>>(),
        });
        if let Some(layouts) = &self.layouts {
            v["summands"] = json!(layouts.iter().map(Layout::names).collect::<Vec<_>>());
        }
        v
    }
}

pub(crate) fn alternating(xs: &[usize]) -> i64 {
    xs.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<RatMatrix>,
}

impl ChainMap {
    /// Checks shapes and `d^target_i ρ_i = ρ_{i+1} d^source_i`.
    pub fn new(source: ChainComplex, target: ChainComplex, components: Vec<RatMatrix>) -> Result<Self> {
        for (k, rho) in components.iter().enumerate() {
            let expected = (target.dim_at(k), source.dim_at(k));
            if rho.shape() != expected {
                return Err(CoreError::ShapeMismatch { what: format!("rho{k}"), expected, found: rho.shape() });
            }
        }
        let zero = |k: usize| RatMatrix::zeros(target.dim_at(k), source.dim_at(k));
        for k in 0..components.len() {
            let next = components.get(k + 1).cloned().unwrap_or_else(|| zero(k + 1));
            let lhs = &target.differential(k) * &components[k];
            let rhs = &next * &source.differential(k);
            if lhs != rhs {
                return Err(CoreError::NotAChainMap(format!("square {k} does not commute")));
            }
        }
        Ok(ChainMap { source, target, components })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn components(&self) -> &[RatMatrix] {
        &self.components
    }

    /// `ρ_k`, zero beyond the stored components.
    pub fn component(&self, k: usize) -> RatMatrix {
        self.components
            .get(k)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.target.dim_at(k), self.source.dim_at(k)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub h: Vec<usize>,
    pub euler: i64,
}

impl CohomologyReport {
    pub fn h_at(&self, k: usize) -> usize {
        self.h.get(k).copied().unwrap_or(0)
    }

    pub fn to_json_value(&self, expected_dimension: Option<i64>) -> Value {
        json!({"h": self.h, "euler": self.euler, "expected_dimension": expected_dimension})
    }
}

/// `h_i = dim ker d_i − rank d_{i−1}`.
pub fn cohomology(cx: &ChainComplex) -> CohomologyReport {
    let ranks: Vec<usize> = cx.differentials.iter().map(RatMatrix::rank).collect();
    let h = (0..cx.len())
        .map(|i| {
            let out = ranks.get(i).copied().unwrap_or(0);
            let inc = if i == 0 { 0 } else { ranks[i - 1] };
            cx.degree_dims[i] - out - inc
        })
        .collect();
    CohomologyReport { h, euler: cx.euler() }
}
