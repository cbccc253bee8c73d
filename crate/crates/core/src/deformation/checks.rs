//! Vanishing, long-exact-sequence and probe checks on the deformation complex.

use serde_json::{json, Value};

use super::build::{build_cx, build_cx_double_prime, build_cx_pair, build_cx_prime, build_rho};
use super::complex::{cohomology, ChainComplex, ChainMap, CohomologyReport};
use super::layout::{selection, BlockMap, Layout, Summand};
use crate::error::{CoreError, Result};
use crate::exactmat::{RatMatrix, RatSubspace, Subspace};
use crate::quiver::{DimVector, EnhancedRep};
use crate::stability::is_delta_stable;

/// `r(2c − c')` for `c' > 1`, `2rc − r + 1` for `c' = 1`.
pub fn expected_dimension(dims: DimVector) -> Result<i64> {
    dims.require_cprime()?;
    let (r, c, cp) = (dims.r as i64, dims.c as i64, dims.cprime as i64);
    Ok(if cp == 1 { 2 * r * c - r + 1 } else { r * (2 * c - cp) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub cohomology: CohomologyReport,
    pub expected_dimension: i64,
    pub passed: bool,
}

impl ObstructionReport {
    pub fn to_json_value(&self) -> Value {
        let mut v = self.cohomology.to_json_value(Some(self.expected_dimension));
        v["h0_zero"] = json!(self.cohomology.h_at(0) == 0);
        v["h3_zero"] = json!(self.cohomology.h_at(3) == 0);
        v["unobstructed"] = json!(self.cohomology.h_at(2) == 0);
        v["passed"] = json!(self.passed);
        v
    }
}

/// Cohomology of `C(X)` for a Δ-stable `X`; passes iff `h⁰ = h³ = 0`.
pub fn check_perfect_obstruction(x: &EnhancedRep) -> Result<ObstructionReport> {
    x.require_relations()?;
    if !is_delta_stable(x)? {
        return Err(CoreError::RequiresStability);
    }
    let cohomology = cohomology(&build_cx(x)?);
    let passed = cohomology.h_at(0) == 0 && cohomology.h_at(3) == 0;
    Ok(ObstructionReport { expected_dimension: expected_dimension(x.dims())?, cohomology, passed })
}

/// Exactness verdict at one node of the long exact sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeExactness {
    pub node: String,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub h_x: Vec<usize>,
    pub h_x_prime: Vec<usize>,
    pub h_x_double_prime: Vec<usize>,
    pub h_pair: Vec<usize>,
    pub alternating_sum: i64,
    /// `h⁰(C(X)) ≤ h⁰(C(X')) + h⁰(C(X''))`.
    pub h0_injection: bool,
    pub deep: Option<Vec<NodeExactness>>,
}

impl LesReport {
    pub fn passed(&self) -> bool {
        self.alternating_sum == 0
            && self.h0_injection
            && self.deep.as_ref().is_none_or(|nodes| nodes.iter().all(|n| n.exact))
    }

    pub fn to_json_value(&self) -> Value {
        let deep = self
            .deep
            .as_ref()
            .map(|nodes| nodes.iter().map(|n| json!({"node": n.node, "exact": n.exact})).collect::<Vec<_>>());
        json!({
            "h_X": self.h_x,
            "h_Xprime": self.h_x_prime,
            "h_Xdoubleprime": self.h_x_double_prime,
            "h_pair": self.h_pair,
            "alternating_sum": self.alternating_sum,
            "h0_injection": self.h0_injection,
            "deep": deep,
            "passed": self.passed(),
        })
    }
}

fn padded(h: &[usize], k: usize) -> i64 {
    h.get(k).copied().unwrap_or(0) as i64
}

/// Alternating-sum identity of the long exact sequence, and optionally
/// term-by-term exactness of the sequence induced by `C(X) = cone(ρ)[−1]`.
pub fn check_les_consistency(x: &EnhancedRep, deep: bool) -> Result<LesReport> {
    let cx = build_cx(x)?;
    let h_x = cohomology(&cx).h;
    let h_x_prime = cohomology(&build_cx_prime(x)?).h;
    let h_x_double_prime = cohomology(&build_cx_double_prime(x)?).h;
    let h_pair = cohomology(&build_cx_pair(x)?).h;
    let alternating_sum = (0..4)
        .map(|k| {
            let term = padded(&h_x, k) - padded(&h_x_prime, k) - padded(&h_x_double_prime, k) + padded(&h_pair, k);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let h0_injection = padded(&h_x, 0) <= padded(&h_x_prime, 0) + padded(&h_x_double_prime, 0);
    let deep = if deep { Some(deep_exactness(&cx, &build_rho(x)?)) } else { None };
    Ok(LesReport { h_x, h_x_prime, h_x_double_prime, h_pair, alternating_sum, h0_injection, deep })
}

struct Spaces {
    cocycles: Vec<RatSubspace>,
    coboundaries: Vec<RatSubspace>,
}

fn spaces(cx: &ChainComplex, top: usize) -> Spaces {
    let cocycles = (0..=top).map(|k| cx.differential(k).kernel()).collect();
    let coboundaries =
        (0..=top).map(|k| if k == 0 { Subspace::zero(cx.dim_at(0)) } else { cx.differential(k - 1).image() }).collect();
    Spaces { cocycles, coboundaries }
}

/// Exactness at a node: `in(Z_src) + B = {z ∈ Z : out(z) ∈ B_next}`.
fn exact_at(
    z: &RatSubspace,
    b: &RatSubspace,
    incoming: Option<(&RatMatrix, &RatSubspace)>,
    outgoing: (&RatMatrix, &RatSubspace),
) -> bool {
    let image = match incoming {
        Some((map, src)) => src.image_under(map).sum(b),
        None => b.clone(),
    };
    let kernel = z.intersect(&Subspace::preimage(outgoing.0, outgoing.1));
    image == kernel
}

fn deep_exactness(cx: &ChainComplex, rho: &ChainMap) -> Vec<NodeExactness> {
    let (p, q) = (rho.source(), rho.target());
    let xs = spaces(cx, 3);
    let ps = spaces(p, 3);
    let qs = spaces(q, 3);
    let empty = Layout::new(cx_dims(cx), &[]);
    let layout_or = |c: &ChainComplex, k: usize| c.layout(k).cloned().unwrap_or_else(|| empty.clone());
    let proj: Vec<RatMatrix> = (0..4).map(|k| selection(&layout_or(cx, k), &layout_or(p, k))).collect();
    let incl: Vec<RatMatrix> = (0..3).map(|k| selection(&layout_or(q, k), &layout_or(cx, k + 1))).collect();
    let rhos: Vec<RatMatrix> = (0..3).map(|k| rho.component(k)).collect();

    let mut out = Vec::new();
    for k in 0..4 {
        let incoming = if k == 0 { None } else { Some((&incl[k - 1], &qs.cocycles[k - 1])) };
        let exact = exact_at(&xs.cocycles[k], &xs.coboundaries[k], incoming, (&proj[k], &ps.coboundaries[k]));
        out.push(NodeExactness { node: format!("H{k}(X)"), exact });
        if k == 3 {
            break;
        }
        let exact = exact_at(
            &ps.cocycles[k],
            &ps.coboundaries[k],
            Some((&proj[k], &xs.cocycles[k])),
            (&rhos[k], &qs.coboundaries[k]),
        );
        out.push(NodeExactness { node: format!("H{k}(X')+H{k}(X'')"), exact });
        let exact = exact_at(
            &qs.cocycles[k],
            &qs.coboundaries[k],
            Some((&rhos[k], &ps.cocycles[k])),
            (&incl[k], &xs.coboundaries[k + 1]),
        );
        out.push(NodeExactness { node: format!("H{k}(X',X'')"), exact });
    }
    out
}

fn cx_dims(cx: &ChainComplex) -> DimVector {
    cx.layout(0).expect("deformation complexes carry layouts").dims()
}

/// `H⁰(ρ)` restricted to `H⁰(C(X''))`, i.e. `h' ↦ F h'` on `ker d₀`, is injective.
pub fn check_h0rho_injective(x: &EnhancedRep) -> bool {
    let d = x.dims();
    let src = Layout::new(d, &[Summand::HPrime]);
    let mid = Layout::new(d, &[Summand::APrime, Summand::BPrime]);
    let tgt = Layout::new(d, &[Summand::F]);
    let mut d0 = BlockMap::new(&src, &mid);
    d0.commutator_with(Summand::APrime, Summand::HPrime, 1, x.a_prime());
    d0.commutator_with(Summand::BPrime, Summand::HPrime, 1, x.b_prime());
    let mut rho = BlockMap::new(&src, &tgt);
    rho.left(Summand::F, Summand::HPrime, 1, x.f());
    let cocycles = d0.finish().kernel();
    cocycles.image_under(&rho.finish()).dim() == cocycles.dim()
}

/// Every cocycle of `C(X', X'')` in degree 1 is `ρ₁` of a cocycle of
/// `C(X') ⊕ C(X'')`. Only defined for `c' = 1`.
pub fn check_rho1_surjective_on_cocycles(x: &EnhancedRep) -> Result<bool> {
    if x.dims().cprime != 1 {
        return Err(CoreError::Unsupported(format!("ρ₁ surjectivity probe needs c' = 1, got {}", x.dims())));
    }
    let rho = build_rho(x)?;
    let source_cocycles = rho.source().differential(1).kernel();
    let target_cocycles = rho.target().differential(1).kernel();
    Ok(source_cocycles.image_under(&rho.component(1)).dim() == target_cocycles.dim())
}

/// `φ ↦ (B'φ − φB, −A'φ + φA, φI)` on `Hom(V, V')` has zero kernel.
pub fn check_d1dual_injective(x: &EnhancedRep) -> bool {
    let d = x.dims();
    let (ic, icp) = (RatMatrix::identity(d.c), RatMatrix::identity(d.cprime));
    let sandwich = crate::exactmat::sandwich;
    let top = &sandwich(x.b_prime(), &ic) - &sandwich(&icp, x.b());
    let mid = &sandwich(&icp, x.a()) - &sandwich(x.a_prime(), &ic);
    let bottom = sandwich(&icp, x.i());
    let dual = top.vstack(&mid).vstack(&bottom);
    dual.rank() == d.c * d.cprime
}
