//! Stability parameters, the chamber criterion, subrepresentation closures and
//! the wall witnesses.
//!
//! Inside the open cone `Δ = {θ' > 0, θ + θ' < 0}` stability, semistability
//! and the pair of conditions "F injective" + "the ADHM part is stable" all
//! coincide, so the decision there is exact. On the boundary rays only
//! witness checks are offered: a subrepresentation is supplied (or built by
//! [`subrep_closure`]) and its slope is evaluated.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::exactmat::{format_rational, rat, Field, Matrix, RatMatrix, RatSubspace, Rational, Subspace};
use crate::quiver::{AdhmRep, DimVector, EnhancedParts, EnhancedRep};

/// `Θ = (θ, θ', θ∞)` with `cθ + c'θ' + rθ∞ = 0`; `θ∞` is always derived.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityParam {
    theta: Rational,
    theta_prime: Rational,
    theta_inf: Rational,
    dims: DimVector,
}

impl StabilityParam {
    pub fn theta(&self) -> &Rational {
        &self.theta
    }
    pub fn theta_prime(&self) -> &Rational {
        &self.theta_prime
    }
    pub fn theta_inf(&self) -> &Rational {
        &self.theta_inf
    }
    pub fn dims(&self) -> DimVector {
        self.dims
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "theta": format_rational(&self.theta),
            "theta_prime": format_rational(&self.theta_prime),
            "theta_inf": format_rational(&self.theta_inf),
        })
    }
}

pub fn make_param(theta: Rational, theta_prime: Rational, dims: DimVector) -> StabilityParam {
    let c = rat(dims.c as i64);
    let cp = rat(dims.cprime as i64);
    let r = rat(dims.r as i64);
    let theta_inf = -(&(&c * &theta) + &(&cp * &theta_prime)) / r;
    StabilityParam { theta, theta_prime, theta_inf, dims }
}

/// Representative parameter on the ray `ρ⁻`: `(θ, θ') = (−1, 0)`.
pub fn theta_minus(dims: DimVector) -> StabilityParam {
    make_param(rat(-1), rat(0), dims)
}

/// Representative parameter on the ray `ρ⁺`: `(θ, θ') = (−1, 1)`.
pub fn theta_plus(dims: DimVector) -> StabilityParam {
    make_param(rat(-1), rat(1), dims)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChamberLocation {
    Delta,
    RhoMinus,
    RhoPlus,
    Outside,
}

pub fn chamber_of(p: &StabilityParam) -> ChamberLocation {
    let zero = rat(0);
    let (t, tp) = (&p.theta, &p.theta_prime);
    if *tp > zero && t + tp < zero {
        ChamberLocation::Delta
    } else if *tp == zero && *t < zero {
        ChamberLocation::RhoMinus
    } else if *tp > zero && *t == -tp {
        ChamberLocation::RhoPlus
    } else {
        ChamberLocation::Outside
    }
}

/// Smallest subspace containing `seed` and invariant under every operator.
/// Each round applies the operators in order and stops once the dimension
/// stalls, so it terminates after at most `n` rounds.
pub fn closure_under<T: Field>(ops: &[&Matrix<T>], seed: &Subspace<T>) -> Subspace<T> {
    let mut current = seed.clone();
    loop {
        let mut next = current.clone();
        for op in ops {
            next = next.sum(&current.image_under(op));
        }
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

pub fn krylov_closure<T: Field>(a: &Matrix<T>, b: &Matrix<T>, seed: &Subspace<T>) -> Subspace<T> {
    assert!(a.is_square() && b.shape() == a.shape(), "contract violation: A, B must be square of equal size");
    closure_under(&[a, b], seed)
}

/// ADHM stability over any field: the `(A, B)`-closure of `im I` is all of `V`.
pub fn adhm_stable_over<T: Field>(a: &Matrix<T>, b: &Matrix<T>, i: &Matrix<T>) -> bool {
    krylov_closure(a, b, &Subspace::span_columns(i)).is_full()
}

pub fn is_adhm_stable(x: &AdhmRep) -> bool {
    adhm_stable_over(&x.a, &x.b, &x.i)
}

/// Evidence behind a chamber verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberVerdict {
    pub f_rank: usize,
    pub f_injective: bool,
    pub closure_dim: usize,
    pub adhm_stable: bool,
    pub stable: bool,
}

fn require_delta(x: &EnhancedRep, p: &StabilityParam) -> Result<()> {
    if chamber_of(p) != ChamberLocation::Delta {
        return Err(CoreError::OutsideChamber);
    }
    x.dims().require_cprime()?;
    x.require_relations()
}

/// Stability verdict in `Δ` together with the quantities it is based on.
pub fn chamber_verdict(x: &EnhancedRep, p: &StabilityParam) -> Result<ChamberVerdict> {
    require_delta(x, p)?;
    Ok(delta_verdict(x))
}

/// The chamber criterion without parameter or relation checks.
pub(crate) fn delta_verdict(x: &EnhancedRep) -> ChamberVerdict {
    let f_rank = x.f().rank();
    let f_injective = f_rank == x.dims().cprime;
    let closure = krylov_closure(x.a(), x.b(), &x.i().image());
    let adhm_stable = closure.is_full();
    ChamberVerdict { f_rank, f_injective, closure_dim: closure.dim(), adhm_stable, stable: f_injective && adhm_stable }
}

/// Stability (equivalently semistability) for `Θ ∈ Δ`.
pub fn is_stable_in_chamber(x: &EnhancedRep, p: &StabilityParam) -> Result<bool> {
    Ok(chamber_verdict(x, p)?.stable)
}

/// Any parameter in `Δ` gives the same answer; this one uses `(−2, 1)`.
pub fn is_delta_stable(x: &EnhancedRep) -> Result<bool> {
    is_stable_in_chamber(x, &make_param(rat(-2), rat(1), x.dims()))
}

/// A subrepresentation `(W or 0, S ⊆ V, S' ⊆ V')`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubrepWitness {
    pub includes_w: bool,
    pub s: RatSubspace,
    pub s_prime: RatSubspace,
}

impl SubrepWitness {
    /// Numerical type `(r or 0, dim S, dim S')`.
    pub fn numerical_type(&self, r: usize) -> (usize, usize, usize) {
        (if self.includes_w { r } else { 0 }, self.s.dim(), self.s_prime.dim())
    }

    /// Checks that the subspaces are preserved by every arrow.
    pub fn is_subrep_of(&self, x: &EnhancedRep) -> bool {
        let d = x.dims();
        if self.s.ambient_dim() != d.c || self.s_prime.ambient_dim() != d.cprime {
            return false;
        }
        let w_ok = if self.includes_w { self.s.contains(&x.i().image()) } else { self.s.image_under(x.j()).is_zero() };
        w_ok && self.s.is_invariant_under(x.a())
            && self.s.is_invariant_under(x.b())
            && self.s_prime.is_invariant_under(x.a_prime())
            && self.s_prime.is_invariant_under(x.b_prime())
            && self.s.contains(&self.s_prime.image_under(x.f()))
    }

    pub fn is_zero(&self) -> bool {
        !self.includes_w && self.s.is_zero() && self.s_prime.is_zero()
    }

    pub fn is_everything(&self) -> bool {
        self.includes_w && self.s.is_full() && self.s_prime.is_full()
    }

    pub fn to_json_value(&self) -> Value {
        json!({"includes_W": self.includes_w, "dimS": self.s.dim(), "dimSprime": self.s_prime.dim()})
    }
}

/// Smallest subrepresentation containing the seeds, or `None` when the seeds
/// force `J(S) ≠ 0` without `W`.
pub fn subrep_closure(
    x: &EnhancedRep,
    includes_w: bool,
    seed_v: &RatSubspace,
    seed_v_prime: &RatSubspace,
) -> Option<SubrepWitness> {
    let d = x.dims();
    assert_eq!(seed_v.ambient_dim(), d.c, "contract violation: seedV lives in V");
    assert_eq!(seed_v_prime.ambient_dim(), d.cprime, "contract violation: seedV' lives in V'");
    let s_prime = krylov_closure(x.a_prime(), x.b_prime(), seed_v_prime);
    let mut generators = seed_v.sum(&s_prime.image_under(x.f()));
    if includes_w {
        generators = generators.sum(&x.i().image());
    }
    let s = krylov_closure(x.a(), x.b(), &generators);
    if !includes_w && !s.image_under(x.j()).is_zero() {
        return None;
    }
    Some(SubrepWitness { includes_w, s, s_prime })
}

/// `θ·dim S + θ'·dim S' (+ θ∞·r if W is included)`.
pub fn slope_value(w: &SubrepWitness, p: &StabilityParam) -> Rational {
    let mut v = &(&p.theta * &rat(w.s.dim() as i64)) + &(&p.theta_prime * &rat(w.s_prime.dim() as i64));
    if w.includes_w {
        v = &v + &(&p.theta_inf * &rat(p.dims.r as i64));
    }
    v
}

/// Outcome of testing one subrepresentation against a parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessCheck {
    pub is_subrep: bool,
    /// Whether the (semi)stability inequalities apply to this witness at all
    /// (nonzero without `W`, proper with `W`).
    pub constrained: bool,
    pub slope: Rational,
    pub violates_stability: bool,
    pub violates_semistability: bool,
}

pub fn check_witness(x: &EnhancedRep, w: &SubrepWitness, p: &StabilityParam) -> WitnessCheck {
    let is_subrep = w.is_subrep_of(x);
    let constrained = if w.includes_w { !w.is_everything() } else { !w.is_zero() };
    let slope = slope_value(w, p);
    let zero = rat(0);
    let active = is_subrep && constrained;
    WitnessCheck {
        is_subrep,
        constrained,
        violates_stability: active && slope >= zero,
        violates_semistability: active && slope > zero,
        slope,
    }
}

/// For an unstable representation, a subrepresentation that violates
/// semistability at every `Θ ∈ Δ`: `(0, 0, ker F)` when `F` is not injective,
/// otherwise `(W, S, F⁻¹(S))` with `S` the closure of `im I`.
pub fn chamber_destabilizer(x: &EnhancedRep) -> Result<Option<SubrepWitness>> {
    x.dims().require_cprime()?;
    x.require_relations()?;
    let d = x.dims();
    let ker_f = x.f().kernel();
    if !ker_f.is_zero() {
        return Ok(Some(SubrepWitness { includes_w: false, s: Subspace::zero(d.c), s_prime: ker_f }));
    }
    let s = krylov_closure(x.a(), x.b(), &x.i().image());
    if s.is_full() {
        return Ok(None);
    }
    let s_prime = Subspace::preimage(x.f(), &s);
    Ok(Some(SubrepWitness { includes_w: true, s, s_prime }))
}

/// Lower shift: `e_k ↦ e_{k+1}`, last basis vector to zero.
pub fn lower_shift(n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, n, |i, j| if i == j + 1 { rat(1) } else { rat(0) })
}

fn wall_base(dims: DimVector) -> EnhancedParts {
    let mut parts = EnhancedParts::zeros(dims);
    parts.a = lower_shift(dims.c);
    parts.b = lower_shift(dims.c);
    parts.i[(0, 0)] = rat(1);
    parts
}

/// `X⁻ = (Ā, Ā, Ī, 0, 0, 0, 0)`.
pub fn wall_witness_minus(dims: DimVector) -> Result<EnhancedRep> {
    dims.require_cprime()?;
    EnhancedRep::new(dims, wall_base(dims))
}

/// `X⁺ = (Ā, Ā, Ī, 0, Ā', Ā', F̄)` with `F̄ = [0; 1_{c'}]`.
pub fn wall_witness_plus(dims: DimVector) -> Result<EnhancedRep> {
    dims.require_cprime()?;
    if dims.cprime > dims.c {
        return Err(CoreError::InvalidDims(format!("X⁺ needs c' ≤ c, got {dims}")));
    }
    let mut parts = wall_base(dims);
    parts.a_prime = lower_shift(dims.cprime);
    parts.b_prime = lower_shift(dims.cprime);
    let offset = dims.c - dims.cprime;
    for k in 0..dims.cprime {
        parts.f[(offset + k, k)] = rat(1);
    }
    EnhancedRep::new(dims, parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Wall {
    Minus,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SemistableEvidence {
    pub residuals_zero: bool,
    /// Dimension of the `(Ā, Ā)`-closure of `im Ī`.
    pub closure_dim: usize,
    pub closure_is_full: bool,
    /// Only checked for `X⁺`.
    pub f_injective: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WallReport {
    pub wall: Wall,
    pub dims: DimVector,
    pub evidence: SemistableEvidence,
    pub destabilizer: Option<SubrepWitness>,
    pub slope: Option<Rational>,
    pub proper_nonzero: bool,
    pub passed: bool,
}

impl WallReport {
    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "strictly-semistable"
        } else {
            "failed"
        }
    }

    pub fn to_json_value(&self) -> Value {
        let destabilizer = match (&self.destabilizer, &self.slope) {
            (Some(w), Some(s)) => json!({
                "includes_W": w.includes_w,
                "dimS": w.s.dim(),
                "dimSprime": w.s_prime.dim(),
                "slope": format_rational(s),
            }),
            _ => Value::Null,
        };
        json!({
            "wall": self.wall,
            "dims": self.dims,
            "semistable_evidence": self.evidence,
            "destabilizer": destabilizer,
            "verdict": self.verdict(),
        })
    }
}

/// Builds `X⁻` or `X⁺`, certifies the semistability conditions by closures
/// and exhibits the destabilizer with slope zero on the wall.
pub fn verify_wall_witness(which: Wall, dims: DimVector) -> Result<WallReport> {
    let (x, param) = match which {
        Wall::Minus => (wall_witness_minus(dims)?, theta_minus(dims)),
        Wall::Plus => (wall_witness_plus(dims)?, theta_plus(dims)),
    };
    let closure = krylov_closure(x.a(), x.b(), &x.i().image());
    let f_injective = match which {
        Wall::Minus => None,
        Wall::Plus => Some(x.f().rank() == dims.cprime),
    };
    let evidence = SemistableEvidence {
        residuals_zero: x.residuals().is_zero(),
        closure_dim: closure.dim(),
        closure_is_full: closure.is_full(),
        f_injective,
    };
    let destabilizer = subrep_closure(&x, false, &Subspace::zero(dims.c), &Subspace::full(dims.cprime));
    let slope = destabilizer.as_ref().map(|w| slope_value(w, &param));
    let proper_nonzero =
        destabilizer.as_ref().is_some_and(|w| w.is_subrep_of(&x) && !w.is_zero() && !w.is_everything());
    let passed = evidence.residuals_zero
        && evidence.closure_is_full
        && f_injective.unwrap_or(true)
        && proper_nonzero
        && slope.as_ref().is_some_and(Field::is_zero);
    Ok(WallReport { wall: which, dims, evidence, destabilizer, slope, proper_nonzero, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ratio;

    fn dims(r: usize, c: usize, cp: usize) -> DimVector {
        DimVector::new(r, c, cp).unwrap()
    }

    #[test]
    fn make_param_examples() {
        assert_eq!(make_param(rat(-2), rat(1), dims(1, 3, 1)).theta_inf(), &rat(5));
        assert_eq!(make_param(rat(0), rat(0), dims(1, 3, 1)).theta_inf(), &rat(0));
        assert_eq!(make_param(rat(-1), rat(1), dims(2, 2, 2)).theta_inf(), &rat(0));
        assert_eq!(make_param(rat(1), rat(0), dims(2, 1, 0)).theta_inf(), &ratio(-1, 2));
    }

    #[test]
    fn chamber_examples() {
        let d = dims(1, 3, 1);
        assert_eq!(chamber_of(&make_param(rat(-2), rat(1), d)), ChamberLocation::Delta);
        assert_eq!(chamber_of(&make_param(rat(-1), rat(0), d)), ChamberLocation::RhoMinus);
        assert_eq!(chamber_of(&make_param(rat(-1), rat(1), d)), ChamberLocation::RhoPlus);
        assert_eq!(chamber_of(&make_param(rat(1), rat(1), d)), ChamberLocation::Outside);
        assert_eq!(chamber_of(&make_param(rat(0), rat(0), d)), ChamberLocation::Outside);
        assert_eq!(chamber_of(&make_param(rat(-1), rat(-1), d)), ChamberLocation::Outside);
    }

    #[test]
    fn shift_closure_fills_space() {
        for c in 1..6 {
            let a = lower_shift(c);
            let seed = Subspace::coordinate(c, [0]);
            assert!(krylov_closure(&a, &a, &seed).is_full());
        }
        let z = RatMatrix::zeros(3, 3);
        assert!(krylov_closure(&z, &z, &Subspace::zero(3)).is_zero());
    }

    #[test]
    fn adhm_stability_examples() {
        let x = wall_witness_minus(dims(2, 3, 1)).unwrap();
        assert!(is_adhm_stable(&x.adhm_part()));
        let mut y = x.adhm_part();
        y.i = RatMatrix::zeros(3, 2);
        assert!(!is_adhm_stable(&y));
    }

    #[test]
    fn chamber_criterion_errors_and_cases() {
        let d = dims(1, 2, 1);
        let x = wall_witness_plus(d).unwrap();
        let delta = make_param(rat(-3), rat(1), d);
        assert_eq!(is_stable_in_chamber(&x, &delta), Ok(true));
        assert_eq!(is_stable_in_chamber(&x, &theta_plus(d)), Err(CoreError::OutsideChamber));

        let minus = wall_witness_minus(d).unwrap();
        assert_eq!(is_stable_in_chamber(&minus, &delta), Ok(false));

        let mut parts = EnhancedParts::zeros(d);
        parts.f[(0, 0)] = rat(1);
        let no_i = EnhancedRep::new(d, parts).unwrap();
        assert_eq!(is_stable_in_chamber(&no_i, &delta), Ok(false));

        let mut parts = EnhancedParts::zeros(d);
        parts.i[(0, 0)] = rat(1);
        parts.j[(0, 0)] = rat(1);
        let broken = EnhancedRep::new(d, parts).unwrap();
        assert_eq!(is_stable_in_chamber(&broken, &delta), Err(CoreError::NotARepresentation("R1")));
    }

    #[test]
    fn wall_matrices_smallest_case() {
        let d = dims(1, 2, 1);
        let minus = wall_witness_minus(d).unwrap();
        assert_eq!(minus.a(), &RatMatrix::from_i64_rows(&[[0, 0], [1, 0]]));
        assert_eq!(minus.i(), &RatMatrix::from_i64_rows(&[[1], [0]]));
        assert!(minus.f().is_zero() && minus.a_prime().is_zero() && minus.j().is_zero());
        let plus = wall_witness_plus(d).unwrap();
        assert_eq!(plus.a_prime(), &RatMatrix::zeros(1, 1));
        assert_eq!(plus.f(), &RatMatrix::from_i64_rows(&[[0], [1]]));
        assert!(minus.residuals().is_zero() && plus.residuals().is_zero());
        assert!(wall_witness_plus(dims(1, 2, 3)).is_err());
        assert!(wall_witness_minus(dims(1, 2, 0)).is_err());
    }

    #[test]
    fn subrep_closure_examples() {
        let d = dims(2, 4, 2);
        let minus = wall_witness_minus(d).unwrap();
        let w = subrep_closure(&minus, false, &Subspace::zero(4), &Subspace::full(2)).unwrap();
        assert!(w.s.is_zero() && w.s_prime.is_full());
        assert_eq!(slope_value(&w, &theta_minus(d)), rat(0));

        let plus = wall_witness_plus(d).unwrap();
        let w = subrep_closure(&plus, false, &Subspace::zero(4), &Subspace::full(2)).unwrap();
        assert_eq!(w.s, Subspace::coordinate(4, [2, 3]));
        assert_eq!(slope_value(&w, &theta_plus(d)), rat(0));

        let full = subrep_closure(&plus, true, &Subspace::full(4), &Subspace::full(2)).unwrap();
        assert!(full.is_everything());
        assert_eq!(slope_value(&full, &make_param(ratio(-7, 3), rat(2), d)), rat(0));
    }

    #[test]
    fn subrep_closure_rejects_j_leak() {
        let d = dims(1, 1, 1);
        let mut parts = EnhancedParts::zeros(d);
        parts.j[(0, 0)] = rat(1);
        let x = EnhancedRep::new(d, parts).unwrap();
        assert!(subrep_closure(&x, false, &Subspace::full(1), &Subspace::zero(1)).is_none());
        assert!(subrep_closure(&x, true, &Subspace::full(1), &Subspace::zero(1)).is_some());
    }

    #[test]
    fn wall_reports() {
        let rep = verify_wall_witness(Wall::Minus, dims(1, 3, 1)).unwrap();
        assert!(rep.passed);
        let w = rep.destabilizer.as_ref().unwrap();
        assert_eq!(w.numerical_type(1), (0, 0, 1));

        let rep = verify_wall_witness(Wall::Plus, dims(2, 3, 2)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.destabilizer.as_ref().unwrap().s, Subspace::coordinate(3, [1, 2]));

        let rep = verify_wall_witness(Wall::Plus, dims(1, 1, 1)).unwrap();
        assert!(rep.passed);
        let plus = wall_witness_plus(dims(1, 1, 1)).unwrap();
        assert_eq!(plus.f(), &RatMatrix::identity(1));
        assert_eq!(rep.destabilizer.as_ref().unwrap().s, Subspace::full(1));
        let v = rep.to_json_value();
        assert_eq!(v["verdict"], "strictly-semistable");
        assert_eq!(v["destabilizer"]["slope"], "0");
    }

    #[test]
    fn destabilizers_in_delta() {
        let d = dims(1, 3, 2);
        let minus = wall_witness_minus(d).unwrap();
        let w = chamber_destabilizer(&minus).unwrap().unwrap();
        assert!(!w.includes_w && w.s_prime.is_full());
        let check = check_witness(&minus, &w, &make_param(rat(-5), rat(2), d));
        assert!(check.is_subrep && check.violates_semistability);

        let plus = wall_witness_plus(d).unwrap();
        assert_eq!(chamber_destabilizer(&plus).unwrap(), None);
    }
}
