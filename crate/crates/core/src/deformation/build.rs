//! Matrix realization of `C(X)`, the auxiliary complexes and `ρ`.

use super::complex::{ChainComplex, ChainMap};
use super::layout::{BlockMap, Layout, Summand};
use crate::error::Result;
use crate::exactmat::RatMatrix;
use crate::quiver::{DimVector, EnhancedRep};

use Summand::*;

/// Which form of `C(X)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ComplexForm {
    /// Simplified complex when `c' = 1`, general one otherwise.
    #[default]
    Auto,
    /// Always the general complex, including the `End(V')` summand in degree 2.
    General,
}

impl ComplexForm {
    fn simplified(self, d: DimVector) -> bool {
        self == ComplexForm::Auto && d.cprime == 1
    }
}

fn layouts(d: DimVector, terms: &[&[Summand]]) -> Vec<Layout> {
    terms.iter().map(|t| Layout::new(d, t)).collect()
}

pub(crate) fn cx_layouts(d: DimVector, simplified: bool) -> Vec<Layout> {
    if simplified {
        layouts(d, &[&[H, HPrime], &[A, B, I, J, APrime, BPrime, F], &[C1, C2, C3, C4], &[Top]])
    } else {
        layouts(d, &[&[H, HPrime], &[A, B, I, J, APrime, BPrime, F], &[C1, C2, C3, C4, C5], &[Top]])
    }
}

fn prepare(x: &EnhancedRep) -> Result<()> {
    x.dims().require_cprime()?;
    x.require_relations()
}

/// `C(X)`, switching to the simplified complex when `c' = 1`.
pub fn build_cx(x: &EnhancedRep) -> Result<ChainComplex> {
    build_cx_form(x, ComplexForm::Auto)
}

pub fn build_cx_form(x: &EnhancedRep, form: ComplexForm) -> Result<ChainComplex> {
    prepare(x)?;
    let d = x.dims();
    let ls = cx_layouts(d, form.simplified(d));
    let (ic, icp) = (RatMatrix::identity(d.c), RatMatrix::identity(d.cprime));
    let (a, b, i, j, ap, bp, f) = (x.a(), x.b(), x.i(), x.j(), x.a_prime(), x.b_prime(), x.f());

    let mut d0 = BlockMap::new(&ls[0], &ls[1]);
    d0.commutator_with(A, H, 1, a);
    d0.commutator_with(B, H, 1, b);
    d0.right(I, H, 1, i);
    d0.left(J, H, -1, j);
    d0.commutator_with(APrime, HPrime, 1, ap);
    d0.commutator_with(BPrime, HPrime, 1, bp);
    d0.right(F, H, 1, f);
    d0.left(F, HPrime, -1, f);

    let mut d1 = BlockMap::new(&ls[1], &ls[2]);
    d1.commutator_with(C1, A, 1, b);
    d1.commutator_with(C1, B, -1, a);
    d1.left(C1, J, 1, i);
    d1.right(C1, I, 1, j);
    d1.left(C2, F, 1, a);
    d1.right(C2, F, -1, ap);
    d1.right(C2, A, 1, f);
    d1.left(C2, APrime, -1, f);
    d1.left(C3, F, 1, b);
    d1.right(C3, F, -1, bp);
    d1.right(C3, B, 1, f);
    d1.left(C3, BPrime, -1, f);
    d1.right(C4, J, 1, f);
    d1.left(C4, F, 1, j);
    if ls[2].has(C5) {
        d1.commutator_with(C5, APrime, 1, bp);
        d1.commutator_with(C5, BPrime, -1, ap);
    }

    let mut d2 = BlockMap::new(&ls[2], &ls[3]);
    d2.right(Top, C1, 1, f);
    d2.add(Top, C2, 1, b, &icp);
    d2.add(Top, C2, -1, &ic, bp);
    d2.add(Top, C3, -1, a, &icp);
    d2.add(Top, C3, 1, &ic, ap);
    d2.left(Top, C4, -1, i);
    if ls[2].has(C5) {
        d2.left(Top, C5, -1, f);
    }

    let ds = vec![d0.finish(), d1.finish(), d2.finish()];
    ChainComplex::with_layouts(ls, ds)
}

/// `C(X')`: the ADHM deformation complex of `(A, B, I, J)`.
pub fn build_cx_prime(x: &EnhancedRep) -> Result<ChainComplex> {
    prepare(x)?;
    let ls = layouts(x.dims(), &[&[H], &[A, B, I, J], &[C1]]);
    let (d0, d1) = adhm_differentials(x, &ls[0], &ls[1], &ls[2]);
    ChainComplex::with_layouts(ls, vec![d0, d1])
}

fn adhm_differentials(x: &EnhancedRep, l0: &Layout, l1: &Layout, l2: &Layout) -> (RatMatrix, RatMatrix) {
    let (a, b, i, j) = (x.a(), x.b(), x.i(), x.j());
    let mut d0 = BlockMap::new(l0, l1);
    d0.commutator_with(A, H, 1, a);
    d0.commutator_with(B, H, 1, b);
    d0.right(I, H, 1, i);
    d0.left(J, H, -1, j);
    let mut d1 = BlockMap::new(l1, l2);
    d1.commutator_with(C1, A, 1, b);
    d1.commutator_with(C1, B, -1, a);
    d1.left(C1, J, 1, i);
    d1.right(C1, I, 1, j);
    (d0.finish(), d1.finish())
}

/// `C(X'')`; the two-term complex with zero differential when `c' = 1`.
pub fn build_cx_double_prime(x: &EnhancedRep) -> Result<ChainComplex> {
    build_cx_double_prime_form(x, ComplexForm::Auto)
}

pub fn build_cx_double_prime_form(x: &EnhancedRep, form: ComplexForm) -> Result<ChainComplex> {
    prepare(x)?;
    let d = x.dims();
    if form.simplified(d) {
        let ls = layouts(d, &[&[HPrime], &[APrime, BPrime]]);
        let d0 = RatMatrix::zeros(ls[1].dim(), ls[0].dim());
        return ChainComplex::with_layouts(ls, vec![d0]);
    }
    let ls = layouts(d, &[&[HPrime], &[APrime, BPrime], &[C5]]);
    let (d0, d1) = prime_differentials(x, &ls[0], &ls[1], &ls[2]);
    ChainComplex::with_layouts(ls, vec![d0, d1])
}

fn prime_differentials(x: &EnhancedRep, l0: &Layout, l1: &Layout, l2: &Layout) -> (RatMatrix, RatMatrix) {
    let (ap, bp) = (x.a_prime(), x.b_prime());
    let mut d0 = BlockMap::new(l0, l1);
    d0.commutator_with(APrime, HPrime, 1, ap);
    d0.commutator_with(BPrime, HPrime, 1, bp);
    let mut d1 = BlockMap::new(l1, l2);
    d1.commutator_with(C5, APrime, 1, bp);
    d1.commutator_with(C5, BPrime, -1, ap);
    (d0.finish(), d1.finish())
}

/// `C(X', X'')`.
pub fn build_cx_pair(x: &EnhancedRep) -> Result<ChainComplex> {
    prepare(x)?;
    let d = x.dims();
    let ls = layouts(d, &[&[F], &[C2, C3, C4], &[Top]]);
    let (ic, icp) = (RatMatrix::identity(d.c), RatMatrix::identity(d.cprime));
    let (a, b, i, j, ap, bp) = (x.a(), x.b(), x.i(), x.j(), x.a_prime(), x.b_prime());
    let mut d0 = BlockMap::new(&ls[0], &ls[1]);
    d0.left(C2, F, -1, a);
    d0.right(C2, F, 1, ap);
    d0.left(C3, F, -1, b);
    d0.right(C3, F, 1, bp);
    d0.left(C4, F, -1, j);
    let mut d1 = BlockMap::new(&ls[1], &ls[2]);
    d1.add(Top, C2, -1, b, &icp);
    d1.add(Top, C2, 1, &ic, bp);
    d1.add(Top, C3, 1, a, &icp);
    d1.add(Top, C3, -1, &ic, ap);
    d1.left(Top, C4, 1, i);
    let ds = vec![d0.finish(), d1.finish()];
    ChainComplex::with_layouts(ls, ds)
}

/// `C(X') ⊕ C(X'')` with summands interleaved degree by degree.
pub fn build_cx_sum(x: &EnhancedRep) -> Result<ChainComplex> {
    build_cx_sum_form(x, ComplexForm::Auto)
}

pub fn build_cx_sum_form(x: &EnhancedRep, form: ComplexForm) -> Result<ChainComplex> {
    prepare(x)?;
    let d = x.dims();
    let ls = if form.simplified(d) {
        layouts(d, &[&[H, HPrime], &[A, B, I, J, APrime, BPrime], &[C1]])
    } else {
        layouts(d, &[&[H, HPrime], &[A, B, I, J, APrime, BPrime], &[C1, C5]])
    };
    let (mut d0, mut d1) = adhm_differentials(x, &ls[0], &ls[1], &ls[2]);
    if ls[2].has(C5) {
        let (p0, p1) = prime_differentials(x, &ls[0], &ls[1], &ls[2]);
        d0 = &d0 + &p0;
        d1 = &d1 + &p1;
    } else {
        let mut p0 = BlockMap::new(&ls[0], &ls[1]);
        p0.commutator_with(APrime, HPrime, 1, x.a_prime());
        p0.commutator_with(BPrime, HPrime, 1, x.b_prime());
        d0 = &d0 + &p0.finish();
    }
    ChainComplex::with_layouts(ls, vec![d0, d1])
}

/// `ρ: C(X') ⊕ C(X'') → C(X', X'')`.
pub fn build_rho(x: &EnhancedRep) -> Result<ChainMap> {
    build_rho_form(x, ComplexForm::Auto)
}

pub fn build_rho_form(x: &EnhancedRep, form: ComplexForm) -> Result<ChainMap> {
    let source = build_cx_sum_form(x, form)?;
    let target = build_cx_pair(x)?;
    let f = x.f();
    let s = |k: usize| source.layout(k).expect("built with layouts");
    let t = |k: usize| target.layout(k).expect("built with layouts");

    let mut r0 = BlockMap::new(s(0), t(0));
    r0.right(F, H, -1, f);
    r0.left(F, HPrime, 1, f);

    let mut r1 = BlockMap::new(s(1), t(1));
    r1.right(C2, A, -1, f);
    r1.left(C2, APrime, 1, f);
    r1.right(C3, B, -1, f);
    r1.left(C3, BPrime, 1, f);
    r1.right(C4, J, -1, f);

    let mut r2 = BlockMap::new(s(2), t(2));
    r2.right(Top, C1, -1, f);
    if s(2).has(C5) {
        r2.left(Top, C5, 1, f);
    }

    let comps = vec![r0.finish(), r1.finish(), r2.finish()];
    ChainMap::new(source, target, comps)
}
