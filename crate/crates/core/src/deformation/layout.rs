//! Named direct summands and the block assembler for the differentials.
//!
//! Every term of every complex is an ordered list of Hom-spaces. Each
//! Hom-space is vectorized column-major and summands are stacked in list
//! order, which fixes the matrix realization of all maps.

use crate::exactmat::{rat, sandwich, RatMatrix};
use crate::quiver::DimVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    /// `End(V)` in degree 0.
    H,
    /// `End(V')` in degree 0.
    HPrime,
    A,
    B,
    I,
    J,
    APrime,
    BPrime,
    F,
    /// `End(V)` target of the first relation.
    C1,
    /// `Hom(V', V)` targets of the second and third relations.
    C2,
    C3,
    /// `Hom(V', W)` target of the fourth relation.
    C4,
    /// `End(V')` target of the fifth relation.
    C5,
    /// `Hom(V', V)` in the top degree.
    Top,
}

impl Summand {
    /// `(rows, cols)` of the Hom-space.
    pub fn shape(self, d: DimVector) -> (usize, usize) {
        let (r, c, cp) = (d.r, d.c, d.cprime);
        match self {
            Summand::H | Summand::A | Summand::B | Summand::C1 => (c, c),
            Summand::HPrime | Summand::APrime | Summand::BPrime | Summand::C5 => (cp, cp),
            Summand::I => (c, r),
            Summand::J => (r, c),
            Summand::F | Summand::C2 | Summand::C3 | Summand::Top => (c, cp),
            Summand::C4 => (r, cp),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Summand::H => "h",
            Summand::HPrime => "h'",
            Summand::A => "a",
            Summand::B => "b",
            Summand::I => "i",
            Summand::J => "j",
            Summand::APrime => "a'",
            Summand::BPrime => "b'",
            Summand::F => "f",
            Summand::C1 => "c1",
            Summand::C2 => "c2",
            Summand::C3 => "c3",
            Summand::C4 => "c4",
            Summand::C5 => "c5",
            Summand::Top => "top",
        }
    }
}

/// One term of a complex: summands with their offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    dims: DimVector,
    entries: Vec<(Summand, usize, (usize, usize))>,
    total: usize,
}

impl Layout {
    pub fn new(dims: DimVector, summands: &[Summand]) -> Self {
        let mut entries = Vec::with_capacity(summands.len());
        let mut total = 0;
        for &s in summands {
            assert!(entries.iter().all(|(t, _, _)| *t != s), "contract violation: repeated summand {s:?}");
            let shape = s.shape(dims);
            entries.push((s, total, shape));
            total += shape.0 * shape.1;
        }
        Layout { dims, entries, total }
    }

    pub fn dims(&self) -> DimVector {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.total
    }

    pub fn summands(&self) -> impl Iterator<Item = Summand> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    pub fn has(&self, s: Summand) -> bool {
        self.entries.iter().any(|e| e.0 == s)
    }

    /// `(offset, size)` of a summand.
    pub fn span(&self, s: Summand) -> (usize, usize) {
        let (_, off, (m, n)) = self
            .entries
            .iter()
            .find(|e| e.0 == s)
            .unwrap_or_else(|| panic!("contract violation: summand {s:?} not in layout"));
        (*off, m * n)
    }

    pub fn shape_of(&self, s: Summand) -> (usize, usize) {
        s.shape(self.dims)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.summands().map(Summand::name).collect()
    }
}

/// Map copying every summand the two layouts share; the smaller layout must
/// be contained in the larger one.
pub fn selection(from: &Layout, to: &Layout) -> RatMatrix {
    let (small, large) = if from.entries.len() <= to.entries.len() { (from, to) } else { (to, from) };
    assert!(small.summands().all(|s| large.has(s)), "contract violation: layouts not nested");
    let mut m = RatMatrix::zeros(to.dim(), from.dim());
    for s in small.summands() {
        let (ro, n) = to.span(s);
        let (co, _) = from.span(s);
        for k in 0..n {
            m[(ro + k, co + k)] = rat(1);
        }
    }
    m
}

/// Assembles a map between two layouts one `(target, source)` block at a time.
pub struct BlockMap<'a> {
    source: &'a Layout,
    target: &'a Layout,
    matrix: RatMatrix,
}

impl<'a> BlockMap<'a> {
    pub fn new(source: &'a Layout, target: &'a Layout) -> Self {
        BlockMap { source, target, matrix: RatMatrix::zeros(target.dim(), source.dim()) }
    }

    /// Adds `sign · (x ↦ left · x · right)` from `src` into `tgt`.
    pub fn add(&mut self, tgt: Summand, src: Summand, sign: i64, left: &RatMatrix, right: &RatMatrix) {
        let (sm, sn) = self.source.shape_of(src);
        let (tm, tn) = self.target.shape_of(tgt);
        assert_eq!((left.cols(), right.rows()), (sm, sn), "contract violation: {src:?} block input shape");
        assert_eq!((left.rows(), right.cols()), (tm, tn), "contract violation: {tgt:?} block output shape");
        let mut blk = sandwich(left, right);
        if sign != 1 {
            blk = blk.scale(&rat(sign));
        }
        let (r0, _) = self.target.span(tgt);
        let (c0, _) = self.source.span(src);
        self.matrix.add_block(r0, c0, &blk);
    }

    /// `x ↦ sign · left · x`.
    pub fn left(&mut self, tgt: Summand, src: Summand, sign: i64, left: &RatMatrix) {
        let n = self.source.shape_of(src).1;
        self.add(tgt, src, sign, left, &RatMatrix::identity(n));
    }

    /// `x ↦ sign · x · right`.
    pub fn right(&mut self, tgt: Summand, src: Summand, sign: i64, right: &RatMatrix) {
        let m = self.source.shape_of(src).0;
        self.add(tgt, src, sign, &RatMatrix::identity(m), right);
    }

    /// `x ↦ x · m − m · x`, i.e. `[x, m]`.
    pub fn commutator_with(&mut self, tgt: Summand, src: Summand, sign: i64, m: &RatMatrix) {
        self.right(tgt, src, sign, m);
        self.left(tgt, src, -sign, m);
    }

    pub fn finish(self) -> RatMatrix {
        self.matrix
    }
}
