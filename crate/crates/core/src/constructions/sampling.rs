//! Seed-deterministic generators of representations satisfying the relations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lift::{assemble_lift, lift_solve};
use super::vandermonde::{vandermonde_rep, VandermondeParams};
use crate::deformation::{build_cx, cohomology, CohomologyReport};
use crate::exactmat::{rat, RatMatrix};
use crate::quiver::{gauge_act, AdhmRep, DimVector, EnhancedParts, EnhancedRep};
use crate::stability::{is_delta_stable, lower_shift, wall_witness_minus, wall_witness_plus};

/// Bound on the absolute value of random integer entries.
pub const ENTRY_BOUND: i64 = 5;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| rat(rng.random_range(-bound..=bound)))
}

/// Product of a unit lower and a unit upper triangular matrix; determinant 1.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    let mut tri = |lower: bool| {
        RatMatrix::from_fn(n, n, |i, j| match (i == j, (i > j) == lower) {
            (true, _) => rat(1),
            (false, true) => rat(rng.random_range(-2..=2)),
            (false, false) => rat(0),
        })
    };
    let l = tri(true);
    let u = tri(false);
    &l * &u
}

/// `α M + β M² + γ·1`, which commutes with `M`.
fn polynomial_in<R: Rng>(rng: &mut R, m: &RatMatrix) -> RatMatrix {
    let (alpha, beta, gamma) = (rng.random_range(-2..=2), rng.random_range(-1..=1), rng.random_range(-3..=3));
    let sq = m * m;
    let mut out = &m.scale(&rat(alpha)) + &sq.scale(&rat(beta));
    out = &out + &RatMatrix::identity(m.rows()).scale(&rat(gamma));
    out
}

/// A commuting pair of `n × n` matrices.
pub fn random_commuting_pair<R: Rng>(rng: &mut R, n: usize) -> (RatMatrix, RatMatrix) {
    let a = match rng.random_range(0..6) {
        0 => RatMatrix::zeros(n, n),
        1 => lower_shift(n),
        _ => random_matrix(rng, n, n, ENTRY_BOUND),
    };
    let b = polynomial_in(rng, &a);
    if rng.random_bool(0.5) {
        (a, b)
    } else {
        (b, a)
    }
}

/// An ADHM datum with `[A, B] = 0` and `IJ = 0`: `B` is a polynomial in `A`,
/// the last column of `I` vanishes and `J` lives in its last row.
pub fn random_adhm<R: Rng>(rng: &mut R, r: usize, c: usize) -> AdhmRep {
    let (a, b) = random_commuting_pair(rng, c);
    let mut i = random_matrix(rng, c, r, ENTRY_BOUND);
    let mut j = RatMatrix::zeros(r, c);
    if r >= 2 {
        for row in 0..c {
            i[(row, r - 1)] = rat(0);
        }
        if rng.random_bool(0.5) {
            for col in 0..c {
                j[(r - 1, col)] = rat(rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND));
            }
        }
    }
    AdhmRep::new(r, c, a, b, i, j).expect("shapes are consistent")
}

/// Random block-triangular lift of a random base, sampled from the kernel of
/// the lifting system and moved by a random unimodular gauge transformation.
pub fn random_lift<R: Rng>(rng: &mut R, dims: DimVector) -> EnhancedRep {
    assert!(dims.cprime >= 1 && dims.cprime <= dims.c, "contract violation: lifts need 1 ≤ c' ≤ c");
    let base = random_adhm(rng, dims.r, dims.c - dims.cprime);
    let (a_prime, b_prime) = random_commuting_pair(rng, dims.cprime);
    let solution = lift_solve(&base, &a_prime, &b_prime).expect("pair commutes");
    let ansatz = solution.sample(rng, ENTRY_BOUND);
    let x = assemble_lift(&ansatz).expect("ansatz is consistent");
    random_gauge(rng, &x)
}

pub fn random_gauge<R: Rng>(rng: &mut R, x: &EnhancedRep) -> EnhancedRep {
    let d = x.dims();
    let h = random_unimodular(rng, d.c);
    let hp = random_unimodular(rng, d.cprime);
    gauge_act(x, &h, &hp).expect("unimodular matrices are invertible")
}

/// ADHM datum on `V` with `F = 0` and an unrelated commuting pair on `V'`.
fn random_decoupled<R: Rng>(rng: &mut R, dims: DimVector) -> EnhancedRep {
    let base = random_adhm(rng, dims.r, dims.c);
    let (a_prime, b_prime) = random_commuting_pair(rng, dims.cprime);
    let mut parts = EnhancedParts::zeros(dims);
    parts.a = base.a;
    parts.b = base.b;
    parts.i = base.i;
    parts.j = base.j;
    parts.a_prime = a_prime;
    parts.b_prime = b_prime;
    EnhancedRep::new(dims, parts).expect("shapes are consistent")
}

/// `count` representations with zero residuals, not necessarily stable: a
/// mix of lifts, wall witnesses and decoupled data, all gauge-transformed.
pub fn sample_representations(dims: DimVector, seed: u64, count: usize) -> Vec<EnhancedRep> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|k| {
            let liftable = dims.cprime >= 1 && dims.cprime <= dims.c;
            let x = match k % 5 {
                _ if !liftable => random_decoupled(&mut rng, dims),
                0 => wall_witness_minus(dims).expect("c' ≥ 1"),
                1 => random_decoupled(&mut rng, dims),
                _ => random_lift(&mut rng, dims),
            };
            random_gauge(&mut rng, &x)
        })
        .collect()
}

/// Δ-stable representations: `X⁺`, the standard diagonal family member when
/// `c' = 1`, then every stable one among `attempts` random lifts. Stability is
/// verified for each entry.
pub fn sample_stable(dims: DimVector, seed: u64, attempts: usize) -> Vec<EnhancedRep> {
    if dims.cprime == 0 || dims.cprime > dims.c {
        return Vec::new();
    }
    let mut out = Vec::new();
    out.extend(wall_witness_plus(dims).ok());
    if dims.cprime == 1 {
        out.extend(VandermondeParams::standard(dims.r, dims.c).and_then(|p| vandermonde_rep(&p)).ok());
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..attempts {
        out.push(random_lift(&mut rng, dims));
    }
    out.retain(|x| is_delta_stable(x).unwrap_or(false));
    out
}

/// A Δ-stable representation with nonvanishing obstruction space.
#[derive(Clone, Debug, PartialEq)]
pub struct ObstructedInstance {
    pub rep: EnhancedRep,
    pub cohomology: CohomologyReport,
    /// Zero-based index of the candidate that succeeded.
    pub attempt: usize,
}

/// Tries `X⁺` and then random lifts, `attempts` candidates in total.
pub fn search_obstructed(dims: DimVector, seed: u64, attempts: usize) -> Option<ObstructedInstance> {
    if dims.cprime == 0 || dims.cprime > dims.c {
        return None;
    }
    let mut rng = rng_from_seed(seed);
    for attempt in 0..attempts {
        let rep = if attempt == 0 { wall_witness_plus(dims).expect("c' ≤ c") } else { random_lift(&mut rng, dims) };
        if !is_delta_stable(&rep).unwrap_or(false) {
            continue;
        }
        let cx = build_cx(&rep).expect("stable samples satisfy the relations");
        let cohomology = cohomology(&cx);
        if cohomology.h_at(2) > 0 {
            return Some(ObstructedInstance { rep, cohomology, attempt });
        }
    }
    None
}
