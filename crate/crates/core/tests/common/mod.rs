//! Test-side oracle for the deformation complexes: each differential is
//! rebuilt by evaluating its defining formula on elementary matrices with
//! plain matrix products, and ranks are taken modulo a large prime with a
//! separate elimination routine.

#![allow(dead_code)]

use eadhm_core::exactmat::{rat, RatMatrix};
use eadhm_core::EnhancedRep;
use num_bigint::BigInt;

pub const BIG_PRIME: u64 = 2_147_483_647;

type Terms = Vec<RatMatrix>;

fn elementary(rows: usize, cols: usize, i: usize, j: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |a, b| if (a, b) == (i, j) { rat(1) } else { rat(0) })
}

/// Matrix of a linear map between lists of Hom-spaces, columns indexed by
/// `(summand, column-major entry)` of the source.
fn matrix_of(source: &[(usize, usize)], target: &[(usize, usize)], f: impl Fn(&Terms) -> Terms) -> RatMatrix {
    let rows: usize = target.iter().map(|(m, n)| m * n).sum();
    let mut columns = Vec::new();
    for (s, &(m, n)) in source.iter().enumerate() {
        for j in 0..n {
            for i in 0..m {
                let input: Terms = source
                    .iter()
                    .enumerate()
                    .map(|(t, &(a, b))| if t == s { elementary(a, b, i, j) } else { RatMatrix::zeros(a, b) })
                    .collect();
                let out = f(&input);
                assert_eq!(out.len(), target.len());
                let mut col = Vec::with_capacity(rows);
                for (o, &(a, b)) in out.iter().zip(target) {
                    assert_eq!(o.shape(), (a, b));
                    for jj in 0..b {
                        for ii in 0..a {
                            col.push(o[(ii, jj)].clone());
                        }
                    }
                }
                columns.push(col);
            }
        }
    }
    RatMatrix::from_columns(rows, &columns)
}

fn mm(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a * b
}

fn comm(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    &(a * b) - &(b * a)
}

fn add(xs: &[RatMatrix]) -> RatMatrix {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = &acc + x;
    }
    acc
}

fn neg(a: &RatMatrix) -> RatMatrix {
    -a
}

/// Differentials of `C(X)`; `with_c5` selects the general form.
pub fn cx_differentials(x: &EnhancedRep, with_c5: bool) -> Vec<RatMatrix> {
    let d = x.dims();
    let (r, c, cp) = (d.r, d.c, d.cprime);
    let (a, b, i, j, ap, bp, f) = (x.a(), x.b(), x.i(), x.j(), x.a_prime(), x.b_prime(), x.f());
    let t0 = vec![(c, c), (cp, cp)];
    let t1 = vec![(c, c), (c, c), (c, r), (r, c), (cp, cp), (cp, cp), (c, cp)];
    let mut t2 = vec![(c, c), (c, cp), (c, cp), (r, cp)];
    if with_c5 {
        t2.push((cp, cp));
    }
    let t3 = vec![(c, cp)];
    let d0 = matrix_of(&t0, &t1, |v| {
        let (h, hp) = (&v[0], &v[1]);
        vec![comm(h, a), comm(h, b), mm(h, i), neg(&mm(j, h)), comm(hp, ap), comm(hp, bp), &mm(h, f) - &mm(f, hp)]
    });
    let d1 = matrix_of(&t1, &t2, |v| {
        let (a1, b1, i1, j1, ap1, bp1, f1) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5], &v[6]);
        let mut out = vec![
            add(&[comm(a1, b), comm(a, b1), mm(i, j1), mm(i1, j)]),
            add(&[mm(a, f1), mm(a1, f), neg(&mm(f, ap1)), neg(&mm(f1, ap))]),
            add(&[mm(b, f1), mm(b1, f), neg(&mm(f, bp1)), neg(&mm(f1, bp))]),
            &mm(j1, f) + &mm(j, f1),
        ];
        if with_c5 {
            out.push(&comm(ap1, bp) + &comm(ap, bp1));
        }
        out
    });
    let d2 = matrix_of(&t2, &t3, |v| {
        let mut terms = vec![
            mm(&v[0], f),
            mm(b, &v[1]),
            neg(&mm(&v[1], bp)),
            neg(&mm(a, &v[2])),
            mm(&v[2], ap),
            neg(&mm(i, &v[3])),
        ];
        if with_c5 {
            terms.push(neg(&mm(f, &v[4])));
        }
        vec![add(&terms)]
    });
    vec![d0, d1, d2]
}

fn reduce(q: &eadhm_core::Rational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num: u64 = ((q.numer() % &pb + &pb) % &pb).try_into().unwrap();
    let den: u64 = ((q.denom() % &pb + &pb) % &pb).try_into().unwrap();
    assert!(den != 0, "denominator divisible by the oracle prime");
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank modulo `BIG_PRIME`; a lower bound for the rational rank that is
/// equal to it unless the prime divides a minor.
pub fn rank_mod_p(m: &RatMatrix) -> usize {
    let p = BIG_PRIME;
    let mut rows: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).iter().map(|q| reduce(q, p)).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(k) = (rank..rows.len()).find(|&k| rows[k][col] != 0) else { continue };
        rows.swap(rank, k);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        let pivot: Vec<u64> = rows[rank].iter().map(|x| x * inv % p).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// `h`-vector of `C(X)` from the oracle differentials.
pub fn oracle_cohomology(x: &EnhancedRep, with_c5: bool) -> Vec<usize> {
    let ds = cx_differentials(x, with_c5);
    let ranks: Vec<usize> = ds.iter().map(rank_mod_p).collect();
    let mut dims: Vec<usize> = ds.iter().map(RatMatrix::cols).collect();
    dims.push(ds[2].rows());
    (0..4).map(|k| dims[k] - ranks.get(k).copied().unwrap_or(0) - if k == 0 { 0 } else { ranks[k - 1] }).collect()
}
