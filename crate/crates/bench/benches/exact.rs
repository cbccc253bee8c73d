use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eadhm_core::constructions::{random_matrix, rng_from_seed, sample_stable, vandermonde_rep, VandermondeParams};
use eadhm_core::deformation::{build_cx, check_les_consistency, cohomology};
use eadhm_core::exactmat::Subspace;
use eadhm_core::stability::{is_delta_stable, krylov_closure};
use eadhm_core::DimVector;

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    let mut rng = rng_from_seed(1);
    for n in [8, 16, 32] {
        let m = random_matrix(&mut rng, n, n, 5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m).rank()));
    }
    group.finish();
}

fn krylov(c: &mut Criterion) {
    let mut group = c.benchmark_group("krylov_closure");
    let mut rng = rng_from_seed(2);
    for n in [4, 8, 16] {
        let a = random_matrix(&mut rng, n, n, 3);
        let b = random_matrix(&mut rng, n, n, 3);
        let seed = Subspace::span_columns(&random_matrix(&mut rng, n, 1, 3));
        group.bench_function(BenchmarkId::from_parameter(n), |bench| {
            bench.iter(|| krylov_closure(black_box(&a), black_box(&b), black_box(&seed)))
        });
    }
    group.finish();
}

fn deformation(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology");
    group.sample_size(20);
    for (r, cc) in [(1, 3), (2, 4), (3, 6)] {
        let x = vandermonde_rep(&VandermondeParams::standard(r, cc).unwrap()).unwrap();
        group.bench_function(format!("vandermonde_{r}_{cc}"), |b| {
            b.iter(|| cohomology(&build_cx(black_box(&x)).unwrap()))
        });
    }
    let d = DimVector::new(2, 4, 2).unwrap();
    let x = sample_stable(d, 0, 0).remove(0);
    group.bench_function("stability_2_4_2", |b| b.iter(|| is_delta_stable(black_box(&x))));
    group.bench_function("les_deep_2_4_2", |b| b.iter(|| check_les_consistency(black_box(&x), true).unwrap()));
    group.finish();
}

criterion_group!(benches, rank, krylov, deformation);
criterion_main!(benches);
