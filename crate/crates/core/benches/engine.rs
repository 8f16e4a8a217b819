//! Sequential vs data-parallel timings for the hot paths. Both modes run in
//! one binary through `par::sequential`; build with
//! `--no-default-features` to time the rayon-free build.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superharrison::algebra::{exterior_algebra, self_module, tensor_product, truncated_polynomial};
use superharrison::cochain::{harrison_subspace, hochschild_coboundary_matrix};
use superharrison::cohomology::cohomology;
use superharrison::exactla::{random_rational, Rational, RationalMatrix};
use superharrison::{par, ComplexKind, Limits, SuperAlgebra};

fn modes() -> [(&'static str, bool); 2] {
    [("sequential", true), ("parallel", false)]
}

fn run<R>(sequential: bool, f: impl FnOnce() -> R) -> R {
    if sequential {
        par::sequential(f)
    } else {
        f()
    }
}

fn mixed() -> SuperAlgebra {
    tensor_product(&truncated_polynomial(2).unwrap(), &exterior_algebra(1).unwrap()).unwrap()
}

fn coboundary_matrix(c: &mut Criterion) {
    let a = mixed();
    let m = self_module(&a);
    let mut group = c.benchmark_group("hochschild_coboundary_matrix");
    for (label, seq) in modes() {
        group.bench_function(BenchmarkId::new(label, "n=2, dim 4"), |b| {
            b.iter(|| run(seq, || hochschild_coboundary_matrix(black_box(&a), &m, 2).unwrap()))
        });
    }
    group.finish();
}

fn harrison(c: &mut Criterion) {
    let a = exterior_algebra(2).unwrap();
    let m = self_module(&a);
    let mut group = c.benchmark_group("harrison_subspace");
    for (label, seq) in modes() {
        group.bench_function(BenchmarkId::new(label, "Λ(θ1,θ2), n=4"), |b| {
            b.iter(|| run(seq, || harrison_subspace(black_box(&a), &m, 4).unwrap()))
        });
    }
    group.finish();
}

/// Elimination on the shapes the engine produces: a coboundary matrix with
/// small integer entries, and a sparse random matrix with small fractions.
/// Dense random rational matrices are not representative; their entries
/// grow to hundreds of digits.
fn rref(c: &mut Criterion) {
    let a = mixed();
    let m = self_module(&a);
    let coboundary = hochschild_coboundary_matrix(&a, &m, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 80;
    let data = (0..n * n)
        .map(|i| if i % 5 == 0 { random_rational(&mut rng) } else { Rational::zero() })
        .collect();
    let sparse = RationalMatrix::from_vec(n, n, data).unwrap();
    let mut group = c.benchmark_group("rref");
    group.sample_size(10);
    for (label, seq) in modes() {
        group.bench_function(BenchmarkId::new(label, "∂ degree 3, 1024x256"), |b| {
            b.iter(|| run(seq, || black_box(&coboundary).rref()))
        });
        group.bench_function(BenchmarkId::new(label, "sparse 80x80"), |b| {
            b.iter(|| run(seq, || black_box(&sparse).rref()))
        });
    }
    group.finish();
}

fn second_cohomology(c: &mut Criterion) {
    let a = mixed();
    let m = self_module(&a);
    let limits = Limits::default();
    let mut group = c.benchmark_group("cohomology");
    group.sample_size(10);
    for (label, seq) in modes() {
        group.bench_function(BenchmarkId::new(label, "H^2 harrison, dim 4"), |b| {
            b.iter(|| run(seq, || cohomology(black_box(&a), &m, 2, ComplexKind::SuperHarrison, &limits).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, coboundary_matrix, harrison, rref, second_cohomology);
criterion_main!(benches);
