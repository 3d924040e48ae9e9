use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use fastgauss::{
    gauss_hermite, gauss_jacobi, gauss_laguerre, HermiteOptions, JacobiOptions, LaguerreOptions,
};
use rayon::ThreadPool;

fn pool(threads: usize) -> ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap()
}

fn families(c: &mut Criterion) {
    // a one-thread pool runs the same code path serially
    let pools = [("sequential", pool(1)), ("parallel", pool(0))];
    let sizes = [10_000usize, 100_000, 1_000_000];

    let mut group = c.benchmark_group("laguerre");
    for &n in &sizes {
        group.throughput(Throughput::Elements(n as u64));
        for (name, p) in &pools {
            group.bench_with_input(BenchmarkId::new(*name, n), &n, |b, &n| {
                b.iter(|| p.install(|| gauss_laguerre(black_box(n), 0.7, LaguerreOptions::default()).unwrap()))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("jacobi");
    for &n in &sizes {
        group.throughput(Throughput::Elements(n as u64));
        for (name, p) in &pools {
            group.bench_with_input(BenchmarkId::new(*name, n), &n, |b, &n| {
                b.iter(|| p.install(|| gauss_jacobi(black_box(n), 0.42, -0.45, JacobiOptions::default()).unwrap()))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("hermite");
    for &n in &sizes {
        group.throughput(Throughput::Elements(n as u64));
        for (name, p) in &pools {
            group.bench_with_input(BenchmarkId::new(*name, n), &n, |b, &n| {
                b.iter(|| p.install(|| gauss_hermite(black_box(n), HermiteOptions::default()).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = families
}
criterion_main!(benches);
