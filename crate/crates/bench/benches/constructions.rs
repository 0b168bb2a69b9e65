use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use exlab_bench::{caterpillar, path};
use exlab_core::partition::{partition_complement_forest, partition_complete, tree_partition};
use exlab_core::{degeneracy, ProjectivePlane};

fn planes(c: &mut Criterion) {
    let mut group = c.benchmark_group("plane");
    for q in [5usize, 13, 31] {
        group.bench_with_input(BenchmarkId::from_parameter(q), &q, |b, &q| {
            b.iter(|| ProjectivePlane::build(black_box(q)).unwrap())
        });
    }
    group.finish();
}

fn complete_partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_complete");
    group.sample_size(20);
    for (n, k) in [(100usize, 10usize), (400, 20), (400, 150)] {
        group.bench_function(format!("{n}/{k}"), |b| b.iter(|| partition_complete(black_box(n), black_box(k)).unwrap()));
    }
    group.finish();
}

fn forests(c: &mut Criterion) {
    let t = caterpillar(50, 3);
    c.bench_function("tree_partition/caterpillar200/k7", |b| b.iter(|| tree_partition(black_box(&t), 7).unwrap()));

    let mut group = c.benchmark_group("partition_complement_forest");
    group.sample_size(10);
    for n in [60usize, 200] {
        let p = path(n);
        group.bench_with_input(BenchmarkId::new("path", n), &p, |b, p| {
            b.iter(|| partition_complement_forest(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn peeling(c: &mut Criterion) {
    let g = caterpillar(2000, 4);
    c.bench_function("degeneracy/caterpillar10000", |b| b.iter(|| degeneracy(black_box(&g))));
}

criterion_group!(benches, planes, complete_partitions, forests, peeling);
criterion_main!(benches);
