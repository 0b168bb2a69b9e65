use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use exlab_bench::{grid, path};
use exlab_core::hilbert::{count_small_sigma_sets, find_hilbert_cube, random_subset, SearchBudget};
use exlab_core::online::{run_game, FixedPainter, Spacing};
use exlab_core::ramsey::{graph_as_hypergraph, ramsey_number, RamseyQuery};
use exlab_core::star_forest::large_star_forest;
use exlab_core::Graph;

fn hilbert(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_hilbert_cube");
    group.sample_size(10);
    let a = random_subset(1 << 10, 0.3, 0, 0);
    for d in [3usize, 4] {
        group.bench_with_input(BenchmarkId::new("n1024", d), &d, |b, &d| {
            b.iter(|| find_hilbert_cube(black_box(&a), d, SearchBudget::unlimited()).unwrap())
        });
    }
    group.finish();
    c.bench_function("count_small_sigma_sets/16/4", |b| {
        b.iter(|| count_small_sigma_sets(black_box(16), 4, 12).unwrap())
    });
}

fn ramsey(c: &mut Criterion) {
    let mut k3 = Graph::new(3);
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        k3.add_edge(u, v).unwrap();
    }
    let query = RamseyQuery::new(graph_as_hypergraph(&k3), 2, 7).unwrap();
    let mut group = c.benchmark_group("ramsey_number");
    group.sample_size(10);
    group.bench_function("K3", |b| b.iter(|| ramsey_number(black_box(&query)).unwrap()));
    group.finish();
}

fn star_forest(c: &mut Criterion) {
    let g = grid(40, 40);
    c.bench_function("large_star_forest/grid40", |b| b.iter(|| large_star_forest(black_box(&g), 4).unwrap()));
}

fn online(c: &mut Criterion) {
    let t = path(5);
    c.bench_function("run_game/path5/fixed", |b| {
        b.iter(|| run_game(black_box(&t), 2, &mut FixedPainter(0), usize::MAX, Spacing::Compact).unwrap())
    });
}

criterion_group!(benches, hilbert, ramsey, star_forest, online);
criterion_main!(benches);
