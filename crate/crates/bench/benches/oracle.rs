use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dynnikov_core::oracle::{bfs_distances, find_simple_cycles, CayleySpec, DynnikovPlane, TorusPlane};
use dynnikov_core::TorusCoord;

fn bfs(c: &mut Criterion) {
    let mut group = c.benchmark_group("bfs");
    group.sample_size(10);
    for depth in [4u32, 6, 8] {
        group.bench_with_input(BenchmarkId::new("dynnikov", depth), &depth, |b, &d| {
            b.iter(|| bfs_distances(&CayleySpec::<DynnikovPlane>::from_terminals(d)).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("torus", depth), &depth, |b, &d| {
            b.iter(|| bfs_distances(&CayleySpec::<TorusPlane>::from_terminals(d)).unwrap().len())
        });
    }
    group.finish();
}

fn cycles(c: &mut Criterion) {
    let seed = TorusCoord::new(1, 1).unwrap();
    c.bench_function("cycles/torus(1,1)/6", |b| {
        b.iter(|| find_simple_cycles::<TorusPlane>(black_box(&seed), 6).unwrap())
    });
}

criterion_group!(benches, bfs, cycles);
criterion_main!(benches);
