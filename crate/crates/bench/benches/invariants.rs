use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use fusionkit_bench::{faithful_simple, ring, COMMUTATIVE, MODULAR};
use fusionkit_core::grading::object_index;
use fusionkit_core::modular::verlinde_ring;
use fusionkit_core::spectral::{character_table, fp_character};
use fusionkit_core::{builtin, Settings};

fn bench_fp(c: &mut Criterion) {
    let mut group = c.benchmark_group("fp_character");
    for &name in COMMUTATIVE {
        let r = ring(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &r, |b, r| {
            b.iter(|| fp_character(black_box(r)).unwrap())
        });
    }
    group.finish();
}

fn bench_characters(c: &mut Criterion) {
    let settings = Settings::default();
    let mut group = c.benchmark_group("character_table");
    group.sample_size(20);
    for &name in COMMUTATIVE {
        let r = ring(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &r, |b, r| {
            b.iter(|| character_table(black_box(r), &settings).unwrap())
        });
    }
    group.finish();
}

fn bench_index(c: &mut Criterion) {
    let mut group = c.benchmark_group("object_index");
    for &name in COMMUTATIVE {
        let r = ring(name);
        let i = faithful_simple(&r);
        group.bench_with_input(BenchmarkId::from_parameter(name), &r, |b, r| {
            b.iter(|| object_index(black_box(r), i).unwrap())
        });
    }
    group.finish();
}

fn bench_verlinde(c: &mut Criterion) {
    let mut group = c.benchmark_group("verlinde_ring");
    for &name in MODULAR {
        let s = builtin(name).unwrap().smatrix.unwrap().s().to_vec();
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| {
            b.iter(|| verlinde_ring(black_box(s)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_fp, bench_characters, bench_index, bench_verlinde);
criterion_main!(benches);
