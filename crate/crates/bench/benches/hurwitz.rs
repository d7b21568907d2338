use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qhurwitz_bench::all_pairs;
use qhurwitz_core::hurwitz::quantum_hurwitz;
use qhurwitz_core::symgroup::frobenius_hurwitz;
use qhurwitz_core::taufn::verify_generating_function;
use qhurwitz_core::weights::{default_order, partition_function_z};
use qhurwitz_core::{CharTable, CharacterStore, Partition};

fn char_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_table");
    for n in [6usize, 8, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| CharTable::compute(black_box(n))));
    }
    group.finish();
}

fn frobenius(c: &mut Criterion) {
    let table = CharTable::compute(8);
    let config: Vec<Partition> = ["3,3,2", "2,2,2,1,1", "4,2,1,1", "5,3"].iter().map(|s| s.parse().unwrap()).collect();
    c.bench_function("frobenius_n8_k4", |b| b.iter(|| frobenius_hurwitz(&table, black_box(&config)).unwrap()));
}

fn quantum(c: &mut Criterion) {
    let mut group = c.benchmark_group("quantum_hurwitz");
    group.sample_size(20);
    for (n, d) in [(4usize, 3usize), (6, 3), (6, 4)] {
        let table = CharTable::compute(n);
        let pairs = all_pairs(n);
        group.bench_with_input(BenchmarkId::new(format!("n{n}"), d), &d, |b, &d| {
            b.iter(|| {
                for (mu, nu) in &pairs {
                    quantum_hurwitz(&table, d, mu, nu, default_order(d)).unwrap();
                }
            })
        });
    }
    group.finish();
}

fn partition_function(c: &mut Criterion) {
    c.bench_function("partition_function_z_d8", |b| {
        b.iter(|| partition_function_z(black_box(8), default_order(8)).unwrap())
    });
}

fn tau_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau_check");
    group.sample_size(10);
    group.bench_function("n4_d4", |b| {
        b.iter(|| {
            let store = CharacterStore::in_memory();
            verify_generating_function(&store, 4, 4).unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, char_table, frobenius, quantum, partition_function, tau_check);
criterion_main!(benches);
