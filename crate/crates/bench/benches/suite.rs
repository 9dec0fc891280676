use std::hint::black_box;

use basechain::experiments::{ensemble_entropy, neighbor_grid};
use basechain::gaussian::{entanglement_report, thermal_moments};
use basechain::model::build_coupling_matrix;
use basechain::spectrum::{chain_modes, numeric_modes};
use basechain::Direction;
use basechain_bench::ring;
use criterion::{criterion_group, criterion_main, Criterion};

fn matrix_assembly(c: &mut Criterion) {
    let spec = ring(200);
    c.bench_function("coupling_matrix_200", |b| {
        b.iter(|| build_coupling_matrix(black_box(&spec)).unwrap())
    });
}

fn eigensolve(c: &mut Criterion) {
    for n in [32, 128] {
        let v = build_coupling_matrix(&ring(n)).unwrap();
        c.bench_function(&format!("numeric_modes_{n}"), |b| {
            b.iter(|| numeric_modes(black_box(&v)).unwrap())
        });
    }
}

fn moments(c: &mut Criterion) {
    let spectrum = chain_modes(&ring(64)).unwrap();
    c.bench_function("thermal_moments_64", |b| {
        b.iter(|| thermal_moments(black_box(&spectrum), 300.0).unwrap())
    });
}

fn full_report(c: &mut Criterion) {
    let spec = ring(64);
    c.bench_function("entanglement_report_64", |b| {
        b.iter(|| entanglement_report(black_box(&spec)).unwrap())
    });
}

fn ensemble_record(c: &mut Criterion) {
    c.bench_function("ensemble_record_50", |b| {
        b.iter(|| {
            ensemble_entropy(1, 50, 4.5e-10, 1.0, Direction::X, 300.0, black_box(42)).unwrap()
        })
    });
}

fn grid(c: &mut Criterion) {
    c.bench_function("neighbor_grid", |b| b.iter(|| neighbor_grid().unwrap()));
}

criterion_group!(
    benches,
    matrix_assembly,
    eigensolve,
    moments,
    full_report,
    ensemble_record,
    grid
);
criterion_main!(benches);
