use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gamma_core::oracles::{expand_e_determinant, expand_e_recursive};
use gamma_core::ring::{expand_e, straighten_direct, straighten_product};
use gamma_core::{Composition, Guard, Modulus};

fn straightening(c: &mut Criterion) {
    let m = Modulus::new(3).unwrap();
    let mut group = c.benchmark_group("straighten");
    for (h, e) in [("5", "4,3,2"), ("2,1", "4,4,2"), ("", "5,4,2,1")] {
        let alpha: Composition = h.parse().unwrap();
        let beta: Composition = e.parse().unwrap();
        let label = format!("h[{h}] e[{e}]");
        group.bench_with_input(
            BenchmarkId::new("direct", &label),
            &(&alpha, &beta),
            |b, (a, e)| b.iter(|| straighten_direct(black_box(a), black_box(e), m)),
        );
        group.bench_with_input(
            BenchmarkId::new("product", &label),
            &(&alpha, &beta),
            |b, (a, e)| b.iter(|| straighten_product(black_box(a), black_box(e), m)),
        );
    }
    group.finish();
}

fn elementary(c: &mut Criterion) {
    let m = Modulus::new(3).unwrap();
    let guard = Guard::default();
    let mut group = c.benchmark_group("expand_e");
    for n in [8u32, 12] {
        group.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| {
            b.iter(|| expand_e(black_box(n), m))
        });
        group.bench_with_input(BenchmarkId::new("recursive", n), &n, |b, &n| {
            b.iter(|| expand_e_recursive(black_box(n), m))
        });
        group.bench_with_input(BenchmarkId::new("determinant", n), &n, |b, &n| {
            b.iter(|| expand_e_determinant(black_box(n), m, &guard).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, straightening, elementary);
criterion_main!(benches);
