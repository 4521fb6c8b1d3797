use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use weylcheb_bench::{generic_weight, points};
use weylcheb_core::chebyshev::{poly_t, PolynomialBuilder};
use weylcheb_core::exp_ring::{character, exp_sum, multiply};
use weylcheb_core::lie::omega_to_e;
use weylcheb_core::orbit_functions::matrix::{permanent_naive, permanent_ryser};
use weylcheb_core::orbit_functions::{exponential_matrix, OrbitFunction};
use weylcheb_core::{weyl, OrbitKind, Weight};

fn orbit_generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("orbit");
    for n in [2, 4, 6] {
        let l = generic_weight(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &l, |b, l| b.iter(|| weyl::orbit(black_box(l))));
    }
    group.finish();
}

fn evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_C");
    for n in [2, 4, 6] {
        let f = OrbitFunction::new(OrbitKind::C, &generic_weight(n)).unwrap();
        let xs = points(n, 64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &xs, |b, xs| {
            b.iter(|| xs.iter().map(|x| f.eval(x).unwrap().re).sum::<f64>())
        });
    }
    group.finish();
}

fn permanents(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanent");
    for n in [3, 5, 7] {
        let l = generic_weight(n);
        let x = points(n, 1).remove(0).to_e();
        let m = exponential_matrix(&omega_to_e(&l), &x).unwrap();
        group.bench_with_input(BenchmarkId::new("ryser", n + 1), &m, |b, m| b.iter(|| permanent_ryser(black_box(m))));
        group.bench_with_input(BenchmarkId::new("naive", n + 1), &m, |b, m| b.iter(|| permanent_naive(black_box(m))));
    }
    group.finish();
}

fn polynomials(c: &mut Criterion) {
    let a2 = Weight::from_coords(vec![4, 3]).unwrap();
    let a3 = Weight::from_coords(vec![2, 1, 2]).unwrap();
    c.bench_function("poly_T A2 (4,3)", |b| b.iter(|| poly_t(black_box(&a2)).unwrap()));
    c.bench_function("poly_T A3 (2,1,2)", |b| b.iter(|| poly_t(black_box(&a3)).unwrap()));
    c.bench_function("poly_T A3 box 2 memoized", |b| {
        b.iter(|| {
            let mut builder = PolynomialBuilder::new(a3.rank());
            for l in weylcheb_core::analysis::dominant_box(a3.rank(), 2) {
                builder.poly_t(&l).unwrap();
            }
        })
    });
}

fn ring(c: &mut Criterion) {
    let a = Weight::from_coords(vec![2, 1, 3]).unwrap();
    let b = Weight::from_coords(vec![1, 2, 1]).unwrap();
    let (ca, cb) = (exp_sum(&a, OrbitKind::C).unwrap(), exp_sum(&b, OrbitKind::C).unwrap());
    c.bench_function("multiply A3", |bch| bch.iter(|| multiply(black_box(&ca), black_box(&cb)).unwrap()));
    c.bench_function("character A3 (2,1,2)", |bch| {
        bch.iter(|| character(black_box(&Weight::from_coords(vec![2, 1, 2]).unwrap())).unwrap())
    });
}

criterion_group!(benches, orbit_generation, evaluation, permanents, polynomials, ring);
criterion_main!(benches);
