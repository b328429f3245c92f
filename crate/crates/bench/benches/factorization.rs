use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use whfact_bench::{golden, mixed3, mixed3_poly, xi};
use whfact_core::{fredholm_of, regional_smith, smith_decompose, split_by_circle, verify_wh, wh_factorize, Polynomial, Region};

fn factorize(c: &mut Criterion) {
    let mut g = c.benchmark_group("wh_factorize");
    for (name, omega) in [("golden", golden()), ("xi", xi()), ("mixed3", mixed3())] {
        g.bench_function(name, |b| b.iter(|| wh_factorize(black_box(&omega)).unwrap()));
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let omega = mixed3();
    let (fact, _) = wh_factorize(&omega).unwrap();
    c.bench_function("verify_wh/mixed3", |b| b.iter(|| verify_wh(black_box(&omega), black_box(&fact))));
    c.bench_function("fredholm_of/xi", |b| b.iter(|| fredholm_of(black_box(&xi())).unwrap()));
}

fn smith(c: &mut Criterion) {
    let p = mixed3_poly();
    c.bench_function("smith/mixed3", |b| b.iter(|| smith_decompose(black_box(&p)).unwrap()));
    c.bench_function("smith_circle/mixed3", |b| b.iter(|| regional_smith(black_box(&p), Region::OnCircle).unwrap()));
}

fn locus(c: &mut Criterion) {
    // (z − 1)²(z − 1/2)(z − 2)(z² + 1)
    let q = &(&Polynomial::from_ints(&[1, -2, 1]) * &Polynomial::from_ints(&[2, -5, 2])) * &Polynomial::from_ints(&[1, 0, 1]);
    c.bench_function("split_by_circle/deg6", |b| b.iter(|| split_by_circle(black_box(&q)).unwrap()));
}

criterion_group!(benches, factorize, verify, smith, locus);
criterion_main!(benches);
