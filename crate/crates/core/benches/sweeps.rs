//! Sequential against rayon-parallel sweeps over independent cases.

use std::hint::black_box;

use combinat::exact::int;
use combinat::number_theory::{euler_phi, mod_pow, phi_scan, rsa_keygen};
use combinat::par;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const PHI_RANGE: u64 = 20_000;
const SCAN_RANGE: u64 = 1_500;

fn phi_product_formula(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_product_formula");
    let items = || (1..=PHI_RANGE).collect::<Vec<_>>();
    group.bench_function(BenchmarkId::new("seq", PHI_RANGE), |b| {
        b.iter(|| par::map_seq(items(), |n| euler_phi(black_box(n)).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("par", PHI_RANGE), |b| {
        b.iter(|| par::map_par(items(), |n| euler_phi(black_box(n)).unwrap()))
    });
    group.finish();
}

fn phi_gcd_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_gcd_scan");
    group.sample_size(10);
    let items = || (1..=SCAN_RANGE).collect::<Vec<_>>();
    group.bench_function(BenchmarkId::new("seq", SCAN_RANGE), |b| {
        b.iter(|| par::map_seq(items(), |n| phi_scan(black_box(n))))
    });
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("par", SCAN_RANGE), |b| {
        b.iter(|| par::map_par(items(), |n| phi_scan(black_box(n))))
    });
    group.finish();
}

fn rsa_roundtrip(c: &mut Criterion) {
    let mut group = c.benchmark_group("rsa_roundtrip");
    let key = rsa_keygen(61, 53, 17).unwrap();
    let ed = &key.e * &key.d;
    let n = 61 * 53;
    let holds = |m: u64| mod_pow(&int(m), &ed, &key.n).unwrap() == int(m);
    group.bench_function(BenchmarkId::new("seq", n), |b| b.iter(|| assert!(par::all_seq(1..n, holds))));
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("par", n), |b| b.iter(|| assert!(par::all_par(1..n, holds))));
    group.finish();
}

criterion_group!(benches, phi_product_formula, phi_gcd_scan, rsa_roundtrip);
criterion_main!(benches);
