//! Literal gcd scan of the totient over the full sweep range. Quadratic in
//! the range, so it is ignored by default; run with
//! `cargo test --release -p combinat --test totient_scan -- --ignored`.

use combinat::exact::int;
use combinat::number_theory::euler_phi;

const SWEEP_MAX: u64 = 100_000;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn coprime_count(n: u64) -> u64 {
    (1..=n).filter(|&m| gcd(m, n) == 1).count() as u64
}

#[test]
fn scan_prefix() {
    for n in 1..=2_000 {
        assert_eq!(euler_phi(n).unwrap(), int(coprime_count(n)), "n = {n}");
    }
}

#[test]
#[ignore = "quadratic: about 5e9 gcd evaluations"]
fn scan_full_range() {
    let bad: Vec<u64> = combinat::par::map((1..=SWEEP_MAX).collect(), |n| {
        (euler_phi(n).unwrap() != int(coprime_count(n))).then_some(n)
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(bad.is_empty(), "product formula differs from the gcd scan at {bad:?}");
}
