//! Factorization, Euler's totient, the classical Möbius function, modular
//! arithmetic and a toy RSA cycle.
//!
//! Primality is certified by trial division, so inputs are bounded by
//! [`FACTOR_LIMIT`]. The RSA routines are for teaching only: no padding,
//! no large primes, no constant-time arithmetic.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, ExactInt};

pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// `n = p_1^{i_1} ... p_r^{i_r}` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> ExactInt {
        self.factors
            .iter()
            .fold(ExactInt::one(), |acc, &(p, e)| acc * num_traits::pow(int(p), e as usize))
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for Factorization {
    /// `2^2*3`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn check_bound(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("expected a positive integer"));
    }
    if n > FACTOR_LIMIT {
        return Err(Error::guard("trial division", n, FACTOR_LIMIT));
    }
    Ok(())
}

pub fn factorize(n: u64) -> Result<Factorization> {
    check_bound(n)?;
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { factors })
}

pub fn is_prime(n: u64) -> Result<bool> {
    check_bound(n)?;
    Ok(n > 1 && factorize(n)?.factors == [(n, 1)])
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in f.factors() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &d in &out {
            let mut q = d;
            for _ in 0..=e {
                next.push(q);
                q *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    Ok(out)
}

/// `Phi(n) = n * prod (1 - 1/p)`.
pub fn euler_phi(n: u64) -> Result<ExactInt> {
    let f = factorize(n)?;
    let mut phi = int(n);
    for p in f.primes() {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Direct count of `1 <= m <= n` with `gcd(m, n) = 1`.
pub fn phi_scan(n: u64) -> u64 {
    (1..=n).filter(|m| m.gcd(&n) == 1).count() as u64
}

/// `+1` for an even number of distinct primes, `-1` for odd, `0` when a
/// square divides `n`.
pub fn mobius_classical(n: u64) -> Result<ExactInt> {
    let f = factorize(n)?;
    if !f.is_square_free() {
        return Ok(ExactInt::zero());
    }
    Ok(if f.factors.len() % 2 == 0 {
        ExactInt::one()
    } else {
        -ExactInt::one()
    })
}

/// The unique `0 < y < n` with `x y = 1 (mod n)`, by the extended
/// Euclidean algorithm. `x` is reduced modulo `n` first.
pub fn mod_inverse(x: &ExactInt, n: &ExactInt) -> Result<ExactInt> {
    if !n.is_positive() {
        return Err(Error::invalid("modulus must be positive"));
    }
    let x_red = x.mod_floor(n);
    let e = x_red.extended_gcd(n);
    if !e.gcd.is_one() {
        return Err(Error::NotCoprime {
            a: x.to_string(),
            b: n.to_string(),
        });
    }
    Ok(e.x.mod_floor(n))
}

/// `base^exp mod n` in `0..n` by square-and-multiply.
pub fn mod_pow(base: &ExactInt, exp: &ExactInt, n: &ExactInt) -> Result<ExactInt> {
    if !n.is_positive() {
        return Err(Error::invalid("modulus must be positive"));
    }
    if exp.is_negative() {
        return Err(Error::invalid("exponent must be nonnegative"));
    }
    let mut result = ExactInt::one().mod_floor(n);
    let mut b = base.mod_floor(n);
    let mut e = exp.clone();
    let two = int(2);
    while e.is_positive() {
        if e.is_odd() {
            result = (result * &b).mod_floor(n);
        }
        b = (&b * &b).mod_floor(n);
        e /= &two;
    }
    Ok(result)
}

/// If `m = n (mod p - 1)` then `a^m = a^n (mod p)` for `a` not divisible by
/// `p`. Returns whether the instance holds; a vacuous hypothesis holds.
pub fn fermat_exponent_check(a: &ExactInt, m: u64, n: u64, p: u64) -> Result<bool> {
    if !is_prime(p)? {
        return Err(Error::NotPrime(p.to_string()));
    }
    let pp = int(p);
    if (m % (p - 1)) != (n % (p - 1)) || a.mod_floor(&pp).is_zero() {
        return Ok(true);
    }
    Ok(mod_pow(a, &int(m), &pp)? == mod_pow(a, &int(n), &pp)?)
}

/// Toy RSA key material. `n = p q`, `phi = (p-1)(q-1)`, `e d = 1 (mod phi)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RsaKeyPair {
    #[serde(serialize_with = "decimal")]
    pub p: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub q: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub n: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub phi: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub e: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub d: ExactInt,
}

fn decimal<S: serde::Serializer>(v: &ExactInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn rsa_keygen(p: u64, q: u64, e: u64) -> Result<RsaKeyPair> {
    for x in [p, q] {
        if !is_prime(x)? {
            return Err(Error::NotPrime(x.to_string()));
        }
    }
    if p == q {
        return Err(Error::invalid("p and q must be distinct primes"));
    }
    let phi = int(p - 1) * int(q - 1);
    let e = int(e);
    if e <= ExactInt::one() || e >= phi {
        return Err(Error::invalid(format!("need 1 < e < phi = {phi}")));
    }
    let d = mod_inverse(&e, &phi)?;
    Ok(RsaKeyPair {
        p: int(p),
        q: int(q),
        n: int(p) * int(q),
        phi,
        e,
        d,
    })
}

fn check_message(m: &ExactInt, n: &ExactInt) -> Result<()> {
    if m <= &ExactInt::one() || m >= n {
        return Err(Error::invalid(format!("message must satisfy 1 < m < n = {n}")));
    }
    Ok(())
}

/// `c = m^e mod n` for `1 < m < n`. Also serves the raw `(n, e)` demo,
/// where `n` need not be a product of distinct primes.
pub fn rsa_encrypt(n: &ExactInt, e: &ExactInt, m: &ExactInt) -> Result<ExactInt> {
    check_message(m, n)?;
    mod_pow(m, e, n)
}

/// `m = c^d mod n` for `1 < c < n`.
pub fn rsa_decrypt(n: &ExactInt, d: &ExactInt, c: &ExactInt) -> Result<ExactInt> {
    check_message(c, n)?;
    mod_pow(c, d, n)
}

/// Whether `m^{ed} = m (mod n)` holds for every `0 < m < n`.
pub fn rsa_roundtrip_exhaustive(key: &RsaKeyPair) -> bool {
    let n = crate::exact::to_u64(&key.n).unwrap_or(0);
    let ed = &key.e * &key.d;
    crate::par::all(1..n, |m| {
        let m = int(m);
        mod_pow(&m, &ed, &key.n).map_or(false, |c| c == m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorizations() {
        assert_eq!(factorize(210).unwrap().factors(), &[(2, 1), (3, 1), (5, 1), (7, 1)]);
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(125).unwrap().factors(), &[(5, 3)]);
        assert_eq!(factorize(12).unwrap().to_string(), "2^2*3");
        assert_eq!(factorize(999_999_999_989).unwrap().factors().len(), 1);
        assert!(factorize(0).is_err());
        assert!(factorize(FACTOR_LIMIT + 1).is_err());
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
    }

    #[test]
    fn totients() {
        for (n, phi) in [(30, 8), (1, 1), (12, 4), (210, 48), (100, 40), (125, 100)] {
            assert_eq!(euler_phi(n).unwrap(), int(phi), "phi({n})");
        }
        for n in 1..=2000 {
            assert_eq!(euler_phi(n).unwrap(), int(phi_scan(n)));
        }
    }

    #[test]
    fn classical_mobius() {
        assert_eq!(mobius_classical(6).unwrap(), int(1));
        assert_eq!(mobius_classical(4).unwrap(), int(0));
        assert_eq!(mobius_classical(1).unwrap(), int(1));
        assert_eq!(mobius_classical(30).unwrap(), int(-1));
    }

    #[test]
    fn inverses_and_powers() {
        assert_eq!(mod_inverse(&int(3), &int(20)).unwrap(), int(7));
        assert_eq!(mod_inverse(&int(1), &int(9)).unwrap(), int(1));
        assert_eq!(mod_inverse(&int(5), &int(12)).unwrap(), int(5));
        assert_eq!(mod_inverse(&int(-13), &int(20)).unwrap(), int(3));
        assert!(matches!(mod_inverse(&int(4), &int(12)), Err(Error::NotCoprime { .. })));
        assert_eq!(mod_pow(&int(19), &int(7), &int(25)).unwrap(), int(14));
        assert_eq!(mod_pow(&int(7), &int(0), &int(5)).unwrap(), int(1));
        assert_eq!(mod_pow(&int(7), &int(0), &int(1)).unwrap(), int(0));
        assert_eq!(mod_pow(&int(2), &int(10), &int(1000)).unwrap(), int(24));
        assert_eq!(mod_pow(&int(-7), &int(1), &int(20)).unwrap(), int(13));
    }

    #[test]
    fn fermat() {
        assert!(fermat_exponent_check(&int(2), 2, 4, 3).unwrap());
        assert!(fermat_exponent_check(&int(5), 9, 9, 7).unwrap());
        assert!(fermat_exponent_check(&int(12), 3, 19, 17).unwrap());
        assert!(matches!(fermat_exponent_check(&int(2), 1, 2, 9), Err(Error::NotPrime(_))));
    }

    #[test]
    fn rsa() {
        let c = rsa_encrypt(&int(25), &int(3), &int(14)).unwrap();
        assert_eq!(c, int(19));
        assert_eq!(rsa_decrypt(&int(25), &int(7), &c).unwrap(), int(14));

        let key = rsa_keygen(5, 11, 3).unwrap();
        assert_eq!(key.d, int(27));
        assert_eq!((&key.e * &key.d).mod_floor(&key.phi), int(1));
        let c = rsa_encrypt(&key.n, &key.e, &int(2)).unwrap();
        assert_eq!(c, int(8));
        assert_eq!(rsa_decrypt(&key.n, &key.d, &c).unwrap(), int(2));
        assert!(rsa_roundtrip_exhaustive(&key));

        assert!(rsa_keygen(5, 5, 3).is_err());
        assert!(rsa_keygen(4, 7, 5).is_err());
        assert!(rsa_keygen(5, 11, 5).is_err());
        assert!(rsa_encrypt(&key.n, &key.e, &int(1)).is_err());
        assert!(rsa_encrypt(&key.n, &key.e, &key.n).is_err());

        let json = serde_json::to_value(&key).unwrap();
        assert_eq!(json["d"], "27");
    }

    #[test]
    fn rsa_random_roundtrip() {
        use rand::{Rng, SeedableRng};
        let key = rsa_keygen(61, 53, 17).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let m = int(rng.gen_range(2..3233u64));
            let c = rsa_encrypt(&key.n, &key.e, &m).unwrap();
            assert_eq!(rsa_decrypt(&key.n, &key.d, &c).unwrap(), m);
        }
    }

    proptest! {
        #[test]
        fn mod_pow_matches_bigint(b in -1000i64..1000, e in 0u32..200, n in 1i64..5000) {
            let expected = int(b).modpow(&int(e), &int(n)).mod_floor(&int(n));
            prop_assert_eq!(mod_pow(&int(b), &int(e), &int(n)).unwrap(), expected);
        }

        #[test]
        fn factorization_multiplies_back(n in 1u64..1_000_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.value(), int(n));
            prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        }

        #[test]
        fn fermat_random(a in 1i64..500, m in 0u64..200, k in 0u64..5, pi in 0usize..8) {
            let p = [2u64, 3, 5, 7, 11, 13, 17, 19][pi];
            prop_assert!(fermat_exponent_check(&int(a), m, m + k * (p - 1), p).unwrap());
        }
    }
}
