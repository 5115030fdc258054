use num_traits::{One, Pow, Zero};

use super::occupancy::binomial;
use super::types::TypeVector;
use crate::exact::{factorial, int, rat, sign, ExactInt, ExactRat};

/// `C(n, 0..=n)`, permutations of an `n`-set with `k` cycles, by
/// `C(n,k) = C(n-1,k-1) + (n-1) C(n-1,k)`.
pub fn cycle_count_row(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::zero(); n + 1];
    row[0] = ExactInt::one();
    for i in 1..=n {
        for k in (1..=i).rev() {
            row[k] = &row[k - 1] + &row[k] * (i - 1);
        }
        row[0] = ExactInt::zero();
    }
    row
}

/// Unsigned Stirling number of the first kind.
pub fn cycle_count(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    cycle_count_row(n).swap_remove(k)
}

/// `s(n, k) = (-1)^{n-k} C(n, k)`.
pub fn stirling1_signed(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    sign((n - k) as u64) * cycle_count(n, k)
}

/// `C(n; v) = n! / (prod i^{v_i} prod v_i!)`: permutations of cycle type `v`.
pub fn cauchy_count(t: &TypeVector) -> ExactInt {
    let mut den = ExactInt::one();
    for (idx, &v) in t.mults().iter().enumerate() {
        den *= Pow::pow(int(idx + 1), v);
        den *= factorial(v as u64);
    }
    factorial(t.n() as u64) / den
}

/// `sum_v C(n; v)` over all types of weight `n`.
pub fn cauchy_total(n: usize) -> ExactInt {
    TypeVector::all(n).iter().map(cauchy_count).sum()
}

/// `d_0..=d_n` by `d_n = (n-1)(d_{n-1} + d_{n-2})`, `d_0 = 1`, `d_1 = 0`.
pub fn derangements_upto(n: usize) -> Vec<ExactInt> {
    let mut d = vec![ExactInt::one(), ExactInt::zero()];
    for m in 2..=n {
        let next = (&d[m - 1] + &d[m - 2]) * (m - 1);
        d.push(next);
    }
    d.truncate(n + 1);
    d
}

/// `d_n`: fixed-point-free permutations of an `n`-set.
pub fn derangement(n: usize) -> ExactInt {
    derangements_upto(n).swap_remove(n)
}

/// `d_{n,k} = C(n, k) d_{n-k}`: permutations with exactly `k` fixed points.
pub fn derangement_fixed(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let value = binomial(n, k) * derangement(n - k);
    debug_assert_eq!(value, derangement_fixed_closed(n, k));
    value
}

/// `d_{n,k} = n!/k! sum_{h=k}^n (-1)^{h-k} / (h-k)!`.
pub fn derangement_fixed_closed(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let sum: ExactRat = (k..=n)
        .map(|h| ExactRat::new(sign((h - k) as u64), factorial((h - k) as u64)))
        .sum();
    let value = sum * ExactRat::new(factorial(n as u64), factorial(k as u64));
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// Partial sum `sum_{j=0}^n (-1)^j / j!`, which equals `d_n / n!`.
pub fn exp_neg_one_partial(n: usize) -> ExactRat {
    (0..=n)
        .map(|j| ExactRat::new(sign(j as u64), factorial(j as u64)))
        .sum()
}

/// Checks `|d_n/n! - 1/e| < 1/(n+1)!` with `1/e` bracketed by the two
/// partial sums of order `n + 20` and `n + 21`.
pub fn derangement_ratio_within_bound(n: usize) -> bool {
    let ratio = ExactRat::new(derangement(n), factorial(n as u64));
    let lo = exp_neg_one_partial(n + 21);
    let hi = exp_neg_one_partial(n + 20);
    let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
    let bound = rat(1, 1) / ExactRat::from_integer(factorial(n as u64 + 1));
    let dist = |x: &ExactRat| {
        let d = &ratio - x;
        if d < ExactRat::zero() {
            -d
        } else {
            d
        }
    };
    dist(&lo) < bound && dist(&hi) < bound
}

/// Surjections from a `k`-set onto an `n`-set:
/// `sum_j (-1)^{n-j} C(n, j) j^k`.
pub fn surjection_count(k: usize, n: usize) -> ExactInt {
    if n > k {
        return ExactInt::zero();
    }
    (0..=n)
        .map(|j| sign((n - j) as u64) * binomial(n, j) * Pow::pow(int(j), k))
        .sum()
}

/// `n! S(k, n)`, an independent route to the surjection count.
pub fn surjection_count_stirling(k: usize, n: usize) -> ExactInt {
    factorial(n as u64) * super::partitions::stirling2(k, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        assert_eq!(cycle_count(4, 4), int(1));
        assert_eq!(cycle_count(4, 1), int(6));
        assert_eq!(cycle_count(4, 2), int(11));
        assert_eq!(cycle_count(3, 1), int(2));
        for n in 0..=10 {
            let total: ExactInt = cycle_count_row(n).into_iter().sum();
            assert_eq!(total, factorial(n as u64));
            assert_eq!(cauchy_total(n), factorial(n as u64));
        }
    }

    #[test]
    fn signed_first_kind() {
        assert_eq!(stirling1_signed(3, 2), int(-3));
        assert_eq!(stirling1_signed(6, 6), int(1));
        assert_eq!(stirling1_signed(4, 1), int(-6));
        assert_eq!(stirling1_signed(2, 3), int(0));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cauchy_count(&TypeVector::new(4, vec![0, 2]).unwrap()), int(3));
        assert_eq!(cauchy_count(&TypeVector::new(5, vec![5]).unwrap()), int(1));
        assert_eq!(cauchy_count(&TypeVector::new(3, vec![0, 0, 1]).unwrap()), int(2));
    }

    #[test]
    fn derangements() {
        assert_eq!(derangement(0), int(1));
        assert_eq!(derangement(1), int(0));
        assert_eq!(derangement(2), int(1));
        assert_eq!(derangement(3), int(2));
        let d: Vec<ExactInt> = [9, 44, 265, 1854, 14833].iter().map(|&x| int(x)).collect();
        assert_eq!(derangements_upto(8)[4..].to_vec(), d);
        assert_eq!(derangement_fixed(5, 5), int(1));
        assert_eq!(derangement_fixed(4, 1), int(8));
        assert_eq!(derangement_fixed(4, 2), int(6));
        assert_eq!(derangement_fixed(3, 4), int(0));
        for n in 0..=9 {
            let total: ExactInt = (0..=n).map(|k| derangement_fixed(n, k)).sum();
            assert_eq!(total, factorial(n as u64));
            for k in 0..=n {
                assert_eq!(derangement_fixed(n, k), derangement_fixed_closed(n, k));
            }
        }
        for n in 1..=18 {
            assert!(derangement_ratio_within_bound(n), "n = {n}");
        }
    }

    #[test]
    fn surjections() {
        assert_eq!(surjection_count(3, 2), int(6));
        assert_eq!(surjection_count(2, 3), int(0));
        assert_eq!(surjection_count(4, 2), int(14));
        assert_eq!(surjection_count(0, 0), int(1));
        for k in 0..8 {
            for n in 0..8 {
                assert_eq!(surjection_count(k, n), surjection_count_stirling(k, n));
            }
        }
    }
}
