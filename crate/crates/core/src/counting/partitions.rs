use num_traits::{One, Zero};

use super::occupancy::binomial;
use super::types::TypeVector;
use crate::exact::{factorial, ExactInt};

/// `S(n, 0..=n)` by `S(n,k) = S(n-1,k-1) + k S(n-1,k)`, `S(0,k) = [k = 0]`.
pub fn stirling2_row(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::zero(); n + 1];
    row[0] = ExactInt::one();
    for i in 1..=n {
        for k in (1..=i).rev() {
            row[k] = &row[k - 1] + &row[k] * k;
        }
        row[0] = ExactInt::zero();
    }
    row
}

/// `S(n, k)`: partitions of an `n`-set into `k` blocks.
pub fn stirling2(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    stirling2_row(n).swap_remove(k)
}

/// `B_n` by the Aitken recursion `B_{n+1} = sum_k C(n,k) B_k`.
pub fn bell(n: usize) -> ExactInt {
    let mut b: Vec<ExactInt> = vec![ExactInt::one()];
    for m in 0..n {
        let next = (0..=m).map(|k| binomial(m, k) * &b[k]).sum();
        b.push(next);
    }
    let value = b.swap_remove(n);
    debug_assert!(n > 40 || value == bell_by_stirling(n));
    value
}

/// `B_n = sum_k S(n, k)`.
pub fn bell_by_stirling(n: usize) -> ExactInt {
    stirling2_row(n).into_iter().sum()
}

/// `P(n; v) = n! / (prod (i!)^{v_i} prod v_i!)`: set partitions of type `v`.
pub fn faa_di_bruno(t: &TypeVector) -> ExactInt {
    let mut den = ExactInt::one();
    for (idx, &v) in t.mults().iter().enumerate() {
        let fi = factorial(idx as u64 + 1);
        for _ in 0..v {
            den *= &fi;
        }
        den *= factorial(v as u64);
    }
    factorial(t.n() as u64) / den
}

/// `sum_v P(n; v)` over all types of weight `n`.
pub fn faa_di_bruno_total(n: usize) -> ExactInt {
    TypeVector::all(n).iter().map(faa_di_bruno).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn stirling_second_kind() {
        assert_eq!(stirling2(4, 2), int(7));
        for n in 0..10 {
            assert_eq!(stirling2(n, n), int(1));
        }
        assert_eq!(stirling2(5, 3), int(25));
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(3, 0), int(0));
        assert_eq!(stirling2(3, 4), int(0));
        let row: Vec<ExactInt> = [0, 1, 7, 6, 1].iter().map(|&x| int(x)).collect();
        assert_eq!(stirling2_row(4), row);
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(bell(0), int(1));
        assert_eq!(bell(4), int(15));
        assert_eq!(bell(7), int(877));
        assert_eq!(bell(9), int(21147));
        for n in 0..=10 {
            assert_eq!(bell(n), bell_by_stirling(n));
            assert_eq!(bell(n), faa_di_bruno_total(n));
        }
    }

    #[test]
    fn typed_partitions() {
        assert_eq!(faa_di_bruno(&TypeVector::new(4, vec![0, 2]).unwrap()), int(3));
        assert_eq!(faa_di_bruno(&TypeVector::new(5, vec![5]).unwrap()), int(1));
        assert_eq!(faa_di_bruno(&TypeVector::new(6, vec![1, 1, 1]).unwrap()), int(60));
        assert_eq!(faa_di_bruno(&TypeVector::from_mults(vec![])), int(1));
    }
}
