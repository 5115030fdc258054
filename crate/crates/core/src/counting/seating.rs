use num_traits::{One, Zero};

use super::occupancy::{binomial, binomial_signed, lower_bound_solutions};
use super::types::GergonneQuery;
use crate::error::{Error, Result};
use crate::exact::{as_integer, factorial, sign, ExactInt, ExactRat};

/// Winning `k`-subsets and their probability among all `k`-subsets.
///
/// Linear case: `G = C(n - mk + m, k)`, cross-checked against the count of
/// solutions of `x_1 + ... + x_{k+1} = n - k` with interior gaps `>= m`.
/// Circular case (`m = 1`, even seat count): see [`circular_nonadjacent`].
/// The probability is 0 when `k > n`.
pub fn gergonne(q: &GergonneQuery) -> Result<(ExactInt, ExactRat)> {
    q.validate()?;
    let count = if q.circular {
        circular_nonadjacent(q.n, q.k)
    } else {
        linear_gergonne(q.n, q.k, q.m)?
    };
    let all = binomial(q.n, q.k);
    let prob = if all.is_zero() {
        ExactRat::zero()
    } else {
        ExactRat::new(count.clone(), all)
    };
    Ok((count, prob))
}

fn linear_gergonne(n: usize, k: usize, m: usize) -> Result<ExactInt> {
    let closed = binomial_signed(n as i64 - (m * k) as i64 + m as i64, k as i64);
    if k == 0 {
        return Ok(ExactInt::one());
    }
    if k > n {
        return Ok(ExactInt::zero());
    }
    let mut bounds = vec![m; k + 1];
    bounds[0] = 0;
    bounds[k] = 0;
    let by_bounds = lower_bound_solutions(k + 1, n - k, &bounds)?;
    if by_bounds != closed {
        return Err(Error::Inconsistency(format!(
            "Gergonne({n},{k},{m}): bounded solutions {by_bounds} != closed form {closed}"
        )));
    }
    Ok(closed)
}

/// `k`-subsets of the seats of a round table with `seats` places, no two
/// adjacent: `C(N-k-1, k-1) + C(N-k, k)`, checked against
/// `N/(N-k) C(N-k, k)` when `k < N`.
pub fn circular_nonadjacent(seats: usize, k: usize) -> ExactInt {
    if k == 0 {
        return ExactInt::one();
    }
    let n = seats as i64;
    let k_ = k as i64;
    let split = binomial_signed(n - k_ - 1, k_ - 1) + binomial_signed(n - k_, k_);
    if k < seats {
        let scaled = ExactRat::new(
            ExactInt::from(seats) * binomial(seats - k, k),
            ExactInt::from(seats - k),
        );
        debug_assert_eq!(as_integer(&scaled), Some(split.clone()));
    }
    split
}

/// Touchard number `U_n = sum_{k=0}^n (-1)^k (2n/(2n-k)) C(2n-k, k) (n-k)!`,
/// the reduced count of men's placements once the women are seated.
/// Terms with `k > n` vanish because `C(2n-k, k) = 0` there.
pub fn touchard(n: usize) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::invalid(format!("Touchard numbers need n >= 2, got {n}")));
    }
    let two_n = 2 * n;
    let mut sum = ExactRat::zero();
    for k in 0..=n {
        let term = ExactRat::new(
            ExactInt::from(two_n) * binomial(two_n - k, k) * factorial((n - k) as u64),
            ExactInt::from(two_n - k),
        );
        sum += term * ExactRat::from_integer(sign(k as u64));
    }
    as_integer(&sum).ok_or_else(|| Error::Inconsistency(format!("U_{n} = {sum} is not an integer")))
}

/// `2 n! U_n`: seatings of `n` couples, alternating, no partners adjacent.
pub fn menage_count(n: usize) -> Result<ExactInt> {
    Ok(ExactInt::from(2) * factorial(n as u64) * touchard(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn linear_cases() {
        let (c, p) = gergonne(&GergonneQuery::linear(5, 2, 1)).unwrap();
        assert_eq!(c, int(6));
        assert_eq!(p, rat(3, 5));
        assert_eq!(c, binomial(4, 2));
        for n in 1..10 {
            let (_, p) = gergonne(&GergonneQuery::linear(n, 1, 3)).unwrap();
            assert_eq!(p, rat(1, 1));
        }
        assert_eq!(gergonne(&GergonneQuery::linear(5, 3, 2)).unwrap().0, int(0));
        assert_eq!(gergonne(&GergonneQuery::linear(7, 3, 2)).unwrap().0, int(1));
        assert_eq!(gergonne(&GergonneQuery::linear(3, 5, 1)).unwrap(), (int(0), rat(0, 1)));
    }

    #[test]
    fn circular_cases() {
        assert_eq!(gergonne(&GergonneQuery::circular(4, 2)).unwrap().0, int(2));
        assert_eq!(gergonne(&GergonneQuery::circular(8, 3)).unwrap().0, int(16));
        assert_eq!(circular_nonadjacent(2, 2), int(0));
        assert_eq!(circular_nonadjacent(6, 3), int(2));
        let bad_m = GergonneQuery { n: 6, k: 2, m: 2, circular: true };
        assert!(gergonne(&bad_m).is_err());
        assert!(gergonne(&GergonneQuery::circular(7, 2)).is_err());
    }

    #[test]
    fn touchard_numbers() {
        assert_eq!(touchard(2).unwrap(), int(0));
        assert_eq!(touchard(3).unwrap(), int(1));
        assert_eq!(touchard(4).unwrap(), int(2));
        assert_eq!(touchard(5).unwrap(), int(13));
        assert_eq!(touchard(6).unwrap(), int(80));
        assert_eq!(menage_count(3).unwrap(), int(12));
        assert_eq!(menage_count(4).unwrap(), int(96));
        assert!(touchard(1).is_err());
    }
}
