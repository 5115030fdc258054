use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, int, sign, ExactInt, ExactRat};

/// `(n)_k = n (n-1) ... (n-k+1)`: injections from a `k`-set into an `n`-set.
pub fn falling_factorial(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    ((n - k + 1)..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// `<n>_k = n (n+1) ... (n+k-1)`.
pub fn rising_factorial(n: usize, k: usize) -> ExactInt {
    (0..k).fold(ExactInt::one(), |acc, i| acc * (n + i))
}

/// Rising factorial by the flagpole recursion `L_k = (n + k - 1) L_{k-1}`.
pub fn rising_factorial_recursive(n: usize, k: usize) -> ExactInt {
    let mut l = ExactInt::one();
    for j in 1..=k {
        l *= n + j - 1;
    }
    l
}

/// `C(n, k)` as `(n)_k / k!`.
pub fn binomial(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let value = falling_factorial(n, k) / factorial(k as u64);
    debug_assert!(n > 48 || value == binomial_pascal(n, k));
    value
}

/// `C(n, k)` by Pascal's recursion from the row `n = 0`.
pub fn binomial_pascal(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let mut row = vec![ExactInt::zero(); k + 1];
    row[0] = ExactInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let prev = row[j - 1].clone();
            row[j] += prev;
        }
    }
    row[k].clone()
}

/// Binomial with a possibly negative top; zero unless `0 <= k <= top`.
pub(crate) fn binomial_signed(top: i64, k: i64) -> ExactInt {
    if top < 0 || k < 0 || k > top {
        ExactInt::zero()
    } else {
        binomial(top as usize, k as usize)
    }
}

/// `<n, k>`: `k`-multisets on an `n`-set, as `<n>_k / k!`.
pub fn multiset_coeff(n: usize, k: usize) -> ExactInt {
    let value = rising_factorial(n, k) / factorial(k as u64);
    debug_assert_eq!(value, multiset_coeff_binomial(n, k));
    value
}

/// `<n, k> = C(n + k - 1, k)`, with `<0, k> = [k = 0]`.
pub fn multiset_coeff_binomial(n: usize, k: usize) -> ExactInt {
    if n == 0 {
        return if k == 0 { ExactInt::one() } else { ExactInt::zero() };
    }
    binomial(n + k - 1, k)
}

/// `<n, k>` via the recursion `<n, k> = sum_{i<=k} <n-1, i>`.
pub fn multiset_coeff_recursive(n: usize, k: usize) -> ExactInt {
    // row[i] = <level, i>, starting at level 0
    let mut row = vec![ExactInt::zero(); k + 1];
    row[0] = ExactInt::one();
    for _ in 0..n {
        for i in 1..=k {
            let prev = row[i - 1].clone();
            row[i] += prev;
        }
    }
    row[k].clone()
}

/// `c^p(n, k)`: ways to put `k` indistinguishable balls into `n` boxes with
/// at most `p` per box, by `c^p(n,k) = sum_{i=0}^p c^p(n-1, k-i)`.
pub fn gentile_coeff(p: usize, n: usize, k: usize) -> Result<ExactInt> {
    if p == 0 {
        return Err(Error::invalid("Gentile parameter p must be at least 1"));
    }
    if k > n * p {
        return Ok(ExactInt::zero());
    }
    let mut row = vec![ExactInt::zero(); k + 1];
    row[0] = ExactInt::one();
    for _ in 0..n {
        let prev = row.clone();
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = (0..=p.min(j)).map(|i| &prev[j - i]).sum();
        }
    }
    Ok(row[k].clone())
}

/// `n! / (h_1! ... h_k!)` when the parts sum to `n`, otherwise 0.
pub fn multinomial(n: usize, parts: &[usize]) -> ExactInt {
    if parts.iter().sum::<usize>() != n {
        return ExactInt::zero();
    }
    let den = parts
        .iter()
        .fold(ExactInt::one(), |acc, &h| acc * factorial(h as u64));
    factorial(n as u64) / den
}

/// Solutions of `x_1 + ... + x_n = k` with `x_i >= bounds[i]`.
pub fn lower_bound_solutions(n: usize, k: usize, bounds: &[usize]) -> Result<ExactInt> {
    if bounds.len() != n {
        return Err(Error::invalid(format!(
            "expected {n} lower bounds, got {}",
            bounds.len()
        )));
    }
    let total: usize = bounds.iter().sum();
    if total > k {
        return Ok(ExactInt::zero());
    }
    Ok(multiset_coeff(n, k - total))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Graph,
    Digraph,
    LooplessDigraph,
    Multigraph,
    Multidigraph,
    LooplessMultidigraph,
}

impl GraphKind {
    pub const ALL: [GraphKind; 6] = [
        GraphKind::Graph,
        GraphKind::Digraph,
        GraphKind::LooplessDigraph,
        GraphKind::Multigraph,
        GraphKind::Multidigraph,
        GraphKind::LooplessMultidigraph,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "graph" => GraphKind::Graph,
            "digraph" => GraphKind::Digraph,
            "loopless_digraph" => GraphKind::LooplessDigraph,
            "multigraph" => GraphKind::Multigraph,
            "multidigraph" => GraphKind::Multidigraph,
            "loopless_multidigraph" => GraphKind::LooplessMultidigraph,
            other => return Err(Error::invalid(format!("unknown graph kind {other:?}"))),
        })
    }

    /// Number of possible edge (or arrow) slots on `n` labelled vertices.
    pub fn slots(self, n: usize) -> usize {
        match self {
            GraphKind::Graph | GraphKind::Multigraph => n * n.saturating_sub(1) / 2,
            GraphKind::Digraph | GraphKind::Multidigraph => n * n,
            GraphKind::LooplessDigraph | GraphKind::LooplessMultidigraph => {
                n * n.saturating_sub(1)
            }
        }
    }

    fn is_multi(self) -> bool {
        matches!(
            self,
            GraphKind::Multigraph | GraphKind::Multidigraph | GraphKind::LooplessMultidigraph
        )
    }
}

/// Labelled (multi)graphs on `n` vertices, optionally with exactly `k`
/// edges. Multigraph kinds without `k` form an infinite family.
pub fn graph_count(kind: GraphKind, n: usize, k: Option<usize>) -> Result<ExactInt> {
    let slots = kind.slots(n);
    match (kind.is_multi(), k) {
        (false, None) => Ok(Pow::pow(int(2), slots)),
        (false, Some(k)) => Ok(binomial(slots, k)),
        (true, Some(k)) => Ok(multiset_coeff(slots, k)),
        (true, None) => Err(Error::Infinite(format!(
            "{kind:?} on {n} vertices without an edge count"
        ))),
    }
}

/// Coefficient of `t^k` in `(1-t)^n / (1-t)^m`, i.e.
/// `sum_h (-1)^h C(n,h) <m, k-h>`.
pub fn alternating_convolution(n: usize, m: usize, k: usize) -> ExactInt {
    let value: ExactInt = (0..=k.min(n))
        .map(|h| sign(h as u64) * binomial(n, h) * multiset_coeff(m, k - h))
        .sum();
    debug_assert_eq!(value, alternating_convolution_closed(n, m, k));
    value
}

/// `(-1)^k C(n-m, k)` if `n > m`, `[k = 0]` if `n = m`, `<m-n, k>` if `n < m`.
pub fn alternating_convolution_closed(n: usize, m: usize, k: usize) -> ExactInt {
    use std::cmp::Ordering::*;
    match n.cmp(&m) {
        Greater => sign(k as u64) * binomial(n - m, k),
        Equal => {
            if k == 0 {
                ExactInt::one()
            } else {
                ExactInt::zero()
            }
        }
        Less => multiset_coeff(m - n, k),
    }
}

/// `1 - (days)_k / days^k`: some two of `k` people share a birthday.
pub fn birthday_probability(k: usize, days: usize) -> Result<ExactRat> {
    if days == 0 {
        return Err(Error::invalid("days must be positive"));
    }
    let all: ExactInt = Pow::pow(int(days), k);
    Ok(ExactRat::one() - ExactRat::new(falling_factorial(days, k), all))
}

/// `sum_k C(n, k)` for checks of the power-set identity.
pub fn binomial_row_sum(n: usize) -> ExactInt {
    (0..=n).map(|k| binomial(n, k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 2), int(3));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), int(1));
        }
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(binomial(3, 5), int(0));
        for n in 0..=20 {
            for k in 0..=n + 1 {
                assert_eq!(binomial(n, k), binomial_pascal(n, k));
            }
            assert_eq!(binomial_row_sum(n), Pow::pow(int(2), n));
        }
        assert_eq!(binomial_signed(-3, 1), int(0));
    }

    #[test]
    fn factorial_powers() {
        assert_eq!(falling_factorial(5, 2), int(20));
        assert_eq!(falling_factorial(3, 4), int(0));
        assert_eq!(rising_factorial(7, 0), int(1));
        assert_eq!(rising_factorial(3, 2), int(12));
        assert_eq!(rising_factorial_recursive(3, 2), int(12));
        for n in 0..8 {
            for k in 0..8 {
                assert_eq!(rising_factorial(n, k), rising_factorial_recursive(n, k));
            }
        }
    }

    #[test]
    fn multisets() {
        assert_eq!(multiset_coeff(3, 4), int(15));
        assert_eq!(multiset_coeff(5, 0), int(1));
        assert_eq!(multiset_coeff(2, 3), int(4));
        assert_eq!(multiset_coeff(0, 0), int(1));
        assert_eq!(multiset_coeff(0, 3), int(0));
        for n in 0..10 {
            for k in 0..10 {
                let a = multiset_coeff(n, k);
                assert_eq!(a, multiset_coeff_binomial(n, k));
                assert_eq!(a, multiset_coeff_recursive(n, k));
            }
        }
    }

    #[test]
    fn gentile() {
        assert_eq!(gentile_coeff(2, 3, 3).unwrap(), int(7));
        assert_eq!(gentile_coeff(2, 3, 7).unwrap(), int(0));
        assert_eq!(gentile_coeff(1, 4, 2).unwrap(), int(6));
        assert!(gentile_coeff(0, 1, 1).is_err());
        // large p reproduces multiset coefficients
        for n in 0..6 {
            for k in 0..6 {
                assert_eq!(gentile_coeff(k.max(1), n, k).unwrap(), multiset_coeff(n, k));
            }
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(4, &[2, 1, 1]), int(12));
        assert_eq!(multinomial(5, &[5]), int(1));
        assert_eq!(multinomial(3, &[1, 1, 1]), int(6));
        assert_eq!(multinomial(3, &[1, 1]), int(0));
    }

    #[test]
    fn bounded_solutions() {
        assert_eq!(lower_bound_solutions(3, 5, &[1, 1, 1]).unwrap(), int(6));
        assert_eq!(lower_bound_solutions(3, 5, &[0, 0, 0]).unwrap(), multiset_coeff(3, 5));
        assert_eq!(lower_bound_solutions(2, 3, &[2, 2]).unwrap(), int(0));
        assert!(lower_bound_solutions(2, 3, &[1]).is_err());
    }

    #[test]
    fn graphs() {
        assert_eq!(graph_count(GraphKind::Graph, 3, None).unwrap(), int(8));
        assert_eq!(graph_count(GraphKind::Digraph, 2, None).unwrap(), int(16));
        assert_eq!(graph_count(GraphKind::LooplessDigraph, 3, None).unwrap(), int(64));
        assert_eq!(graph_count(GraphKind::Multigraph, 3, Some(2)).unwrap(), int(6));
        assert_eq!(graph_count(GraphKind::Graph, 4, Some(2)).unwrap(), int(15));
        assert_eq!(graph_count(GraphKind::Multidigraph, 2, Some(2)).unwrap(), int(10));
        assert!(matches!(
            graph_count(GraphKind::Multigraph, 3, None),
            Err(Error::Infinite(_))
        ));
        assert!(GraphKind::parse("hypergraph").is_err());
    }

    #[test]
    fn alternating_identity() {
        assert_eq!(alternating_convolution(2, 2, 1), int(0));
        assert_eq!(alternating_convolution(3, 1, 2), int(1));
        assert_eq!(alternating_convolution(1, 3, 2), int(3));
        assert_eq!(alternating_convolution(5, 2, 1), int(-3));
        for n in 0..8 {
            for m in 0..8 {
                for k in 0..8 {
                    assert_eq!(
                        alternating_convolution(n, m, k),
                        alternating_convolution_closed(n, m, k)
                    );
                }
            }
        }
    }

    #[test]
    fn birthday() {
        assert_eq!(birthday_probability(1, 365).unwrap(), rat(0, 1));
        assert_eq!(birthday_probability(0, 365).unwrap(), rat(0, 1));
        assert_eq!(birthday_probability(4, 3).unwrap(), rat(1, 1));
        assert_eq!(birthday_probability(2, 2).unwrap(), rat(1, 2));
        let half = rat(1, 2);
        assert!(birthday_probability(23, 365).unwrap() > half);
        assert!(birthday_probability(22, 365).unwrap() < half);
        assert!(birthday_probability(3, 0).is_err());
    }
}
