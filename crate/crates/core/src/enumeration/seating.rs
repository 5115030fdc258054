use super::permutations::all_permutations_unguarded;
use super::words::k_subsets;
use super::{check, small_binomial, Permutation, FULL_MENAGE_MAX_N, GERGONNE_LIMIT, MENAGE_MAX_N};
use crate::counting::GergonneQuery;
use crate::error::{Error, Result};

fn is_winning(q: &GergonneQuery, s: &[usize]) -> bool {
    let gap = q.m + 1;
    let linear_ok = s.windows(2).all(|w| w[1] - w[0] >= gap);
    if !q.circular || s.len() < 2 {
        return linear_ok;
    }
    linear_ok && s[0] + q.n - s[s.len() - 1] >= gap
}

/// Winning `k`-subsets of `{1..n}`: consecutive chosen elements differ by
/// at least `m + 1`, cyclically when the query is circular.
pub fn enumerate_gergonne(q: GergonneQuery) -> Result<impl Iterator<Item = Vec<usize>>> {
    q.validate()?;
    check("Gergonne subsets", small_binomial(q.n, q.k), GERGONNE_LIMIT)?;
    Ok(k_subsets(q.n, q.k).filter(move |s| is_winning(&q, s)))
}

/// Whether the men's placement `f` (man `f(i)` sits to the right of woman
/// `i`) avoids every forbidden event: `f(i) = i`, `f(i) = i + 1` for
/// `i < n`, and `f(n) = 1`.
pub fn is_menage_placement(f: &Permutation) -> bool {
    let n = f.n();
    (1..=n).all(|i| {
        let v = f.apply(i);
        v != i && v != if i == n { 1 } else { i + 1 }
    })
}

/// Every admissible placement for the reduced problem with `n` couples.
pub fn enumerate_menage(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    check("menage placements", n as u128, MENAGE_MAX_N as u128)?;
    Ok(all_permutations_unguarded(n).filter(is_menage_placement))
}

/// Exhaustive count of seatings of `n` couples on `2n` labelled seats of a
/// round table, sexes alternating and no partners side by side.
pub fn count_full_menage_seatings(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("need at least one couple"));
    }
    check("menage seatings", n as u128, FULL_MENAGE_MAX_N as u128)?;
    let seats = 2 * n;
    let adjacent = |a: usize, b: usize| (a + 1) % seats == b || (b + 1) % seats == a;
    let women: Vec<Permutation> = all_permutations_unguarded(n).collect();
    let mut count = 0u64;
    for parity in 0..2 {
        for w in &women {
            // woman w(j) sits at seat parity + 2j
            let mut woman_seat = vec![0; n + 1];
            for j in 0..n {
                woman_seat[w.apply(j + 1)] = parity + 2 * j;
            }
            for m in &women {
                let ok = (0..n).all(|j| {
                    let man = m.apply(j + 1);
                    !adjacent(woman_seat[man], (1 - parity) + 2 * j)
                });
                if ok {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
