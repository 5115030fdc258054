//! Brute-force generators for every counted family.
//!
//! Generators are iterators in a canonical order (lexicographic words,
//! blocks and cycles ordered by their least element). Each constructor
//! checks a size guard before producing anything, so an oversized request
//! fails fast instead of running away.

mod partitions;
mod permutations;
mod seating;
mod words;

pub use partitions::{enumerate_set_partitions, kernel_partition, SetPartition};
pub use permutations::{
    cycle_decompose, enumerate_permutations, CycleDecomposition, PermFilter, Permutation,
};
pub use seating::{
    count_full_menage_seatings, enumerate_gergonne, enumerate_menage, is_menage_placement,
};
pub use words::{
    enumerate_functions, enumerate_multisets, enumerate_subsets, format_word, increasing_word,
    FunctionMode, Multiset,
};

use crate::error::{Error, Result};

pub const FUNCTION_LIMIT: u128 = 10_000_000;
pub const SUBSET_MAX_N: usize = 24;
pub const MULTISET_LIMIT: u128 = 1_000_000;
pub const PARTITION_MAX_N: usize = 12;
pub const PERMUTATION_MAX_N: usize = 9;
pub const GERGONNE_LIMIT: u128 = 1_000_000;
pub const MENAGE_MAX_N: usize = 7;
pub const FULL_MENAGE_MAX_N: usize = 6;

pub(crate) fn check(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        Err(Error::guard(what, size, limit))
    } else {
        Ok(())
    }
}

/// `C(n, k)` in `u128`, saturating. Used only for guard checks.
pub(crate) fn small_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
