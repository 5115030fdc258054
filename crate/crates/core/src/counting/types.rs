use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiplicity vector `1^{v1} 2^{v2} ...` of a partition or permutation
/// type. `mult(i)` is the number of blocks (or cycles) of size `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeVector {
    mults: Vec<usize>,
}

impl TypeVector {
    /// `mults[i - 1]` is the multiplicity of size `i`; `n` is checked
    /// against `sum i * mults[i - 1]`.
    pub fn new(n: usize, mults: Vec<usize>) -> Result<Self> {
        let t = Self::from_mults(mults);
        if t.n() != n {
            return Err(Error::invalid(format!(
                "type {t} has weight {} but n = {n}",
                t.n()
            )));
        }
        Ok(t)
    }

    pub fn from_mults(mut mults: Vec<usize>) -> Self {
        while mults.last() == Some(&0) {
            mults.pop();
        }
        TypeVector { mults }
    }

    /// Type of a multiset of block sizes. Zero sizes are ignored.
    pub fn from_block_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut mults = Vec::new();
        for s in sizes.into_iter().filter(|&s| s > 0) {
            if mults.len() < s {
                mults.resize(s, 0);
            }
            mults[s - 1] += 1;
        }
        TypeVector { mults }
    }

    /// `sum i * v_i`.
    pub fn n(&self) -> usize {
        self.mults.iter().enumerate().map(|(i, &v)| (i + 1) * v).sum()
    }

    /// `v_i`, zero past the stored length.
    pub fn mult(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.mults.get(i - 1).copied().unwrap_or(0)
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Total number of blocks `|v| = sum v_i`.
    pub fn parts(&self) -> usize {
        self.mults.iter().sum()
    }

    /// Every type of weight `n`, i.e. every integer partition of `n`,
    /// ordered by descending lexicographic part list.
    pub fn all(n: usize) -> Vec<TypeVector> {
        fn rec(rem: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<TypeVector>) {
            if rem == 0 {
                out.push(TypeVector::from_block_sizes(parts.iter().copied()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                parts.push(p);
                rec(rem - p, p, parts, out);
                parts.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for TypeVector {
    /// `1^2 3^1`; the empty type prints as `1^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .mults
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, v)| format!("{}^{}", i + 1, v))
            .collect();
        if terms.is_empty() {
            write!(f, "1^0")
        } else {
            write!(f, "{}", terms.join(" "))
        }
    }
}

/// A card-drawing problem: `k` of `n` cards with at least `m` undrawn
/// cards between consecutive drawn ones. In the circular case `n` is the
/// seat count of a round table and only `m = 1` is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GergonneQuery {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub circular: bool,
}

impl GergonneQuery {
    pub fn linear(n: usize, k: usize, m: usize) -> Self {
        GergonneQuery {
            n,
            k,
            m,
            circular: false,
        }
    }

    pub fn circular(seats: usize, k: usize) -> Self {
        GergonneQuery {
            n: seats,
            k,
            m: 1,
            circular: true,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.circular {
            if self.m != 1 {
                return Err(Error::invalid("circular Gergonne queries require m = 1"));
            }
            if self.n == 0 || self.n % 2 != 0 {
                return Err(Error::invalid(format!(
                    "circular Gergonne queries need an even positive seat count, got {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_vector_basics() {
        let t = TypeVector::new(6, vec![1, 1, 1]).unwrap();
        assert_eq!(t.parts(), 3);
        assert_eq!(t.mult(2), 1);
        assert_eq!(t.mult(9), 0);
        assert_eq!(t.to_string(), "1^1 2^1 3^1");
        assert!(TypeVector::new(5, vec![1, 1, 1]).is_err());
        assert_eq!(TypeVector::from_block_sizes([2, 2]), TypeVector::from_mults(vec![0, 2, 0]));
    }

    #[test]
    fn all_types_are_partitions() {
        let counts: Vec<usize> = (0..=10).map(|n| TypeVector::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for t in TypeVector::all(7) {
            assert_eq!(t.n(), 7);
        }
    }
}
