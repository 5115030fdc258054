use std::fmt;

use super::{check, PARTITION_MAX_N};
use crate::counting::TypeVector;
use crate::error::{Error, Result};

/// A partition of `{1..n}` into nonempty blocks. Blocks are sorted and
/// ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n {
                    return Err(Error::invalid(format!("element {x} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::invalid(format!("element {x} in two blocks")));
                }
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::invalid(format!("element {x} not covered")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// From a restricted growth string: `labels[i]` is the block of `i + 1`.
    fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        SetPartition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_type(&self) -> TypeVector {
        TypeVector::from_block_sizes(self.blocks.iter().map(Vec::len))
    }
}

impl fmt::Display for SetPartition {
    /// `{1,3} {2} {4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        if parts.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Restricted growth strings of length `n` in lexicographic order.
struct GrowthStrings {
    labels: Option<Vec<usize>>,
}

impl Iterator for GrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.labels.take()?;
        let mut next = out.clone();
        // prefix maxima bound each label: a[i] <= 1 + max(a[..i])
        let mut i = next.len();
        while i > 1 {
            i -= 1;
            let max_prefix = next[..i].iter().copied().max().unwrap_or(0);
            if next[i] <= max_prefix {
                next[i] += 1;
                for slot in &mut next[i + 1..] {
                    *slot = 0;
                }
                self.labels = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// All partitions of `{1..n}`, optionally only those with `k` blocks or of
/// a given type.
pub fn enumerate_set_partitions(
    n: usize,
    k: Option<usize>,
    block_type: Option<TypeVector>,
) -> Result<impl Iterator<Item = SetPartition>> {
    check("set partitions", n as u128, PARTITION_MAX_N as u128)?;
    let gen = GrowthStrings {
        labels: Some(vec![0; n]),
    };
    Ok(gen
        .map(|l| SetPartition::from_labels(&l))
        .filter(move |p| k.map_or(true, |k| p.block_count() == k))
        .filter(move |p| block_type.as_ref().map_or(true, |t| &p.block_type() == t)))
}

/// The partition of the domain `{1..k}` of `F` into the fibres of `F`, where
/// `word[i] = F(i + 1)`. The induced map from blocks to values is injective.
pub fn kernel_partition(word: &[usize]) -> SetPartition {
    let mut values: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in word.iter().enumerate() {
        match values.iter().position(|&u| u == v) {
            Some(b) => blocks[b].push(i + 1),
            None => {
                values.push(v);
                blocks.push(vec![i + 1]);
            }
        }
    }
    let mut sorted = values.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), values.len(), "induced map must be injective");
    SetPartition {
        n: word.len(),
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_set_partitions(4, None, None).unwrap().count(), 15);
        assert_eq!(enumerate_set_partitions(4, Some(2), None).unwrap().count(), 7);
        let pairs = TypeVector::new(4, vec![0, 2]).unwrap();
        assert_eq!(enumerate_set_partitions(4, None, Some(pairs)).unwrap().count(), 3);
        assert_eq!(enumerate_set_partitions(0, None, None).unwrap().count(), 1);
        assert_eq!(enumerate_set_partitions(1, None, None).unwrap().count(), 1);
        assert!(enumerate_set_partitions(13, None, None).is_err());
    }

    #[test]
    fn canonical_order() {
        let all: Vec<String> = enumerate_set_partitions(3, None, None)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            all,
            vec!["{1,2,3}", "{1,2} {3}", "{1,3} {2}", "{1} {2,3}", "{1} {2} {3}"]
        );
    }

    #[test]
    fn kernels() {
        let p = kernel_partition(&[1, 3, 1, 2]);
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2], vec![4]]);
        assert_eq!(kernel_partition(&[5, 5, 5]).block_count(), 1);
        assert_eq!(kernel_partition(&[3, 1, 2]).block_count(), 3);
        assert_eq!(
            SetPartition::new(4, vec![vec![4], vec![3, 1], vec![2]]).unwrap(),
            p
        );
    }

    #[test]
    fn validation() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1], vec![], vec![2]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 3]]).is_err());
    }
}
