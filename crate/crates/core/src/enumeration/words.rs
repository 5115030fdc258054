use super::{check, small_binomial, MULTISET_LIMIT, SUBSET_MAX_N};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionMode {
    All,
    Injective,
    Surjective,
}

/// Odometer over words of length `k` on the alphabet `1..=n`.
struct Words {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Words {
    fn new(k: usize, n: usize) -> Self {
        let cur = if k == 0 || n > 0 { Some(vec![1; k]) } else { None };
        Words { n, cur }
    }
}

impl Iterator for Words {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        while i > 0 {
            i -= 1;
            if next[i] < self.n {
                next[i] += 1;
                self.cur = Some(next);
                return Some(out);
            }
            next[i] = 1;
        }
        Some(out)
    }
}

/// All functions from `{1..k}` to `{1..n}` as words `F(1) F(2) ... F(k)`,
/// optionally restricted to injections or surjections.
pub fn enumerate_functions(
    k: usize,
    n: usize,
    mode: FunctionMode,
) -> Result<impl Iterator<Item = Vec<usize>>> {
    let size = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    check("functions", size, super::FUNCTION_LIMIT)?;
    Ok(Words::new(k, n).filter(move |w| match mode {
        FunctionMode::All => true,
        FunctionMode::Injective => {
            let mut seen = vec![false; n + 1];
            w.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        }
        FunctionMode::Surjective => {
            let mut seen = vec![false; n + 1];
            for &v in w {
                seen[v] = true;
            }
            seen[1..].iter().all(|&s| s)
        }
    }))
}

/// `1312`-style rendering; values are space-separated once any exceeds 9.
pub fn format_word(w: &[usize]) -> String {
    if w.iter().all(|&v| v < 10) {
        w.iter().map(|v| v.to_string()).collect()
    } else {
        w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// `a1a3a4` for the subset `{1, 3, 4}`.
pub fn increasing_word(subset: &[usize]) -> String {
    subset.iter().map(|i| format!("a{i}")).collect()
}

/// Lexicographic `k`-subsets of `{1..n}`.
struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let cur = (k <= n).then(|| (1..=k).collect());
        Combinations { n, cur }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - (k - 1 - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Subsets of `{1..n}` as increasing lists: all of them (by size, then
/// lexicographically) or only those of size `k`.
pub fn enumerate_subsets(n: usize, k: Option<usize>) -> Result<Box<dyn Iterator<Item = Vec<usize>>>> {
    check("subsets", n as u128, SUBSET_MAX_N as u128)?;
    Ok(match k {
        Some(k) => Box::new(Combinations::new(n, k)),
        None => Box::new((0..=n).flat_map(move |k| Combinations::new(n, k))),
    })
}

pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    Combinations::new(n, k)
}

/// A multiset on `{1..n}` given by its multiplicity vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiset {
    pub mult: Vec<usize>,
}

impl Multiset {
    pub fn size(&self) -> usize {
        self.mult.iter().sum()
    }

    /// The nondecreasing word listing each element with its multiplicity.
    pub fn word(&self) -> Vec<usize> {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| std::iter::repeat(i + 1).take(r))
            .collect()
    }

    fn from_word(n: usize, w: &[usize]) -> Self {
        let mut mult = vec![0; n];
        for &v in w {
            mult[v - 1] += 1;
        }
        Multiset { mult }
    }
}

/// Nondecreasing words of length `k` on `{1..n}`, in lexicographic order.
struct NondecreasingWords {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Iterator for NondecreasingWords {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        while i > 0 {
            i -= 1;
            if next[i] < self.n {
                let v = next[i] + 1;
                for slot in &mut next[i..] {
                    *slot = v;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every `k`-multiset on `{1..n}`, ordered by its nondecreasing word.
pub fn enumerate_multisets(n: usize, k: usize) -> Result<impl Iterator<Item = Multiset>> {
    let size = if n == 0 {
        u128::from(k == 0)
    } else {
        small_binomial(n + k - 1, k)
    };
    check("multisets", size, MULTISET_LIMIT)?;
    let cur = if k == 0 || n > 0 { Some(vec![1; k]) } else { None };
    Ok(NondecreasingWords { n, cur }.map(move |w| Multiset::from_word(n, &w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functions() {
        let all: Vec<_> = enumerate_functions(4, 3, FunctionMode::All).unwrap().collect();
        assert_eq!(all.len(), 81);
        assert!(all.contains(&vec![1, 3, 1, 2]));
        assert_eq!(format_word(&[1, 3, 1, 2]), "1312");
        assert_eq!(enumerate_functions(2, 3, FunctionMode::Injective).unwrap().count(), 6);
        assert_eq!(enumerate_functions(3, 2, FunctionMode::Surjective).unwrap().count(), 6);
        assert_eq!(enumerate_functions(0, 0, FunctionMode::All).unwrap().count(), 1);
        assert_eq!(enumerate_functions(2, 0, FunctionMode::All).unwrap().count(), 0);
        assert!(enumerate_functions(8, 10, FunctionMode::All).is_err());
        assert_eq!(all[0], vec![1, 1, 1, 1]);
        assert_eq!(all[1], vec![1, 1, 1, 2]);
    }

    #[test]
    fn subsets() {
        assert_eq!(enumerate_subsets(3, None).unwrap().count(), 8);
        let s: Vec<_> = enumerate_subsets(5, Some(3)).unwrap().collect();
        assert!(s.contains(&vec![1, 3, 4]));
        assert_eq!(increasing_word(&[1, 3, 4]), "a1a3a4");
        assert_eq!(enumerate_subsets(6, Some(3)).unwrap().count(), 20);
        assert_eq!(enumerate_subsets(2, Some(3)).unwrap().count(), 0);
        assert_eq!(enumerate_subsets(4, Some(0)).unwrap().collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert!(enumerate_subsets(25, Some(1)).is_err());
    }

    #[test]
    fn multisets() {
        let all: Vec<_> = enumerate_multisets(3, 6).unwrap().collect();
        let rho = Multiset { mult: vec![2, 1, 3] };
        assert!(all.contains(&rho));
        assert_eq!(rho.word(), vec![1, 1, 2, 3, 3, 3]);
        assert_eq!(all.len(), 28);
        let empty: Vec<_> = enumerate_multisets(4, 0).unwrap().collect();
        assert_eq!(empty, vec![Multiset { mult: vec![0; 4] }]);
        assert_eq!(enumerate_multisets(3, 2).unwrap().count(), 6);
        assert_eq!(enumerate_multisets(0, 2).unwrap().count(), 0);
        assert!(enumerate_multisets(30, 30).is_err());
    }
}
