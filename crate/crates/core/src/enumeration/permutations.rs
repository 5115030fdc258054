use std::fmt;

use super::{check, PERMUTATION_MAX_N};
use crate::counting::TypeVector;
use crate::error::{Error, Result};

/// A bijection of `{1..n}` in functional form: `image[i - 1] = sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!("{image:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `sigma(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) == i).collect()
    }

    fn next_lex(&mut self) -> bool {
        let a = &mut self.image;
        if a.len() < 2 {
            return false;
        }
        let mut i = a.len() - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = a.len() - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format_word(&self.image))
    }
}

/// The disjoint cycles of a permutation, each starting at its least
/// element, ordered by that element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_type(&self) -> TypeVector {
        TypeVector::from_block_sizes(self.cycles.iter().map(Vec::len))
    }

    /// Rebuilds the permutation by sending each cycle entry to its successor.
    pub fn compose(&self) -> Permutation {
        let mut image = vec![0; self.n];
        for c in &self.cycles {
            for (idx, &x) in c.iter().enumerate() {
                image[x - 1] = c[(idx + 1) % c.len()];
            }
        }
        Permutation { image }
    }

    /// The `k` rotations of a `k`-cycle, each as a word, starting from the
    /// stored presentation.
    pub fn word_presentations(cycle: &[usize]) -> Vec<String> {
        (0..cycle.len())
            .map(|r| {
                let rotated: Vec<usize> =
                    cycle[r..].iter().chain(&cycle[..r]).copied().collect();
                super::format_word(&rotated)
            })
            .collect()
    }
}

impl fmt::Display for CycleDecomposition {
    /// `(1 5)(2 7 8)(3 4 6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", inner.join(" "))?;
        }
        Ok(())
    }
}

/// Follows the unique outgoing arrow from each unvisited element until the
/// walk closes.
pub fn cycle_decompose(sigma: &Permutation) -> CycleDecomposition {
    let n = sigma.n();
    let mut visited = vec![false; n + 1];
    let mut cycles = Vec::new();
    for start in 1..=n {
        if visited[start] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut x = sigma.apply(start);
        while x != start {
            visited[x] = true;
            cycle.push(x);
            x = sigma.apply(x);
        }
        cycles.push(cycle);
    }
    CycleDecomposition { n, cycles }
}

/// Optional restrictions on enumerated permutations; all present
/// conditions must hold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PermFilter {
    pub cycles: Option<usize>,
    pub cycle_type: Option<TypeVector>,
    pub derangement_only: bool,
    pub fixed_points: Option<usize>,
}

impl PermFilter {
    fn accepts(&self, p: &Permutation) -> bool {
        let fixed = p.fixed_points().len();
        if self.derangement_only && fixed != 0 {
            return false;
        }
        if self.fixed_points.is_some_and(|k| k != fixed) {
            return false;
        }
        if self.cycles.is_none() && self.cycle_type.is_none() {
            return true;
        }
        let d = cycle_decompose(p);
        self.cycles.map_or(true, |k| d.cycle_count() == k)
            && self.cycle_type.as_ref().map_or(true, |t| &d.cycle_type() == t)
    }
}

struct LexPermutations {
    cur: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let out = self.cur.take()?;
        let mut next = out.clone();
        if next.next_lex() {
            self.cur = Some(next);
        }
        Some(out)
    }
}

/// Permutations of `{1..n}` in lexicographic order, filtered.
pub fn enumerate_permutations(
    n: usize,
    filter: PermFilter,
) -> Result<impl Iterator<Item = Permutation>> {
    check("permutations", n as u128, PERMUTATION_MAX_N as u128)?;
    let gen = LexPermutations {
        cur: Some(Permutation::identity(n)),
    };
    Ok(gen.filter(move |p| filter.accepts(p)))
}

pub(crate) fn all_permutations_unguarded(n: usize) -> impl Iterator<Item = Permutation> {
    LexPermutations {
        cur: Some(Permutation::identity(n)),
    }
}
