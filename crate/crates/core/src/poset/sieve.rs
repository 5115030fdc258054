//! Inclusion-exclusion over an explicit family of subsets: Sylvester
//! numbers, the survivor count, and Jordan's exactly-`m` counts.

use num_traits::Zero;
use rand::Rng;
use serde_json::{json, Value};

use crate::counting::binomial;
use crate::enumeration::{Permutation, PERMUTATION_MAX_N};
use crate::error::{Error, Result};
use crate::exact::{sign, ExactInt};

pub const MAX_SETS: usize = 20;
pub const MAX_UNIVERSE: usize = 100_000;

/// Subsets `A_1..A_n` of a universe `{0..N-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    universe: usize,
    sets: Vec<Vec<usize>>,
}

type Bits = Vec<u64>;

impl SubsetFamily {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        for (i, s) in sets.iter().enumerate() {
            if let Some(&x) = s.iter().find(|&&x| x >= universe) {
                return Err(Error::invalid(format!(
                    "set {} contains {x}, outside a universe of size {universe}",
                    i + 1
                )));
            }
        }
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Ok(SubsetFamily { universe, sets })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Universe = permutations of `{1..n}` in lexicographic order;
    /// `A_i` = those fixing `i`.
    pub fn fixed_point_family(n: usize) -> Result<Self> {
        let perms = all_permutations(n)?;
        let sets = (1..=n)
            .map(|i| {
                perms
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.apply(i) == i)
                    .map(|(idx, _)| idx)
                    .collect()
            })
            .collect();
        SubsetFamily::new(perms.len(), sets)
    }

    /// Universe = placements `f` of the men (permutations of `{1..n}`);
    /// `A_{2i-1}`: `f(i) = i`, `A_{2i}`: `f(i) = i + 1` for `i < n`, and
    /// `A_{2n}`: `f(n) = 1`.
    pub fn menage_family(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("need at least one couple"));
        }
        let perms = all_permutations(n)?;
        let mut sets = Vec::with_capacity(2 * n);
        for i in 1..=n {
            let right = if i == n { 1 } else { i + 1 };
            for target in [i, right] {
                sets.push(
                    perms
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| p.apply(i) == target)
                        .map(|(idx, _)| idx)
                        .collect(),
                );
            }
        }
        SubsetFamily::new(perms.len(), sets)
    }

    /// `count` sets over a universe of `universe` points, each point in each
    /// set with probability `density`.
    pub fn random<R: Rng>(rng: &mut R, universe: usize, count: usize, density: f64) -> Self {
        let sets = (0..count)
            .map(|_| (0..universe).filter(|_| rng.gen_bool(density)).collect())
            .collect();
        SubsetFamily { universe, sets }
    }

    /// `{"universe": N, "sets": [[...], ...]}`.
    pub fn from_json(value: &Value) -> Result<Self> {
        let universe = value
            .get("universe")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("family JSON needs a \"universe\" size".into()))?
            as usize;
        let sets = value
            .get("sets")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("family JSON needs a \"sets\" array".into()))?
            .iter()
            .map(|s| {
                s.as_array()
                    .ok_or_else(|| Error::Parse("each set must be an array".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| x as usize)
                            .ok_or_else(|| Error::Parse(format!("bad element {x}")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SubsetFamily::new(universe, sets)
    }

    pub fn to_json(&self) -> Value {
        json!({ "universe": self.universe, "sets": self.sets })
    }

    fn guard(&self) -> Result<()> {
        if self.sets.len() > MAX_SETS {
            return Err(Error::guard("family size", self.sets.len(), MAX_SETS));
        }
        if self.universe > MAX_UNIVERSE {
            return Err(Error::guard("universe", self.universe, MAX_UNIVERSE));
        }
        Ok(())
    }

    fn bitsets(&self) -> Vec<Bits> {
        let words = self.universe.div_ceil(64);
        self.sets
            .iter()
            .map(|s| {
                let mut b = vec![0u64; words];
                for &x in s {
                    b[x / 64] |= 1 << (x % 64);
                }
                b
            })
            .collect()
    }

    /// `S_k = sum_{|T| = k} |intersection of A_i, i in T|` for `k = 0..=n`,
    /// with `S_0 = |universe|`. Intersections are walked depth-first and a
    /// branch is dropped once its intersection is empty.
    pub fn sylvester_numbers(&self) -> Result<Vec<ExactInt>> {
        self.guard()?;
        let n = self.sets.len();
        let bits = self.bitsets();
        let roots: Vec<usize> = (0..n).collect();
        let partials = crate::par::map(roots, |i| {
            let mut acc = vec![0u64; n + 1];
            let inter = bits[i].clone();
            descend(&bits, i, &inter, 1, &mut acc);
            acc
        });
        let mut s = vec![ExactInt::zero(); n + 1];
        s[0] = ExactInt::from(self.universe);
        for acc in partials {
            for (k, v) in acc.into_iter().enumerate() {
                s[k] += v;
            }
        }
        Ok(s)
    }

    /// Number of points in no set, `sum_k (-1)^k S_k`, checked against a
    /// direct scan.
    pub fn sylvester_count(&self) -> Result<ExactInt> {
        let s = self.sylvester_numbers()?;
        let value: ExactInt = s
            .iter()
            .enumerate()
            .map(|(k, v)| sign(k as u64) * v)
            .sum();
        let direct = ExactInt::from(self.membership_counts()[0]);
        if value != direct {
            return Err(Error::Inconsistency(format!(
                "Sylvester sum {value} != direct survivor scan {direct}"
            )));
        }
        Ok(value)
    }

    /// `e_m = sum_{k >= m} (-1)^{k-m} C(k, m) S_k`: points in exactly `m`
    /// sets, for `m = 0..=n`.
    pub fn jordan_counts(&self) -> Result<Vec<ExactInt>> {
        let s = self.sylvester_numbers()?;
        let n = self.sets.len();
        let e: Vec<ExactInt> = (0..=n)
            .map(|m| {
                (m..=n)
                    .map(|k| sign((k - m) as u64) * binomial(k, m) * &s[k])
                    .sum()
            })
            .collect();
        let total: ExactInt = e.iter().sum();
        if total != ExactInt::from(self.universe) {
            return Err(Error::Inconsistency(format!(
                "Jordan counts sum to {total}, universe has {}",
                self.universe
            )));
        }
        let survivors: ExactInt = s.iter().enumerate().map(|(k, v)| sign(k as u64) * v).sum();
        if e[0] != survivors {
            return Err(Error::Inconsistency("e_0 differs from the Sylvester count".into()));
        }
        Ok(e)
    }

    /// Direct scan: `counts[m]` is the number of points lying in exactly
    /// `m` of the sets.
    pub fn membership_counts(&self) -> Vec<u64> {
        let mut degree = vec![0usize; self.universe];
        for s in &self.sets {
            for &x in s {
                degree[x] += 1;
            }
        }
        let mut counts = vec![0u64; self.sets.len() + 1];
        for d in degree {
            counts[d] += 1;
        }
        counts
    }
}

fn descend(bits: &[Bits], last: usize, inter: &Bits, depth: usize, acc: &mut [u64]) {
    let size: u64 = inter.iter().map(|w| u64::from(w.count_ones())).sum();
    if size == 0 {
        return;
    }
    acc[depth] += size;
    for j in last + 1..bits.len() {
        let next: Bits = inter.iter().zip(&bits[j]).map(|(a, b)| a & b).collect();
        descend(bits, j, &next, depth + 1, acc);
    }
}

fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n > PERMUTATION_MAX_N - 1 {
        return Err(Error::guard("permutation universe", n, PERMUTATION_MAX_N - 1));
    }
    Ok(crate::enumeration::enumerate_permutations(n, Default::default())?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{derangement, derangement_fixed, touchard};
    use crate::exact::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn empty_family() {
        let f = SubsetFamily::new(7, vec![]).unwrap();
        assert_eq!(f.sylvester_numbers().unwrap(), vec![int(7)]);
        assert_eq!(f.sylvester_count().unwrap(), int(7));
        assert_eq!(f.jordan_counts().unwrap(), vec![int(7)]);
    }

    #[test]
    fn three_sets_by_hand() {
        let f = SubsetFamily::new(6, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 4]]).unwrap();
        let s = f.sylvester_numbers().unwrap();
        // |A1∩A2| + |A1∩A3| + |A2∩A3| = 2 + 1 + 1
        assert_eq!(s, vec![int(6), int(8), int(4), int(1)]);
        assert_eq!(f.sylvester_count().unwrap(), int(1));
        assert_eq!(f.jordan_counts().unwrap(), vec![int(1), int(3), int(1), int(1)]);
        assert_eq!(f.membership_counts(), vec![1, 3, 1, 1]);
    }

    #[test]
    fn derangement_families() {
        let f = SubsetFamily::fixed_point_family(4).unwrap();
        assert_eq!(f.universe(), 24);
        assert_eq!(f.sylvester_numbers().unwrap()[1], int(24));
        assert_eq!(f.sylvester_count().unwrap(), int(9));
        assert_eq!(f.jordan_counts().unwrap()[1], int(8));
        for n in 1..=6 {
            let f = SubsetFamily::fixed_point_family(n).unwrap();
            assert_eq!(f.sylvester_count().unwrap(), derangement(n));
            let e = f.jordan_counts().unwrap();
            for (k, v) in e.iter().enumerate() {
                assert_eq!(v, &derangement_fixed(n, k));
            }
        }
    }

    #[test]
    fn menage_family_counts() {
        for n in 2..=6 {
            let f = SubsetFamily::menage_family(n).unwrap();
            assert_eq!(f.sets().len(), 2 * n);
            assert_eq!(f.sylvester_count().unwrap(), touchard(n).unwrap());
        }
        assert_eq!(SubsetFamily::menage_family(3).unwrap().sylvester_count().unwrap(), int(1));
    }

    #[test]
    fn random_families_match_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let f = SubsetFamily::random(&mut rng, 300, 8, 0.3);
            let e = f.jordan_counts().unwrap();
            let scan: Vec<ExactInt> = f.membership_counts().into_iter().map(ExactInt::from).collect();
            assert_eq!(e, scan);
        }
    }

    #[test]
    fn validation_and_json() {
        assert!(SubsetFamily::new(3, vec![vec![0, 3]]).is_err());
        let f = SubsetFamily::from_json(&json!({"universe": 4, "sets": [[0, 1], [1, 2, 2]]})).unwrap();
        assert_eq!(f.sets()[1], vec![1, 2]);
        assert_eq!(SubsetFamily::from_json(&f.to_json()).unwrap(), f);
        assert!(SubsetFamily::from_json(&json!({"sets": []})).is_err());
        let big = SubsetFamily::new(1, vec![vec![0]; 21]).unwrap();
        assert!(big.sylvester_numbers().is_err());
    }
}
