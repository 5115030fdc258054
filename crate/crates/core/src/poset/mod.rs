//! Finite posets, their zeta and Möbius functions, and Möbius inversion.
//!
//! A [`FinitePoset`] is validated on construction (reflexive closure is
//! applied, then antisymmetry and transitivity are checked with a witness
//! on failure). The Möbius function is evaluated along a linear extension
//! so every value it depends on is already known.

mod sieve;

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rat, rat_int, ExactRat};

pub use sieve::SubsetFamily;

pub const BOOLEAN_MAX_N: usize = 12;
pub const DIVISOR_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn is_subset_of(&self, other: &BitRow) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn first_not_in(&self, other: &BitRow) -> Option<usize> {
        self.0.iter().zip(&other.0).enumerate().find_map(|(w, (a, b))| {
            let d = a & !b;
            (d != 0).then(|| w * 64 + d.trailing_zeros() as usize)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// `up[x]` holds every `y` with `x <= y`.
    up: Vec<BitRow>,
    /// A linear extension: `x < y` implies `x` appears first.
    linear: Vec<usize>,
}

impl FinitePoset {
    /// Builds a poset from `x <= y` pairs over element indices. Reflexive
    /// pairs are added; antisymmetry and transitivity are checked.
    pub fn new(labels: Vec<String>, leq: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for (x, row) in up.iter_mut().enumerate() {
            row.set(x);
        }
        for &(x, y) in leq {
            if x >= n || y >= n {
                return Err(Error::invalid(format!("pair ({x}, {y}) outside {n} elements")));
            }
            up[x].set(y);
        }
        let p = FinitePoset::from_rows(labels, up);
        p.validate()?;
        Ok(p)
    }

    fn from_rows(labels: Vec<String>, up: Vec<BitRow>) -> Self {
        let n = labels.len();
        let below: Vec<usize> = (0..n)
            .map(|y| (0..n).filter(|&x| up[x].get(y)).count())
            .collect();
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&x| (below[x], x));
        FinitePoset { labels, up, linear }
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.leq(x, y) {
                    continue;
                }
                if self.leq(y, x) {
                    return Err(Error::NotPoset {
                        axiom: "antisymmetry",
                        witness: format!("{} <= {} and {} <= {}", self.labels[x], self.labels[y], self.labels[y], self.labels[x]),
                    });
                }
                if !self.up[y].is_subset_of(&self.up[x]) {
                    let z = self.up[y].first_not_in(&self.up[x]).expect("nonempty difference");
                    return Err(Error::NotPoset {
                        axiom: "transitivity",
                        witness: format!(
                            "{} <= {} and {} <= {} but not {} <= {}",
                            self.labels[x], self.labels[y], self.labels[y], self.labels[z], self.labels[x], self.labels[z]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].get(y)
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// Elements `>= x`, in linear-extension order.
    fn up_sorted(&self, x: usize) -> Vec<usize> {
        self.linear.iter().copied().filter(|&y| self.leq(x, y)).collect()
    }

    /// The same elements with the order reversed.
    pub fn reversed(&self) -> Self {
        let n = self.len();
        let mut up: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) {
                    up[y].set(x);
                }
            }
        }
        FinitePoset::from_rows(self.labels.clone(), up)
    }

    /// Subsets of `{1..n}` under inclusion; element index = bitmask.
    pub fn boolean_lattice(n: usize) -> Result<Self> {
        if n > BOOLEAN_MAX_N {
            return Err(Error::guard("boolean lattice", n, BOOLEAN_MAX_N));
        }
        let size = 1usize << n;
        let labels = (0..size).map(|m| subset_label(m, n)).collect();
        let up = (0..size)
            .map(|a| {
                let mut row = BitRow::new(size);
                for b in 0..size {
                    if a & !b == 0 {
                        row.set(b);
                    }
                }
                row
            })
            .collect();
        Ok(FinitePoset::from_rows(labels, up))
    }

    /// Divisors of `n` under divisibility, in increasing order.
    pub fn divisor_poset(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("divisor poset needs n >= 1"));
        }
        let divs = crate::number_theory::divisors(n)?;
        if divs.len() > DIVISOR_LIMIT {
            return Err(Error::guard("divisor poset", divs.len(), DIVISOR_LIMIT));
        }
        let size = divs.len();
        let labels = divs.iter().map(|d| d.to_string()).collect();
        let up = divs
            .iter()
            .map(|&a| {
                let mut row = BitRow::new(size);
                for (j, &b) in divs.iter().enumerate() {
                    if b % a == 0 {
                        row.set(j);
                    }
                }
                row
            })
            .collect();
        Ok(FinitePoset::from_rows(labels, up))
    }

    /// Random poset on `n` elements: each pair `i < j` is related with
    /// probability `p`, then the relation is closed transitively.
    pub fn random<R: Rng>(rng: &mut R, n: usize, p: f64) -> Self {
        let mut up: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for (i, row) in up.iter_mut().enumerate() {
            row.set(i);
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    row.set(j);
                }
            }
        }
        // closing from the top keeps every up-set already closed
        for i in (0..n).rev() {
            for j in i + 1..n {
                if up[i].get(j) {
                    let other = up[j].clone();
                    for (a, b) in up[i].0.iter_mut().zip(&other.0) {
                        *a |= b;
                    }
                }
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        // relabel through a random permutation so index order is not a
        // linear extension
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut shuffled: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for x in 0..n {
            for y in 0..n {
                if up[x].get(y) {
                    shuffled[perm[x]].set(perm[y]);
                }
            }
        }
        FinitePoset::from_rows(labels, shuffled)
    }

    /// `{"elements": [...], "leq": [[a, b], ...]}`; reflexive pairs optional.
    pub fn from_json(value: &Value) -> Result<Self> {
        let elements = value
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("poset JSON needs an \"elements\" array".into()))?;
        let labels: Vec<String> = elements.iter().map(json_label).collect();
        let find = |v: &Value| {
            let l = json_label(v);
            labels
                .iter()
                .position(|x| *x == l)
                .ok_or_else(|| Error::Parse(format!("unknown element {l}")))
        };
        let mut pairs = Vec::new();
        if let Some(leq) = value.get("leq") {
            let leq = leq
                .as_array()
                .ok_or_else(|| Error::Parse("\"leq\" must be an array of pairs".into()))?;
            for pair in leq {
                match pair.as_array().map(Vec::as_slice) {
                    Some([a, b]) => pairs.push((find(a)?, find(b)?)),
                    _ => return Err(Error::Parse(format!("bad pair {pair}"))),
                }
            }
        }
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::Parse("duplicate element".into()));
        }
        FinitePoset::new(labels, &pairs)
    }

    pub fn to_json(&self) -> Value {
        let mut leq = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if x != y && self.leq(x, y) {
                    leq.push(json!([self.labels[x], self.labels[y]]));
                }
            }
        }
        json!({ "elements": self.labels, "leq": leq })
    }

    /// `zeta(x, y) = 1` on every comparable pair.
    pub fn zeta(&self) -> IncidenceFunction {
        let mut values = HashMap::new();
        for x in 0..self.len() {
            for y in self.up_sorted(x) {
                values.insert((x, y), ExactRat::one());
            }
        }
        IncidenceFunction { values }
    }

    /// `mu(x, x) = 1`, `mu(x, y) = -sum_{x <= z < y} mu(x, z)`.
    pub fn mobius(&self) -> IncidenceFunction {
        let mut values = HashMap::new();
        for x in 0..self.len() {
            let ups = self.up_sorted(x);
            let mut mu: Vec<ExactRat> = Vec::with_capacity(ups.len());
            for (iy, &y) in ups.iter().enumerate() {
                if y == x {
                    mu.push(ExactRat::one());
                    continue;
                }
                let mut s = ExactRat::zero();
                for (iz, &z) in ups[..iy].iter().enumerate() {
                    if self.leq(z, y) {
                        s += &mu[iz];
                    }
                }
                mu.push(-s);
            }
            for (y, m) in ups.into_iter().zip(mu) {
                values.insert((x, y), m);
            }
        }
        IncidenceFunction { values }
    }

    /// Checks both defining sums of `mu` and that every value is an
    /// integer: for `x < y`, `sum_{x <= z <= y} mu(x, z) = 0` and
    /// `sum_{x <= z <= y} mu(z, y) = 0`.
    pub fn mobius_conditions_hold(&self, mu: &IncidenceFunction) -> bool {
        for ((x, y), v) in &mu.values {
            if !v.is_integer() {
                return false;
            }
            if x == y {
                if !v.is_one() {
                    return false;
                }
                continue;
            }
            let (mut left, mut right) = (ExactRat::zero(), ExactRat::zero());
            for z in 0..self.len() {
                if self.leq(*x, z) && self.leq(z, *y) {
                    left += mu.get(*x, z).expect("comparable");
                    right += mu.get(z, *y).expect("comparable");
                }
            }
            if !left.is_zero() || !right.is_zero() {
                return false;
            }
        }
        true
    }

    /// `sum_{x <= y} zeta(z, x) mu(x, y) = delta(z, y)` for all `z, y`.
    pub fn delta_check(&self) -> bool {
        let mu = self.mobius();
        let zeta = self.zeta();
        let n = self.len();
        for z in 0..n {
            for y in 0..n {
                let mut s = ExactRat::zero();
                for x in 0..n {
                    if let (Some(a), Some(b)) = (zeta.get(z, x), mu.get(x, y)) {
                        s += a * b;
                    }
                }
                let delta = if z == y { ExactRat::one() } else { ExactRat::zero() };
                if s != delta {
                    return false;
                }
            }
        }
        true
    }

    /// `g(y) = sum_{x <= y} f(x)`.
    pub fn accumulate(&self, f: &[ExactRat]) -> Result<Vec<ExactRat>> {
        self.check_total(f)?;
        let n = self.len();
        Ok((0..n)
            .map(|y| (0..n).filter(|&x| self.leq(x, y)).map(|x| &f[x]).sum())
            .collect())
    }

    /// The unique `f` with `sum_{x <= y} f(x) = g(y)`:
    /// `f(y) = sum_{x <= y} mu(x, y) g(x)`.
    pub fn invert(&self, g: &[ExactRat]) -> Result<Vec<ExactRat>> {
        self.check_total(g)?;
        let mu = self.mobius();
        let n = self.len();
        Ok((0..n)
            .map(|y| {
                (0..n)
                    .filter_map(|x| mu.get(x, y).map(|m| m * &g[x]))
                    .sum()
            })
            .collect())
    }

    /// `g(y) = sum_{x >= y} f(x)`.
    pub fn accumulate_dual(&self, f: &[ExactRat]) -> Result<Vec<ExactRat>> {
        self.reversed().accumulate(f)
    }

    /// The unique `f` with `sum_{x >= y} f(x) = g(y)`, by inversion on the
    /// reversed order.
    pub fn invert_dual(&self, g: &[ExactRat]) -> Result<Vec<ExactRat>> {
        self.reversed().invert(g)
    }

    fn check_total(&self, f: &[ExactRat]) -> Result<()> {
        if f.len() != self.len() {
            return Err(Error::invalid(format!(
                "function has {} values but the poset has {} elements",
                f.len(),
                self.len()
            )));
        }
        Ok(())
    }

    /// A function given as `{"label": "p/q", ...}`; every element required.
    pub fn function_from_json(&self, value: &Value) -> Result<Vec<ExactRat>> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("function JSON must be an object".into()))?;
        self.labels
            .iter()
            .map(|l| {
                let v = obj
                    .get(l)
                    .ok_or_else(|| Error::Parse(format!("missing value for {l}")))?;
                crate::exact::parse_rat(&json_label(v))
            })
            .collect()
    }

    pub fn function_to_json(&self, f: &[ExactRat]) -> Value {
        let map: serde_json::Map<String, Value> = self
            .labels
            .iter()
            .zip(f)
            .map(|(l, v)| (l.clone(), Value::String(format_rat(v))))
            .collect();
        Value::Object(map)
    }
}

fn json_label(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `{1,3}` for the bitmask `0b101`.
fn subset_label(mask: usize, n: usize) -> String {
    let items: Vec<String> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// A function on comparable pairs `(x, y)` with `x <= y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceFunction {
    values: HashMap<(usize, usize), ExactRat>,
}

impl IncidenceFunction {
    pub fn get(&self, x: usize, y: usize) -> Option<&ExactRat> {
        self.values.get(&(x, y))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pairs sorted by index.
    pub fn entries(&self) -> Vec<((usize, usize), &ExactRat)> {
        let mut v: Vec<_> = self.values.iter().map(|(k, v)| (*k, v)).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    pub fn to_json(&self, poset: &FinitePoset) -> Value {
        let rows: Vec<Value> = self
            .entries()
            .into_iter()
            .map(|((x, y), v)| json!([poset.labels[x], poset.labels[y], format_rat(v)]))
            .collect();
        Value::Array(rows)
    }
}

/// `(-1)^{|B| - |A|}` on the boolean lattice, for comparison with the
/// generic recursion.
pub fn boolean_mobius_closed(a: usize, b: usize) -> ExactRat {
    let diff = (b & !a).count_ones();
    rat_int(if diff % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn chain(n: usize) -> FinitePoset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<_> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        FinitePoset::new(labels, &pairs).unwrap()
    }

    #[test]
    fn mobius_examples() {
        let c = chain(2);
        assert_eq!(c.mobius().get(0, 1), Some(&rat_int(-1)));

        let b2 = FinitePoset::boolean_lattice(2).unwrap();
        assert_eq!(b2.mobius().get(0, 3), Some(&rat_int(1)));

        let d12 = FinitePoset::divisor_poset(12).unwrap();
        let mu = d12.mobius();
        let i = |s: &str| d12.index_of(s).unwrap();
        assert_eq!(mu.get(i("1"), i("12")), Some(&rat_int(0)));
        assert_eq!(mu.get(i("2"), i("12")), Some(&rat_int(1)));
        assert_eq!(mu.get(i("1"), i("6")), Some(&rat_int(1)));
        assert_eq!(mu.get(i("2"), i("3")), None);

        let d30 = FinitePoset::divisor_poset(30).unwrap();
        assert_eq!(
            d30.mobius().get(d30.index_of("1").unwrap(), d30.index_of("30").unwrap()),
            Some(&rat_int(-1))
        );
    }

    #[test]
    fn boolean_closed_form() {
        for n in 0..=6 {
            let b = FinitePoset::boolean_lattice(n).unwrap();
            assert_eq!(b.len(), 1 << n);
            let mu = b.mobius();
            for ((x, y), v) in mu.entries() {
                assert_eq!(v, &boolean_mobius_closed(x, y));
            }
            assert_eq!(mu.len(), 3usize.pow(n as u32));
        }
        assert!(FinitePoset::boolean_lattice(13).is_err());
    }

    #[test]
    fn zeta_and_delta() {
        let b3 = FinitePoset::boolean_lattice(3).unwrap();
        let z = b3.zeta();
        for x in 0..8 {
            assert_eq!(z.get(x, x), Some(&rat_int(1)));
        }
        assert!(b3.delta_check());
        assert!(b3.mobius_conditions_hold(&b3.mobius()));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let p = FinitePoset::random(&mut rng, 6, 0.4);
            assert!(p.validate().is_ok());
            assert!(p.delta_check());
            assert!(p.mobius_conditions_hold(&p.mobius()));
        }
    }

    #[test]
    fn inversion() {
        // surjections from a 3-set onto subsets of {1,2}
        let b2 = FinitePoset::boolean_lattice(2).unwrap();
        let g: Vec<ExactRat> = (0..4usize).map(|m| rat_int(m.count_ones().pow(3))).collect();
        let f = b2.invert(&g).unwrap();
        assert_eq!(f[3], rat_int(6));
        assert_eq!(b2.accumulate(&f).unwrap(), g);

        // permutations of 4 points fixing exactly {1}
        let b4 = FinitePoset::boolean_lattice(4).unwrap();
        let g: Vec<ExactRat> = (0..16usize)
            .map(|m| rat_int(crate::exact::factorial(4 - m.count_ones() as u64)))
            .collect();
        let f = b4.invert_dual(&g).unwrap();
        assert_eq!(f[0b0001], rat_int(2));
        assert_eq!(f[0], rat_int(9));
        assert_eq!(b4.accumulate_dual(&f).unwrap(), g);

        // delta at the bottom
        let delta: Vec<ExactRat> = (0..4).map(|i| rat_int(i32::from(i == 0))).collect();
        assert_eq!(b2.invert(&b2.accumulate(&delta).unwrap()).unwrap(), delta);

        // constant on a 3-chain telescopes
        let c = chain(3);
        let f = c.invert(&[rat(5, 1), rat(5, 1), rat(5, 1)]).unwrap();
        assert_eq!(f, vec![rat(5, 1), rat(0, 1), rat(0, 1)]);
        let f = c.invert_dual(&[rat(1, 2), rat(1, 3), rat(1, 4)]).unwrap();
        assert_eq!(f, vec![rat(1, 6), rat(1, 12), rat(1, 4)]);
        assert!(c.invert(&[rat(1, 1)]).is_err());
        let _ = int(0);
    }

    #[test]
    fn axiom_violations() {
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let err = FinitePoset::new(labels.clone(), &[(0, 1), (1, 2)]).unwrap_err();
        assert!(matches!(err, Error::NotPoset { axiom: "transitivity", .. }));
        assert!(err.to_string().contains("a <= b and b <= c but not a <= c"));
        let err = FinitePoset::new(labels, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotPoset { axiom: "antisymmetry", .. }));
    }

    #[test]
    fn json_io() {
        let v = json!({"elements": ["x", "y", 3], "leq": [["x", "y"], ["x", 3], ["y", "y"]]});
        let p = FinitePoset::from_json(&v).unwrap();
        assert!(p.leq(0, 1) && p.leq(0, 2) && !p.leq(1, 2));
        let again = FinitePoset::from_json(&p.to_json()).unwrap();
        assert_eq!(again, p);
        let mu = p.mobius();
        assert_eq!(mu.get(0, 2), Some(&rat_int(-1)));
        let f = p.function_from_json(&json!({"x": "1/2", "y": 3, "3": "0"})).unwrap();
        assert_eq!(f, vec![rat(1, 2), rat(3, 1), rat(0, 1)]);
        assert_eq!(p.function_to_json(&f), json!({"x": "1/2", "y": "3", "3": "0"}));
        assert!(FinitePoset::from_json(&json!({"elements": ["a"], "leq": [["a", "b"]]})).is_err());
        assert!(FinitePoset::from_json(&json!({"elements": ["a", "a"]})).is_err());
    }
}
