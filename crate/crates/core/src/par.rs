//! Data-parallel sweeps over independent cases.
//!
//! With the `parallel` feature (on by default) the sweeps run on the rayon
//! global pool; without it they run sequentially. Both variants are public
//! so benchmarks can compare them in one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_par<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

pub fn all_seq<F>(range: std::ops::Range<u64>, pred: F) -> bool
where
    F: Fn(u64) -> bool,
{
    range.into_iter().all(pred)
}

#[cfg(feature = "parallel")]
pub fn all_par<F>(range: std::ops::Range<u64>, pred: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    range.into_par_iter().all(pred)
}

/// True when `pred` holds on every value of `range`.
pub fn all<F>(range: std::ops::Range<u64>, pred: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        all_par(range, pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        all_seq(range, pred)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let v: Vec<u64> = (0..1000).collect();
        let out = map(v.clone(), |x| x * x);
        assert_eq!(out, map_seq(v, |x| x * x));
        assert_eq!(out[31], 961);
    }

    #[test]
    fn all_matches_sequential() {
        assert!(all(0..10_000, |x| x < 10_000));
        assert!(!all(0..10_000, |x| x != 4321));
        assert_eq!(all(0..100, |x| x % 7 != 3), all_seq(0..100, |x| x % 7 != 3));
    }
}
