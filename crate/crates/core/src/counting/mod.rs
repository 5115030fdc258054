//! Closed forms and recursions for every counted family.
//!
//! Where two computation routes exist (closed form and recursion, or two
//! closed forms) the public function uses one and checks the other in debug
//! builds; the alternate route is public as well so tests can compare them.
//!
//! Boundary conventions: `C(n, k) = 0` for `k > n`, `<0, k> = [k = 0]`,
//! `d_0 = 1`, and `0^0 = 1` inside surjection sums.

mod occupancy;
mod partitions;
mod permutations;
mod seating;
mod types;

pub use occupancy::*;
pub use partitions::*;
pub use permutations::*;
pub use seating::*;
pub use types::{GergonneQuery, TypeVector};
