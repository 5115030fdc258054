//! Exact enumerative combinatorics.
//!
//! Every count and probability in this crate is an arbitrary-precision
//! integer or reduced rational. Closed forms and recursions live in
//! [`counting`], generating series in [`series`] and [`recursive_matrix`],
//! and every formula has a brute-force counterpart in [`enumeration`].
//! The [`verify`] module runs the full cross-check suite.

pub mod counting;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod number_theory;
pub mod par;
pub mod poly;
pub mod poset;
pub mod recursive_matrix;
pub mod series;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRat};
