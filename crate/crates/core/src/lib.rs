//! Exact sums over integer compositions.
//!
//! The crate computes `sum_{pi in C(n)} f_{|pi|} g_pi` and its relatives
//! with exact rational arithmetic, alongside the structures that organize
//! them: PI trees, restricted compositions, special sequences and iterated
//! (parenthesized) function compositions.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod compositions;
pub mod compsum;
pub mod error;
pub mod iterated;
pub mod pitree;
pub mod sequences;
pub mod verify;

pub use algebra::{Polynomial, Rational, Ring, Series};
pub use compositions::{Composition, PartSet};
pub use compsum::WeightSequence;
pub use error::{Error, Result};
pub use pitree::{InputSequence, PiNode};
