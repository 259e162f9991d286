//! Exact hook-length formulas, and their `q`-analogues, for counting linear
//! extensions of mobile posets, plus brute-force oracles to check them.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod corpus;
pub mod error;
pub mod excited;
pub mod families;
pub mod formulas;
pub mod mobile;
pub mod oracle;
pub mod perm;
pub mod poset;
pub mod qseries;
pub mod shapes;

pub use error::{Error, Result};
pub use poset::{LabeledPoset, Poset};
pub use qseries::IntPoly;
pub use shapes::{Cell, Partition, SkewShape};
