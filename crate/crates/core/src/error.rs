use alloc::vec::Vec;

use thiserror::Error;

use crate::shapes::Cell;

/// Everything that can go wrong inside the core crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("q-binomial [{n} choose {k}] is out of range")]
    BinomialRange { n: u32, k: u32 },
    #[error("{0:?} is not a weakly decreasing sequence of positive integers")]
    NotAPartition(Vec<u32>),
    #[error("inner partition is not contained in the outer partition")]
    NotContained,
    #[error("cell ({}, {}) lies outside the shape", .0.row, .0.col)]
    CellOutsideShape(Cell),
    #[error("shape is not a border strip")]
    NotBorderStrip,
    #[error("cell ({}, {}) is not an inner corner", .0.row, .0.col)]
    NotInnerCorner(Cell),
    #[error("cell ({}, {}) is not an active cell", .0.row, .0.col)]
    NotActive(Cell),
    #[error("invalid rooted tree: {0}")]
    InvalidTree(&'static str),
    #[error("hanging attached at ({}, {}), which is not a strip cell", .0.row, .0.col)]
    HangingOutsideStrip(Cell),
    #[error("operation requires every hanging poset to be a rooted tree")]
    NonTreeHanging,
    #[error("invalid poset: {0}")]
    InvalidPoset(&'static str),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(&'static str),
    #[error("poset of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
