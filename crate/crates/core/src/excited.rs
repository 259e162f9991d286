//! Excited diagrams of a skew shape together with their broken diagonals.
//!
//! An excited diagram starts as `[μ] ⊆ [λ]`; an active cell `(i,j)` may
//! slide to `(i+1,j+1)`. Each diagram carries a companion set `Br(D)` of
//! broken-diagonal cells whose hook sums give the exponents `w(D)`, `w'(D)`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExcitedDiagram {
    cells: BTreeSet<Cell>,
    broken: BTreeSet<Cell>,
}

impl ExcitedDiagram {
    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn broken(&self) -> &BTreeSet<Cell> {
        &self.broken
    }

    /// Cells of `[λ] ∖ D`.
    pub fn complement(&self, outer: &Partition) -> Vec<Cell> {
        outer
            .cells()
            .into_iter()
            .filter(|c| !self.cells.contains(c))
            .collect()
    }

    /// Cells `(i,j) ∈ D` with `(i+1,j)`, `(i,j+1)`, `(i+1,j+1)` outside `D`
    /// and `(i+1,j+1)` inside `[λ]`.
    pub fn active_cells(&self, outer: &Partition) -> Vec<Cell> {
        self.cells
            .iter()
            .copied()
            .filter(|&c| {
                let target = Cell::new(c.row + 1, c.col + 1);
                outer.contains(target)
                    && !self.cells.contains(&target)
                    && !self.cells.contains(&Cell::new(c.row + 1, c.col))
                    && !self.cells.contains(&Cell::new(c.row, c.col + 1))
            })
            .collect()
    }

    /// Slides the active cell `u = (i,j)` to `(i+1,j+1)`; the broken diagonal
    /// at `(i+1,j+1)` moves to `(i+1,j)`.
    pub fn excited_move(&self, outer: &Partition, u: Cell) -> Result<ExcitedDiagram> {
        if !self.active_cells(outer).contains(&u) {
            return Err(Error::NotActive(u));
        }
        let target = Cell::new(u.row + 1, u.col + 1);
        let mut cells = self.cells.clone();
        cells.remove(&u);
        cells.insert(target);
        let mut broken = self.broken.clone();
        broken.remove(&target);
        broken.insert(Cell::new(u.row + 1, u.col));
        Ok(ExcitedDiagram { cells, broken })
    }

    /// `Σ_{u ∈ Br(D)} hook(u)` for the supplied hook function.
    pub fn w_stat<F: Fn(Cell) -> u64>(&self, hook: F) -> u64 {
        self.broken.iter().map(|&c| hook(c)).sum()
    }

    /// `p_D = Σ_{(i,j)∈[λ]∖D} f(j) − Σ_{(i,j)∈[λ/μ]} f(j)`, where `f(j)` is
    /// the total size hanging in columns `≥ j`. Equivalently
    /// `Σ_{[μ]∖D} f(j) − Σ_{D∖[μ]} f(j)`: each slid cell contributes the load
    /// of the columns it passed over.
    pub fn p_d<F: Fn(u32) -> u64>(&self, inner: &Partition, suffix_load: F) -> u64 {
        let vacated: u64 = inner
            .cells()
            .into_iter()
            .filter(|c| !self.cells.contains(c))
            .map(|c| suffix_load(c.col))
            .sum();
        let entered: u64 = self
            .cells
            .iter()
            .filter(|c| !inner.contains(**c))
            .map(|c| suffix_load(c.col))
            .sum();
        vacated - entered
    }
}

/// The diagram `[μ]` and its broken diagonals: the cells `(i,j)` of `λ/μ`
/// with `i − j = t − μ_t` for some `1 ≤ t ≤ ℓ(λ)`.
pub fn initial_diagram(shape: &SkewShape) -> ExcitedDiagram {
    let (outer, inner) = (shape.outer(), shape.inner());
    let diagonals: BTreeSet<i64> = (1..=outer.len())
        .map(|t| i64::from(t) - i64::from(inner.part(t)))
        .collect();
    let broken = shape
        .cells()
        .into_iter()
        .filter(|c| diagonals.contains(&-c.content()))
        .collect();
    ExcitedDiagram {
        cells: inner.cells().into_iter().collect(),
        broken,
    }
}

/// All excited diagrams of `λ/μ`, sorted by their (sorted) cell sets.
pub fn enumerate(shape: &SkewShape) -> Vec<ExcitedDiagram> {
    let outer = shape.outer();
    let start = initial_diagram(shape);
    let mut seen: BTreeMap<Vec<Cell>, ExcitedDiagram> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        let key: Vec<Cell> = d.cells.iter().copied().collect();
        if seen.contains_key(&key) {
            continue;
        }
        for u in d.active_cells(outer) {
            let next = d.excited_move(outer, u).expect("active cell");
            queue.push_back(next);
        }
        seen.insert(key, d);
    }
    seen.into_values().collect()
}
