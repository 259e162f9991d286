//! Partitions, skew diagrams and border strips.
//!
//! Cells use matrix coordinates: row 1 is the top row, column 1 the leftmost
//! column, and the content of `(i, j)` is `j - i`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A box `(row, col)` of a Young diagram, both coordinates 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    pub fn content(self) -> i64 {
        i64::from(self.col) - i64::from(self.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Integer partition `λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are accepted and dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_row` with 1-based rows; zero past the last part.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// `other ⊆ self` as diagrams.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|t| other.part(t) <= self.part(t))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
            .collect()
    }

    /// `h(i,j) = λ_i + λ'_j − i − j + 1`.
    pub fn hook(&self, cell: Cell) -> Result<u32> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideShape(cell));
        }
        let leg = (cell.row + 1..=self.len())
            .take_while(|&r| self.part(r) >= cell.col)
            .count() as u32;
        Ok(self.part(cell.row) - cell.col + leg + 1)
    }

    /// Hook lengths of all cells, row-major.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|c| self.part(c.row) + conj.part(c.col) + 1 - c.row - c.col)
            .collect()
    }

    /// `b(λ) = Σ_i (i − 1) λ_i`.
    pub fn b(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum()
    }

    fn with_part(&self, row: u32, value: u32) -> Vec<u32> {
        let mut parts = self.parts.clone();
        if parts.len() < row as usize {
            parts.resize(row as usize, 0);
        }
        parts[row as usize - 1] = value;
        parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions fitting in a `rows × cols` box, in lexicographic order.
pub fn partitions_in_box(rows: u32, cols: u32) -> Vec<Partition> {
    fn go(rows: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        if prefix.len() as u32 == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            go(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Skew diagram `[λ/μ] = [λ] ∖ [μ]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Result of removing an inner corner `u` from a border strip `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerRemoval {
    pub corner: Cell,
    /// `ν = μ + u`.
    pub nu: Partition,
    /// Component of `λ/ν` with contents below `c(u)`, as `λ/ν¹`.
    pub left: SkewShape,
    /// Component of `λ/ν` with contents above `c(u)`, as `λ/ν²`.
    pub right: SkewShape,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains_partition(&inner) {
            return Err(Error::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn from_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        SkewShape::new(
            Partition::new(outer.to_vec())?,
            Partition::new(inner.to_vec())?,
        )
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.outer.contains(cell) && !self.inner.contains(cell)
    }

    /// Cells of `[λ/μ]` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|i| {
                (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| Cell::new(i, j))
            })
            .collect()
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Edge-connectedness of the cell set; the empty shape is not connected.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for n in neighbours(c) {
                if self.contains(n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == cells.len()
    }

    fn has_square(&self) -> bool {
        self.cells().into_iter().any(|c| {
            self.contains(Cell::new(c.row + 1, c.col))
                && self.contains(Cell::new(c.row, c.col + 1))
                && self.contains(Cell::new(c.row + 1, c.col + 1))
        })
    }

    /// Nonempty, connected, and without a 2×2 block.
    pub fn is_border_strip(&self) -> bool {
        self.is_connected() && !self.has_square()
    }

    /// Cells with neither the cell above nor the cell to the left in the
    /// shape, sorted by decreasing content.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let mut corners: Vec<Cell> = self
            .cells()
            .into_iter()
            .filter(|c| {
                !self.contains(Cell::new(c.row.wrapping_sub(1), c.col))
                    && !self.contains(Cell::new(c.row, c.col.wrapping_sub(1)))
            })
            .collect();
        corners.sort_by_key(|c| core::cmp::Reverse(c.content()));
        corners
    }

    /// `con(λ/μ) = Σ c(i,j)` over the cells of the shape.
    pub fn con(&self) -> i64 {
        self.cells().into_iter().map(Cell::content).sum()
    }

    /// Cells of a border strip ordered by increasing content, i.e. along the
    /// strip from its bottom-left end to its top-right end.
    pub fn strip_path(&self) -> Result<Vec<Cell>> {
        if !self.is_border_strip() {
            return Err(Error::NotBorderStrip);
        }
        let mut cells = self.cells();
        cells.sort_by_key(|c| c.content());
        Ok(cells)
    }

    /// Removes the inner corner `corner` of a border strip, splitting the
    /// rest into the pieces below and above `c(u)` in content.
    pub fn remove_inner_corner(&self, corner: Cell) -> Result<CornerRemoval> {
        if !self.is_border_strip() {
            return Err(Error::NotBorderStrip);
        }
        if !self.inner_corners().contains(&corner) {
            return Err(Error::NotInnerCorner(corner));
        }
        let r = corner.row;
        let nu = Partition::new(self.inner.with_part(r, corner.col))?;
        let rows = self.outer.len();
        let nu1: Vec<u32> = (1..=rows)
            .map(|i| {
                if i <= r {
                    self.outer.part(i)
                } else {
                    nu.part(i)
                }
            })
            .collect();
        let nu2: Vec<u32> = (1..=rows)
            .map(|i| {
                if i <= r {
                    nu.part(i)
                } else {
                    self.outer.part(i)
                }
            })
            .collect();
        Ok(CornerRemoval {
            corner,
            left: SkewShape::new(self.outer.clone(), Partition::new(nu1)?)?,
            right: SkewShape::new(self.outer.clone(), Partition::new(nu2)?)?,
            nu,
        })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

fn neighbours(c: Cell) -> [Cell; 4] {
    [
        Cell::new(c.row.wrapping_sub(1), c.col),
        Cell::new(c.row + 1, c.col),
        Cell::new(c.row, c.col.wrapping_sub(1)),
        Cell::new(c.row, c.col + 1),
    ]
}

/// Every border strip `λ/μ` with `λ` inside a `rows × cols` box, ordered by
/// `(λ, μ)`.
pub fn border_strips_in_box(rows: u32, cols: u32) -> Vec<SkewShape> {
    let parts = partitions_in_box(rows, cols);
    let mut out = Vec::new();
    for outer in &parts {
        for inner in &parts {
            if let Ok(s) = SkewShape::new(outer.clone(), inner.clone()) {
                if s.is_border_strip() {
                    out.push(s);
                }
            }
        }
    }
    out
}
