//! Mobile posets: a border strip whose cells may each cover the maximal
//! element of any number of hanging posets (rooted trees or straight shapes).
//!
//! On the strip the inner corners are maximal: `(i,j+1) ⋖ (i,j)` and
//! `(i+1,j) ⋖ (i,j)` whenever both cells lie in the strip. Young-diagram
//! hangings use the same orientation, so `(1,1)` is their maximum.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poset::{LabeledPoset, Poset};
use crate::shapes::{Cell, CornerRemoval, Partition, SkewShape};

/// Rooted tree on nodes `0..len`, ordered with the root on top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
}

impl RootedTree {
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if parent.iter().filter(|p| p.is_none()).count() != 1 {
            return Err(Error::InvalidTree("exactly one root is required"));
        }
        if parent.iter().flatten().any(|&p| p >= n) {
            return Err(Error::InvalidTree("parent index out of range"));
        }
        for start in 0..n {
            let mut x = start;
            for _ in 0..=n {
                match parent[x] {
                    Some(p) => x = p,
                    None => break,
                }
            }
            if parent[x].is_some() {
                return Err(Error::InvalidTree("parent links contain a cycle"));
            }
        }
        Ok(RootedTree { parent })
    }

    /// Entry `k` is the 1-based parent of node `k + 1`; `0` marks the root.
    pub fn from_markers(markers: &[usize]) -> Result<Self> {
        let parent = markers.iter().map(|&m| m.checked_sub(1)).collect();
        RootedTree::from_parents(parent)
    }

    pub fn to_markers(&self) -> Vec<usize> {
        self.parent.iter().map(|p| p.map_or(0, |x| x + 1)).collect()
    }

    /// `k` nodes in a chain, node `0` on top.
    pub fn chain(k: usize) -> Self {
        let parent = (0..k).map(|i| i.checked_sub(1)).collect();
        RootedTree::from_parents(parent).expect("k ≥ 1")
    }

    /// A root with `leaves` children.
    pub fn claw(leaves: usize) -> Self {
        let parent = core::iter::once(None)
            .chain((0..leaves).map(|_| Some(0)))
            .collect();
        RootedTree { parent }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn root(&self) -> usize {
        self.parent
            .iter()
            .position(Option::is_none)
            .expect("validated")
    }

    pub fn children(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.parent[y] == Some(x))
            .collect()
    }

    /// Hook of each node: the size of its subtree.
    pub fn subtree_sizes(&self) -> Vec<u32> {
        let mut size = vec![1u32; self.len()];
        for x in self.postorder() {
            if let Some(p) = self.parent[x] {
                size[p] += size[x];
            }
        }
        size
    }

    /// Children (in index order) before parents; every subtree is a
    /// contiguous block.
    pub fn postorder(&self) -> Vec<usize> {
        fn visit(t: &RootedTree, x: usize, out: &mut Vec<usize>) {
            for c in t.children(x) {
                visit(t, c, out);
            }
            out.push(x);
        }
        let mut out = Vec::with_capacity(self.len());
        visit(self, self.root(), &mut out);
        out
    }
}

/// A poset hung below a strip cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HangingPoset {
    Tree(RootedTree),
    /// Young diagram poset of a nonempty partition; local node `k` is the
    /// `k`-th cell in row-major order.
    Shape(Partition),
}

impl HangingPoset {
    pub fn chain(k: usize) -> Self {
        HangingPoset::Tree(RootedTree::chain(k))
    }

    pub fn shape(parts: &[u32]) -> Result<Self> {
        let p = Partition::new(parts.to_vec())?;
        if p.is_empty() {
            return Err(Error::NotAPartition(Vec::new()));
        }
        Ok(HangingPoset::Shape(p))
    }

    pub fn len(&self) -> usize {
        match self {
            HangingPoset::Tree(t) => t.len(),
            HangingPoset::Shape(p) => p.size() as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_tree(&self) -> bool {
        matches!(self, HangingPoset::Tree(_))
    }

    /// Local index of the unique maximal element.
    pub fn maximum(&self) -> usize {
        match self {
            HangingPoset::Tree(t) => t.root(),
            HangingPoset::Shape(_) => 0,
        }
    }

    /// Local `(lower, upper)` covers.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        match self {
            HangingPoset::Tree(t) => (0..t.len())
                .filter_map(|x| t.parent(x).map(|p| (x, p)))
                .collect(),
            HangingPoset::Shape(p) => {
                let cells = p.cells();
                let index = |c: Cell| cells.binary_search(&c).ok();
                let mut out = Vec::new();
                for (k, &c) in cells.iter().enumerate() {
                    for below in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                        if let Some(b) = index(below) {
                            out.push((b, k));
                        }
                    }
                }
                out
            }
        }
    }

    /// Hook lengths by local index.
    pub fn hooks(&self) -> Vec<u32> {
        match self {
            HangingPoset::Tree(t) => t.subtree_sizes(),
            HangingPoset::Shape(p) => p.hooks(),
        }
    }

    /// Local indices in the order they receive labels `1, 2, …` under the
    /// natural labeling used for mobiles: postorder for trees, rows bottom to
    /// top (right to left within a row) for shapes.
    pub fn natural_order(&self) -> Vec<usize> {
        match self {
            HangingPoset::Tree(t) => t.postorder(),
            HangingPoset::Shape(p) => (0..p.size() as usize).rev().collect(),
        }
    }

    pub fn poset(&self) -> Poset {
        Poset::new(self.len(), self.covers()).expect("trees and shapes are acyclic")
    }

    /// The hanging with its natural labeling.
    pub fn labeled(&self) -> LabeledPoset {
        let mut labels = vec![0; self.len()];
        for (i, x) in self.natural_order().into_iter().enumerate() {
            labels[x] = i as u32 + 1;
        }
        LabeledPoset::new(self.poset(), labels).expect("bijective")
    }
}

impl fmt::Display for HangingPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HangingPoset::Tree(t) => write!(f, "tree{:?}", t.to_markers()),
            HangingPoset::Shape(p) => write!(f, "shape{p}"),
        }
    }
}

/// An element of a mobile poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Strip(Cell),
    /// Node `node` of the `index`-th hanging attached at `at`.
    Hanging {
        at: Cell,
        index: usize,
        node: usize,
    },
}

/// How strip labels and hanging labels are interleaved. All three are
/// reversed Schur on the strip and natural on each hanging.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Interleaving {
    /// Columns right to left; in each column, the hangings of its cells (top
    /// cell first), then its strip cells top to bottom.
    #[default]
    ColumnSweep,
    /// Every hanging label below every strip label.
    HangingsFirst,
    /// Every strip label below every hanging label.
    StripFirst,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MobilePoset {
    strip: SkewShape,
    hangings: BTreeMap<Cell, Vec<HangingPoset>>,
}

/// `P ∖ u` for an inner corner `u`, split into its three parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobileSplit {
    pub removal: CornerRemoval,
    /// Mobile on the strip piece with contents below `c(u)`.
    pub left: Option<MobilePoset>,
    /// Mobile on the strip piece with contents above `c(u)`.
    pub right: Option<MobilePoset>,
    /// Hangings attached at `u` itself.
    pub corner_hangings: Vec<HangingPoset>,
}

impl MobilePoset {
    pub fn new<I>(strip: SkewShape, hangings: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Cell, HangingPoset)>,
    {
        if !strip.is_border_strip() {
            return Err(Error::NotBorderStrip);
        }
        let mut map: BTreeMap<Cell, Vec<HangingPoset>> = BTreeMap::new();
        for (at, h) in hangings {
            if !strip.contains(at) {
                return Err(Error::HangingOutsideStrip(at));
            }
            map.entry(at).or_default().push(h);
        }
        Ok(MobilePoset {
            strip,
            hangings: map,
        })
    }

    pub fn bare(strip: SkewShape) -> Result<Self> {
        MobilePoset::new(strip, [])
    }

    pub fn strip(&self) -> &SkewShape {
        &self.strip
    }

    pub fn outer(&self) -> &Partition {
        self.strip.outer()
    }

    pub fn hangings(&self) -> &BTreeMap<Cell, Vec<HangingPoset>> {
        &self.hangings
    }

    pub fn hangings_at(&self, cell: Cell) -> &[HangingPoset] {
        self.hangings.get(&cell).map_or(&[], Vec::as_slice)
    }

    pub fn strip_size(&self) -> usize {
        self.strip.size() as usize
    }

    /// Total number of hanging elements.
    pub fn hanging_size(&self) -> usize {
        self.hangings
            .values()
            .flatten()
            .map(HangingPoset::len)
            .sum()
    }

    pub fn len(&self) -> usize {
        self.strip_size() + self.hanging_size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `p_{a,b}`: total size hanging at one cell.
    pub fn load(&self, cell: Cell) -> u64 {
        self.hangings_at(cell).iter().map(|h| h.len() as u64).sum()
    }

    /// Total size hanging at strip cells in column `col`.
    pub fn column_load(&self, col: u32) -> u64 {
        self.hangings
            .iter()
            .filter(|(c, _)| c.col == col)
            .map(|(&c, _)| self.load(c))
            .sum()
    }

    /// Total size hanging in columns `≥ col`.
    pub fn suffix_load(&self, col: u32) -> u64 {
        self.hangings
            .keys()
            .filter(|c| c.col >= col)
            .map(|&c| self.load(c))
            .sum()
    }

    /// `Σ p_{a,b}` over cells with `a ≥ i` and `b ≥ j`.
    pub fn region_load(&self, u: Cell) -> u64 {
        self.hangings
            .keys()
            .filter(|c| c.row >= u.row && c.col >= u.col)
            .map(|&c| self.load(c))
            .sum()
    }

    pub fn is_tree_mobile(&self) -> bool {
        self.hangings.values().flatten().all(HangingPoset::is_tree)
    }

    /// `h'(u) = h_λ(u) + Σ_{a≥i, b≥j} p_{a,b}` for `u ∈ [λ]`.
    pub fn modified_hook(&self, u: Cell) -> Result<u64> {
        let h = self.outer().hook(u)?;
        Ok(u64::from(h) + self.region_load(u))
    }

    /// Hook lengths of every hanging element, sorted.
    pub fn hanging_hooks(&self) -> Vec<u32> {
        let mut hooks: Vec<u32> = self
            .hangings
            .values()
            .flatten()
            .flat_map(|h| h.hooks())
            .collect();
        hooks.sort_unstable();
        hooks
    }

    /// `H(𝐩)`: product of all hanging hook lengths.
    pub fn hanging_hook_product(&self) -> BigUint {
        self.hanging_hooks()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, h| acc * h)
    }

    /// Strip cells grouped by column, columns right to left, each column top
    /// to bottom.
    fn columns(&self) -> Vec<Vec<Cell>> {
        let mut cols: BTreeMap<u32, Vec<Cell>> = BTreeMap::new();
        for c in self.strip.cells() {
            cols.entry(c.col).or_default().push(c);
        }
        cols.into_values().rev().collect()
    }

    fn hanging_elements(&self, at: Cell, out: &mut Vec<Element>) {
        for (index, h) in self.hangings_at(at).iter().enumerate() {
            out.extend(h.natural_order().into_iter().map(|node| Element::Hanging {
                at,
                index,
                node,
            }));
        }
    }

    /// All elements, indexed as in [`MobilePoset::to_poset`]. The order is
    /// the column sweep, which is also the label order of the reversed Schur
    /// labeling.
    pub fn elements(&self) -> Vec<Element> {
        self.elements_in(Interleaving::ColumnSweep)
    }

    fn elements_in(&self, mode: Interleaving) -> Vec<Element> {
        let columns = self.columns();
        let mut strip = Vec::new();
        let mut hanging = Vec::new();
        let mut sweep = Vec::new();
        for column in &columns {
            for &c in column {
                self.hanging_elements(c, &mut hanging);
                self.hanging_elements(c, &mut sweep);
            }
            strip.extend(column.iter().map(|&c| Element::Strip(c)));
            sweep.extend(column.iter().map(|&c| Element::Strip(c)));
        }
        match mode {
            Interleaving::ColumnSweep => sweep,
            Interleaving::HangingsFirst => hanging.into_iter().chain(strip).collect(),
            Interleaving::StripFirst => strip.into_iter().chain(hanging).collect(),
        }
    }

    /// Index of a strip cell among [`MobilePoset::elements`].
    pub fn strip_element(&self, cell: Cell) -> Option<usize> {
        self.elements()
            .iter()
            .position(|&e| e == Element::Strip(cell))
    }

    pub fn to_poset(&self) -> Poset {
        let elements = self.elements();
        let index: BTreeMap<Element, usize> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut covers = Vec::new();
        for c in self.strip.cells() {
            let upper = index[&Element::Strip(c)];
            for below in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                if self.strip.contains(below) {
                    covers.push((index[&Element::Strip(below)], upper));
                }
            }
            for (i, h) in self.hangings_at(c).iter().enumerate() {
                let node = |node| {
                    index[&Element::Hanging {
                        at: c,
                        index: i,
                        node,
                    }]
                };
                covers.push((node(h.maximum()), upper));
                covers.extend(h.covers().into_iter().map(|(x, y)| (node(x), node(y))));
            }
        }
        Poset::new(elements.len(), covers).expect("mobiles are acyclic")
    }

    pub fn labeling(&self, mode: Interleaving) -> LabeledPoset {
        let index: BTreeMap<Element, usize> = self
            .elements()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut labels = vec![0; index.len()];
        for (l, e) in self.elements_in(mode).into_iter().enumerate() {
            labels[index[&e]] = l as u32 + 1;
        }
        LabeledPoset::new(self.to_poset(), labels).expect("bijective")
    }

    /// Labels decrease along the strip from its bottom-left end to its
    /// top-right end; each hanging is labeled naturally.
    pub fn reversed_schur_labeling(&self) -> LabeledPoset {
        self.labeling(Interleaving::ColumnSweep)
    }

    /// The inversion labeling of a mobile tree poset. On strip cells it
    /// satisfies `ω_inv(x) = ω_strip(x) + Σ_{b ≥ x_2} p_{a,b}`.
    pub fn omega_inv_labeling(&self) -> Result<LabeledPoset> {
        if !self.is_tree_mobile() {
            return Err(Error::NonTreeHanging);
        }
        Ok(self.labeling(Interleaving::ColumnSweep))
    }

    /// Removes inner corner `u`; hangings follow their cells.
    pub fn remove_corner(&self, u: Cell) -> Result<MobileSplit> {
        let removal = self.strip.remove_inner_corner(u)?;
        let piece = |shape: &SkewShape| -> Result<Option<MobilePoset>> {
            if shape.is_empty() {
                return Ok(None);
            }
            let hangings = self
                .hangings
                .iter()
                .filter(|(c, _)| shape.contains(**c))
                .flat_map(|(&c, hs)| hs.iter().map(move |h| (c, h.clone())));
            MobilePoset::new(shape.clone(), hangings).map(Some)
        };
        Ok(MobileSplit {
            left: piece(&removal.left)?,
            right: piece(&removal.right)?,
            corner_hangings: self.hangings_at(u).to_vec(),
            removal,
        })
    }
}

impl MobileSplit {
    /// `|P_{λ/ν¹}|`, hangings included.
    pub fn left_size(&self) -> usize {
        self.left.as_ref().map_or(0, MobilePoset::len)
    }
}

impl fmt::Display for MobilePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.strip)?;
        for (at, hs) in &self.hangings {
            for h in hs {
                write!(f, " + {h}@{at}")?;
            }
        }
        Ok(())
    }
}

/// Diagram poset of any skew shape with the reversed Schur labeling: labels
/// run down each column, columns taken right to left.
pub fn diagram_poset(shape: &SkewShape) -> LabeledPoset {
    let mut cells = shape.cells();
    cells.sort_by_key(|c| (core::cmp::Reverse(c.col), c.row));
    let mut covers = Vec::new();
    for (k, c) in cells.iter().enumerate() {
        for below in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
            if let Some(b) = cells.iter().position(|&x| x == below) {
                covers.push((b, k));
            }
        }
    }
    let poset = Poset::new(cells.len(), covers).expect("diagram order is acyclic");
    LabeledPoset::identity(poset)
}

/// Strip `(2,2,2,1)/(1,1)` with a `(2,2)` shape hanging at `(2,2)` and at
/// `(4,1)`; 13 elements.
pub fn major_example() -> MobilePoset {
    let strip = SkewShape::from_parts(&[2, 2, 2, 1], &[1, 1]).expect("valid");
    let square = HangingPoset::shape(&[2, 2]).expect("valid");
    MobilePoset::new(
        strip,
        [(Cell::new(2, 2), square.clone()), (Cell::new(4, 1), square)],
    )
    .expect("valid")
}

/// Same strip with a root-and-two-leaves tree at `(2,2)` and at `(4,1)`;
/// 11 elements.
pub fn inversion_example() -> MobilePoset {
    let strip = SkewShape::from_parts(&[2, 2, 2, 1], &[1, 1]).expect("valid");
    let y = HangingPoset::Tree(RootedTree::claw(2));
    MobilePoset::new(strip, [(Cell::new(2, 2), y.clone()), (Cell::new(4, 1), y)]).expect("valid")
}
