//! Finite posets given by cover relations, and labeled posets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Poset on elements `0..n` described by its cover relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `(lower, upper)` pairs.
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds the poset generated by `covers` (pairs `(x, y)` meaning
    /// `x < y`). Redundant pairs are allowed; cycles are not.
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(x, y) in &covers {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset("cover refers to a missing element"));
            }
            if x == y {
                return Err(Error::InvalidPoset("element covers itself"));
            }
            lower[y].push(x);
            upper[x].push(y);
        }
        let poset = Poset {
            n,
            covers,
            lower,
            upper,
        };
        if poset.topological_order().len() != n {
            return Err(Error::InvalidPoset("cover relations contain a cycle"));
        }
        Ok(poset)
    }

    pub fn antichain(n: usize) -> Self {
        Poset::new(n, Vec::new()).expect("no relations")
    }

    pub fn chain(n: usize) -> Self {
        Poset::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("acyclic")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements directly below `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.upper[x].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.lower[x].is_empty()).collect()
    }

    /// Kahn's algorithm; shorter than `n` iff there is a cycle.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.lower.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..self.n).rev().filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(x) = ready.pop() {
            order.push(x);
            for &y in &self.upper[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.push(y);
                }
            }
        }
        order
    }

    /// `below[y][x]` is true iff `x < y` strictly.
    pub fn strict_order(&self) -> Vec<Vec<bool>> {
        let mut below = vec![vec![false; self.n]; self.n];
        for y in self.topological_order() {
            for &x in &self.lower[y] {
                below[y][x] = true;
                let reach = below[x].clone();
                for (slot, r) in below[y].iter_mut().zip(reach) {
                    *slot |= r;
                }
            }
        }
        below
    }

    /// Subposet induced on `keep` (element `keep[i]` becomes `i`).
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let below = self.strict_order();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let mut covers = Vec::new();
        for (j, &y) in keep.iter().enumerate() {
            for (i, &x) in keep.iter().enumerate() {
                if !below[y][x] {
                    continue;
                }
                let has_middle = keep.iter().any(|&z| below[y][z] && below[z][x]);
                if !has_middle {
                    covers.push((i, j));
                }
            }
        }
        Poset::new(keep.len(), covers).expect("induced order is acyclic")
    }

    /// Disjoint union; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_sum(&self, other: &Poset) -> Poset {
        let shift = self.n;
        let covers = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(x, y)| (x + shift, y + shift)))
            .collect();
        Poset::new(self.n + other.n, covers).expect("both summands are acyclic")
    }
}

/// Poset together with a bijective labeling `ω: P → {1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    poset: Poset,
    labels: Vec<u32>,
}

impl LabeledPoset {
    pub fn new(poset: Poset, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != poset.len() {
            return Err(Error::InvalidLabeling("one label per element is required"));
        }
        let mut seen = vec![false; labels.len()];
        for &l in &labels {
            let slot = (l as usize)
                .checked_sub(1)
                .and_then(|i| seen.get_mut(i))
                .ok_or(Error::InvalidLabeling("labels must be 1..=n"))?;
            if *slot {
                return Err(Error::InvalidLabeling("labels must be distinct"));
            }
            *slot = true;
        }
        Ok(LabeledPoset { poset, labels })
    }

    /// Labels each element by its index plus one.
    pub fn identity(poset: Poset) -> Self {
        let labels = (1..=poset.len() as u32).collect();
        LabeledPoset { poset, labels }
    }

    /// Some natural labeling: labels follow a topological order.
    pub fn natural(poset: Poset) -> Self {
        let mut labels = vec![0; poset.len()];
        for (i, x) in poset.topological_order().into_iter().enumerate() {
            labels[x] = i as u32 + 1;
        }
        LabeledPoset { poset, labels }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> u32 {
        self.labels[x]
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Element carrying label `l`.
    pub fn element_with_label(&self, l: u32) -> Option<usize> {
        self.labels.iter().position(|&x| x == l)
    }

    /// Every cover `x ⋖ y` has `ω(x) < ω(y)`.
    pub fn is_natural(&self) -> bool {
        self.poset
            .covers()
            .iter()
            .all(|&(x, y)| self.labels[x] < self.labels[y])
    }

    /// `inv(P, ω) = #{(x, y) : x < y, ω(x) > ω(y)}`.
    pub fn inversions(&self) -> usize {
        let below = self.poset.strict_order();
        (0..self.len())
            .map(|y| {
                (0..self.len())
                    .filter(|&x| below[y][x] && self.labels[x] > self.labels[y])
                    .count()
            })
            .sum()
    }

    /// Restriction to `keep`, with labels standardized to `1..=keep.len()`
    /// preserving their relative order.
    pub fn induced(&self, keep: &[usize]) -> LabeledPoset {
        let poset = self.poset.induced(keep);
        let raw: Vec<u32> = keep.iter().map(|&x| self.labels[x]).collect();
        LabeledPoset {
            poset,
            labels: standardize(&raw),
        }
    }

    /// Restriction to every element except `x`.
    pub fn without(&self, x: usize) -> LabeledPoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&y| y != x).collect();
        self.induced(&keep)
    }

    /// Disjoint union where every label of `other` exceeds every label of
    /// `self`.
    pub fn stacked_sum(&self, other: &LabeledPoset) -> LabeledPoset {
        let shift = self.len() as u32;
        let labels = self
            .labels
            .iter()
            .copied()
            .chain(other.labels.iter().map(|&l| l + shift))
            .collect();
        LabeledPoset {
            poset: self.poset.disjoint_sum(&other.poset),
            labels,
        }
    }

    pub fn with_labels(&self, labels: Vec<u32>) -> Result<LabeledPoset> {
        LabeledPoset::new(self.poset.clone(), labels)
    }
}

/// Replaces distinct values by their ranks `1..=len`.
pub fn standardize(values: &[u32]) -> Vec<u32> {
    let mut sorted: Vec<u32> = values.to_vec();
    sorted.sort_unstable();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("present") as u32 + 1)
        .collect()
}
