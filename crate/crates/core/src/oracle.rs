//! Brute-force ground truth: linear extensions by backtracking, their `maj`
//! and `inv` generating polynomials, and truncated `(P,ω)`-partition series.
//!
//! A linear extension is reported as the word `ω∘f⁻¹`, i.e. the labels of the
//! elements listed from the bottom of the poset upward.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::LabeledPoset;
use crate::qseries::IntPoly;

pub const DEFAULT_CAP: usize = 16;
/// Largest truncation degree accepted by the P-partition enumerators.
pub const MAX_SERIES_DEGREE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    Maj,
    Inv,
}

/// Count together with both generating polynomials, from a single pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionStats {
    pub count: u64,
    pub maj: IntPoly,
    pub inv: IntPoly,
}

/// Enumerator with a size cap on the posets it accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    /// Caps above 63 are clamped, since state is kept in `u64` bitmasks.
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(63) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, p: &LabeledPoset) -> Result<()> {
        if p.len() > self.cap {
            return Err(Error::CapExceeded {
                size: p.len(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Calls `visit(word, maj, inv)` once per linear extension.
    pub fn for_each_extension<F>(&self, p: &LabeledPoset, mut visit: F) -> Result<()>
    where
        F: FnMut(&[u32], usize, usize),
    {
        self.check(p)?;
        let n = p.len();
        let lower_mask: Vec<u64> = (0..n)
            .map(|x| {
                p.poset()
                    .lower_covers(x)
                    .iter()
                    .fold(0u64, |m, &y| m | (1 << y))
            })
            .collect();
        let mut walker = Walker {
            n,
            lower_mask,
            labels: p.labels(),
            word: Vec::with_capacity(n),
            visit: &mut visit,
        };
        walker.walk(0, 0, 0, 0);
        Ok(())
    }

    pub fn extensions(&self, p: &LabeledPoset) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        self.for_each_extension(p, |w, _, _| out.push(w.to_vec()))?;
        Ok(out)
    }

    pub fn extension_count(&self, p: &LabeledPoset) -> Result<u64> {
        let mut count = 0;
        self.for_each_extension(p, |_, _, _| count += 1)?;
        Ok(count)
    }

    pub fn stats(&self, p: &LabeledPoset) -> Result<ExtensionStats> {
        let top = p.len() * p.len().saturating_sub(1) / 2;
        let mut maj = vec![0u64; top + 1];
        let mut inv = vec![0u64; top + 1];
        let mut count = 0;
        self.for_each_extension(p, |_, m, i| {
            count += 1;
            maj[m] += 1;
            inv[i] += 1;
        })?;
        Ok(ExtensionStats {
            count,
            maj: IntPoly::from_counts(&maj),
            inv: IntPoly::from_counts(&inv),
        })
    }

    /// `e_q^stat(P, ω)`.
    pub fn eq_stat(&self, p: &LabeledPoset, stat: Stat) -> Result<IntPoly> {
        self.eq_stat_filtered(p, stat, None)
    }

    /// Same sum restricted to extensions whose last letter is `ω(s)`.
    pub fn eq_stat_ending_at(&self, p: &LabeledPoset, stat: Stat, s: usize) -> Result<IntPoly> {
        if s >= p.len() {
            return Err(Error::InvalidPoset("element out of range"));
        }
        self.eq_stat_filtered(p, stat, Some(p.label(s)))
    }

    fn eq_stat_filtered(&self, p: &LabeledPoset, stat: Stat, last: Option<u32>) -> Result<IntPoly> {
        let top = p.len() * p.len().saturating_sub(1) / 2;
        let mut hist = vec![0u64; top + 1];
        self.for_each_extension(p, |w, m, i| {
            if last.is_none_or(|l| w.last() == Some(&l)) {
                hist[if stat == Stat::Maj { m } else { i }] += 1;
            }
        })?;
        Ok(IntPoly::from_counts(&hist))
    }
}

struct Walker<'a, F> {
    n: usize,
    lower_mask: Vec<u64>,
    labels: &'a [u32],
    word: Vec<u32>,
    visit: &'a mut F,
}

impl<F: FnMut(&[u32], usize, usize)> Walker<'_, F> {
    fn walk(&mut self, placed: u64, used_labels: u64, maj: usize, inv: usize) {
        if self.word.len() == self.n {
            (self.visit)(&self.word, maj, inv);
            return;
        }
        for x in 0..self.n {
            let bit = 1u64 << x;
            if placed & bit != 0 || self.lower_mask[x] & !placed != 0 {
                continue;
            }
            let l = self.labels[x];
            let larger_before = (used_labels >> l).count_ones() as usize;
            let descent = match self.word.last() {
                Some(&prev) if prev > l => self.word.len(),
                _ => 0,
            };
            self.word.push(l);
            self.walk(
                placed | bit,
                used_labels | (1 << (l - 1)),
                maj + descent,
                inv + larger_before,
            );
            self.word.pop();
        }
    }
}

pub fn extension_count(p: &LabeledPoset) -> Result<u64> {
    Oracle::default().extension_count(p)
}

pub fn eq_stat(p: &LabeledPoset, stat: Stat) -> Result<IntPoly> {
    Oracle::default().eq_stat(p, stat)
}

pub fn eq_stat_ending_at(p: &LabeledPoset, stat: Stat, s: usize) -> Result<IntPoly> {
    Oracle::default().eq_stat_ending_at(p, stat, s)
}

/// Number of `(P,ω)`-partitions of each `m ≤ max_degree`: maps `f: P → ℕ`
/// with `f(s) ≥ f(t)` whenever `s ≤ t`, strictly when also `ω(s) > ω(t)`.
pub fn ppartition_series(p: &LabeledPoset, max_degree: usize) -> Result<IntPoly> {
    ppartitions(p, max_degree, None)
}

/// As [`ppartition_series`], keeping only `f` with `f(s) ≤ f(t)` for all `t`
/// and `ω(s) > ω(t)` whenever `f(s) = f(t)`, `t ≠ s`.
pub fn ppartition_series_restricted(
    p: &LabeledPoset,
    s: usize,
    max_degree: usize,
) -> Result<IntPoly> {
    if s >= p.len() {
        return Err(Error::InvalidPoset("element out of range"));
    }
    ppartitions(p, max_degree, Some(s))
}

fn ppartitions(p: &LabeledPoset, max_degree: usize, restrict: Option<usize>) -> Result<IntPoly> {
    if p.len() > DEFAULT_CAP || max_degree > MAX_SERIES_DEGREE {
        return Err(Error::CapExceeded {
            size: p.len().max(max_degree),
            cap: DEFAULT_CAP.min(MAX_SERIES_DEGREE),
        });
    }
    let order = p.poset().topological_order();
    let below = p.poset().strict_order();
    let mut search = PartitionSearch {
        p,
        order: &order,
        below: &below,
        restrict,
        values: vec![0; p.len()],
        counts: vec![0; max_degree + 1],
    };
    search.go(0, max_degree);
    Ok(IntPoly::from_counts(&search.counts))
}

struct PartitionSearch<'a> {
    p: &'a LabeledPoset,
    order: &'a [usize],
    below: &'a [Vec<bool>],
    restrict: Option<usize>,
    values: Vec<usize>,
    counts: Vec<u64>,
}

impl PartitionSearch<'_> {
    fn go(&mut self, k: usize, budget: usize) {
        let max_degree = self.counts.len() - 1;
        if k == self.order.len() {
            if self.restriction_holds() {
                self.counts[max_degree - budget] += 1;
            }
            return;
        }
        let t = self.order[k];
        // Elements below t come earlier in the order, so they are assigned.
        let mut hi = budget;
        for s in 0..self.p.len() {
            if self.below[t][s] {
                let strict = self.p.label(s) > self.p.label(t);
                let bound = if strict {
                    match self.values[s].checked_sub(1) {
                        Some(b) => b,
                        None => return,
                    }
                } else {
                    self.values[s]
                };
                hi = hi.min(bound);
            }
        }
        for v in 0..=hi {
            self.values[t] = v;
            self.go(k + 1, budget - v);
        }
    }

    fn restriction_holds(&self) -> bool {
        let Some(s) = self.restrict else {
            return true;
        };
        let fs = self.values[s];
        (0..self.p.len()).all(|t| {
            t == s
                || self.values[t] > fs
                || (self.values[t] == fs && self.p.label(s) > self.p.label(t))
        })
    }
}
