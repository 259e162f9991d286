//! Up-down strips with chains or antichains hung on every valley, which
//! generalize the Euler (zigzag) numbers.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result};
use crate::mobile::{HangingPoset, MobilePoset};
use crate::shapes::{Cell, SkewShape};

/// `C`: a `p`-chain on each valley; `A`: `p` single points on each valley.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    C,
    A,
}

/// Up-down border strip with `k` peaks and `k` valleys, `2k` cells:
/// `λ = (k, k, k−1, …, 2, 1)`, `μ = (k−1, …, 1)`.
pub fn zigzag_strip(k: u32) -> Result<SkewShape> {
    if k == 0 {
        return Err(Error::InvalidPoset("zigzag needs k ≥ 1"));
    }
    let outer: Vec<u32> = core::iter::once(k)
        .chain((2..=k).map(|i| k + 2 - i))
        .chain(core::iter::once(1))
        .collect();
    let inner: Vec<u32> = (1..k).rev().collect();
    SkewShape::from_parts(&outer, &inner)
}

/// Minimal strip cells of [`zigzag_strip`], left to right.
pub fn zigzag_valleys(k: u32) -> Vec<Cell> {
    (1..=k).map(|m| Cell::new(k + 2 - m, m)).collect()
}

pub fn euler_family(kind: FamilyKind, p: u32, k: u32) -> Result<MobilePoset> {
    let strip = zigzag_strip(k)?;
    let mut hangings = Vec::new();
    for v in zigzag_valleys(k) {
        match kind {
            FamilyKind::C if p > 0 => hangings.push((v, HangingPoset::chain(p as usize))),
            FamilyKind::C => {}
            FamilyKind::A => {
                hangings.extend((0..p).map(|_| (v, HangingPoset::chain(1))));
            }
        }
    }
    MobilePoset::new(strip, hangings)
}

pub fn catalan(k: u32) -> BigUint {
    // C_k = binom(2k, k) / (k + 1)
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

/// The closed-form zigzag bounds
/// `(2k+kp)! / (D^k (2p+3)^{k−1} (p+2))` and `Cat(k)` times that, with
/// `D = (p+1)!` for chains and `D = p+1` for antichains.
pub fn zigzag_closed_form_bounds(
    kind: FamilyKind,
    p: u32,
    k: u32,
) -> (Ratio<BigUint>, Ratio<BigUint>) {
    let fact = |n: u32| (1..=n).fold(BigUint::one(), |acc, i| acc * i);
    let d = match kind {
        FamilyKind::C => fact(p + 1),
        FamilyKind::A => BigUint::from(p + 1),
    };
    let den = d.pow(k) * BigUint::from(2 * p + 3).pow(k - 1) * BigUint::from(p + 2);
    let lower = Ratio::new(fact(2 * k + k * p), den);
    let upper = &lower * catalan(k);
    (lower, upper)
}
