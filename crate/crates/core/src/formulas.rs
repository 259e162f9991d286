//! Hook-length formulas and their `q`-analogues, each computed exactly.
//!
//! Every `q`-sum over excited diagrams is put over the common denominator
//! `∏_{u∈[λ]} (1 − q^{h(u)})`, so the only division is a single exact
//! polynomial division at the end.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::excited::{self, ExcitedDiagram};
use crate::mobile::{HangingPoset, Interleaving, MobilePoset, RootedTree};
use crate::oracle::{Oracle, Stat};
use crate::poset::LabeledPoset;
use crate::qseries::{q_factorial, IntPoly};
use crate::shapes::{Cell, Partition, SkewShape};

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn exact_quotient(num: BigUint, den: &BigUint) -> Result<BigUint> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonExactDivision);
    }
    Ok(q)
}

fn usize_of(h: u64) -> usize {
    usize::try_from(h).expect("hook fits in usize")
}

/// `f^λ = n! / ∏ h(u)`.
pub fn hlf_count(lambda: &Partition) -> Result<BigUint> {
    let hooks = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    exact_quotient(factorial(lambda.size() as usize), &hooks)
}

/// Sum over excited diagrams of `∏_{u∈D} weight(u)`, the integer numerator
/// of `Σ_D ∏_{u∈[λ]∖D} 1/weight(u)` over `∏_{u∈[λ]} weight(u)`.
fn count_numerator<F: Fn(Cell) -> u64>(diagrams: &[ExcitedDiagram], weight: F) -> BigUint {
    diagrams
        .iter()
        .map(|d| {
            d.cells()
                .iter()
                .fold(BigUint::one(), |acc, &u| acc * weight(u))
        })
        .sum()
}

/// `|SYT(λ/μ)| = n! Σ_D ∏_{u∈[λ]∖D} 1/h(u)`.
pub fn nhlf_count(shape: &SkewShape) -> Result<BigUint> {
    let outer = shape.outer();
    let hook = |u: Cell| u64::from(outer.hook(u).expect("inside λ"));
    let num = count_numerator(&excited::enumerate(shape), hook);
    let den = outer
        .cells()
        .into_iter()
        .fold(BigUint::one(), |acc, u| acc * hook(u));
    exact_quotient(factorial(shape.size() as usize) * num, &den)
}

/// `e(P) = n!/H(𝐩) Σ_D ∏_{u∈[λ]∖D} 1/h'(u)`.
pub fn mobile_count(m: &MobilePoset) -> Result<BigUint> {
    let h = modified_hooks(m);
    let num = count_numerator(&excited::enumerate(m.strip()), &h);
    let den = m
        .outer()
        .cells()
        .into_iter()
        .fold(m.hanging_hook_product(), |acc, u| acc * h(u));
    exact_quotient(factorial(m.len()) * num, &den)
}

fn modified_hooks(m: &MobilePoset) -> impl Fn(Cell) -> u64 + '_ {
    |u| m.modified_hook(u).expect("inside λ")
}

/// `∏_{i≤n}(1−q^i) · Σ_D q^{exp(D)} ∏_{u∈[λ]∖D} 1/(1−q^{weight(u)}) ·
/// ∏_{e∈extra} 1/(1−q^e)`.
fn q_diagram_sum<W, E>(
    shape: &SkewShape,
    n: usize,
    weight: W,
    exponent: E,
    extra: &[u64],
) -> Result<IntPoly>
where
    W: Fn(Cell) -> u64,
    E: Fn(&ExcitedDiagram) -> u64,
{
    let mut numerator = IntPoly::zero();
    for d in excited::enumerate(shape) {
        let term = IntPoly::prod_one_minus(d.cells().iter().map(|&u| usize_of(weight(u))));
        numerator += &term.shift(usize_of(exponent(&d)));
    }
    let denominator = IntPoly::prod_one_minus(
        shape
            .outer()
            .cells()
            .into_iter()
            .map(|u| usize_of(weight(u)))
            .chain(extra.iter().map(|&e| usize_of(e))),
    );
    (IntPoly::prod_one_minus(1..=n) * numerator).exact_div(&denominator)
}

/// `e_q^maj` of a straight shape with the reversed Schur labeling:
/// `q^{b(λ)} ∏_{i≤n}(1−q^i) / ∏_u (1−q^{h(u)})`.
pub fn stanley_q_hlf(lambda: &Partition) -> Result<IntPoly> {
    let n = lambda.size() as usize;
    let den = IntPoly::prod_one_minus(lambda.hooks().into_iter().map(|h| h as usize));
    let b = usize::try_from(lambda.b()).expect("small");
    Ok(IntPoly::prod_one_minus(1..=n).exact_div(&den)?.shift(b))
}

/// `e_q^maj` of a skew diagram with the reversed Schur labeling, as
/// `∏(1−q^i) Σ_D q^{w(D)} ∏_{u∈[λ]∖D} 1/(1−q^{h(u)})`.
pub fn mpp_q_nhlf(shape: &SkewShape) -> Result<IntPoly> {
    let outer = shape.outer();
    let hook = |u: Cell| u64::from(outer.hook(u).expect("inside λ"));
    q_diagram_sum(shape, shape.size() as usize, hook, |d| d.w_stat(hook), &[])
}

/// `e_q^maj(P,ω) = q^{maj(P,ω)} [n]! / ∏ [h(x)]` for a hanging poset.
///
/// For trees any labeling is accepted, with `maj(P,ω)` the sum of hooks of
/// the nodes labeled above their parent. Shapes must be labeled naturally.
pub fn dcomplete_maj(h: &HangingPoset, labels: &[u32]) -> Result<IntPoly> {
    let lp = LabeledPoset::new(h.poset(), labels.to_vec())?;
    let hooks = h.hooks();
    let prefactor = match h {
        HangingPoset::Tree(t) => (0..t.len())
            .filter(|&x| t.parent(x).is_some_and(|p| labels[x] > labels[p]))
            .map(|x| hooks[x] as usize)
            .sum(),
        HangingPoset::Shape(_) => {
            if !lp.is_natural() {
                return Err(Error::InvalidLabeling(
                    "shape hangings need a natural labeling",
                ));
            }
            0
        }
    };
    Ok(hook_product_quotient(h.len(), &hooks)?.shift(prefactor))
}

/// `[n]! / ∏ [h]`.
fn hook_product_quotient(n: usize, hooks: &[u32]) -> Result<IntPoly> {
    IntPoly::prod_one_minus(1..=n)
        .exact_div(&IntPoly::prod_one_minus(hooks.iter().map(|&h| h as usize)))
}

/// Whether every subtree's labels form an interval.
pub fn is_recursive_labeling(t: &RootedTree, labels: &[u32]) -> bool {
    let sizes = t.subtree_sizes();
    let mut lo = labels.to_vec();
    let mut hi = labels.to_vec();
    for x in t.postorder() {
        if let Some(p) = t.parent(x) {
            lo[p] = lo[p].min(lo[x]);
            hi[p] = hi[p].max(hi[x]);
        }
    }
    (0..t.len()).all(|x| hi[x] - lo[x] + 1 == sizes[x])
}

/// `e_q^inv(T,ω) = q^{inv(T,ω)} [n]! / ∏ [h(x)]` for a recursive labeling.
pub fn bw_tree_inv(t: &RootedTree, labels: &[u32]) -> Result<IntPoly> {
    let h = HangingPoset::Tree(t.clone());
    let lp = LabeledPoset::new(h.poset(), labels.to_vec())?;
    if !is_recursive_labeling(t, labels) {
        return Err(Error::InvalidLabeling("tree labeling must be recursive"));
    }
    Ok(hook_product_quotient(t.len(), &t.subtree_sizes())?.shift(lp.inversions()))
}

/// `e_q^maj` of a mobile with its reversed Schur labeling:
/// `∏(1−q^i) ∏_{v∈𝐩} 1/(1−q^{h(v)}) Σ_D q^{w'(D)} ∏_{u∈[λ]∖D} 1/(1−q^{h'(u)})`.
pub fn mobile_maj_h(m: &MobilePoset) -> Result<IntPoly> {
    let h = modified_hooks(m);
    let extra: Vec<u64> = m.hanging_hooks().into_iter().map(u64::from).collect();
    q_diagram_sum(m.strip(), m.len(), &h, |d| d.w_stat(&h), &extra)
}

/// `e_q^inv` of a mobile tree poset with `ω_inv`:
/// `∏(1−q^i) ∏_{v∈𝐩} 1/(1−q^{h(v)}) Σ_D q^{w(D)+p_D} ∏_{u∈[λ]∖D} 1/(1−q^{h'(u)})`,
/// where `w` uses the plain hooks of `λ`.
pub fn mobile_inv_h(m: &MobilePoset) -> Result<IntPoly> {
    if !m.is_tree_mobile() {
        return Err(Error::NonTreeHanging);
    }
    let outer = m.outer();
    let plain = |u: Cell| u64::from(outer.hook(u).expect("inside λ"));
    let h = modified_hooks(m);
    let extra: Vec<u64> = m.hanging_hooks().into_iter().map(u64::from).collect();
    let exponent =
        |d: &ExcitedDiagram| d.w_stat(plain) + d.p_d(m.strip().inner(), |col| m.suffix_load(col));
    q_diagram_sum(m.strip(), m.len(), &h, exponent, &extra)
}

/// Sandwich for `e(P)` from the initial excited diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lower: Ratio<BigUint>,
    pub upper: Ratio<BigUint>,
    pub diagrams: usize,
}

impl Bounds {
    pub fn contains(&self, e: &BigUint) -> bool {
        let e = Ratio::from_integer(e.clone());
        self.lower <= e && e <= self.upper
    }
}

/// `n!/(H(𝐩) ∏_{u∈[λ/μ]} h'(u))` and `|E(λ/μ)|` times that.
pub fn bounds(m: &MobilePoset) -> Bounds {
    let h = modified_hooks(m);
    let den = m
        .strip()
        .cells()
        .into_iter()
        .fold(m.hanging_hook_product(), |acc, u| acc * h(u));
    let lower = Ratio::new(factorial(m.len()), den);
    let diagrams = excited::enumerate(m.strip()).len();
    Bounds {
        upper: &lower * BigUint::from(diagrams),
        lower,
        diagrams,
    }
}

/// Which identity a [`FormulaReport`] checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Hlf,
    Nhlf,
    StanleyQ,
    MppQ,
    PetersonProctorMaj,
    BjornerWachsInv,
    MobileMaj,
    MobileInv,
    MobileCount,
    MajRecurrence,
    InvRecurrence,
    ChevalleyMaj,
    ChevalleyInv,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Hlf => "hlf",
            Formula::Nhlf => "nhlf",
            Formula::StanleyQ => "stanley-q",
            Formula::MppQ => "mpp-q",
            Formula::PetersonProctorMaj => "peterson-proctor-maj",
            Formula::BjornerWachsInv => "bjorner-wachs-inv",
            Formula::MobileMaj => "mobile-maj",
            Formula::MobileInv => "mobile-inv",
            Formula::MobileCount => "mobile-count",
            Formula::MajRecurrence => "maj-recurrence",
            Formula::InvRecurrence => "inv-recurrence",
            Formula::ChevalleyMaj => "chevalley-maj",
            Formula::ChevalleyInv => "chevalley-inv",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A computed value next to an independently computed one. Integer results
/// are stored as constant polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub formula: Formula,
    pub input: String,
    pub computed: IntPoly,
    pub oracle: Option<IntPoly>,
    pub matches: bool,
}

impl FormulaReport {
    pub fn new(
        formula: Formula,
        input: String,
        computed: IntPoly,
        oracle: Option<IntPoly>,
    ) -> Self {
        let matches = oracle.as_ref().is_none_or(|o| *o == computed);
        FormulaReport {
            formula,
            input,
            computed,
            oracle,
            matches,
        }
    }
}

fn count_poly(n: u64) -> IntPoly {
    IntPoly::constant(n.into())
}

fn biguint_poly(n: BigUint) -> IntPoly {
    IntPoly::constant(n.into())
}

/// Mobile maj formula against the oracle, for a chosen label interleaving.
pub fn check_mobile_maj(
    m: &MobilePoset,
    oracle: &Oracle,
    mode: Interleaving,
) -> Result<FormulaReport> {
    let brute = oracle.eq_stat(&m.labeling(mode), Stat::Maj)?;
    Ok(FormulaReport::new(
        Formula::MobileMaj,
        format!("{m} [{mode:?}]"),
        mobile_maj_h(m)?,
        Some(brute),
    ))
}

pub fn check_mobile_inv(m: &MobilePoset, oracle: &Oracle) -> Result<FormulaReport> {
    let brute = oracle.eq_stat(&m.omega_inv_labeling()?, Stat::Inv)?;
    Ok(FormulaReport::new(
        Formula::MobileInv,
        format!("{m}"),
        mobile_inv_h(m)?,
        Some(brute),
    ))
}

pub fn check_mobile_count(m: &MobilePoset, oracle: &Oracle) -> Result<FormulaReport> {
    let brute = oracle.extension_count(&m.reversed_schur_labeling())?;
    Ok(FormulaReport::new(
        Formula::MobileCount,
        format!("{m}"),
        biguint_poly(mobile_count(m)?),
        Some(count_poly(brute)),
    ))
}

/// `e_q^maj(P) = Σ_u q^{|P_{λ/ν¹}|} e_q^maj(P ∖ u)`, both sides by brute
/// force. `computed` holds the right-hand side.
pub fn verify_maj_recurrence(m: &MobilePoset, oracle: &Oracle) -> Result<FormulaReport> {
    let lp = m.reversed_schur_labeling();
    let mut rhs = IntPoly::zero();
    for u in m.strip().inner_corners() {
        let split = m.remove_corner(u)?;
        let x = m.strip_element(u).expect("strip cell");
        rhs += &oracle
            .eq_stat(&lp.without(x), Stat::Maj)?
            .shift(split.left_size());
    }
    let lhs = oracle.eq_stat(&lp, Stat::Maj)?;
    Ok(FormulaReport::new(
        Formula::MajRecurrence,
        format!("{m}"),
        rhs,
        Some(lhs),
    ))
}

/// `e_q^inv(P) = Σ_u q^{n−ω(u)} e_q^inv(P ∖ u)` for `ω = ω_inv`, both sides by
/// brute force.
pub fn verify_inv_recurrence(m: &MobilePoset, oracle: &Oracle) -> Result<FormulaReport> {
    let lp = m.omega_inv_labeling()?;
    let n = m.len();
    let mut rhs = IntPoly::zero();
    for u in m.strip().inner_corners() {
        let x = m.strip_element(u).expect("strip cell");
        let shift = n - lp.label(x) as usize;
        rhs += &oracle.eq_stat(&lp.without(x), Stat::Inv)?.shift(shift);
    }
    let lhs = oracle.eq_stat(&lp, Stat::Inv)?;
    Ok(FormulaReport::new(
        Formula::InvRecurrence,
        format!("{m}"),
        rhs,
        Some(lhs),
    ))
}

/// `[n]! / ([a]! [b]! ⋯)` with `n = a + b + ⋯`.
fn q_multinomial(parts: &[usize]) -> Result<IntPoly> {
    let n: usize = parts.iter().sum();
    let den = parts
        .iter()
        .fold(IntPoly::one(), |acc, &k| acc * q_factorial(k as u32));
    q_factorial(n as u32).exact_div(&den)
}

/// `e_q` of the forest of hangings at a corner, labeled naturally with each
/// tree a contiguous block.
fn forest_polynomial(hangings: &[HangingPoset]) -> Result<IntPoly> {
    let n = hangings.iter().map(HangingPoset::len).sum();
    let hooks: Vec<u32> = hangings.iter().flat_map(HangingPoset::hooks).collect();
    hook_product_quotient(n, &hooks)
}

/// Chevalley-type recurrence with every term produced by the formula:
/// `F(P) = Σ_u q^{s(u)} [n−1; |L|,|R|,|T|] F(L) F(R) e(T)` where `L`, `R` are
/// the two strip pieces of `P ∖ u`, `T` the hangings at `u`, and `F` is the
/// mobile formula on each piece in its own `λ/ν` form.
fn chevalley<F, S>(m: &MobilePoset, formula: F, shift: S, id: Formula) -> Result<FormulaReport>
where
    F: Fn(&MobilePoset) -> Result<IntPoly>,
    S: Fn(Cell, &crate::mobile::MobileSplit) -> usize,
{
    let mut rhs = IntPoly::zero();
    for u in m.strip().inner_corners() {
        let split = m.remove_corner(u)?;
        let piece = |p: &Option<MobilePoset>| -> Result<(usize, IntPoly)> {
            match p {
                Some(p) => Ok((p.len(), formula(p)?)),
                None => Ok((0, IntPoly::one())),
            }
        };
        let (nl, fl) = piece(&split.left)?;
        let (nr, fr) = piece(&split.right)?;
        let t = split.corner_hangings.iter().map(HangingPoset::len).sum();
        let term =
            q_multinomial(&[nl, nr, t])? * fl * fr * forest_polynomial(&split.corner_hangings)?;
        rhs += &term.shift(shift(u, &split));
    }
    Ok(FormulaReport::new(
        id,
        format!("{m}"),
        rhs,
        Some(formula(m)?),
    ))
}

pub fn check_chevalley_maj(m: &MobilePoset) -> Result<FormulaReport> {
    chevalley(
        m,
        mobile_maj_h,
        |_, split| split.left_size(),
        Formula::ChevalleyMaj,
    )
}

pub fn check_chevalley_inv(m: &MobilePoset) -> Result<FormulaReport> {
    let lp = m.omega_inv_labeling()?;
    let n = m.len();
    chevalley(
        m,
        mobile_inv_h,
        |u, _| n - lp.label(m.strip_element(u).expect("strip cell")) as usize,
        Formula::ChevalleyInv,
    )
}
