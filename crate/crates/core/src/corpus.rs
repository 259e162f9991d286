//! Deterministic test corpora of small mobile posets.

use alloc::vec::Vec;

use crate::mobile::{HangingPoset, MobilePoset, RootedTree};
use crate::shapes::border_strips_in_box;

/// 2-chain, 3-chain, root with two leaves, and the `(2,2)` shape.
pub fn hanging_menu() -> Vec<HangingPoset> {
    Vec::from([
        HangingPoset::chain(2),
        HangingPoset::chain(3),
        HangingPoset::Tree(RootedTree::claw(2)),
        HangingPoset::shape(&[2, 2]).expect("valid"),
    ])
}

/// Every border strip in a `rows × cols` box, bare or with menu hangings on
/// one or two distinct cells, keeping mobiles with at most `max_size`
/// elements. With `trees_only`, the shape hanging is left out.
pub fn mobile_corpus(rows: u32, cols: u32, max_size: usize, trees_only: bool) -> Vec<MobilePoset> {
    let menu: Vec<HangingPoset> = hanging_menu()
        .into_iter()
        .filter(|h| !trees_only || h.is_tree())
        .collect();
    let mut out = Vec::new();
    for strip in border_strips_in_box(rows, cols) {
        if strip.size() as usize > max_size {
            continue;
        }
        let cells = strip.cells();
        let mut push = |hs: Vec<(crate::shapes::Cell, HangingPoset)>| {
            let m = MobilePoset::new(strip.clone(), hs).expect("cells lie in the strip");
            if m.len() <= max_size {
                out.push(m);
            }
        };
        push(Vec::new());
        for (i, &a) in cells.iter().enumerate() {
            for h in &menu {
                push(Vec::from([(a, h.clone())]));
            }
            for &b in &cells[i + 1..] {
                for h in &menu {
                    for g in &menu {
                        push(Vec::from([(a, h.clone()), (b, g.clone())]));
                    }
                }
            }
        }
    }
    out
}

/// `k` items spread evenly through `items`, in order.
pub fn stride_sample<T: Clone>(items: &[T], k: usize) -> Vec<T> {
    if k >= items.len() {
        return items.to_vec();
    }
    (0..k).map(|i| items[i * items.len() / k].clone()).collect()
}
