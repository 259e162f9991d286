use std::collections::BTreeSet;

use mobile_hook_core::corpus::{mobile_corpus, stride_sample};
use mobile_hook_core::excited::{enumerate, initial_diagram, ExcitedDiagram};
use mobile_hook_core::families::{catalan, zigzag_strip};
use mobile_hook_core::shapes::{border_strips_in_box, partitions_in_box, Cell, SkewShape};

/// Monotone lattice paths inside `[λ]`, stepping up or right, between the
/// two end cells of the strip.
fn lattice_paths(s: &SkewShape) -> u64 {
    let outer = s.outer();
    let path = s.strip_path().unwrap();
    let (start, end) = (path[0], path[path.len() - 1]);
    let rows = outer.len();
    let cols = outer.part(1);
    // ways[i][j]: paths from start to (i, j)
    let mut ways = vec![vec![0u64; cols as usize + 2]; rows as usize + 2];
    for i in (1..=rows).rev() {
        for j in 1..=cols {
            if !outer.contains(Cell::new(i, j)) {
                continue;
            }
            ways[i as usize][j as usize] = if Cell::new(i, j) == start {
                1
            } else {
                ways[i as usize + 1][j as usize] + ways[i as usize][j as usize - 1]
            };
        }
    }
    ways[end.row as usize][end.col as usize]
}

fn key(d: &ExcitedDiagram) -> Vec<Cell> {
    d.cells().iter().copied().collect()
}

/// Undo an excited move: `(i,j)` back to `(i−1,j−1)` when the three cells
/// up-left of it are free.
fn inverse_moves(d: &ExcitedDiagram) -> Vec<BTreeSet<Cell>> {
    let cells = d.cells();
    let mut out = Vec::new();
    for &c in cells {
        if c.row < 2 || c.col < 2 {
            continue;
        }
        let back = Cell::new(c.row - 1, c.col - 1);
        let blocked = [
            back,
            Cell::new(c.row - 1, c.col),
            Cell::new(c.row, c.col - 1),
        ]
        .iter()
        .any(|x| cells.contains(x));
        if !blocked {
            let mut next = cells.clone();
            next.remove(&c);
            next.insert(back);
            out.push(next);
        }
    }
    out
}

#[test]
fn diagram_count_equals_lattice_paths_in_5x5() {
    for s in border_strips_in_box(5, 5) {
        assert_eq!(enumerate(&s).len() as u64, lattice_paths(&s), "{s}");
    }
}

#[test]
fn broken_diagonals_keep_their_size() {
    for l in partitions_in_box(4, 4) {
        for m in partitions_in_box(4, 4) {
            let Ok(s) = SkewShape::new(l.clone(), m) else {
                continue;
            };
            let sizes: BTreeSet<usize> = enumerate(&s).iter().map(|d| d.broken().len()).collect();
            assert_eq!(sizes.len(), 1, "{s}");
            for d in enumerate(&s) {
                assert!(d.broken().is_disjoint(d.cells()), "{s}");
                assert_eq!(d.cells().len() as u32, s.inner().size());
            }
        }
    }
}

#[test]
fn closed_under_inverse_moves() {
    for s in border_strips_in_box(4, 4) {
        let all: BTreeSet<Vec<Cell>> = enumerate(&s).iter().map(key).collect();
        for d in enumerate(&s) {
            for back in inverse_moves(&d) {
                let k: Vec<Cell> = back.into_iter().collect();
                assert!(all.contains(&k), "{s}");
            }
        }
        let start = key(&initial_diagram(&s));
        assert!(all.contains(&start));
    }
}

#[test]
fn zigzag_strips_have_catalan_many_diagrams() {
    for k in 1..=6 {
        let n = enumerate(&zigzag_strip(k).unwrap()).len();
        assert_eq!(catalan(k), n.into(), "k = {k}");
    }
}

/// `Σ_{(i,j)∈[λ]∖D} (λ'_j − i) = w(D)`: the broken-diagonal exponent agrees
/// with the semistandard-tableau weight of the complement.
#[test]
fn complement_weight_equals_broken_hook_sum() {
    for l in partitions_in_box(4, 4) {
        let conj = l.conjugate();
        for m in partitions_in_box(4, 4) {
            let Ok(s) = SkewShape::new(l.clone(), m) else {
                continue;
            };
            for d in enumerate(&s) {
                let lhs: i64 = d
                    .complement(&l)
                    .into_iter()
                    .map(|u| i64::from(conj.part(u.col)) - i64::from(u.row))
                    .sum();
                let w = d.w_stat(|u| u64::from(l.hook(u).unwrap()));
                assert_eq!(lhs, w as i64, "{s}");
            }
        }
    }
}

/// `p̂_D = Σ_{[λ]∖D} Σ_{b≥j} p_{a,b} − Σ_{(i,j)∈Br(D)} Σ_{a≥i,b≥j} p_{a,b}`
/// does not depend on `D`.
#[test]
fn p_hat_is_invariant() {
    let corpus = mobile_corpus(4, 4, 11, false);
    for m in stride_sample(&corpus, 3000) {
        let values: BTreeSet<i64> = enumerate(m.strip())
            .iter()
            .map(|d| {
                let a: i64 = d
                    .complement(m.outer())
                    .into_iter()
                    .map(|u| m.suffix_load(u.col) as i64)
                    .sum();
                let b: i64 = d.broken().iter().map(|&u| m.region_load(u) as i64).sum();
                a - b
            })
            .collect();
        assert_eq!(values.len(), 1, "{m}");
    }
}
