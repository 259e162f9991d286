//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the report is always printed; exits nonzero if any criterion
//! fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use mobile_hook_core::corpus::{mobile_corpus, stride_sample};
use mobile_hook_core::excited::enumerate;
use mobile_hook_core::families::{
    catalan, euler_family, zigzag_closed_form_bounds, zigzag_strip, FamilyKind,
};
use mobile_hook_core::formulas::{
    bounds, bw_tree_inv, check_chevalley_inv, check_chevalley_maj, check_mobile_inv,
    check_mobile_maj, dcomplete_maj, hlf_count, is_recursive_labeling, mobile_count, mobile_inv_h,
    mobile_maj_h, nhlf_count, stanley_q_hlf, verify_inv_recurrence, verify_maj_recurrence,
};
use mobile_hook_core::mobile::{
    diagram_poset, inversion_example, major_example, HangingPoset, Interleaving, MobilePoset,
    RootedTree,
};
use mobile_hook_core::oracle::{
    eq_stat, eq_stat_ending_at, extension_count, ppartition_series, ppartition_series_restricted,
    Oracle, Stat,
};
use mobile_hook_core::perm::{descents, foata, inv, inverse, maj};
use mobile_hook_core::qseries::{q_binomial, IntPoly};
use mobile_hook_core::shapes::{border_strips_in_box, partitions_in_box, SkewShape};
use mobile_hook_core::{LabeledPoset, Poset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Mobiles checked per corpus criterion.
const SAMPLE: usize = 1000;
/// P-partition truncation degree.
const DEGREE: usize = 12;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn coeffs(p: &IntPoly) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let m = major_example();
    let f = mobile_maj_h(&m).map_err(|e| e.to_string())?;
    let c = coeffs(&f);
    ensure(c.len() == 62, || format!("degree {:?}", f.degree()))?;
    ensure(c[58..] == [11, 6, 2, 1], || {
        format!("top terms {:?}", &c[58..])
    })?;
    ensure(
        c[..15] == [0; 12].iter().copied().chain([1, 2, 6]).collect::<Vec<_>>(),
        || format!("bottom terms {:?}", &c[..15]),
    )?;
    ensure(f.eval_at_one() == 33000.into(), || {
        format!("e = {}", f.eval_at_one())
    })?;
    ensure(mobile_count(&m).unwrap() == 33000u32.into(), || {
        "count".into()
    })?;
    let brute = eq_stat(&m.reversed_schur_labeling(), Stat::Maj).unwrap();
    ensure(brute == f, || "oracle disagrees".into())?;
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "degree 12..61, e = 33000, oracle equal, {:?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let m = inversion_example();
    let f = mobile_inv_h(&m).map_err(|e| e.to_string())?;
    let c = coeffs(&f);
    ensure(c.len() == 39, || format!("degree {:?}", f.degree()))?;
    ensure(c[35..] == [17, 9, 4, 1], || {
        format!("top terms {:?}", &c[35..])
    })?;
    ensure(c[..6] == [0, 0, 0, 0, 1, 4], || {
        format!("bottom terms {:?}", &c[..6])
    })?;
    let brute = eq_stat(&m.omega_inv_labeling().unwrap(), Stat::Inv).unwrap();
    ensure(brute == f, || "oracle disagrees".into())?;
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "n = 11, degree 4..38, oracle equal, {:?}",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let m = major_example();
    let diagrams = enumerate(m.strip());
    ensure(diagrams.len() == 3, || format!("|E| = {}", diagrams.len()))?;
    let h = |u| m.modified_hook(u).unwrap();
    let w_mod: BTreeSet<u64> = diagrams.iter().map(|d| d.w_stat(h)).collect();
    ensure(w_mod == BTreeSet::from([12, 18, 24]), || {
        format!("w' = {w_mod:?}")
    })?;
    let t = inversion_example();
    let plain = |u| u64::from(t.outer().hook(u).unwrap());
    let w_inv: BTreeSet<u64> = diagrams
        .iter()
        .map(|d| d.w_stat(plain) + d.p_d(t.strip().inner(), |c| t.suffix_load(c)))
        .collect();
    ensure(w_inv == BTreeSet::from([4, 9, 14]), || {
        format!("w + p_D = {w_inv:?}")
    })?;
    for k in 1..=6 {
        let n = enumerate(&zigzag_strip(k).unwrap()).len();
        ensure(catalan(k) == n.into(), || format!("k = {k}: {n} diagrams"))?;
    }
    Ok("|E| = 3, w' = {12,18,24}, w + p_D = {4,9,14}, Catalan for k <= 6".into())
}

fn criterion_4(all: &[MobilePoset]) -> Outcome {
    let start = Instant::now();
    let oracle = Oracle::default();
    for m in all {
        let r =
            check_mobile_maj(m, &oracle, Interleaving::ColumnSweep).map_err(|e| e.to_string())?;
        ensure(r.matches, || format!("mismatch on {}", r.input))?;
    }
    within(start.elapsed(), Duration::from_secs(300))?;
    // The theorem depends on how hanging labels interleave with strip labels.
    let hung: Vec<&MobilePoset> = all.iter().filter(|m| m.hanging_size() > 0).collect();
    let fails = |mode| {
        hung.iter()
            .filter(|m| !check_mobile_maj(m, &oracle, mode).unwrap().matches)
            .count()
    };
    Ok(format!(
        "{} mobiles equal, {:?}; interleaving: hangings-first {} / strip-first {} of {} fail",
        all.len(),
        start.elapsed(),
        fails(Interleaving::HangingsFirst),
        fails(Interleaving::StripFirst),
        hung.len()
    ))
}

fn criterion_5(trees: &[MobilePoset]) -> Outcome {
    let oracle = Oracle::default();
    for m in trees {
        let r = check_mobile_inv(m, &oracle).map_err(|e| e.to_string())?;
        ensure(r.matches, || format!("mismatch on {}", r.input))?;
    }
    Ok(format!("{} tree mobiles equal", trees.len()))
}

fn criterion_6(all: &[MobilePoset], trees: &[MobilePoset]) -> Outcome {
    let oracle = Oracle::default();
    let v = MobilePoset::bare(SkewShape::from_parts(&[2, 2], &[1]).unwrap()).unwrap();
    ensure(
        mobile_maj_h(&v).unwrap() == IntPoly::from_i64s(&[0, 1, 1]),
        || "(2,2)/(1)".into(),
    )?;
    ensure(verify_maj_recurrence(&v, &oracle).unwrap().matches, || {
        "(2,2)/(1) recurrence".into()
    })?;
    for m in all {
        ensure(verify_maj_recurrence(m, &oracle).unwrap().matches, || {
            format!("maj: {m}")
        })?;
        ensure(check_chevalley_maj(m).unwrap().matches, || {
            format!("maj chevalley: {m}")
        })?;
    }
    for m in trees {
        ensure(verify_inv_recurrence(m, &oracle).unwrap().matches, || {
            format!("inv: {m}")
        })?;
        ensure(check_chevalley_inv(m).unwrap().matches, || {
            format!("inv chevalley: {m}")
        })?;
    }
    Ok(format!(
        "q + q^2 on (2,2)/(1); maj on {}, inv on {} mobiles",
        all.len(),
        trees.len()
    ))
}

fn poset_from_mask(n: usize, mask: u64) -> Poset {
    let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let covers = pairs
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Poset::new(n, covers).unwrap()
}

fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> LabeledPoset {
    let mask = (0..n * (n - 1) / 2).fold(0u64, |m, b| m | (u64::from(rng.random_bool(0.3)) << b));
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    labels.shuffle(rng);
    LabeledPoset::new(poset_from_mask(n, mask), labels).unwrap()
}

fn series_identities(lp: &LabeledPoset) -> Result<(), String> {
    let inverse_product = (1..=lp.len()).fold(IntPoly::one(), |acc, i| {
        let counts: Vec<u64> = (0..=DEGREE).map(|k| u64::from(k % i == 0)).collect();
        acc.mul_truncated(&IntPoly::from_counts(&counts), DEGREE)
    });
    let g = eq_stat(lp, Stat::Maj)
        .unwrap()
        .mul_truncated(&inverse_product, DEGREE);
    ensure(ppartition_series(lp, DEGREE).unwrap() == g, || {
        format!("G(P) on {lp:?}")
    })?;
    for s in 0..lp.len() {
        let g = eq_stat_ending_at(lp, Stat::Maj, s)
            .unwrap()
            .mul_truncated(&inverse_product, DEGREE);
        let got = ppartition_series_restricted(lp, s, DEGREE).unwrap();
        ensure(got == g, || format!("restricted G(P) on {lp:?}, s = {s}"))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for n in 1..=4usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let poset = poset_from_mask(n, mask);
            for _ in 0..6 {
                let mut labels: Vec<u32> = (1..=n as u32).collect();
                labels.shuffle(&mut rng);
                series_identities(&LabeledPoset::new(poset.clone(), labels).unwrap())?;
                checked += 1;
            }
        }
    }
    for n in 5..=7 {
        for _ in 0..100 {
            series_identities(&random_poset(&mut rng, n))?;
            checked += 1;
        }
    }
    let mut ending = 0;
    for _ in 0..200 {
        let p = rng.random_range(1..=4);
        let q = rng.random_range(1..=3);
        let (a, b) = (random_poset(&mut rng, p), random_poset(&mut rng, q));
        let mut labels: Vec<u32> = (1..=(p + q) as u32).collect();
        labels.shuffle(&mut rng);
        let sum = LabeledPoset::new(a.poset().disjoint_sum(b.poset()), labels).unwrap();
        let left = sum.induced(&(0..p).collect::<Vec<_>>());
        let right = sum.induced(&(p..p + q).collect::<Vec<_>>());
        let binom = q_binomial((p + q) as u32, p as u32).unwrap();
        let maj_rhs = binom.clone()
            * eq_stat(&left, Stat::Maj).unwrap()
            * eq_stat(&right, Stat::Maj).unwrap();
        ensure(eq_stat(&sum, Stat::Maj).unwrap() == maj_rhs, || {
            "disjoint maj".into()
        })?;
        let inv_rhs =
            binom * eq_stat(&left, Stat::Inv).unwrap() * eq_stat(&right, Stat::Inv).unwrap();
        ensure(
            eq_stat(&left.stacked_sum(&right), Stat::Inv).unwrap() == inv_rhs,
            || "disjoint inv".into(),
        )?;
        let top_of_q = (p..p + q).map(|t| sum.label(t)).max().unwrap();
        for s in (0..p).filter(|&s| sum.label(s) > top_of_q) {
            let rhs = q_binomial((p + q - 1) as u32, (p - 1) as u32).unwrap()
                * eq_stat_ending_at(&left, Stat::Maj, s).unwrap()
                * eq_stat(&right, Stat::Maj).unwrap();
            ensure(
                eq_stat_ending_at(&sum, Stat::Maj, s).unwrap() == rhs,
                || "ending-at product".into(),
            )?;
            ending += 1;
        }
    }
    // Without stacked labels the inv identity can fail.
    let witness = LabeledPoset::new(Poset::new(3, vec![(0, 1)]).unwrap(), vec![1, 3, 2]).unwrap();
    let lhs = eq_stat(&witness, Stat::Inv).unwrap();
    let rhs = q_binomial(3, 2).unwrap()
        * eq_stat(&witness.induced(&[0, 1]), Stat::Inv).unwrap()
        * eq_stat(&witness.induced(&[2]), Stat::Inv).unwrap();
    ensure(lhs != rhs, || {
        "inv witness unexpectedly satisfies the identity".into()
    })?;
    Ok(format!(
        "G(P) and restricted G(P) on {checked} labeled posets to degree {DEGREE}; 200 disjoint pairs; {ending} ending-at cases; inv witness {lhs} != {rhs}"
    ))
}

fn increasing_trees(n: usize) -> Vec<RootedTree> {
    let mut out = vec![vec![None]];
    for k in 1..n {
        out = out
            .into_iter()
            .flat_map(|t: Vec<Option<usize>>| {
                (0..k).map(move |p| {
                    let mut t = t.clone();
                    t.push(Some(p));
                    t
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|p| RootedTree::from_parents(p).unwrap())
        .collect()
}

fn criterion_8() -> Outcome {
    let mut cases = 0;
    for lam in partitions_in_box(8, 8)
        .into_iter()
        .filter(|l| l.size() <= 8)
    {
        let lp = diagram_poset(&SkewShape::straight(lam.clone()));
        ensure(
            hlf_count(&lam).unwrap() == extension_count(&lp).unwrap().into(),
            || format!("hlf {lam}"),
        )?;
        ensure(
            stanley_q_hlf(&lam).unwrap() == eq_stat(&lp, Stat::Maj).unwrap(),
            || format!("stanley {lam}"),
        )?;
        if !lam.is_empty() {
            let h = HangingPoset::Shape(lam.clone());
            let lp = h.labeled();
            ensure(
                dcomplete_maj(&h, lp.labels()).unwrap() == eq_stat(&lp, Stat::Maj).unwrap(),
                || format!("pp {lam}"),
            )?;
        }
        cases += 1;
    }
    for l in partitions_in_box(4, 4) {
        for m in partitions_in_box(4, 4) {
            let Ok(s) = SkewShape::new(l.clone(), m) else {
                continue;
            };
            if s.size() <= 7 {
                let e = extension_count(&diagram_poset(&s)).unwrap();
                ensure(nhlf_count(&s).unwrap() == e.into(), || format!("nhlf {s}"))?;
                cases += 1;
            }
        }
    }
    for n in 1..=8 {
        for t in increasing_trees(n) {
            let h = HangingPoset::Tree(t.clone());
            let lp = h.labeled();
            ensure(
                dcomplete_maj(&h, lp.labels()).unwrap() == eq_stat(&lp, Stat::Maj).unwrap(),
                || format!("pp {h}"),
            )?;
            if is_recursive_labeling(&t, lp.labels()) {
                ensure(
                    bw_tree_inv(&t, lp.labels()).unwrap() == eq_stat(&lp, Stat::Inv).unwrap(),
                    || format!("bw {h}"),
                )?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} shapes, skew shapes and trees"))
}

fn criterion_9(all: &[MobilePoset]) -> Outcome {
    for m in all {
        let e = mobile_count(m).unwrap();
        ensure(bounds(m).contains(&e), || format!("sandwich fails on {m}"))?;
    }
    let mut report = Vec::new();
    for kind in [FamilyKind::C, FamilyKind::A] {
        for p in 0..=2 {
            for k in 1..=3 {
                let m = euler_family(kind, p, k).unwrap();
                let e = extension_count(&m.reversed_schur_labeling()).unwrap();
                let (lo, hi) = zigzag_closed_form_bounds(kind, p, k);
                let general = bounds(&m);
                let e = num_rational::Ratio::from_integer(e.into());
                let inside = lo <= e && e <= hi;
                let same = lo == general.lower && hi == general.upper;
                if !inside || !same {
                    report.push(format!(
                        "{kind:?} p={p} k={k}: e={e} closed=[{lo}, {hi}] general=[{}, {}]",
                        general.lower, general.upper
                    ));
                }
            }
        }
    }
    for line in &report {
        println!("    zigzag discrepancy: {line}");
    }
    Ok(format!(
        "sandwich on {} mobiles; zigzag closed forms: {} discrepancies over 18 cases",
        all.len(),
        report.len()
    ))
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

fn criterion_10() -> Outcome {
    for n in 0..=6 {
        let perms = permutations(n);
        let mut image = BTreeSet::new();
        for s in &perms {
            let f = foata(s);
            ensure(maj(s) == inv(&f), || format!("maj/inv on {s:?}"))?;
            ensure(descents(&inverse(s)) == descents(&inverse(&f)), || {
                format!("Des on {s:?}")
            })?;
            image.insert(f);
        }
        ensure(image.len() == perms.len(), || {
            format!("not a bijection for n = {n}")
        })?;
    }
    let strips = border_strips_in_box(4, 4);
    for s in &strips {
        let lp = MobilePoset::bare(s.clone())
            .unwrap()
            .reversed_schur_labeling();
        ensure(
            eq_stat(&lp, Stat::Inv).unwrap() == eq_stat(&lp, Stat::Maj).unwrap(),
            || format!("inv = maj on {s}"),
        )?;
    }
    Ok(format!(
        "Foata on S_n for n <= 6; inv = maj on {} border strips",
        strips.len()
    ))
}

fn main() {
    let all = stride_sample(&mobile_corpus(4, 4, 11, false), SAMPLE);
    let trees = stride_sample(&mobile_corpus(4, 4, 11, true), SAMPLE);
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "golden maj example", criterion_1()),
        (2, "golden inv example", criterion_2()),
        (3, "excited-diagram fixtures", criterion_3()),
        (4, "maj mobile formula on corpus", criterion_4(&all)),
        (5, "inv mobile formula on tree corpus", criterion_5(&trees)),
        (6, "recurrences", criterion_6(&all, &trees)),
        (7, "P-partition identities", criterion_7()),
        (8, "classical formulas", criterion_8()),
        (9, "bounds", criterion_9(&all)),
        (10, "Foata and inv = maj", criterion_10()),
    ];
    let mut failed = Vec::new();
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                println!("criterion {id:>2} FAIL  {name}: {detail}");
                failed.push(*id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
