//! Subcommand implementations. Each returns a [`Report`] that the caller
//! renders as JSON or CSV.

use mobile_hook_core::corpus::mobile_corpus;
use mobile_hook_core::excited::enumerate;
use mobile_hook_core::families::{euler_family, zigzag_closed_form_bounds, FamilyKind};
use mobile_hook_core::formulas::{
    bounds, check_chevalley_inv, check_chevalley_maj, check_mobile_count, check_mobile_inv,
    check_mobile_maj, mobile_count, mobile_inv_h, mobile_maj_h, verify_inv_recurrence,
    verify_maj_recurrence, FormulaReport,
};
use mobile_hook_core::mobile::{Interleaving, MobilePoset};
use mobile_hook_core::oracle::Oracle;
use mobile_hook_core::{Cell, IntPoly, LabeledPoset};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::schema::{AnyPoset, MobileJson};

/// JSON documents (one per output line) plus the same data as a table.
pub struct Report {
    pub json: Vec<Value>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    fn single(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Report {
            json: vec![json],
            header,
            rows,
        }
    }
}

/// Coefficients from degree 0 upward, as decimal strings.
pub fn coeff_strings(p: &IntPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn poly_report(stat: &str, p: &IntPoly) -> Report {
    let coeffs = coeff_strings(p);
    let rows = coeffs
        .iter()
        .enumerate()
        .map(|(d, c)| vec![d.to_string(), c.clone()])
        .collect();
    Report::single(
        json!({ "stat": stat, "coefficients": coeffs }),
        vec!["degree", "coefficient"],
        rows,
    )
}

fn cell_json(c: Cell) -> Value {
    json!([c.row, c.col])
}

pub fn count(m: &MobilePoset) -> Result<Report, CliError> {
    let e = mobile_count(m)?.to_string();
    Ok(Report::single(json!({ "e": e }), vec!["e"], vec![vec![e]]))
}

pub fn maj_poly(m: &MobilePoset) -> Result<Report, CliError> {
    Ok(poly_report("maj", &mobile_maj_h(m)?))
}

pub fn inv_poly(m: &MobilePoset) -> Result<Report, CliError> {
    Ok(poly_report("inv", &mobile_inv_h(m)?))
}

pub fn excited(m: &MobilePoset) -> Result<Report, CliError> {
    let outer = m.outer();
    let plain = |u: Cell| u64::from(outer.hook(u).expect("inside λ"));
    let modified = |u: Cell| m.modified_hook(u).expect("inside λ");
    let mut report = Report {
        json: Vec::new(),
        header: vec!["index", "cells", "broken", "w", "w_prime", "p_d"],
        rows: Vec::new(),
    };
    for (i, d) in enumerate(m.strip()).iter().enumerate() {
        let w = d.w_stat(plain);
        let w_prime = d.w_stat(modified);
        let p_d = d.p_d(m.strip().inner(), |col| m.suffix_load(col));
        let cells: Vec<Value> = d.cells().iter().map(|&c| cell_json(c)).collect();
        let broken: Vec<Value> = d.broken().iter().map(|&c| cell_json(c)).collect();
        let join = |cs: &mut dyn Iterator<Item = &Cell>| {
            cs.map(|c| format!("{}:{}", c.row, c.col))
                .collect::<Vec<_>>()
                .join(" ")
        };
        report.rows.push(vec![
            i.to_string(),
            join(&mut d.cells().iter()),
            join(&mut d.broken().iter()),
            w.to_string(),
            w_prime.to_string(),
            p_d.to_string(),
        ]);
        report.json.push(json!({
            "cells": cells,
            "broken": broken,
            "w": w,
            "w_prime": w_prime,
            "p_d": p_d,
        }));
    }
    Ok(report)
}

pub fn hooks(m: &MobilePoset) -> Result<Report, CliError> {
    let outer = m.outer();
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for u in outer.cells() {
        let h = outer.hook(u)?;
        let h_prime = m.modified_hook(u)?;
        cells.push(json!({ "cell": cell_json(u), "h": h, "h_prime": h_prime }));
        rows.push(vec![
            u.row.to_string(),
            u.col.to_string(),
            h.to_string(),
            h_prime.to_string(),
        ]);
    }
    let json = json!({ "cells": cells, "hanging_hooks": m.hanging_hooks() });
    Ok(Report::single(
        json,
        vec!["row", "col", "h", "h_prime"],
        rows,
    ))
}

pub fn oracle(input: &AnyPoset, cap: usize) -> Result<Report, CliError> {
    let lp: LabeledPoset = match input {
        AnyPoset::Mobile(m) => m.reversed_schur_labeling(),
        AnyPoset::Raw(lp) => lp.clone(),
    };
    let stats = Oracle::with_cap(cap).stats(&lp)?;
    let maj = coeff_strings(&stats.maj);
    let inv = coeff_strings(&stats.inv);
    let rows = (0..maj.len().max(inv.len()))
        .map(|d| {
            let at = |v: &[String]| v.get(d).cloned().unwrap_or_else(|| "0".into());
            vec![d.to_string(), at(&maj), at(&inv)]
        })
        .collect();
    let json = json!({
        "n": lp.len(),
        "e": stats.count.to_string(),
        "maj": maj,
        "inv": inv,
    });
    Ok(Report::single(json, vec!["degree", "maj", "inv"], rows))
}

pub fn bounds_report(m: &MobilePoset) -> Result<Report, CliError> {
    let b = bounds(m);
    let e = mobile_count(m)?;
    let json = json!({
        "e": e.to_string(),
        "lower": b.lower.to_string(),
        "upper": b.upper.to_string(),
        "diagrams": b.diagrams,
        "holds": b.contains(&e),
    });
    let rows = vec![vec![
        e.to_string(),
        b.lower.to_string(),
        b.upper.to_string(),
        b.diagrams.to_string(),
    ]];
    Ok(Report::single(
        json,
        vec!["e", "lower", "upper", "diagrams"],
        rows,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CorpusSize {
    /// Border strips in a 3×3 box, at most 9 elements.
    Small,
    /// Border strips in a 4×4 box, at most 11 elements.
    Full,
}

fn checks_for(m: &MobilePoset, oracle: &Oracle) -> mobile_hook_core::Result<Vec<FormulaReport>> {
    let mut out = vec![
        check_mobile_maj(m, oracle, Interleaving::ColumnSweep)?,
        check_mobile_count(m, oracle)?,
        verify_maj_recurrence(m, oracle)?,
        check_chevalley_maj(m)?,
    ];
    if m.is_tree_mobile() {
        out.push(check_mobile_inv(m, oracle)?);
        out.push(verify_inv_recurrence(m, oracle)?);
        out.push(check_chevalley_inv(m)?);
    }
    Ok(out)
}

/// Checks every formula on a seeded sample; the report does not depend on
/// the number of workers.
pub fn verify(corpus: CorpusSize, sample: usize, seed: u64) -> Result<(Report, usize), CliError> {
    let mobiles = match corpus {
        CorpusSize::Small => mobile_corpus(3, 3, 9, false),
        CorpusSize::Full => mobile_corpus(4, 4, 11, false),
    };
    let mut picks: Vec<usize> = (0..mobiles.len()).collect();
    picks.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    picks.truncate(sample);
    picks.sort_unstable();
    let oracle = Oracle::default();
    let results: Vec<Vec<FormulaReport>> = picks
        .par_iter()
        .map(|&i| checks_for(&mobiles[i], &oracle))
        .collect::<Result<_, _>>()?;
    let reports: Vec<&FormulaReport> = results.iter().flatten().collect();
    let mismatches: Vec<Value> = reports
        .iter()
        .filter(|r| !r.matches)
        .map(|r| json!({ "formula": r.formula.name(), "input": r.input }))
        .collect();
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.formula.name().into(),
                r.input.clone(),
                r.matches.to_string(),
            ]
        })
        .collect();
    let failures = mismatches.len();
    let json = json!({
        "corpus": format!("{corpus:?}").to_lowercase(),
        "seed": seed,
        "mobiles": picks.len(),
        "checks": reports.len(),
        "mismatches": mismatches,
    });
    Ok((
        Report::single(json, vec!["formula", "input", "matches"], rows),
        failures,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    /// A `p`-chain on each valley.
    C,
    /// `p` single points on each valley.
    A,
}

pub fn euler(kind: Kind, p: u32, k: u32, cap: usize) -> Result<Report, CliError> {
    let family = match kind {
        Kind::C => FamilyKind::C,
        Kind::A => FamilyKind::A,
    };
    let m = euler_family(family, p, k)?;
    let e = mobile_count(&m)?;
    let b = bounds(&m);
    let (lo, hi) = zigzag_closed_form_bounds(family, p, k);
    let brute = match Oracle::with_cap(cap).extension_count(&m.reversed_schur_labeling()) {
        Ok(n) => Some(n.to_string()),
        Err(mobile_hook_core::Error::CapExceeded { .. }) => None,
        Err(err) => return Err(err.into()),
    };
    let json = json!({
        "mobile": MobileJson::from_mobile(&m),
        "n": m.len(),
        "e": e.to_string(),
        "oracle_e": brute,
        "lower": b.lower.to_string(),
        "upper": b.upper.to_string(),
        "closed_form_lower": lo.to_string(),
        "closed_form_upper": hi.to_string(),
        "diagrams": b.diagrams,
    });
    let rows = vec![vec![
        m.len().to_string(),
        e.to_string(),
        lo.to_string(),
        hi.to_string(),
        b.diagrams.to_string(),
    ]];
    Ok(Report::single(
        json,
        vec!["n", "e", "lower", "upper", "diagrams"],
        rows,
    ))
}
