//! JSON input formats: mobile posets and raw labeled posets.

use mobile_hook_core::mobile::{HangingPoset, MobilePoset, RootedTree};
use mobile_hook_core::shapes::{Cell, SkewShape};
use mobile_hook_core::{LabeledPoset, Poset};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"lambda":[..], "mu":[..], "hangings":[..]}`; cells are 1-based
/// `[row, col]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MobileJson {
    pub lambda: Vec<u32>,
    #[serde(default)]
    pub mu: Vec<u32>,
    #[serde(default)]
    pub hangings: Vec<HangingJson>,
    /// Frozen reference values carried by fixture files; ignored as input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golden: Option<Golden>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum HangingJson {
    Shape {
        at: [u32; 2],
        shape: Vec<u32>,
    },
    /// Entry `k` is the 1-based parent of node `k+1`; `0` marks the root.
    Tree {
        at: [u32; 2],
        parents: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Golden {
    pub e: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maj: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<String>>,
}

/// `{"n":3, "covers":[[0,1]], "omega":[1,3,2]}`: `[a, b]` means `a < b`,
/// elements are 0-based and `omega` defaults to `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub n: usize,
    #[serde(default)]
    pub covers: Vec<[usize; 2]>,
    #[serde(default)]
    pub omega: Option<Vec<u32>>,
}

fn cell([row, col]: [u32; 2]) -> Cell {
    Cell::new(row, col)
}

impl MobileJson {
    pub fn to_mobile(&self) -> Result<MobilePoset, CliError> {
        let strip = SkewShape::from_parts(&self.lambda, &self.mu)?;
        let mut hangings = Vec::with_capacity(self.hangings.len());
        for h in &self.hangings {
            hangings.push(match h {
                HangingJson::Shape { at, shape } => (cell(*at), HangingPoset::shape(shape)?),
                HangingJson::Tree { at, parents } => (
                    cell(*at),
                    HangingPoset::Tree(RootedTree::from_markers(parents)?),
                ),
            });
        }
        Ok(MobilePoset::new(strip, hangings)?)
    }

    pub fn from_mobile(m: &MobilePoset) -> Self {
        let hangings = m
            .hangings()
            .iter()
            .flat_map(|(c, hs)| {
                let at = [c.row, c.col];
                hs.iter().map(move |h| match h {
                    HangingPoset::Tree(t) => HangingJson::Tree {
                        at,
                        parents: t.to_markers(),
                    },
                    HangingPoset::Shape(p) => HangingJson::Shape {
                        at,
                        shape: p.parts().to_vec(),
                    },
                })
            })
            .collect();
        MobileJson {
            lambda: m.strip().outer().parts().to_vec(),
            mu: m.strip().inner().parts().to_vec(),
            hangings,
            golden: None,
        }
    }
}

impl PosetJson {
    pub fn to_labeled(&self) -> Result<LabeledPoset, CliError> {
        let covers = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        let poset = Poset::new(self.n, covers)?;
        Ok(match &self.omega {
            Some(omega) => LabeledPoset::new(poset, omega.clone())?,
            None => LabeledPoset::identity(poset),
        })
    }
}

/// Either input format, told apart by the presence of `covers` or `n`.
pub enum AnyPoset {
    Mobile(Box<MobilePoset>),
    Raw(LabeledPoset),
}

pub fn parse_mobile(text: &str) -> Result<MobilePoset, CliError> {
    let json: MobileJson = serde_json::from_str(text).map_err(CliError::Json)?;
    json.to_mobile()
}

pub fn parse_any(text: &str) -> Result<AnyPoset, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(CliError::Json)?;
    if value.get("n").is_some() || value.get("covers").is_some() {
        let raw: PosetJson = serde_json::from_value(value).map_err(CliError::Json)?;
        Ok(AnyPoset::Raw(raw.to_labeled()?))
    } else {
        let json: MobileJson = serde_json::from_value(value).map_err(CliError::Json)?;
        Ok(AnyPoset::Mobile(Box::new(json.to_mobile()?)))
    }
}
