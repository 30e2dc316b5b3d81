//! Three generating trees for Baxter objects, counted level by level through
//! label multiplicities.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Label = (i64, i64);

/// Deepest level the triples rule is checked against Baxter numbers before use.
pub const TRIPLES_CHECK_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuccessionRule {
    /// `{[1,1]; [i,j] -> [1,j+1], ..., [i,j+1], [i+1,j], ..., [i+1,1]}`.
    Permutations,
    /// `{[0,2]; [i,j] -> [0,j], ..., [i-1,j], [i,j+1], [i+1,j], ..., [i+j-1,2]}`.
    /// The second run keeps `i + j + 1` constant.
    Triples,
    /// `{[0,0]; ...}`, the open-partition rule, with range runs that may be empty.
    OpenPartitions,
}

impl SuccessionRule {
    pub const ALL: [SuccessionRule; 3] = [Self::Permutations, Self::Triples, Self::OpenPartitions];

    pub fn name(self) -> &'static str {
        match self {
            Self::Permutations => "permutations",
            Self::Triples => "triples",
            Self::OpenPartitions => "open_partitions",
        }
    }

    pub fn root(self) -> Label {
        match self {
            Self::Permutations => (1, 1),
            Self::Triples => (0, 2),
            Self::OpenPartitions => (0, 0),
        }
    }

    /// Ordered children of a node; depends on the label only.
    pub fn successors(self, (i, j): Label) -> Vec<Label> {
        let mut out = Vec::new();
        match self {
            Self::Permutations => {
                out.extend((1..=i).map(|a| (a, j + 1)));
                out.extend((1..=j).rev().map(|b| (i + 1, b)));
            }
            Self::Triples => {
                out.extend((0..i).map(|a| (a, j)));
                out.extend((0..j).map(|t| (i + t, j + 1 - t)));
            }
            Self::OpenPartitions => {
                out.push((i, i));
                out.push((i + 1, j));
                if i > 0 {
                    out.extend((j..i).map(|b| (i, b)));
                    out.extend((j..i).map(|b| (i - 1, b)));
                }
                if i > 0 && j > 0 {
                    out.push((i, j - 1));
                    out.push((i - 1, j - 1));
                }
            }
        }
        out
    }

    /// Whether the rule may be used. The triples rule is a reconstruction of
    /// an ambiguous range expression, admitted only while it reproduces the
    /// Baxter numbers to [`TRIPLES_CHECK_DEPTH`].
    pub fn is_admitted(self) -> bool {
        static TRIPLES: OnceLock<bool> = OnceLock::new();
        match self {
            Self::Triples => *TRIPLES.get_or_init(|| {
                let levels = label_levels(self, TRIPLES_CHECK_DEPTH);
                levels
                    .iter()
                    .enumerate()
                    .all(|(d, v)| crate::series::baxter(d as u64 + 1).is_ok_and(|b| &b == v))
            }),
            _ => true,
        }
    }
}

impl std::str::FromStr for SuccessionRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

fn label_levels(rule: SuccessionRule, depth: usize) -> Vec<BigUint> {
    let mut level: BTreeMap<Label, BigUint> = BTreeMap::from([(rule.root(), BigUint::one())]);
    let mut sizes = Vec::with_capacity(depth);
    for d in 0..depth {
        sizes.push(level.values().sum());
        if d + 1 == depth {
            break;
        }
        let mut next: BTreeMap<Label, BigUint> = BTreeMap::new();
        for (&label, c) in &level {
            for child in rule.successors(label) {
                *next.entry(child).or_insert_with(BigUint::zero) += c;
            }
        }
        level = next;
    }
    sizes
}

/// Sizes of levels `1..=depth`, the root being level 1.
pub fn tree_levels(rule: SuccessionRule, depth: usize) -> Result<Vec<BigUint>> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    if !rule.is_admitted() {
        return Err(Error::InvalidArgument(format!(
            "rule `{}` is quarantined: its levels disagree with the Baxter numbers",
            rule.name()
        )));
    }
    Ok(label_levels(rule, depth))
}

/// Level sizes by materialising every node.
pub fn tree_levels_naive(rule: SuccessionRule, depth: usize) -> Vec<usize> {
    let mut level = vec![rule.root()];
    let mut sizes = Vec::new();
    for d in 0..depth {
        sizes.push(level.len());
        if d + 1 < depth {
            level = level.iter().flat_map(|&l| rule.successors(l)).collect();
        }
    }
    sizes
}
