//! Oscillating, vacillating and hesitating tableaux, and the lattice walks
//! they encode.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableauKind {
    Oscillating,
    Vacillating,
    Hesitating,
}

impl std::str::FromStr for TableauKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oscillating" => Ok(Self::Oscillating),
            "vacillating" => Ok(Self::Vacillating),
            "hesitating" => Ok(Self::Hesitating),
            other => Err(Error::InvalidArgument(format!("unknown tableau kind `{other}`"))),
        }
    }
}

/// One step between consecutive shapes. Rows are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeStep {
    Stay,
    Add(usize),
    Remove(usize),
}

impl ShapeStep {
    pub fn between(from: &Partition, to: &Partition) -> Option<Self> {
        if from == to {
            return Some(Self::Stay);
        }
        match from.one_box_difference(to)? {
            (r, true) => Some(Self::Add(r)),
            (r, false) => Some(Self::Remove(r)),
        }
    }

    fn is_add(self) -> bool {
        matches!(self, Self::Add(_))
    }

    fn is_remove(self) -> bool {
        matches!(self, Self::Remove(_))
    }

    fn is_stay(self) -> bool {
        self == Self::Stay
    }
}

/// Outcome of [`validate`]: the first offending step index, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub index: Option<usize>,
    pub reason: Option<String>,
}

impl Validation {
    fn ok() -> Self {
        Self {
            valid: true,
            index: None,
            reason: None,
        }
    }

    fn fail(index: usize, reason: impl Into<String>) -> Self {
        Self {
            valid: false,
            index: Some(index),
            reason: Some(reason.into()),
        }
    }
}

/// Checks the rules of `kind` on `shapes`. Steps are indexed from 0: step `t`
/// goes from `shapes[t]` to `shapes[t + 1]`.
pub fn validate(kind: TableauKind, shapes: &[Partition]) -> Validation {
    match shapes.first() {
        None => return Validation::fail(0, "sequence has no shapes"),
        Some(first) if !first.is_empty() => return Validation::fail(0, "does not start at ∅"),
        _ => {}
    }
    let mut steps = Vec::with_capacity(shapes.len() - 1);
    for (t, w) in shapes.windows(2).enumerate() {
        match ShapeStep::between(&w[0], &w[1]) {
            Some(s) => steps.push(s),
            None => {
                return Validation::fail(t, format!("{} and {} differ by more than a box", w[0], w[1]))
            }
        }
    }
    let length = steps.len();
    if kind != TableauKind::Oscillating && length % 2 == 1 {
        return Validation::fail(length, "odd length");
    }
    match kind {
        TableauKind::Oscillating => {
            if let Some(t) = steps.iter().position(|s| s.is_stay()) {
                return Validation::fail(t, "stay step in an oscillating tableau");
            }
        }
        TableauKind::Vacillating => {
            for (t, s) in steps.iter().enumerate() {
                if t % 2 == 0 && s.is_add() {
                    return Validation::fail(t, "box added at an even position");
                }
                if t % 2 == 1 && s.is_remove() {
                    return Validation::fail(t, "box removed at an odd position");
                }
            }
        }
        TableauKind::Hesitating => {
            for (pair, s) in steps.chunks(2).enumerate() {
                let ok = (s[0].is_stay() && s[1].is_add())
                    || (s[0].is_remove() && s[1].is_stay())
                    || (s[0].is_add() && s[1].is_remove());
                if !ok {
                    return Validation::fail(2 * pair, "step pair is not (stay, add), (remove, stay) or (add, remove)");
                }
            }
        }
    }
    Validation::ok()
}

/// A validated tableau sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SequenceRepr")]
pub struct FerrersSequence {
    kind: TableauKind,
    shapes: Vec<Partition>,
}

#[derive(Deserialize)]
struct SequenceRepr {
    kind: TableauKind,
    shapes: Vec<Partition>,
}

impl TryFrom<SequenceRepr> for FerrersSequence {
    type Error = Error;

    fn try_from(r: SequenceRepr) -> Result<Self> {
        Self::new(r.kind, r.shapes)
    }
}

impl FerrersSequence {
    pub fn new(kind: TableauKind, shapes: Vec<Partition>) -> Result<Self> {
        let v = validate(kind, &shapes);
        if !v.valid {
            return Err(Error::InvalidSequence(format!(
                "step {}: {}",
                v.index.unwrap_or(0),
                v.reason.unwrap_or_default()
            )));
        }
        Ok(Self { kind, shapes })
    }

    /// The sequence `(∅)` of length 0.
    pub fn trivial(kind: TableauKind) -> Self {
        Self {
            kind,
            shapes: vec![Partition::empty()],
        }
    }

    pub(crate) fn from_parts_unchecked(kind: TableauKind, shapes: Vec<Partition>) -> Self {
        Self { kind, shapes }
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn last(&self) -> &Partition {
        self.shapes.last().expect("at least one shape")
    }

    pub fn max_height(&self) -> usize {
        self.shapes.iter().map(Partition::height).max().unwrap_or(0)
    }

    pub fn max_width(&self) -> usize {
        self.shapes.iter().map(Partition::width).max().unwrap_or(0)
    }

    pub fn steps(&self) -> Vec<ShapeStep> {
        self.shapes
            .windows(2)
            .map(|w| ShapeStep::between(&w[0], &w[1]).expect("validated"))
            .collect()
    }

    /// Elementwise conjugation. Conjugation preserves every kind's rules.
    pub fn transpose(&self) -> Self {
        Self {
            kind: self.kind,
            shapes: self.shapes.iter().map(Partition::conjugate).collect(),
        }
    }
}

impl fmt::Display for FerrersSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(Partition::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The two coordinate conventions for the chamber `W_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `x_1 >= ... >= x_k >= 0`.
    Weak,
    /// `x_1 > ... > x_k > 0`, the weak chamber translated by `(k, k-1, ..., 1)`.
    Shifted,
}

impl Region {
    pub fn contains(self, x: &[i64]) -> bool {
        let strict = self == Region::Shifted;
        let last_ok = x.last().is_none_or(|&v| if strict { v > 0 } else { v >= 0 });
        last_ok
            && x.windows(2)
                .all(|w| if strict { w[0] > w[1] } else { w[0] >= w[1] })
    }
}

/// The shift `δ = (k, k-1, ..., 1)` between the two conventions.
pub fn delta(k: usize) -> Vec<i64> {
    (1..=k as i64).rev().collect()
}

/// A walk with steps `0` (stay), `+i` (`e_i`) or `-i` (`-e_i`), `1 <= i <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeWalk {
    k: usize,
    region: Region,
    start: Vec<i64>,
    steps: Vec<i32>,
}

impl LatticeWalk {
    pub fn new(k: usize, region: Region, start: Vec<i64>, steps: Vec<i32>) -> Result<Self> {
        if start.len() != k {
            return Err(Error::InvalidWalk(format!("start has {} coordinates, k = {k}", start.len())));
        }
        if let Some(&s) = steps.iter().find(|s| s.unsigned_abs() as usize > k) {
            return Err(Error::InvalidWalk(format!("step {s} is not in dimension {k}")));
        }
        let walk = Self { k, region, start, steps };
        for (t, p) in walk.positions().iter().enumerate() {
            if !region.contains(p) {
                return Err(Error::InvalidWalk(format!("position {t} {p:?} leaves the chamber")));
            }
        }
        Ok(walk)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn start(&self) -> &[i64] {
        &self.start
    }

    pub fn steps(&self) -> &[i32] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Positions after 0, 1, ..., len steps.
    pub fn positions(&self) -> Vec<Vec<i64>> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for &s in &self.steps {
            if s != 0 {
                cur[s.unsigned_abs() as usize - 1] += i64::from(s.signum());
            }
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self) -> Vec<i64> {
        self.positions().pop().expect("at least the start")
    }

    /// The same walk in the other coordinate convention.
    pub fn to_region(&self, region: Region) -> Self {
        if region == self.region {
            return self.clone();
        }
        let d = delta(self.k);
        let start = self
            .start
            .iter()
            .zip(&d)
            .map(|(x, s)| if region == Region::Shifted { x + s } else { x - s })
            .collect();
        Self {
            k: self.k,
            region,
            start,
            steps: self.steps.clone(),
        }
    }
}

/// Part vectors of the shapes, as a weak-region walk from the origin.
pub fn seq_to_walk(seq: &FerrersSequence, k: usize) -> Result<LatticeWalk> {
    let steps = seq
        .steps()
        .into_iter()
        .map(|s| match s {
            ShapeStep::Stay => Ok(0),
            ShapeStep::Add(r) if r < k => Ok(r as i32 + 1),
            ShapeStep::Remove(r) => Ok(-(r as i32 + 1)),
            ShapeStep::Add(_) => Err(Error::HeightOverflow {
                height: seq.max_height(),
                k,
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    LatticeWalk::new(k, Region::Weak, vec![0; k], steps)
}

/// Inverse of [`seq_to_walk`]; shifted walks are translated first.
pub fn walk_to_seq(walk: &LatticeWalk, kind: TableauKind) -> Result<FerrersSequence> {
    let weak = walk.to_region(Region::Weak);
    if weak.start.iter().any(|&x| x != 0) {
        return Err(Error::InvalidWalk("tableau walks start at the origin".into()));
    }
    let shapes = weak
        .positions()
        .iter()
        .map(|p| Partition::from_vector(p))
        .collect::<Result<Vec<_>>>()?;
    FerrersSequence::new(kind, shapes)
}

/// Filter on the final shape of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndFilter {
    Any,
    /// `(m)` for some `m >= 0`, the empty shape included.
    AnyRow,
    Shape(Partition),
}

impl EndFilter {
    pub fn accepts(&self, p: &Partition) -> bool {
        match self {
            EndFilter::Any => true,
            EndFilter::AnyRow => p.is_row(),
            EndFilter::Shape(s) => s == p,
        }
    }
}

fn add_moves(p: &Partition, k: usize) -> Vec<Partition> {
    p.addable_rows()
        .into_iter()
        .filter(|&r| r < k)
        .filter_map(|r| p.with_box_added(r))
        .collect()
}

fn remove_moves(p: &Partition) -> Vec<Partition> {
    p.removable_rows()
        .into_iter()
        .filter_map(|r| p.with_box_removed(r))
        .collect()
}

/// Every tableau of the kind with `length` steps, height at most `k`, and an
/// accepted final shape, by depth-first generation.
pub fn enumerate_tableaux(
    kind: TableauKind,
    length: usize,
    k: usize,
    end: &EndFilter,
) -> Vec<FerrersSequence> {
    fn go(
        kind: TableauKind,
        length: usize,
        k: usize,
        end: &EndFilter,
        shapes: &mut Vec<Partition>,
        out: &mut Vec<FerrersSequence>,
    ) {
        let t = shapes.len() - 1;
        let cur = shapes[t].clone();
        if t == length {
            if end.accepts(&cur) {
                out.push(FerrersSequence::from_parts_unchecked(kind, shapes.clone()));
            }
            return;
        }
        // Each entry is the list of shapes appended by one move.
        let moves: Vec<Vec<Partition>> = match kind {
            TableauKind::Oscillating => add_moves(&cur, k)
                .into_iter()
                .chain(remove_moves(&cur))
                .map(|p| vec![p])
                .collect(),
            TableauKind::Vacillating => {
                let changed = if t.is_multiple_of(2) { remove_moves(&cur) } else { add_moves(&cur, k) };
                std::iter::once(cur.clone())
                    .chain(changed)
                    .map(|p| vec![p])
                    .collect()
            }
            TableauKind::Hesitating => {
                let mut moves = Vec::new();
                for a in add_moves(&cur, k) {
                    moves.push(vec![cur.clone(), a]);
                }
                for r in remove_moves(&cur) {
                    moves.push(vec![r.clone(), r]);
                }
                for a in add_moves(&cur, k) {
                    for r in remove_moves(&a) {
                        moves.push(vec![a.clone(), r]);
                    }
                }
                moves
            }
        };
        for mv in moves {
            let n = mv.len();
            shapes.extend(mv);
            go(kind, length, k, end, shapes, out);
            shapes.truncate(shapes.len() - n);
        }
    }

    if kind != TableauKind::Oscillating && length % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(kind, length, k, end, &mut vec![Partition::empty()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::shape;

    fn shapes(parts: &[&[u32]]) -> Vec<Partition> {
        parts.iter().map(|p| shape(p)).collect()
    }

    fn figure_one_vacillating() -> Vec<Partition> {
        shapes(&[&[], &[], &[1], &[1], &[1, 1], &[1], &[2], &[2], &[2], &[2], &[2, 1]])
    }

    fn figure_one_hesitating() -> Vec<Partition> {
        shapes(&[&[], &[], &[1], &[1], &[2], &[2, 1], &[1, 1], &[1], &[1]])
    }

    fn figure_one_oscillating() -> Vec<Partition> {
        shapes(&[
            &[],
            &[1],
            &[1, 1],
            &[2, 1],
            &[2],
            &[2, 1],
            &[2, 2],
            &[3, 2],
            &[3, 1],
            &[3],
            &[3, 1],
            &[2, 1],
        ])
    }

    #[test]
    fn figure_one_sequences_are_valid() {
        let v = FerrersSequence::new(TableauKind::Vacillating, figure_one_vacillating()).unwrap();
        assert_eq!(v.len(), 10);
        let h = FerrersSequence::new(TableauKind::Hesitating, figure_one_hesitating()).unwrap();
        assert_eq!(h.len(), 8);
        let o = FerrersSequence::new(TableauKind::Oscillating, figure_one_oscillating()).unwrap();
        assert_eq!(o.len(), 11);
        for s in [&v, &h, &o] {
            assert_eq!(s.max_height(), 2);
        }
    }

    #[test]
    fn violations_are_located() {
        let stay = validate(TableauKind::Oscillating, &shapes(&[&[], &[]]));
        assert!(!stay.valid);
        assert_eq!(stay.index, Some(0));
        let v = validate(TableauKind::Vacillating, &shapes(&[&[], &[1], &[1]]));
        assert_eq!(v.index, Some(0));
        let odd = validate(TableauKind::Hesitating, &shapes(&[&[], &[1]]));
        assert!(!odd.valid);
        let jump = validate(TableauKind::Oscillating, &shapes(&[&[], &[2]]));
        assert_eq!(jump.index, Some(0));
        let h = validate(TableauKind::Hesitating, &shapes(&[&[], &[], &[], &[1], &[]]));
        assert_eq!(h.index, Some(0));
        assert!(!validate(TableauKind::Hesitating, &shapes(&[&[1]])).valid);
    }

    #[test]
    fn walks_of_figure_one() {
        let o = FerrersSequence::new(TableauKind::Oscillating, figure_one_oscillating()).unwrap();
        let w = seq_to_walk(&o, 2).unwrap();
        assert_eq!(w.steps(), &[1, 2, 1, -2, 2, 2, 1, -2, -2, 2, -1]);
        assert_eq!(w.end(), vec![2, 1]);
        assert_eq!(walk_to_seq(&w, TableauKind::Oscillating).unwrap(), o);
        let h = FerrersSequence::new(TableauKind::Hesitating, figure_one_hesitating()).unwrap();
        let hw = seq_to_walk(&h, 2).unwrap();
        assert_eq!(hw.steps(), &[0, 1, 0, 1, 2, -1, -2, 0]);
        assert!(seq_to_walk(&o, 1).is_err());
    }

    #[test]
    fn trivial_sequence_is_the_origin() {
        let w = seq_to_walk(&FerrersSequence::trivial(TableauKind::Vacillating), 3).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.end(), vec![0, 0, 0]);
    }

    #[test]
    fn regions_translate() {
        let w = LatticeWalk::new(2, Region::Weak, vec![0, 0], vec![1, 2]).unwrap();
        let s = w.to_region(Region::Shifted);
        assert_eq!(s.start(), &[2, 1]);
        assert_eq!(s.end(), vec![3, 2]);
        assert_eq!(s.to_region(Region::Weak), w);
        assert!(LatticeWalk::new(2, Region::Weak, vec![0, 0], vec![2]).is_err());
        assert!(LatticeWalk::new(2, Region::Shifted, vec![1, 1], vec![]).is_err());
        assert!(Region::Shifted.contains(&[2, 1]));
        assert!(!Region::Shifted.contains(&[1, 0]));
    }

    #[test]
    fn small_enumerations() {
        let count = |kind, len, k, end: EndFilter| enumerate_tableaux(kind, len, k, &end).len();
        assert_eq!(count(TableauKind::Oscillating, 3, 1, EndFilter::Shape(shape(&[1]))), 2);
        assert_eq!(count(TableauKind::Oscillating, 3, 1, EndFilter::Shape(shape(&[3]))), 1);
        assert_eq!(count(TableauKind::Hesitating, 2, 2, EndFilter::AnyRow), 2);
        assert_eq!(count(TableauKind::Vacillating, 0, 2, EndFilter::Shape(Partition::empty())), 1);
        assert_eq!(count(TableauKind::Hesitating, 3, 2, EndFilter::Any), 0);
    }

    #[test]
    fn enumerated_sequences_validate_and_roundtrip() {
        for kind in [TableauKind::Oscillating, TableauKind::Vacillating, TableauKind::Hesitating] {
            for len in 0..=8 {
                for k in 1..=3 {
                    let all = enumerate_tableaux(kind, len, k, &EndFilter::Any);
                    for s in &all {
                        assert!(validate(kind, s.shapes()).valid, "{s}");
                        assert!(s.max_height() <= k);
                        let w = seq_to_walk(s, k).unwrap();
                        assert_eq!(&walk_to_seq(&w, kind).unwrap(), s);
                        assert_eq!(s.transpose().transpose(), *s);
                    }
                    let mut sorted = all.clone();
                    sorted.sort();
                    sorted.dedup();
                    assert_eq!(sorted.len(), all.len());
                }
            }
        }
    }

    #[test]
    fn transpose_is_valid() {
        let v = FerrersSequence::new(TableauKind::Vacillating, figure_one_vacillating()).unwrap();
        let t = v.transpose();
        assert!(validate(TableauKind::Vacillating, t.shapes()).valid);
        assert_eq!(t.shapes()[10], shape(&[2, 1]));
        assert_eq!(t.shapes()[6], shape(&[1, 1]));
    }

    #[test]
    fn json_is_a_tagged_list_of_partitions() {
        let s = FerrersSequence::new(TableauKind::Oscillating, shapes(&[&[], &[1], &[]])).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"kind":"oscillating","shapes":[[],[1],[]]}"#
        );
        let bad = r#"{"kind":"oscillating","shapes":[[],[]]}"#;
        assert!(serde_json::from_str::<FerrersSequence>(bad).is_err());
    }
}
