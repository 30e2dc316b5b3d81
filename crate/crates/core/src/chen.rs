//! The tableau-sequence bijections for arc diagrams.
//!
//! Diagrams are read left to right, so the tableaux carried along are filled
//! in decreasing order. The shape sequence of [`phi`] is a vacillating
//! tableau; the oscillating and hesitating variants use one step per dot on
//! perfect matchings and a step pair per dot on set partitions respectively.

use serde::{Deserialize, Serialize};

use crate::arcs::{
    involution_diagram, involution_to_open_matching, open_matching_to_involution, ArcDiagram,
    DiagramClass, Role,
};
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::partition::Partition;
use crate::sequence::{FerrersSequence, ShapeStep, TableauKind};

/// A tableau whose rows and columns strictly decrease. Entries are distinct
/// but need not form an interval.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct FilledTableau {
    rows: Vec<Vec<u32>>,
}

impl FilledTableau {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let bad = |m: &str| Err(Error::InvalidTableau(m.to_string()));
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths are not a partition");
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] <= w[1])) {
            return bad("a row is not strictly decreasing");
        }
        if rows
            .windows(2)
            .any(|w| w[1].iter().zip(&w[0]).any(|(below, above)| below >= above))
        {
            return bad("a column is not strictly decreasing");
        }
        let mut all: Vec<u32> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEntry(w[0]));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths are weakly decreasing")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.rows.iter().any(|r| r.contains(&v))
    }

    /// Row insertion for the decreasing order; also returns the row that grew.
    pub fn insert(&self, v: u32) -> Result<(Self, usize)> {
        if self.contains(v) {
            return Err(Error::DuplicateEntry(v));
        }
        let mut rows = self.rows.clone();
        let mut x = v;
        for (r, row) in rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y < x) {
                Some(c) => x = std::mem::replace(&mut row[c], x),
                None => {
                    row.push(x);
                    return Ok((Self { rows }, r));
                }
            }
        }
        rows.push(vec![x]);
        let r = rows.len() - 1;
        Ok((Self { rows }, r))
    }

    /// Removes entry `v`, which must sit in a corner.
    pub fn delete(&self, v: u32) -> Result<Self> {
        let r = self
            .rows
            .iter()
            .position(|row| row.last() == Some(&v))
            .ok_or_else(|| Error::InvalidTableau(format!("{v} is not at the end of a row")))?;
        if self.rows.get(r + 1).is_some_and(|below| below.len() == self.rows[r].len()) {
            return Err(Error::InvalidTableau(format!("{v} is not in a corner")));
        }
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        Ok(Self { rows })
    }

    /// Undoes the insertion that ended by growing row `r`; returns the inserted value.
    pub fn reverse_bump(&self, r: usize) -> Result<(Self, u32)> {
        let mut rows = self.rows.clone();
        let removable = rows.get(r).is_some_and(|row| rows.get(r + 1).is_none_or(|b| b.len() < row.len()));
        if !removable {
            return Err(Error::NoFilling(format!("row {r} does not end in a corner")));
        }
        let mut y = rows[r].pop().expect("nonempty row");
        if rows[r].is_empty() {
            rows.pop();
        }
        for row in rows[..r].iter_mut().rev() {
            let c = row
                .iter()
                .rposition(|&x| x > y)
                .expect("the entry above is larger");
            y = std::mem::replace(&mut row[c], y);
        }
        Ok((Self { rows }, y))
    }

    /// Appends `v` at the end of row `r`, keeping the tableau decreasing.
    fn place(&self, r: usize, v: u32) -> Result<Self> {
        let mut rows = self.rows.clone();
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let c = rows[r].len();
        let left_ok = rows[r].last().is_none_or(|&x| x > v);
        let above_ok = r == 0 || rows[r - 1].get(c).is_some_and(|&x| x > v);
        if !left_ok || !above_ok || self.contains(v) {
            return Err(Error::NoFilling(format!("{v} cannot be placed at the end of row {r}")));
        }
        rows[r].push(v);
        Ok(Self { rows })
    }
}

impl TryFrom<Vec<Vec<u32>>> for FilledTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<FilledTableau> for Vec<Vec<u32>> {
    fn from(t: FilledTableau) -> Self {
        t.rows
    }
}

/// Decreasing-order RSK insertion of `v` into `t`.
pub fn rsk_insert_decreasing(t: &FilledTableau, v: u32) -> Result<FilledTableau> {
    t.insert(v).map(|(t, _)| t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Action {
    Stay,
    Insert(u32),
    Delete(u32),
}

fn steps_per_dot(kind: TableauKind) -> usize {
    match kind {
        TableauKind::Oscillating => 1,
        TableauKind::Vacillating | TableauKind::Hesitating => 2,
    }
}

fn actions_for(d: &ArcDiagram, kind: TableauKind) -> Result<Vec<Action>> {
    if !d.open_arcs().is_empty() {
        return Err(Error::IncompatibleQuery("close the open arcs first".into()));
    }
    let mut out = Vec::with_capacity(d.n() * steps_per_dot(kind));
    for (idx, role) in d.opener_closer_word().into_iter().enumerate() {
        let i = idx + 1;
        let partner = || Action::Insert(d.right_partner(i).expect("opener") as u32);
        let me = i as u32;
        match kind {
            TableauKind::Vacillating => {
                out.push(if matches!(role, Role::Closer | Role::Both) { Action::Delete(me) } else { Action::Stay });
                out.push(if matches!(role, Role::Opener | Role::Both) { partner() } else { Action::Stay });
            }
            TableauKind::Oscillating => out.push(match role {
                Role::Opener => partner(),
                Role::Closer => Action::Delete(me),
                _ => {
                    return Err(Error::IncompatibleQuery(
                        "oscillating tableaux need a perfect matching".into(),
                    ))
                }
            }),
            TableauKind::Hesitating => match role {
                Role::Opener => out.extend([Action::Stay, partner()]),
                Role::Closer => out.extend([Action::Delete(me), Action::Stay]),
                Role::Neither => out.extend([Action::Insert(me), Action::Delete(me)]),
                Role::Both => out.extend([partner(), Action::Delete(me)]),
            },
        }
    }
    Ok(out)
}

fn run(actions: &[Action]) -> Result<Vec<FilledTableau>> {
    let mut out = vec![FilledTableau::empty()];
    for &a in actions {
        let cur = out.last().expect("nonempty");
        let next = match a {
            Action::Stay => cur.clone(),
            Action::Insert(v) => cur.insert(v)?.0,
            Action::Delete(v) => {
                // The deleted entry is the smallest one present, hence a corner.
                debug_assert!(cur.rows().iter().flatten().all(|&x| x >= v));
                cur.delete(v)?
            }
        };
        out.push(next);
    }
    Ok(out)
}

fn shapes_of(tableaux: &[FilledTableau]) -> Vec<Partition> {
    tableaux.iter().map(FilledTableau::shape).collect()
}

/// Filled tableaux and shape sequence of a closed diagram under the bijection
/// of the given kind.
pub fn phi_kind(d: &ArcDiagram, kind: TableauKind) -> Result<(Vec<FilledTableau>, FerrersSequence)> {
    let filled = run(&actions_for(d, kind)?)?;
    let seq = FerrersSequence::new(kind, shapes_of(&filled))?;
    Ok((filled, seq))
}

/// Set partition to vacillating tableau.
pub fn phi(d: &ArcDiagram) -> Result<(Vec<FilledTableau>, FerrersSequence)> {
    phi_kind(d, TableauKind::Vacillating)
}

/// Perfect matching to oscillating tableau.
pub fn phi_oscillating(d: &ArcDiagram) -> Result<FerrersSequence> {
    if d.class() != DiagramClass::Matching {
        return Err(Error::IncompatibleQuery(format!("{:?} is not a matching", d.class())));
    }
    phi_kind(d, TableauKind::Oscillating).map(|(_, s)| s)
}

/// Set partition to hesitating tableau.
pub fn phi_hesitating(d: &ArcDiagram) -> Result<FerrersSequence> {
    phi_kind(d, TableauKind::Hesitating).map(|(_, s)| s)
}

/// Recovers the closed diagram whose image is `seq`, by filling the shapes
/// from the right end with reverse bumping.
pub fn phi_inverse(seq: &FerrersSequence) -> Result<ArcDiagram> {
    let kind = seq.kind();
    let shapes = seq.shapes();
    if !seq.last().is_empty() {
        return Err(Error::NoFilling("sequence does not end at ∅".into()));
    }
    let per = steps_per_dot(kind);
    if !seq.len().is_multiple_of(per) {
        return Err(Error::NoFilling("length is not a whole number of dots".into()));
    }
    let n = seq.len() / per;
    let mut actions = vec![Action::Stay; seq.len()];
    let mut cur = FilledTableau::empty();
    for t in (0..seq.len()).rev() {
        let dot = (t / per + 1) as u32;
        match ShapeStep::between(&shapes[t], &shapes[t + 1]).expect("validated sequence") {
            ShapeStep::Stay => {}
            ShapeStep::Add(r) => {
                let (prev, v) = cur.reverse_bump(r)?;
                cur = prev;
                actions[t] = Action::Insert(v);
            }
            ShapeStep::Remove(r) => {
                cur = cur.place(r, dot)?;
                actions[t] = Action::Delete(dot);
            }
        }
    }
    let no_fill = |i: usize| Error::NoFilling(format!("inconsistent steps at dot {i}"));
    let mut arcs = Vec::new();
    for i in 1..=n {
        let me = i as u32;
        let acts = &actions[(i - 1) * per..i * per];
        let partner = match (kind, acts) {
            (TableauKind::Oscillating, [Action::Insert(j)]) => Some(*j),
            (TableauKind::Oscillating, [Action::Delete(_)]) => None,
            (TableauKind::Vacillating, [a, b]) => {
                if !matches!(a, Action::Stay | Action::Delete(_)) {
                    return Err(no_fill(i));
                }
                match b {
                    Action::Insert(j) => Some(*j),
                    Action::Stay => None,
                    Action::Delete(_) => return Err(no_fill(i)),
                }
            }
            (TableauKind::Hesitating, [Action::Stay, Action::Insert(j)]) => Some(*j),
            (TableauKind::Hesitating, [Action::Delete(_), Action::Stay]) => None,
            (TableauKind::Hesitating, [Action::Insert(x), Action::Delete(_)]) => {
                (*x != me).then_some(*x)
            }
            _ => return Err(no_fill(i)),
        };
        if let Some(j) = partner {
            if j <= me {
                return Err(no_fill(i));
            }
            arcs.push((i, j as usize));
        }
    }
    let class = if kind == TableauKind::Oscillating {
        DiagramClass::Matching
    } else {
        DiagramClass::SetPartition
    };
    let d = ArcDiagram::new(n, arcs, Vec::new(), class).map_err(|e| Error::NoFilling(e.to_string()))?;
    let (_, image) = phi_kind(&d, kind)?;
    if image.shapes() != shapes {
        return Err(Error::NoFilling("the recovered diagram has a different image".into()));
    }
    Ok(d)
}

/// Elementwise transposition.
pub fn tau(seq: &FerrersSequence) -> FerrersSequence {
    seq.transpose()
}

/// How open arcs are closed, and which statistic the bijection tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpenVersion {
    /// Close in decreasing order; height tracks crossings.
    Crossing,
    /// Close in increasing order and transpose; height tracks nestings.
    Nesting,
}

fn closed_class(d: &ArcDiagram) -> Result<DiagramClass> {
    match d.class() {
        DiagramClass::OpenPartition => Ok(DiagramClass::SetPartition),
        DiagramClass::OpenMatching => Ok(DiagramClass::Matching),
        c => Err(Error::IncompatibleQuery(format!("{c:?} has no open arcs to close"))),
    }
}

fn close_with(d: &ArcDiagram, decreasing: bool) -> Result<ArcDiagram> {
    let class = closed_class(d)?;
    let n = d.n();
    let m = d.open_arcs().len();
    let mut arcs = d.arcs().to_vec();
    for (t, &o) in d.open_arcs().iter().enumerate() {
        let end = if decreasing { n + m - t } else { n + 1 + t };
        arcs.push((o, end));
    }
    ArcDiagram::new(n + m, arcs, Vec::new(), class)
}

/// Closes the open arcs `i_1 < ... < i_m` as `(i_1, n+m), ..., (i_m, n+1)`.
pub fn close_open_arcs(d: &ArcDiagram) -> Result<ArcDiagram> {
    close_with(d, true)
}

/// Closes the open arcs `i_1 < ... < i_m` as `(i_1, n+1), ..., (i_m, n+m)`.
pub fn close_open_arcs_increasing(d: &ArcDiagram) -> Result<ArcDiagram> {
    close_with(d, false)
}

fn check_kind(d: &ArcDiagram, kind: TableauKind) -> Result<()> {
    let ok = match kind {
        TableauKind::Oscillating => d.class() == DiagramClass::OpenMatching,
        _ => d.class() == DiagramClass::OpenPartition,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IncompatibleQuery(format!("{kind:?} tableaux do not encode {:?}", d.class())))
    }
}

/// Close, apply the bijection, cut at `n` dots. The result ends at `(m)` when
/// closing decreasingly and at `(1^m)` when closing increasingly.
fn close_and_encode(d: &ArcDiagram, kind: TableauKind, decreasing: bool) -> Result<FerrersSequence> {
    check_kind(d, kind)?;
    let closed = close_with(d, decreasing)?;
    let (_, seq) = phi_kind(&closed, kind)?;
    let cut = d.n() * steps_per_dot(kind);
    let shapes = seq.shapes()[..=cut].to_vec();
    let m = d.open_arcs().len();
    let expected = if decreasing { Partition::row(m as u32) } else { Partition::column(m) };
    assert_eq!(shapes[cut], expected, "closure of {d} does not end at the expected shape");
    FerrersSequence::new(kind, shapes)
}

/// Inverse of [`close_and_encode`].
fn decode_and_reopen(seq: &FerrersSequence, decreasing: bool) -> Result<ArcDiagram> {
    let kind = seq.kind();
    let last = seq.last().clone();
    let fits = if decreasing { last.is_row() } else { last.is_column() };
    if !fits {
        return Err(Error::InvalidSequence(format!(
            "sequence ends at {last}, not a {}",
            if decreasing { "row" } else { "column" }
        )));
    }
    let m = last.size();
    let per = steps_per_dot(kind);
    if !seq.len().is_multiple_of(per) {
        return Err(Error::InvalidSequence("length is not a whole number of dots".into()));
    }
    let n = seq.len() / per;
    let mut shapes = seq.shapes().to_vec();
    for left in (0..m).rev() {
        let shape = if decreasing { Partition::row(left as u32) } else { Partition::column(left) };
        for _ in 0..per {
            shapes.push(shape.clone());
        }
    }
    let closed = phi_inverse(&FerrersSequence::new(kind, shapes)?)?;
    let mut arcs = Vec::new();
    let mut open = Vec::new();
    for &(i, j) in closed.arcs() {
        match (i <= n, j <= n) {
            (true, true) => arcs.push((i, j)),
            (true, false) => open.push(i),
            _ => return Err(Error::NoFilling("an arc joins two closing dots".into())),
        }
    }
    let class = if kind == TableauKind::Oscillating {
        DiagramClass::OpenMatching
    } else {
        DiagramClass::OpenPartition
    };
    let d = ArcDiagram::new(n, arcs, open, class).map_err(|e| Error::NoFilling(e.to_string()))?;
    if close_and_encode(&d, kind, decreasing)? != *seq {
        return Err(Error::NoFilling("reopened diagram has a different image".into()));
    }
    Ok(d)
}

/// Open diagram to a tableau sequence ending at the row `(m)`, `m` the
/// number of open arcs. Oscillating tableaux encode open matchings,
/// vacillating and hesitating ones encode open partitions. The height of the
/// result is the crossing level (or, for [`OpenVersion::Nesting`], the
/// nesting level) of the diagram.
pub fn open_to_tableau(d: &ArcDiagram, kind: TableauKind, version: OpenVersion) -> Result<FerrersSequence> {
    match version {
        OpenVersion::Crossing => close_and_encode(d, kind, true),
        OpenVersion::Nesting => Ok(tau(&close_and_encode(d, kind, false)?)),
    }
}

/// Inverse of [`open_to_tableau`].
pub fn tableau_to_open(seq: &FerrersSequence, version: OpenVersion) -> Result<ArcDiagram> {
    match version {
        OpenVersion::Crossing => decode_and_reopen(seq, true),
        OpenVersion::Nesting => decode_and_reopen(&tau(seq), false),
    }
}

/// `φ⁻¹ ∘ τ ∘ φ` on a closed diagram: swaps crossing and nesting levels and
/// keeps the opener/closer word.
pub fn transpose_diagram(d: &ArcDiagram) -> Result<ArcDiagram> {
    let (_, seq) = phi(d)?;
    phi_inverse(&tau(&seq))
}

/// Involution to open matching: enhanced nestings become crossings and fixed
/// points become open arcs.
pub fn psi(inv: &Involution) -> Result<ArcDiagram> {
    let image = transpose_diagram(&involution_diagram(inv))?;
    let inv2 = Involution::new(image.n(), image.arcs().to_vec())?;
    Ok(involution_to_open_matching(&inv2))
}

/// Inverse of [`psi`].
pub fn psi_inverse(d: &ArcDiagram) -> Result<Involution> {
    if d.class() != DiagramClass::OpenMatching {
        return Err(Error::IncompatibleQuery(format!("{:?} is not an open matching", d.class())));
    }
    let inv = open_matching_to_involution(d)?;
    let image = transpose_diagram(&involution_diagram(&inv))?;
    Involution::new(image.n(), image.arcs().to_vec())
}

/// Open matching to open matching, taking `ℓ`-crossings to `ℓ`-nestings.
fn crossings_to_nestings(d: &ArcDiagram) -> Result<ArcDiagram> {
    let rows = close_and_encode(d, TableauKind::Oscillating, true)?;
    decode_and_reopen(&tau(&rows), false)
}

fn nestings_to_crossings(d: &ArcDiagram) -> Result<ArcDiagram> {
    let cols = close_and_encode(d, TableauKind::Oscillating, false)?;
    decode_and_reopen(&tau(&cols), true)
}

/// An involution with an enhanced `ℓ`-nesting goes to one whose open-matching
/// view has an `ℓ`-nesting, and back.
pub fn theta(inv: &Involution) -> Result<Involution> {
    let nested = crossings_to_nestings(&psi(inv)?)?;
    open_matching_to_involution(&nested)
}

/// Inverse of [`theta`].
pub fn theta_inverse(inv: &Involution) -> Result<Involution> {
    psi_inverse(&nestings_to_crossings(&involution_to_open_matching(inv))?)
}

/// The involution on involutions that swaps [`enhne`](crate::arcs::enhne) and
/// [`futne`](crate::arcs::futne). Elements of `A_{2k,2k+1}` follow `θ` until
/// they reach `A_{2k+1,2k}`, elements of `A_{2k+1,2k}` follow `θ⁻¹` until they
/// reach `A_{2k,2k+1}`, everything else is fixed.
pub fn nesting_swap(inv: &Involution) -> Result<Involution> {
    use crate::arcs::{enhne, futne};
    let (e, f) = (enhne(inv), futne(inv));
    let forward = e % 2 == 0 && f == e + 1;
    let backward = f % 2 == 0 && e == f + 1;
    if !forward && !backward {
        return Ok(inv.clone());
    }
    let target = (f, e);
    let mut cur = inv.clone();
    loop {
        cur = if forward { theta(&cur)? } else { theta_inverse(&cur)? };
        if (enhne(&cur), futne(&cur)) == target {
            return Ok(cur);
        }
        if cur == *inv {
            return Err(Error::NoFilling(format!("orbit of {inv:?} never reaches {target:?}")));
        }
    }
}

/// Standard Young tableau to open matching, through inverse RSK and `ψ`.
pub fn syt_to_open_matching(t: &crate::tableau::StandardYoungTableau) -> Result<ArcDiagram> {
    psi(&crate::involution::rsk_syt_to_involution(t)?)
}

/// Inverse of [`syt_to_open_matching`].
pub fn open_matching_to_syt(d: &ArcDiagram) -> Result<crate::tableau::StandardYoungTableau> {
    Ok(crate::involution::rsk_involution_to_syt(&psi_inverse(d)?))
}
