//! Arc diagrams of set partitions, matchings and involutions, with or without
//! open arcs, and their crossing and nesting statistics.
//!
//! Dots are numbered from 1. Loops are never stored: a dot touching no arc and
//! carrying no open arc is an isolated dot, and the enhanced statistics treat it
//! as a virtual loop `(i, i)` at query time.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::Involution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramClass {
    SetPartition,
    Matching,
    Involution,
    OpenPartition,
    OpenMatching,
}

impl DiagramClass {
    pub fn allows_open_arcs(self) -> bool {
        matches!(self, Self::OpenPartition | Self::OpenMatching)
    }

    pub fn allows_isolated_dots(self) -> bool {
        matches!(self, Self::SetPartition | Self::Involution | Self::OpenPartition)
    }

    /// Matching-like classes: every dot is the endpoint of at most one arc.
    pub fn is_matching_like(self) -> bool {
        matches!(self, Self::Matching | Self::Involution | Self::OpenMatching)
    }
}

impl std::str::FromStr for DiagramClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "set_partition" => Ok(Self::SetPartition),
            "matching" => Ok(Self::Matching),
            "involution" => Ok(Self::Involution),
            "open_partition" => Ok(Self::OpenPartition),
            "open_matching" => Ok(Self::OpenMatching),
            other => Err(Error::InvalidArgument(format!("unknown diagram class `{other}`"))),
        }
    }
}

/// `n` dots, closed arcs `(i, j)` with `i < j`, and the left endpoints of open arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
    open: Vec<usize>,
    class: DiagramClass,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    #[serde(default)]
    arcs: Vec<[usize; 2]>,
    #[serde(default)]
    open: Vec<usize>,
    class: DiagramClass,
}

impl TryFrom<DiagramRepr> for ArcDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        ArcDiagram::new(
            r.n,
            r.arcs.into_iter().map(|[i, j]| (i, j)).collect(),
            r.open,
            r.class,
        )
    }
}

impl From<ArcDiagram> for DiagramRepr {
    fn from(d: ArcDiagram) -> Self {
        Self {
            n: d.n,
            arcs: d.arcs.into_iter().map(|(i, j)| [i, j]).collect(),
            open: d.open,
            class: d.class,
        }
    }
}

/// Role of a dot when the diagram is read left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Opener,
    Closer,
    Both,
    Neither,
}

impl Role {
    pub fn letter(self) -> char {
        match self {
            Role::Opener => 'O',
            Role::Closer => 'C',
            Role::Both => 'B',
            Role::Neither => 'N',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    Crossing,
    Nesting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Plain,
    Enhanced,
    Open,
    EnhancedOpen,
}

impl Variant {
    fn enhanced(self) -> bool {
        matches!(self, Variant::Enhanced | Variant::EnhancedOpen)
    }

    fn open(self) -> bool {
        matches!(self, Variant::Open | Variant::EnhancedOpen)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternQuery {
    pub pattern: Pattern,
    pub variant: Variant,
}

impl PatternQuery {
    pub const fn new(pattern: Pattern, variant: Variant) -> Self {
        Self { pattern, variant }
    }
}

impl ArcDiagram {
    pub fn new(
        n: usize,
        arcs: Vec<(usize, usize)>,
        open: Vec<usize>,
        class: DiagramClass,
    ) -> Result<Self> {
        let mut arcs = arcs;
        arcs.sort_unstable();
        let mut open = open;
        open.sort_unstable();
        let bad = |msg: String| Err(Error::InvalidDiagram(msg));
        for &(i, j) in &arcs {
            if !(1 <= i && i < j && j <= n) {
                return bad(format!("arc ({i}, {j}) is not an arc on 1..={n}"));
            }
        }
        if arcs.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated arc".into());
        }
        if open.iter().any(|&o| o == 0 || o > n) || open.windows(2).any(|w| w[0] == w[1]) {
            return bad(format!("open arcs {open:?} are not distinct dots of 1..={n}"));
        }
        if !open.is_empty() && !class.allows_open_arcs() {
            return bad(format!("{class:?} diagrams have no open arcs"));
        }
        // Arcs going right (closed or open) and arcs coming from the left, per dot.
        let mut right = vec![0usize; n + 1];
        let mut left = vec![0usize; n + 1];
        for &(i, j) in &arcs {
            right[i] += 1;
            left[j] += 1;
        }
        for &o in &open {
            right[o] += 1;
        }
        if (1..=n).any(|d| right[d] > 1 || left[d] > 1) {
            return bad("a dot has two arcs on the same side".into());
        }
        if class.is_matching_like() {
            if (1..=n).any(|d| right[d] + left[d] > 1) {
                return bad("a dot is the endpoint of two arcs".into());
            }
            let every_dot_used = (1..=n).all(|d| right[d] + left[d] == 1);
            if matches!(class, DiagramClass::Matching | DiagramClass::OpenMatching)
                && !every_dot_used
            {
                return bad(format!("{class:?} diagrams have no isolated dots"));
            }
        }
        Ok(Self { n, arcs, open, class })
    }

    /// Arc representation of a set partition: consecutive elements of each
    /// block are joined, singletons become isolated dots.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut owner = vec![false; n + 1];
        let mut arcs = Vec::new();
        for block in blocks {
            let mut b = block.clone();
            b.sort_unstable();
            for &x in &b {
                if x == 0 || x > n || owner[x] {
                    return Err(Error::InvalidDiagram(format!(
                        "blocks are not disjoint subsets of 1..={n}"
                    )));
                }
                owner[x] = true;
            }
            arcs.extend(b.windows(2).map(|w| (w[0], w[1])));
        }
        if (1..=n).any(|x| !owner[x]) {
            return Err(Error::InvalidDiagram(format!("blocks do not cover 1..={n}")));
        }
        Self::new(n, arcs, Vec::new(), DiagramClass::SetPartition)
    }

    pub fn empty(class: DiagramClass) -> Self {
        Self {
            n: 0,
            arcs: Vec::new(),
            open: Vec::new(),
            class,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn open_arcs(&self) -> &[usize] {
        &self.open
    }

    pub fn class(&self) -> DiagramClass {
        self.class
    }

    /// Same arcs under another class tag, validated.
    pub fn with_class(&self, class: DiagramClass) -> Result<Self> {
        Self::new(self.n, self.arcs.clone(), self.open.clone(), class)
    }

    pub fn isolated_dots(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for &(i, j) in &self.arcs {
            used[i] = true;
            used[j] = true;
        }
        for &o in &self.open {
            used[o] = true;
        }
        (1..=self.n).filter(|&d| !used[d]).collect()
    }

    /// Partner to the right of dot `i`, if `i` opens a closed arc.
    pub fn right_partner(&self, i: usize) -> Option<usize> {
        self.arcs.iter().find(|a| a.0 == i).map(|a| a.1)
    }

    /// Partner to the left of dot `j`, if `j` closes an arc.
    pub fn left_partner(&self, j: usize) -> Option<usize> {
        self.arcs.iter().find(|a| a.1 == j).map(|a| a.0)
    }

    pub fn is_open_left(&self, i: usize) -> bool {
        self.open.binary_search(&i).is_ok()
    }

    /// Blocks of the underlying set partition (open arcs ignored).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 1..=self.n {
            if self.left_partner(start).is_some() {
                continue;
            }
            let mut block = vec![start];
            let mut cur = start;
            while let Some(next) = self.right_partner(cur) {
                block.push(next);
                cur = next;
            }
            out.push(block);
        }
        out
    }

    /// Reflection `i -> n + 1 - i`. Open arcs have no mirror image.
    pub fn mirror(&self) -> Result<Self> {
        if !self.open.is_empty() {
            return Err(Error::IncompatibleQuery("open arcs cannot be reflected".into()));
        }
        let m = self.n + 1;
        let arcs = self.arcs.iter().map(|&(i, j)| (m - j, m - i)).collect();
        Self::new(self.n, arcs, Vec::new(), self.class)
    }

    /// Per-dot roles; open-arc left endpoints count as openers.
    pub fn opener_closer_word(&self) -> Vec<Role> {
        let mut opens = vec![false; self.n + 1];
        let mut closes = vec![false; self.n + 1];
        for &(i, j) in &self.arcs {
            opens[i] = true;
            closes[j] = true;
        }
        for &o in &self.open {
            opens[o] = true;
        }
        (1..=self.n)
            .map(|d| match (opens[d], closes[d]) {
                (true, false) => Role::Opener,
                (false, true) => Role::Closer,
                (true, true) => Role::Both,
                (false, false) => Role::Neither,
            })
            .collect()
    }

    pub fn check_query(&self, q: PatternQuery) -> Result<()> {
        if q.variant.enhanced() && !self.class.allows_isolated_dots() {
            return Err(Error::IncompatibleQuery(format!(
                "enhanced patterns need isolated dots, {:?} has none",
                self.class
            )));
        }
        if q.variant.open() && !self.class.allows_open_arcs() {
            return Err(Error::IncompatibleQuery(format!(
                "open patterns need open arcs, {:?} has none",
                self.class
            )));
        }
        Ok(())
    }

    /// Loops at isolated dots, for the enhanced statistics.
    fn virtual_loops(&self) -> Vec<(usize, usize)> {
        self.isolated_dots().into_iter().map(|d| (d, d)).collect()
    }

    fn arcs_for(&self, enhanced: bool) -> Vec<(usize, usize)> {
        let mut arcs = self.arcs.clone();
        if enhanced {
            arcs.extend(self.virtual_loops());
            arcs.sort_unstable();
        }
        arcs
    }
}

/// Strict relation "`a` then `b`" in a crossing or nesting, with `a.0 < b.0`.
pub(crate) fn related(a: (usize, usize), b: (usize, usize), pattern: Pattern, enhanced: bool) -> bool {
    if a.0 >= b.0 {
        return false;
    }
    let meet = |x: usize, y: usize| if enhanced { x <= y } else { x < y };
    match pattern {
        Pattern::Crossing => meet(b.0, a.1) && a.1 < b.1,
        Pattern::Nesting => meet(b.0, b.1) && b.1 < a.1,
    }
}

/// Longest chain of arcs that all straddle a common point, with left endpoints
/// increasing and right endpoints increasing (crossing) or decreasing (nesting).
/// A plain pattern straddles the gap `[p, p + 1]`, an enhanced one contains dot `p`.
fn longest_straddling_chain(
    arcs: &[(usize, usize)],
    n: usize,
    pattern: Pattern,
    enhanced: bool,
) -> usize {
    (1..=n)
        .map(|p| {
            let around: Vec<(usize, usize)> = arcs
                .iter()
                .copied()
                .filter(|&(i, j)| i <= p && (if enhanced { p <= j } else { p < j }))
                .collect();
            chain_through(&around, pattern)
        })
        .max()
        .unwrap_or(0)
}

/// Longest chain in arcs sorted by left endpoint with strictly increasing lefts
/// and strictly monotone rights.
fn chain_through(arcs: &[(usize, usize)], pattern: Pattern) -> usize {
    let mut best = vec![1usize; arcs.len()];
    for b in 0..arcs.len() {
        for a in 0..b {
            let ok = arcs[a].0 < arcs[b].0
                && match pattern {
                    Pattern::Crossing => arcs[a].1 < arcs[b].1,
                    Pattern::Nesting => arcs[a].1 > arcs[b].1,
                };
            if ok {
                best[b] = best[b].max(best[a] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Arcs that can sit alongside open arc `o` in an open pattern.
fn compatible_with_open(
    arcs: &[(usize, usize)],
    o: usize,
    pattern: Pattern,
    enhanced: bool,
) -> Vec<(usize, usize)> {
    arcs.iter()
        .copied()
        .filter(|&(i, j)| match pattern {
            // the open arc starts after every left end and before every right end
            Pattern::Crossing => i < o && (if enhanced { o <= j } else { o < j }),
            // the open arc starts left of every arc
            Pattern::Nesting => o < i,
        })
        .collect()
}

fn level_with(
    d: &ArcDiagram,
    q: PatternQuery,
    chain: impl Fn(&[(usize, usize)], Pattern, bool) -> usize,
) -> Result<usize> {
    d.check_query(q)?;
    let enhanced = q.variant.enhanced();
    let arcs = d.arcs_for(enhanced);
    let mut best = chain(&arcs, q.pattern, enhanced);
    if q.variant.open() {
        for &o in d.open_arcs() {
            let partners = compatible_with_open(&arcs, o, q.pattern, enhanced);
            best = best.max(1 + chain(&partners, q.pattern, enhanced));
        }
    }
    Ok(best)
}

/// Largest `k` such that `d` contains a `k`-pattern of the requested kind, in arcs.
///
/// Open arcs count as one arc of the pattern; isolated dots count as loops for
/// the enhanced variants. Diagrams up to 20 dots go through the exhaustive
/// search, larger ones through the straddling-chain sweep.
pub fn pattern_level(d: &ArcDiagram, q: PatternQuery) -> Result<usize> {
    if d.n() <= 20 {
        pattern_level_exhaustive(d, q)
    } else {
        pattern_level_sweep(d, q)
    }
}

/// Per-point longest-chain sweep.
pub fn pattern_level_sweep(d: &ArcDiagram, q: PatternQuery) -> Result<usize> {
    let n = d.n();
    level_with(d, q, |arcs, pattern, enhanced| {
        longest_straddling_chain(arcs, n, pattern, enhanced)
    })
}

/// Exhaustive search for pairwise-related arc sets.
pub fn pattern_level_exhaustive(d: &ArcDiagram, q: PatternQuery) -> Result<usize> {
    level_with(d, q, max_pairwise_set)
}

fn max_pairwise_set(arcs: &[(usize, usize)], pattern: Pattern, enhanced: bool) -> usize {
    fn extend(
        chosen: &mut Vec<(usize, usize)>,
        rest: &[(usize, usize)],
        pattern: Pattern,
        enhanced: bool,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if chosen.len() + rest.len() <= *best {
            return;
        }
        for (idx, &arc) in rest.iter().enumerate() {
            if chosen.iter().all(|&c| related(c, arc, pattern, enhanced)) {
                chosen.push(arc);
                extend(chosen, &rest[idx + 1..], pattern, enhanced, best);
                chosen.pop();
            }
        }
    }
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    let mut best = 0;
    extend(&mut Vec::new(), &sorted, pattern, enhanced, &mut best);
    best
}

/// Largest `k` such that the gap `[i, i + 1]` lies below a plain `k`-crossing
/// (or `k`-nesting). `i = n` is accepted and gives 0.
pub fn segment_below_level(d: &ArcDiagram, i: usize, pattern: Pattern) -> Result<usize> {
    if i == 0 || i > d.n() {
        return Err(Error::OutOfRange { index: i, n: d.n() });
    }
    let around: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .copied()
        .filter(|&(a, b)| a <= i && i < b)
        .collect();
    Ok(chain_through(&around, pattern))
}

/// Involution diagram with fixed points as isolated dots.
pub fn involution_diagram(inv: &Involution) -> ArcDiagram {
    ArcDiagram::new(inv.n(), inv.pairs().to_vec(), Vec::new(), DiagramClass::Involution)
        .expect("involutions are valid diagrams")
}

/// Fixed points become open arcs.
pub fn involution_to_open_matching(inv: &Involution) -> ArcDiagram {
    ArcDiagram::new(
        inv.n(),
        inv.pairs().to_vec(),
        inv.fixed_points(),
        DiagramClass::OpenMatching,
    )
    .expect("every dot of the result is used exactly once")
}

/// Open arcs become fixed points.
pub fn open_matching_to_involution(d: &ArcDiagram) -> Result<Involution> {
    if !d.class().is_matching_like() {
        return Err(Error::IncompatibleQuery(format!("{:?} is not a matching", d.class())));
    }
    Involution::new(d.n(), d.arcs().to_vec())
}

/// Diagram of a matching-like class as an involution (isolated dots fixed).
pub fn diagram_to_involution(d: &ArcDiagram) -> Result<Involution> {
    if !d.open_arcs().is_empty() {
        return Err(Error::IncompatibleQuery("diagram has open arcs".into()));
    }
    Involution::new(d.n(), d.arcs().to_vec())
}

/// Longest chain of nesting closed arcs that all contain dot `p` strictly inside.
fn nesting_over_dot(arcs: &[(usize, usize)], p: usize) -> usize {
    let around: Vec<_> = arcs.iter().copied().filter(|&(i, j)| i < p && p < j).collect();
    chain_through(&around, Pattern::Nesting)
}

fn plain_level(arcs: &[(usize, usize)], n: usize, pattern: Pattern) -> usize {
    longest_straddling_chain(arcs, n, pattern, false)
}

/// Enhanced nesting level of an involution, counted in dots.
pub fn enhne(inv: &Involution) -> usize {
    let arcs = inv.pairs();
    let plain = 2 * plain_level(arcs, inv.n(), Pattern::Nesting);
    inv.fixed_points()
        .into_iter()
        .map(|p| 2 * nesting_over_dot(arcs, p) + 1)
        .fold(plain, usize::max)
}

/// Open nesting level of an involution (fixed points read as open arcs), in dots.
pub fn futne(inv: &Involution) -> usize {
    open_level_in_dots(inv, Pattern::Nesting)
}

/// Open crossing level of an involution (fixed points read as open arcs), in dots.
pub fn open_crossing_level(inv: &Involution) -> usize {
    open_level_in_dots(inv, Pattern::Crossing)
}

fn open_level_in_dots(inv: &Involution, pattern: Pattern) -> usize {
    let arcs = inv.pairs();
    let plain = 2 * plain_level(arcs, inv.n(), pattern);
    inv.fixed_points()
        .into_iter()
        .map(|o| {
            let partners = compatible_with_open(arcs, o, pattern, false);
            let inner = match pattern {
                Pattern::Crossing => chain_through(&partners, pattern),
                Pattern::Nesting => plain_level(&partners, inv.n(), pattern),
            };
            2 * inner + 1
        })
        .fold(plain, usize::max)
}

/// Every diagram of the class on `n` dots, each exactly once.
///
/// Open matchings follow the convention that every dot is an arc endpoint or
/// carries an open arc, so they are in bijection with involutions.
pub fn enumerate_diagrams(class: DiagramClass, n: usize) -> impl Iterator<Item = ArcDiagram> {
    let out: Vec<ArcDiagram> = match class {
        DiagramClass::SetPartition => set_partitions(n)
            .into_iter()
            .map(|blocks| ArcDiagram::from_blocks(n, &blocks).expect("valid blocks"))
            .collect(),
        DiagramClass::OpenPartition => set_partitions(n)
            .into_iter()
            .flat_map(|blocks| {
                let base = ArcDiagram::from_blocks(n, &blocks).expect("valid blocks");
                let lasts: Vec<usize> = blocks.iter().map(|b| *b.last().unwrap()).collect();
                (0u64..1 << lasts.len()).map(move |mask| {
                    let open: Vec<usize> = lasts
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| mask >> t & 1 == 1)
                        .map(|(_, &d)| d)
                        .collect();
                    ArcDiagram::new(n, base.arcs.clone(), open, DiagramClass::OpenPartition)
                        .expect("last element of a block may open an arc")
                })
            })
            .collect(),
        DiagramClass::Involution => crate::involution::enumerate_involutions(n)
            .iter()
            .map(involution_diagram)
            .collect(),
        DiagramClass::OpenMatching => crate::involution::enumerate_involutions(n)
            .iter()
            .map(involution_to_open_matching)
            .collect(),
        DiagramClass::Matching => crate::involution::enumerate_involutions(n)
            .into_iter()
            .filter(|inv| inv.fixed_points().is_empty())
            .map(|inv| {
                ArcDiagram::new(n, inv.pairs().to_vec(), Vec::new(), DiagramClass::Matching)
                    .expect("fixed-point-free involution is a perfect matching")
            })
            .collect(),
    };
    out.into_iter()
}

/// Set partitions of `1..=n` as block lists, via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(rgs: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if rgs.len() == n {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            let mut bs = vec![Vec::new(); blocks];
            for (idx, &b) in rgs.iter().enumerate() {
                bs[b].push(idx + 1);
            }
            out.push(bs);
            return;
        }
        let next = rgs.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            rgs.push(b);
            go(rgs, n, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "n={} arcs=[{}]", self.n, arcs.join(" "))?;
        if !self.open.is_empty() {
            write!(f, " open={:?}", self.open)?;
        }
        Ok(())
    }
}

/// Word as a string of `O`, `C`, `B`, `N`.
pub fn word_string(word: &[Role]) -> String {
    word.iter().map(|r| r.letter()).collect()
}

/// Distinct diagrams, for bijectivity checks.
pub fn distinct<'a>(items: impl IntoIterator<Item = &'a ArcDiagram>) -> usize {
    items.into_iter().collect::<BTreeSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::{enumerate_involutions, longest_decreasing_subsequence};

    const PLAIN_CR: PatternQuery = PatternQuery::new(Pattern::Crossing, Variant::Plain);
    const PLAIN_NE: PatternQuery = PatternQuery::new(Pattern::Nesting, Variant::Plain);

    fn figure_four() -> ArcDiagram {
        ArcDiagram::from_blocks(8, &[vec![1, 3, 7], vec![2, 8], vec![4], vec![5, 6]]).unwrap()
    }

    fn figure_seven() -> ArcDiagram {
        ArcDiagram::from_blocks(6, &[vec![1, 5], vec![2, 4, 6], vec![3]]).unwrap()
    }

    fn figure_eight_left() -> ArcDiagram {
        ArcDiagram::new(
            9,
            vec![(1, 7), (2, 4), (4, 5), (8, 9)],
            vec![3, 5, 7],
            DiagramClass::OpenPartition,
        )
        .unwrap()
    }

    #[test]
    fn blocks_to_arcs() {
        let d = figure_four();
        assert_eq!(d.arcs(), &[(1, 3), (2, 8), (3, 7), (5, 6)]);
        assert_eq!(d.isolated_dots(), vec![4]);
        assert_eq!(figure_seven().arcs(), &[(1, 5), (2, 4), (4, 6)]);
        let singletons = ArcDiagram::from_blocks(3, &[vec![1], vec![2], vec![3]]).unwrap();
        assert!(singletons.arcs().is_empty());
        assert_eq!(singletons.isolated_dots(), vec![1, 2, 3]);
        assert_eq!(d.blocks(), vec![vec![1, 3, 7], vec![2, 8], vec![4], vec![5, 6]]);
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(ArcDiagram::from_blocks(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(ArcDiagram::from_blocks(3, &[vec![1, 2]]).is_err());
        assert!(ArcDiagram::from_blocks(2, &[vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn class_invariants() {
        // an open arc may start at the right end of an arc in an open partition
        assert!(ArcDiagram::new(3, vec![(1, 2)], vec![2], DiagramClass::OpenPartition).is_ok());
        // but not in an open matching
        assert!(ArcDiagram::new(3, vec![(1, 2)], vec![2, 3], DiagramClass::OpenMatching).is_err());
        assert!(ArcDiagram::new(2, vec![], vec![1], DiagramClass::OpenMatching).is_err());
        assert!(ArcDiagram::new(2, vec![], vec![1], DiagramClass::SetPartition).is_err());
        assert!(ArcDiagram::new(3, vec![(1, 2)], vec![], DiagramClass::Matching).is_err());
        assert!(ArcDiagram::new(3, vec![(1, 2), (1, 3)], vec![], DiagramClass::SetPartition).is_err());
    }

    #[test]
    fn figure_four_levels() {
        let d = figure_four();
        assert_eq!(pattern_level(&d, PLAIN_CR).unwrap(), 2);
        // (2,8), (3,7), (5,6)
        assert_eq!(pattern_level(&d, PLAIN_NE).unwrap(), 3);
        let enh = PatternQuery::new(Pattern::Crossing, Variant::Enhanced);
        // (1,3) and (3,7) share dot 3
        assert_eq!(pattern_level(&d, enh).unwrap(), 2);
    }

    #[test]
    fn empty_diagram_has_level_zero() {
        for class in [DiagramClass::SetPartition, DiagramClass::OpenPartition] {
            let d = ArcDiagram::empty(class);
            for pattern in [Pattern::Crossing, Pattern::Nesting] {
                for variant in [Variant::Plain, Variant::Enhanced] {
                    assert_eq!(pattern_level(&d, PatternQuery::new(pattern, variant)).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn isolated_dot_is_an_enhanced_one_pattern() {
        let d = ArcDiagram::from_blocks(1, &[vec![1]]).unwrap();
        let q = PatternQuery::new(Pattern::Nesting, Variant::Enhanced);
        assert_eq!(pattern_level(&d, q).unwrap(), 1);
        assert_eq!(pattern_level(&d, PLAIN_NE).unwrap(), 0);
    }

    #[test]
    fn figure_eight_open_nesting() {
        let d = figure_eight_left();
        let q = PatternQuery::new(Pattern::Nesting, Variant::Open);
        assert_eq!(pattern_level(&d, q).unwrap(), 2);
        assert_eq!(pattern_level(&d, PLAIN_NE).unwrap(), 2);
        let cr = PatternQuery::new(Pattern::Crossing, Variant::Open);
        // open arc at 3 under (2,4), itself crossing nothing
        assert_eq!(pattern_level(&d, cr).unwrap(), 2);
    }

    #[test]
    fn incompatible_queries_are_rejected() {
        let m = ArcDiagram::new(2, vec![(1, 2)], vec![], DiagramClass::Matching).unwrap();
        let enh = PatternQuery::new(Pattern::Crossing, Variant::Enhanced);
        let open = PatternQuery::new(Pattern::Crossing, Variant::Open);
        assert!(matches!(pattern_level(&m, enh), Err(Error::IncompatibleQuery(_))));
        assert!(matches!(pattern_level(&figure_seven(), open), Err(Error::IncompatibleQuery(_))));
    }

    #[test]
    fn segments_of_figure_seven() {
        let d = figure_seven();
        assert_eq!(segment_below_level(&d, 3, Pattern::Nesting).unwrap(), 2);
        assert_eq!(segment_below_level(&d, 3, Pattern::Crossing).unwrap(), 1);
        assert_eq!(segment_below_level(&d, 4, Pattern::Crossing).unwrap(), 2);
        assert_eq!(segment_below_level(&d, 4, Pattern::Nesting).unwrap(), 1);
        assert_eq!(segment_below_level(&d, 6, Pattern::Nesting).unwrap(), 0);
        assert!(segment_below_level(&d, 0, Pattern::Nesting).is_err());
        assert!(segment_below_level(&d, 7, Pattern::Nesting).is_err());
        let singletons = ArcDiagram::from_blocks(3, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(segment_below_level(&singletons, 1, Pattern::Crossing).unwrap(), 0);
    }

    #[test]
    fn nesting_statistics_of_examples() {
        let fig10 = Involution::new(10, vec![(1, 7), (3, 9), (4, 6), (5, 10)]).unwrap();
        assert_eq!(enhne(&fig10), 4);
        assert_eq!(futne(&fig10), 5);
        assert_eq!(enhne(&Involution::identity(3)), 1);
        let three = Involution::new(6, vec![(1, 6), (2, 5), (3, 4)]).unwrap();
        assert_eq!(enhne(&three), 6);
        let a1 = Involution::new(5, vec![(1, 5), (2, 3)]).unwrap();
        assert_eq!((enhne(&a1), futne(&a1)), (4, 4));
        let a2 = Involution::new(5, vec![(2, 3), (4, 5)]).unwrap();
        assert_eq!((enhne(&a2), futne(&a2)), (2, 3));
        assert_eq!(futne(&Involution::identity(1)), 1);
        assert_eq!(open_crossing_level(&Involution::identity(1)), 1);
    }

    #[test]
    fn opener_closer_words() {
        assert_eq!(word_string(&figure_seven().opener_closer_word()), "OONBCC");
        assert_eq!(word_string(&figure_four().opener_closer_word()), "OOBNOCCC");
        let all_open = ArcDiagram::new(3, vec![], vec![1, 2, 3], DiagramClass::OpenMatching).unwrap();
        assert_eq!(word_string(&all_open.opener_closer_word()), "OOO");
    }

    #[test]
    fn enumeration_counts() {
        let count = |c, n| enumerate_diagrams(c, n).count();
        assert_eq!(count(DiagramClass::SetPartition, 4), 15);
        assert_eq!(count(DiagramClass::SetPartition, 7), 877);
        assert_eq!(count(DiagramClass::Matching, 6), 15);
        assert_eq!(count(DiagramClass::Matching, 5), 0);
        assert_eq!(count(DiagramClass::OpenMatching, 1), 1);
        assert_eq!(count(DiagramClass::OpenMatching, 4), 10);
        assert_eq!(count(DiagramClass::OpenPartition, 1), 2);
        assert_eq!(count(DiagramClass::Involution, 5), 26);
        for class in [
            DiagramClass::SetPartition,
            DiagramClass::OpenPartition,
            DiagramClass::Matching,
            DiagramClass::OpenMatching,
        ] {
            let all: Vec<_> = enumerate_diagrams(class, 5).collect();
            assert_eq!(distinct(&all), all.len());
        }
    }

    /// Independent recursion for Bell numbers.
    fn bell(n: usize) -> usize {
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn set_partitions_match_bell_numbers() {
        for n in 0..=7 {
            assert_eq!(enumerate_diagrams(DiagramClass::SetPartition, n).count(), bell(n));
        }
    }

    #[test]
    fn sweep_agrees_with_exhaustive_search() {
        let queries = |class: DiagramClass| {
            let mut qs = Vec::new();
            for pattern in [Pattern::Crossing, Pattern::Nesting] {
                for variant in [Variant::Plain, Variant::Enhanced, Variant::Open, Variant::EnhancedOpen] {
                    qs.push(PatternQuery::new(pattern, variant));
                }
            }
            qs.retain(|&q| ArcDiagram::empty(class).check_query(q).is_ok());
            qs
        };
        for class in [
            DiagramClass::SetPartition,
            DiagramClass::OpenPartition,
            DiagramClass::OpenMatching,
            DiagramClass::Involution,
        ] {
            let max_n = if class == DiagramClass::OpenPartition { 6 } else { 8 };
            for n in 0..=max_n {
                for d in enumerate_diagrams(class, n) {
                    for q in queries(class) {
                        assert_eq!(
                            pattern_level_exhaustive(&d, q).unwrap(),
                            pattern_level_sweep(&d, q).unwrap(),
                            "{d} {q:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_invariance_of_closed_statistics() {
        for n in 0..=7 {
            for d in enumerate_diagrams(DiagramClass::SetPartition, n) {
                let m = d.mirror().unwrap();
                for pattern in [Pattern::Crossing, Pattern::Nesting] {
                    for variant in [Variant::Plain, Variant::Enhanced] {
                        let q = PatternQuery::new(pattern, variant);
                        assert_eq!(pattern_level(&d, q).unwrap(), pattern_level(&m, q).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn segment_level_is_bounded_by_pattern_level() {
        for n in 1..=7 {
            for d in enumerate_diagrams(DiagramClass::SetPartition, n) {
                for pattern in [Pattern::Crossing, Pattern::Nesting] {
                    let whole = pattern_level(&d, PatternQuery::new(pattern, Variant::Plain)).unwrap();
                    let segs: Vec<usize> =
                        (1..=n).map(|i| segment_below_level(&d, i, pattern).unwrap()).collect();
                    assert!(segs.iter().all(|&s| s <= whole));
                    assert_eq!(segs.into_iter().max().unwrap_or(0), whole);
                }
            }
        }
    }

    #[test]
    fn enhanced_nesting_matches_decreasing_subsequences() {
        for n in 0..=8 {
            for inv in enumerate_involutions(n) {
                let lds = longest_decreasing_subsequence(&inv);
                assert_eq!(enhne(&inv), lds);
                let e = enhne(&inv) as i64;
                let f = futne(&inv) as i64;
                assert!((e - f).abs() <= 1, "{inv:?}");
                // enhanced k-nesting in arcs, via the general query
                let d = involution_diagram(&inv);
                let arcs =
                    pattern_level(&d, PatternQuery::new(Pattern::Nesting, Variant::Enhanced)).unwrap();
                assert_eq!(arcs, lds.div_ceil(2));
                let open = involution_to_open_matching(&inv);
                let open_arcs =
                    pattern_level(&open, PatternQuery::new(Pattern::Nesting, Variant::Open)).unwrap();
                assert_eq!(open_arcs, futne(&inv).div_ceil(2));
                let open_cr =
                    pattern_level(&open, PatternQuery::new(Pattern::Crossing, Variant::Open)).unwrap();
                assert_eq!(open_cr, open_crossing_level(&inv).div_ceil(2));
            }
        }
    }

    #[test]
    fn json_schema() {
        let d = figure_eight_left();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(
            s,
            r#"{"n":9,"arcs":[[1,7],[2,4],[4,5],[8,9]],"open":[3,5,7],"class":"open_partition"}"#
        );
        let back: ArcDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"n":2,"arcs":[[1,3]],"class":"set_partition"}"#;
        assert!(serde_json::from_str::<ArcDiagram>(bad).is_err());
    }
}
