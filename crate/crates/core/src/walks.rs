//! Exact counting of lattice walks in Weyl chambers and the quadrant, the
//! marked-walk table, switch-multiplicities of quadrant excursions and the
//! non-intersecting path triples.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{binomial, Count};
use crate::sequence::TableauKind;

/// Where a walk must stay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// `x_1 >= ... >= x_k >= 0`.
    Weak,
    /// `x_1 > ... > x_k > 0`.
    Shifted,
    /// `x, y >= 0`, two dimensions only.
    Quadrant,
    /// `x > y >= 0`, the weak two-dimensional chamber moved one unit right.
    Wedge,
}

impl Domain {
    pub fn contains(self, x: &[i64]) -> bool {
        match self {
            Domain::Weak => crate::sequence::Region::Weak.contains(x),
            Domain::Shifted => crate::sequence::Region::Shifted.contains(x),
            Domain::Quadrant => x.iter().all(|&v| v >= 0),
            Domain::Wedge => x[0] > x[1] && x[1] >= 0,
        }
    }

    fn check_dimension(self, k: usize) -> Result<()> {
        if matches!(self, Domain::Quadrant | Domain::Wedge) && k != 2 {
            return Err(Error::InvalidArgument(format!("{self:?} is two-dimensional, got k = {k}")));
        }
        Ok(())
    }
}

impl std::str::FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(Self::Weak),
            "shifted" => Ok(Self::Shifted),
            "quadrant" => Ok(Self::Quadrant),
            "wedge" => Ok(Self::Wedge),
            other => Err(Error::InvalidArgument(format!("unknown domain `{other}`"))),
        }
    }
}

/// A family of walks: `length` single steps of the given kind from `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSpec {
    pub kind: TableauKind,
    pub domain: Domain,
    pub k: usize,
    pub length: usize,
    pub start: Vec<i64>,
}

impl WalkSpec {
    /// Walks from the natural origin of the domain: `0`, `δ`, `0` or `(1, 0)`.
    pub fn new(kind: TableauKind, domain: Domain, k: usize, length: usize) -> Self {
        let start = match domain {
            Domain::Weak | Domain::Quadrant => vec![0; k],
            Domain::Shifted => crate::sequence::delta(k),
            Domain::Wedge => vec![1, 0],
        };
        Self { kind, domain, k, length, start }
    }

    pub fn from(mut self, start: Vec<i64>) -> Self {
        self.start = start;
        self
    }

    fn validate(&self) -> Result<()> {
        self.domain.check_dimension(self.k)?;
        if self.start.len() != self.k {
            return Err(Error::InvalidArgument("start has the wrong dimension".into()));
        }
        if self.kind != TableauKind::Oscillating && self.length % 2 == 1 {
            return Err(Error::InvalidArgument(format!("{:?} walks have even length", self.kind)));
        }
        Ok(())
    }
}

/// Single steps as signed coordinates: `0` stay, `+i` for `e_i`, `-i` for `-e_i`.
fn unit_steps(k: usize) -> impl Iterator<Item = i32> + Clone {
    (1..=k as i32).flat_map(|i| [i, -i])
}

/// The allowed moves, each a sequence of one or two single steps.
fn moves(kind: TableauKind, k: usize) -> Vec<Vec<i32>> {
    let pos = 1..=k as i32;
    match kind {
        TableauKind::Oscillating => unit_steps(k).map(|s| vec![s]).collect(),
        TableauKind::Vacillating => {
            let mut out = vec![vec![0, 0]];
            out.extend(pos.clone().map(|i| vec![0, i]));
            out.extend(pos.clone().map(|i| vec![-i, 0]));
            for i in pos.clone() {
                out.extend(pos.clone().map(|j| vec![-i, j]));
            }
            out
        }
        TableauKind::Hesitating => {
            let mut out: Vec<Vec<i32>> = pos.clone().map(|i| vec![0, i]).collect();
            out.extend(pos.clone().map(|i| vec![-i, 0]));
            for i in pos.clone() {
                out.extend(pos.clone().map(|j| vec![i, -j]));
            }
            out
        }
    }
}

fn apply(x: &mut [i64], s: i32) {
    if s != 0 {
        x[s.unsigned_abs() as usize - 1] += i64::from(s.signum());
    }
}

/// Applies a move if every intermediate point stays in the domain.
fn try_move(domain: Domain, x: &[i64], mv: &[i32]) -> Option<Vec<i64>> {
    let mut y = x.to_vec();
    for &s in mv {
        apply(&mut y, s);
        if !domain.contains(&y) {
            return None;
        }
    }
    Some(y)
}

/// Number of walks of the family ending at each point, by forward dynamic
/// programming over positions.
pub fn count_walks<C: Count>(spec: &WalkSpec) -> Result<BTreeMap<Vec<i64>, C>> {
    spec.validate()?;
    if !spec.domain.contains(&spec.start) {
        return Err(Error::InvalidWalk(format!("start {:?} is outside {:?}", spec.start, spec.domain)));
    }
    let mvs = moves(spec.kind, spec.k);
    let per = mvs[0].len();
    let mut layer: HashMap<Vec<i64>, C> = HashMap::from([(spec.start.clone(), C::one())]);
    for _ in 0..spec.length / per {
        let mut next: HashMap<Vec<i64>, C> = HashMap::with_capacity(layer.len() * 2);
        for (x, c) in &layer {
            for mv in &mvs {
                if let Some(y) = try_move(spec.domain, x, mv) {
                    *next.entry(y).or_insert_with(C::zero) += c;
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().collect())
}

/// Total over the endpoints accepted by `keep`.
pub fn count_walks_to<C: Count>(spec: &WalkSpec, keep: impl Fn(&[i64]) -> bool) -> Result<C> {
    let mut total = C::zero();
    for (x, c) in count_walks::<C>(spec)? {
        if keep(&x) {
            total += &c;
        }
    }
    Ok(total)
}

/// Every walk of the family as a list of single steps, by depth-first search.
pub fn enumerate_walks(spec: &WalkSpec) -> Result<Vec<Vec<i32>>> {
    fn go(
        domain: Domain,
        mvs: &[Vec<i32>],
        remaining: usize,
        x: &[i64],
        path: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if remaining == 0 {
            out.push(path.clone());
            return;
        }
        for mv in mvs {
            if let Some(y) = try_move(domain, x, mv) {
                path.extend(mv);
                go(domain, mvs, remaining - 1, &y, path, out);
                path.truncate(path.len() - mv.len());
            }
        }
    }
    spec.validate()?;
    let mvs = moves(spec.kind, spec.k);
    let mut out = Vec::new();
    if spec.domain.contains(&spec.start) {
        go(spec.domain, &mvs, spec.length / mvs[0].len(), &spec.start, &mut Vec::new(), &mut out);
    }
    Ok(out)
}

/// Endpoint of a step list from `start`.
pub fn walk_end(start: &[i64], steps: &[i32]) -> Vec<i64> {
    let mut x = start.to_vec();
    for &s in steps {
        apply(&mut x, s);
    }
    x
}

/// `W_2` hesitating walks of `2n` steps from the origin ending on the x-axis.
pub fn hesitating_axis_count(n: usize) -> BigUint {
    let spec = WalkSpec::new(TableauKind::Hesitating, Domain::Weak, 2, 2 * n);
    count_walks_to::<BigUint>(&spec, |x| x[1] == 0).expect("valid spec")
}

/// Result of [`reflection_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionCheck {
    pub wedge: BigInt,
    pub quadrant: BigInt,
    pub quadrant_reflected: BigInt,
    pub holds: bool,
}

/// Checks `w(λ, μ, n) = q(λ, μ, n) - q(λ, μ̄, n)` for hesitating walks, with
/// `w` counted in the wedge `x > y >= 0`, `q` in the quadrant and `μ̄` the
/// reflection of `μ` in the diagonal. `n` counts single steps.
pub fn reflection_check(lambda: [i64; 2], mu: [i64; 2], n: usize) -> Result<ReflectionCheck> {
    if !Domain::Wedge.contains(&lambda) || !Domain::Wedge.contains(&mu) {
        return Err(Error::InvalidArgument("λ and μ must lie in x > y >= 0".into()));
    }
    let count = |domain: Domain, target: [i64; 2]| -> Result<BigInt> {
        if n % 2 == 1 {
            return Ok(BigInt::zero());
        }
        let spec = WalkSpec::new(TableauKind::Hesitating, domain, 2, n).from(lambda.to_vec());
        Ok(BigInt::from(count_walks_to::<BigUint>(&spec, |x| x == target)?))
    };
    let wedge = count(Domain::Wedge, mu)?;
    let quadrant = count(Domain::Quadrant, mu)?;
    let quadrant_reflected = count(Domain::Quadrant, [mu[1], mu[0]])?;
    let holds = wedge == &quadrant - &quadrant_reflected;
    Ok(ReflectionCheck { wedge, quadrant, quadrant_reflected, holds })
}

/// Both sides of the oscillating/positive-step count equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveStepCheck {
    pub oscillating_to_axis: BigUint,
    pub positive_steps: BigUint,
    pub holds: bool,
}

/// Oscillating walks in the `k`-chamber from `δ` ending at some `m e_1 + δ`,
/// against walks in the `2k`-chamber from `δ` using only the steps `e_j`.
pub fn positive_step_check(k: usize, n: usize) -> Result<PositiveStepCheck> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let osc = WalkSpec::new(TableauKind::Oscillating, Domain::Shifted, k, n);
    let delta = crate::sequence::delta(k);
    let oscillating_to_axis =
        count_walks_to::<BigUint>(&osc, |x| x[1..] == delta[1..])?;
    let positive_steps = positive_step_walks(2 * k, n);
    let holds = oscillating_to_axis == positive_steps;
    Ok(PositiveStepCheck { oscillating_to_axis, positive_steps, holds })
}

/// Walks of `n` steps `e_j` in `x_1 > ... > x_d > 0` from `δ`, ending anywhere.
pub fn positive_step_walks(d: usize, n: usize) -> BigUint {
    let mut layer: HashMap<Vec<i64>, BigUint> =
        HashMap::from([(crate::sequence::delta(d), BigUint::one())]);
    for _ in 0..n {
        let mut next: HashMap<Vec<i64>, BigUint> = HashMap::new();
        for (x, c) in &layer {
            for i in 0..d {
                let mut y = x.clone();
                y[i] += 1;
                if Domain::Shifted.contains(&y) {
                    *next.entry(y).or_insert_with(BigUint::zero) += c;
                }
            }
        }
        layer = next;
    }
    layer.into_values().sum()
}

/// The pair moves of a `W_2` hesitating walk, as displacements. The last two
/// are the stationary moves `s_1 = (e_1, -e_1)` and `s_2 = (e_2, -e_2)`.
const PAIR_MOVES: [(i64, i64); 8] = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1), (0, 0), (0, 0)];
const S1: usize = 6;

/// `a(n; i, j, m)` for one `n`: hesitating walks of `2n` steps in
/// `x >= y >= 0` from the origin to `(i, j)` with `m` marked steps, each
/// marked step being a nonempty step ending on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTable<C = BigUint> {
    n: usize,
    values: Vec<C>,
}

impl<C: Count + Send + Sync> MarkedTable<C> {
    fn index(n: usize, i: usize, j: usize, m: usize) -> usize {
        (i * (n + 1) + j) * (n + 1) + m
    }

    pub fn zero_layer() -> Self {
        Self { n: 0, values: vec![C::one()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Zero outside `0 <= j <= i <= n`, `0 <= m <= n`.
    pub fn get(&self, i: i64, j: i64, m: i64) -> C {
        let n = self.n as i64;
        if j < 0 || j > i || i > n || m < 0 || m > n {
            return C::zero();
        }
        self.values[Self::index(self.n, i as usize, j as usize, m as usize)].clone()
    }

    /// The next layer, straight from the recurrence.
    pub fn next(&self) -> Self {
        let n = self.n + 1;
        let prev = |i: i64, j: i64, m: i64| self.get(i, j, m);
        let values: Vec<C> = (0..=n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut row = Vec::with_capacity((n + 1) * (n + 1));
                for j in 0..=n {
                    for m in 0..=n {
                        row.push(if j > i {
                            C::zero()
                        } else {
                            Self::cell(&prev, i as i64, j as i64, m as i64)
                        });
                    }
                }
                row.into_iter()
            })
            .collect();
        Self { n, values }
    }

    fn cell(prev: &impl Fn(i64, i64, i64) -> C, i: i64, j: i64, m: i64) -> C {
        let mut acc = C::zero();
        let from = |s: usize, mm: i64| prev(i - PAIR_MOVES[s].0, j - PAIR_MOVES[s].1, mm);
        if i == j {
            for s in (0..PAIR_MOVES.len()).filter(|&s| s != S1) {
                acc += &from(s, m);
                acc += &from(s, m - 1);
            }
        }
        if i > j {
            for s in 0..PAIR_MOVES.len() {
                acc += &from(s, m);
            }
        }
        if i == j + 1 {
            acc += &prev(i, j, m - 1);
        }
        acc
    }

    /// Asserts the support condition of the recurrence.
    pub fn check_support(&self) -> bool {
        let n = self.n as i64;
        (0..=n).all(|i| {
            (0..=n).all(|j| (0..=n).all(|m| j <= i || self.get(i, j, m).is_zero()))
        })
    }
}

/// Layers `0..=n_max` of the marked table.
pub fn marked_tables(n_max: usize) -> Vec<MarkedTable> {
    let mut out = vec![MarkedTable::zero_layer()];
    for _ in 0..n_max {
        let next = out.last().expect("nonempty").next();
        out.push(next);
    }
    out
}

/// Brute-force version of the marked table for one `n`, by enumerating the
/// walks and choosing marks among their diagonal-ending steps.
pub fn marked_counts_by_enumeration(n: usize) -> BTreeMap<(i64, i64, usize), BigUint> {
    let spec = WalkSpec::new(TableauKind::Hesitating, Domain::Weak, 2, 2 * n);
    let mut out: BTreeMap<(i64, i64, usize), BigUint> = BTreeMap::new();
    for w in enumerate_walks(&spec).expect("valid spec") {
        let mut x = vec![0i64, 0];
        let mut diag = 0;
        for &s in &w {
            apply(&mut x, s);
            if s != 0 && x[0] == x[1] {
                diag += 1;
            }
        }
        for m in 0..=diag {
            let c = binomial(diag as i64, m as i64).to_biguint().expect("nonnegative");
            *out.entry((x[0], x[1], m)).or_default() += c;
        }
    }
    out
}

/// A hesitating walk in the quadrant from the origin back to the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<[i64; 2]>", into = "Vec<[i64; 2]>")]
pub struct QExcursion {
    steps: Vec<[i64; 2]>,
}

impl QExcursion {
    pub fn new(steps: Vec<[i64; 2]>) -> Result<Self> {
        if steps.len() % 2 == 1 {
            return Err(Error::InvalidWalk("odd length".into()));
        }
        let is_unit = |s: [i64; 2]| s[0].abs() + s[1].abs() == 1;
        let is_pos = |s: [i64; 2]| is_unit(s) && s[0] + s[1] == 1;
        let is_neg = |s: [i64; 2]| is_unit(s) && s[0] + s[1] == -1;
        let is_stay = |s: [i64; 2]| s == [0, 0];
        let mut x = [0i64, 0];
        for (p, pair) in steps.chunks(2).enumerate() {
            let (a, b) = (pair[0], pair[1]);
            let ok = (is_stay(a) && is_pos(b)) || (is_neg(a) && is_stay(b)) || (is_pos(a) && is_neg(b));
            if !ok {
                return Err(Error::InvalidWalk(format!("pair {p} is not a hesitating pair")));
            }
            for s in [a, b] {
                x = [x[0] + s[0], x[1] + s[1]];
                if x[0] < 0 || x[1] < 0 {
                    return Err(Error::InvalidWalk(format!("pair {p} leaves the quadrant")));
                }
            }
        }
        if x != [0, 0] {
            return Err(Error::InvalidWalk("does not return to the origin".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[[i64; 2]] {
        &self.steps
    }

    fn from_signed(steps: &[i32]) -> Self {
        let steps = steps
            .iter()
            .map(|&s| match s {
                0 => [0, 0],
                1 => [1, 0],
                -1 => [-1, 0],
                2 => [0, 1],
                _ => [0, -1],
            })
            .collect();
        Self { steps }
    }

    fn positions(&self) -> Vec<[i64; 2]> {
        let mut x = [0i64, 0];
        let mut out = vec![x];
        for s in &self.steps {
            x = [x[0] + s[0], x[1] + s[1]];
            out.push(x);
        }
        out
    }

    /// Indices (0-based) of the marked steps of the switching process.
    pub fn marked_steps(&self) -> Vec<usize> {
        let mut marks = Vec::new();
        let mut want_above = true;
        for (r, p) in self.positions().iter().skip(1).enumerate() {
            let hit = if want_above { p[0] < p[1] } else { p[0] > p[1] };
            if hit {
                marks.push(r);
                want_above = !want_above;
            }
        }
        marks
    }
}

impl TryFrom<Vec<[i64; 2]>> for QExcursion {
    type Error = Error;

    fn try_from(steps: Vec<[i64; 2]>) -> Result<Self> {
        Self::new(steps)
    }
}

impl From<QExcursion> for Vec<[i64; 2]> {
    fn from(q: QExcursion) -> Self {
        q.steps
    }
}

/// Number of marked steps of the excursion.
pub fn switch_multiplicity(w: &QExcursion) -> usize {
    w.marked_steps().len()
}

/// All quadrant excursions with `2n` steps.
pub fn enumerate_q_excursions(n: usize) -> Vec<QExcursion> {
    let spec = WalkSpec::new(TableauKind::Hesitating, Domain::Quadrant, 2, 2 * n);
    enumerate_walks(&spec)
        .expect("valid spec")
        .into_iter()
        .filter(|w| walk_end(&[0, 0], w) == [0, 0])
        .map(|w| QExcursion::from_signed(&w))
        .collect()
}

/// `q(n, m)` for all `m`, by enumerating the excursions.
pub fn q_distribution_by_enumeration(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); n + 1];
    for w in enumerate_q_excursions(n) {
        out[switch_multiplicity(&w)] += 1u32;
    }
    out
}

/// `q(n, m)` for all `m`, by dynamic programming over
/// (position, marks so far, region that triggers the next mark).
pub fn q_distribution_by_dp(n: usize) -> Vec<BigUint> {
    // want_above is true while waiting for a step into x < y.
    type State = (i64, i64, usize, bool);
    let mvs = moves(TableauKind::Hesitating, 2);
    let mut layer: HashMap<State, BigUint> = HashMap::from([((0, 0, 0, true), BigUint::one())]);
    for _ in 0..n {
        let mut next: HashMap<State, BigUint> = HashMap::with_capacity(layer.len() * 2);
        for (&(x, y, m, want_above), c) in &layer {
            'moves: for mv in &mvs {
                let mut p = [x, y];
                let (mut marks, mut want) = (m, want_above);
                for &s in mv {
                    apply(&mut p, s);
                    if p[0] < 0 || p[1] < 0 {
                        continue 'moves;
                    }
                    if s != 0 && (if want { p[0] < p[1] } else { p[0] > p[1] }) {
                        marks += 1;
                        want = !want;
                    }
                }
                *next.entry((p[0], p[1], marks, want)).or_insert_with(BigUint::zero) += c;
            }
        }
        layer = next;
    }
    let mut out = vec![BigUint::zero(); n + 1];
    for ((x, y, m, _), c) in layer {
        if x == 0 && y == 0 {
            out[m] += c;
        }
    }
    out
}

/// `q(n, m)` for all `m`: enumeration up to `n = 8`, dynamic programming beyond.
pub fn q_distribution(n: usize) -> Vec<BigUint> {
    if n <= 8 {
        q_distribution_by_enumeration(n)
    } else {
        q_distribution_by_dp(n)
    }
}

/// Reflects every odd part of the excursion in the diagonal, giving a walk in
/// `x >= y >= 0` whose marked steps (returned as indices) all leave the diagonal.
pub fn reflect_odd_parts(w: &QExcursion) -> (Vec<[i64; 2]>, Vec<usize>) {
    let marks = w.marked_steps();
    let mut steps = Vec::with_capacity(w.steps.len());
    let mut part = 0;
    for (r, s) in w.steps.iter().enumerate() {
        if marks.get(part) == Some(&r) {
            part += 1;
        }
        steps.push(if part % 2 == 1 { [s[1], s[0]] } else { *s });
    }
    (steps, marks)
}

/// Non-intersecting triples of `n`-step north/east paths from `(-1,1), (0,0),
/// (1,-1)` to `(k-1,n-k+1), (k,n-k), (k+1,n-k-1)` for some `k`. Transfer
/// counting up to `n = 10`, the path-determinant formula beyond.
pub fn triple_paths_count(n: usize) -> BigUint {
    if n <= 10 {
        triple_paths_direct(n)
    } else {
        triple_paths_lgv(n)
    }
}

/// Steps all three paths at once, keeping them strictly ordered along each
/// antidiagonal.
pub fn triple_paths_direct(n: usize) -> BigUint {
    let mut layer: HashMap<[i64; 3], BigUint> = HashMap::from([([-1, 0, 1], BigUint::one())]);
    for _ in 0..n {
        let mut next: HashMap<[i64; 3], BigUint> = HashMap::new();
        for (xs, c) in &layer {
            for mask in 0..8u8 {
                let ys = [0, 1, 2].map(|t| xs[t] + i64::from(mask >> t & 1));
                if ys[0] < ys[1] && ys[1] < ys[2] {
                    *next.entry(ys).or_insert_with(BigUint::zero) += c;
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|(xs, _)| xs[1] == xs[0] + 1 && xs[2] == xs[1] + 1)
        .map(|(_, c)| c)
        .sum()
}

/// Lindström–Gessel–Viennot: a 3 by 3 determinant of path counts per `k`.
pub fn triple_paths_lgv(n: usize) -> BigUint {
    let starts = [-1i64, 0, 1];
    let mut total = BigInt::zero();
    for k in 0..=n as i64 {
        let ends = [k - 1, k, k + 1];
        let m: Vec<Vec<BigInt>> = starts
            .iter()
            .map(|&a| ends.iter().map(|&b| binomial(n as i64, b - a)).collect())
            .collect();
        total += det3(&m);
    }
    total.to_biguint().expect("a count is nonnegative")
}

fn det3(m: &[Vec<BigInt>]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Outcome of the conjecture checks for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    /// `a(n; i, 0, j) = a(n; j, 0, i)` for all `i, j`.
    pub symmetry_holds: bool,
    pub symmetry_counterexample: Option<(usize, usize)>,
    /// `q(n, m) = a(n; m, 0, 0)` for all `m`; absent when not checked.
    pub switch_holds: Option<bool>,
    pub switch_counterexample: Option<usize>,
    /// `Σ_m a(n; m, 0, 0)`, which must be `B_(n+1)`.
    #[serde(serialize_with = "crate::scalar::serialize_decimal")]
    pub axis_total: BigUint,
}

fn check_layer(t: &MarkedTable, switch_max: Option<usize>) -> ConjectureRow {
    let n = t.n();
    let symmetry_counterexample = (0..=n)
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| t.get(i as i64, 0, j as i64) != t.get(j as i64, 0, i as i64))
        .min();
    let (switch_holds, switch_counterexample) = if switch_max.is_some_and(|s| n <= s) {
        let q = q_distribution(n);
        let bad = (0..=n).find(|&m| q[m] != t.get(m as i64, 0, 0));
        (Some(bad.is_none()), bad)
    } else {
        (None, None)
    };
    ConjectureRow {
        n,
        symmetry_holds: symmetry_counterexample.is_none(),
        symmetry_counterexample,
        switch_holds,
        switch_counterexample,
        axis_total: (0..=n as i64).map(|m| t.get(m, 0, 0)).sum(),
    }
}

/// Checks the symmetry for every `n <= n_max`, and the switch-multiplicity
/// equality for `n <= switch_max` when given. Only the current layer of the
/// marked table is kept.
pub fn verify_conjectures(n_max: usize, switch_max: Option<usize>) -> Vec<ConjectureRow> {
    let mut t = MarkedTable::zero_layer();
    let mut rows = Vec::with_capacity(n_max + 1);
    loop {
        rows.push(check_layer(&t, switch_max));
        if t.n() == n_max {
            return rows;
        }
        t = t.next();
    }
}
