//! Named verification suites. Each one sweeps a parameter range, records a
//! status per case and keeps the first failing input as a replayable payload.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arcs::{
    enhne, enumerate_diagrams, futne, pattern_level, segment_below_level, ArcDiagram, DiagramClass,
    Pattern, PatternQuery, Variant,
};
use crate::chen::{
    nesting_swap, open_matching_to_syt, open_to_tableau, phi, phi_hesitating, phi_inverse,
    phi_oscillating, psi, psi_inverse, syt_to_open_matching, tableau_to_open, theta, theta_inverse,
    transpose_diagram, OpenVersion,
};
use crate::error::{Error, Result};
use crate::gentree::{tree_levels, SuccessionRule};
use crate::involution::enumerate_involutions;
use crate::partition::Partition;
use crate::sequence::{enumerate_tableaux, EndFilter, TableauKind};
use crate::series::{
    baxter, identity_checks, osc_row_egf, syt_egf, syt_egf_symbolic, w_series, BesselPoly,
};
use crate::tableau::{enumerate_syt, odd_column_count};
use crate::walks::{
    enumerate_q_excursions, hesitating_axis_count, marked_tables, q_distribution_by_dp,
    q_distribution_by_enumeration, triple_paths_count, triple_paths_direct, triple_paths_lgv,
    verify_conjectures,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Hesitating walks ending on the axis against Baxter numbers and the series.
    BaxterWalks,
    /// Coefficient identities of the Lagrange-inversion terms.
    Identities,
    /// Row-ending oscillating tableaux, SYT by odd columns, open matchings.
    RowEnd,
    /// Segment levels of set partitions against their vacillating tableaux.
    Segments,
    /// Joint symmetry of the two nesting statistics on involutions.
    NestingSymmetry,
    /// `a(n; i, 0, j) = a(n; j, 0, i)`.
    MarkedSymmetry,
    /// Switch-multiplicity distribution against the marked table.
    SwitchMultiplicity,
    /// Quadrant excursions against non-intersecting triples.
    ExcursionTriples,
    /// Bessel determinants against tableau counts.
    Bessel,
    /// The three generating trees.
    Trees,
    /// Roundtrips of every bijection on its domain.
    Bijections,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::BaxterWalks,
        Suite::Identities,
        Suite::RowEnd,
        Suite::Segments,
        Suite::NestingSymmetry,
        Suite::MarkedSymmetry,
        Suite::SwitchMultiplicity,
        Suite::ExcursionTriples,
        Suite::Bessel,
        Suite::Trees,
        Suite::Bijections,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BaxterWalks => "baxter-walks",
            Suite::Identities => "identities",
            Suite::RowEnd => "row-end",
            Suite::Segments => "segments",
            Suite::NestingSymmetry => "nesting-symmetry",
            Suite::MarkedSymmetry => "marked-symmetry",
            Suite::SwitchMultiplicity => "switch-multiplicity",
            Suite::ExcursionTriples => "excursion-triples",
            Suite::Bessel => "bessel",
            Suite::Trees => "trees",
            Suite::Bijections => "bijections",
        }
    }

    /// Alternative names accepted on the command line.
    pub fn aliases(self) -> &'static [&'static str] {
        match self {
            Suite::BaxterWalks => &["theorem2"],
            Suite::Identities => &["identity-chain"],
            Suite::RowEnd => &["theorem1", "prop8"],
            Suite::Segments => &["prop1", "corollary2"],
            Suite::NestingSymmetry => &["theorem9", "prop13"],
            Suite::MarkedSymmetry => &["conjecture3"],
            Suite::SwitchMultiplicity => &["conjecture2"],
            Suite::ExcursionTriples => &["prop14"],
            Suite::Bessel => &["series"],
            Suite::Trees => &["gentree"],
            Suite::Bijections => &["roundtrips"],
        }
    }

    pub fn run(self, params: &SuiteParams) -> VerificationReport {
        let start = Instant::now();
        let mut report = match self {
            Suite::BaxterWalks => baxter_walks(params.n.unwrap_or(10)),
            Suite::Identities => identities(params.n.unwrap_or(40)),
            Suite::RowEnd => row_end(params.n.unwrap_or(8), &k_range(params)),
            Suite::Segments => segments(params.n.unwrap_or(7)),
            Suite::NestingSymmetry => nesting_symmetry(params.n.unwrap_or(9)),
            Suite::MarkedSymmetry => marked_symmetry(params.n.unwrap_or(40)),
            Suite::SwitchMultiplicity => switch_multiplicity(params.n.unwrap_or(7)),
            Suite::ExcursionTriples => excursion_triples(params.n.unwrap_or(8)),
            Suite::Bessel => bessel(params.order.unwrap_or(12), &k_range(params)),
            Suite::Trees => trees(params.depth.unwrap_or(10)),
            Suite::Bijections => {
                let n = params.n.unwrap_or(7);
                bijections(n, params.matching_n.unwrap_or(n + 1))
            }
        };
        if params.timings {
            report.duration_ms = Some(start.elapsed().as_millis());
        }
        report
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.aliases().contains(&s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

fn k_range(params: &SuiteParams) -> Vec<usize> {
    params.k.map_or_else(|| vec![1, 2], |k| vec![k])
}

/// Bounds for a suite run; absent values take the suite's default.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub order: Option<usize>,
    pub depth: Option<usize>,
    /// Size bound for matching-like families in the roundtrip suite.
    pub matching_n: Option<usize>,
    /// Record wall-clock time; off by default so reports are reproducible.
    #[serde(skip)]
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseStatus {
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub passed: bool,
    pub cases: Vec<CaseStatus>,
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

impl VerificationReport {
    fn new(suite: Suite, params: &[(&str, Value)]) -> Self {
        Self {
            suite: suite.name().to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            passed: true,
            cases: Vec::new(),
            counterexample: None,
            duration_ms: None,
        }
    }

    fn case(&mut self, case: impl Into<String>, pass: bool, detail: Option<String>) {
        self.passed &= pass;
        self.cases.push(CaseStatus { case: case.into(), pass, detail });
    }

    /// A case whose failure carries an input that reproduces it.
    fn case_with(&mut self, case: impl Into<String>, outcome: std::result::Result<(), (String, Value)>) {
        match outcome {
            Ok(()) => self.case(case, true, None),
            Err((detail, payload)) => {
                self.counterexample.get_or_insert(payload);
                self.case(case, false, Some(detail));
            }
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseStatus> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

type Outcome = std::result::Result<(), (String, Value)>;

fn fail<T: Serialize>(detail: impl Into<String>, input: &T) -> Outcome {
    Err((detail.into(), serde_json::to_value(input).unwrap_or(Value::Null)))
}

fn first_failure<T: Sync>(items: &[T], check: impl Fn(&T) -> Outcome + Sync) -> Outcome {
    items
        .par_iter()
        .map(&check)
        .collect::<Vec<_>>()
        .into_iter()
        .find(|o| o.is_err())
        .unwrap_or(Ok(()))
}

fn baxter_walks(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::BaxterWalks, &[("n", json!(n_max))]);
    let w = w_series(n_max);
    for n in 0..=n_max {
        let walks = hesitating_axis_count(n);
        let b = baxter(n as u64 + 1).expect("n + 1 >= 1");
        let series = w.as_ref().ok().map(|w| w[n].clone());
        let pass = walks == b && series.as_ref() == Some(&b);
        let detail = (!pass).then(|| format!("walks {walks}, B_(n+1) {b}, series {series:?}"));
        r.case(format!("n={n}"), pass, detail);
        if !pass {
            r.counterexample.get_or_insert(json!({ "n": n }));
        }
    }
    r
}

fn identities(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Identities, &[("n", json!(n_max))]);
    let rep = identity_checks(n_max as i64);
    r.case(format!("n<={n_max} ({} cases)", rep.cases), rep.holds, rep.first_failure.as_ref().map(|f| format!("{f:?}")));
    if let Some(f) = rep.first_failure {
        r.counterexample = serde_json::to_value(f).ok();
    }
    r
}

fn histogram(values: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn open_crossing(d: &ArcDiagram) -> usize {
    pattern_level(d, PatternQuery::new(Pattern::Crossing, Variant::Open)).expect("open matchings allow open queries")
}

fn row_end(n_max: usize, ks: &[usize]) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::RowEnd, &[("n", json!(n_max)), ("k", json!(ks))]);
    for &k in ks {
        for n in 0..=n_max {
            let tableaux = histogram(
                enumerate_tableaux(TableauKind::Oscillating, n, k, &EndFilter::AnyRow)
                    .iter()
                    .map(|s| s.last().width()),
            );
            let syt = enumerate_syt(n, 2 * k);
            let by_odd = histogram(syt.iter().map(|t| odd_column_count(&t.shape())));
            let open: Vec<ArcDiagram> = enumerate_diagrams(DiagramClass::OpenMatching, n)
                .filter(|d| open_crossing(d) <= k)
                .collect();
            let by_open = histogram(open.iter().map(|d| d.open_arcs().len()));
            let counts = if tableaux == by_odd && by_odd == by_open {
                Ok(())
            } else {
                fail(format!("tableaux {tableaux:?}, SYT {by_odd:?}, open matchings {by_open:?}"), &json!({"n": n, "k": k}))
            };
            r.case_with(format!("k={k} n={n} counts"), counts);

            let map = first_failure(&syt, |t| {
                let d = syt_to_open_matching(t).map_err(|e| (e.to_string(), json!(t)))?;
                if d.open_arcs().len() != odd_column_count(&t.shape()) || open_crossing(&d) > k {
                    return fail("image has the wrong open arcs or crossing level", t);
                }
                if open_matching_to_syt(&d).ok().as_ref() != Some(t) {
                    return fail("inverse does not return the tableau", t);
                }
                let s = open_to_tableau(&d, TableauKind::Oscillating, OpenVersion::Crossing)
                    .map_err(|e| (e.to_string(), json!(d)))?;
                if s.last() != &Partition::row(d.open_arcs().len() as u32) || s.max_height() > k {
                    return fail("oscillating image leaves the height bound or the row end", &d);
                }
                Ok(())
            });
            let images: HashSet<ArcDiagram> = syt.par_iter().filter_map(|t| syt_to_open_matching(t).ok()).collect();
            let map = map.and_then(|()| {
                if images.len() == syt.len() && images.len() == open.len() {
                    Ok(())
                } else {
                    fail(format!("{} tableaux, {} distinct images, {} targets", syt.len(), images.len(), open.len()), &json!({"n": n, "k": k}))
                }
            });
            r.case_with(format!("k={k} n={n} bijection"), map);
        }
    }
    r
}

fn plain(pattern: Pattern) -> PatternQuery {
    PatternQuery::new(pattern, Variant::Plain)
}

fn enhanced(pattern: Pattern) -> PatternQuery {
    PatternQuery::new(pattern, Variant::Enhanced)
}

fn segments(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Segments, &[("n", json!(n_max))]);
    for n in 0..=n_max {
        let parts: Vec<ArcDiagram> = enumerate_diagrams(DiagramClass::SetPartition, n).collect();
        let outcome = first_failure(&parts, |d| {
            let (_, v) = phi(d).map_err(|e| (e.to_string(), json!(d)))?;
            for i in 1..=n {
                let lam = &v.shapes()[2 * i];
                let cr = segment_below_level(d, i, Pattern::Crossing).expect("index in range");
                let ne = segment_below_level(d, i, Pattern::Nesting).expect("index in range");
                if (lam.height(), lam.width()) != (cr, ne) {
                    return fail(format!("index {i}: shape {lam}, segment levels ({cr}, {ne})"), d);
                }
            }
            let h = phi_hesitating(d).map_err(|e| (e.to_string(), json!(d)))?;
            let level = |q| pattern_level(d, q).expect("set partitions allow plain and enhanced queries");
            let (cr, ne) = (level(plain(Pattern::Crossing)), level(plain(Pattern::Nesting)));
            let (ecr, ene) = (level(enhanced(Pattern::Crossing)), level(enhanced(Pattern::Nesting)));
            for k in 0..=n {
                let avoid = [cr <= k, ne <= k, ecr <= k, ene <= k];
                let fits = [v.max_height() <= k, v.max_width() <= k, h.max_height() <= k, h.max_width() <= k];
                if avoid != fits {
                    return fail(format!("k={k}: avoidance {avoid:?} but height bounds {fits:?}"), d);
                }
            }
            Ok(())
        });
        r.case_with(format!("n={n} ({} partitions)", parts.len()), outcome);
    }
    r
}

fn nesting_symmetry(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::NestingSymmetry, &[("n", json!(n_max))]);
    for n in 0..=n_max {
        let invs = enumerate_involutions(n);
        let stats: Vec<(usize, usize, usize)> =
            invs.par_iter().map(|i| (i.fixed_points().len(), enhne(i), futne(i))).collect();
        let joint = histogram_triples(&stats);
        let asym = joint.iter().find(|(&(m, e, f), c)| joint.get(&(m, f, e)) != Some(c));
        let sym = match asym {
            None => Ok(()),
            Some((&(m, e, f), c)) => fail(
                format!("m={m}: ({e},{f}) occurs {c} times, ({f},{e}) {:?}", joint.get(&(m, f, e))),
                &json!({"n": n, "m": m, "enhne": e, "futne": f}),
            ),
        };
        r.case_with(format!("n={n} symmetry"), sym);
        let swap = first_failure(&invs, |inv| {
            let s = nesting_swap(inv).map_err(|e| (e.to_string(), json!(inv)))?;
            if (enhne(&s), futne(&s)) != (futne(inv), enhne(inv)) {
                return fail("statistics not swapped", inv);
            }
            if s.fixed_points().len() != inv.fixed_points().len() {
                return fail("fixed-point count changed", inv);
            }
            if nesting_swap(&s).ok().as_ref() != Some(inv) {
                return fail("not an involution", inv);
            }
            Ok(())
        });
        r.case_with(format!("n={n} swap"), swap);
    }
    r
}

fn histogram_triples(v: &[(usize, usize, usize)]) -> BTreeMap<(usize, usize, usize), usize> {
    let mut h = BTreeMap::new();
    for &t in v {
        *h.entry(t).or_insert(0) += 1;
    }
    h
}

fn marked_symmetry(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::MarkedSymmetry, &[("n", json!(n_max))]);
    // The symmetry alone would also hold for a table of zeros, so each layer is
    // anchored to the Baxter numbers as well.
    for row in verify_conjectures(n_max, None) {
        let n = row.n;
        let b = baxter(n as u64 + 1).expect("n + 1 >= 1");
        let outcome = match row.symmetry_counterexample {
            Some((i, j)) => fail(format!("a(n;{i},0,{j}) != a(n;{j},0,{i})"), &json!({"n": n, "i": i, "j": j})),
            None if row.axis_total != b => fail(format!("layer sums to {}, B_(n+1) is {b}", row.axis_total), &json!({"n": n})),
            None => Ok(()),
        };
        r.case_with(format!("n={}", row.n), outcome);
    }
    r
}

fn switch_multiplicity(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::SwitchMultiplicity, &[("n", json!(n_max))]);
    let tables = marked_tables(n_max);
    for (n, t) in tables.iter().enumerate() {
        let q = q_distribution_by_enumeration(n);
        let a: Vec<BigUint> = (0..=n as i64).map(|m| t.get(m, 0, 0)).collect();
        let outcome = if q != a {
            fail(format!("q {q:?}, a {a:?}"), &json!({"n": n}))
        } else if q != q_distribution_by_dp(n) {
            fail("enumeration and dynamic programming disagree on q", &json!({"n": n}))
        } else {
            Ok(())
        };
        r.case_with(format!("n={n}"), outcome);
    }
    r
}

fn excursion_triples(n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::ExcursionTriples, &[("n", json!(n_max))]);
    for n in 0..=n_max {
        let excursions = BigUint::from(enumerate_q_excursions(n).len());
        let triples = triple_paths_count(n);
        let b = baxter(n as u64 + 1).expect("n + 1 >= 1");
        let agree = n > 10 || triple_paths_direct(n) == triple_paths_lgv(n);
        let outcome = if excursions == triples && triples == b && agree {
            Ok(())
        } else {
            fail(format!("excursions {excursions}, triples {triples}, B_(n+1) {b}"), &json!({"n": n}))
        };
        r.case_with(format!("n={n}"), outcome);
    }
    r
}

/// `b0^2 + b0 b1 + b0 b3 - 2 b1 b2 - b2^2 - b1^2 + b1 b3`.
pub fn height_four_polynomial() -> BesselPoly {
    let b = BesselPoly::b;
    b(0) * b(0) + b(0) * b(1) + b(0) * b(3) - BesselPoly::integer(2) * b(1) * b(2) - b(2) * b(2) - b(1) * b(1)
        + b(1) * b(3)
}

fn bessel(order: usize, ks: &[usize]) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Bessel, &[("order", json!(order)), ("k", json!(ks))]);
    for &k in ks {
        let y = syt_egf::<BigRational>(k, order);
        let mismatch = (0..=order).find_map(|n| {
            let oracle = enumerate_syt(n, 2 * k).len();
            match y.egf_integer(n) {
                Ok(v) if v == oracle.into() => None,
                got => Some(format!("n={n}: series {got:?}, tableaux {oracle}")),
            }
        });
        let outcome = match mismatch {
            None => Ok(()),
            Some(d) => fail(d, &json!({"k": k, "order": order})),
        };
        r.case_with(format!("k={k} tableau counts"), outcome);
        let walks = osc_row_egf::<BigRational>(k, order);
        let outcome = if walks == y { Ok(()) } else { fail("walk and tableau series differ", &json!({"k": k, "order": order})) };
        r.case_with(format!("k={k} walk series"), outcome);
    }
    let sym = syt_egf_symbolic(2);
    let outcome = if sym == height_four_polynomial() && sym.evaluate::<BigRational>(order) == syt_egf(2, order) {
        Ok(())
    } else {
        fail(format!("symbolic determinant is {sym}"), &json!({"k": 2}))
    };
    r.case_with("height-four polynomial", outcome);
    r
}

fn trees(depth: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Trees, &[("depth", json!(depth))]);
    let expected: Vec<BigUint> = (1..=depth as u64).map(|n| baxter(n).expect("n >= 1")).collect();
    for rule in SuccessionRule::ALL {
        let outcome = match tree_levels(rule, depth) {
            Ok(levels) if levels == expected => Ok(()),
            Ok(levels) => fail(format!("levels {levels:?}"), &json!({"rule": rule, "depth": depth})),
            Err(e) => fail(e.to_string(), &json!({"rule": rule, "depth": depth})),
        };
        r.case_with(rule.name(), outcome);
    }
    r
}

fn roundtrip_case<T, S>(
    items: &[T],
    forward: impl Fn(&T) -> Result<S> + Sync,
    back: impl Fn(&S) -> Result<T> + Sync,
) -> Outcome
where
    T: Serialize + PartialEq + Sync,
    S: std::hash::Hash + Eq + Send,
{
    let images: Vec<std::result::Result<S, (String, Value)>> = items
        .par_iter()
        .map(|x| {
            let y = forward(x).map_err(|e| (e.to_string(), json!(x)))?;
            match back(&y) {
                Ok(z) if &z == x => Ok(y),
                Ok(_) => Err(("roundtrip returned a different object".to_string(), json!(x))),
                Err(e) => Err((format!("inverse failed: {e}"), json!(x))),
            }
        })
        .collect();
    let mut seen = HashSet::with_capacity(images.len());
    for y in images {
        if !seen.insert(y?) {
            return Err(("two inputs share an image".into(), Value::Null));
        }
    }
    Ok(())
}

fn surjective(images: usize, targets: usize, n: usize) -> Outcome {
    if images == targets {
        Ok(())
    } else {
        fail(format!("{images} sources but {targets} targets"), &json!({"n": n}))
    }
}

fn bijections(n_part: usize, n_match: usize) -> VerificationReport {
    let mut r = VerificationReport::new(
        Suite::Bijections,
        &[("n", json!(n_part)), ("matching_n", json!(n_match))],
    );
    let empty_end = EndFilter::Shape(Partition::empty());
    for n in 0..=n_part {
        let parts: Vec<ArcDiagram> = enumerate_diagrams(DiagramClass::SetPartition, n).collect();
        let vac = enumerate_tableaux(TableauKind::Vacillating, 2 * n, n, &empty_end).len();
        let hes = enumerate_tableaux(TableauKind::Hesitating, 2 * n, n, &empty_end).len();
        r.case_with(
            format!("phi n={n}"),
            roundtrip_case(&parts, |d| phi(d).map(|p| p.1), phi_inverse)
                .and_then(|()| surjective(parts.len(), vac, n)),
        );
        r.case_with(
            format!("phi-hesitating n={n}"),
            roundtrip_case(&parts, phi_hesitating, phi_inverse).and_then(|()| surjective(parts.len(), hes, n)),
        );
        r.case_with(format!("transpose n={n}"), roundtrip_case(&parts, transpose_diagram, transpose_diagram));

        let open: Vec<ArcDiagram> = enumerate_diagrams(DiagramClass::OpenPartition, n).collect();
        for kind in [TableauKind::Vacillating, TableauKind::Hesitating] {
            for version in [OpenVersion::Crossing, OpenVersion::Nesting] {
                let any_row = enumerate_tableaux(kind, 2 * n, n, &EndFilter::AnyRow).len();
                r.case_with(
                    format!("open-partition {kind:?} {version:?} n={n}"),
                    roundtrip_case(&open, |d| open_to_tableau(d, kind, version), |s| tableau_to_open(s, version))
                        .and_then(|()| surjective(open.len(), any_row, n)),
                );
            }
        }
    }
    for n in 0..=n_match {
        let invs = enumerate_involutions(n);
        r.case_with(format!("psi n={n}"), roundtrip_case(&invs, psi, psi_inverse));
        r.case_with(format!("theta n={n}"), roundtrip_case(&invs, theta, theta_inverse));

        let open: Vec<ArcDiagram> = enumerate_diagrams(DiagramClass::OpenMatching, n).collect();
        let any_row = enumerate_tableaux(TableauKind::Oscillating, n, n, &EndFilter::AnyRow).len();
        for version in [OpenVersion::Crossing, OpenVersion::Nesting] {
            r.case_with(
                format!("open-matching {version:?} n={n}"),
                roundtrip_case(&open, |d| open_to_tableau(d, TableauKind::Oscillating, version), |s| {
                    tableau_to_open(s, version)
                })
                .and_then(|()| surjective(open.len(), any_row, n)),
            );
        }
        if n % 2 == 0 {
            let matchings: Vec<ArcDiagram> = enumerate_diagrams(DiagramClass::Matching, n).collect();
            let osc = enumerate_tableaux(TableauKind::Oscillating, n, n, &empty_end).len();
            r.case_with(
                format!("phi-oscillating n={n}"),
                roundtrip_case(&matchings, phi_oscillating, phi_inverse)
                    .and_then(|()| surjective(matchings.len(), osc, n)),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_aliases_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            for a in s.aliases() {
                assert_eq!(a.parse::<Suite>().unwrap(), s);
            }
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let params = SuiteParams { n: Some(3), k: None, order: Some(6), depth: Some(5), matching_n: Some(4), timings: false };
        for s in Suite::ALL {
            let a = s.run(&params);
            assert!(a.passed, "{}: {:?}", s.name(), a.failures().collect::<Vec<_>>());
            assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&s.run(&params)).unwrap());
            assert!(a.duration_ms.is_none());
        }
    }

    #[test]
    fn failures_carry_a_payload() {
        let mut r = VerificationReport::new(Suite::Trees, &[]);
        r.case_with("x", fail("bad", &json!({"n": 1})));
        assert!(!r.passed);
        assert_eq!(r.counterexample, Some(json!({"n": 1})));
    }
}
