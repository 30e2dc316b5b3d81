//! `tabwalk`: enumeration, bijections, walk counts, series and verification
//! suites from the command line.
//!
//! Documents go to stdout as pretty JSON (and to `--emit` when given);
//! enumerations stream one JSON value per line. Exit status is 0 on success,
//! 1 when a verification fails and 2 on bad usage or bad input.

use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tabwalk::arcs::{
    diagram_to_involution, enhne, enumerate_diagrams, futne, involution_diagram,
    involution_to_open_matching, open_matching_to_involution, pattern_level, word_string,
    ArcDiagram, DiagramClass, Pattern, PatternQuery, Variant,
};
use tabwalk::chen::{self, OpenVersion};
use tabwalk::gentree::{tree_levels, SuccessionRule};
use tabwalk::involution::Involution;
use tabwalk::partition::Partition;
use tabwalk::sequence::{enumerate_tableaux, EndFilter, FerrersSequence, TableauKind};
use tabwalk::series::{self, baxter, identity_checks, w_series};
use tabwalk::tableau::enumerate_syt;
use tabwalk::verify::{Suite, SuiteParams};
use tabwalk::walks::{self, count_walks, Domain, WalkSpec};
use tabwalk::{BigCount, Rational};

#[derive(Parser)]
#[command(name = "tabwalk", version, about = "Tableau sequences, arc diagrams and chamber walks in exact arithmetic")]
struct Cli {
    /// Worker threads for the parallel kernels (default: all cores).
    #[arg(long, global = true, env = "TW_THREADS")]
    threads: Option<usize>,
    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of a family as JSON lines.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to one object and report statistics before and after.
    Bij(BijArgs),
    /// Walk counts and the marked-walk conjectures.
    #[command(subcommand)]
    Walks(WalksCommand),
    /// Exact series and Baxter-number identities.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Level sizes of a Baxter generating tree.
    Tree {
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Run a named verification suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    SetPartition,
    Matching,
    Involution,
    OpenPartition,
    OpenMatching,
    Syt,
    Oscillating,
    Vacillating,
    Hesitating,
}

#[derive(Args)]
struct EnumerateArgs {
    family: Family,
    /// Size: dots for diagrams and tableau sequences, boxes for SYT.
    #[arg(long)]
    n: usize,
    /// Height bound for tableaux (default: none).
    #[arg(long)]
    k: Option<usize>,
    /// Final shape of tableau sequences: `any`, `row`, or parts like `2,1` (`empty` for ∅).
    #[arg(long, default_value = "any")]
    end: String,
    /// Print only the number of objects.
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum BijMap {
    /// Closed diagram to vacillating tableau (or the kind given by --kind).
    Phi,
    /// Tableau sequence back to its diagram.
    Inverse,
    /// Open diagram to a tableau ending in a row.
    Open,
    /// Row-ending tableau back to its open diagram.
    Reopen,
    Psi,
    PsiInverse,
    Theta,
    ThetaInverse,
    Swap,
    /// Closed diagram to closed diagram with crossing and nesting levels exchanged.
    Transpose,
}

#[derive(Args)]
struct BijArgs {
    map: BijMap,
    /// Input file, or the JSON document itself.
    #[arg(long = "in")]
    input: String,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Which open-arc closure to use for `open` and `reopen`.
    #[arg(long, value_enum, default_value = "crossing")]
    version: VersionArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Oscillating,
    Vacillating,
    Hesitating,
}

impl From<KindArg> for TableauKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Oscillating => TableauKind::Oscillating,
            KindArg::Vacillating => TableauKind::Vacillating,
            KindArg::Hesitating => TableauKind::Hesitating,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VersionArg {
    Crossing,
    Nesting,
}

impl From<VersionArg> for OpenVersion {
    fn from(v: VersionArg) -> Self {
        match v {
            VersionArg::Crossing => OpenVersion::Crossing,
            VersionArg::Nesting => OpenVersion::Nesting,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Weak,
    Shifted,
    Quadrant,
    Wedge,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Weak => Domain::Weak,
            DomainArg::Shifted => Domain::Shifted,
            DomainArg::Quadrant => Domain::Quadrant,
            DomainArg::Wedge => Domain::Wedge,
        }
    }
}

#[derive(Subcommand)]
enum WalksCommand {
    /// Count walks of a family, optionally restricted to an endpoint set.
    Count {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        k: usize,
        /// Number of single steps.
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value = "weak")]
        domain: DomainArg,
        /// `any`, `axis` (all but the first coordinate at their start value),
        /// `start`, or a point like `2,0`.
        #[arg(long, default_value = "any")]
        end: String,
    },
    /// Symmetry of the marked table and, optionally, the switch-multiplicity equality.
    Conjecture {
        #[arg(long, default_value_t = 40)]
        nmax: usize,
        /// Also compare q(n, m) with a(n; m, 0, 0) up to this n.
        #[arg(long)]
        switch_max: Option<usize>,
    },
    /// Switch-multiplicity distribution q(n, m) of quadrant excursions.
    Q {
        #[arg(long)]
        n: usize,
    },
    /// a(n; i, j, m) for all i, j, m at one n.
    Marked {
        #[arg(long)]
        n: usize,
    },
    /// Non-intersecting path triples of length n.
    Triples {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// EGF of standard Young tableaux of height at most 2k.
    Syt {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// EGF of oscillating walks from δ ending on the first axis.
    Walks {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// The Bessel series b_j.
    Bessel {
        #[arg(long)]
        j: i64,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Baxter numbers B_1..=B_n.
    Baxter {
        #[arg(long)]
        n: u64,
    },
    /// The coefficient identities for n <= nmax.
    Identities {
        #[arg(long, default_value_t = 40)]
        nmax: i64,
    },
    /// Coefficients of the walk series, n = 0..=nmax.
    W {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or alias; `all` runs every suite with its defaults.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    matching_n: Option<usize>,
    /// Include wall-clock durations (makes the report non-reproducible).
    #[arg(long)]
    timings: bool,
}

/// What went wrong, mapped to an exit status.
enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<tabwalk::Error> for Failure {
    fn from(e: tabwalk::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Option<Value>, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match cli.command {
        Command::Enumerate(a) => enumerate(a),
        Command::Bij(a) => bij(a),
        Command::Walks(w) => walks_command(w),
        Command::Series(s) => series_command(s),
        Command::Tree { rule, depth } => tree(&rule, depth),
        Command::Verify(a) => verify(a),
    };
    let (doc, code) = match outcome {
        Ok(doc) => (doc, ExitCode::SUCCESS),
        Err(Failure::Verification(doc)) => (Some(doc), ExitCode::from(1)),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Some(doc) = doc {
        let text = serde_json::to_string_pretty(&doc).expect("JSON values serialise");
        // A closed stdout (e.g. piped into `head`) is not an error.
        let _ = writeln!(std::io::stdout().lock(), "{text}");
        if let Some(path) = cli.emit {
            if let Err(e) = std::fs::write(&path, format!("{text}\n")) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    code
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_parts(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("`{s}` is not a comma-separated list of integers"))))
        .collect()
}

fn end_filter(s: &str) -> Result<EndFilter, Failure> {
    Ok(match s {
        "any" => EndFilter::Any,
        "row" => EndFilter::AnyRow,
        "empty" => EndFilter::Shape(Partition::empty()),
        parts => {
            let v = parse_parts(parts)?;
            let parts = v.into_iter().map(|p| u32::try_from(p).map_err(|_| usage("negative part"))).collect::<Result<_, _>>()?;
            EndFilter::Shape(Partition::new(parts)?)
        }
    })
}

fn enumerate(a: EnumerateArgs) -> Outcome {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut count = 0usize;
    let mut closed = false;
    let mut emit = |v: Value| {
        count += 1;
        if !a.count && !closed {
            closed = writeln!(out, "{v}").is_err();
        }
    };
    let class = match a.family {
        Family::SetPartition => Some(DiagramClass::SetPartition),
        Family::Matching => Some(DiagramClass::Matching),
        Family::Involution => Some(DiagramClass::Involution),
        Family::OpenPartition => Some(DiagramClass::OpenPartition),
        Family::OpenMatching => Some(DiagramClass::OpenMatching),
        _ => None,
    };
    if let Some(class) = class {
        for d in enumerate_diagrams(class, a.n) {
            emit(serde_json::to_value(&d).expect("diagrams serialise"));
        }
    } else if let Family::Syt = a.family {
        for t in enumerate_syt(a.n, a.k.unwrap_or(a.n)) {
            emit(serde_json::to_value(&t).expect("tableaux serialise"));
        }
    } else {
        let (kind, length) = match a.family {
            Family::Oscillating => (TableauKind::Oscillating, a.n),
            Family::Vacillating => (TableauKind::Vacillating, 2 * a.n),
            _ => (TableauKind::Hesitating, 2 * a.n),
        };
        let end = end_filter(&a.end)?;
        for s in enumerate_tableaux(kind, length, a.k.unwrap_or(a.n), &end) {
            emit(serde_json::to_value(&s).expect("sequences serialise"));
        }
    }
    let _ = out.flush();
    drop(out);
    Ok(a.count.then(|| json!({ "count": count })))
}

fn read_input(input: &str) -> Result<Value, Failure> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(input).map_err(|e| usage(format!("reading {input}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("parsing input: {e}")))
}

fn parse_as<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| usage(format!("input is not a valid {what}: {e}")))
}

fn diagram_stats(d: &ArcDiagram) -> Value {
    let mut m = Map::new();
    m.insert("word".into(), json!(word_string(&d.opener_closer_word())));
    let queries = [
        ("cr", Pattern::Crossing, Variant::Plain),
        ("ne", Pattern::Nesting, Variant::Plain),
        ("enhanced_cr", Pattern::Crossing, Variant::Enhanced),
        ("enhanced_ne", Pattern::Nesting, Variant::Enhanced),
        ("open_cr", Pattern::Crossing, Variant::Open),
        ("open_ne", Pattern::Nesting, Variant::Open),
    ];
    for (name, pattern, variant) in queries {
        if let Ok(v) = pattern_level(d, PatternQuery::new(pattern, variant)) {
            m.insert(name.into(), json!(v));
        }
    }
    let inv = match d.class() {
        DiagramClass::Involution | DiagramClass::Matching => diagram_to_involution(d).ok(),
        DiagramClass::OpenMatching => open_matching_to_involution(d).ok(),
        _ => None,
    };
    if let Some(inv) = inv {
        m.insert("enhne".into(), json!(enhne(&inv)));
        m.insert("futne".into(), json!(futne(&inv)));
    }
    Value::Object(m)
}

fn sequence_stats(s: &FerrersSequence) -> Value {
    json!({
        "max_height": s.max_height(),
        "max_width": s.max_width(),
        "last": s.last().parts(),
    })
}

fn with_stats(d: &ArcDiagram) -> Value {
    json!({ "diagram": d, "stats": diagram_stats(d) })
}

/// Involution from a diagram of class involution, matching or open matching.
fn as_involution(d: &ArcDiagram) -> Result<Involution, Failure> {
    Ok(match d.class() {
        DiagramClass::OpenMatching => open_matching_to_involution(d)?,
        _ => diagram_to_involution(d)?,
    })
}

fn bij(a: BijArgs) -> Outcome {
    let raw = read_input(&a.input)?;
    let doc = match a.map {
        BijMap::Inverse | BijMap::Reopen => {
            let seq: FerrersSequence = parse_as(raw, "tableau sequence")?;
            let d = if a.map == BijMap::Inverse {
                chen::phi_inverse(&seq)?
            } else {
                chen::tableau_to_open(&seq, a.version.into())?
            };
            json!({ "input": { "sequence": seq, "stats": sequence_stats(&seq) }, "image": with_stats(&d) })
        }
        BijMap::Phi | BijMap::Open => {
            let d: ArcDiagram = parse_as(raw, "arc diagram")?;
            let default = if d.class().is_matching_like() && d.isolated_dots().is_empty() && a.map == BijMap::Phi {
                TableauKind::Oscillating
            } else {
                TableauKind::Vacillating
            };
            let kind = a.kind.map_or(default, Into::into);
            let seq = if a.map == BijMap::Phi {
                chen::phi_kind(&d, kind)?.1
            } else {
                chen::open_to_tableau(&d, kind, a.version.into())?
            };
            json!({ "input": with_stats(&d), "image": { "sequence": seq, "stats": sequence_stats(&seq) } })
        }
        BijMap::Transpose => {
            let d: ArcDiagram = parse_as(raw, "arc diagram")?;
            let t = chen::transpose_diagram(&d)?;
            json!({ "input": with_stats(&d), "image": with_stats(&t) })
        }
        BijMap::Psi => {
            let d: ArcDiagram = parse_as(raw, "arc diagram")?;
            let img = chen::psi(&as_involution(&d)?)?;
            json!({ "input": with_stats(&d), "image": with_stats(&img) })
        }
        BijMap::PsiInverse => {
            let d: ArcDiagram = parse_as(raw, "arc diagram")?;
            let img = involution_diagram(&chen::psi_inverse(&d)?);
            json!({ "input": with_stats(&d), "image": with_stats(&img) })
        }
        BijMap::Theta | BijMap::ThetaInverse | BijMap::Swap => {
            let d: ArcDiagram = parse_as(raw, "arc diagram")?;
            let inv = as_involution(&d)?;
            let img = match a.map {
                BijMap::Theta => chen::theta(&inv)?,
                BijMap::ThetaInverse => chen::theta_inverse(&inv)?,
                _ => chen::nesting_swap(&inv)?,
            };
            let before = involution_diagram(&inv);
            json!({
                "input": with_stats(&before),
                "image": with_stats(&involution_diagram(&img)),
                "image_open_matching": involution_to_open_matching(&img),
            })
        }
    };
    Ok(Some(doc))
}

fn walks_command(w: WalksCommand) -> Outcome {
    match w {
        WalksCommand::Count { kind, k, len, domain, end } => {
            let spec = WalkSpec::new(kind.into(), domain.into(), k, len);
            let start = spec.start.clone();
            let counts = count_walks::<BigCount>(&spec)?;
            let target = match end.as_str() {
                "any" | "axis" | "start" => None,
                point => Some(parse_parts(point)?),
            };
            let keep = |x: &[i64]| match (end.as_str(), &target) {
                ("any", _) => true,
                ("axis", _) => x[1..] == start[1..],
                ("start", _) => x == start.as_slice(),
                (_, Some(t)) => x == t.as_slice(),
                _ => false,
            };
            let total: BigCount = counts.iter().filter(|(x, _)| keep(x)).map(|(_, c)| c).sum();
            Ok(Some(json!({ "spec": spec, "end": end, "count": total.to_string() })))
        }
        WalksCommand::Conjecture { nmax, switch_max } => {
            let rows = walks::verify_conjectures(nmax, switch_max);
            let passed = rows.iter().all(|r| {
                r.symmetry_holds
                    && r.switch_holds != Some(false)
                    && baxter(r.n as u64 + 1).is_ok_and(|b| b == r.axis_total)
            });
            let doc = json!({ "nmax": nmax, "switch_max": switch_max, "passed": passed, "rows": rows });
            if passed {
                Ok(Some(doc))
            } else {
                Err(Failure::Verification(doc))
            }
        }
        WalksCommand::Q { n } => {
            let q: Vec<String> = walks::q_distribution(n).iter().map(ToString::to_string).collect();
            Ok(Some(json!({ "n": n, "q": q })))
        }
        WalksCommand::Marked { n } => {
            let mut t = walks::MarkedTable::<BigCount>::zero_layer();
            while t.n() < n {
                t = t.next();
            }
            let mut cells = Vec::new();
            for i in 0..=n as i64 {
                for j in 0..=i {
                    for m in 0..=n as i64 {
                        let v = t.get(i, j, m);
                        if v != BigCount::from(0u32) {
                            cells.push(json!({ "i": i, "j": j, "m": m, "count": v.to_string() }));
                        }
                    }
                }
            }
            Ok(Some(json!({ "n": n, "cells": cells })))
        }
        WalksCommand::Triples { n } => {
            Ok(Some(json!({ "n": n, "count": walks::triple_paths_count(n).to_string() })))
        }
    }
}

fn series_doc(s: &series::PowerSeries<Rational>, order: usize) -> Result<Value, Failure> {
    let coefficients: Vec<String> = (0..=order).map(|n| s.coeff(n).to_string()).collect();
    let egf: Vec<String> = (0..=order).map(|n| s.egf_integer(n).map(|v| v.to_string())).collect::<Result<_, _>>()?;
    Ok(json!({ "order": order, "coefficients": coefficients, "egf": egf }))
}

fn series_command(s: SeriesCommand) -> Outcome {
    let doc = match s {
        SeriesCommand::Syt { k, order } => {
            if k == 0 {
                return Err(usage("k must be positive"));
            }
            let mut doc = series_doc(&series::syt_egf::<Rational>(k, order), order)?;
            doc["k"] = json!(k);
            doc["determinant"] = json!(series::syt_egf_symbolic(k).to_string());
            doc
        }
        SeriesCommand::Walks { k, order } => {
            if k == 0 {
                return Err(usage("k must be positive"));
            }
            let mut doc = series_doc(&series::osc_row_egf::<Rational>(k, order), order)?;
            doc["k"] = json!(k);
            doc
        }
        SeriesCommand::Bessel { j, order } => {
            let b = series::bessel_series::<Rational>(j, order);
            let coefficients: Vec<String> = b.coeffs().iter().map(ToString::to_string).collect();
            json!({ "j": j, "order": order, "coefficients": coefficients })
        }
        SeriesCommand::Baxter { n } => {
            let values = (1..=n).map(|i| baxter(i).map(|b| b.to_string())).collect::<Result<Vec<_>, _>>()?;
            let last = values.last().cloned().ok_or_else(|| usage("n must be at least 1"))?;
            json!({ "n": n, "value": last, "sequence": values })
        }
        SeriesCommand::Identities { nmax } => {
            let report = identity_checks(nmax);
            let doc = serde_json::to_value(&report).expect("reports serialise");
            if !report.holds {
                return Err(Failure::Verification(doc));
            }
            doc
        }
        SeriesCommand::W { nmax } => {
            let w: Vec<String> = w_series(nmax)?.iter().map(ToString::to_string).collect();
            json!({ "nmax": nmax, "coefficients": w })
        }
    };
    Ok(Some(doc))
}

fn tree(rule: &str, depth: usize) -> Outcome {
    let rule: SuccessionRule = rule.parse()?;
    let levels: Vec<String> = tree_levels(rule, depth)?.iter().map(ToString::to_string).collect();
    Ok(Some(json!({ "rule": rule, "root": rule.root(), "depth": depth, "levels": levels })))
}

fn verify(a: VerifyArgs) -> Outcome {
    let params = SuiteParams {
        n: a.n,
        k: a.k,
        order: a.order,
        depth: a.depth,
        matching_n: a.matching_n,
        timings: a.timings,
    };
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    let reports: Vec<_> = suites.iter().map(|s| s.run(&params)).collect();
    let passed = reports.iter().all(|r| r.passed);
    let doc = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(json!({ "passed": passed, "reports": reports }))
    }
    .expect("reports serialise");
    if passed {
        Ok(Some(doc))
    } else {
        Err(Failure::Verification(doc))
    }
}
