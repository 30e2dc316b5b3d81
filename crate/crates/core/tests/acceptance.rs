//! The acceptance criteria, one line each. Runs without the libtest harness
//! so the per-criterion lines are printed even when everything passes.

use std::process::ExitCode;
use std::time::Instant;

use tabwalk::arcs::{enumerate_diagrams, DiagramClass};
use tabwalk::verify::{Suite, SuiteParams, VerificationReport};

struct Criterion {
    id: usize,
    what: &'static str,
    suite: Suite,
    params: SuiteParams,
    extra: fn(&VerificationReport) -> Result<(), String>,
}

fn none(_: &VerificationReport) -> Result<(), String> {
    Ok(())
}

fn bell_seven(_: &VerificationReport) -> Result<(), String> {
    let count = enumerate_diagrams(DiagramClass::SetPartition, 7).count();
    if count == 877 {
        Ok(())
    } else {
        Err(format!("{count} set partitions of size 7"))
    }
}

fn up_to(n: usize) -> SuiteParams {
    SuiteParams { n: Some(n), ..SuiteParams::default() }
}

fn main() -> ExitCode {
    // Stretch bound for the marked-table symmetry; the required bound is 40.
    let marked_n = std::env::var("TW_MARKED_N").ok().and_then(|v| v.parse().ok()).unwrap_or(56);
    let criteria = [
        Criterion { id: 1, what: "hesitating axis walks = B(n+1) = w_series, n <= 10", suite: Suite::BaxterWalks, params: up_to(10), extra: none },
        Criterion { id: 2, what: "coefficient identity chain, n <= 40", suite: Suite::Identities, params: up_to(40), extra: none },
        Criterion { id: 3, what: "row-end tableaux = SYT by odd columns = open matchings, k in {1,2}, n <= 8", suite: Suite::RowEnd, params: up_to(8), extra: none },
        Criterion { id: 4, what: "segment levels and height bounds over all set partitions, n <= 7", suite: Suite::Segments, params: up_to(7), extra: bell_seven },
        Criterion { id: 5, what: "(enhne, futne) symmetry n <= 9, swap involution n <= 9", suite: Suite::NestingSymmetry, params: up_to(9), extra: none },
        Criterion { id: 6, what: "a(n;i,0,j) = a(n;j,0,i)", suite: Suite::MarkedSymmetry, params: up_to(marked_n), extra: none },
        Criterion { id: 7, what: "q(n,m) = a(n;m,0,0), n <= 7", suite: Suite::SwitchMultiplicity, params: up_to(7), extra: none },
        Criterion { id: 8, what: "Q-excursions = path triples = B(n+1), n <= 8", suite: Suite::ExcursionTriples, params: up_to(8), extra: none },
        Criterion { id: 9, what: "Bessel determinants to order 12, height-four polynomial", suite: Suite::Bessel, params: SuiteParams { order: Some(12), ..SuiteParams::default() }, extra: none },
        Criterion { id: 10, what: "generating trees match Baxter numbers, depth <= 10", suite: Suite::Trees, params: SuiteParams { depth: Some(10), ..SuiteParams::default() }, extra: none },
        Criterion { id: 11, what: "bijection roundtrips, partitions n <= 7, matchings n <= 8", suite: Suite::Bijections, params: SuiteParams { n: Some(7), matching_n: Some(8), ..SuiteParams::default() }, extra: none },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let report = c.suite.run(&c.params);
        let extra = (c.extra)(&report);
        let pass = report.passed && extra.is_ok();
        let bound = report.params.get("n").map(|n| format!(" [n <= {n}]")).unwrap_or_default();
        println!(
            "criterion {:>2}: {} | {}{} | {} cases | {:.1}s",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.what,
            if c.id == 6 { bound } else { String::new() },
            report.cases.len(),
            start.elapsed().as_secs_f64(),
        );
        if !pass {
            failed += 1;
            for f in report.failures() {
                println!("    {}: {}", f.case, f.detail.as_deref().unwrap_or(""));
            }
            if let Err(e) = extra {
                println!("    {e}");
            }
            if let Some(x) = &report.counterexample {
                println!("    counterexample: {x}");
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
