//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::time::{Duration, Instant};

use sctop::dsl::{self, Document, Elaborated};
use sctop::json::{self, CompletionJson, MapJson, SpaceJson};
use sctop_core::verify::{self, SuiteReport};
use sctop_core::{strong_completion, FinSpace, Result, DEFAULT_CAP};

struct Outcome {
    passed: bool,
    detail: String,
}

fn suites(reports: Vec<SuiteReport>, elapsed: Duration, budget: Option<Duration>) -> Outcome {
    let mut passed = reports.iter().all(SuiteReport::passed);
    let mut detail: Vec<String> = reports.iter().map(|r| format!("{} {}", r.suite, r.cases)).collect();
    for r in &reports {
        for v in r.violations.iter().take(3) {
            detail.push(format!("\n    {}: {} ({})", v.suite, v.check, v.witness));
        }
    }
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push(format!("over budget of {} s", b.as_secs()));
        }
    }
    Outcome { passed, detail: format!("{}; {:.2} s", detail.join(", "), elapsed.as_secs_f64()) }
}

fn timed<F: FnOnce() -> Result<Vec<SuiteReport>>>(budget: Option<Duration>, f: F) -> Outcome {
    let start = Instant::now();
    match f() {
        Ok(reports) => suites(reports, start.elapsed(), budget),
        Err(e) => Outcome { passed: false, detail: format!("error: {e}") },
    }
}

fn dsl_and_io() -> Outcome {
    let mut problems = Vec::new();
    for doc in common::CORPUS {
        let once = match dsl::parse(doc) {
            Ok(d) => d.to_string(),
            Err(e) => {
                problems.push(format!("{doc:?}: {e}"));
                continue;
            }
        };
        match dsl::parse(&once) {
            Ok(d) if d.to_string() == once => {}
            _ => problems.push(format!("{doc:?} is not a printing fixpoint")),
        }
    }
    for (doc, line, col) in common::MALFORMED {
        let res = dsl::parse(doc).and_then(|d| match d {
            Document::Map(_) => dsl::load_map(doc).map(drop),
            Document::Space(_) => dsl::load_space(doc).map(drop),
        });
        match res {
            Err(e) if (e.span().line, e.span().col) == (line, col) => {}
            Err(e) => problems.push(format!("{doc:?}: {e}, expected {line}:{col}")),
            Ok(()) => problems.push(format!("{doc:?} accepted")),
        }
    }
    let mut round_trips = 0;
    for doc in common::CORPUS {
        match dsl::parse(doc) {
            Ok(Document::Space(_)) => {
                let Ok(Elaborated::Finite(x)) = dsl::load_space(doc) else { continue };
                let text = json::to_string(&json::space_to_json(&x));
                let back = json::from_str::<SpaceJson>(&text).and_then(|j| json::space_from_json(&j));
                if !matches!(&back, Ok(y) if *y == x && json::to_string(&json::space_to_json(y)) == text) {
                    problems.push(format!("{doc:?}: space JSON is not bit-exact"));
                }
                let c = strong_completion(&x.space, DEFAULT_CAP).expect("corpus spaces are small");
                let text = json::to_string(&json::completion_to_json(&x, &c));
                let back = json::from_str::<CompletionJson>(&text).and_then(|j| json::completion_from_json(&j));
                if !matches!(&back, Ok((y, d)) if *y == x && *d == c && json::to_string(&json::completion_to_json(y, d)) == text) {
                    problems.push(format!("{doc:?}: completion JSON is not bit-exact"));
                }
                round_trips += 2;
            }
            Ok(Document::Map(_)) => {
                let m = dsl::load_map(doc).expect("corpus maps elaborate");
                let text = json::to_string(&json::map_to_json(&m));
                let back = json::from_str::<MapJson>(&text).and_then(|j| json::map_from_json(&j));
                if !matches!(&back, Ok(b) if b.map == m.map && json::to_string(&json::map_to_json(b)) == text) {
                    problems.push(format!("{doc:?}: map JSON is not bit-exact"));
                }
                round_trips += 1;
            }
            Err(_) => {}
        }
    }
    Outcome {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{} documents fixed by printing, {} malformed documents positioned, {round_trips} JSON round trips",
                common::CORPUS.len(),
                common::MALFORMED.len()
            )
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let cap = DEFAULT_CAP;
    let secs = Duration::from_secs;
    let four: Vec<FinSpace> = verify::exhaustive_population(4);
    let three: Vec<FinSpace> = verify::exhaustive_population(3);

    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("finite collapse", timed(Some(secs(30)), || Ok(vec![verify::finite_collapse(&four, cap)?]))));
    results.push((
        "irreducible, SI and I-closed basics",
        timed(None, || {
            Ok(vec![
                verify::irreducible_basics(&four, cap)?,
                verify::si_topology_basics(&four, cap)?,
                verify::i_closed_basics(&four, cap)?,
                verify::i_closed_intersection(&four, cap)?,
            ])
        }),
    ));
    results.push(("continuity hierarchy", timed(Some(secs(60)), || Ok(vec![verify::continuity_hierarchy(&three, cap)?]))));
    results.push(("hyperspace order", timed(None, || Ok(vec![verify::hyperspace_order(&four, cap)?]))));
    results.push((
        "universal property and uniqueness",
        timed(Some(secs(300)), || {
            Ok(vec![verify::universal_property(&three, cap, 3)?, verify::completion_uniqueness(&four, cap)?])
        }),
    ));
    results.push(("catalog ground truths", timed(None, || Ok(vec![verify::catalog_suite(10)?]))));
    results.push(("description language and JSON", dsl_and_io()));

    let mut all = true;
    for (i, (name, o)) in results.iter().enumerate() {
        all &= o.passed;
        println!("criterion {} {}: {} ({})", i + 1, name, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
