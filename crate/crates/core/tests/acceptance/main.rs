//! Acceptance run: one PASS or FAIL line per criterion.

mod corpus;
mod golden;
mod identities;
mod order;
mod stability;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use corpus::Corpus;

/// Counts checks and keeps the first few failures.
#[derive(Debug, Default)]
pub struct Tally {
    checked: u64,
    failed: u64,
    first: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.len() < 5 {
                self.first.push(what());
            }
        }
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
}

fn report(c: &Criterion, tally: &Tally, took: Duration) -> bool {
    let slow = c.limit.is_some_and(|l| took > l);
    let pass = tally.failed == 0 && !slow;
    let limit = c.limit.map_or(String::new(), |l| format!(", limit {l:?}"));
    println!(
        "{} criterion {}: {} ({} checks, {} failed, {:.2?}{limit})",
        if pass { "PASS" } else { "FAIL" },
        c.id,
        c.title,
        tally.checked,
        tally.failed,
        took
    );
    for line in &tally.first {
        println!("    {line}");
    }
    if slow {
        println!("    over the time limit");
    }
    pass
}

fn run(c: Criterion, f: impl FnOnce() -> Tally, extra: Duration) -> bool {
    let start = Instant::now();
    let tally = f();
    report(&c, &tally, start.elapsed() + extra)
}

const fn crit(id: u32, title: &'static str, limit: Option<u64>) -> Criterion {
    Criterion {
        id,
        title,
        limit: match limit {
            Some(s) => Some(Duration::from_secs(s)),
            None => None,
        },
    }
}

fn main() -> ExitCode {
    let zero = Duration::ZERO;
    let mut ok = true;
    ok &= run(
        crit(1, "golden diagrams, strands and sequences", Some(1)),
        golden::diagrams,
        zero,
    );
    ok &= run(crit(2, "golden orientation sets", Some(1)), golden::orientations, zero);
    ok &= run(crit(3, "golden order sets", Some(1)), golden::order_sets, zero);

    let start = Instant::now();
    let corpus = Corpus::build();
    let built = start.elapsed();
    println!(
        "corpus: {} block configurations, {} weights enumerated in full, {} orbit tables, {} signature representatives, {} sampled orbits, {} pairs, built in {built:.2?}",
        corpus.configs,
        corpus.weights,
        corpus.tables.len(),
        corpus.representatives,
        corpus.samples.len(),
        corpus.pairs(),
    );
    ok &= run(
        crit(4, "p d(-q) = I and r e(-q) = I", Some(60)),
        || identities::inversion(&corpus),
        built,
    );
    ok &= run(
        crit(5, "recursions agree with inversion", None),
        || identities::recursion(&corpus),
        zero,
    );
    let c6 = crit(6, "order: sequences, move closures and reflection search", None);
    ok &= run(
        c6,
        || {
            let mut t = order::sequences();
            let w = order::weights(&corpus);
            t.checked += w.checked;
            t.failed += w.failed;
            t.first.extend(w.first);
            t
        },
        zero,
    );
    ok &= run(crit(7, "distance equals shortest path", None), order::distances, zero);
    ok &= run(
        crit(8, "degree and parity laws", None),
        || identities::degrees(&corpus),
        zero,
    );
    ok &= run(
        crit(9, "factorization and duality", None),
        || identities::factorization(&corpus),
        zero,
    );
    ok &= run(
        crit(10, "projection relations for d and e", None),
        || identities::projections(&corpus),
        zero,
    );
    ok &= run(crit(11, "stable limits", Some(60)), stability::stability, zero);
    ok &= run(
        crit(12, "r(-1) e(1) = I and t symmetric", None),
        || identities::characters(&corpus),
        zero,
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
