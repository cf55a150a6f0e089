//! The eleven acceptance criteria, one PASS/FAIL line each.
//!
//! Criterion 8 asks for the W_R form of the cobracket comparison, which is
//! false (first counterexample I(2,3) at weight 5); it is listed in
//! `EXPECTED_FAILURES` and printed as FAIL. The process succeeds only if the
//! failing criteria are exactly the expected ones, so an unexpected pass is
//! an error too.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lsdual::context::Context;
use lsdual::verify::{run_check, CheckReport, Params};

const EXPECTED_FAILURES: &[usize] = &[8];

struct Criterion {
    number: usize,
    title: &'static str,
    budget_secs: u64,
    checks: &'static [(&'static str, Option<usize>, usize)],
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "parity vanishing, m <= 4, k <= 12", budget_secs: 300, checks: &[("parity", Some(4), 12)] },
    Criterion { number: 2, title: "ls = W/W_R = Dsh dimensions, m <= 4, k <= 10", budget_secs: 600, checks: &[("dimension-agreement", Some(4), 10)] },
    Criterion { number: 3, title: "Ihara closure of ls, weight <= 9", budget_secs: 300, checks: &[("ihara-closure", Some(9), 9)] },
    Criterion { number: 4, title: "<phi(F), ls> = 0 and perfect pairing, m <= 4, k <= 10", budget_secs: 300, checks: &[("orthogonality", Some(4), 10)] },
    Criterion { number: 5, title: "co_ihara adjoint to the bracket, weight <= 6", budget_secs: 120, checks: &[("co-ihara-adjoint", Some(6), 6)] },
    Criterion { number: 6, title: "co_ihara vanishes in depth 1, weight <= 8", budget_secs: 60, checks: &[("co-ihara-depth1", Some(1), 8)] },
    Criterion { number: 7, title: "Q-series shuffle law, truncation 6", budget_secs: 120, checks: &[("q-shuffle", None, 6)] },
    Criterion {
        number: 8,
        title: "cobracket comparison modulo W_R and modulo F, m <= 3, k <= 8",
        budget_secs: 600,
        checks: &[("cobracket-comparison", Some(3), 8), ("cobracket-comparison-f", Some(3), 8)],
    },
    Criterion { number: 9, title: "phi(U) and W_R are coideals, k <= 8", budget_secs: 600, checks: &[("coideal-u", Some(8), 8), ("coideal-wr", Some(8), 8)] },
    Criterion { number: 10, title: "co-Jacobi on V/F, m <= 3, k <= 8", budget_secs: 300, checks: &[("cojacobi", Some(3), 8)] },
    Criterion { number: 11, title: "beta o i o h_m = dual of f_m, m = 2,3, k <= 8", budget_secs: 180, checks: &[("fm-compatibility", Some(3), 8)] },
];

fn describe(r: &CheckReport) -> String {
    match r.first_failure() {
        None => format!("{}: pass ({} units)", r.check, r.results.len()),
        Some(f) => format!(
            "{}: FAIL at (m,k) = ({},{}) witness {}",
            r.check,
            f.m,
            f.k,
            f.witness.as_ref().map_or("-".into(), |w| w.to_string())
        ),
    }
}

fn main() -> ExitCode {
    let ctx = Context::default();
    let mut failed = BTreeSet::new();
    for c in CRITERIA {
        let start = Instant::now();
        let mut details = Vec::new();
        let mut ok = true;
        for &(id, depth, weight) in c.checks {
            let params = Params { max_depth: depth, max_weight: Some(weight) };
            match run_check(&ctx, id, params).expect("registered check") {
                Ok(r) => {
                    ok &= r.passed();
                    details.push(describe(&r));
                }
                Err(e) => {
                    ok = false;
                    details.push(format!("{id}: error {e}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(c.budget_secs) {
            ok = false;
            details.push(format!("over the {} s budget", c.budget_secs));
        }
        if !ok {
            failed.insert(c.number);
        }
        println!(
            "criterion {:>2} {} {} [{:.2?}]",
            c.number,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed
        );
        for d in details {
            println!("    {d}");
        }
    }
    let expected: BTreeSet<usize> = EXPECTED_FAILURES.iter().copied().collect();
    let passed = CRITERIA.len() - failed.len();
    println!("\n{passed}/{} criteria pass; failing: {failed:?}; expected failing: {expected:?}", CRITERIA.len());
    if failed == expected {
        println!("acceptance: failures match the expected set");
        ExitCode::SUCCESS
    } else {
        let unexpected: Vec<_> = failed.difference(&expected).collect();
        let fixed: Vec<_> = expected.difference(&failed).collect();
        println!("acceptance: unexpected failures {unexpected:?}, unexpected passes {fixed:?}");
        ExitCode::FAILURE
    }
}
