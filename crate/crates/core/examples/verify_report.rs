//! Running a verification check and reading its report.

use lsdual::context::Context;
use lsdual::verify::{check_catalog, run_check, Params};

fn main() -> lsdual::Result<()> {
    for (id, summary, _, _) in check_catalog().iter().take(5) {
        println!("{id}: {summary}");
    }
    let ctx = Context::default();
    let params = Params { max_depth: Some(3), max_weight: Some(8) };
    for id in ["cobracket-comparison-f", "cobracket-comparison"] {
        let mut report = run_check(&ctx, id, params).expect("known id")?;
        report.strip_timing();
        println!("{id}: passed = {}", report.passed());
        if let Some(f) = report.first_failure() {
            println!("  first failure at ({}, {}): {}", f.m, f.k, serde_json::to_string(&f.witness)?);
        }
    }
    Ok(())
}
