//! Per-bidegree mechanical checks with machine-readable reports.
//!
//! Each check expands into units `(m, k)`; for the series checks the unit is
//! `(number of variables or depth, truncation order)` and `dim_data.case`
//! names the instance. Units run in parallel, results are sorted by
//! `(m, k)`, and a check's report stops at its first failing unit.

mod checks;
pub mod membership;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::context::Context;
use crate::error::Result;
use crate::rational::binomial;

pub use checks::QIdx;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitResult {
    pub m: usize,
    pub k: usize,
    pub status: Status,
    pub dim_data: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub results: Vec<UnitResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&UnitResult> {
        self.results.iter().find(|r| r.status == Status::Fail)
    }

    pub fn strip_timing(&mut self) {
        for r in &mut self.results {
            r.millis = None;
        }
    }
}

/// Range overrides; `None` means the check's default envelope.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub max_depth: Option<usize>,
    pub max_weight: Option<usize>,
}

/// What one unit found.
pub(crate) struct Outcome {
    pub passed: bool,
    pub dim_data: Map<String, Value>,
    pub witness: Option<Value>,
}

type Units = fn(usize, usize) -> Vec<(usize, usize, Option<&'static str>)>;
type Run = fn(&Context, usize, usize, Option<&'static str>, usize) -> Result<Outcome>;

pub(crate) struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_depth: usize,
    pub default_weight: usize,
    pub units: Units,
    pub run: Run,
}

/// The identifiers accepted by [`run_check`], in the order `all` runs them.
pub fn check_ids() -> Vec<&'static str> {
    checks::REGISTRY.iter().map(|c| c.id).collect()
}

/// `(id, one-line summary, default max depth, default max weight)`.
pub fn check_catalog() -> Vec<(&'static str, &'static str, usize, usize)> {
    checks::REGISTRY
        .iter()
        .map(|c| (c.id, c.summary, c.default_depth, c.default_weight))
        .collect()
}

pub fn is_check(id: &str) -> bool {
    checks::REGISTRY.iter().any(|c| c.id == id)
}

/// Runs one check; `None` if the id is unknown.
pub fn run_check(ctx: &Context, id: &str, params: Params) -> Option<Result<CheckReport>> {
    let def = checks::REGISTRY.iter().find(|c| c.id == id)?;
    Some(run_def(ctx, def, params))
}

fn run_def(ctx: &Context, def: &CheckDef, params: Params) -> Result<CheckReport> {
    let depth = params.max_depth.unwrap_or(def.default_depth);
    let weight = params.max_weight.unwrap_or(def.default_weight);
    let mut units = (def.units)(depth, weight);
    units.sort();
    let mut results: Vec<UnitResult> = units
        .par_iter()
        .map(|&(m, k, case)| {
            let start = Instant::now();
            let outcome = (def.run)(ctx, m, k, case, weight).unwrap_or_else(|e| Outcome {
                passed: false,
                dim_data: Map::new(),
                witness: Some(serde_json::json!({ "error": e.to_string() })),
            });
            let mut dim_data = outcome.dim_data;
            if let Some(c) = case {
                dim_data.insert("case".into(), Value::from(c));
            }
            UnitResult {
                m,
                k,
                status: if outcome.passed { Status::Pass } else { Status::Fail },
                dim_data,
                witness: if outcome.passed { None } else { outcome.witness.or(Some(Value::Null)) },
                millis: Some(start.elapsed().as_millis() as u64),
            }
        })
        .collect();
    if let Some(i) = results.iter().position(|r| r.status == Status::Fail) {
        results.truncate(i + 1);
    }
    Ok(CheckReport {
        check: def.id.to_string(),
        params: serde_json::json!({ "max_depth": depth, "max_weight": weight }),
        results,
    })
}

/// Runs every check in registry order.
pub fn run_all(ctx: &Context, params: Params) -> Result<Vec<CheckReport>> {
    checks::REGISTRY.iter().map(|d| run_def(ctx, d, params)).collect()
}

/// One row of the dimension table. `dsh` is absent in depth 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub m: usize,
    pub k: usize,
    pub ls: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub dsh: Option<usize>,
    pub vf: usize,
}

/// `dim ls_m^k`, `dim (W/W_R)_{m,k}`, `dim Dsh_m(k - m)` and `dim (V/F)_{m,k}`
/// for `1 <= m <= max_depth`, `m <= k <= max_weight`.
pub fn dimension_table(ctx: &Context, max_depth: usize, max_weight: usize) -> Result<Vec<DimRow>> {
    let cells: Vec<(usize, usize)> = (1..=max_depth)
        .flat_map(|m| (m..=max_weight).map(move |k| (m, k)))
        .collect();
    let mut rows = cells
        .par_iter()
        .map(|&(m, k)| {
            let wr = ctx.wr(m, k)?;
            let f = ctx.f(m, k)?;
            let total = usize::try_from(binomial(k as u64, m as u64).numer()).expect("small binomial");
            Ok(DimRow {
                m,
                k,
                ls: ctx.ls(m, k)?.dim(),
                d: wr.codim(),
                dsh: if m >= 2 { Some(ctx.dsh(m, k)?.dim()) } else { None },
                vf: total - f.dim(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.m, r.k));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_one_rows() {
        let rows = dimension_table(&Context::default(), 1, 6).unwrap();
        let ls: Vec<usize> = rows.iter().map(|r| r.ls).collect();
        assert_eq!(ls, [1, 0, 1, 0, 1, 0]);
        assert!(rows.iter().all(|r| r.dsh.is_none() && r.d == r.ls && r.vf == r.ls));
    }

    #[test]
    fn report_truncates_after_first_failure() {
        let ctx = Context::default();
        let params = Params { max_depth: Some(2), max_weight: Some(8) };
        let r = run_check(&ctx, "cobracket-comparison", params).unwrap().unwrap();
        assert!(!r.passed());
        let last = r.results.last().unwrap();
        assert_eq!((last.m, last.k, last.status), (2, 5, Status::Fail));
        assert!(run_check(&ctx, "nope", params).is_none());
    }
}
