//! The `lsdual` command line.
//!
//! Exit codes: 0 success, 1 verification failure or runtime error, 2 usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::{Cache, CACHE_DIR_ENV};
use crate::commring::monomial_basis;
use crate::context::Context;
use crate::dihedral::{v_basis, vvector_to_json, w_basis, wvector_to_json};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::lincomb::BlockBasis;
use crate::verify::{check_catalog, check_ids, dimension_table, is_check, run_all, run_check, Params};

#[derive(Parser, Debug)]
#[command(name = "lsdual", version, about = "Bigraded spaces of the linearized double shuffle Lie algebra and its duals")]
struct Cli {
    /// Cache directory for computed subspaces (default: $LSDUAL_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Omit per-unit timings from reports.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a canonical basis as JSON. For `dsh` the second number is the
    /// polynomial degree d, for the other kinds the weight k.
    Basis { kind: BasisKind, m: usize, k: usize },
    /// Print the dimension table.
    Dims {
        #[arg(long)]
        max_depth: usize,
        #[arg(long)]
        max_weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification check (or `all`) and print the JSON report.
    Verify {
        check: String,
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// List the verification checks and their default ranges.
    Checks,
    /// Inspect or empty the cache directory.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisKind {
    Ls,
    Dsh,
    Wr,
    Vf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CacheAction {
    Status,
    Clear,
}

enum Failure {
    Usage(String),
    Runtime(crate::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => {
                let mut buf = Vec::new();
                let r = pool.install(|| dispatch(&cli, &mut buf));
                out.write_all(&buf).map_err(Failure::from).and(r)
            }
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => dispatch(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let cache = Cache::resolve(cli.cache_dir.as_deref());
    match &cli.command {
        Command::Basis { kind, m, k } => {
            let ctx = Context::new(cache);
            print_json(out, &basis_json(&ctx, *kind, *m, *k)?)?;
            Ok(0)
        }
        Command::Dims {
            max_depth,
            max_weight,
            format,
        } => {
            if *max_depth == 0 || max_weight < max_depth {
                return Err(Failure::Usage("need --max-depth >= 1 and --max-weight >= --max-depth".into()));
            }
            let rows = dimension_table(&Context::new(cache), *max_depth, *max_weight)?;
            match format {
                Format::Json => print_json(out, &serde_json::to_value(&rows)?)?,
                Format::Csv => {
                    writeln!(out, "m,k,ls,D,dsh,vf")?;
                    for r in rows {
                        let dsh = r.dsh.map_or("-".to_string(), |d| d.to_string());
                        writeln!(out, "{},{},{},{},{},{}", r.m, r.k, r.ls, r.d, dsh, r.vf)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            check,
            max_depth,
            max_weight,
        } => {
            let params = Params {
                max_depth: *max_depth,
                max_weight: *max_weight,
            };
            let ctx = Context::new(cache);
            let mut reports = if check == "all" {
                run_all(&ctx, params)?
            } else if is_check(check) {
                vec![run_check(&ctx, check, params).expect("known check")?]
            } else {
                return Err(Failure::Usage(format!(
                    "unknown check '{check}'; expected 'all' or one of: {}",
                    check_ids().join(", ")
                )));
            };
            if cli.no_timing {
                reports.iter_mut().for_each(|r| r.strip_timing());
            }
            let passed = reports.iter().all(|r| r.passed());
            let value = if check == "all" {
                serde_json::to_value(&reports)?
            } else {
                serde_json::to_value(&reports[0])?
            };
            print_json(out, &value)?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Checks => {
            for (id, summary, depth, weight) in check_catalog() {
                writeln!(out, "{id:<24} depth<={depth:<2} weight<={weight:<2} {summary}")?;
            }
            Ok(0)
        }
        Command::Cache { action } => {
            let cache = cache.ok_or_else(|| {
                Failure::Usage(format!("no cache directory: pass --cache-dir or set {CACHE_DIR_ENV}"))
            })?;
            let value = match action {
                CacheAction::Status => {
                    let entries = cache.status()?;
                    let total: u64 = entries.iter().map(|e| e.bytes).sum();
                    json!({
                        "dir": cache.dir().display().to_string(),
                        "count": entries.len(),
                        "bytes": total,
                        "entries": entries.iter().map(|e| json!({ "name": e.name, "bytes": e.bytes })).collect::<Vec<_>>(),
                    })
                }
                CacheAction::Clear => json!({ "dir": cache.dir().display().to_string(), "removed": cache.clear()? }),
            };
            print_json(out, &value)?;
            Ok(0)
        }
    }
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

/// The basis of a subspace together with representatives of the quotient.
fn with_quotient<K: Ord + Clone>(
    basis: &BlockBasis<K>,
    sub: &Subspace,
    to_json: impl Fn(&crate::lincomb::LinComb<K>) -> Value,
) -> (Value, Value) {
    let elems = sub.basis().iter().map(|v| to_json(&basis.element_of(v))).collect();
    let reps = sub
        .free_columns()
        .into_iter()
        .map(|c| to_json(&crate::lincomb::LinComb::basis(basis.get(c).clone())))
        .collect();
    (Value::Array(elems), Value::Array(reps))
}

fn basis_json(ctx: &Context, kind: BasisKind, m: usize, k: usize) -> Result<Value, Failure> {
    match kind {
        BasisKind::Dsh => {
            if m < 2 {
                return Err(Failure::Usage("dsh needs m >= 2".into()));
            }
            let d = k;
            let dsh = ctx.dsh(m, m + d)?;
            let monos = monomial_basis(m, d);
            let basis: Vec<Value> = dsh
                .basis()
                .iter()
                .map(|v| {
                    let terms: Vec<Value> = v
                        .iter()
                        .map(|(i, c)| json!({ "exponents": monos.get(i).exponents(), "coeff": c }))
                        .collect();
                    Value::Array(terms)
                })
                .collect();
            Ok(json!({ "kind": "dsh", "m": m, "d": d, "dim": dsh.dim(), "basis": basis }))
        }
        _ if m == 0 || k < m => Err(Failure::Usage(format!("need 1 <= m <= k, got m = {m}, k = {k}"))),
        BasisKind::Ls => {
            let j = ctx.ls_basis(m, k)?.to_json();
            Ok(json!({ "kind": "ls", "m": m, "k": k, "dim": j.dim, "basis": j.basis }))
        }
        BasisKind::Wr => {
            let wr = ctx.wr(m, k)?;
            let (basis, reps) = with_quotient(&w_basis(m, k), &wr, |v| json!(wvector_to_json(v)));
            Ok(json!({
                "kind": "wr", "m": m, "k": k,
                "dim": wr.dim(), "quotient_dim": wr.codim(),
                "basis": basis, "quotient_representatives": reps,
            }))
        }
        BasisKind::Vf => {
            let f = ctx.f(m, k)?;
            let (basis, reps) = with_quotient(&v_basis(m, k), &f, |v| json!(vvector_to_json(v)));
            Ok(json!({
                "kind": "vf", "m": m, "k": k,
                "dim": f.dim(), "quotient_dim": f.codim(),
                "basis": basis, "quotient_representatives": reps,
            }))
        }
    }
}
