use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use king_query::constructions::{build_c, build_c_flip, build_delta, build_u, build_u_flip};
use king_query::graph::random_tournament;
use king_query::graph_file::GraphFile;
use king_query::harness::{
    lookup, monte_carlo_error, mu_exist_king, mu_strong_king, verify_lemmas_with, AnyProcedure,
    Fault, VerifyOptions,
};
use king_query::query::{leaf_audit_exist_king, leaf_audit_strong_king, LeafAudit, Task};
use king_query::{EdgePair, OddN};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "king-query", version, about = "Kings in tournaments: constructions, lemma checks and query-complexity audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the graph families as an edge list.
    Gen {
        /// Output file; the edge list goes to stdout when omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
        #[command(subcommand)]
        family: Family,
    },
    /// Check every structural lemma for all odd orders up to N_MAX.
    Verify {
        n_max: usize,
        #[arg(long)]
        json: bool,
        /// Flip {0, 6} in the 7-vertex triangle tournament before checking.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Lower-bound a procedure's error from its consistent-answer leaf.
    Audit {
        task: TaskArg,
        procedure: String,
        n: usize,
        budget: usize,
        #[arg(long)]
        json: bool,
        /// Seed for randomised procedures.
        #[arg(long, default_value_t = 0)]
        proc_seed: u64,
    },
    /// Estimate a procedure's error on the hard distribution by sampling.
    Mc {
        task: TaskArg,
        procedure: String,
        n: usize,
        budget: usize,
        trials: u64,
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        proc_seed: u64,
    },
    /// Summarise a graph file.
    Info {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Delta { n: usize },
    U { n: usize },
    C { n: usize },
    CFlip { n: usize, i: usize, j: usize },
    UFlip { n: usize, a: usize, b: usize },
    Random { n: usize, seed: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum TaskArg {
    ExistKing,
    StrongKing,
}

impl From<TaskArg> for Task {
    fn from(t: TaskArg) -> Task {
        match t {
            TaskArg::ExistKing => Task::ExistKing,
            TaskArg::StrongKing => Task::StrongKing,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { out, family } => cmd_gen(family, out),
        Command::Verify {
            n_max,
            json,
            inject_fault,
        } => cmd_verify(n_max, json, inject_fault),
        Command::Audit {
            task,
            procedure,
            n,
            budget,
            json,
            proc_seed,
        } => cmd_audit(task.into(), &procedure, n, budget, proc_seed, json),
        Command::Mc {
            task,
            procedure,
            n,
            budget,
            trials,
            seed,
            json,
            proc_seed,
        } => cmd_mc(task.into(), &procedure, n, budget, trials, seed, proc_seed, json),
        Command::Info { path, json } => cmd_info(path, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn odd(n: usize) -> Result<OddN, Failure> {
    OddN::new(n).map_err(usage)
}

fn cmd_gen(family: Family, out: Option<PathBuf>) -> CmdResult {
    let file = match family {
        Family::Delta { n } => GraphFile::Tournament(build_delta(odd(n)?)),
        Family::U { n } => GraphFile::Tournament(build_u(odd(n)?)),
        Family::C { n } => GraphFile::Digraph(build_c(odd(n)?).map_err(usage)?),
        Family::CFlip { n, i, j } => GraphFile::Digraph(build_c_flip(odd(n)?, i, j).map_err(usage)?),
        Family::UFlip { n, a, b } => {
            let e = EdgePair::new(a, b).map_err(usage)?;
            GraphFile::Tournament(build_u_flip(odd(n)?, e).map_err(usage)?)
        }
        Family::Random { n, seed } => GraphFile::Tournament(random_tournament(n, seed).map_err(usage)?),
    };
    let text = file.to_text();
    let g = file.as_digraph();
    let counts = format!("vertices: {}\nedges: {}", g.order(), g.edge_count());
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("{counts}");
        }
        None => {
            print!("{text}");
            eprintln!("{counts}");
        }
    }
    Ok(0)
}

fn cmd_verify(n_max: usize, json: bool, inject_fault: bool) -> CmdResult {
    let n_max = odd(n_max)?;
    let opts = VerifyOptions {
        fault: inject_fault.then(|| Fault::FlipDeltaEdge {
            n: 7,
            pair: EdgePair::new(0, 6).expect("distinct"),
        }),
    };
    let report = verify_lemmas_with(n_max, &opts).map_err(usage)?;
    let passed = report.all_passed();
    if json {
        let value = json!({
            "n_max": report.n_max,
            "all_passed": passed,
            "checks": report.checks,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serialisable"));
    } else {
        for c in &report.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match &c.counterexample {
                Some(cx) => println!("{status}  {:<32} n={:<3} {cx}", c.check, c.n),
                None => println!("{status}  {:<32} n={}", c.check, c.n),
            }
        }
        let failed = report.failures().count();
        println!("n_max: {}", report.n_max);
        println!("all_passed: {passed}");
        println!("{} checks, {failed} failed", report.checks.len());
    }
    Ok(if passed { 0 } else { EXIT_FAILED })
}

/// Input order for `task` at construction parameter `n`.
fn input_order(task: Task, n: OddN) -> usize {
    match task {
        Task::ExistKing => 2 * n.get(),
        Task::StrongKing => n.get(),
    }
}

#[derive(Serialize)]
struct AuditReport {
    task: &'static str,
    procedure: String,
    n: usize,
    order: usize,
    budget: usize,
    answer: Option<String>,
    query_count: usize,
    queried_pairs: usize,
    bound: f64,
    bound_exact: String,
    exceeds_one_third: bool,
}

fn audit_report<A: ToString>(
    task: Task,
    procedure: &str,
    n: OddN,
    budget: usize,
    audit: LeafAudit<A>,
) -> AuditReport {
    AuditReport {
        task: task.name(),
        procedure: procedure.to_string(),
        n: n.get(),
        order: input_order(task, n),
        budget,
        answer: audit.answer.as_ref().map(ToString::to_string),
        query_count: audit.query_count,
        queried_pairs: audit.relevant_queried,
        bound: audit.bound_f64(),
        bound_exact: audit.bound.to_string(),
        exceeds_one_third: audit.exceeds_one_third(),
    }
}

fn cmd_audit(task: Task, name: &str, n: usize, budget: usize, proc_seed: u64, json: bool) -> CmdResult {
    let n = odd(n)?;
    if task == Task::ExistKing && n.get() < 5 {
        return Err(usage("exist-king audits need n >= 5"));
    }
    let report = match lookup(task, name, input_order(task, n), proc_seed).map_err(usage)? {
        AnyProcedure::ExistKing(p) => {
            audit_report(task, name, n, budget, leaf_audit_exist_king(&p, n, budget).map_err(usage)?)
        }
        AnyProcedure::StrongKing(p) => {
            audit_report(task, name, n, budget, leaf_audit_strong_king(&p, n, budget).map_err(usage)?)
        }
    };
    emit(&report, json);
    Ok(0)
}

#[derive(Serialize)]
struct McReport {
    task: &'static str,
    procedure: String,
    n: usize,
    order: usize,
    budget: usize,
    trials: u64,
    seed: u64,
    errors: u64,
    estimate: f64,
    standard_error: f64,
    summary: String,
}

#[allow(clippy::too_many_arguments)]
fn cmd_mc(
    task: Task,
    name: &str,
    n: usize,
    budget: usize,
    trials: u64,
    seed: u64,
    proc_seed: u64,
    json: bool,
) -> CmdResult {
    let n = odd(n)?;
    let order = input_order(task, n);
    let procedure = lookup(task, name, order, proc_seed).map_err(usage)?;
    let est = match &procedure {
        AnyProcedure::ExistKing(p) => {
            let d = mu_exist_king(n).map_err(usage)?;
            monte_carlo_error(p, &d, trials, Some(budget), seed)
        }
        AnyProcedure::StrongKing(p) => {
            let d = mu_strong_king(n).map_err(usage)?;
            monte_carlo_error(p, &d, trials, Some(budget), seed)
        }
    }
    .map_err(usage)?;
    let report = McReport {
        task: task.name(),
        procedure: name.to_string(),
        n: n.get(),
        order,
        budget,
        trials,
        seed,
        errors: est.errors,
        estimate: est.estimate,
        standard_error: est.standard_error,
        summary: format!("{:.6} ± {:.6}", est.estimate, est.standard_error),
    };
    emit(&report, json);
    Ok(0)
}

fn cmd_info(path: PathBuf, json: bool) -> CmdResult {
    let text = fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let file = GraphFile::parse(&text).map_err(usage)?;
    let g = file.as_digraph();
    let mut report = json!({
        "kind": match file { GraphFile::Digraph(_) => "digraph", GraphFile::Tournament(_) => "tournament" },
        "vertices": g.order(),
        "edges": g.edge_count(),
        "kings": g.kings(),
    });
    if let GraphFile::Tournament(t) = &file {
        report["strong_kings"] = json!(t.strong_kings());
        report["balanced"] = json!(t.is_balanced());
    }
    emit(&report, json);
    Ok(0)
}

/// Prints `report` as pretty JSON, or as `key: value` lines with the same fields.
fn emit<T: Serialize>(report: &T, json: bool) {
    let value = serde_json::to_value(report).expect("serialisable");
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serialisable"));
        return;
    }
    if let Value::Object(fields) = value {
        for (key, v) in fields {
            match v {
                Value::String(s) => println!("{key}: {s}"),
                Value::Null => println!("{key}: none"),
                other => println!("{key}: {other}"),
            }
        }
    }
}
