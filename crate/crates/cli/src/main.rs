//! Command-line interface to the factorization counting engine.
//!
//! Subcommands: `count` evaluates a factorization-counting question with
//! the closed formulas, the brute-force oracle, or both; `verify` runs a
//! named identity suite; `tables` lists, shows and checks character tables.
//!
//! Exit codes: 0 success (and MATCH for `--engine both`), 1 mismatch or
//! failed check, 2 usage or budget errors.

mod output;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use refacto_core::characters::{
    char_poly_identity_check_table, exceptional_f, load_embedded, CharTable,
};
use refacto_core::closed_forms::{
    all_weights_poly, cycle_type_rhs, gd1n_poly, gddn_nontransitive_poly, gddn_transitive_poly,
    jackson_poly, n1cycle_transitive_poly,
};
use refacto_core::coeffs::ExpPoly;
use refacto_core::oracle::{
    self, count_by_fixdim, count_by_weight0_type, count_by_weight_distribution,
    long_cycle_with_fixed_point, FactorQuery, Transitivity,
};
use refacto_core::wreath::{GenPerm, GroupSpec};
use refacto_core::Error;

use output::{poly_terms, write_count_report, CountReport, EngineResult, QueryDesc};

const WORK_LIMIT_ENV: &str = "REFACTO_WORK_LIMIT";
const THREADS_ENV: &str = "REFACTO_THREADS";

#[derive(Parser)]
#[command(name = "refacto", version, about = "Exact counting of Coxeter element factorizations")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap the rayon worker count (default: all cores; env REFACTO_THREADS)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Count factorizations of a Coxeter element (or the (n-1)-cycle)
    Count(CountArgs),
    /// Run a named verification suite ("list" lists them, "all" runs all)
    Verify { suite: String },
    /// Inspect character-polynomial tables
    Tables {
        #[command(subcommand)]
        cmd: TablesCmd,
    },
}

#[derive(Args)]
struct CountArgs {
    /// sym, g_d1n, g_ddn, or an embedded table name such as G6
    #[arg(long)]
    group: String,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    /// Number of factors
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Classify::Fixdim)]
    classify: Classify,
    #[arg(long, value_enum, default_value_t = TransArg::All)]
    transitivity: TransArg,
    /// Target element: the Coxeter element, or the (n-1)-cycle in Sₙ
    #[arg(long, value_enum, default_value_t = TargetArg::Coxeter)]
    target: TargetArg,
    #[arg(long, value_enum, default_value_t = Engine::Both)]
    engine: Engine,
    /// Oracle work ceiling; raising it beyond the default needs
    /// --accept-large-budget (env REFACTO_WORK_LIMIT)
    #[arg(long)]
    work_limit: Option<u64>,
    #[arg(long)]
    accept_large_budget: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Classify {
    Fixdim,
    #[value(name = "weight0-type")]
    Weight0Type,
    #[value(name = "weight-dist")]
    WeightDist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransArg {
    All,
    Transitive,
    Nontransitive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Coxeter,
    N1cycle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Formula,
    Oracle,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    let result = match &cli.command {
        Command::Count(args) => run_count(args, cli.format),
        Command::Verify { suite } => run_verify(suite, cli.format),
        Command::Tables { cmd } => run_tables(cmd, cli.format),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads(flag: Option<usize>) {
    let env = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    let threads = flag.or(env);
    #[cfg(feature = "parallel")]
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

fn effective_work_limit(args: &CountArgs) -> Result<u64, String> {
    let env = std::env::var(WORK_LIMIT_ENV)
        .ok()
        .map(|v| {
            v.parse::<u64>()
                .map_err(|e| format!("bad {WORK_LIMIT_ENV}: {e}"))
        })
        .transpose()?;
    let limit = args.work_limit.or(env).unwrap_or(oracle::DEFAULT_WORK_LIMIT);
    if limit > oracle::DEFAULT_WORK_LIMIT && !args.accept_large_budget {
        return Err(format!(
            "work limit {limit} exceeds the default {}; pass --accept-large-budget to confirm",
            oracle::DEFAULT_WORK_LIMIT
        ));
    }
    Ok(limit)
}

fn parse_group(args: &CountArgs) -> Result<GroupSpec, String> {
    let need = |opt: Option<usize>, what: &str| {
        opt.ok_or_else(|| format!("--{what} is required for this group family"))
    };
    match args.group.as_str() {
        "sym" => Ok(GroupSpec::sym(need(args.n, "n")?)),
        "g_d1n" => {
            let d = args.d.ok_or("--d is required for g_d1n")?;
            if d < 2 {
                return Err("g_d1n needs d >= 2".into());
            }
            Ok(GroupSpec::g_d1n(d, need(args.n, "n")?))
        }
        "g_ddn" => {
            let d = args.d.ok_or("--d is required for g_ddn")?;
            let n = need(args.n, "n")?;
            if d < 2 || n < 2 {
                return Err("g_ddn needs d >= 2 and n >= 2".into());
            }
            Ok(GroupSpec::g_ddn(d, n))
        }
        name => {
            let table = load_embedded(name)
                .map_err(|_| format!("unknown group {name:?} (not a family or embedded table)"))?;
            Ok(table.group_spec())
        }
    }
}

fn transitivity(arg: TransArg) -> Transitivity {
    match arg {
        TransArg::All => Transitivity::All,
        TransArg::Transitive => Transitivity::TransitiveOnly,
        TransArg::Nontransitive => Transitivity::NontransitiveOnly,
    }
}

/// Closed-form engine: picks the theorem matching the query.
fn formula_result(args: &CountArgs, spec: &GroupSpec) -> Result<EngineResult, String> {
    let k = args.k;
    let poly: ExpPoly = match (spec, args.classify, args.target) {
        (GroupSpec::Sym { n }, Classify::Fixdim, TargetArg::Coxeter) => {
            // every factorization of an n-cycle is transitive
            match args.transitivity {
                TransArg::All | TransArg::Transitive => jackson_poly(*n, k),
                TransArg::Nontransitive => ExpPoly::zero(k),
            }
        }
        (GroupSpec::Sym { n }, Classify::Fixdim, TargetArg::N1cycle) => {
            match args.transitivity {
                TransArg::Transitive => n1cycle_transitive_poly(*n, k),
                // nontransitive factorizations fix n and reduce to S_{n-1}
                TransArg::Nontransitive => lifted_jackson(*n, k),
                TransArg::All => n1cycle_transitive_poly(*n, k).add(&lifted_jackson(*n, k)),
            }
        }
        (GroupSpec::Gd1n { d, n }, Classify::Fixdim, TargetArg::Coxeter) => {
            match args.transitivity {
                TransArg::All | TransArg::Transitive => gd1n_poly(*d, *n, k),
                TransArg::Nontransitive => ExpPoly::zero(k),
            }
        }
        (GroupSpec::Gddn { d, n }, Classify::Fixdim, TargetArg::Coxeter) => {
            match args.transitivity {
                TransArg::Transitive => gddn_transitive_poly(*d, *n, k),
                TransArg::Nontransitive => gddn_nontransitive_poly(*d, *n, k),
                TransArg::All => {
                    gddn_transitive_poly(*d, *n, k).add(&gddn_nontransitive_poly(*d, *n, k))
                }
            }
        }
        (GroupSpec::Exceptional { name, .. }, Classify::Fixdim, TargetArg::Coxeter) => {
            let table = load_embedded(name).map_err(|e| e.to_string())?;
            exceptional_f(&table, k).map_err(|e| e.to_string())?
        }
        (GroupSpec::Gd1n { d, n }, Classify::Weight0Type, TargetArg::Coxeter) => {
            cycle_type_rhs(*d, *n, k, *n)
        }
        (GroupSpec::Gd1n { d, n }, Classify::WeightDist, TargetArg::Coxeter) => {
            all_weights_poly(*d, *n, k)
        }
        _ => return Err("no closed form covers this query; use --engine oracle".into()),
    };
    Ok(EngineResult {
        engine: "formula".into(),
        polynomial: Some(poly_terms(&poly)),
        classes: None,
    })
}

/// Factorizations of the (n-1)-cycle in which every factor fixes n, as a
/// polynomial: x₁···x_k · (Jackson polynomial of S_{n-1}).
fn lifted_jackson(n: usize, k: usize) -> ExpPoly {
    let inner = jackson_poly(n - 1, k);
    let mut shift = ExpPoly::zero(k);
    shift.add_term(vec![1; k], refacto_core::coeffs::rat(1));
    inner.mul(&shift)
}

fn oracle_query(args: &CountArgs, spec: &GroupSpec) -> Result<FactorQuery, String> {
    let mut q = FactorQuery::new(spec.clone(), args.k)
        .with_transitivity(transitivity(args.transitivity))
        .with_work_limit(effective_work_limit(args)?);
    if args.target == TargetArg::N1cycle {
        match spec {
            GroupSpec::Sym { n } => {
                q = q.with_target(GenPerm::new(1, long_cycle_with_fixed_point(*n), vec![0; *n]));
            }
            _ => return Err("--target n1cycle only applies to sym".into()),
        }
    }
    Ok(q)
}

fn oracle_result(args: &CountArgs, spec: &GroupSpec) -> Result<EngineResult, String> {
    let q = oracle_query(args, spec)?;
    let to_string_err = |e: Error| e.to_string();
    let result = match args.classify {
        Classify::Fixdim => EngineResult {
            engine: "oracle".into(),
            polynomial: Some(poly_terms(&count_by_fixdim(&q).map_err(to_string_err)?)),
            classes: None,
        },
        Classify::Weight0Type => {
            let counts = count_by_weight0_type(&q).map_err(to_string_err)?;
            EngineResult {
                engine: "oracle".into(),
                polynomial: None,
                classes: Some(output::weight0_classes(&counts)),
            }
        }
        Classify::WeightDist => {
            let counts = count_by_weight_distribution(&q).map_err(to_string_err)?;
            EngineResult {
                engine: "oracle".into(),
                polynomial: None,
                classes: Some(output::weight_dist_classes(&counts)),
            }
        }
    };
    Ok(result)
}

/// Compare the formula and oracle answers on a common polynomial encoding.
fn verdict(args: &CountArgs, spec: &GroupSpec) -> Result<bool, String> {
    let q = oracle_query(args, spec)?;
    let to_string_err = |e: Error| e.to_string();
    let formula_poly = formula_result(args, spec)?
        .polynomial
        .ok_or("formula produced no polynomial")?;
    let oracle_poly = match args.classify {
        Classify::Fixdim => poly_terms(&count_by_fixdim(&q).map_err(to_string_err)?),
        Classify::Weight0Type => {
            let counts = count_by_weight0_type(&q).map_err(to_string_err)?;
            let (d, n) = match spec {
                GroupSpec::Gd1n { d, n } => (*d, *n),
                _ => return Err("weight0-type comparison needs g_d1n".into()),
            };
            poly_terms(&oracle::weight0_counts_to_poly(d, args.k, n, &counts))
        }
        Classify::WeightDist => {
            let counts = count_by_weight_distribution(&q).map_err(to_string_err)?;
            let d = spec.wreath_d().ok_or("weight-dist needs a wreath group")?;
            poly_terms(&oracle::weight_distribution_counts_to_poly(d, args.k, &counts))
        }
    };
    Ok(formula_poly == oracle_poly)
}

fn run_count(args: &CountArgs, format: Format) -> Result<ExitCode, String> {
    let spec = parse_group(args)?;
    let mut results = Vec::new();
    let mut verdict_str = None;
    match args.engine {
        Engine::Formula => results.push(formula_result(args, &spec)?),
        Engine::Oracle => results.push(oracle_result(args, &spec)?),
        Engine::Both => {
            results.push(formula_result(args, &spec)?);
            results.push(oracle_result(args, &spec)?);
            verdict_str = Some(if verdict(args, &spec)? {
                "MATCH".to_string()
            } else {
                "MISMATCH".to_string()
            });
        }
    }
    let report = CountReport {
        schema_version: 1,
        command: "count".into(),
        query: QueryDesc {
            group: spec.name(),
            k: args.k,
            classify: match args.classify {
                Classify::Fixdim => "fixdim",
                Classify::Weight0Type => "weight0-type",
                Classify::WeightDist => "weight-dist",
            }
            .into(),
            transitivity: match args.transitivity {
                TransArg::All => "all",
                TransArg::Transitive => "transitive",
                TransArg::Nontransitive => "nontransitive",
            }
            .into(),
            target: match args.target {
                TargetArg::Coxeter => "coxeter",
                TargetArg::N1cycle => "n1cycle",
            }
            .into(),
        },
        results,
        verdict: verdict_str.clone(),
    };
    write_count_report(&report, format);
    Ok(if verdict_str.as_deref() == Some("MISMATCH") {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_verify(suite: &str, format: Format) -> Result<ExitCode, String> {
    if suite == "list" {
        for name in suites::SUITES {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let names: Vec<&str> = if suite == "all" {
        suites::SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut all = Vec::new();
    for name in names {
        let results = suites::run_suite(name)
            .ok_or_else(|| format!("unknown suite {name:?}; try `verify list`"))?;
        all.extend(results);
    }
    let failed = all.iter().filter(|r| !r.pass).count();
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&all).unwrap());
    } else {
        for r in &all {
            let status = if r.pass { "pass" } else { "FAIL" };
            match &r.note {
                Some(note) => println!("{status}  {}: {} ({note})", r.suite, r.check),
                None => println!("{status}  {}: {}", r.suite, r.check),
            }
        }
        println!("{} checks, {failed} failed", all.len());
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Subcommand)]
enum TablesCmd {
    /// List the embedded tables
    List,
    /// Print one table in its stored form
    Show { group: String },
    /// Load a table file and verify its invariants
    Check { file: std::path::PathBuf },
}

fn run_tables(cmd: &TablesCmd, format: Format) -> Result<ExitCode, String> {
    match cmd {
        TablesCmd::List => {
            let names = refacto_core::characters::embedded_table_names();
            if format == Format::Json {
                let rows: Vec<_> = names
                    .iter()
                    .map(|n| {
                        let t = load_embedded(n).unwrap();
                        serde_json::json!({
                            "name": n,
                            "rank": t.rank(),
                            "degrees": t.degrees,
                            "coexponents": t.coexponents,
                            "order": t.order().to_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                for n in names {
                    let t = load_embedded(n).unwrap();
                    println!("{n}\trank {}\t|G| = {}", t.rank(), t.order());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        TablesCmd::Show { group } => {
            let table = load_embedded(group).map_err(|e| e.to_string())?;
            print!("{}", table.serialize());
            Ok(ExitCode::SUCCESS)
        }
        TablesCmd::Check { file } => {
            let source = std::fs::read_to_string(file).map_err(|e| e.to_string())?;
            let table = CharTable::parse(&source).map_err(|e| e.to_string())?;
            let report = char_poly_identity_check_table(&table);
            let assembly = exceptional_f(&table, 1).map(|f| f == ExpPoly::one(1));
            let assembly_ok = matches!(assembly, Ok(true));
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "group": report.group,
                        "f_triv_identity": report.triv_ok,
                        "f_det_identity": report.det_ok,
                        "frobenius_normalization": assembly_ok,
                        "messages": report.messages,
                    }))
                    .unwrap()
                );
            } else {
                println!("group {}", report.group);
                println!(
                    "f_triv = prod(x-1+d_i): {}",
                    if report.triv_ok { "ok" } else { "FAIL" }
                );
                println!(
                    "f_det  = prod(x-e*_i):  {}",
                    if report.det_ok { "ok" } else { "FAIL" }
                );
                println!(
                    "frobenius normalization F(x; k=1) = 1: {}",
                    if assembly_ok { "ok" } else { "FAIL" }
                );
                for m in &report.messages {
                    println!("  {m}");
                }
                if let Err(e) = &assembly {
                    println!("  {e}");
                }
            }
            Ok(if report.all_ok() && assembly_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
