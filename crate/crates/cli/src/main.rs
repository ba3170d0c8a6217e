use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use smallclass::{
    enumerate_normal_subgroups, find_theorem_a_witnesses_enumerating, GroupAnalysis,
    OracleCapExceeded, Statement, TheoremReport, Verdict, DEFAULT_MAX_ORDER, DEFAULT_ORACLE_CAP,
};
use smallclass_cli::catalog::CatalogError;
use smallclass_cli::scan::{
    analyze_group, format_class_sizes, parse_statement_set, render_json, render_text, run_checker,
    scan, ScanConfig, WitnessSearchEntry,
};
use smallclass_cli::spec::{BuildSpecError, GroupSpec, SpecError};

/// Exit codes: 0 = completed, no counterexample; 2 = some checker returned
/// COUNTEREXAMPLE (a bug witness on a settled statement, a discovery on an
/// open one); 1 = usage or I/O error.
#[derive(Parser)]
#[command(name = "smallclass", version, about = "Finite-group structure analyzer and statement scanner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural facts about one group
    Info {
        /// Group expression, e.g. sym:4, product:dihedral:4,cyclic:3, file:PATH
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
        /// Largest group order a construction may reach
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Run one statement checker on one group
    Check {
        #[arg(long)]
        group: String,
        /// Statement identifier (see --statements help of `scan`)
        #[arg(long)]
        statement: String,
        /// Sweep the checker over qualifying normal subgroups instead of
        /// using the Fitting subgroup
        #[arg(long)]
        subgroup_witness_search: bool,
        #[arg(long)]
        json: bool,
        /// Conjugacy-class-count cap for normal subgroup enumeration
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Check statements across built-in and catalog groups
    Scan {
        /// Include every built-in group of order up to this bound (0 = none)
        #[arg(long, default_value_t = 64)]
        builtin_max_order: usize,
        /// JSON group catalog; repeat for several files
        #[arg(long = "catalog")]
        catalogs: Vec<PathBuf>,
        /// `all` or a comma-separated list of statement identifiers:
        /// lemma_centralizer, prop_commutator_central, theorem_A,
        /// corollary_B, theorem_C, conjecture_1, conjecture_1prime,
        /// prop_equivalence, prop_flat
        #[arg(long, default_value = "all")]
        statements: String,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Build(#[from] BuildSpecError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Enumeration(#[from] OracleCapExceeded),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Out {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Info { group, json, max_order } => info(&group, json, max_order),
        Command::Check {
            group,
            statement,
            subgroup_witness_search,
            json,
            oracle_cap,
            max_order,
        } => check(&group, &statement, subgroup_witness_search, json, oracle_cap, max_order),
        Command::Scan {
            builtin_max_order,
            catalogs,
            statements,
            oracle_cap,
            jobs,
            json,
            out,
            max_order,
        } => run_scan(
            builtin_max_order,
            &catalogs,
            &statements,
            oracle_cap,
            jobs,
            json,
            out.as_deref(),
            max_order,
        ),
    }
}

fn build_group(text: &str, max_order: usize) -> Result<smallclass::GroupTable, CliError> {
    Ok(GroupSpec::parse(text)?.build(max_order)?)
}

fn info(group: &str, json: bool, max_order: usize) -> Result<u8, CliError> {
    let g = build_group(group, max_order)?;
    let record = analyze_group(g, &[], 0);
    if json {
        println!("{}", serde_json::to_string_pretty(&record).expect("record serializes"));
    } else {
        println!("{}  order {}", record.name, record.order);
        println!("  class sizes: {}", format_class_sizes(&record.class_sizes));
        println!("  center order: {}", record.center_order);
        println!(
            "  small-class union degenerate (fewer than two class sizes): {}",
            if record.small_degenerate { "yes" } else { "no" }
        );
        match record.m_class {
            Some(c) => println!("  |M(G)| = {}, nilpotency class {}", record.m_order, c),
            None => println!("  |M(G)| = {}, not nilpotent", record.m_order),
        }
        println!("  |F(G)| = {}", record.f_order);
        println!("  solvable: {}", if record.solvable { "yes" } else { "no" });
    }
    Ok(0)
}

fn render_report_text(r: &TheoremReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "{} / {}: {}", r.group_name, r.statement.id(), r.verdict.id());
    let hyps: Vec<String> = r
        .hypotheses
        .iter()
        .map(|h| format!("{}={}", h.name, h.held))
        .collect();
    let _ = writeln!(out, "  hypotheses: {}", if hyps.is_empty() { "-".into() } else { hyps.join(" ") });
    if let Some(c) = r.conclusion {
        let _ = writeln!(out, "  conclusion: {c}");
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "  witness: {}", serde_json::to_string(w).expect("witness serializes"));
    }
    out
}

fn check(
    group: &str,
    statement: &str,
    sweep: bool,
    json: bool,
    oracle_cap: usize,
    max_order: usize,
) -> Result<u8, CliError> {
    let statement = Statement::parse(statement).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown statement {:?}; known: {}",
            statement,
            Statement::ALL.map(|s| s.id()).join(", ")
        ))
    })?;
    let g = build_group(group, max_order)?;
    let a = GroupAnalysis::new(g);
    let entries: Vec<WitnessSearchEntry> = if !sweep {
        vec![WitnessSearchEntry {
            subgroup_order: a.fitting().order(),
            report: run_checker(&a, statement),
        }]
    } else {
        match statement {
            Statement::TheoremA => find_theorem_a_witnesses_enumerating(&a, oracle_cap)?
                .into_iter()
                .map(|(sub, report)| WitnessSearchEntry {
                    subgroup_order: sub.order(),
                    report,
                })
                .collect(),
            Statement::LemmaCentralizer
            | Statement::PropCommutatorCentral
            | Statement::CorollaryB => {
                enumerate_normal_subgroups(a.group(), a.classes(), oracle_cap)?
                    .iter()
                    .map(|k| WitnessSearchEntry {
                        subgroup_order: k.order(),
                        report: match statement {
                            Statement::LemmaCentralizer => {
                                smallclass::check_lemma_centralizer(&a, k)
                            }
                            Statement::PropCommutatorCentral => {
                                smallclass::check_prop_commutator_central(&a, k)
                            }
                            _ => smallclass::check_corollary_b(&a, k),
                        },
                    })
                    .collect()
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "--subgroup-witness-search does not apply: {} takes no subgroup parameter",
                    statement.id()
                )))
            }
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&entries).expect("entries serialize"));
    } else if entries.is_empty() {
        println!("{}: no qualifying subgroup", statement.id());
    } else {
        for e in &entries {
            if sweep {
                println!("subgroup of order {}:", e.subgroup_order);
            }
            print!("{}", render_report_text(&e.report));
        }
    }
    let hit = entries.iter().any(|e| e.report.verdict == Verdict::Counterexample);
    Ok(if hit { 2 } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn run_scan(
    builtin_max_order: usize,
    catalogs: &[PathBuf],
    statements: &str,
    oracle_cap: usize,
    jobs: usize,
    json: bool,
    out: Option<&std::path::Path>,
    max_order: usize,
) -> Result<u8, CliError> {
    let statements = parse_statement_set(statements).map_err(CliError::Usage)?;
    let mut extra = Vec::new();
    for path in catalogs {
        extra.extend(smallclass_cli::catalog::load_catalog(path, max_order)?);
    }
    let config = ScanConfig::new(
        builtin_max_order,
        catalogs.iter().map(|p| p.display().to_string()).collect(),
        statements,
        oracle_cap,
        max_order,
    );
    let report = if jobs == 0 {
        scan(&config, extra)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot build a {jobs}-thread pool: {e}")))?;
        pool.install(|| scan(&config, extra))
    };
    let rendered = if json { render_json(&report) } else { render_text(&report) };
    match out {
        Some(path) => std::fs::write(path, rendered).map_err(|source| CliError::Out {
            path: path.to_path_buf(),
            source,
        })?,
        None => print!("{rendered}"),
    }
    Ok(if report.has_counterexample() { 2 } else { 0 })
}
