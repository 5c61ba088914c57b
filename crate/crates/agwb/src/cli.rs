//! Command-line front end: check/ideals/enumerate/verify/canon workflows
//! over table files and generated model streams.
//!
//! Text output is human-first; `--json` is the machine contract. Exit
//! codes: 0 success (for `verify`: all statements VERIFIED or SKIPPED),
//! 1 usage or input error, 2 verify found a counterexample.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::enumerate::{self, Filter};
use crate::ideals;
use crate::magma::{self, CayleyTable, PropertyProfile};
use crate::verify::{self, StopMode, SuiteReport, Verdict};

/// Workbench for finite LA-semigroups (Abel-Grassmann groupoids).
#[derive(Debug, Parser)]
#[command(name = "agwb", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms and properties of a table file.
    Check(CheckArgs),
    /// Classify every ideal of a table file.
    Ideals(IdealsArgs),
    /// Enumerate LA-semigroups of a given order.
    Enumerate(EnumerateArgs),
    /// Run the statement catalogue against enumerated models.
    Verify(VerifyArgs),
    /// Print the canonical form of a table file.
    Canon(CanonArgs),
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Table file to analyze.
    file: PathBuf,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IdealsArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
    /// Analyze even if the table is not an LA-semigroup.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    /// Order of the tables to enumerate.
    #[arg(long)]
    order: usize,
    /// Keep only canonical representatives of isomorphism classes.
    #[arg(long)]
    up_to_iso: bool,
    /// Property filter (repeatable): left-identity, regular, right-invertible.
    #[arg(long = "filter")]
    filters: Vec<String>,
    /// Print a JSON count summary instead of tables.
    #[arg(long, conflicts_with = "emit")]
    count_only: bool,
    /// Stream every table in the file format, with a profile comment.
    #[arg(long)]
    emit: bool,
    /// Worker threads (also via AGWB_JOBS); never affects output content.
    #[arg(long, env = "AGWB_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Largest model order to check.
    #[arg(long)]
    max_order: usize,
    /// Comma-separated statement ids to run (default: all).
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Keep scanning after the first counterexample of each statement.
    #[arg(long)]
    collect_all: bool,
    #[arg(long)]
    json: bool,
    /// Worker threads (also via AGWB_JOBS); never affects output content.
    #[arg(long, env = "AGWB_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CanonArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses argv and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exit codes.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Check(args) => cmd_check(args),
        Command::Ideals(args) => cmd_ideals(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Canon(args) => cmd_canon(args),
    }
}

fn load_table(path: &PathBuf) -> Result<CayleyTable, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    magma::parse_table(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{content}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_element(e: Option<usize>) -> String {
    match e {
        Some(e) => e.to_string(),
        None => "none".to_string(),
    }
}

fn profile_text(t: &CayleyTable, p: &PropertyProfile) -> String {
    let mut s = String::new();
    s.push_str(&format!("order: {}\n", t.order()));
    match magma::left_invertive_violation(t) {
        None => s.push_str("left invertive (LA): yes\n"),
        Some((a, b, c)) => s.push_str(&format!(
            "left invertive (LA): no, violated at ({a}, {b}, {c}): ({a}·{b})·{c} = {} but ({c}·{b})·{a} = {}\n",
            t.product(t.product(a, b), c),
            t.product(t.product(c, b), a),
        )),
    }
    match magma::medial_violation(t) {
        None => s.push_str("medial: yes\n"),
        Some((a, b, c, d)) => {
            s.push_str(&format!("medial: no, violated at ({a}, {b}, {c}, {d})\n"))
        }
    }
    s.push_str(&format!("left identity: {}\n", opt_element(p.left_identity)));
    s.push_str(&format!("right identity: {}\n", opt_element(p.right_identity)));
    match magma::commutativity_violation(t) {
        None => s.push_str("commutative: yes\n"),
        Some((a, b)) => s.push_str(&format!(
            "commutative: no, {a}·{b} = {} but {b}·{a} = {}\n",
            t.product(a, b),
            t.product(b, a)
        )),
    }
    match magma::associativity_violation(t) {
        None => s.push_str("associative: yes\n"),
        Some((a, b, c)) => s.push_str(&format!("associative: no, violated at ({a}, {b}, {c})\n")),
    }
    match magma::regularity_witnesses(t) {
        Ok(w) => s.push_str(&format!(
            "regular: yes, witnesses {}\n",
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        )),
        Err(a) => s.push_str(&format!("regular: no, element {a} has no witness\n")),
    }
    s.push_str(&format!("inverse LA-semigroup: {}\n", flag(p.is_inverse_la)));
    s.push_str(&format!("right invertible: {}\n", flag(p.is_right_invertible)));
    s
}

fn cmd_check(args: CheckArgs) -> Result<i32, String> {
    let t = load_table(&args.file)?;
    let profile = PropertyProfile::of(&t);
    let content = if args.json {
        let report = serde_json::json!({
            "order": t.order(),
            "profile": profile,
            "witnesses": {
                "la_violation": magma::left_invertive_violation(&t),
                "medial_violation": magma::medial_violation(&t),
                "associativity_violation": magma::associativity_violation(&t),
                "commutativity_violation": magma::commutativity_violation(&t),
                "regularity": match magma::regularity_witnesses(&t) {
                    Ok(w) => serde_json::json!({"witnesses": w}),
                    Err(a) => serde_json::json!({"witnessless": a}),
                },
            },
        });
        format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
    } else {
        profile_text(&t, &profile)
    };
    write_output(&args.out, &content)?;
    Ok(0)
}

fn cmd_ideals(args: IdealsArgs) -> Result<i32, String> {
    let t = load_table(&args.file)?;
    if let Some((a, b, c)) = magma::left_invertive_violation(&t) {
        if !args.force {
            return Err(format!(
                "{} is not an LA-semigroup (left invertive law fails at ({a}, {b}, {c})); \
                 pass --force to analyze anyway",
                args.file.display()
            ));
        }
    }
    let report = ideals::analyze(&t);
    let content = if args.json {
        format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
    } else {
        let mut s = String::new();
        if !report.profile.is_la {
            s.push_str("warning: not an LA-semigroup (analysis forced)\n");
        }
        s.push_str(&format!(
            "order: {}\nideals ({} total, including one-sided):\n",
            report.order,
            report.ideals.len()
        ));
        for rec in &report.ideals {
            let members = rec
                .members
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let mut tags = Vec::new();
            for (on, tag) in [
                (rec.left, "left"),
                (rec.right, "right"),
                (rec.two_sided, "two-sided"),
                (rec.proper, "proper"),
                (rec.prime, "prime"),
                (rec.semiprime, "semiprime"),
                (rec.strongly_irreducible, "strongly-irreducible"),
                (rec.quasi_prime, "quasi-prime"),
                (rec.quasi_semiprime, "quasi-semiprime"),
                (rec.minimal, "minimal"),
                (rec.idempotent, "idempotent"),
            ] {
                if on {
                    tags.push(tag);
                }
            }
            s.push_str(&format!("  {{{members}}}: {}\n", tags.join(" ")));
        }
        s.push_str(&format!("totally ordered: {}\n", flag(report.totally_ordered)));
        s.push_str(&format!("semilattice under A·B: {}\n", flag(report.semilattice)));
        s
    };
    write_output(&args.out, &content)?;
    Ok(0)
}

fn parse_filters(names: &[String]) -> Result<Vec<Filter>, String> {
    names
        .iter()
        .map(|name| {
            Filter::parse(name).ok_or_else(|| {
                format!(
                    "unknown filter `{name}`; valid filters: {}",
                    Filter::ALL.map(|f| f.name()).join(", ")
                )
            })
        })
        .collect()
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32, String> {
    let filters = parse_filters(&args.filters)?;
    if !args.count_only && !args.emit {
        return Err("choose one of --count-only or --emit".to_string());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| e.to_string())?;
    if args.count_only {
        let summary = pool
            .install(|| enumerate::count_la(args.order, &filters, args.up_to_iso))
            .map_err(|e| e.to_string())?;
        let content =
            format!("{}\n", serde_json::to_string_pretty(&summary).expect("serializable"));
        write_output(&args.out, &content)?;
        return Ok(0);
    }
    let tables = pool
        .install(|| enumerate::enumerate_la_parallel(args.order, &filters, args.up_to_iso))
        .map_err(|e| e.to_string())?;
    let mut content = String::new();
    for t in &tables {
        let p = PropertyProfile::of(t);
        content.push_str(&format!(
            "# order={} la={} medial={} left_identity={} right_identity={} commutative={} \
             associative={} regular={} inverse_la={} right_invertible={}\n",
            t.order(),
            p.is_la,
            p.is_medial,
            opt_element(p.left_identity),
            opt_element(p.right_identity),
            p.is_commutative,
            p.is_associative,
            p.is_regular,
            p.is_inverse_la,
            p.is_right_invertible,
        ));
        content.push_str(&t.to_file_string());
        content.push('\n');
    }
    write_output(&args.out, &content)?;
    Ok(0)
}

fn suite_text(report: &SuiteReport) -> String {
    let mut s = String::new();
    s.push_str(&format!("statement catalogue, orders 1..={}\n", report.max_order));
    for st in &report.statements {
        let verdict = match st.verdict {
            Verdict::Verified => format!("VERIFIED({})", st.verified_to.unwrap_or(0)),
            Verdict::Counterexample => "COUNTEREXAMPLE".to_string(),
            Verdict::Skipped => "SKIPPED".to_string(),
        };
        s.push_str(&format!(
            "{:<16} {:<22} scope: {:<16} models: {}\n",
            verdict, st.id, st.scope, st.models_checked
        ));
        if let Some(note) = &st.note {
            s.push_str(&format!("                 note: {note}\n"));
        }
        if let Some(ce) = &st.counterexample {
            s.push_str(&format!("                 model (order {}):\n", ce.order));
            for line in ce.table.lines() {
                s.push_str(&format!("                   {line}\n"));
            }
            let witness = serde_json::to_string(&ce.witness).expect("serializable");
            s.push_str(&format!("                 witness: {witness}\n"));
        }
    }
    s.push_str(&format!(
        "totals: {} verified, {} counterexamples, {} skipped\n",
        report.totals.verified, report.totals.counterexamples, report.totals.skipped
    ));
    s
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, String> {
    let only: Option<&[String]> = if args.only.is_empty() { None } else { Some(&args.only) };
    let mode = if args.collect_all { StopMode::CollectAll } else { StopMode::FirstFailure };
    let report = verify::run_suite(args.max_order, only, mode, args.jobs)
        .map_err(|e| e.to_string())?;
    let content = if args.json {
        format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
    } else {
        suite_text(&report)
    };
    write_output(&args.out, &content)?;
    Ok(if report.any_counterexample() { 2 } else { 0 })
}

fn cmd_canon(args: CanonArgs) -> Result<i32, String> {
    let t = load_table(&args.file)?;
    let (canon, perm) = enumerate::canonicalize_with_permutation(&t);
    let content = if args.json {
        let report = serde_json::json!({
            "order": t.order(),
            "table": canon.as_table().to_file_string(),
            "permutation": perm,
        });
        format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
    } else {
        canon.as_table().to_file_string()
    };
    write_output(&args.out, &content)?;
    Ok(0)
}
