//! Command-line surface: generate, verify, table, search. The binary in
//! `src/main.rs` is a thin wrapper over [`run`]; everything here is
//! ordinary library code so the commands are scriptable and testable.
//!
//! Exit codes: 0 success/accepted, 1 rejected/infeasible/inconclusive,
//! 2 malformed input or usage. Summary lines go to stdout, reports and
//! diagnostics to stderr.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::assemble::{assemble_hw, assignment_plan, feasible_r};
use crate::cert::{parse_document, Certificate, Document};
use crate::error::Error;
use crate::search::{
    open21_search, resolvable_sts_search, starter_c7_search, tripartite_even_probe, Budget,
    SearchConfig, SearchOutcome,
};
use crate::verify::{verify, verify_kts};

#[derive(Parser)]
#[command(
    name = "hw37",
    about = "2-factorizations of K_n into triangle-factors and heptagon-factors",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build HW(n; r, s; 3, 7) and write the certificate.
    Generate(GenerateArgs),
    /// Check a certificate or KTS file; exit 0 accepted, 1 rejected, 2 malformed.
    Verify(VerifyArgs),
    /// List feasible r values for an order, with the per-r parameter split.
    Table(TableArgs),
    /// Run a seeded, budgeted ingredient search.
    Search(SearchArgs),
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Order of the complete graph (must be ≡ 21 mod 42).
    #[arg(long)]
    pub n: usize,
    /// Number of triangle-factors.
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; without it the certificate goes to stdout and the
    /// summary line moves to stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Certificate or KTS JSON file.
    pub input: PathBuf,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args)]
pub struct SearchArgs {
    pub target: SearchTarget,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Budget in seconds, converted to a deterministic node cap.
    #[arg(long, conflicts_with = "nodes")]
    pub budget: Option<u64>,
    /// Direct node cap (overrides --budget).
    #[arg(long)]
    pub nodes: Option<u64>,
    /// KTS order (search kts).
    #[arg(long)]
    pub v: Option<usize>,
    /// Triangle-factor count (search open21).
    #[arg(long)]
    pub r: Option<usize>,
    /// Triangle-factor count (search tripartite-even).
    #[arg(long)]
    pub alpha: Option<usize>,
    /// Result file; the sidecar lands next to it as <out>.sidecar.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchTarget {
    /// Cyclic starter for the all-heptagon tripartite factorization.
    StarterC7,
    /// Resolvable Steiner triple system of a given order.
    Kts,
    /// The open cases HW(21; r, 10-r; 3, 7), r in {2,4,6}.
    Open21,
    /// Even triangle-factor counts for K_{7,7,7}.
    TripartiteEven,
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Generate(args) => cmd_generate(&args),
        Command::Verify(args) => cmd_verify(&args.input),
        Command::Table(args) => cmd_table(args.n),
        Command::Search(args) => cmd_search(&args),
    }
}

fn cmd_generate(args: &GenerateArgs) -> i32 {
    let fac = match assemble_hw(args.n, args.r) {
        Ok(fac) => fac,
        Err(e) => {
            eprintln!("generate: {e}");
            return match e {
                Error::Io(_) => 2,
                _ => 1,
            };
        }
    };
    let cert = Certificate::from_factorization(&fac);
    let body = match args.format {
        Format::Json => cert.to_json(),
        Format::Text => cert.to_text(),
    };
    let summary = format!(
        "HW({};{},{};3,7) OK r={} s={} factors={} edges={}",
        fac.n(),
        fac.r(),
        fac.s(),
        fac.r(),
        fac.s(),
        fac.factors().len(),
        fac.n() * (fac.n() - 1) / 2
    );
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("generate: writing {}: {e}", path.display());
                return 2;
            }
            println!("{summary}");
        }
        None => {
            print!("{body}");
            eprintln!("{summary}");
        }
    }
    0
}

fn cmd_verify(input: &Path) -> i32 {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("verify: reading {}: {e}", input.display());
            return 2;
        }
    };
    let doc = match parse_document(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("verify: {e}");
            return 2;
        }
    };
    let (label, report) = match doc {
        Document::Certificate(cert) => (
            format!("HW({};{},{};3,7)", cert.n, cert.r, cert.s),
            verify(&cert, cert.n, cert.r, cert.s),
        ),
        Document::Kts(doc) => (format!("KTS({})", doc.v), verify_kts(&doc)),
    };
    if report.accepted() {
        println!("{label} accepted");
        0
    } else {
        eprintln!("{label} {report}");
        1
    }
}

fn cmd_table(n: usize) -> i32 {
    let feasible = feasible_r(n);
    if feasible.is_empty() {
        println!("n={n}: no feasible r (need n ≡ 21 mod 42, n odd)");
        return 0;
    }
    if n == 21 {
        println!("n=21: r from the K_21 catalog; r in {{2,4,6}} is open");
        for r in feasible {
            println!("r={r} a={} b={} gamma={r} (K_21 catalog)", r / 7, r % 7);
        }
        return 0;
    }
    println!(
        "n={n} t={}: r in 0..={}, r = 7a + b",
        (n - 21) / 42,
        (n - 1) / 2
    );
    for r in feasible {
        match assignment_plan(n, r) {
            Ok(plan) => println!("{plan}"),
            Err(e) => {
                eprintln!("table: r={r}: {e}");
                return 1;
            }
        }
    }
    0
}

fn search_budget(args: &SearchArgs) -> Budget {
    if let Some(nodes) = args.nodes {
        Budget::Nodes(nodes)
    } else {
        Budget::Seconds(args.budget.unwrap_or(60))
    }
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".sidecar.json");
    out.with_file_name(name)
}

/// Writes the result body (when present) and the sidecar, then prints the
/// one-line summary. Returns the exit code.
fn finish_search<T>(
    target: &str,
    outcome: &SearchOutcome<T>,
    body: Option<String>,
    out: Option<&Path>,
) -> i32 {
    let summary = format!(
        "search {target}: {} seed={} nodes={}/{}",
        outcome.outcome_label(),
        outcome.seed,
        outcome.nodes_expanded,
        outcome.node_cap
    );
    match out {
        Some(path) => {
            if let Some(body) = body {
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("search: writing {}: {e}", path.display());
                    return 2;
                }
            }
            let sidecar = sidecar_path(path);
            if let Err(e) = std::fs::write(&sidecar, outcome.sidecar_json()) {
                eprintln!("search: writing {}: {e}", sidecar.display());
                return 2;
            }
        }
        None => {
            if body.is_some() {
                eprintln!("search: no --out given; the certificate was not saved");
            }
            eprint!("{}", outcome.sidecar_json());
        }
    }
    println!("{summary}");
    if outcome.result.is_some() {
        0
    } else {
        1
    }
}

fn cmd_search(args: &SearchArgs) -> i32 {
    let cfg = SearchConfig::new(args.seed, search_budget(args));
    match args.target {
        SearchTarget::StarterC7 => {
            let outcome = starter_c7_search(&cfg);
            let body = outcome
                .result
                .as_ref()
                .map(crate::tripartite::starter_doc_json);
            finish_search("starter-c7", &outcome, body, args.out.as_deref())
        }
        SearchTarget::Kts => {
            let Some(v) = args.v else {
                eprintln!("search kts: --v is required");
                return 2;
            };
            let outcome = match resolvable_sts_search(v, &cfg) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("search kts: {e}");
                    return 2;
                }
            };
            let body = outcome.result.as_ref().map(|k| k.to_doc().to_json());
            finish_search("kts", &outcome, body, args.out.as_deref())
        }
        SearchTarget::Open21 => {
            let Some(r) = args.r else {
                eprintln!("search open21: --r is required");
                return 2;
            };
            let outcome = match open21_search(r, &cfg) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("search open21: {e}");
                    return 2;
                }
            };
            let body = outcome
                .result
                .as_ref()
                .map(|fac| Certificate::from_factorization(fac).to_json());
            finish_search("open21", &outcome, body, args.out.as_deref())
        }
        SearchTarget::TripartiteEven => {
            let Some(alpha) = args.alpha else {
                eprintln!("search tripartite-even: --alpha is required");
                return 2;
            };
            let outcome = match tripartite_even_probe(alpha, &cfg) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("search tripartite-even: {e}");
                    return 2;
                }
            };
            let body = outcome
                .result
                .as_ref()
                .map(|fac| Certificate::from_factorization(fac).to_json());
            finish_search("tripartite-even", &outcome, body, args.out.as_deref())
        }
    }
}
