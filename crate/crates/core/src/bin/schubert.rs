//! Command-line front end. Exit codes: 0 success, 1 counterexample or
//! disagreement, 2 usage or input error, 3 resource cap exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use schubert_core::perm::{for_each_avoider, rank_bound_patterns, DEFAULT_ENUMERATION_CAP};
use schubert_core::poly::{antidiagonal_order, antidiagonal_transpose_order};
use schubert_core::regularity::{DEFAULT_EDGE_CAP, DEFAULT_GENERATOR_CAP};
use schubert_core::report::{self, SCHEMA};
use schubert_core::verify::{verify, Theorem, VerifyOptions, DEFAULT_MAX_N};
use schubert_core::{parse_permutation, Error, Partition, Permutation, TermOrder};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Schubert determinantal ideals, Gröbner bases and regularity")]
struct Cli {
    #[command(flatten)]
    output: Output,
    /// Antidiagonal term order.
    #[arg(long, global = true, value_enum, default_value_t = OrderName::Antidiag)]
    order: OrderName,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Emit the human-readable layout (default).
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderName {
    Antidiag,
    AntidiagTranspose,
}

impl OrderName {
    fn order(self, n: usize) -> TermOrder {
        match self {
            OrderName::Antidiag => antidiagonal_order(n),
            OrderName::AntidiagTranspose => antidiagonal_transpose_order(n),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Diagram, essential set, Fulton generators and elusive minors.
    Ideal { w: String },
    /// The elusive-minor basis, or the reduced basis.
    Groebner {
        w: String,
        #[arg(long)]
        reduced: bool,
    },
    /// Vexillary and binomial classifiers, essential rank and parts.
    Classify { w: String },
    /// Regularity of a binomial permutation or a partition shape.
    Regularity {
        #[arg(required_unless_present = "partition", conflicts_with = "partition")]
        w: Option<String>,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        edge_cap: usize,
        /// Generator budget of the Betti oracle.
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        generator_cap: usize,
    },
    /// Exhaustive theorem sweep.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        n: Option<usize>,
        /// Worker threads.
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        edge_cap: usize,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Count, and optionally list, pattern avoiders in S_n.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Patterns to avoid; defaults to 1243 and 2143.
        #[arg(long = "pattern")]
        patterns: Vec<String>,
        #[arg(long)]
        list: bool,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse()
}

enum Failure {
    Input(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

/// `SCHUBERT_MAX_N` when set, else the given default.
fn max_n(default: usize) -> Result<usize, Error> {
    match std::env::var("SCHUBERT_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| Error::InvalidPermutation(format!("SCHUBERT_MAX_N={v:?} is not a number"))),
        Err(_) => Ok(default),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, pretty: impl FnOnce(&T) -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", pretty(value));
    }
}

fn perm(text: &str) -> Result<Permutation, Error> {
    parse_permutation(text)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.output.json;
    match cli.command {
        Command::Ideal { w } => {
            let w = perm(&w)?;
            let r = report::ideal_report(&w, &cli.order.order(w.size()));
            emit(json, &r, report::render_ideal);
        }
        Command::Groebner { w, reduced } => {
            let w = perm(&w)?;
            let r = report::basis_report(&w, &cli.order.order(w.size()), reduced);
            emit(json, &r, report::render_basis);
        }
        Command::Classify { w } => {
            let r = report::classify_report(&perm(&w)?);
            emit(json, &r, report::render_classify);
        }
        Command::Regularity { w, partition, edge_cap, generator_cap } => {
            let agree = match (w, partition) {
                (_, Some(p)) => {
                    let lambda: Partition = p.parse()?;
                    if lambda.is_empty() {
                        return Err(Error::EmptyInput.into());
                    }
                    let r = report::shape_regularity(&lambda, edge_cap)?;
                    emit(json, &r, report::render_shape_regularity);
                    r.agree
                }
                (Some(w), None) => {
                    let w = perm(&w)?;
                    let r = report::permutation_regularity(&w, &cli.order.order(w.size()), edge_cap, generator_cap)?;
                    emit(json, &r, report::render_permutation_regularity);
                    r.agree
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            if !agree {
                return Err(Failure::Check("regularity routes disagree".into()));
            }
        }
        Command::Verify { theorem, n, parallel, seed, edge_cap, timing } => {
            let mut opts = VerifyOptions::new(theorem);
            opts.n = n.unwrap_or(opts.n);
            opts.max_n = max_n(DEFAULT_MAX_N)?;
            opts.parallel = parallel;
            opts.seed = seed;
            opts.edge_cap = edge_cap;
            opts.timing = timing;
            let r = verify(theorem, &opts)?;
            emit(json, &r, |r| {
                let mut out = format!(
                    "{}: {} checked, {} counterexamples: {}\n",
                    r.theorem,
                    r.checked,
                    r.counterexamples.len(),
                    if r.pass { "PASS" } else { "FAIL" }
                );
                for c in &r.counterexamples {
                    out.push_str(&format!("  {}: {}\n", c.item, c.detail));
                }
                for (k, v) in &r.summary {
                    out.push_str(&format!("  {k}: {v}\n"));
                }
                if let Some(ms) = r.wall_time_ms {
                    out.push_str(&format!("  wall time: {ms} ms\n"));
                }
                out
            });
            if !r.pass {
                return Err(Failure::Check(format!("{} counterexamples", r.counterexamples.len())));
            }
        }
        Command::Enumerate { n, patterns, list } => {
            let patterns: Vec<Permutation> = if patterns.is_empty() {
                rank_bound_patterns(2)
            } else {
                patterns.iter().map(|p| perm(p)).collect::<Result<_, _>>()?
            };
            let mut avoiders = Vec::new();
            let mut count = 0u64;
            for_each_avoider(n, &patterns, max_n(DEFAULT_ENUMERATION_CAP)?, |w| {
                count += 1;
                if list {
                    avoiders.push(w.to_string());
                }
            })?;
            let names: Vec<String> = patterns.iter().map(|p| p.to_string()).collect();
            let mut doc = json!({"schema": SCHEMA, "n": n, "patterns": names, "count": count});
            if list {
                doc["avoiders"] = json!(avoiders);
            }
            emit(json, &doc, |_| {
                let mut out = format!("{count} permutations of S_{n} avoid {}\n", names.join(" and "));
                for a in &avoiders {
                    out.push_str(a);
                    out.push('\n');
                }
                out
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("schubert: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("schubert: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
    }
}
