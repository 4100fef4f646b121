//! `schurpos`: expand, multiply, dualize and certify symmetric polynomials
//! in the Schur basis, and verify the bundled Thom-polynomial corpus.
//!
//! Exit codes: 0 success, 1 failed check (NOT_POSITIVE, UNSTABLE, corpus
//! failure), 2 usage or input error.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schurpos::{
    check_suspension_stability, expand_to_schur, load_corpus, parse_expr, schur_multiply,
    verify_corpus, Partition, SchurExpansion, EMBEDDED_CORPUS,
};

#[derive(Parser)]
#[command(name = "schurpos", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression in S-atoms into the Schur basis.
    Expand {
        expr: String,
        /// Drop partitions outside the (m,n) hook, as `m,n`.
        #[arg(long, value_parser = parse_ranks)]
        ranks: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide numerical positivity; exits 1 when not positive.
    Certify {
        expr: String,
        /// Ignore partitions with more than this many parts.
        #[arg(long)]
        rank_bound: Option<usize>,
    },
    /// Apply the duality involution (conjugate every partition).
    Dualize { expr: String },
    /// Multiply two expressions and expand the product.
    Multiply { left: String, right: String },
    /// Check a corpus file (default: the embedded corpus); exits 1 on any
    /// failed check.
    Verify {
        corpus_file: Option<String>,
        /// Worker threads for per-record checks; output is identical for
        /// every value.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check suspension stability of one Schur function at given ranks.
    Stability {
        partition: String,
        #[arg(long, value_parser = parse_ranks)]
        ranks: (usize, usize),
    },
}

fn parse_ranks(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `m,n`, got `{s}`"))?;
    let m = m.trim().parse().map_err(|_| format!("bad rank `{m}`"))?;
    let n = n.trim().parse().map_err(|_| format!("bad rank `{n}`"))?;
    Ok((m, n))
}

fn usage_err(e: impl Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn expand_input(expr: &str, ranks: Option<(usize, usize)>) -> Result<SchurExpansion, schurpos::Error> {
    let parsed = parse_expr(expr)?;
    if let (None, Some(e)) = (ranks, parsed.as_linear_schur()) {
        return Ok(e);
    }
    let seg = parsed.to_seg_polynomial()?;
    expand_to_schur(&seg, ranks)
}

fn print_expansion(e: &SchurExpansion, format: Format) {
    match format {
        Format::Text => println!("{e}"),
        Format::Machine => {
            // same dominance-descending order as the text form
            let terms: Vec<_> = e.iter().collect();
            for (part, coeff) in terms.into_iter().rev() {
                println!("{part}\t{coeff}");
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Expand { expr, ranks, format } => {
            let expansion = match parse_expr(&expr).and_then(|p| p.to_seg_polynomial()) {
                Ok(seg) => match expand_to_schur(&seg, ranks) {
                    Ok(e) => e,
                    Err(e) => return usage_err(e),
                },
                Err(e) => return usage_err(e),
            };
            print_expansion(&expansion, format);
            ExitCode::SUCCESS
        }
        Command::Certify { expr, rank_bound } => {
            let expansion = match expand_input(&expr, None) {
                Ok(e) => e,
                Err(e) => return usage_err(e),
            };
            let verdict = schurpos::certify_expansion(&expansion, rank_bound);
            println!("{verdict}");
            if verdict.is_positive() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Dualize { expr } => {
            let expansion = match expand_input(&expr, None) {
                Ok(e) => e,
                Err(e) => return usage_err(e),
            };
            println!("{}", schurpos::dualize(&expansion));
            ExitCode::SUCCESS
        }
        Command::Multiply { left, right } => {
            let (a, b) = match (expand_input(&left, None), expand_input(&right, None)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_err(e),
            };
            println!("{}", schur_multiply(&a, &b));
            ExitCode::SUCCESS
        }
        Command::Verify { corpus_file, jobs } => {
            let owned;
            let text = match &corpus_file {
                Some(path) => match std::fs::read_to_string(path) {
                    Ok(t) => {
                        owned = t;
                        owned.as_str()
                    }
                    Err(e) => return usage_err(format!("{path}: {e}")),
                },
                None => EMBEDDED_CORPUS,
            };
            let (records, notes) = match load_corpus(text) {
                Ok(r) => r,
                Err(e) => return usage_err(e),
            };
            for note in &notes {
                eprintln!("note: {note}");
            }
            let report = verify_corpus(&records, jobs);
            print!("{}", report.machine_format());
            ExitCode::from(report.exit_status() as u8)
        }
        Command::Stability { partition, ranks } => {
            let part = match Partition::parse(&partition) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            let (m, n) = ranks;
            if check_suspension_stability(&part, m, n) {
                println!("STABLE {} ranks=({m},{n})", part.bracket());
                ExitCode::SUCCESS
            } else {
                println!("UNSTABLE {} ranks=({m},{n})", part.bracket());
                ExitCode::from(1)
            }
        }
    }
}
