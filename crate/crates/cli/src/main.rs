mod commands;
mod error;
mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::input::GraphSource;

#[derive(Debug, Parser)]
#[command(
    name = "treestab",
    version,
    about = "Spanning-tree polynomials and their real stability"
)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Spanning-tree enumeration guard (overrides TREESTAB_GUARD_TREES).
    #[arg(long, global = true)]
    max_trees: Option<u64>,
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex spanning polynomial P_G.
    Poly {
        #[command(flatten)]
        input: GraphSource,
        /// Print the product-of-sums form (distance-hereditary graphs only).
        #[arg(long)]
        factored: bool,
    },
    /// Edge spanning polynomial Q_G, one variable per edge.
    Edgepoly {
        #[command(flatten)]
        input: GraphSource,
    },
    /// Weighted vertex spanning polynomial P_{G,w} and the sign check.
    Wpoly {
        #[command(flatten)]
        input: GraphSource,
        /// File with one `u v weight` line per edge.
        #[arg(long)]
        weights: PathBuf,
    },
    /// Spanning-tree count, optionally with every tree.
    Trees {
        #[command(flatten)]
        input: GraphSource,
        #[arg(long)]
        list: bool,
    },
    /// Distance-hereditary recognition.
    Dh {
        #[command(flatten)]
        input: GraphSource,
    },
    /// Real-stability verdict with certificate.
    Stability {
        #[command(flatten)]
        input: GraphSource,
    },
    /// Validate a certificate or verdict document against a graph.
    CheckCert {
        #[command(flatten)]
        input: GraphSource,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Newton polytope of P_G and its saturation.
    Newton {
        #[command(flatten)]
        input: GraphSource,
        /// Identify variables first: comma-separated new index per vertex.
        #[arg(long, value_delimiter = ',')]
        identify: Option<Vec<usize>>,
    },
    /// Saturation of every variable identification of P_G.
    Weakstable {
        #[command(flatten)]
        input: GraphSource,
        /// Only identifications into at most this many variables.
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        sequential: bool,
    },
    /// Print a named graph, or `random N`, as edge-list text.
    Family {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        /// Emit graph6 instead of an edge list.
        #[arg(long)]
        graph6: bool,
        /// Extra-edge probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Cross-check every connected graph on up to N vertices.
    Census {
        n: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        canonical: bool,
        /// Include one row per graph.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        sequential: bool,
    },
}

/// What a command produced: both renderings and the exit code.
pub struct Report {
    pub human: String,
    pub json: serde_json::Value,
    pub code: u8,
}

impl Report {
    pub fn ok(human: String, json: serde_json::Value) -> Self {
        Report {
            human,
            json,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(limit) = cli.max_trees {
        // Library entry points that take no explicit limit read the env var.
        std::env::set_var(treestab::spanning::TREE_GUARD_ENV, limit.to_string());
    }
    let ctx = commands::Context {
        seed: cli.seed,
        limit: treestab::spanning::tree_guard(),
    };
    let result = match cli.command {
        Command::Poly { input, factored } => commands::poly(&ctx, &input, factored),
        Command::Edgepoly { input } => commands::edgepoly(&ctx, &input),
        Command::Wpoly { input, weights } => commands::wpoly(&ctx, &input, &weights),
        Command::Trees { input, list } => commands::trees(&ctx, &input, list),
        Command::Dh { input } => commands::dh(&input),
        Command::Stability { input } => commands::stability(&input),
        Command::CheckCert { input, cert } => commands::check_cert(&ctx, &input, &cert),
        Command::Newton { input, identify } => commands::newton(&ctx, &input, identify.as_deref()),
        Command::Weakstable {
            input,
            max_parts,
            sequential,
        } => commands::weakstable(&input, max_parts, sequential),
        Command::Family { spec, graph6, p } => commands::family(&ctx, &spec, graph6, p),
        Command::Census {
            n,
            canonical,
            list,
            sequential,
        } => commands::census(n, canonical, list, sequential),
    };
    match result {
        Ok(report) => {
            match cli.format {
                OutputFormat::Human => print!("{}", report.human),
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.json).expect("json values serialize")
                    )
                }
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("treestab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
