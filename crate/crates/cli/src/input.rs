//! Graph and weight inputs: a file, an inline string, a family name or stdin.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use treestab::families::Family;
use treestab::graph::{parse_graph, Graph, GraphFormat, ParseError};
use treestab::rational::parse_rational;
use treestab::spanning::EdgeWeights;
use treestab::Rational;

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph file (edge list or graph6); stdin when absent or `-`.
    pub file: Option<PathBuf>,
    /// Graph text on the command line; `;` separates edge-list lines.
    #[arg(long, conflicts_with_all = ["file", "family"])]
    pub inline: Option<String>,
    /// Named family, e.g. "K 5", "K 2 3", "C 6", "path 4", "star 3", "gem".
    #[arg(long, conflicts_with = "file")]
    pub family: Option<String>,
    /// Input format; guessed from the first line by default.
    #[arg(long, value_name = "edge-list|graph6")]
    pub graph_format: Option<GraphFormat>,
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph, CliError> {
        if let Some(spec) = &self.family {
            let family: Family = spec.parse().map_err(CliError::Input)?;
            return Ok(family.build());
        }
        let (origin, text) = match (&self.inline, &self.file) {
            (Some(text), _) => ("<inline>".to_string(), text.replace(';', "\n")),
            (None, Some(path)) if path != Path::new("-") => {
                (path.display().to_string(), read_file(path)?)
            }
            _ => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| CliError::Input(format!("<stdin>: {e}")))?;
                ("<stdin>".to_string(), text)
            }
        };
        let format = self.graph_format.unwrap_or_else(|| detect_format(&text));
        parse_graph(&text, format)
            .map_err(|e: ParseError| CliError::Input(format!("{origin}: {e}")))
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// graph6 when the first meaningful line is a single token, else edge list.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.starts_with(">>graph6<<") || !line.contains(char::is_whitespace) => {
            GraphFormat::Graph6
        }
        _ => GraphFormat::EdgeList,
    }
}

/// `u v w` per line, `#` comments allowed; `w` an integer or fraction.
pub fn parse_weights(g: &Graph, path: &Path) -> Result<EdgeWeights, CliError> {
    let text = read_file(path)?;
    let mut entries: Vec<((usize, usize), Rational)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || {
            CliError::Input(format!(
                "{}:{}: expected `u v weight`, got `{line}`",
                path.display(),
                i + 1
            ))
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        let [u, v, w] = words.as_slice() else {
            return Err(bad());
        };
        let u: usize = u.parse().map_err(|_| bad())?;
        let v: usize = v.parse().map_err(|_| bad())?;
        let w = parse_rational(w).ok_or_else(bad)?;
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(CliError::Input(format!(
                "{}:{}: {u}-{v} is not an edge",
                path.display(),
                i + 1
            )));
        }
        entries.push(((u, v), w));
    }
    EdgeWeights::new(g, entries).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
