//! Exhaustive cross-validation over all small connected graphs.
//!
//! Every graph is run through the stability decision, the brute-force
//! distance check, the forbidden-subgraph search and the pruning sequence;
//! the four must agree and the attached certificate must check.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dh::{
    find_forbidden_induced_subgraph, is_distance_hereditary_bruteforce, pruning_sequence,
    ForbiddenKind, PruningOutcome,
};
use crate::graph::{render_graph, Graph, GraphFormat};
use crate::par::{self, Execution};
use crate::stability::{check_refutation, decide_stability, Evidence, StabilityError};

/// Largest order the census accepts.
pub const CENSUS_MAX_N: usize = 7;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("census limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("graph {graph6}: {source}")]
    Analysis {
        graph6: String,
        source: StabilityError,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOptions {
    /// Keep one representative per isomorphism class.
    pub canonical: bool,
    pub execution: Execution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub stable: bool,
    pub distance_hereditary: bool,
    pub forbidden: Option<ForbiddenKind>,
    pub prunable: bool,
    pub certificate_checked: bool,
}

impl CensusRow {
    pub fn agrees(&self) -> bool {
        self.stable == self.distance_hereditary
            && self.stable == self.forbidden.is_none()
            && self.stable == self.prunable
            && self.certificate_checked
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub n: usize,
    pub graphs: usize,
    pub stable: usize,
    pub distance_hereditary: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub max_n: usize,
    pub canonical: bool,
    pub sizes: Vec<SizeSummary>,
    pub disagreements: usize,
    pub rows: Vec<CensusRow>,
}

/// All connected graphs on exactly `n` vertices, labeled, in order of their
/// edge bitmask over pairs `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn connected_graphs(n: usize, canonical: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total)
        .filter(|&mask| !canonical || canonical_code(n, mask, &pairs) == mask)
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).expect("valid pairs");
            g.is_connected().unwrap_or(false).then_some(g)
        })
        .collect()
}

/// Smallest bitmask among all relabelings of the graph with bitmask `mask`.
fn canonical_code(n: usize, mask: u64, pairs: &[(usize, usize)]) -> u64 {
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        index[a][b] = k;
        index[b][a] = k;
    }
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = mask;
    // Heap's algorithm over all permutations.
    let mut c = vec![0usize; n];
    let code = |perm: &[usize]| {
        edges
            .iter()
            .fold(0u64, |m, &(a, b)| m | 1 << index[perm[a]][perm[b]])
    };
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code(&perm));
            if best < mask {
                return best;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn analyse(g: &Graph) -> Result<CensusRow, CensusError> {
    let graph6 = render_graph(g, GraphFormat::Graph6).trim_end().to_string();
    let wrap = |source: StabilityError| CensusError::Analysis {
        graph6: graph6.clone(),
        source,
    };
    let verdict = decide_stability(g).map_err(wrap)?;
    let distance_hereditary = is_distance_hereditary_bruteforce(g).map_err(|e| wrap(e.into()))?;
    let forbidden = find_forbidden_induced_subgraph(g).map(|w| w.kind);
    let prunable = matches!(
        pruning_sequence(g).map_err(|e| wrap(e.into()))?,
        PruningOutcome::Sequence(_)
    );
    let certificate_checked = match &verdict.evidence {
        Evidence::Factorization {
            expansion_checked, ..
        } => *expansion_checked,
        Evidence::Refutation { certificate, .. } => {
            check_refutation(g, certificate).map_err(|e| wrap(e.into()))?
        }
    };
    Ok(CensusRow {
        graph6: graph6.clone(),
        n: g.n(),
        edges: g.edge_count(),
        stable: verdict.stable,
        distance_hereditary,
        forbidden,
        prunable,
        certificate_checked,
    })
}

/// Runs every connected graph on `2..=max_n` vertices through all checks.
pub fn census(max_n: usize, options: CensusOptions) -> Result<CensusReport, CensusError> {
    if max_n > CENSUS_MAX_N {
        return Err(CensusError::TooLarge {
            n: max_n,
            max: CENSUS_MAX_N,
        });
    }
    let mut sizes = Vec::new();
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let graphs = connected_graphs(n, options.canonical);
        let results = par::map(options.execution, &graphs, analyse);
        let batch: Vec<CensusRow> = results.into_iter().collect::<Result<_, _>>()?;
        sizes.push(SizeSummary {
            n,
            graphs: batch.len(),
            stable: batch.iter().filter(|r| r.stable).count(),
            distance_hereditary: batch.iter().filter(|r| r.distance_hereditary).count(),
            disagreements: batch.iter().filter(|r| !r.agrees()).count(),
        });
        rows.extend(batch);
    }
    Ok(CensusReport {
        max_n,
        canonical: options.canonical,
        disagreements: sizes.iter().map(|s| s.disagreements).sum(),
        sizes,
        rows,
    })
}
