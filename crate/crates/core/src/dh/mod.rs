//! Distance-hereditary recognition, three ways:
//!
//! * [`pruning_sequence`]: strip pendant vertices and twins down to one edge;
//!   the reversed removals are a construction sequence from `K_2`.
//! * [`find_forbidden_induced_subgraph`]: look for an induced hole of length
//!   at least 5, a gem, a house or a domino.
//! * [`is_distance_hereditary_bruteforce`]: compare distances in every
//!   connected induced subgraph with those of the whole graph.

mod brute;
mod forbidden;

pub use brute::{is_distance_hereditary_bruteforce, BRUTE_FORCE_MAX_N};
pub use forbidden::{find_forbidden_induced_subgraph, ForbiddenKind, ForbiddenWitness};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DhError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("need at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("brute-force check limited to {max} vertices, got {n}")]
    SizeGuard { n: usize, max: usize },
    #[error("invalid construction sequence at step {step}: {reason}")]
    InvalidSequence { step: usize, reason: String },
    #[error("malformed sequence line {line}: {message}")]
    SequenceSyntax { line: usize, message: String },
}

/// One step of a construction from `K_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// The initial edge `u - v`.
    Start { u: Vertex, v: Vertex },
    /// New vertex joined only to `anchor`.
    AddPendant { new: Vertex, anchor: Vertex },
    /// Copy of `of` with the same neighbors, not joined to `of`.
    AddFalseTwin { new: Vertex, of: Vertex },
    /// Copy of `of` with the same neighbors, joined to `of`.
    AddTrueTwin { new: Vertex, of: Vertex },
}

/// Build script for a distance-hereditary graph. Vertex ids are those of
/// the target graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConstructionSequence {
    steps: Vec<Step>,
}

impl ConstructionSequence {
    /// Wraps steps without validating them; [`replay`] does that.
    pub fn new(steps: Vec<Step>) -> Self {
        ConstructionSequence { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of vertices the sequence introduces.
    pub fn vertex_count(&self) -> usize {
        self.steps
            .iter()
            .map(|s| {
                if matches!(s, Step::Start { .. }) {
                    2
                } else {
                    1
                }
            })
            .sum()
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("steps serialize") + "\n")
            .collect()
    }

    pub fn from_json_lines(text: &str) -> Result<Self, DhError> {
        let steps = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l).map_err(|e| DhError::SequenceSyntax {
                    line: i + 1,
                    message: e.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(ConstructionSequence { steps })
    }
}

/// Result of pruning: a construction sequence, or the vertices left when no
/// pendant or twin remained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PruningOutcome {
    Sequence(ConstructionSequence),
    Stuck { remaining: VertexSet },
}

impl PruningOutcome {
    pub fn sequence(&self) -> Option<&ConstructionSequence> {
        match self {
            PruningOutcome::Sequence(s) => Some(s),
            PruningOutcome::Stuck { .. } => None,
        }
    }
}

struct Pruner {
    adj: Vec<Vec<bool>>,
    alive: Vec<bool>,
}

impl Pruner {
    fn alive(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    fn open_eq(&self, a: Vertex, b: Vertex) -> bool {
        self.alive().all(|w| self.adj[a][w] == self.adj[b][w])
    }

    fn closed_eq(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a][b]
            && self
                .alive()
                .all(|w| w == a || w == b || self.adj[a][w] == self.adj[b][w])
    }

    fn next_step(&self) -> Option<Step> {
        for v in self.alive() {
            let mut nbrs = self.alive().filter(|&w| self.adj[v][w]);
            if let (Some(anchor), None) = (nbrs.next(), nbrs.next()) {
                return Some(Step::AddPendant { new: v, anchor });
            }
        }
        for v in self.alive() {
            if let Some(of) = self.alive().find(|&u| u != v && self.open_eq(u, v)) {
                return Some(Step::AddFalseTwin { new: v, of });
            }
        }
        for v in self.alive() {
            if let Some(of) = self.alive().find(|&u| u != v && self.closed_eq(u, v)) {
                return Some(Step::AddTrueTwin { new: v, of });
            }
        }
        None
    }
}

/// Prunes pendants, then false twins, then true twins (lowest index first)
/// until one edge remains.
pub fn pruning_sequence(g: &Graph) -> Result<PruningOutcome, DhError> {
    if g.n() < 2 {
        return Err(DhError::TooSmall(g.n()));
    }
    g.require_connected()?;
    let n = g.n();
    let mut pruner = Pruner {
        adj: (0..n)
            .map(|a| (0..n).map(|b| g.has_edge(a, b)).collect())
            .collect(),
        alive: vec![true; n],
    };
    let mut removed = Vec::new();
    let mut left = n;
    while left > 2 {
        let Some(step) = pruner.next_step() else {
            return Ok(PruningOutcome::Stuck {
                remaining: pruner.alive().collect(),
            });
        };
        let v = match step {
            Step::AddPendant { new, .. }
            | Step::AddFalseTwin { new, .. }
            | Step::AddTrueTwin { new, .. } => new,
            Step::Start { .. } => unreachable!(),
        };
        pruner.alive[v] = false;
        left -= 1;
        removed.push(step);
    }
    let pair: Vec<Vertex> = pruner.alive().collect();
    debug_assert!(
        g.has_edge(pair[0], pair[1]),
        "pruning keeps the graph connected"
    );
    let mut steps = vec![Step::Start {
        u: pair[0],
        v: pair[1],
    }];
    steps.extend(removed.into_iter().rev());
    Ok(PruningOutcome::Sequence(ConstructionSequence { steps }))
}

/// Incrementally replayed construction: neighborhoods as they stand after
/// each step.
pub(crate) struct ReplayState {
    pub(crate) adj: Vec<Vec<bool>>,
    present: Vec<bool>,
}

impl ReplayState {
    fn new(n: usize) -> Self {
        ReplayState {
            adj: vec![vec![false; n]; n],
            present: vec![false; n],
        }
    }

    /// Current neighbors of `v`.
    pub(crate) fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        (0..self.adj.len()).filter(|&w| self.adj[v][w]).collect()
    }

    fn join(&mut self, a: Vertex, b: Vertex) {
        self.adj[a][b] = true;
        self.adj[b][a] = true;
    }
}

/// Replays `seq`, calling `visit` with the state before each step is
/// applied. Checks structure along the way.
pub(crate) fn replay_with<F>(seq: &ConstructionSequence, mut visit: F) -> Result<Graph, DhError>
where
    F: FnMut(&ReplayState, &Step),
{
    let n = seq.vertex_count();
    let bad = |step: usize, reason: String| DhError::InvalidSequence { step, reason };
    let mut state = ReplayState::new(n);
    for (i, step) in seq.steps.iter().enumerate() {
        let fresh = |state: &ReplayState, v: Vertex| -> Result<(), DhError> {
            if v >= n {
                Err(bad(i, format!("vertex {v} outside 0..{n}")))
            } else if state.present[v] {
                Err(bad(i, format!("vertex {v} introduced twice")))
            } else {
                Ok(())
            }
        };
        let existing = |state: &ReplayState, v: Vertex| -> Result<(), DhError> {
            if v < n && state.present[v] {
                Ok(())
            } else {
                Err(bad(i, format!("vertex {v} does not exist yet")))
            }
        };
        match (i, *step) {
            (0, Step::Start { u, v }) => {
                fresh(&state, u)?;
                if u == v {
                    return Err(bad(i, "start edge is a loop".into()));
                }
                fresh(&state, v)?;
                visit(&state, step);
                state.present[u] = true;
                state.present[v] = true;
                state.join(u, v);
            }
            (0, _) => return Err(bad(0, "sequence must begin with start".into())),
            (_, Step::Start { .. }) => {
                return Err(bad(i, "start may only be the first step".into()))
            }
            (_, Step::AddPendant { new, anchor }) => {
                existing(&state, anchor)?;
                fresh(&state, new)?;
                visit(&state, step);
                state.present[new] = true;
                state.join(new, anchor);
            }
            (_, Step::AddFalseTwin { new, of } | Step::AddTrueTwin { new, of }) => {
                existing(&state, of)?;
                fresh(&state, new)?;
                visit(&state, step);
                for w in state.neighbors(of) {
                    state.join(new, w);
                }
                state.present[new] = true;
                if matches!(step, Step::AddTrueTwin { .. }) {
                    state.join(new, of);
                }
            }
        }
    }
    if seq.steps.is_empty() {
        return Err(bad(0, "empty sequence".into()));
    }
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Ok(Graph::from_edges(
        n,
        edges.filter(|&(a, b)| state.adj[a][b]),
    )?)
}

/// Builds the graph a construction sequence describes.
pub fn replay(seq: &ConstructionSequence) -> Result<Graph, DhError> {
    replay_with(seq, |_, _| {})
}
