//! Search for the forbidden induced subgraphs of distance-hereditary graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::families;
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenKind {
    LongCycle,
    Gem,
    House,
    Domino,
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenKind::LongCycle => "long_cycle",
            ForbiddenKind::Gem => "gem",
            ForbiddenKind::House => "house",
            ForbiddenKind::Domino => "domino",
        })
    }
}

/// An induced copy of a forbidden pattern.
///
/// `vertices[k]` is the graph vertex playing pattern vertex `k`: cycle order
/// for long cycles, the figure labeling (0-based) for gem, house and domino.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: Vec<Vertex>,
}

impl ForbiddenWitness {
    /// The pattern graph in its own labeling, `None` for an impossible size.
    pub fn pattern(&self) -> Option<Graph> {
        let k = self.vertices.len();
        match self.kind {
            ForbiddenKind::LongCycle if k >= 5 => Some(families::cycle(k)),
            ForbiddenKind::Gem if k == 5 => Some(families::gem()),
            ForbiddenKind::House if k == 5 => Some(families::house()),
            ForbiddenKind::Domino if k == 6 => Some(families::domino()),
            _ => None,
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// True when the recorded labeling is an isomorphism from the pattern onto
    /// the subgraph of `g` induced by `vertices`.
    pub fn validate(&self, g: &Graph) -> bool {
        let Some(pattern) = self.pattern() else {
            return false;
        };
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) || self.vertex_set().len() != vs.len() {
            return false;
        }
        (0..vs.len())
            .all(|i| (i + 1..vs.len()).all(|j| pattern.has_edge(i, j) == g.has_edge(vs[i], vs[j])))
    }
}

/// Finds an induced hole of length at least 5 (shortest first), else a gem or
/// house on 5 vertices, else a domino. `None` exactly when `g` is
/// distance-hereditary.
///
/// Exhaustive; intended for desk-scale graphs.
pub fn find_forbidden_induced_subgraph(g: &Graph) -> Option<ForbiddenWitness> {
    for k in 5..=g.n() {
        if let Some(cycle) = induced_cycle(g, k) {
            return Some(ForbiddenWitness {
                kind: ForbiddenKind::LongCycle,
                vertices: cycle,
            });
        }
    }
    let five = [
        (ForbiddenKind::Gem, families::gem()),
        (ForbiddenKind::House, families::house()),
    ];
    if let Some(w) = search_patterns(g, 5, &five) {
        return Some(w);
    }
    search_patterns(g, 6, &[(ForbiddenKind::Domino, families::domino())])
}

/// An induced cycle on exactly `k` vertices, listed in cycle order starting
/// from its smallest vertex.
fn induced_cycle(g: &Graph, k: usize) -> Option<Vec<Vertex>> {
    fn extend(g: &Graph, k: usize, path: &mut Vec<Vertex>) -> bool {
        let j = path.len();
        let start = path[0];
        let last = path[j - 1];
        for &w in g.neighbors(last) {
            if w <= start || path.contains(&w) {
                continue;
            }
            // No chords back into the path, apart from closing the cycle.
            if path.iter().take(j - 1).skip(1).any(|&p| g.has_edge(w, p)) {
                continue;
            }
            let closes = g.has_edge(w, start);
            if j >= 2 && closes != (j == k - 1) {
                continue;
            }
            path.push(w);
            if j == k - 1 || extend(g, k, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    for s in g.vertices() {
        let mut path = vec![s];
        if extend(g, k, &mut path) {
            return Some(path);
        }
    }
    None
}

fn search_patterns(
    g: &Graph,
    k: usize,
    patterns: &[(ForbiddenKind, Graph)],
) -> Option<ForbiddenWitness> {
    let n = g.n();
    if n < k {
        return None;
    }
    let mut subset: Vec<Vertex> = (0..k).collect();
    loop {
        let edges = subset
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                subset[i + 1..]
                    .iter()
                    .filter(|&&b| g.has_edge(a, b))
                    .count()
            })
            .sum::<usize>();
        for (kind, pattern) in patterns {
            if edges == pattern.edge_count() {
                if let Some(labeling) = find_labeling(g, &subset, pattern) {
                    return Some(ForbiddenWitness {
                        kind: *kind,
                        vertices: labeling,
                    });
                }
            }
        }
        // Next combination in lexicographic order.
        let i = (0..k).rev().find(|&i| subset[i] < n - k + i)?;
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Lexicographically first assignment of `subset` vertices to pattern
/// positions that is an induced isomorphism.
fn find_labeling(g: &Graph, subset: &[Vertex], pattern: &Graph) -> Option<Vec<Vertex>> {
    fn assign(
        g: &Graph,
        subset: &[Vertex],
        pattern: &Graph,
        used: &mut [bool],
        out: &mut Vec<Vertex>,
    ) -> bool {
        let pos = out.len();
        if pos == subset.len() {
            return true;
        }
        for (idx, &v) in subset.iter().enumerate() {
            if used[idx] || g.degree_within(v, subset) != pattern.degree(pos) {
                continue;
            }
            if (0..pos).all(|q| pattern.has_edge(q, pos) == g.has_edge(out[q], v)) {
                used[idx] = true;
                out.push(v);
                if assign(g, subset, pattern, used, out) {
                    return true;
                }
                out.pop();
                used[idx] = false;
            }
        }
        false
    }

    let mut used = vec![false; subset.len()];
    let mut out = Vec::with_capacity(subset.len());
    assign(g, subset, pattern, &mut used, &mut out).then_some(out)
}

impl Graph {
    fn degree_within(&self, v: Vertex, subset: &[Vertex]) -> usize {
        subset.iter().filter(|&&w| self.has_edge(v, w)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dh::is_distance_hereditary_bruteforce;

    #[test]
    fn long_cycle_witness() {
        let w = find_forbidden_induced_subgraph(&families::cycle(7)).unwrap();
        assert_eq!(w.kind, ForbiddenKind::LongCycle);
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(w.validate(&families::cycle(7)));
    }

    #[test]
    fn shortest_hole_wins() {
        // C_6 plus a chord 0-3 leaves two 4-cycles: no hole. Chord 0-2 leaves
        // a hole 0,2,3,4,5.
        let mut edges: Vec<_> = families::cycle(6).edges().to_vec();
        edges.push((0, 2));
        let g = Graph::from_edges(6, edges).unwrap();
        let w = find_forbidden_induced_subgraph(&g).unwrap();
        assert_eq!(w.kind, ForbiddenKind::LongCycle);
        assert_eq!(w.vertex_set(), VertexSet::new(vec![0, 2, 3, 4, 5]));
        assert!(w.validate(&g));
    }

    #[test]
    fn figure_patterns_find_themselves_with_identity_labeling() {
        for (g, kind) in [
            (families::gem(), ForbiddenKind::Gem),
            (families::house(), ForbiddenKind::House),
            (families::domino(), ForbiddenKind::Domino),
        ] {
            let w = find_forbidden_induced_subgraph(&g).unwrap();
            assert_eq!(w.kind, kind);
            assert!(w.validate(&g));
        }
    }

    #[test]
    fn gem_with_pendant() {
        let mut edges = families::gem().edges().to_vec();
        edges.push((4, 5));
        let g = Graph::from_edges(6, edges).unwrap();
        assert!(!is_distance_hereditary_bruteforce(&g).unwrap());
        let w = find_forbidden_induced_subgraph(&g).unwrap();
        assert_eq!(w.kind, ForbiddenKind::Gem);
        assert_eq!(w.vertex_set(), VertexSet::new(vec![0, 1, 2, 3, 4]));
        assert!(w.validate(&g));
    }

    #[test]
    fn distance_hereditary_graphs_have_no_witness() {
        assert_eq!(
            find_forbidden_induced_subgraph(&families::complete(4)),
            None
        );
        assert_eq!(find_forbidden_induced_subgraph(&families::cycle(4)), None);
        assert_eq!(
            find_forbidden_induced_subgraph(&families::complete_bipartite(3, 3)),
            None
        );
    }

    #[test]
    fn validation_rejects_wrong_labelings() {
        let g = families::house();
        let bad = ForbiddenWitness {
            kind: ForbiddenKind::House,
            vertices: vec![1, 0, 2, 3, 4],
        };
        assert!(!bad.validate(&g));
        let short = ForbiddenWitness {
            kind: ForbiddenKind::LongCycle,
            vertices: vec![0, 1, 2, 3],
        };
        assert!(!short.validate(&families::cycle(4)));
        let repeated = ForbiddenWitness {
            kind: ForbiddenKind::Gem,
            vertices: vec![0, 0, 1, 2, 3],
        };
        assert!(!repeated.validate(&families::gem()));
    }
}
