//! Simple undirected graphs on dense vertex ids `0..n`.

mod format;

pub use format::{parse_graph, render_graph, GraphFormat, ParseError, ParseErrorKind};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex id. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is disconnected")]
    Disconnected,
}

/// Sorted, deduplicated set of vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Position of `v` within the sorted members.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    pub fn insert(&mut self, v: Vertex) {
        if let Err(at) = self.0.binary_search(&v) {
            self.0.insert(at, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSet::new(v)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Finite simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, so
/// iteration order is canonical. Adjacency lists are kept sorted as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates (in either
    /// orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Induced subgraph on `u`, relabeled `0..|u|` in sorted order of `u`.
    ///
    /// The second component maps new ids back to the original ones.
    pub fn induced_subgraph(&self, u: &VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if u.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for v in u.iter() {
            self.check_vertex(v)?;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((u.position(a)?, u.position(b)?)));
        let sub = Graph::from_edges(u.len(), edges)?;
        Ok((sub, u.as_slice().to_vec()))
    }

    /// Graph with vertex `v` deleted; ids above `v` shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: VertexSet = self.vertices().filter(|&w| w != v).collect();
        if keep.is_empty() {
            return Ok(Graph::empty(0));
        }
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length");
        Graph::from_edges(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Result<Vec<VertexSet>, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        Ok(self.components()?.len() == 1)
    }

    pub(crate) fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected()? {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Articulation points via the lowlink computation (iterative DFS).
    pub fn cut_vertices(&self) -> Result<VertexSet, GraphError> {
        self.require_connected()?;
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(0, None, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        let mut root_children = 0;
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < self.adj[v].len() {
                top.2 += 1;
                let w = self.adj[v][idx];
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, Some(v), 0));
                } else if Some(w) != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        is_cut[0] = root_children > 1;
        Ok(self.vertices().filter(|&v| is_cut[v]).collect())
    }

    /// Unweighted shortest-path distances from `s`.
    pub fn bfs_distances(&self, s: Vertex) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(s)?;
        let dist = self.bfs_partial(s);
        if dist.iter().any(Option::is_none) {
            return Err(GraphError::Disconnected);
        }
        Ok(dist.into_iter().flatten().collect())
    }

    pub(crate) fn bfs_partial(&self, s: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_graph(self, GraphFormat::EdgeList))
    }
}

/// Wire form of a graph inside JSON documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            n: g.n,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphDoc> for Graph {
    type Error = GraphError;

    fn try_from(doc: GraphDoc) -> Result<Self, Self::Error> {
        Graph::from_edges(doc.n, doc.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute_cut_vertices(g: &Graph) -> VertexSet {
        g.vertices()
            .filter(|&v| {
                let h = g.remove_vertex(v).unwrap();
                h.n() > 0 && h.components().unwrap().len() > 1
            })
            .collect()
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        // House under the figure labeling: 4-cycle on labels 1,2,4,5.
        let house = families::house();
        let (sq, map) = house
            .induced_subgraph(&VertexSet::new(vec![0, 1, 3, 4]))
            .unwrap();
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(sq.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(sq.degree(0), 2);
        assert!((0..4).all(|v| sq.degree(v) == 2));

        let k4 = families::complete(4);
        let (k3, _) = k4.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(k3, families::complete(3));

        let all: VertexSet = house.vertices().collect();
        assert_eq!(house.induced_subgraph(&all).unwrap().0, house);

        assert_eq!(
            house.induced_subgraph(&VertexSet::default()).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn connectivity() {
        assert!(families::complete(3).is_connected().unwrap());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected().unwrap());
        assert_eq!(two.components().unwrap().len(), 2);
        assert!(Graph::empty(1).is_connected().unwrap());
        assert_eq!(Graph::empty(0).components(), Err(GraphError::Empty));
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(
            families::path(3).cut_vertices().unwrap(),
            VertexSet::new(vec![1])
        );
        assert!(families::cycle(4).cut_vertices().unwrap().is_empty());
        let bowtie =
            Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bowtie.cut_vertices().unwrap(), VertexSet::new(vec![2]));
        assert_eq!(brute_cut_vertices(&bowtie), VertexSet::new(vec![2]));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.cut_vertices(), Err(GraphError::Disconnected));
        assert!(Graph::empty(1).cut_vertices().unwrap().is_empty());
    }

    #[test]
    fn cut_vertices_match_brute_force_on_small_graphs() {
        for n in 1..=6 {
            let pairs: Vec<_> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap();
                if g.is_connected().unwrap() {
                    assert_eq!(g.cut_vertices().unwrap(), brute_cut_vertices(&g), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(
            families::cycle(6).bfs_distances(0).unwrap(),
            vec![0, 1, 2, 3, 2, 1]
        );
        assert_eq!(
            families::complete(5).bfs_distances(2).unwrap(),
            vec![1, 1, 0, 1, 1]
        );
        // House apex is label 3 (vertex 2); hand BFS: 2,4 at 1; 1,5 at 2.
        assert_eq!(
            families::house().bfs_distances(2).unwrap(),
            vec![2, 1, 0, 1, 2]
        );
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.bfs_distances(0), Err(GraphError::Disconnected));
    }
}
