//! Spanning trees and the tree enumerator polynomials.
//!
//! * vertex polynomial: `sum_T prod_v x_v^(deg_T(v) - 1)`
//! * edge polynomial: `sum_T prod_{e in T} y_e`, one variable per edge in
//!   canonical edge order
//! * weighted vertex polynomial: vertex polynomial with each tree scaled by
//!   the product of its edge weights
//!
//! Tree counts come independently from the Laplacian cofactor, computed by
//! fraction-free elimination.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::poly::MultiPoly;
use crate::rational::Rational;

/// Enumeration is refused above this many trees unless overridden.
pub const DEFAULT_TREE_GUARD: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_TREE_GUARD`].
pub const TREE_GUARD_ENV: &str = "TREESTAB_GUARD_TREES";

/// The enumeration limit in effect: the environment override when it parses,
/// else the default.
pub fn tree_guard() -> u64 {
    std::env::var(TREE_GUARD_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_TREE_GUARD)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanningError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {count} spanning trees, above the enumeration limit {limit}; use the determinant count instead")]
    TooManyTrees { count: BigInt, limit: u64 },
    #[error("edge {0}-{1} has no weight")]
    MissingWeight(Vertex, Vertex),
    #[error("edge {0}-{1} has zero weight")]
    ZeroWeight(Vertex, Vertex),
    #[error("weight given for {0}-{1}, which is not an edge")]
    UnknownEdge(Vertex, Vertex),
    #[error("edge set is not a spanning tree")]
    NotATree,
}

/// Edge set of a spanning tree, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    edges: Vec<(Vertex, Vertex)>,
}

impl SpanningTree {
    /// Checks that `edges` are `n - 1` edges of `g` forming a tree.
    pub fn new(g: &Graph, edges: Vec<(Vertex, Vertex)>) -> Result<Self, SpanningError> {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        if g.n() == 0 || edges.len() + 1 != g.n() {
            return Err(SpanningError::NotATree);
        }
        let mut uf = UnionFind::new(g.n());
        for &(a, b) in &edges {
            if !g.has_edge(a, b) || !uf.union(a, b) {
                return Err(SpanningError::NotATree);
            }
        }
        Ok(SpanningTree { edges })
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self, n: usize) -> Vec<u32> {
        let mut deg = vec![0u32; n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }
}

/// Nonzero rational weight on every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeights(BTreeMap<(Vertex, Vertex), Rational>);

impl EdgeWeights {
    pub fn new<I>(g: &Graph, weights: I) -> Result<Self, SpanningError>
    where
        I: IntoIterator<Item = ((Vertex, Vertex), Rational)>,
    {
        let mut map = BTreeMap::new();
        for ((a, b), w) in weights {
            let key = (a.min(b), a.max(b));
            if !g.has_edge(a, b) {
                return Err(SpanningError::UnknownEdge(key.0, key.1));
            }
            if w.is_zero() {
                return Err(SpanningError::ZeroWeight(key.0, key.1));
            }
            map.insert(key, w);
        }
        if let Some(&(a, b)) = g.edges().iter().find(|e| !map.contains_key(e)) {
            return Err(SpanningError::MissingWeight(a, b));
        }
        Ok(EdgeWeights(map))
    }

    /// Every edge weighted `w`.
    pub fn uniform(g: &Graph, w: Rational) -> Result<Self, SpanningError> {
        Self::new(g, g.edges().iter().map(|&e| (e, w.clone())))
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> Option<&Rational> {
        self.0.get(&(a.min(b), a.max(b)))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Vertex, Vertex), &Rational)> + '_ {
        self.0.iter().map(|(&e, w)| (e, w))
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    /// (attached root, new parent root) per successful union, for undo.
    history: Vec<(usize, usize)>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push((rb, ra));
        true
    }

    fn undo(&mut self) {
        let (child, root) = self.history.pop().expect("nothing to undo");
        self.parent[child] = child;
        self.size[root] -= self.size[child];
    }
}

#[derive(Debug, Clone, Copy)]
enum Frame {
    Enter(usize),
    Included,
    TryExclude(usize),
}

/// Spanning trees of a connected graph, each exactly once, in lexicographic
/// order of their sorted edge lists.
///
/// Depth-first include/exclude over the canonical edge order; a branch is
/// entered only if it can still reach a spanning tree.
pub struct SpanningTrees {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    uf: UnionFind,
    chosen: Vec<usize>,
    stack: Vec<Frame>,
}

impl SpanningTrees {
    fn new(g: &Graph) -> Self {
        SpanningTrees {
            n: g.n(),
            edges: g.edges().to_vec(),
            uf: UnionFind::new(g.n()),
            chosen: Vec::new(),
            stack: vec![Frame::Enter(0)],
        }
    }

    /// Whether the chosen edges plus the edges after `pos` connect everything.
    fn can_span_without(&self, pos: usize) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut parts = self.n;
        for &i in self.chosen.iter() {
            let (a, b) = self.edges[i];
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        for &(a, b) in &self.edges[pos + 1..] {
            if uf.union(a, b) {
                parts -= 1;
                if parts == 1 {
                    break;
                }
            }
        }
        parts == 1
    }
}

impl Iterator for SpanningTrees {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        while let Some(frame) = self.stack.pop() {
            match frame {
                Frame::Enter(pos) => {
                    let need = self.n - 1 - self.chosen.len();
                    if need == 0 {
                        return Some(SpanningTree {
                            edges: self.chosen.iter().map(|&i| self.edges[i]).collect(),
                        });
                    }
                    if self.edges.len() - pos < need {
                        continue;
                    }
                    let (a, b) = self.edges[pos];
                    self.stack.push(Frame::TryExclude(pos));
                    if self.uf.union(a, b) {
                        self.chosen.push(pos);
                        self.stack.push(Frame::Included);
                        self.stack.push(Frame::Enter(pos + 1));
                    }
                }
                Frame::Included => {
                    self.chosen.pop();
                    self.uf.undo();
                }
                Frame::TryExclude(pos) => {
                    if self.can_span_without(pos) {
                        self.stack.push(Frame::Enter(pos + 1));
                    }
                }
            }
        }
        None
    }
}

/// Streams the spanning trees of `g` under the default guard.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<SpanningTrees, SpanningError> {
    enumerate_spanning_trees_limited(g, tree_guard())
}

/// Streams the spanning trees of `g`, refusing if there are more than `limit`.
pub fn enumerate_spanning_trees_limited(
    g: &Graph,
    limit: u64,
) -> Result<SpanningTrees, SpanningError> {
    let count = matrix_tree_count(g)?;
    if count > BigInt::from(limit) {
        return Err(SpanningError::TooManyTrees { count, limit });
    }
    Ok(SpanningTrees::new(g))
}

/// Number of spanning trees as a Laplacian cofactor (Bareiss elimination).
pub fn matrix_tree_count(g: &Graph) -> Result<BigInt, SpanningError> {
    g.require_connected()?;
    let m = g.n() - 1;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        BigInt::from(g.degree(i))
                    } else if g.has_edge(i, j) {
                        -BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_determinant(&mut a))
}

/// Determinant of an integer matrix by fraction-free elimination. Every
/// division is exact.
pub fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Vertex spanning polynomial under the default guard. `1` for `n <= 2`.
pub fn vertex_spanning_polynomial(g: &Graph) -> Result<MultiPoly, SpanningError> {
    vertex_spanning_polynomial_limited(g, tree_guard())
}

pub fn vertex_spanning_polynomial_limited(
    g: &Graph,
    limit: u64,
) -> Result<MultiPoly, SpanningError> {
    let n = g.n();
    if n == 1 {
        g.require_connected()?;
        return Ok(MultiPoly::one(1));
    }
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for tree in enumerate_spanning_trees_limited(g, limit)? {
        let exps = tree.degrees(n).into_iter().map(|d| d - 1).collect();
        *counts.entry(exps).or_default() += 1;
    }
    Ok(MultiPoly::from_terms(
        n,
        counts
            .into_iter()
            .map(|(e, c)| (e, Rational::from_integer(c.into()))),
    ))
}

/// Edge spanning polynomial; variable `j` is edge `g.edges()[j]`.
pub fn edge_spanning_polynomial(g: &Graph) -> Result<MultiPoly, SpanningError> {
    edge_spanning_polynomial_limited(g, tree_guard())
}

pub fn edge_spanning_polynomial_limited(g: &Graph, limit: u64) -> Result<MultiPoly, SpanningError> {
    let k = g.edge_count();
    let terms = enumerate_spanning_trees_limited(g, limit)?.map(|tree| {
        let mut e = vec![0u32; k];
        for &(a, b) in tree.edges() {
            e[g.edge_index(a, b).expect("tree edge in graph")] = 1;
        }
        (e, Rational::one())
    });
    Ok(MultiPoly::from_terms(k, terms))
}

/// Weighted vertex spanning polynomial.
pub fn weighted_vertex_spanning_polynomial(
    g: &Graph,
    w: &EdgeWeights,
) -> Result<MultiPoly, SpanningError> {
    weighted_vertex_spanning_polynomial_limited(g, w, tree_guard())
}

pub fn weighted_vertex_spanning_polynomial_limited(
    g: &Graph,
    w: &EdgeWeights,
    limit: u64,
) -> Result<MultiPoly, SpanningError> {
    // Revalidate: the weights may have been built for a different graph.
    let w = EdgeWeights::new(g, w.iter().map(|(e, x)| (e, x.clone())))?;
    let n = g.n();
    if n == 1 {
        g.require_connected()?;
        return Ok(MultiPoly::one(1));
    }
    let terms = enumerate_spanning_trees_limited(g, limit)?.map(|tree| {
        let exps = tree.degrees(n).into_iter().map(|d| d - 1).collect();
        let weight: Rational = tree
            .edges()
            .iter()
            .map(|&(a, b)| w.get(a, b).expect("validated weights").clone())
            .product();
        (exps, weight)
    });
    Ok(MultiPoly::from_terms(n, terms))
}

/// Tree count as a `u64` when it fits.
pub fn tree_count_u64(g: &Graph) -> Result<Option<u64>, SpanningError> {
    Ok(matrix_tree_count(g)?.to_u64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::int;

    fn p(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_spanning_trees(&families::complete(3))
                .unwrap()
                .count(),
            3
        );
        assert_eq!(
            enumerate_spanning_trees(&families::complete(4))
                .unwrap()
                .count(),
            16
        );
        let c5: Vec<_> = enumerate_spanning_trees(&families::cycle(5))
            .unwrap()
            .collect();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|t| t.edges().len() == 4));
        assert_eq!(
            enumerate_spanning_trees(&Graph::empty(1)).unwrap().count(),
            1
        );
    }

    #[test]
    fn enumeration_is_lexicographic_and_unique() {
        let trees: Vec<_> = enumerate_spanning_trees(&families::complete(5))
            .unwrap()
            .collect();
        assert_eq!(trees.len(), 125);
        assert!(trees.windows(2).all(|w| w[0].edges() < w[1].edges()));
        let g = families::complete(5);
        for t in &trees {
            assert!(SpanningTree::new(&g, t.edges().to_vec()).is_ok());
        }
    }

    #[test]
    fn disconnected_and_guarded() {
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            matrix_tree_count(&two).unwrap_err(),
            SpanningError::Graph(GraphError::Disconnected)
        );
        assert!(matches!(
            vertex_spanning_polynomial(&two),
            Err(SpanningError::Graph(_))
        ));
        let err = enumerate_spanning_trees_limited(&families::complete(5), 100)
            .err()
            .unwrap();
        assert_eq!(
            err,
            SpanningError::TooManyTrees {
                count: 125.into(),
                limit: 100
            }
        );
    }

    #[test]
    fn matrix_tree_examples() {
        assert_eq!(
            matrix_tree_count(&families::complete(5)).unwrap(),
            BigInt::from(125)
        );
        assert_eq!(
            matrix_tree_count(&families::path(6)).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            matrix_tree_count(&families::star(4)).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            matrix_tree_count(&families::cycle(6)).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(matrix_tree_count(&Graph::empty(1)).unwrap(), BigInt::one());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let mut a = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(bareiss_determinant(&mut a), BigInt::from(-1));
    }

    #[test]
    fn tree_validation() {
        let g = families::cycle(4);
        assert!(SpanningTree::new(&g, vec![(0, 1), (1, 2), (2, 3)]).is_ok());
        assert_eq!(
            SpanningTree::new(&g, vec![(0, 1), (1, 2)]),
            Err(SpanningError::NotATree)
        );
        assert_eq!(
            SpanningTree::new(&g, vec![(0, 1), (1, 2), (0, 2)]),
            Err(SpanningError::NotATree)
        );
    }

    #[test]
    fn vertex_polynomial_examples() {
        assert_eq!(
            vertex_spanning_polynomial(&families::complete(3)).unwrap(),
            p("x0 + x1 + x2", 3)
        );
        assert_eq!(
            vertex_spanning_polynomial(&families::cycle(5)).unwrap(),
            p("x0*x1*x2 + x1*x2*x3 + x2*x3*x4 + x3*x4*x0 + x4*x0*x1", 5)
        );
        assert_eq!(
            vertex_spanning_polynomial(&families::complete(2)).unwrap(),
            MultiPoly::one(2)
        );
        assert_eq!(
            vertex_spanning_polynomial(&Graph::empty(1)).unwrap(),
            MultiPoly::one(1)
        );
        // Star: one tree, center degree 3.
        assert_eq!(
            vertex_spanning_polynomial(&families::star(3)).unwrap(),
            p("x0^2", 4)
        );
    }

    #[test]
    fn edge_polynomial_examples() {
        // K_3 edges in order: 01, 02, 12.
        assert_eq!(
            edge_spanning_polynomial(&families::complete(3)).unwrap(),
            p("x0*x1 + x0*x2 + x1*x2", 3)
        );
        assert_eq!(
            edge_spanning_polynomial(&families::path(4)).unwrap(),
            p("x0*x1*x2", 3)
        );
        let c4 = edge_spanning_polynomial(&families::cycle(4)).unwrap();
        assert_eq!(c4.len(), 4);
        assert!(c4.is_multilinear());
        assert!(c4.terms().all(|(e, _)| e.iter().sum::<u32>() == 3));
    }

    #[test]
    fn weighted_examples() {
        let k3 = families::complete(3);
        let ones = EdgeWeights::uniform(&k3, int(1)).unwrap();
        assert_eq!(
            weighted_vertex_spanning_polynomial(&k3, &ones).unwrap(),
            vertex_spanning_polynomial(&k3).unwrap()
        );
        // Tree omitting 12 has center 0 and weight 2*3; omitting 02 has
        // center 1 and weight 2*5; omitting 01 has center 2 and weight 3*5.
        let w =
            EdgeWeights::new(&k3, [((0, 1), int(2)), ((0, 2), int(3)), ((1, 2), int(5))]).unwrap();
        assert_eq!(
            weighted_vertex_spanning_polynomial(&k3, &w).unwrap(),
            p("6*x0 + 10*x1 + 15*x2", 3)
        );

        let path = families::path(4);
        let w = EdgeWeights::new(
            &path,
            [((0, 1), int(2)), ((1, 2), int(-3)), ((2, 3), int(7))],
        )
        .unwrap();
        assert_eq!(
            weighted_vertex_spanning_polynomial(&path, &w).unwrap(),
            p("-42*x1*x2", 4)
        );
    }

    #[test]
    fn weight_validation() {
        let k3 = families::complete(3);
        assert_eq!(
            EdgeWeights::new(&k3, [((0, 1), int(1)), ((0, 2), int(1))]).unwrap_err(),
            SpanningError::MissingWeight(1, 2)
        );
        assert_eq!(
            EdgeWeights::new(&k3, [((1, 0), int(0))]).unwrap_err(),
            SpanningError::ZeroWeight(0, 1)
        );
        let p3 = families::path(3);
        assert_eq!(
            EdgeWeights::new(&p3, [((0, 2), int(1))]).unwrap_err(),
            SpanningError::UnknownEdge(0, 2)
        );
    }
}
