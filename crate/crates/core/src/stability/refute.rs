//! Instability refutations: closure operations applied to `P_{G[U]}` that end
//! in an exact zero in the upper half-plane or a univariate polynomial with a
//! non-real root.

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dh::{ForbiddenKind, ForbiddenWitness};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::poly::{GaussianRational, MultiPoly, PolyError, RootVerdict};
use crate::rational::{int, serde_rational, Rational};
use crate::spanning::{vertex_spanning_polynomial, SpanningError};

/// Problems that make a certificate unreadable, as opposed to readable but
/// wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("witness does not match the graph")]
    InvalidWitness,
    #[error("empty subgraph")]
    EmptySubgraph,
    #[error("subgraph vertex {vertex} outside a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("subgraph {0} is not connected")]
    DisconnectedSubgraph(VertexSet),
    #[error("propagation claim does not match the subgraph size")]
    PropagationMismatch,
    #[error("op {step}: {source}")]
    BadOp { step: usize, source: PolyError },
    #[error("point has {found} coordinates, polynomial has {expected} variables")]
    PointLength { expected: usize, found: usize },
    #[error(transparent)]
    Spanning(#[from] SpanningError),
}

/// One stability-preserving transformation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum CertOp {
    SubstituteReal {
        var: usize,
        #[serde(with = "serde_rational")]
        value: Rational,
    },
    IdentifyVariables {
        map: Vec<usize>,
        count: usize,
    },
    ReverseVariable {
        var: usize,
    },
    PartialDerivative {
        var: usize,
    },
}

impl CertOp {
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, PolyError> {
        match self {
            CertOp::SubstituteReal { var, value } => p.substitute_real(*var, value),
            CertOp::IdentifyVariables { map, count } => p.identify_variables(map, *count),
            CertOp::ReverseVariable { var } => p.reverse_variable(*var),
            CertOp::PartialDerivative { var } => p.partial_derivative(*var),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Terminal {
    /// The reduced polynomial vanishes at a point with every coordinate in
    /// the open upper half-plane.
    ExactZero { point: Vec<GaussianRational> },
    /// The reduced polynomial is univariate and has a non-real root.
    NonRealRootedUnivariate,
}

/// How a refutation of `P_{G[U]}` bears on `P_G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Propagation {
    /// `U` is the whole vertex set.
    WholeGraph,
    /// Stability passes to connected induced subgraphs, so instability of
    /// `P_{G[U]}` implies instability of `P_G`.
    InducedSubgraph,
}

/// Ops index the variables of `P_{G[U]}` with `U` relabeled `0..|U|` in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationCertificate {
    pub subgraph: VertexSet,
    pub propagation: Propagation,
    pub ops: Vec<CertOp>,
    pub terminal: Terminal,
}

/// The canned reduction for the witness's pattern, in its recorded labeling.
pub fn build_refutation(
    g: &Graph,
    witness: &ForbiddenWitness,
) -> Result<RefutationCertificate, CertError> {
    if !witness.validate(g) {
        return Err(CertError::InvalidWitness);
    }
    let subgraph = witness.vertex_set();
    let m = subgraph.len();
    // Variable index of pattern vertex `k` (0-based figure label).
    let x = |k: usize| {
        subgraph
            .position(witness.vertices[k])
            .expect("witness vertex in its own set")
    };
    let set = |k: usize, v: i64| CertOp::SubstituteReal {
        var: x(k),
        value: int(v),
    };
    let collapse = CertOp::IdentifyVariables {
        map: vec![0; m],
        count: 1,
    };
    let i = GaussianRational::i;

    let (ops, terminal) = match witness.kind {
        ForbiddenKind::LongCycle if m == 5 => {
            // P(1, x2, -1, x4, x5) = x2 (x5 - x4 - 1).
            let mut point = vec![i(); m];
            point[x(4)] = GaussianRational::new(Rational::one(), Rational::one());
            (vec![set(0, 1), set(2, -1)], Terminal::ExactZero { point })
        }
        ForbiddenKind::LongCycle => {
            // Reversing every variable leaves +-(sum of x_k x_{k+1}); keeping
            // x1, x2, x4, x5 with x4 = x5 = 1 leaves +-(x1 x2 + 1).
            let mut ops: Vec<CertOp> = (0..m).map(|var| CertOp::ReverseVariable { var }).collect();
            ops.extend(
                (0..m)
                    .filter(|k| ![0, 1, 3, 4].contains(k))
                    .map(|k| set(k, 0)),
            );
            ops.push(set(3, 1));
            ops.push(set(4, 1));
            (
                ops,
                Terminal::ExactZero {
                    point: vec![i(); m],
                },
            )
        }
        // P(1, x, 1, x, 1) = x (2x^2 + 5x + 4).
        ForbiddenKind::House => (
            vec![set(0, 1), set(2, 1), set(4, 1), collapse],
            Terminal::NonRealRootedUnivariate,
        ),
        // P(x, -1, 1, 1, -1) = x (x^2 + 2x + 2).
        ForbiddenKind::Gem => (
            vec![set(1, -1), set(2, 1), set(3, 1), set(4, -1)],
            Terminal::NonRealRootedUnivariate,
        ),
        // P(x, 1, 1, x, 1, 1) = x (x + 2) (x^2 + 2x + 2).
        ForbiddenKind::Domino => (
            vec![set(1, 1), set(2, 1), set(4, 1), set(5, 1), collapse],
            Terminal::NonRealRootedUnivariate,
        ),
    };
    let propagation = if m == g.n() {
        Propagation::WholeGraph
    } else {
        Propagation::InducedSubgraph
    };
    Ok(RefutationCertificate {
        subgraph,
        propagation,
        ops,
        terminal,
    })
}

/// Replays a certificate against `g` from scratch.
///
/// `Ok(false)` means the certificate is well formed but does not refute
/// stability: an intermediate polynomial vanished, or the terminal condition
/// failed. Structural problems are errors.
pub fn check_refutation(g: &Graph, cert: &RefutationCertificate) -> Result<bool, CertError> {
    let sub = &cert.subgraph;
    if sub.is_empty() {
        return Err(CertError::EmptySubgraph);
    }
    if let Some(vertex) = sub.iter().find(|&v| v >= g.n()) {
        return Err(CertError::VertexOutOfRange { vertex, n: g.n() });
    }
    let whole = sub.len() == g.n();
    if whole != (cert.propagation == Propagation::WholeGraph) {
        return Err(CertError::PropagationMismatch);
    }
    let (h, _) = g.induced_subgraph(sub).expect("vertices checked");
    if !h.is_connected().expect("nonempty") {
        return Err(CertError::DisconnectedSubgraph(sub.clone()));
    }

    let mut p = vertex_spanning_polynomial(&h)?;
    for (step, op) in cert.ops.iter().enumerate() {
        p = op
            .apply(&p)
            .map_err(|source| CertError::BadOp { step, source })?;
        if p.is_zero() {
            return Ok(false);
        }
    }

    match &cert.terminal {
        Terminal::ExactZero { point } => {
            if point.len() != p.nvars() {
                return Err(CertError::PointLength {
                    expected: p.nvars(),
                    found: point.len(),
                });
            }
            if !point.iter().all(GaussianRational::in_upper_half_plane) {
                return Ok(false);
            }
            Ok(p.eval_gaussian(point).expect("length checked").is_zero())
        }
        Terminal::NonRealRootedUnivariate => match p.sturm_report() {
            Ok(report) => Ok(report.verdict() == RootVerdict::HasNonrealRoot),
            Err(PolyError::NotUnivariate) => Ok(false),
            Err(e) => Err(CertError::BadOp {
                step: cert.ops.len(),
                source: e,
            }),
        },
    }
}

impl RefutationCertificate {
    /// The polynomial left after replaying the ops, without any checks on
    /// the result.
    pub fn reduced(&self, g: &Graph) -> Result<MultiPoly, CertError> {
        if let Some(vertex) = self.subgraph.iter().find(|&v| v >= g.n()) {
            return Err(CertError::VertexOutOfRange { vertex, n: g.n() });
        }
        let (h, _) = g
            .induced_subgraph(&self.subgraph)
            .map_err(|_| CertError::EmptySubgraph)?;
        let mut p = vertex_spanning_polynomial(&h)?;
        for (step, op) in self.ops.iter().enumerate() {
            p = op
                .apply(&p)
                .map_err(|source| CertError::BadOp { step, source })?;
        }
        Ok(p)
    }
}
