//! Real stability of the vertex spanning polynomial.
//!
//! `P_G` is real stable exactly when `G` is distance-hereditary. Stable
//! graphs get a product-of-linear-forms factorization built from their
//! construction sequence; unstable ones get a refutation certificate that a
//! checker can replay with exact arithmetic.

mod refute;
mod weak;

pub use refute::{
    build_refutation, check_refutation, CertError, CertOp, Propagation, RefutationCertificate,
    Terminal,
};
pub use weak::{
    set_partitions, weak_stability_check, weak_stability_check_with, weighted_sign_check,
    WeakStability, WeightedSign, WEAK_STABILITY_MAX_N,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dh::{
    find_forbidden_induced_subgraph, pruning_sequence, replay_with, ConstructionSequence, DhError,
    ForbiddenWitness, PruningOutcome, Step,
};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::poly::MultiPoly;
use crate::spanning::{
    matrix_tree_count, tree_guard, vertex_spanning_polynomial_limited, SpanningError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dh(#[from] DhError),
    #[error(transparent)]
    Spanning(#[from] SpanningError),
    #[error(transparent)]
    Certificate(#[from] CertError),
    #[error("weak stability check limited to {max} vertices, got {n}")]
    WeakGuard { n: usize, max: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// `P_G` as a product of sums of variables, one factor per vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredForm {
    pub nvars: usize,
    pub factors: Vec<VertexSet>,
}

impl FactoredForm {
    pub fn expand(&self) -> MultiPoly {
        self.factors
            .iter()
            .fold(MultiPoly::one(self.nvars), |acc, s| {
                acc * MultiPoly::sum_of_vars(self.nvars, s.iter())
            })
    }

    /// Value at the all-ones point, i.e. the number of spanning trees.
    pub fn tree_count(&self) -> BigInt {
        self.factors.iter().map(|s| BigInt::from(s.len())).product()
    }
}

impl fmt::Display for FactoredForm {
    /// Equal factors are collected into powers, in order of first appearance.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let mut order: Vec<&VertexSet> = Vec::new();
        let mut counts: BTreeMap<&VertexSet, usize> = BTreeMap::new();
        for s in &self.factors {
            let c = counts.entry(s).or_insert(0);
            if *c == 0 {
                order.push(s);
            }
            *c += 1;
        }
        let parts: Vec<String> = order
            .into_iter()
            .map(|s| {
                let sum = s
                    .iter()
                    .map(|v| format!("x{v}"))
                    .collect::<Vec<_>>()
                    .join(" + ");
                let base = if s.len() == 1 {
                    sum
                } else {
                    format!("({sum})")
                };
                match counts[s] {
                    1 => base,
                    k => format!("{base}^{k}"),
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Product form of `P_G` for the graph a construction sequence builds.
pub fn factored_polynomial(seq: &ConstructionSequence) -> Result<FactoredForm, DhError> {
    let mut factors: Vec<VertexSet> = Vec::new();
    replay_with(seq, |state, step| match *step {
        Step::Start { .. } => {}
        Step::AddPendant { anchor, .. } => factors.push(VertexSet::new(vec![anchor])),
        Step::AddFalseTwin { new, of } | Step::AddTrueTwin { new, of } => {
            for s in factors.iter_mut().filter(|s| s.contains(of)) {
                s.insert(new);
            }
            let mut last = VertexSet::new(state.neighbors(of));
            if matches!(step, Step::AddTrueTwin { .. }) {
                last.insert(of);
                last.insert(new);
            }
            factors.push(last);
        }
    })?;
    Ok(FactoredForm {
        nvars: seq.vertex_count(),
        factors,
    })
}

/// Evidence backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Factorization {
        sequence: ConstructionSequence,
        factored: FactoredForm,
        /// The expansion was compared with the enumerated polynomial.
        expansion_checked: bool,
    },
    Refutation {
        witness: ForbiddenWitness,
        certificate: RefutationCertificate,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub evidence: Evidence,
}

impl StabilityVerdict {
    pub fn factored(&self) -> Option<&FactoredForm> {
        match &self.evidence {
            Evidence::Factorization { factored, .. } => Some(factored),
            Evidence::Refutation { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&RefutationCertificate> {
        match &self.evidence {
            Evidence::Refutation { certificate, .. } => Some(certificate),
            Evidence::Factorization { .. } => None,
        }
    }
}

/// Decides real stability of `P_G` and attaches checked evidence.
///
/// Stable verdicts carry the factorization, compared against the enumerated
/// polynomial whenever the tree count is within the enumeration guard.
/// Unstable verdicts carry a refutation that has already passed
/// [`check_refutation`].
pub fn decide_stability(g: &Graph) -> Result<StabilityVerdict, StabilityError> {
    match pruning_sequence(g)? {
        PruningOutcome::Sequence(sequence) => {
            let factored = factored_polynomial(&sequence)?;
            if factored.factors.len() != g.n() - 2 {
                return Err(StabilityError::Inconsistent(format!(
                    "{} factors for {} vertices",
                    factored.factors.len(),
                    g.n()
                )));
            }
            let guard = tree_guard();
            let count = matrix_tree_count(g)?;
            if factored.tree_count() != count {
                return Err(StabilityError::Inconsistent(
                    "factor sizes disagree with tree count".into(),
                ));
            }
            let expansion_checked = count <= BigInt::from(guard);
            if expansion_checked
                && factored.expand() != vertex_spanning_polynomial_limited(g, guard)?
            {
                return Err(StabilityError::Inconsistent(
                    "factorization does not expand to P_G".into(),
                ));
            }
            Ok(StabilityVerdict {
                stable: true,
                evidence: Evidence::Factorization {
                    sequence,
                    factored,
                    expansion_checked,
                },
            })
        }
        PruningOutcome::Stuck { remaining } => {
            let witness = find_forbidden_induced_subgraph(g).ok_or_else(|| {
                StabilityError::Inconsistent(format!(
                    "pruning stuck at {remaining} but no forbidden subgraph"
                ))
            })?;
            let certificate = build_refutation(g, &witness)?;
            if !check_refutation(g, &certificate)? {
                return Err(StabilityError::Inconsistent(
                    "built refutation does not check".into(),
                ));
            }
            Ok(StabilityVerdict {
                stable: false,
                evidence: Evidence::Refutation {
                    witness,
                    certificate,
                },
            })
        }
    }
}
