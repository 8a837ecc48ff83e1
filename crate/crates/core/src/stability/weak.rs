//! Side analyses: saturation of every variable identification of `P_G`, and
//! the sign condition on edge weights.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::StabilityError;
use crate::graph::{Graph, Vertex};
use crate::par::{self, Execution};
use crate::poly::Saturation;
use crate::rational::{serde_rational, Rational};
use crate::spanning::{vertex_spanning_polynomial, EdgeWeights};

/// Largest vertex count for [`weak_stability_check`]; Bell(10) = 115975.
pub const WEAK_STABILITY_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum WeakStability {
    WeaklyStable {
        partitions_checked: usize,
    },
    /// `map[v]` is the new variable of vertex `v`.
    Counterexample {
        map: Vec<usize>,
        parts: usize,
        missing: Vec<Vec<u32>>,
    },
}

impl WeakStability {
    pub fn is_weakly_stable(&self) -> bool {
        matches!(self, WeakStability::WeaklyStable { .. })
    }
}

/// Set partitions of `0..n` into at most `max_parts` blocks, as restricted
/// growth strings in lexicographic order.
pub fn set_partitions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    if max_parts == 0 {
        return out;
    }
    let mut a = vec![0usize; n];
    // m[i] = 1 + max(a[0..=i])
    let mut m = vec![1usize; n];
    loop {
        out.push(a.clone());
        let Some(i) = (1..n)
            .rev()
            .find(|&i| a[i] < m[i - 1] && a[i] + 1 < max_parts)
        else {
            return out;
        };
        a[i] += 1;
        m[i] = m[i - 1].max(a[i] + 1);
        for j in i + 1..n {
            a[j] = 0;
            m[j] = m[i];
        }
    }
}

/// Scans every identification `Q_{G,f}(y) = P_G(y_{f(1)}, ..., y_{f(n)})` with
/// at most `max_parts` new variables and reports the first, in restricted
/// growth order, whose Newton polytope is not saturated.
pub fn weak_stability_check(
    g: &Graph,
    max_parts: Option<usize>,
) -> Result<WeakStability, StabilityError> {
    weak_stability_check_with(g, max_parts, Execution::default())
}

pub fn weak_stability_check_with(
    g: &Graph,
    max_parts: Option<usize>,
    exec: Execution,
) -> Result<WeakStability, StabilityError> {
    let n = g.n();
    if n > WEAK_STABILITY_MAX_N {
        return Err(StabilityError::WeakGuard {
            n,
            max: WEAK_STABILITY_MAX_N,
        });
    }
    g.require_connected()?;
    let p = vertex_spanning_polynomial(g)?;
    let maps = set_partitions(n, max_parts.unwrap_or(n));
    let found = par::find_map_first(exec, &maps, |map| {
        let parts = map.iter().max().map_or(0, |&k| k + 1);
        let q = p
            .identify_variables(map, parts)
            .expect("valid partition map");
        match crate::poly::saturation_check(&q).expect("P_G is nonzero") {
            Saturation::Saturated => None,
            Saturation::Missing(missing) => Some(WeakStability::Counterexample {
                map: map.clone(),
                parts,
                missing,
            }),
        }
    });
    Ok(found.unwrap_or(WeakStability::WeaklyStable {
        partitions_checked: maps.len(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum WeightedSign {
    /// Two-connected with weights of both signs: `P_{G,w}` is not stable.
    MixedSignUnstable {
        positive_edge: (Vertex, Vertex),
        #[serde(with = "serde_rational")]
        positive_weight: Rational,
        negative_edge: (Vertex, Vertex),
        #[serde(with = "serde_rational")]
        negative_weight: Rational,
    },
    Inconclusive {
        reason: String,
    },
}

/// Necessary condition for stability of `P_{G,w}` on two-connected graphs:
/// all weights share a sign. Anything else is left undecided.
pub fn weighted_sign_check(g: &Graph, w: &EdgeWeights) -> Result<WeightedSign, StabilityError> {
    g.require_connected()?;
    let inconclusive = |reason: &str| {
        Ok(WeightedSign::Inconclusive {
            reason: reason.to_string(),
        })
    };
    if g.n() < 3 || !g.cut_vertices()?.is_empty() {
        return inconclusive("graph is not two-connected");
    }
    let positive = w.iter().find(|(_, c)| c.is_positive());
    let negative = w.iter().find(|(_, c)| c.is_negative());
    match (positive, negative) {
        (Some((pe, pw)), Some((ne, nw))) => Ok(WeightedSign::MixedSignUnstable {
            positive_edge: pe,
            positive_weight: pw.clone(),
            negative_edge: ne,
            negative_weight: nw.clone(),
        }),
        _ => inconclusive("weights share one sign"),
    }
}
