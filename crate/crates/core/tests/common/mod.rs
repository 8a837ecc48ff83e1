#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treestab::dh::{ConstructionSequence, Step};
use treestab::{Graph, MultiPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.random_range(0..k)];
        edges.push((parent.min(order[k]), parent.max(order[k])));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random construction sequence on `n >= 2` vertices with shuffled labels.
pub fn random_sequence<R: Rng>(rng: &mut R, n: usize) -> ConstructionSequence {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut steps = vec![Step::Start {
        u: labels[0],
        v: labels[1],
    }];
    for k in 2..n {
        let old = labels[rng.random_range(0..k)];
        let new = labels[k];
        steps.push(match rng.random_range(0..3) {
            0 => Step::AddPendant { new, anchor: old },
            1 => Step::AddFalseTwin { new, of: old },
            _ => Step::AddTrueTwin { new, of: old },
        });
    }
    ConstructionSequence::new(steps)
}

/// `x_k` in the 1-based naming of printed formulas, inside `n` variables.
pub fn x1(n: usize) -> impl Fn(usize) -> MultiPoly {
    move |k| MultiPoly::var(n, k - 1)
}

/// `P` with every variable set to 1.
pub fn at_ones(p: &MultiPoly) -> treestab::Rational {
    p.eval(&vec![treestab::rational::int(1); p.nvars()])
        .unwrap()
}
