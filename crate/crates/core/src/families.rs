//! Named graph families.
//!
//! Gem, house and domino use the standard figure labeling shifted to 0-based
//! ids: label `k` is vertex `k - 1`.

use std::fmt;
use std::str::FromStr;

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

/// `K_{m,n}`: one part is `0..m`, the other `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::from_edges(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)))).unwrap()
}

/// Cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// Path 2-3-4-5 plus the hub 1 joined to all of it.
pub fn gem() -> Graph {
    Graph::from_edges(5, [(3, 2), (2, 1), (1, 0), (0, 4), (4, 3), (0, 3), (0, 2)]).unwrap()
}

/// Square 1-2-4-5 with roof vertex 3 on top of the edge 2-4.
pub fn house() -> Graph {
    Graph::from_edges(5, [(0, 4), (4, 3), (3, 2), (2, 1), (1, 0), (3, 1)]).unwrap()
}

/// Hexagon 1..6 with the chord 1-4.
pub fn domino() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap()
}

/// A family member as named on the command line, e.g. `K 5`, `K 2 3`,
/// `C 6`, `path 4`, `star 3`, `gem`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Gem,
    House,
    Domino,
}

impl Family {
    pub fn build(self) -> Graph {
        match self {
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
            Family::Cycle(n) => cycle(n),
            Family::Path(n) => path(n),
            Family::Star(k) => star(k),
            Family::Gem => gem(),
            Family::House => house(),
            Family::Domino => domino(),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let nums = words
            .iter()
            .skip(1)
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| format!("bad size `{w}` in family `{s}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let name = words
            .first()
            .map(|w| w.to_ascii_lowercase())
            .unwrap_or_default();
        let family = match (name.as_str(), nums.as_slice()) {
            ("k" | "complete", [n]) if *n >= 1 => Family::Complete(*n),
            ("k" | "kmn" | "bipartite", [m, n]) if *m >= 1 && *n >= 1 => {
                Family::CompleteBipartite(*m, *n)
            }
            ("c" | "cycle", [n]) if *n >= 3 => Family::Cycle(*n),
            ("p" | "path", [n]) if *n >= 1 => Family::Path(*n),
            ("star", [k]) => Family::Star(*k),
            ("gem", []) => Family::Gem,
            ("house", []) => Family::House,
            ("domino", []) => Family::Domino,
            _ => return Err(format!("unknown family `{s}`")),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K {n}"),
            Family::CompleteBipartite(m, n) => write!(f, "K {m} {n}"),
            Family::Cycle(n) => write!(f, "C {n}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::Star(k) => write!(f, "star {k}"),
            Family::Gem => f.write_str("gem"),
            Family::House => f.write_str("house"),
            Family::Domino => f.write_str("domino"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_patterns_have_expected_shape() {
        let deg = |g: &Graph| {
            let mut d: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(deg(&gem()), vec![2, 2, 3, 3, 4]);
        assert_eq!(gem().degree(0), 4);
        assert_eq!(deg(&house()), vec![2, 2, 2, 3, 3]);
        assert_eq!(house().neighbors(2), &[1, 3]);
        assert_eq!(deg(&domino()), vec![2, 2, 2, 2, 3, 3]);
        assert_eq!(domino().neighbors(0), &[1, 3, 5]);
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("K 5".parse::<Family>().unwrap(), Family::Complete(5));
        assert_eq!(
            "K 2 3".parse::<Family>().unwrap(),
            Family::CompleteBipartite(2, 3)
        );
        assert_eq!("gem".parse::<Family>().unwrap(), Family::Gem);
        assert!("C 2".parse::<Family>().is_err());
        assert!("K".parse::<Family>().is_err());
        for f in [
            Family::Cycle(7),
            Family::Path(3),
            Family::Star(4),
            Family::Domino,
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
    }
}
