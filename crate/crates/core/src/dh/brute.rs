//! Definition-level distance-hereditary check over all induced subgraphs.

use super::DhError;
use crate::graph::Graph;

/// Largest vertex count accepted by [`is_distance_hereditary_bruteforce`].
pub const BRUTE_FORCE_MAX_N: usize = 12;

/// Distances within `mask` from `s`, `u8::MAX` for unreachable.
fn bfs_within(adj: &[u32], mask: u32, s: usize, out: &mut [u8]) {
    out.fill(u8::MAX);
    out[s] = 0;
    let mut frontier = 1u32 << s;
    let mut seen = frontier;
    let mut d = 0u8;
    while frontier != 0 {
        d += 1;
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= mask & !seen;
        seen |= next;
        let mut nb = next;
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            out[v] = d;
        }
        frontier = next;
    }
}

/// Every connected induced subgraph preserves distances of `g`.
///
/// Exponential in `n`; guarded by [`BRUTE_FORCE_MAX_N`].
pub fn is_distance_hereditary_bruteforce(g: &Graph) -> Result<bool, DhError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(DhError::SizeGuard {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    g.require_connected()?;
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full = (1u32 << n) - 1;
    let global: Vec<Vec<u8>> = g
        .vertices()
        .map(|s| {
            let mut d = vec![0u8; n];
            bfs_within(&adj, full, s, &mut d);
            d
        })
        .collect();

    let mut local = vec![0u8; n];
    for mask in 1..full {
        if mask.count_ones() < 3 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        bfs_within(&adj, mask, s, &mut local);
        if (0..n).any(|v| mask >> v & 1 == 1 && local[v] == u8::MAX) {
            continue;
        }
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if u != s {
                bfs_within(&adj, mask, u, &mut local);
            }
            let mut rest = m;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if local[v] != global[u][v] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
