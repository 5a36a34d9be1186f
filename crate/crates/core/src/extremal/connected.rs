//! Labeled connected graphs on at most seven vertices, one per edge subset.

use crate::graph::{build_graph, Graph};

pub const MAX_CONNECTED_ORDER: usize = 7;

/// Vertex pairs in mask-bit order: (0,1), (0,2), ..., (n-2,n-1).
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Whether the edge subset `mask` over `pairs` connects all `n` vertices.
pub fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = [0u8; MAX_CONNECTED_ORDER + 1];
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full = ((1u16 << n) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

pub fn mask_graph(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    build_graph(n, &edges).expect("pairs are valid")
}

/// Masks of connected labeled graphs on `n` vertices, increasing.
pub fn connected_masks(n: usize) -> impl Iterator<Item = u32> {
    let pairs = pair_list(n);
    let total = 1u64 << pairs.len();
    (0..total).map(|m| m as u32).filter(move |&m| mask_connected(n, &pairs, m))
}

/// Every connected labeled graph on `n <= 7` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Option<impl Iterator<Item = Graph>> {
    if n > MAX_CONNECTED_ORDER {
        return None;
    }
    let pairs = pair_list(n);
    Some(connected_masks(n).map(move |m| mask_graph(n, &pairs, m)))
}

/// Number of connected labeled graphs, by inclusion-exclusion on the
/// component containing vertex 0.
pub fn labeled_connected_count(n: usize) -> u128 {
    let binom = |a: usize, b: usize| -> u128 {
        (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
    };
    let all = |k: usize| 1u128 << (k * k.saturating_sub(1) / 2);
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let rest: u128 = (1..m).map(|k| binom(m - 1, k - 1) * c[k] * all(m - k)).sum();
        c[m] = all(m) - rest;
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected_graphs(3).unwrap().count(), 4);
        assert_eq!(enumerate_connected_graphs(4).unwrap().count(), 38);
        for n in 1..=6 {
            assert_eq!(connected_masks(n).count() as u128, labeled_connected_count(n));
        }
        assert!(enumerate_connected_graphs(8).is_none());
    }
}
