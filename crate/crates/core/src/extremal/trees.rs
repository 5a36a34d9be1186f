//! Free trees as canonical level sequences, one per isomorphism class.
//!
//! A level sequence lists vertex depths in preorder of a rooted tree. The
//! successor rule walks the canonical rootings (centered, with the tallest
//! subtree rules applied) in the order of Wright, Richmond, Odlyzko and McKay.

use crate::graph::{build_graph, Graph};

/// Streams every free tree of order `n` as a level sequence.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    n: usize,
    candidate: Option<Vec<u8>>,
    single_done: bool,
}

impl FreeTrees {
    /// Supported orders are `1..=MAX_ORDER`.
    pub const MAX_ORDER: usize = 24;

    pub fn new(n: usize) -> Option<Self> {
        if n == 0 || n > Self::MAX_ORDER {
            return None;
        }
        let mut first: Vec<u8> = (0..=(n / 2) as u8).collect();
        first.extend(1..n.div_ceil(2) as u8);
        Some(FreeTrees { n, candidate: Some(first), single_done: false })
    }

    /// Resumes from a state saved with [`FreeTrees::state`].
    pub fn resume(n: usize, state: Option<Vec<u8>>) -> Self {
        FreeTrees { n, candidate: state, single_done: n == 1 }
    }

    /// The pending candidate; `None` once exhausted.
    pub fn state(&self) -> Option<&[u8]> {
        self.candidate.as_deref()
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.n == 1 {
            if self.single_done {
                return None;
            }
            self.single_done = true;
            self.candidate = None;
            return Some(vec![0]);
        }
        let cand = self.candidate.take()?;
        let tree = next_tree(cand)?;
        self.candidate = next_rooted_tree(&tree, None);
        Some(tree)
    }
}

fn next_rooted_tree(pred: &[u8], p: Option<usize>) -> Option<Vec<u8>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits off the subtree of the root's first child.
fn split_tree(layout: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_tree(candidate: Vec<u8>) -> Option<Vec<u8>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mirrored_larger = rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest));
    if rh >= lh && !mirrored_larger {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0) as usize;
        let len = next.len();
        for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = (k + 1) as u8;
        }
    }
    Some(next)
}

/// Parent of each vertex in preorder numbering (`usize::MAX` for the root).
pub fn level_parents(layout: &[u8]) -> Vec<usize> {
    let mut parent = vec![usize::MAX; layout.len()];
    let mut stack: Vec<usize> = Vec::with_capacity(layout.len());
    for (i, &d) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= d {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            parent[i] = top;
        }
        stack.push(i);
    }
    parent
}

/// Edges `(parent, child)` of the tree encoded by a level sequence.
pub fn level_edges(layout: &[u8]) -> Vec<(usize, usize)> {
    level_parents(layout)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(c, p)| (p, c))
        .collect()
}

pub fn layout_to_graph(layout: &[u8]) -> Graph {
    build_graph(layout.len(), &level_edges(layout)).expect("level sequence encodes a tree")
}

/// Mostar-type sums of a tree, read off subtree sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeSums {
    pub mo: i64,
    pub irr: i64,
    pub mo_terminal: i64,
    pub max_degree: usize,
}

/// In a tree every vertex is strictly closer to one endpoint of each edge,
/// so `Mo(e) = |n - 2s|` where `s` is the size of the side away from the root.
pub fn tree_sums(layout: &[u8]) -> TreeSums {
    let n = layout.len();
    let parent = level_parents(layout);
    let mut deg = vec![0usize; n];
    for c in 1..n {
        deg[c] += 1;
        deg[parent[c]] += 1;
    }
    let mut size = vec![1i64; n];
    let mut leaves: Vec<i64> = deg.iter().map(|&d| i64::from(d == 1)).collect();
    let total_leaves: i64 = leaves.iter().sum();
    let (mut mo, mut irr, mut mo_terminal) = (0i64, 0i64, 0i64);
    for c in (1..n).rev() {
        let p = parent[c];
        mo += (n as i64 - 2 * size[c]).abs();
        mo_terminal += (total_leaves - 2 * leaves[c]).abs();
        irr += (deg[c] as i64 - deg[p] as i64).abs();
        size[p] += size[c];
        leaves[p] += leaves[c];
    }
    TreeSums { mo, irr, mo_terminal, max_degree: deg.iter().copied().max().unwrap_or(0) }
}

/// Number of free trees of order `n` from the rooted-tree recurrence and
/// the dissimilarity characteristic, independent of the generator.
pub fn free_tree_count(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    // r[k] = rooted trees of order k.
    let mut r = vec![0u128; n + 1];
    r[1] = 1;
    for m in 1..n {
        let mut s = 0u128;
        for k in 1..=m {
            let dk: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * r[d]).sum();
            s += dk * r[m - k + 1];
        }
        r[m + 1] = s / m as u128;
    }
    let pairs: u128 = (1..n).map(|i| r[i] * r[n - i]).sum();
    let sym = if n % 2 == 0 { r[n / 2] } else { 0 };
    r[n] - (pairs - sym) / 2
}

/// Canonical string of a free tree: AHU encoding rooted at the center,
/// minimized over both centers of a bicentral tree.
pub fn tree_canonical_form(g: &Graph) -> String {
    let n = g.n();
    if n <= 1 {
        return "()".repeat(n);
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    fn encode(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> =
            g.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| encode(g, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(g, c, usize::MAX)).min().expect("a tree has a center")
}

/// Every labeled tree on `n` vertices via Prüfer sequences, deduplicated by
/// canonical form. Independent of [`FreeTrees`]; practical for `n <= 9`.
pub fn prufer_free_trees(n: usize) -> Vec<String> {
    use std::collections::BTreeSet;
    let mut seen = BTreeSet::new();
    if n <= 2 {
        let g = if n == 2 { build_graph(2, &[(0, 1)]).unwrap() } else { Graph::empty(n) };
        seen.insert(tree_canonical_form(&g));
        return seen.into_iter().collect();
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        seen.insert(tree_canonical_form(&prufer_decode(&seq, n)));
        let mut i = len;
        loop {
            if i == 0 {
                return seen.into_iter().collect();
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build_graph(n, &edges).expect("Prüfer decoding yields a tree")
}
