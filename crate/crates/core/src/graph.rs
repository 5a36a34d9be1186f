//! Simple undirected graphs, hop distances and the closer-vertex count.

use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::VecDeque;
use std::fmt::Write as _;

/// Distance entry for pairs in different components. Compares as larger than
/// every finite distance.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Builds a graph, collapsing duplicate edges. Self-loops are rejected.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
    build_graph_counting_duplicates(n, edge_list).map(|(g, _)| g)
}

/// As [`build_graph`], also returning how many duplicate pairs were dropped.
pub fn build_graph_counting_duplicates(
    n: usize,
    edge_list: &[(usize, usize)],
) -> Result<(Graph, usize)> {
    let mut edges = Vec::with_capacity(edge_list.len());
    for &(u, v) in edge_list {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    let dropped = before - edges.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    Ok((Graph { n, adj, edges }, dropped))
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n], edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        build_graph(n, &edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        bfs_row(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn require_connected(&self, what: &'static str) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected(what))
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Degree-1 vertices in increasing order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].len() == 1).collect()
    }

    /// Largest finite distance. Errors on disconnected graphs.
    pub fn diameter(&self) -> Result<u32> {
        self.require_connected("diameter")?;
        Ok(all_pairs(self).diameter())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `keep` (renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]))
            .collect();
        build_graph(keep.len(), &edges).expect("induced edges are valid")
    }

    /// Parses the text interchange format: `n m` then `m` lines of `u v`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let nums = parse_pair(hl, header)?;
        let (n, m) = (nums.0, nums.1);
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines.by_ref().take(m) {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hl,
                msg: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse { line, msg: "trailing content after edge list".into() });
        }
        build_graph(n, &edges)
    }

    /// Renders the text interchange format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let bad = |msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut it = l.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("expected two integers"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

fn bfs_row(g: &Graph, s: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n];
    let mut queue = VecDeque::with_capacity(g.n);
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in &g.adj[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from `s`.
pub fn bfs_distances(g: &Graph, s: usize) -> Result<Vec<u32>> {
    g.check_vertex(s)?;
    Ok(bfs_row(g, s))
}

/// Dense all-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

/// One BFS per source; parallel over sources for larger graphs.
pub fn all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.n;
    let d: Vec<u32> = if n >= 64 {
        (0..n).into_par_iter().flat_map_iter(|s| bfs_row(g, s)).collect()
    } else {
        (0..n).flat_map(|s| bfs_row(g, s)).collect()
    };
    DistanceMatrix { n, d }
}

impl DistanceMatrix {
    /// Builds from a dense row-major matrix.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let n = rows.len();
        DistanceMatrix { n, d: rows.into_iter().flatten().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Eccentricity of `v` (UNREACHABLE if some vertex is unreachable).
    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }

    /// `|{x : d(x,u) < d(x,v)}|` without argument checks.
    #[inline]
    pub fn closer_count(&self, u: usize, v: usize) -> usize {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter().zip(rv).filter(|(a, b)| a < b).count()
    }

    /// Both directions of the closer count in one pass: `(n(u,v), n(v,u))`.
    #[inline]
    pub fn closer_pair(&self, u: usize, v: usize) -> (usize, usize) {
        let (ru, rv) = (self.row(u), self.row(v));
        let mut a = 0;
        let mut b = 0;
        for (x, y) in ru.iter().zip(rv) {
            a += usize::from(x < y);
            b += usize::from(y < x);
        }
        (a, b)
    }
}

/// Number of vertices strictly closer to `u` than to `v` (`u` included, ties excluded).
pub fn n_closer(dm: &DistanceMatrix, u: usize, v: usize) -> Result<usize> {
    for w in [u, v] {
        if w >= dm.n {
            return Err(Error::VertexOutOfRange { vertex: w, n: dm.n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(dm.closer_count(u, v))
}

/// `min(d(u,w), d(v,w))` for edge `e = (u, v)`.
pub fn edge_vertex_distance(dm: &DistanceMatrix, e: (usize, usize), w: usize) -> u32 {
    dm.get(e.0, w).min(dm.get(e.1, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build_graph(n, &e).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(build_graph(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(build_graph(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        let (g, dup) = build_graph_counting_duplicates(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!((g.m(), dup), (1, 1));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&path(4), 0).unwrap(), vec![0, 1, 2, 3]);
        let g = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_distances(&g, 0).unwrap(), vec![0, 1, UNREACHABLE, UNREACHABLE]);
        assert!(bfs_distances(&g, 4).is_err());
        assert!(!g.is_connected());
        assert!(g.diameter().is_err());
    }

    #[test]
    fn closer_counts() {
        let dm = all_pairs(&path(3));
        assert_eq!(n_closer(&dm, 0, 1).unwrap(), 1);
        assert_eq!(n_closer(&dm, 1, 1), Err(Error::SameVertex(1)));
        let k23 = build_graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let dm = all_pairs(&k23);
        assert_eq!(dm.closer_pair(0, 2), (3, 2));
    }

    #[test]
    fn edge_distance_and_pendants() {
        let dm = all_pairs(&path(4));
        assert_eq!(edge_vertex_distance(&dm, (0, 1), 3), 2);
        assert_eq!(edge_vertex_distance(&dm, (0, 1), 1), 0);
        assert_eq!(path(2).pendant_vertices(), vec![0, 1]);
    }

    #[test]
    fn text_round_trip() {
        let g = path(5);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::parse("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
