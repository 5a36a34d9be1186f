//! Vertex, edge and whole-graph measures built on the closer-vertex count.

mod classical;
mod report;

pub use classical::{
    betweenness, betweenness_f64, closeness, distance_sums, eccentricities, eigenvector,
    eigenvector_with, EigenOptions, Eigenvector,
};
pub use report::{EdgeMeasures, GraphMeasures, MeasureReport, VertexMeasures};

use crate::error::{Error, Result};
use crate::graph::{all_pairs, edge_vertex_distance, DistanceMatrix, Graph};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::Add;

/// A non-negative multiple of one half, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(u64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_doubled(twice: u64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(x: u64) -> Self {
        HalfInt(2 * x)
    }

    pub fn doubled(self) -> u64 {
        self.0
    }

    /// The integer value, if there is no half.
    pub fn to_int(self) -> Option<u64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, Add::add)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(x) => s.serialize_u64(x),
            None => s.serialize_f64(self.to_f64()),
        }
    }
}

/// All ordered closer counts `n(u,v)` of a graph.
#[derive(Debug, Clone)]
pub struct CloserTable {
    n: usize,
    c: Vec<u32>,
}

impl CloserTable {
    pub fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.n();
        let mut c = vec![0u32; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = dm.closer_pair(u, v);
                c[u * n + v] = a as u32;
                c[v * n + u] = b as u32;
            }
        }
        CloserTable { n, c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u64 {
        u64::from(self.c[u * self.n + v])
    }

    #[inline]
    pub fn diff(&self, u: usize, v: usize) -> u64 {
        self.get(u, v).abs_diff(self.get(v, u))
    }

    /// `n(u,v) > n(v,u)`: `u` beats `v`.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.get(u, v) > self.get(v, u)
    }

    pub fn peri(&self, v: usize) -> u64 {
        (0..self.n).filter(|&u| u != v && self.beats(u, v)).count() as u64
    }

    pub fn spr(&self, v: usize) -> u64 {
        (0..self.n).filter(|&u| u != v).map(|u| self.get(u, v)).sum()
    }

    pub fn total_mostar_vertex(&self, v: usize) -> HalfInt {
        HalfInt((0..self.n).filter(|&u| u != v).map(|u| self.diff(u, v)).sum())
    }

    pub fn eperi(&self, (u, v): (usize, usize)) -> u64 {
        (0..self.n)
            .filter(|&x| x != u && x != v && self.beats(x, u) && self.beats(x, v))
            .count() as u64
    }

    pub fn espr(&self, (u, v): (usize, usize)) -> u64 {
        (0..self.n)
            .filter(|&x| x != u && x != v)
            .map(|x| self.get(x, u) + self.get(x, v))
            .sum()
    }

    /// Sum of `|n(u,v) - n(v,u)|` over unordered pairs.
    pub fn total_mostar(&self) -> u64 {
        self.pairs().map(|(u, v)| self.diff(u, v)).sum()
    }

    /// Unordered pairs `{u,v}` where one side strictly beats the other.
    pub fn peri_total(&self) -> u64 {
        self.pairs().filter(|&(u, v)| self.get(u, v) != self.get(v, u)).count() as u64
    }

    pub fn spr_total(&self) -> u64 {
        self.pairs().map(|(u, v)| self.get(u, v) + self.get(v, u)).sum()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }
}

fn connected_dm(g: &Graph, what: &'static str) -> Result<DistanceMatrix> {
    g.require_connected(what)?;
    Ok(all_pairs(g))
}

fn check_edge(g: &Graph, e: (usize, usize)) -> Result<()> {
    g.check_vertex(e.0)?;
    g.check_vertex(e.1)?;
    if g.has_edge(e.0, e.1) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(format!("{}-{}", e.0, e.1)))
    }
}

/// `Mo(e) = |n(u,v) - n(v,u)|`.
pub fn mostar_edge(dm: &DistanceMatrix, (u, v): (usize, usize)) -> u64 {
    let (a, b) = dm.closer_pair(u, v);
    a.abs_diff(b) as u64
}

pub fn mostar_graph(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "Mostar index")?;
    Ok(g.edges().iter().map(|&e| mostar_edge(&dm, e)).sum())
}

/// Half the sum of `Mo(e)` over edges incident to `v`.
pub fn mostar_vertex(g: &Graph, v: usize) -> Result<HalfInt> {
    g.check_vertex(v)?;
    let dm = connected_dm(g, "vertex Mostar index")?;
    Ok(HalfInt(g.neighbors(v).iter().map(|&u| mostar_edge(&dm, (u, v))).sum()))
}

/// Mostar sum counting only degree-1 vertices on each side.
pub fn terminal_mostar(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "terminal Mostar index")?;
    Ok(terminal_mostar_with(g, &dm))
}

pub(crate) fn terminal_mostar_with(g: &Graph, dm: &DistanceMatrix) -> u64 {
    let leaves = g.pendant_vertices();
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (mut a, mut b) = (0u64, 0u64);
            for &x in &leaves {
                let (du, dv) = (dm.get(x, u), dm.get(x, v));
                a += u64::from(du < dv);
                b += u64::from(dv < du);
            }
            a.abs_diff(b)
        })
        .sum()
}

pub fn total_mostar(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "total Mostar index")?;
    Ok(CloserTable::new(&dm).total_mostar())
}

/// Half the sum of `|n(u,v) - n(v,u)|` over all `u != v`.
pub fn total_mostar_vertex(g: &Graph, v: usize) -> Result<HalfInt> {
    g.check_vertex(v)?;
    let dm = connected_dm(g, "total Mostar index")?;
    Ok(HalfInt(
        (0..g.n()).filter(|&u| u != v).map(|u| mostar_edge(&dm, (u, v))).sum(),
    ))
}

/// `|deg u - deg v|`.
pub fn irregularity_edge(g: &Graph, (u, v): (usize, usize)) -> Result<u64> {
    check_edge(g, (u, v))?;
    Ok(g.degree(u).abs_diff(g.degree(v)) as u64)
}

pub fn irregularity_graph(g: &Graph) -> u64 {
    g.edges().iter().map(|&(u, v)| g.degree(u).abs_diff(g.degree(v)) as u64).sum()
}

/// Number of `u != v` with `n(u,v) > n(v,u)`.
pub fn peri_vertex(dm: &DistanceMatrix, v: usize) -> u64 {
    (0..dm.n())
        .filter(|&u| u != v)
        .filter(|&u| {
            let (a, b) = dm.closer_pair(u, v);
            a > b
        })
        .count() as u64
}

pub fn peri_graph(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "peripherality")?;
    Ok(CloserTable::new(&dm).peri_total())
}

/// `sum over u != v of n(u,v)`.
pub fn spr_vertex(dm: &DistanceMatrix, v: usize) -> u64 {
    (0..dm.n()).filter(|&u| u != v).map(|u| dm.closer_count(u, v) as u64).sum()
}

pub fn spr_graph(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "sum peripherality")?;
    Ok(CloserTable::new(&dm).spr_total())
}

/// Vertices off `e` that strictly beat both endpoints.
pub fn eperi_edge(dm: &DistanceMatrix, (u, v): (usize, usize)) -> u64 {
    (0..dm.n())
        .filter(|&x| x != u && x != v)
        .filter(|&x| {
            let (a, b) = dm.closer_pair(x, u);
            let (c, d) = dm.closer_pair(x, v);
            a > b && c > d
        })
        .count() as u64
}

pub fn eperi_graph(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "edge peripherality")?;
    let ct = CloserTable::new(&dm);
    Ok(g.edges().iter().map(|&e| ct.eperi(e)).sum())
}

pub fn espr_edge(dm: &DistanceMatrix, (u, v): (usize, usize)) -> u64 {
    (0..dm.n())
        .filter(|&x| x != u && x != v)
        .map(|x| (dm.closer_count(x, u) + dm.closer_count(x, v)) as u64)
        .sum()
}

pub fn espr_graph(g: &Graph) -> Result<u64> {
    let dm = connected_dm(g, "edge sum peripherality")?;
    let ct = CloserTable::new(&dm);
    Ok(g.edges().iter().map(|&e| ct.espr(e)).sum())
}

/// `|N(u) ∪ N(v) \ {u, v}|`.
pub fn edeg(g: &Graph, (u, v): (usize, usize)) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() || j < b.len() {
        let x = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        count += usize::from(x != u && x != v);
    }
    count
}

/// `max over w of min(d(u,w), d(v,w))`.
pub fn eecc(dm: &DistanceMatrix, e: (usize, usize)) -> u32 {
    (0..dm.n()).map(|w| edge_vertex_distance(dm, e, w)).max().unwrap_or(0)
}

/// Competition ("1224") ranks. Equal keys share the smallest rank.
pub fn competition_ranks<T: Ord>(keys: &[T], descending: bool) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| {
        let c = keys[a].cmp(&keys[b]);
        if descending { c.reverse() } else { c }
    });
    let mut ranks = vec![0; keys.len()];
    for (pos, &i) in order.iter().enumerate() {
        ranks[i] = if pos > 0 && keys[order[pos - 1]] == keys[i] { ranks[order[pos - 1]] } else { pos + 1 };
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build_graph(n, &e).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build_graph(leaves + 1, &e).unwrap()
    }

    #[test]
    fn half_int_display() {
        assert_eq!(HalfInt::from_doubled(5).to_string(), "2.5");
        assert_eq!(HalfInt::from_int(3).to_string(), "3");
    }

    #[test]
    fn star_and_path_values() {
        assert_eq!(mostar_graph(&star(4)).unwrap(), 12);
        assert_eq!(mostar_graph(&path(5)).unwrap(), 8);
        assert_eq!(mostar_vertex(&star(4), 0).unwrap(), HalfInt::from_int(6));
        assert_eq!(terminal_mostar(&star(4)).unwrap(), 8);
        assert_eq!(total_mostar(&path(5)).unwrap(), 14);
        assert_eq!(total_mostar_vertex(&star(3), 0).unwrap(), HalfInt::from_int(3));
        assert_eq!(total_mostar_vertex(&star(4), 1).unwrap(), HalfInt::from_doubled(3));
        assert_eq!(peri_graph(&path(4)).unwrap(), 4);
        assert_eq!(spr_graph(&path(3)).unwrap(), 8);
        assert_eq!(eperi_graph(&path(6)).unwrap(), 4);
        assert_eq!(espr_graph(&star(4)).unwrap(), 2 * 16 - 8);
        assert_eq!(irregularity_graph(&star(4)), 12);
    }

    #[test]
    fn edge_degree_and_eccentricity() {
        let p6 = path(6);
        let dm = all_pairs(&p6);
        assert_eq!(eecc(&dm, (2, 3)), 2);
        assert_eq!(edeg(&p6, (2, 3)), 2);
        assert_eq!(edeg(&star(4), (0, 1)), 3);
    }

    #[test]
    fn disconnected_errors() {
        let g = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(mostar_graph(&g), Err(Error::Disconnected("Mostar index")));
        assert!(peri_graph(&g).is_err());
        assert!(irregularity_edge(&g, (0, 2)).is_err());
    }

    #[test]
    fn ranks_1224() {
        assert_eq!(competition_ranks(&[5, 3, 3, 1], true), vec![1, 2, 2, 4]);
        assert_eq!(competition_ranks(&[5, 3, 3, 1], false), vec![4, 2, 2, 1]);
    }
}
