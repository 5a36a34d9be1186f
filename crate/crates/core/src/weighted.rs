//! Graphs whose vertices carry implicit bundles of pendant points.
//!
//! A vertex `z` of weight `w` stands for itself plus `w - 1` bundle points.
//! Without a hub, a bundle point is a leaf hanging off `z`. With a hub `c`,
//! bundle points at `z != c` are also adjacent to `c` (the hub is universal
//! in the expanded graph); bundle points at `c` are leaves of `c`.

use crate::error::{Error, Result};
use crate::graph::{all_pairs, build_graph, DistanceMatrix, Graph, UNREACHABLE};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeightedGraph {
    base: Graph,
    weight: Vec<BigUint>,
    hub: Option<usize>,
}

/// A vertex of the expanded graph: a core vertex or one point of the bundle at a core vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Core(usize),
    Bundle(usize),
}

impl VertexWeightedGraph {
    pub fn new(base: Graph, weight: Vec<BigUint>) -> Result<Self> {
        Self::with_hub(base, weight, None)
    }

    /// `hub` must be adjacent to every other core vertex.
    pub fn with_hub(base: Graph, weight: Vec<BigUint>, hub: Option<usize>) -> Result<Self> {
        if weight.len() != base.n() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} vertices",
                weight.len(),
                base.n()
            )));
        }
        if let Some(v) = weight.iter().position(Zero::is_zero) {
            return Err(Error::InvalidParameter(format!("weight of vertex {v} is zero")));
        }
        if let Some(c) = hub {
            base.check_vertex(c)?;
            if base.degree(c) + 1 != base.n() {
                return Err(Error::InvalidParameter(format!("hub {c} is not universal")));
            }
        }
        Ok(VertexWeightedGraph { base, weight, hub })
    }

    pub fn unit(base: Graph) -> Self {
        let weight = vec![BigUint::one(); base.n()];
        VertexWeightedGraph { base, weight, hub: None }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weight
    }

    pub fn hub(&self) -> Option<usize> {
        self.hub
    }

    /// Order of the expanded graph.
    pub fn total_order(&self) -> BigUint {
        self.weight.iter().sum()
    }

    fn bundle_size(&self, z: usize) -> BigUint {
        &self.weight[z] - 1u32
    }

    fn anchors(&self, z: usize) -> impl Iterator<Item = usize> {
        let extra = self.hub.filter(|&c| c != z);
        std::iter::once(z).chain(extra)
    }

    /// Degree in the expanded graph.
    pub fn degree(&self, v: Point) -> BigUint {
        match v {
            Point::Core(z) => {
                let mut d = BigUint::from(self.base.degree(z)) + self.bundle_size(z);
                if self.hub == Some(z) {
                    for y in (0..self.base.n()).filter(|&y| y != z) {
                        d += self.bundle_size(y);
                    }
                }
                d
            }
            Point::Bundle(z) => BigUint::from(self.anchors(z).count()),
        }
    }
}

/// Weighted closer counts over one shared distance matrix of the core.
pub struct WeightedDistances<'a> {
    wg: &'a VertexWeightedGraph,
    dm: DistanceMatrix,
}

fn add1(d: u32) -> u32 {
    d.saturating_add(1)
}

impl<'a> WeightedDistances<'a> {
    pub fn new(wg: &'a VertexWeightedGraph) -> Self {
        WeightedDistances { wg, dm: all_pairs(&wg.base) }
    }

    pub fn core_distances(&self) -> &DistanceMatrix {
        &self.dm
    }

    fn check(&self, p: Point) -> Result<()> {
        let z = match p {
            Point::Core(z) => z,
            Point::Bundle(z) => {
                if self.wg.weight[z].is_one() {
                    return Err(Error::InvalidParameter(format!("vertex {z} has no bundle")));
                }
                z
            }
        };
        self.wg.base.check_vertex(z)
    }

    fn min_anchor_dist(&self, z: usize, x: usize) -> u32 {
        self.wg.anchors(z).map(|a| self.dm.get(a, x)).min().unwrap_or(UNREACHABLE)
    }

    /// Distance between two distinct expanded vertices (bundle points at the
    /// same core vertex are treated as distinct members).
    fn dist(&self, p: Point, q: Point) -> u32 {
        match (p, q) {
            (Point::Core(x), Point::Core(y)) => self.dm.get(x, y),
            (Point::Core(x), Point::Bundle(z)) | (Point::Bundle(z), Point::Core(x)) => {
                add1(self.min_anchor_dist(z, x))
            }
            (Point::Bundle(z), Point::Bundle(y)) => {
                let best = self.wg.anchors(z).map(|a| self.min_anchor_dist(y, a)).min();
                best.unwrap_or(UNREACHABLE).saturating_add(2)
            }
        }
    }

    /// Number of expanded vertices strictly closer to `p` than to `q`.
    pub fn n_closer(&self, p: Point, q: Point) -> Result<BigUint> {
        self.check(p)?;
        self.check(q)?;
        if p == q {
            let z = match p {
                Point::Core(z) | Point::Bundle(z) => z,
            };
            return Err(Error::SameVertex(z));
        }
        let n = self.wg.base.n();
        let mut total = BigUint::zero();
        let mut core = 0u64;
        for x in 0..n {
            let cx = Point::Core(x);
            let dp = if cx == p { 0 } else { self.dist(cx, p) };
            let dq = if cx == q { 0 } else { self.dist(cx, q) };
            core += u64::from(dp < dq);
        }
        total += core;
        for z in 0..n {
            let mut size = self.wg.bundle_size(z);
            let bz = Point::Bundle(z);
            let holds_p = p == bz;
            let holds_q = q == bz;
            if holds_p {
                size -= 1u32;
                total += 1u32; // p itself
            }
            if holds_q {
                size -= 1u32;
            }
            if size.is_zero() {
                continue;
            }
            // A representative member distinct from p and q.
            if self.dist(bz, p) < self.dist(bz, q) {
                total += size;
            }
        }
        Ok(total)
    }

    /// `(n(p,q), n(q,p))`.
    pub fn closer_pair(&self, p: Point, q: Point) -> Result<(BigUint, BigUint)> {
        Ok((self.n_closer(p, q)?, self.n_closer(q, p)?))
    }

    /// `|n(p,q) - n(q,p)|`.
    pub fn mostar_difference(&self, p: Point, q: Point) -> Result<BigUint> {
        let (a, b) = self.closer_pair(p, q)?;
        Ok(if a >= b { a - b } else { b - a })
    }

    /// Peripherality of a core vertex over all expanded vertices.
    pub fn peri(&self, v: usize) -> Result<BigUint> {
        let n = self.wg.base.n();
        let me = Point::Core(v);
        let mut total = BigUint::zero();
        for x in (0..n).filter(|&x| x != v) {
            let (a, b) = self.closer_pair(Point::Core(x), me)?;
            if a > b {
                total += 1u32;
            }
        }
        for z in 0..n {
            if self.wg.weight[z].is_one() {
                continue;
            }
            let (a, b) = self.closer_pair(Point::Bundle(z), me)?;
            if a > b {
                total += self.wg.bundle_size(z);
            }
        }
        Ok(total)
    }
}

/// Closer count between core vertices `u` and `v`, weighted by bundle sizes.
pub fn n_closer_weighted(wg: &VertexWeightedGraph, u: usize, v: usize) -> Result<BigUint> {
    WeightedDistances::new(wg).n_closer(Point::Core(u), Point::Core(v))
}

/// Explicit expansion. Core vertices keep ids `0..n`; bundle points follow
/// in order of their core vertex. Fails if the order does not fit in memory-sized ints.
pub fn expand(wg: &VertexWeightedGraph) -> Result<Graph> {
    let n = wg.base.n();
    let limit = 50_000_000u64;
    let total = wg.total_order();
    let total = total
        .to_u64()
        .filter(|&t| t <= limit)
        .ok_or_else(|| Error::InvalidParameter(format!("expansion of order {total} is too large")))?
        as usize;
    let mut edges: Vec<(usize, usize)> = wg.base.edges().to_vec();
    let mut next = n;
    for z in 0..n {
        let size = wg.bundle_size(z).to_usize().expect("bounded by total");
        for _ in 0..size {
            for a in wg.anchors(z) {
                edges.push((a, next));
            }
            next += 1;
        }
    }
    build_graph(total, &edges)
}

/// Ordering helper for comparing weighted counts against explicit ones.
pub fn cmp_counts(a: &BigUint, b: usize) -> Ordering {
    a.cmp(&BigUint::from(b))
}
