//! Clique-reduction gadgets and brute-force constrained clique search.
//!
//! Gadget vertex numbering: original (kept) vertices first in their original
//! order, then degree-equalizing pendants, then the universal vertex `c`,
//! then pendants on `c` (and `p` for X). The weighted J gadget keeps the
//! original vertices as `0..n` and puts `c` at `n`.

use crate::error::{Error, Result};
use crate::graph::{all_pairs, build_graph, DistanceMatrix, Graph};
use crate::measures::{eecc, CloserTable};
use crate::weighted::{Point, VertexWeightedGraph, WeightedDistances};
use num_bigint::BigUint;
use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Largest number of k-subsets the brute-force search will consider.
pub const SUBSET_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GadgetKind {
    H,
    HPruned,
    J,
    X,
}

impl GadgetKind {
    pub fn id(self) -> &'static str {
        match self {
            GadgetKind::H => "H",
            GadgetKind::HPruned => "Hp",
            GadgetKind::J => "J",
            GadgetKind::X => "X",
        }
    }
}

impl FromStr for GadgetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(GadgetKind::H),
            "Hp" | "H_pruned" => Ok(GadgetKind::HPruned),
            "J" => Ok(GadgetKind::J),
            "X" => Ok(GadgetKind::X),
            _ => Err(Error::InvalidParameter(format!("unknown gadget kind {s:?}"))),
        }
    }
}

/// The graph a gadget lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetGraph {
    Plain(Graph),
    Weighted(VertexWeightedGraph),
}

impl GadgetGraph {
    /// Core graph searched for cliques: the whole graph, or the core of a weighted one.
    pub fn core(&self) -> &Graph {
        match self {
            GadgetGraph::Plain(g) => g,
            GadgetGraph::Weighted(w) => w.base(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub kind: GadgetKind,
    pub graph: GadgetGraph,
    /// For each input vertex, its gadget id (`None` if pruned away).
    pub core_map: Vec<Option<usize>>,
    pub c: usize,
    pub p: Option<usize>,
}

impl GadgetOutput {
    /// JSON with edges, core map and (for weighted gadgets) weights as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let core = self.graph.core();
        let mut obj = serde_json::json!({
            "kind": self.kind.id(),
            "n": core.n(),
            "edges": core.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "core_map": self.core_map,
            "c": self.c,
            "p": self.p,
        });
        if let GadgetGraph::Weighted(w) = &self.graph {
            obj["weights"] = w.weights().iter().map(|x| x.to_string()).collect();
            obj["hub"] = serde_json::json!(w.hub());
            obj["total_order"] = serde_json::json!(w.total_order().to_string());
        }
        obj
    }
}

/// Adds pendants so every vertex reaches the maximum degree of `g`.
/// Returns the edge list and order of G′.
fn equalize(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let delta = g.max_degree();
    let mut edges = g.edges().to_vec();
    let mut next = g.n();
    for v in 0..g.n() {
        for _ in g.degree(v)..delta {
            edges.push((v, next));
            next += 1;
        }
    }
    (next, edges)
}

fn h_from(g: &Graph, kind: GadgetKind, core_map: Vec<Option<usize>>) -> GadgetOutput {
    let (n1, mut edges) = equalize(g);
    let c = n1;
    edges.extend((0..n1).map(|v| (v, c)));
    let leaves = 2 * n1;
    edges.extend((0..leaves).map(|i| (c, c + 1 + i)));
    let graph = build_graph(c + 1 + leaves, &edges).expect("gadget edges are valid");
    GadgetOutput { kind, graph: GadgetGraph::Plain(graph), core_map, c, p: None }
}

/// G′ equalizes degrees with pendants; then a universal `c` with 2|V(G′)| pendants.
pub fn build_h(g: &Graph) -> GadgetOutput {
    h_from(g, GadgetKind::H, (0..g.n()).map(Some).collect())
}

/// Keeps components of order at least 3, returning the kept vertices and the map.
fn prune_small(g: &Graph) -> (Graph, Vec<Option<usize>>) {
    let mut keep: Vec<usize> =
        g.components().into_iter().filter(|c| c.len() > 2).flatten().collect();
    keep.sort_unstable();
    let mut map = vec![None; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        map[v] = Some(i);
    }
    (g.induced(&keep), map)
}

/// As [`build_h`] after dropping components of order at most 2.
pub fn build_h_pruned(g: &Graph) -> GadgetOutput {
    let (kept, map) = prune_small(g);
    if kept.n() == 0 {
        return GadgetOutput {
            kind: GadgetKind::HPruned,
            graph: GadgetGraph::Plain(Graph::empty(1)),
            core_map: map,
            c: 0,
            p: None,
        };
    }
    h_from(&kept, GadgetKind::HPruned, map)
}

/// `g` plus a universal `c` and a pendant `p` on `c`.
pub fn build_x(g: &Graph) -> GadgetOutput {
    let n = g.n();
    let (c, p) = (n, n + 1);
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, c)));
    edges.push((c, p));
    let graph = build_graph(n + 2, &edges).expect("gadget edges are valid");
    GadgetOutput {
        kind: GadgetKind::X,
        graph: GadgetGraph::Plain(graph),
        core_map: (0..n).map(Some).collect(),
        c,
        p: Some(p),
    }
}

fn j_from(g: &Graph, core_map: Vec<Option<usize>>) -> Result<GadgetOutput> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("J needs order at least 2, got {n}")));
    }
    let c = n;
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, c)));
    let base = build_graph(n + 1, &edges)?;
    let four = BigUint::from(4u32);
    let mut weight: Vec<BigUint> =
        (1..=n).map(|i| Pow::pow(&four, (n + i) as u32) + 1u32).collect();
    weight.push(Pow::pow(&four, (4 * n) as u32) + 1u32);
    let wg = VertexWeightedGraph::with_hub(base, weight, Some(c))?;
    Ok(GadgetOutput { kind: GadgetKind::J, graph: GadgetGraph::Weighted(wg), core_map, c, p: None })
}

/// Weighted J: `4^{n+i}` pendants at `v_i` (1-based `i`), universal `c` with `4^{4n}` pendants.
/// `c` is adjacent to every vertex of G₁, pendants included.
pub fn build_j(g: &Graph) -> Result<GadgetOutput> {
    j_from(g, (0..g.n()).map(Some).collect())
}

/// [`build_j`] after dropping components of order at most 2, as used for peri≠.
/// If nothing remains the gadget is `c` with a single pendant.
pub fn build_j_pruned(g: &Graph) -> Result<GadgetOutput> {
    let (kept, map) = prune_small(g);
    if kept.n() == 0 {
        let wg = VertexWeightedGraph::new(Graph::empty(1), vec![BigUint::from(2u32)])?;
        return Ok(GadgetOutput {
            kind: GadgetKind::J,
            graph: GadgetGraph::Weighted(wg),
            core_map: map,
            c: 0,
            p: None,
        });
    }
    j_from(&kept, map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintMeasure {
    Mo,
    Irr,
    Peri,
    Eperi,
    Ecc,
    Eecc,
}

impl ConstraintMeasure {
    fn id(self) -> &'static str {
        match self {
            ConstraintMeasure::Mo => "mo",
            ConstraintMeasure::Irr => "irr",
            ConstraintMeasure::Peri => "peri",
            ConstraintMeasure::Eperi => "eperi",
            ConstraintMeasure::Ecc => "ecc",
            ConstraintMeasure::Eecc => "eecc",
        }
    }
}

/// A measure and whether clique values must all be equal or pairwise distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub measure: ConstraintMeasure,
    pub equal: bool,
}

impl Constraint {
    pub const fn eq(measure: ConstraintMeasure) -> Self {
        Constraint { measure, equal: true }
    }
    pub const fn neq(measure: ConstraintMeasure) -> Self {
        Constraint { measure, equal: false }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.measure.id(), if self.equal { "=" } else { "!=" })
    }
}

impl FromStr for Constraint {
    type Err = Error;
    /// Accepts `mo=`, `mo!=`, `irr=`, ... (`≠` also accepted).
    fn from_str(s: &str) -> Result<Self> {
        let (name, equal) = if let Some(x) = s.strip_suffix("!=") {
            (x, false)
        } else if let Some(x) = s.strip_suffix('≠') {
            (x, false)
        } else if let Some(x) = s.strip_suffix('=') {
            (x, true)
        } else {
            return Err(Error::InvalidParameter(format!("constraint {s:?} must end in = or !=")));
        };
        let measure = match name.to_ascii_lowercase().as_str() {
            "mo" => ConstraintMeasure::Mo,
            "irr" => ConstraintMeasure::Irr,
            "peri" => ConstraintMeasure::Peri,
            "eperi" => ConstraintMeasure::Eperi,
            "ecc" => ConstraintMeasure::Ecc,
            "eecc" => ConstraintMeasure::Eecc,
            _ => return Err(Error::InvalidParameter(format!("unknown measure {name:?}"))),
        };
        Ok(Constraint { measure, equal })
    }
}

/// Per-vertex or per-edge values over the searched core, computed once.
enum Values {
    Vertex(Vec<BigUint>),
    /// Row-major `n × n`, only adjacent pairs filled.
    Edge(usize, Vec<BigUint>),
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

fn edge_table(g: &Graph, mut f: impl FnMut(usize, usize) -> Result<BigUint>) -> Result<Values> {
    let n = g.n();
    let mut t = vec![BigUint::default(); n * n];
    for &(u, v) in g.edges() {
        let x = f(u, v)?;
        t[v * n + u] = x.clone();
        t[u * n + v] = x;
    }
    Ok(Values::Edge(n, t))
}

fn plain_values(g: &Graph, m: ConstraintMeasure) -> Result<Values> {
    let dm = all_pairs(g);
    let ct = || CloserTable::new(&dm);
    Ok(match m {
        ConstraintMeasure::Mo => {
            let ct = ct();
            edge_table(g, |u, v| Ok(ct.diff(u, v).into()))?
        }
        ConstraintMeasure::Irr => {
            edge_table(g, |u, v| Ok((g.degree(u).abs_diff(g.degree(v)) as u64).into()))?
        }
        ConstraintMeasure::Eperi => {
            let ct = ct();
            edge_table(g, |u, v| Ok(ct.eperi((u, v)).into()))?
        }
        ConstraintMeasure::Eecc => edge_table(g, |u, v| Ok(eecc(&dm, (u, v)).into()))?,
        ConstraintMeasure::Peri => {
            let ct = ct();
            Values::Vertex((0..g.n()).map(|v| ct.peri(v).into()).collect())
        }
        ConstraintMeasure::Ecc => {
            Values::Vertex((0..g.n()).map(|v| dm.eccentricity(v).into()).collect())
        }
    })
}

fn weighted_values(wg: &VertexWeightedGraph, m: ConstraintMeasure) -> Result<Values> {
    let wd = WeightedDistances::new(wg);
    let g = wg.base();
    match m {
        ConstraintMeasure::Mo => {
            edge_table(g, |u, v| wd.mostar_difference(Point::Core(u), Point::Core(v)))
        }
        ConstraintMeasure::Irr => edge_table(g, |u, v| {
            Ok(abs_diff(&wg.degree(Point::Core(u)), &wg.degree(Point::Core(v))))
        }),
        ConstraintMeasure::Peri => {
            Ok(Values::Vertex((0..g.n()).map(|v| wd.peri(v)).collect::<Result<_>>()?))
        }
        other => Err(Error::Unsupported(format!(
            "{} on vertex-weighted graphs",
            other.id()
        ))),
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > SUBSET_CAP * 1000 {
            return u128::MAX;
        }
    }
    r
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    values: &'a Values,
    equal: bool,
}

impl Search<'_> {
    /// Whether adding `w` to `clique` keeps the constraint satisfied.
    fn admits(&self, clique: &[usize], w: usize) -> bool {
        match self.values {
            Values::Vertex(val) => {
                if self.equal {
                    clique.first().map_or(true, |&a| val[a] == val[w])
                } else {
                    clique.iter().all(|&a| val[a] != val[w])
                }
            }
            Values::Edge(n, t) => {
                let at = |a: usize, b: usize| &t[a * n + b];
                if self.equal {
                    let reference = match clique {
                        [a, b, ..] => Some(at(*a, *b)),
                        [a] => Some(at(*a, w)),
                        [] => None,
                    };
                    reference.map_or(true, |r| clique.iter().all(|&a| at(a, w) == r))
                } else {
                    let fresh: Vec<&BigUint> = clique.iter().map(|&a| at(a, w)).collect();
                    let distinct_new =
                        fresh.iter().enumerate().all(|(i, x)| !fresh[..i].contains(x));
                    let distinct_old = clique.iter().enumerate().all(|(j, &b)| {
                        clique[..j].iter().all(|&a| !fresh.contains(&at(a, b)))
                    });
                    distinct_new && distinct_old
                }
            }
        }
    }

    fn extend(&self, clique: &mut Vec<usize>, from: usize) -> bool {
        if clique.len() == self.k {
            return true;
        }
        let n = self.g.n();
        let need = self.k - clique.len();
        for w in from..n {
            if n - w < need {
                break;
            }
            if !clique.iter().all(|&a| self.g.has_edge(a, w)) || !self.admits(clique, w) {
                continue;
            }
            clique.push(w);
            if self.extend(clique, w + 1) {
                return true;
            }
            clique.pop();
        }
        false
    }
}

/// Lexicographically first k-clique whose values satisfy `constraint`.
///
/// Values are computed once over the whole graph. For weighted graphs only
/// core vertices are searched, which requires `k >= 4` (bundle points have
/// degree at most 2); Mo, irr and peri are supported there.
pub fn constrained_clique(
    graph: &GadgetGraph,
    k: usize,
    constraint: Constraint,
) -> Result<Option<Vec<usize>>> {
    let g = graph.core();
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let subsets = binomial(g.n(), k);
    if subsets > SUBSET_CAP {
        return Err(Error::CapExceeded { size: subsets, cap: SUBSET_CAP });
    }
    let values = match graph {
        GadgetGraph::Plain(g) => plain_values(g, constraint.measure)?,
        GadgetGraph::Weighted(wg) => {
            if k < 4 {
                return Err(Error::Unsupported(format!(
                    "clique size {k} on a vertex-weighted graph (bundle points may join cliques below 4)"
                )));
            }
            weighted_values(wg, constraint.measure)?
        }
    };
    let search = Search { g, k, values: &values, equal: constraint.equal };
    Ok((0..g.n()).into_par_iter().find_map_first(|first| {
        let mut clique = vec![first];
        search.extend(&mut clique, first + 1).then_some(clique)
    }))
}

/// Plain k-clique existence (first witness in lexicographic order).
pub fn find_clique(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    let subsets = binomial(g.n(), k);
    if subsets > SUBSET_CAP {
        return Err(Error::CapExceeded { size: subsets, cap: SUBSET_CAP });
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let values = Values::Vertex(vec![BigUint::one(); g.n()]);
    let search = Search { g, k, values: &values, equal: true };
    Ok((0..g.n()).find_map(|first| {
        let mut clique = vec![first];
        search.extend(&mut clique, first + 1).then_some(clique)
    }))
}

fn eccentricities_of(dm: &DistanceMatrix) -> Vec<u32> {
    (0..dm.n()).map(|v| dm.eccentricity(v)).collect()
}

/// Polynomial decision for ecc≠: pairs by scan, nothing from 3 upward.
pub fn decide_ecc_neq(g: &Graph, k: usize) -> bool {
    match k {
        0 => true,
        1 => g.n() >= 1,
        2 => {
            let ecc = eccentricities_of(&all_pairs(g));
            g.edges().iter().any(|&(u, v)| ecc[u] != ecc[v])
        }
        _ => false,
    }
}

/// Polynomial decision for eecc≠: any edge suffices for pairs, nothing from 3 upward.
pub fn decide_eecc_neq(g: &Graph, k: usize) -> bool {
    match k {
        0 => true,
        1 => g.n() >= 1,
        2 => g.m() > 0,
        _ => false,
    }
}

/// A gadget paired with the constraint its reduction targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reduction {
    HMoEq,
    HIrrEq,
    HPrunedPeriEq,
    HPrunedEperiEq,
    XEccEq,
    XEeccEq,
    JMoNeq,
    JIrrNeq,
    JPrunedPeriNeq,
}

impl Reduction {
    pub const ALL: [Reduction; 9] = [
        Reduction::HMoEq,
        Reduction::HIrrEq,
        Reduction::HPrunedPeriEq,
        Reduction::HPrunedEperiEq,
        Reduction::XEccEq,
        Reduction::XEeccEq,
        Reduction::JMoNeq,
        Reduction::JIrrNeq,
        Reduction::JPrunedPeriNeq,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Reduction::HMoEq => "H/mo=",
            Reduction::HIrrEq => "H/irr=",
            Reduction::HPrunedPeriEq => "Hp/peri=",
            Reduction::HPrunedEperiEq => "Hp/eperi=",
            Reduction::XEccEq => "X/ecc=",
            Reduction::XEeccEq => "X/eecc=",
            Reduction::JMoNeq => "J/mo!=",
            Reduction::JIrrNeq => "J/irr!=",
            Reduction::JPrunedPeriNeq => "Jp/peri!=",
        }
    }

    pub fn constraint(self) -> Constraint {
        use ConstraintMeasure as M;
        match self {
            Reduction::HMoEq => Constraint::eq(M::Mo),
            Reduction::HIrrEq => Constraint::eq(M::Irr),
            Reduction::HPrunedPeriEq => Constraint::eq(M::Peri),
            Reduction::HPrunedEperiEq => Constraint::eq(M::Eperi),
            Reduction::XEccEq => Constraint::eq(M::Ecc),
            Reduction::XEeccEq => Constraint::eq(M::Eecc),
            Reduction::JMoNeq => Constraint::neq(M::Mo),
            Reduction::JIrrNeq => Constraint::neq(M::Irr),
            Reduction::JPrunedPeriNeq => Constraint::neq(M::Peri),
        }
    }

    /// Clique size sought in the gadget for source size `k`.
    pub fn target(self, k: usize) -> usize {
        match self {
            Reduction::JMoNeq | Reduction::JIrrNeq | Reduction::JPrunedPeriNeq => k + 1,
            _ => k,
        }
    }

    /// Smallest source clique size the reduction is stated for.
    pub fn min_k(self) -> usize {
        match self {
            Reduction::JMoNeq | Reduction::JIrrNeq | Reduction::JPrunedPeriNeq => 3,
            _ => 4,
        }
    }

    pub fn build(self, g: &Graph) -> Result<GadgetOutput> {
        Ok(match self {
            Reduction::HMoEq | Reduction::HIrrEq => build_h(g),
            Reduction::HPrunedPeriEq | Reduction::HPrunedEperiEq => build_h_pruned(g),
            Reduction::XEccEq | Reduction::XEeccEq => build_x(g),
            Reduction::JMoNeq | Reduction::JIrrNeq => build_j(g)?,
            Reduction::JPrunedPeriNeq => build_j_pruned(g)?,
        })
    }
}

impl FromStr for Reduction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('≠', "!=");
        Reduction::ALL
            .into_iter()
            .find(|r| r.id().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown reduction {s:?}")))
    }
}

/// Outcome of checking one instance of a reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub source_clique: Option<Vec<usize>>,
    pub gadget_clique: Option<Vec<usize>>,
}

impl ReductionCheck {
    pub fn agrees(&self) -> bool {
        self.source_clique.is_some() == self.gadget_clique.is_some()
    }
}

/// Solves CLIQUE(g, k) and the constrained problem on the gadget.
pub fn check_reduction(g: &Graph, k: usize, reduction: Reduction) -> Result<ReductionCheck> {
    if k < reduction.min_k() {
        return Err(Error::InvalidParameter(format!(
            "{} is stated for k >= {}, got {k}",
            reduction.id(),
            reduction.min_k()
        )));
    }
    let gadget = reduction.build(g)?;
    let source_clique = find_clique(g, k)?;
    let gadget_clique =
        constrained_clique(&gadget.graph, reduction.target(k), reduction.constraint())?;
    Ok(ReductionCheck { source_clique, gadget_clique })
}

/// True iff CLIQUE(g, k) agrees with the constrained problem on the gadget.
pub fn validate_reduction(g: &Graph, k: usize, reduction: Reduction) -> Result<bool> {
    Ok(check_reduction(g, k, reduction)?.agrees())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::peri_vertex;

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn h_sizes() {
        let h = build_h(&k(3));
        assert_eq!(h.graph.core().n(), 3 + 1 + 6);
        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(build_h(&p3).graph.core().n(), 5 + 1 + 10);
    }

    #[test]
    fn h_pruned_small_cases() {
        let g = build_graph(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let h = build_h_pruned(&g);
        assert_eq!(h.core_map, vec![Some(0), Some(1), Some(2), None, None]);
        let GadgetGraph::Plain(hg) = &h.graph else { panic!() };
        let dm = all_pairs(hg);
        for v in 0..3 {
            assert_eq!(peri_vertex(&dm, v), 1);
        }
        assert_eq!(peri_vertex(&dm, h.c), 0);
        assert_eq!(build_h_pruned(&k(2)).graph.core().n(), 1);
    }

    #[test]
    fn x_ecc_profile() {
        let x = build_x(&k(3));
        let dm = all_pairs(x.graph.core());
        assert_eq!(eccentricities_of(&dm), vec![2, 2, 2, 1, 2]);
    }

    #[test]
    fn j_weights_for_k2() {
        let j = build_j(&k(2)).unwrap();
        let GadgetGraph::Weighted(w) = &j.graph else { panic!() };
        let got: Vec<String> = w.weights().iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["65", "257", "65537"]);
        assert_eq!(w.total_order(), BigUint::from(65_859u32));
        assert!(build_j(&k(1)).is_err());
    }

    #[test]
    fn small_clique_cases() {
        let five = GadgetGraph::Plain(k(5));
        let mo_eq = Constraint::eq(ConstraintMeasure::Mo);
        assert_eq!(constrained_clique(&five, 4, mo_eq).unwrap(), Some(vec![0, 1, 2, 3]));
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(decide_ecc_neq(&p4, 2));
        assert!(!decide_ecc_neq(&k(5), 3));
        assert!(!decide_eecc_neq(&Graph::empty(4), 2));
        let ecc_neq = Constraint::neq(ConstraintMeasure::Ecc);
        assert_eq!(constrained_clique(&GadgetGraph::Plain(p4), 2, ecc_neq).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn constraint_parsing() {
        assert_eq!("mo!=".parse::<Constraint>().unwrap(), Constraint::neq(ConstraintMeasure::Mo));
        assert_eq!("Peri=".parse::<Constraint>().unwrap(), Constraint::eq(ConstraintMeasure::Peri));
        assert!("mo".parse::<Constraint>().is_err());
        assert_eq!("J/mo≠".parse::<Reduction>().unwrap(), Reduction::JMoNeq);
    }
}
