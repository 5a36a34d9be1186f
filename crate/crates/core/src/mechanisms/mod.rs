//! Reactant graphs of chemical mechanisms and rank tables over them.

use crate::error::{Error, Result};
use crate::graph::{all_pairs, build_graph, Graph};
use crate::measures::{betweenness, competition_ranks, distance_sums, eccentricities, edeg, eecc, eigenvector, CloserTable};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Third-body token; never a vertex.
pub const THIRD_BODY: &str = "M";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reaction {
    pub reactants: Vec<String>,
    pub products: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mechanism {
    /// Every name in any reaction, sorted.
    pub species: Vec<String>,
    pub reactions: Vec<Reaction>,
}

fn side(text: &str, line: usize, what: &str) -> Result<Vec<String>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split('+')
        .map(|t| {
            let t = t.trim();
            if t.is_empty() || t.contains(char::is_whitespace) {
                Err(Error::Parse { line, msg: format!("bad {what} token {t:?}") })
            } else {
                Ok(t.to_string())
            }
        })
        .collect()
}

/// Parses lines of the form `R1 + R2 + ... -> P1 + ...`. Products are optional;
/// `#` starts a comment.
pub fn parse_mechanism(text: &str) -> Result<Mechanism> {
    let mut reactions = Vec::new();
    let mut species = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (lhs, rhs) = match body.split_once("->") {
            Some((l, r)) => (l, r),
            None => (body, ""),
        };
        if rhs.contains("->") {
            return Err(Error::Parse { line, msg: "more than one arrow".into() });
        }
        let reactants = side(lhs, line, "reactant")?;
        if reactants.is_empty() {
            return Err(Error::Parse { line, msg: "no reactants".into() });
        }
        let products = side(rhs, line, "product")?;
        species.extend(reactants.iter().cloned());
        species.extend(products.iter().cloned());
        reactions.push(Reaction { reactants, products });
    }
    Ok(Mechanism { species: species.into_iter().collect(), reactions })
}

/// A graph whose vertices are named; vertex ids follow sorted name order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl NamedGraph {
    /// Builds from name pairs; vertex ids are assigned in sorted name order.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)> + Clone, extra: &[&str]) -> Result<Self> {
        let mut names: BTreeSet<&str> = extra.iter().copied().collect();
        for (a, b) in pairs.clone() {
            names.insert(a);
            names.insert(b);
        }
        let names: Vec<String> = names.into_iter().map(str::to_string).collect();
        let id: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop(id[a]));
            }
            edges.push((id[a], id[b]));
        }
        Ok(NamedGraph { graph: build_graph(names.len(), &edges)?, names })
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    /// "A , B" with the endpoints in byte order.
    pub fn edge_label(&self, (u, v): (usize, usize)) -> String {
        let (a, b) = (&self.names[u], &self.names[v]);
        if a <= b {
            format!("{a} , {b}")
        } else {
            format!("{b} , {a}")
        }
    }

    /// Edge-list text, one "A B" pair per line in label order.
    pub fn to_edge_text(&self) -> String {
        let mut labels: Vec<(String, String)> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.names[u].clone(), self.names[v].clone());
                if a <= b { (a, b) } else { (b, a) }
            })
            .collect();
        labels.sort();
        labels.into_iter().map(|(a, b)| format!("{a} {b}\n")).collect()
    }
}

/// Vertices are the distinct non-M reactants; each reaction joins every pair of
/// distinct non-M reactants.
pub fn reactant_graph(mech: &Mechanism) -> Result<NamedGraph> {
    let mut pairs = Vec::new();
    let mut vertices = Vec::new();
    for r in &mech.reactions {
        let rs: BTreeSet<&str> = r.reactants.iter().map(String::as_str).filter(|&s| s != THIRD_BODY).collect();
        let rs: Vec<&str> = rs.into_iter().collect();
        vertices.extend(rs.iter().copied());
        for (i, &a) in rs.iter().enumerate() {
            for &b in &rs[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    NamedGraph::from_pairs(pairs.iter().copied(), &vertices)
}

/// Parses whitespace-separated name pairs, one per line; `#` comments allowed.
pub fn parse_edge_list(text: &str) -> Result<NamedGraph> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let parts: Vec<&str> = body.split_whitespace().collect();
        match parts.as_slice() {
            [a, b] => pairs.push((*a, *b)),
            _ => return Err(Error::Parse { line: i + 1, msg: format!("expected two names, got {body:?}") }),
        }
    }
    NamedGraph::from_pairs(pairs.iter().copied(), &[])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dataset {
    SuperFast,
    Mozart4,
}

impl Dataset {
    pub const ALL: [Dataset; 2] = [Dataset::SuperFast, Dataset::Mozart4];

    pub fn id(self) -> &'static str {
        match self {
            Dataset::SuperFast => "superfast",
            Dataset::Mozart4 => "mozart4",
        }
    }

    fn edges(self) -> &'static str {
        match self {
            Dataset::SuperFast => include_str!("../../data/superfast_edges.txt"),
            Dataset::Mozart4 => include_str!("../../data/mozart4_edges.txt"),
        }
    }

    /// Reference rank table shipped with the crate.
    pub fn reference(self, kind: TableKind) -> RankTable {
        let text = match (self, kind) {
            (Dataset::SuperFast, TableKind::Vertex) => include_str!("../../data/superfast_vertex_ranks.csv"),
            (Dataset::SuperFast, TableKind::Edge) => include_str!("../../data/superfast_edge_ranks.csv"),
            (Dataset::Mozart4, TableKind::Vertex) => include_str!("../../data/mozart4_vertex_ranks.csv"),
            (Dataset::Mozart4, TableKind::Edge) => include_str!("../../data/mozart4_edge_ranks.csv"),
        };
        RankTable::from_csv(text).expect("bundled table is well formed")
    }
}

impl std::str::FromStr for Dataset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Dataset::ALL
            .into_iter()
            .find(|d| d.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown dataset {s:?}")))
    }
}

/// A reaction file for SuperFast whose reactant graph is the built-in edge list.
pub const SUPERFAST_REACTIONS: &str = include_str!("../../data/superfast_reactions.txt");

pub fn builtin(dataset: Dataset) -> NamedGraph {
    parse_edge_list(dataset.edges()).expect("bundled edge list is well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Vertex,
    Edge,
}

impl std::str::FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(TableKind::Vertex),
            "edge" => Ok(TableKind::Edge),
            _ => Err(Error::InvalidParameter(format!("unknown table kind {s:?}"))),
        }
    }
}

pub const VERTEX_COLUMNS: [&str; 7] = ["peri", "spr", "deg", "cc", "bc", "ec", "ecc"];
pub const EDGE_COLUMNS: [&str; 5] = ["edeg", "eecc", "eperi", "espr", "mo"];

/// Competition ranks per column; rows sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankTable {
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<usize>)>,
}

impl RankTable {
    fn assemble(columns: &[&str], labels: Vec<String>, ranks: Vec<Vec<usize>>) -> Self {
        let mut rows: Vec<(String, Vec<usize>)> = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, ranks.iter().map(|col| col[i]).collect()))
            .collect();
        rows.sort();
        RankTable { columns: columns.iter().map(|s| s.to_string()).collect(), rows }
    }

    /// First line is the header `label,col1,...`. Labels may contain spaces.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty table".into() })?;
        let columns: Vec<String> = header.split(',').skip(1).map(|s| s.trim().to_string()).collect();
        let mut rows = Vec::new();
        for (i, line) in lines {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() < columns.len() + 1 {
                return Err(Error::Parse { line: i + 1, msg: "too few fields".into() });
            }
            let split = fields.len() - columns.len();
            let label = fields[..split].join(",").trim().to_string();
            let ranks = fields[split..]
                .iter()
                .map(|f| f.trim().parse::<usize>().map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() }))
                .collect::<Result<Vec<_>>>()?;
            rows.push((label, ranks));
        }
        rows.sort();
        Ok(RankTable { columns, rows })
    }

    pub fn to_csv(&self, label_header: &str) -> String {
        let mut out = format!("{label_header},{}\n", self.columns.join(","));
        for (label, ranks) in &self.rows {
            let r: Vec<String> = ranks.iter().map(usize::to_string).collect();
            out.push_str(&format!("{label},{}\n", r.join(",")));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|(label, ranks)| {
                let mut m = serde_json::Map::new();
                m.insert("label".into(), label.clone().into());
                for (c, r) in self.columns.iter().zip(ranks) {
                    m.insert(c.clone(), (*r).into());
                }
                serde_json::Value::Object(m)
            })
            .collect();
        serde_json::json!({ "columns": self.columns, "rows": rows })
    }

    pub fn get(&self, label: &str, column: &str) -> Option<usize> {
        let c = self.columns.iter().position(|x| x == column)?;
        let r = self.rows.binary_search_by(|(l, _)| l.as_str().cmp(label)).ok()?;
        Some(self.rows[r].1[c])
    }
}

/// Vertex table: peri, spr ascending; deg, cc, bc, ec descending; ecc ascending.
/// Edge table: edeg descending; eecc, eperi, espr, Mo ascending.
pub fn rank_table(ng: &NamedGraph, kind: TableKind) -> Result<RankTable> {
    let g = &ng.graph;
    g.require_connected("rank table")?;
    let dm = all_pairs(g);
    let ct = CloserTable::new(&dm);
    match kind {
        TableKind::Vertex => {
            let n = g.n();
            let peri: Vec<u64> = (0..n).map(|v| ct.peri(v)).collect();
            let spr: Vec<u64> = (0..n).map(|v| ct.spr(v)).collect();
            let deg = g.degrees();
            // Closeness descending is distance sum ascending.
            let dist = distance_sums(&dm)?;
            let bc = betweenness(g)?;
            let ec = eigenvector(g)?.rank_keys();
            let ecc = eccentricities(&dm);
            let ranks = vec![
                competition_ranks(&peri, false),
                competition_ranks(&spr, false),
                competition_ranks(&deg, true),
                competition_ranks(&dist, false),
                competition_ranks(&bc, true),
                competition_ranks(&ec, true),
                competition_ranks(&ecc, false),
            ];
            Ok(RankTable::assemble(&VERTEX_COLUMNS, ng.names.clone(), ranks))
        }
        TableKind::Edge => {
            let edges = g.edges();
            let edeg_v: Vec<usize> = edges.iter().map(|&e| edeg(g, e)).collect();
            let eecc_v: Vec<u32> = edges.iter().map(|&e| eecc(&dm, e)).collect();
            let eperi: Vec<u64> = edges.iter().map(|&e| ct.eperi(e)).collect();
            let espr: Vec<u64> = edges.iter().map(|&e| ct.espr(e)).collect();
            let mo: Vec<u64> = edges.iter().map(|&(u, v)| ct.diff(u, v)).collect();
            let ranks = vec![
                competition_ranks(&edeg_v, true),
                competition_ranks(&eecc_v, false),
                competition_ranks(&eperi, false),
                competition_ranks(&espr, false),
                competition_ranks(&mo, false),
            ];
            let labels = edges.iter().map(|&e| ng.edge_label(e)).collect();
            Ok(RankTable::assemble(&EDGE_COLUMNS, labels, ranks))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: String,
    pub column: String,
    pub computed: usize,
    pub reference: usize,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: computed {}, reference {}", self.row, self.column, self.computed, self.reference)
    }
}

/// Cell-by-cell differences. Row labels and columns must match exactly.
pub fn compare_tables(computed: &RankTable, reference: &RankTable) -> Result<Vec<Mismatch>> {
    if computed.columns != reference.columns {
        return Err(Error::ShapeMismatch(format!(
            "columns {:?} vs {:?}",
            computed.columns, reference.columns
        )));
    }
    let a: Vec<&String> = computed.rows.iter().map(|r| &r.0).collect();
    let b: Vec<&String> = reference.rows.iter().map(|r| &r.0).collect();
    if a != b {
        let only_a: Vec<_> = a.iter().filter(|x| !b.contains(x)).collect();
        let only_b: Vec<_> = b.iter().filter(|x| !a.contains(x)).collect();
        return Err(Error::ShapeMismatch(format!(
            "rows differ: only computed {only_a:?}, only reference {only_b:?}"
        )));
    }
    let mut out = Vec::new();
    for ((label, x), (_, y)) in computed.rows.iter().zip(&reference.rows) {
        for ((col, &cx), &cy) in computed.columns.iter().zip(x).zip(y) {
            if cx != cy {
                out.push(Mismatch { row: label.clone(), column: col.clone(), computed: cx, reference: cy });
            }
        }
    }
    Ok(out)
}
