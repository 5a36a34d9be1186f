use super::{
    betweenness, betweenness_f64, closeness, edeg, eecc, eigenvector, terminal_mostar_with,
    CloserTable, HalfInt,
};
use crate::error::Result;
use crate::graph::{all_pairs, Graph};
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexMeasures {
    pub deg: usize,
    pub ecc: u32,
    pub cc: f64,
    pub bc: f64,
    pub ec: f64,
    pub mo: HalfInt,
    pub mo_star: HalfInt,
    pub peri: u64,
    pub spr: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeMeasures {
    pub u: usize,
    pub v: usize,
    pub mo: u64,
    pub irr: u64,
    pub edeg: usize,
    pub eecc: u32,
    pub eperi: u64,
    pub espr: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMeasures {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub mo: u64,
    pub mo_terminal: u64,
    pub mo_star: u64,
    pub irr: u64,
    pub peri: u64,
    pub spr: u64,
    pub eperi: u64,
    pub espr: u64,
}

/// Every measure of one connected graph, sharing one distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub graph: GraphMeasures,
    pub vertices: Vec<VertexMeasures>,
    pub edges: Vec<EdgeMeasures>,
}

/// Rounds to 12 significant digits.
pub(crate) fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

impl MeasureReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        g.require_connected("measure report")?;
        let dm = all_pairs(g);
        let ct = CloserTable::new(&dm);
        let cc = closeness(&dm)?;
        let bc = betweenness_f64(&betweenness(g)?);
        let ec = eigenvector(g)?.vector;
        let edges: Vec<EdgeMeasures> = g
            .edges()
            .iter()
            .map(|&(u, v)| EdgeMeasures {
                u,
                v,
                mo: ct.diff(u, v),
                irr: g.degree(u).abs_diff(g.degree(v)) as u64,
                edeg: edeg(g, (u, v)),
                eecc: eecc(&dm, (u, v)),
                eperi: ct.eperi((u, v)),
                espr: ct.espr((u, v)),
            })
            .collect();
        let mut mo_twice = vec![0u64; g.n()];
        for e in &edges {
            mo_twice[e.u] += e.mo;
            mo_twice[e.v] += e.mo;
        }
        let vertices: Vec<VertexMeasures> = (0..g.n())
            .map(|v| VertexMeasures {
                deg: g.degree(v),
                ecc: dm.eccentricity(v),
                cc: cc[v],
                bc: bc[v],
                ec: ec[v],
                mo: HalfInt::from_doubled(mo_twice[v]),
                mo_star: ct.total_mostar_vertex(v),
                peri: ct.peri(v),
                spr: ct.spr(v),
            })
            .collect();
        let graph = GraphMeasures {
            n: g.n(),
            m: g.m(),
            diameter: dm.diameter(),
            mo: edges.iter().map(|e| e.mo).sum(),
            mo_terminal: terminal_mostar_with(g, &dm),
            mo_star: ct.total_mostar(),
            irr: edges.iter().map(|e| e.irr).sum(),
            peri: ct.peri_total(),
            spr: ct.spr_total(),
            eperi: edges.iter().map(|e| e.eperi).sum(),
            espr: edges.iter().map(|e| e.espr).sum(),
        };
        Ok(MeasureReport { graph, vertices, edges })
    }

    /// Checks the six decomposition identities; returns the names of any that fail.
    pub fn decomposition_failures(&self) -> Vec<&'static str> {
        let g = &self.graph;
        let vsum = |f: fn(&VertexMeasures) -> HalfInt| self.vertices.iter().map(f).sum::<HalfInt>();
        let checks = [
            ("vertex Mo", vsum(|v| v.mo) == HalfInt::from_int(g.mo)),
            ("vertex Mo*", vsum(|v| v.mo_star) == HalfInt::from_int(g.mo_star)),
            ("edge Mo", self.edges.iter().map(|e| e.mo).sum::<u64>() == g.mo),
            ("irr", self.edges.iter().map(|e| e.irr).sum::<u64>() == g.irr),
            ("peri", self.vertices.iter().map(|v| v.peri).sum::<u64>() == g.peri),
            ("spr", self.vertices.iter().map(|v| v.spr).sum::<u64>() == g.spr),
            ("eperi", self.edges.iter().map(|e| e.eperi).sum::<u64>() == g.eperi),
            ("espr", self.edges.iter().map(|e| e.espr).sum::<u64>() == g.espr),
        ];
        checks.iter().filter(|c| !c.1).map(|c| c.0).collect()
    }

    /// JSON with sorted keys; vertices keyed by id, edges by `"u-v"`.
    pub fn to_json(&self) -> Value {
        let mut vertices = Map::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let mut entry = serde_json::to_value(v).expect("serializable");
            for key in ["cc", "bc", "ec"] {
                let x = entry[key].as_f64().unwrap_or(f64::NAN);
                entry[key] = json!(sig12(x));
            }
            vertices.insert(i.to_string(), entry);
        }
        let mut edges = Map::new();
        for e in &self.edges {
            let mut entry = serde_json::to_value(e).expect("serializable");
            if let Value::Object(m) = &mut entry {
                m.remove("u");
                m.remove("v");
            }
            edges.insert(format!("{}-{}", e.u, e.v), entry);
        }
        json!({
            "graph": serde_json::to_value(&self.graph).expect("serializable"),
            "vertices": vertices,
            "edges": edges,
        })
    }

    /// Two CSV blocks: one row per vertex, then one row per edge.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("kind,id,deg,ecc,cc,bc,ec,mo,mo_star,peri,spr\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                s,
                "vertex,{i},{},{},{},{},{},{},{},{},{}",
                v.deg,
                v.ecc,
                sig12(v.cc),
                sig12(v.bc),
                sig12(v.ec),
                v.mo,
                v.mo_star,
                v.peri,
                v.spr
            );
        }
        s.push_str("kind,id,mo,irr,edeg,eecc,eperi,espr\n");
        for e in &self.edges {
            let _ = writeln!(
                s,
                "edge,{}-{},{},{},{},{},{},{}",
                e.u, e.v, e.mo, e.irr, e.edeg, e.eecc, e.eperi, e.espr
            );
        }
        s
    }
}
