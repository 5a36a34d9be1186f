//! Exhaustive search over free trees and small connected graphs.

mod checkpoint;
mod claims;
mod connected;
mod trees;

pub use checkpoint::{scan_trees_resumable, Checkpoint};
pub use claims::{legs_share_vertex, terminal_mostar_leg_check, verify_claims, ClaimGroup, ClaimOutcome, ClaimReport, ClaimStatus, VerifyOptions};
pub use connected::{
    connected_masks, enumerate_connected_graphs, labeled_connected_count, mask_connected,
    mask_graph, pair_list, MAX_CONNECTED_ORDER,
};
pub use trees::{
    free_tree_count, layout_to_graph, level_edges, level_parents, prufer_free_trees,
    tree_canonical_form, tree_sums, FreeTrees, TreeSums,
};

use crate::error::{Error, Result};
use crate::graph::{all_pairs, Graph};
use crate::measures::{edeg, terminal_mostar_with, CloserTable};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// At most this many witnesses are kept, earliest in enumeration order.
pub const WITNESS_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    Mo,
    MoTerminal,
    MoStar,
    Irr,
    MoMinusIrr,
    Peri,
    Spr,
    Eperi,
    Espr,
    /// Maximum over vertices of `peri(v) + deg(v)`.
    PeriPlusDeg,
    /// Maximum over edges of `eperi(e) + edeg(e)`.
    EperiPlusEdeg,
}

impl Objective {
    pub const ALL: [Objective; 11] = [
        Objective::Mo,
        Objective::MoTerminal,
        Objective::MoStar,
        Objective::Irr,
        Objective::MoMinusIrr,
        Objective::Peri,
        Objective::Spr,
        Objective::Eperi,
        Objective::Espr,
        Objective::PeriPlusDeg,
        Objective::EperiPlusEdeg,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Objective::Mo => "mo",
            Objective::MoTerminal => "mo-terminal",
            Objective::MoStar => "mo-star",
            Objective::Irr => "irr",
            Objective::MoMinusIrr => "mo-minus-irr",
            Objective::Peri => "peri",
            Objective::Spr => "spr",
            Objective::Eperi => "eperi",
            Objective::Espr => "espr",
            Objective::PeriPlusDeg => "peri-plus-deg",
            Objective::EperiPlusEdeg => "eperi-plus-edeg",
        }
    }

    fn tree_fast_path(self) -> bool {
        matches!(self, Objective::Mo | Objective::MoTerminal | Objective::Irr | Objective::MoMinusIrr)
    }

    /// Value on an arbitrary graph. Needs a connected graph except for `irr`.
    pub fn evaluate(self, g: &Graph) -> i64 {
        let irr = || crate::measures::irregularity_graph(g) as i64;
        if self == Objective::Irr {
            return irr();
        }
        let dm = all_pairs(g);
        if self == Objective::MoTerminal {
            return terminal_mostar_with(g, &dm) as i64;
        }
        let ct = CloserTable::new(&dm);
        let mo = || g.edges().iter().map(|&(u, v)| ct.diff(u, v)).sum::<u64>() as i64;
        match self {
            Objective::Mo => mo(),
            Objective::MoMinusIrr => mo() - irr(),
            Objective::MoStar => ct.total_mostar() as i64,
            Objective::Peri => ct.peri_total() as i64,
            Objective::Spr => ct.spr_total() as i64,
            Objective::Eperi => g.edges().iter().map(|&e| ct.eperi(e)).sum::<u64>() as i64,
            Objective::Espr => g.edges().iter().map(|&e| ct.espr(e)).sum::<u64>() as i64,
            Objective::PeriPlusDeg => {
                (0..g.n()).map(|v| (ct.peri(v) + g.degree(v) as u64) as i64).max().unwrap_or(0)
            }
            Objective::EperiPlusEdeg => g
                .edges()
                .iter()
                .map(|&e| (ct.eperi(e) + edeg(g, e) as u64) as i64)
                .max()
                .unwrap_or(0),
            Objective::Irr | Objective::MoTerminal => unreachable!(),
        }
    }

    /// Value on a tree given as a level sequence.
    pub fn evaluate_tree(self, layout: &[u8]) -> i64 {
        if self.tree_fast_path() {
            let s = tree_sums(layout);
            return match self {
                Objective::Mo => s.mo,
                Objective::MoTerminal => s.mo_terminal,
                Objective::Irr => s.irr,
                _ => s.mo - s.irr,
            };
        }
        self.evaluate(&layout_to_graph(layout))
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Objective::ALL
            .into_iter()
            .find(|o| o.id() == s)
            .ok_or_else(|| Error::Unsupported(format!("objective {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

impl Direction {
    fn better(self, a: i64, b: i64) -> bool {
        match self {
            Direction::Max => a > b,
            Direction::Min => a < b,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Direction::Max),
            "min" => Ok(Direction::Min),
            _ => Err(Error::InvalidParameter(format!("direction {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Trees,
    Connected,
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(GraphClass::Trees),
            "connected" => Ok(GraphClass::Connected),
            _ => Err(Error::InvalidParameter(format!("graph class {s:?}"))),
        }
    }
}

/// Edge list of a witness in the enumerator's labeling.
pub type Witness = Vec<(usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub objective: Objective,
    pub class: GraphClass,
    pub n: usize,
    pub direction: Direction,
    pub optimum: i64,
    /// First [`WITNESS_CAP`] optimal graphs in enumeration order.
    pub witnesses: Vec<Witness>,
    pub witness_count: u64,
    pub count_scanned: u64,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Acc {
    pub best: Option<i64>,
    pub witnesses: Vec<Witness>,
    pub witness_count: u64,
    pub scanned: u64,
}

impl Acc {
    pub fn offer(&mut self, dir: Direction, value: i64, witness: impl FnOnce() -> Witness) {
        self.scanned += 1;
        match self.best {
            Some(b) if dir.better(b, value) => {}
            Some(b) if b == value => {
                self.witness_count += 1;
                if self.witnesses.len() < WITNESS_CAP {
                    self.witnesses.push(witness());
                }
            }
            _ => {
                self.best = Some(value);
                self.witnesses = vec![witness()];
                self.witness_count = 1;
            }
        }
    }

    /// Appends a later segment of the enumeration.
    pub fn merge(mut self, dir: Direction, later: Acc) -> Acc {
        self.scanned += later.scanned;
        let Some(lb) = later.best else { return self };
        match self.best {
            Some(b) if dir.better(b, lb) => {}
            Some(b) if b == lb => {
                self.witness_count += later.witness_count;
                let room = WITNESS_CAP - self.witnesses.len().min(WITNESS_CAP);
                self.witnesses.extend(later.witnesses.into_iter().take(room));
            }
            _ => {
                self.best = later.best;
                self.witnesses = later.witnesses;
                self.witness_count = later.witness_count;
            }
        }
        self
    }

    fn finish(self, objective: Objective, class: GraphClass, n: usize, direction: Direction) -> Result<ExtremalResult> {
        let optimum = self.best.ok_or_else(|| Error::InvalidParameter(format!("no graphs of order {n}")))?;
        Ok(ExtremalResult {
            objective,
            class,
            n,
            direction,
            optimum,
            witnesses: self.witnesses,
            witness_count: self.witness_count,
            count_scanned: self.scanned,
        })
    }
}

const TREE_CHUNK: usize = 4096;

pub(crate) fn scan_tree_chunk(objective: Objective, direction: Direction, chunk: &[Vec<u8>], acc: &mut Acc) {
    let values: Vec<i64> = if objective.tree_fast_path() {
        chunk.iter().map(|t| objective.evaluate_tree(t)).collect()
    } else {
        chunk.par_iter().map(|t| objective.evaluate_tree(t)).collect()
    };
    for (t, v) in chunk.iter().zip(values) {
        acc.offer(direction, v, || level_edges(t));
    }
}

/// Exact optimum of `objective` over all free trees or connected graphs of order `n`.
pub fn scan(objective: Objective, n: usize, direction: Direction, class: GraphClass) -> Result<ExtremalResult> {
    let acc = match class {
        GraphClass::Trees => {
            let mut it = FreeTrees::new(n)
                .ok_or_else(|| Error::InvalidParameter(format!("tree order must be 1..={}", FreeTrees::MAX_ORDER)))?;
            let mut acc = Acc::default();
            loop {
                let chunk: Vec<Vec<u8>> = it.by_ref().take(TREE_CHUNK).collect();
                if chunk.is_empty() {
                    break;
                }
                scan_tree_chunk(objective, direction, &chunk, &mut acc);
            }
            acc
        }
        GraphClass::Connected => {
            if n == 0 || n > MAX_CONNECTED_ORDER {
                return Err(Error::InvalidParameter(format!(
                    "connected-graph order must be 1..={MAX_CONNECTED_ORDER}"
                )));
            }
            let pairs = pair_list(n);
            let total = 1u64 << pairs.len();
            let step = 1u64 << 12;
            let parts: Vec<Acc> = (0..total.div_ceil(step))
                .into_par_iter()
                .map(|c| {
                    let mut acc = Acc::default();
                    for mask in (c * step..((c + 1) * step).min(total)).map(|m| m as u32) {
                        if !mask_connected(n, &pairs, mask) {
                            continue;
                        }
                        let g = mask_graph(n, &pairs, mask);
                        let v = objective.evaluate(&g);
                        acc.offer(direction, v, || g.edges().to_vec());
                    }
                    acc
                })
                .collect();
            parts.into_iter().fold(Acc::default(), |a, b| a.merge(direction, b))
        }
    };
    acc.finish(objective, class, n, direction)
}
