//! Re-derivation of extremal statements by exhaustive search.

use super::{
    mask_connected, mask_graph, pair_list, scan, Direction, ExtremalResult, GraphClass, Objective,
    MAX_CONNECTED_ORDER,
};
use crate::error::Result;
use crate::graph::{all_pairs, Graph};
use crate::measures::terminal_mostar_with;
use rayon::prelude::*;
use serde::Serialize;
use std::ops::RangeInclusive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimGroup {
    /// Statements about free trees.
    Trees,
    /// Statements about all connected graphs of small order.
    Connected,
    /// Exploratory boundary checks, not theorems.
    Probes,
    /// The order-22 tree scan.
    Long,
}

impl std::str::FromStr for ClaimGroup {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(ClaimGroup::Trees),
            "connected" => Ok(ClaimGroup::Connected),
            "probes" => Ok(ClaimGroup::Probes),
            "long" => Ok(ClaimGroup::Long),
            _ => Err(crate::error::Error::InvalidParameter(format!("claim group {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Observation recorded without a pass/fail verdict.
    Finding,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub group: ClaimGroup,
    pub n: usize,
    pub statement: String,
    pub expected: Option<i64>,
    pub observed: i64,
    pub status: ClaimStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub outcomes: Vec<ClaimOutcome>,
    pub passed: usize,
    pub failed: usize,
    pub findings: usize,
}

impl ClaimReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimOutcome> {
        self.outcomes.iter().filter(|o| o.status == ClaimStatus::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub groups: Vec<ClaimGroup>,
    pub trees: RangeInclusive<usize>,
    pub connected: RangeInclusive<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            groups: vec![ClaimGroup::Trees, ClaimGroup::Connected, ClaimGroup::Probes],
            trees: 4..=12,
            connected: 3..=6,
        }
    }
}

fn is_star(w: &[(usize, usize)], n: usize) -> bool {
    let mut deg = vec![0; n];
    for &(u, v) in w {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().any(|&d| d + 1 == n)
}

fn is_path(w: &[(usize, usize)], n: usize) -> bool {
    let mut deg = vec![0; n];
    for &(u, v) in w {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|&d| d <= 2)
}

fn choose2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

struct Builder {
    outcomes: Vec<ClaimOutcome>,
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        id: &'static str,
        group: ClaimGroup,
        n: usize,
        statement: String,
        expected: Option<i64>,
        observed: i64,
        status: ClaimStatus,
        detail: String,
    ) {
        self.outcomes.push(ClaimOutcome { id, group, n, statement, expected, observed, status, detail });
    }

    #[allow(clippy::too_many_arguments)]
    fn equal(&mut self, id: &'static str, group: ClaimGroup, r: &ExtremalResult, expected: i64, statement: String, extra_ok: bool, extra: &str) {
        let ok = r.optimum == expected && extra_ok;
        let detail = if ok {
            format!("{} graphs scanned, {} optimal", r.count_scanned, r.witness_count)
        } else {
            let w = r.witnesses.first().map(|w| format!("{w:?}")).unwrap_or_default();
            format!("observed {} ({} optimal{}); first witness {w}", r.optimum, r.witness_count, extra)
        };
        let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
        self.push(id, group, r.n, statement, Some(expected), r.optimum, status, detail);
    }
}

fn path_eperi(n: usize) -> i64 {
    let n = n as i64;
    if n < 3 {
        0
    } else if n % 2 == 0 {
        (n - 2) * (n - 4) / 2
    } else {
        (n - 3) * (n - 3) / 2
    }
}

/// All legs (maximal pendant paths) attach at one vertex. Paths qualify trivially.
pub fn legs_share_vertex(g: &Graph) -> bool {
    let mut anchor = None;
    for leaf in g.pendant_vertices() {
        let (mut prev, mut cur) = (leaf, g.neighbors(leaf)[0]);
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
            prev = cur;
            cur = next;
        }
        if g.degree(cur) == 1 {
            return true;
        }
        match anchor {
            None => anchor = Some(cur),
            Some(a) if a != cur => return false,
            _ => {}
        }
    }
    true
}

/// Maximum terminal Mostar index over connected graphs of order `n`, and
/// whether every maximizer has all its legs at one vertex.
pub fn terminal_mostar_leg_check(n: usize) -> (i64, u64, Option<Vec<(usize, usize)>>) {
    let pairs = pair_list(n);
    let total = 1u64 << pairs.len();
    let step = 1u64 << 12;
    type Part = (i64, u64, Option<Vec<(usize, usize)>>);
    let parts: Vec<Part> = (0..total.div_ceil(step))
        .into_par_iter()
        .map(|c| {
            let mut best = (i64::MIN, 0u64, None);
            for mask in (c * step..((c + 1) * step).min(total)).map(|m| m as u32) {
                if !mask_connected(n, &pairs, mask) {
                    continue;
                }
                let g = mask_graph(n, &pairs, mask);
                let v = terminal_mostar_with(&g, &all_pairs(&g)) as i64;
                if v > best.0 {
                    best = (v, 0, None);
                }
                if v == best.0 {
                    best.1 += 1;
                    if best.2.is_none() && !legs_share_vertex(&g) {
                        best.2 = Some(g.edges().to_vec());
                    }
                }
            }
            best
        })
        .collect();
    parts.into_iter().fold((i64::MIN, 0, None), |a, b| {
        if b.0 > a.0 {
            b
        } else if b.0 == a.0 {
            (a.0, a.1 + b.1, a.2.or(b.2))
        } else {
            a
        }
    })
}

/// Runs every claim in the selected groups over the configured orders.
pub fn verify_claims(opts: &VerifyOptions) -> Result<ClaimReport> {
    use Direction::*;
    let mut b = Builder { outcomes: Vec::new() };
    let want = |g: ClaimGroup| opts.groups.contains(&g);
    let tree_orders: Vec<usize> = opts.trees.clone().filter(|&n| n >= 1).collect();

    if want(ClaimGroup::Trees) {
        for &n in &tree_orders {
            let ni = n as i64;
            if n >= 4 {
                let r = scan(Objective::Mo, n, Min, GraphClass::Trees)?;
                let uniq = r.witness_count == 1 && is_path(&r.witnesses[0], n);
                b.equal("tree-mo-min", ClaimGroup::Trees, &r, (ni - 1) * (ni - 1) / 2,
                    "minimum Mostar index over trees is floor((n-1)^2/2), only at the path".into(), uniq, ", path not unique");
                let r = scan(Objective::Mo, n, Max, GraphClass::Trees)?;
                let uniq = r.witness_count == 1 && is_star(&r.witnesses[0], n);
                b.equal("tree-mo-max", ClaimGroup::Trees, &r, (ni - 1) * (ni - 2),
                    "maximum Mostar index over trees is (n-1)(n-2), only at the star".into(), uniq, ", star not unique");
            }
            if n >= 3 {
                let r = scan(Objective::MoTerminal, n, Max, GraphClass::Trees)?;
                let uniq = r.witness_count == 1 && is_star(&r.witnesses[0], n);
                b.equal("tree-mo-terminal-max", ClaimGroup::Trees, &r, (ni - 1) * (ni - 3),
                    "maximum terminal Mostar index over trees is (n-1)(n-3), only at the star".into(), uniq, ", star not unique");
            }
            if (7..=22).contains(&n) {
                let r = scan(Objective::MoMinusIrr, n, Max, GraphClass::Trees)?;
                let expected = if n == 22 { 346 } else { ni * ni - 7 * ni + 18 };
                b.equal("tree-mo-minus-irr-max", ClaimGroup::Trees, &r, expected,
                    "maximum of Mo - irr over trees is n^2 - 7n + 18".into(), true, "");
            }
            if n >= 9 {
                let r = scan(Objective::Peri, n, Max, GraphClass::Trees)?;
                b.equal("tree-peri-max", ClaimGroup::Trees, &r, choose2(n),
                    "maximum peripherality over trees is C(n,2)".into(), true, "");
            }
            if n >= 5 {
                let r = scan(Objective::PeriPlusDeg, n, Max, GraphClass::Trees)?;
                b.equal("tree-peri-plus-deg-max", ClaimGroup::Trees, &r, ni,
                    "maximum of peri(v) + deg(v) over tree vertices is n".into(), true, "");
            }
            if n >= 6 {
                let r = scan(Objective::EperiPlusEdeg, n, Max, GraphClass::Trees)?;
                b.equal("tree-eperi-plus-edeg-max", ClaimGroup::Trees, &r, ni - 1,
                    "maximum of eperi(e) + edeg(e) over tree edges is n - 1".into(), true, "");
            }
            if n >= 3 {
                let r = scan(Objective::Eperi, n, Max, GraphClass::Trees)?;
                let p = path_eperi(n);
                let (status, detail) = if r.optimum == p {
                    (ClaimStatus::Pass, "the path attains the tree maximum".to_string())
                } else {
                    (ClaimStatus::Finding, format!("a tree beats the path: {:?}", r.witnesses[0]))
                };
                b.push("tree-eperi-max-vs-path", ClaimGroup::Trees, n,
                    "maximum edge peripherality over trees compared with the path value".into(),
                    Some(p), r.optimum, status, detail);
            }
        }
    }

    if want(ClaimGroup::Probes) {
        for &n in tree_orders.iter().filter(|&&n| (4..=8).contains(&n)) {
            let r = scan(Objective::Peri, n, Max, GraphClass::Trees)?;
            let ok = r.optimum < choose2(n);
            b.push("tree-peri-below-max-small", ClaimGroup::Probes, n,
                "maximum peripherality over trees stays below C(n,2) for n = 4..8".into(),
                Some(choose2(n)), r.optimum,
                if ok { ClaimStatus::Pass } else { ClaimStatus::Fail },
                format!("{} optimal; first witness {:?}", r.witness_count, r.witnesses[0]));
        }
    }

    if want(ClaimGroup::Connected) {
        for n in opts.connected.clone().filter(|&n| (1..=MAX_CONNECTED_ORDER).contains(&n)) {
            let ni = n as i64;
            let r = scan(Objective::PeriPlusDeg, n, Max, GraphClass::Connected)?;
            b.equal("connected-peri-plus-deg-max", ClaimGroup::Connected, &r, 2 * ni - 4,
                "maximum of peri(v) + deg(v) over connected graphs is 2n - 4".into(), true, "");
            if n >= 5 {
                let r = scan(Objective::EperiPlusEdeg, n, Max, GraphClass::Connected)?;
                b.equal("connected-eperi-plus-edeg-max", ClaimGroup::Connected, &r, 2 * ni - 4,
                    "maximum of eperi(e) + edeg(e) over connected graphs is 2n - 4".into(), true, "");
            }
            if n >= 2 {
                let r = scan(Objective::Espr, n, Min, GraphClass::Connected)?;
                b.equal("connected-espr-min", ClaimGroup::Connected, &r, 2 * (ni - 1) * (ni - 2),
                    "minimum edge sum peripherality over connected graphs is 2(n-1)(n-2)".into(), true, "");
            }
            if n >= 3 {
                let (best, count, bad) = terminal_mostar_leg_check(n);
                let ok = bad.is_none();
                b.push("connected-mo-terminal-legs", ClaimGroup::Connected, n,
                    "every connected maximizer of the terminal Mostar index has all legs at one vertex".into(),
                    None, best, if ok { ClaimStatus::Pass } else { ClaimStatus::Fail },
                    match bad {
                        None => format!("{count} labeled maximizers checked"),
                        Some(w) => format!("maximizer with legs at two vertices: {w:?}"),
                    });
            }
        }
    }

    if want(ClaimGroup::Long) {
        let r = scan(Objective::MoMinusIrr, 22, Max, GraphClass::Trees)?;
        b.equal("tree-mo-minus-irr-22", ClaimGroup::Long, &r, 346,
            "maximum of Mo - irr over trees of order 22 is 346".into(), true, "");
    }

    let count = |s| b.outcomes.iter().filter(|o| o.status == s).count();
    let (passed, failed, findings) = (count(ClaimStatus::Pass), count(ClaimStatus::Fail), count(ClaimStatus::Finding));
    Ok(ClaimReport { outcomes: b.outcomes, passed, failed, findings })
}
