//! Exact values proved for specific families, used as oracles against direct computation.

use super::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{all_pairs, Graph};
use crate::measures::{
    edeg, eecc, irregularity_graph, terminal_mostar_with, CloserTable,
};
use num_rational::Ratio;
use std::fmt;
use std::str::FromStr;

/// Exact rational value.
pub type Exact = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Order,
    Size,
    Mo,
    MoTerminal,
    MoStar,
    Irr,
    Peri,
    Spr,
    Eperi,
    Espr,
    Edeg,
    Eecc,
}

impl Measure {
    pub const ALL: [Measure; 12] = [
        Measure::Order,
        Measure::Size,
        Measure::Mo,
        Measure::MoTerminal,
        Measure::MoStar,
        Measure::Irr,
        Measure::Peri,
        Measure::Spr,
        Measure::Eperi,
        Measure::Espr,
        Measure::Edeg,
        Measure::Eecc,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Measure::Order => "order",
            Measure::Size => "size",
            Measure::Mo => "mo",
            Measure::MoTerminal => "mo-terminal",
            Measure::MoStar => "mo-star",
            Measure::Irr => "irr",
            Measure::Peri => "peri",
            Measure::Spr => "spr",
            Measure::Eperi => "eperi",
            Measure::Espr => "espr",
            Measure::Edeg => "edeg",
            Measure::Eecc => "eecc",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown measure {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub family: FamilySpec,
    pub measure: Measure,
    pub value: Exact,
    pub source: &'static str,
}

fn int(x: i128) -> Exact {
    Exact::from_integer(x)
}

fn frac(num: i128, den: i128) -> Exact {
    Exact::new(num, den)
}

fn choose2(x: i128) -> i128 {
    x * (x - 1) / 2
}

/// Leg lengths when the family is a spider with a center of degree >= 2.
fn spider_legs(spec: &FamilySpec) -> Option<Vec<usize>> {
    use FamilySpec::*;
    let legs = match spec {
        Path { n } if *n >= 3 => vec![(n - 1) / 2, n / 2],
        Star { n } => vec![1; *n],
        Spider { legs } => legs.clone(),
        BalancedSpider { a, b } => vec![*b; *a],
        PeriMaxSpider { n } => FamilySpec::peri_max_legs(*n).to_vec(),
        Broom { a, b } => {
            let mut l = vec![1; *a];
            l.push(*b);
            l
        }
        _ => return None,
    };
    (legs.len() >= 2).then_some(legs)
}

fn factorial_products(m: i128) -> Vec<i128> {
    // P(i) = prod_{j=1}^{i} (m - 1 - j), i = 0..=m-2
    let mut p = vec![1i128];
    for i in 1..=m - 2 {
        p.push(p[(i - 1) as usize] * (m - 1 - i));
    }
    p
}

/// Graph-level closed form, or `None` when no exact theorem covers the pair.
pub fn closed_form(spec: &FamilySpec, measure: Measure) -> Option<ClosedForm> {
    use FamilySpec::*;
    use Measure::*;
    spec.validate().ok()?;
    let hit = |value: Exact, source: &'static str| {
        Some(ClosedForm { family: spec.clone(), measure, value, source })
    };
    if measure == MoTerminal {
        if let Some(legs) = spider_legs(spec) {
            let k = legs.len() as i128;
            let n = 1 + legs.iter().sum::<usize>() as i128;
            return hit(int((k - 2) * (n - 1)), "spider terminal Mostar index (k-2)(n-1)");
        }
    }
    match (spec, measure) {
        (Path { n }, _) => {
            let n = *n as i128;
            match measure {
                Order => hit(int(n), "path order"),
                Size => hit(int(n - 1), "path size"),
                Mo => hit(int((n - 1) * (n - 1) / 2), "tree minimum Mostar index floor((n-1)^2/2), attained by the path"),
                Peri => {
                    let v = if n % 2 == 0 { n * (n - 2) / 2 } else { (n - 1) * (n - 1) / 2 };
                    hit(int(v), "path peripherality")
                }
                Eperi if n >= 3 => {
                    let v = if n % 2 == 0 { (n - 2) * (n - 4) / 2 } else { (n - 3) * (n - 3) / 2 };
                    hit(int(v), "path edge peripherality")
                }
                Spr if n >= 2 => {
                    let base = frac(n * n * (n - 1), 2);
                    let v = if n % 2 == 0 {
                        base - frac(n * (n - 2), 4)
                    } else {
                        base - frac((n - 1) * (n - 1), 4)
                    };
                    hit(v, "path sum peripherality")
                }
                _ => None,
            }
        }
        (Cycle { n }, _) => {
            let n = *n as i128;
            match measure {
                Order => hit(int(n), "cycle order"),
                Size => hit(int(n), "cycle size"),
                Mo | Peri | Eperi => hit(int(0), "vertex-transitive graphs are balanced"),
                MoTerminal => hit(int(0), "cycles have no leaves"),
                Spr => {
                    let base = n * n * (n - 1) / 2;
                    let v = if n % 2 == 0 { base - n * (n - 2) / 2 } else { base - n * (n - 1) / 2 };
                    hit(int(v), "cycle sum peripherality")
                }
                _ => None,
            }
        }
        (Complete { n }, _) => {
            let n = *n as i128;
            match measure {
                Order => hit(int(n), "complete graph order"),
                Size => hit(int(choose2(n)), "complete graph size"),
                Mo | Peri | Eperi => hit(int(0), "vertex-transitive graphs are balanced"),
                Spr if n >= 2 => hit(int(n * n - n), "complete graph sum peripherality n^2-n"),
                Espr if n >= 2 => hit(int(n * (n - 1) * (n - 2)), "complete graph edge sum peripherality n(n-1)(n-2)"),
                _ => None,
            }
        }
        (CompleteBipartite { m, n }, _) => {
            let (m, n) = (*m as i128, *n as i128);
            match measure {
                Order => hit(int(m + n), "complete bipartite order"),
                Size => hit(int(m * n), "complete bipartite size"),
                Mo => hit(int(m * n * (m - n).abs()), "complete bipartite Mostar index x(n-x)(n-2x)"),
                Spr => hit(int(m * (m * n + m - 1) + n * (m * n + n - 1)), "complete bipartite sum peripherality"),
                Espr => hit(int(m * n * (2 * m * n - 2)), "complete bipartite edge sum peripherality mn(2mn-2)"),
                Peri => hit(int(if m == n { 0 } else { m * n }), "complete bipartite peripherality"),
                Eperi => hit(int(0), "complete bipartite edge peripherality is zero"),
                _ => None,
            }
        }
        (Star { n }, _) if *n >= 2 => {
            let n = *n as i128;
            match measure {
                Order => hit(int(n + 1), "star order"),
                Size => hit(int(n), "star size"),
                Mo => hit(int(n * (n - 1)), "tree maximum Mostar index (n-1)(n-2), attained by the star"),
                Irr => hit(int(n * (n - 1)), "star irregularity a(a-1)"),
                Peri => hit(int(n), "star peripherality"),
                Spr => hit(int(2 * n * n), "star sum peripherality 2n^2"),
                Eperi => hit(int(0), "star edge peripherality"),
                Espr => hit(int(2 * n * n - 2 * n), "star edge sum peripherality 2n^2-2n"),
                _ => None,
            }
        }
        (BalancedSpider { a, b }, _) => {
            let (a, b) = (*a as i128, *b as i128);
            let n = a * b + 1;
            match measure {
                Order => hit(int(n), "balanced spider order ab+1"),
                Size => hit(int(n - 1), "tree size"),
                Irr => hit(int(a * (a - 1)), "balanced spider irregularity a(a-1)"),
                Mo => hit(int(a * a * b * b - a * b * b), "balanced spider Mostar index a^2b^2-ab^2"),
                MoStar => hit(
                    frac(
                        (n - 1)
                            * (3 * a * b * n - 5 * a * b * b - 3 * a * n + 3 * a * b + 2 * a + 2 * b * b - 9 * b
                                + 6 * n
                                - 5),
                        6,
                    ),
                    "balanced spider total Mostar index",
                ),
                Spr => {
                    let base = frac(n * n * (n - 1), 2);
                    let v = if b % 2 == 0 {
                        base - frac(a * b * b * (2 * a * a - 5 * a + 4), 4)
                    } else {
                        base - (frac(a * a * a * b * b, 2) - frac(5 * a * a * b * b, 4) + frac(a * a, 4)
                            + int(a * b * b)
                            - frac(a, 2))
                    };
                    hit(v, "balanced spider sum peripherality")
                }
                Peri => hit(int(choose2(n) - b * choose2(a)), "balanced spider peripherality C(n,2)-bC(a,2)"),
                Eperi => hit(
                    int(n - 1 - a + a * a * ((b - 1) * (b - 2) / 2)),
                    "balanced spider edge peripherality",
                ),
                _ => None,
            }
        }
        (FactorialTree { m }, _) => {
            let m = *m as i128;
            let p = factorial_products(m);
            let s: i128 = p.iter().sum();
            let (v, e) = (1 + m * s, m * s);
            match measure {
                Order => hit(int(v), "factorial tree order"),
                Size => hit(int(e), "factorial tree size"),
                Irr => hit(int(e), "factorial tree irregularity"),
                Mo => {
                    let inner: i128 = (1..=m - 1)
                        .map(|k| p[(k - 1) as usize..=(m - 2) as usize].iter().sum::<i128>())
                        .sum();
                    hit(int(e * v - 2 * m * inner), "factorial tree Mostar index")
                }
                _ => None,
            }
        }
        (FullMaryTree { m, d }, _) => {
            let (m, d) = (*m as i128, *d as i128);
            let v = (m.pow(d as u32 + 1) - 1) / (m - 1);
            match measure {
                Order => hit(int(v), "full m-ary tree order"),
                Size => hit(int(v - 1), "tree size"),
                Irr if d >= 2 => hit(int(m + m.pow(d as u32 + 1)), "full m-ary tree irregularity m+m^(d+1)"),
                Mo => hit(
                    int(v * v - v) - int(2 * d) * (int(v) + frac(1, m - 1)) + frac(2 * (v - 1), m - 1),
                    "full m-ary tree Mostar index",
                ),
                _ => None,
            }
        }
        (FiveLayer { n }, _) => {
            let n = *n as i128;
            match measure {
                Order => hit(int(5 * n), "five-layer order"),
                Size => hit(int(4 * n * n), "five-layer size 4n^2"),
                _ => None,
            }
        }
        (PeriMaxSpider { n }, Peri) => hit(int(choose2(*n as i128)), "three-leg spider with peri = C(n,2)"),
        _ => None,
    }
}

/// Per-vertex closed form.
pub fn closed_form_vertex(spec: &FamilySpec, measure: Measure, v: usize) -> Option<Exact> {
    use FamilySpec::*;
    use Measure::*;
    spec.validate().ok()?;
    match (spec, measure) {
        (Path { n }, Spr) if *n >= 2 && v < *n => {
            let (n, i) = (*n as i128, v as i128 + 1);
            let lead = frac(3 * i * i, 2) - frac(3 * (1 + n) * i, 2);
            Some(if n % 2 == 0 {
                lead + int(1) + frac(3 * n * n, 4)
            } else if i % 2 == 0 {
                lead + int(1) + frac(3 * n * n + 1, 4)
            } else {
                lead + frac(3, 4) + frac(3 * n * n, 4)
            })
        }
        (Path { n }, Peri) if *n >= 3 && v < *n => {
            let n = *n;
            if n % 2 == 0 {
                let i = (n / 2 - 1).abs_diff(v).min((n / 2).abs_diff(v));
                Some(int(2 * i as i128))
            } else {
                let i = ((n - 1) / 2).abs_diff(v) as i128;
                Some(int(if i == 0 { 0 } else { 2 * i - 1 }))
            }
        }
        (Complete { n }, Spr) if v < *n => Some(int(*n as i128 - 1)),
        (Complete { n } | Cycle { n }, Peri) if v < *n => Some(int(0)),
        (CompleteBipartite { m, n }, Spr | Peri) if v < m + n => {
            let (mm, nn) = (*m as i128, *n as i128);
            let left = v < *m;
            Some(int(match measure {
                Spr if left => mm * nn + mm - 1,
                Spr => mm * nn + nn - 1,
                _ if mm == nn => 0,
                _ if (mm < nn) == left => 0,
                _ => mm.min(nn),
            }))
        }
        (Star { n }, Peri | Spr) if *n >= 2 && v <= *n => {
            let n = *n as i128;
            Some(int(match (measure, v) {
                (Peri, 0) => 0,
                (Peri, _) => 1,
                (_, 0) => n,
                _ => 2 * n - 1,
            }))
        }
        (BalancedSpider { a, b }, Peri) if v <= a * b => {
            if v == 0 {
                return Some(int(0));
            }
            let j = ((v - 1) % b + 1) as i128;
            Some(int(1 + *a as i128 * (j - 1)))
        }
        _ => None,
    }
}

/// Per-edge closed form.
pub fn closed_form_edge(spec: &FamilySpec, measure: Measure, e: (usize, usize)) -> Option<Exact> {
    use FamilySpec::*;
    use Measure::*;
    spec.validate().ok()?;
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    match (spec, measure) {
        (Path { n }, Eperi) if *n >= 3 && v == u + 1 && v < *n => {
            let n = *n;
            if n % 2 == 0 {
                let (c1, c2) = (n / 2 - 1, n / 2);
                let i = [u, v].iter().map(|&x| x.abs_diff(c1).min(x.abs_diff(c2))).min()?;
                Some(int(2 * i as i128))
            } else {
                let c = (n - 1) / 2;
                let i = u.abs_diff(c).min(v.abs_diff(c)) as i128;
                Some(int(if i == 0 { 0 } else { 2 * i - 1 }))
            }
        }
        (Path { n }, Eecc) if *n >= 2 && v == u + 1 => {
            let n = *n;
            let k = n / 2;
            if n % 2 == 0 && u + 1 == k {
                Some(int(k as i128 - 1))
            } else if n % 2 == 1 && (v == k || u == k) {
                Some(int(k as i128))
            } else {
                None
            }
        }
        (Complete { n }, Espr) if v < *n => Some(int(2 * (*n as i128 - 2))),
        (Complete { n } | Cycle { n }, Eperi) if v < *n => Some(int(0)),
        (CompleteBipartite { m, n }, Espr | Eperi) if u < *m && v >= *m && v < m + n => {
            Some(int(if measure == Espr { 2 * (*m * *n) as i128 - 2 } else { 0 }))
        }
        (Star { n }, Espr | Eperi) if *n >= 2 && u == 0 && v <= *n => {
            Some(int(if measure == Espr { 2 * *n as i128 - 2 } else { 0 }))
        }
        (BalancedSpider { b, .. }, Eperi) => {
            let a = match spec {
                BalancedSpider { a, .. } => *a as i128,
                _ => unreachable!(),
            };
            if u == 0 {
                return Some(int(0));
            }
            // Leg edge between depths x+1 and x+2.
            let x = ((u - 1) % b) as i128;
            Some(int(1 + a * x))
        }
        (TwoStarBridge { m, n }, Edeg) if u == 0 && v == *m => Some(int((m + n) as i128 - 2)),
        (OverlapStar { m, .. }, Edeg) if u == 0 && v == *m => Some(int(*m as i128 - 1)),
        _ => None,
    }
}

/// Computes a graph-level measure directly.
pub fn evaluate(g: &Graph, measure: Measure) -> Result<Exact> {
    use Measure::*;
    let value = match measure {
        Order => g.n() as i128,
        Size => g.m() as i128,
        Irr => irregularity_graph(g) as i128,
        Edeg | Eecc => {
            return Err(Error::Unsupported(format!("{measure} is an edge measure")));
        }
        _ => {
            g.require_connected("graph measure")?;
            let dm = all_pairs(g);
            if measure == MoTerminal {
                return Ok(int(terminal_mostar_with(g, &dm) as i128));
            }
            let ct = CloserTable::new(&dm);
            (match measure {
                Mo => g.edges().iter().map(|&(u, v)| ct.diff(u, v)).sum(),
                MoStar => ct.total_mostar(),
                Peri => ct.peri_total(),
                Spr => ct.spr_total(),
                Eperi => g.edges().iter().map(|&e| ct.eperi(e)).sum(),
                Espr => g.edges().iter().map(|&e| ct.espr(e)).sum(),
                _ => unreachable!(),
            }) as i128
        }
    };
    Ok(int(value))
}

/// Direct per-vertex values (`peri`, `spr`, `mo-star` as a half-integer).
pub fn evaluate_vertices(g: &Graph, measure: Measure) -> Result<Vec<Exact>> {
    g.require_connected("vertex measure")?;
    let ct = CloserTable::new(&all_pairs(g));
    (0..g.n())
        .map(|v| match measure {
            Measure::Peri => Ok(int(ct.peri(v) as i128)),
            Measure::Spr => Ok(int(ct.spr(v) as i128)),
            Measure::MoStar => Ok(frac(ct.total_mostar_vertex(v).doubled() as i128, 2)),
            _ => Err(Error::Unsupported(format!("{measure} is not a vertex measure"))),
        })
        .collect()
}

/// Direct per-edge values, aligned with `g.edges()`.
pub fn evaluate_edges(g: &Graph, measure: Measure) -> Result<Vec<Exact>> {
    g.require_connected("edge measure")?;
    let dm = all_pairs(g);
    let ct = CloserTable::new(&dm);
    g.edges()
        .iter()
        .map(|&e| {
            Ok(int(match measure {
                Measure::Mo => ct.diff(e.0, e.1) as i128,
                Measure::Irr => g.degree(e.0).abs_diff(g.degree(e.1)) as i128,
                Measure::Eperi => ct.eperi(e) as i128,
                Measure::Espr => ct.espr(e) as i128,
                Measure::Edeg => edeg(g, e) as i128,
                Measure::Eecc => eecc(&dm, e) as i128,
                _ => return Err(Error::Unsupported(format!("{measure} is not an edge measure"))),
            }))
        })
        .collect()
}

/// One closed-form value next to its direct computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub family: String,
    pub measure: Measure,
    /// `graph`, `vertex i` or `edge u-v`.
    pub scope: String,
    pub expected: Exact,
    pub computed: Exact,
}

impl OracleCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.computed
    }
}

/// Every graph-, vertex- and edge-level closed form for `spec`, each paired with
/// the value computed on the generated graph.
pub fn check_family(spec: &FamilySpec) -> Result<Vec<OracleCheck>> {
    let g = spec.generate()?;
    let family = spec.to_string();
    let mut out = Vec::new();
    let mut push = |measure, scope: String, expected, computed| {
        out.push(OracleCheck { family: family.clone(), measure, scope, expected, computed });
    };
    for m in Measure::ALL {
        if let Some(cf) = closed_form(spec, m) {
            push(m, "graph".into(), cf.value, evaluate(&g, m)?);
        }
        let per_vertex: Vec<(usize, Exact)> =
            (0..g.n()).filter_map(|v| closed_form_vertex(spec, m, v).map(|x| (v, x))).collect();
        if !per_vertex.is_empty() {
            let direct = evaluate_vertices(&g, m)?;
            for (v, x) in per_vertex {
                push(m, format!("vertex {v}"), x, direct[v]);
            }
        }
        let per_edge: Vec<(usize, Exact)> = g
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| closed_form_edge(spec, m, e).map(|x| (i, x)))
            .collect();
        if !per_edge.is_empty() {
            let direct = evaluate_edges(&g, m)?;
            for (i, x) in per_edge {
                let (u, v) = g.edges()[i];
                push(m, format!("edge {u}-{v}"), x, direct[i]);
            }
        }
    }
    Ok(out)
}

/// Parameter grid for the oracle suite: multi-parameter families up to 12 per
/// parameter, single-parameter families further, every graph of order at most 400.
pub fn default_grid() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut grid = Vec::new();
    grid.extend((1..=60).map(|n| Path { n }));
    grid.extend((3..=40).map(|n| Cycle { n }));
    grid.extend((1..=30).map(|n| Complete { n }));
    grid.extend((2..=40).map(|n| Star { n }));
    for m in 1..=12 {
        grid.extend((1..=12).map(|n| CompleteBipartite { m, n }));
    }
    for a in 2..=12 {
        grid.extend((1..=12).map(|b| BalancedSpider { a, b }));
    }
    for legs in [vec![1, 2], vec![2, 3, 4], vec![1, 1, 5, 7], vec![3, 3, 3, 3, 3], vec![1, 2, 3, 4, 5, 6]] {
        grid.push(Spider { legs });
    }
    grid.extend((2..=6).map(|m| FactorialTree { m }));
    for m in 2..=6usize {
        let order = |d: usize| (m.pow(d as u32 + 1) - 1) / (m - 1);
        grid.extend((1..=12).take_while(|&d| order(d) <= 400).map(|d| FullMaryTree { m, d }));
    }
    grid.extend((10..=60).map(|n| PeriMaxSpider { n }));
    for a in 1..=8 {
        grid.extend((1..=12).map(|b| Broom { a, b }));
    }
    for m in 1..=8 {
        grid.extend((1..=8).map(|n| TwoStarBridge { m, n }));
        grid.extend((1..=m).filter(|_| m >= 2).map(|n| OverlapStar { m, n }));
    }
    grid.extend((1..=12).map(|n| FiveLayer { n }));
    grid
}

/// Leg vertex `v_j` of `Broom(a, b)` (`v_0` is the center).
pub fn broom_vertex(a: usize, j: usize) -> usize {
    if j == 0 { 0 } else { a + j }
}

/// Leg positions `(j, j+1)` of the edges of minimum Mostar index in `Broom(a, b)`, `b > a`.
pub fn broom_min_mostar_edge(a: usize, b: usize) -> Result<Vec<(usize, usize)>> {
    if a < 1 || b <= a {
        return Err(Error::InvalidParameter(format!("broom formula needs b > a >= 1, got a={a}, b={b}")));
    }
    Ok(if (a + b + 1) % 2 == 0 {
        let j = (b - a - 1) / 2;
        vec![(j, j + 1)]
    } else {
        let j = (b - a) / 2;
        vec![(j - 1, j), (j, j + 1)]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let v = |s: FamilySpec, m| closed_form(&s, m).unwrap().value;
        assert_eq!(v(FamilySpec::CompleteBipartite { m: 2, n: 3 }, Measure::Mo), int(6));
        assert_eq!(v(FamilySpec::BalancedSpider { a: 3, b: 2 }, Measure::Spr), int(126));
        assert_eq!(v(FamilySpec::FullMaryTree { m: 2, d: 2 }, Measure::Mo), int(22));
        assert_eq!(v(FamilySpec::Cycle { n: 8 }, Measure::Peri), int(0));
        assert_eq!(v(FamilySpec::FactorialTree { m: 3 }, Measure::Size), int(6));
        assert!(closed_form(&FamilySpec::FiveLayer { n: 2 }, Measure::Eperi).is_none());
    }

    #[test]
    fn broom_positions() {
        assert_eq!(broom_min_mostar_edge(2, 5).unwrap(), vec![(1, 2)]);
        assert_eq!(broom_min_mostar_edge(2, 6).unwrap(), vec![(1, 2), (2, 3)]);
        assert!(broom_min_mostar_edge(3, 3).is_err());
    }

    #[test]
    fn measure_ids_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.id().parse::<Measure>().unwrap(), m);
        }
    }
}
