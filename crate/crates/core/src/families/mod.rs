//! Parametric graph families with fixed vertex numbering.
//!
//! Numbering: paths run `0..n`; spiders put the center at 0 and number each
//! leg outward, leg after leg; trees are numbered breadth-first from the root;
//! bipartite graphs list the left part first.

mod closed_form;

pub use closed_form::{
    broom_min_mostar_edge, broom_vertex, check_family, closed_form, closed_form_edge, closed_form_vertex, default_grid,
    evaluate, evaluate_edges, evaluate_vertices, ClosedForm, Exact, Measure, OracleCheck,
};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::measures::mostar_graph;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    /// `K_{1,n}`: center 0 and `n` leaves.
    Star { n: usize },
    Spider { legs: Vec<usize> },
    BalancedSpider { a: usize, b: usize },
    KThickSpider { a: usize, b: usize, k: usize },
    FactorialTree { m: usize },
    FullMaryTree { m: usize, d: usize },
    /// Star `K_{1,n}` with each leaf blown up into an `m`-clique.
    CliqueStar { m: usize, n: usize },
    /// Balanced spider `S_{a,b}` with each leaf blown up into an `m`-clique.
    CliqueSpider { a: usize, b: usize, m: usize },
    /// Disjoint union of the parts plus a universal vertex 0.
    UniversalJoin { parts: Vec<FamilySpec> },
    /// Five parts of size `n`, consecutive parts completely joined.
    FiveLayer { n: usize },
    /// Three-leg spider of order `n` with every vertex pair unbalanced.
    PeriMaxSpider { n: usize },
    /// `K_{1,a}` plus a leg of length `b` at the center.
    Broom { a: usize, b: usize },
    /// `K_{1,m-1}` and `K_{1,n-1}` with centers 0 and `m` joined.
    TwoStarBridge { m: usize, n: usize },
    /// `K_{1,m-1}` plus vertex `m` joined to the center and to `n - 1` leaves.
    OverlapStar { m: usize, n: usize },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl FamilySpec {
    /// Tag and parameters as accepted by [`FamilySpec::parse`].
    pub fn tag(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Complete { .. } => "complete",
            CompleteBipartite { .. } => "complete-bipartite",
            Star { .. } => "star",
            Spider { .. } => "spider",
            BalancedSpider { .. } => "balanced-spider",
            KThickSpider { .. } => "k-thick-spider",
            FactorialTree { .. } => "factorial-tree",
            FullMaryTree { .. } => "full-mary-tree",
            CliqueStar { .. } => "clique-star",
            CliqueSpider { .. } => "clique-spider",
            UniversalJoin { .. } => "universal-join",
            FiveLayer { .. } => "five-layer",
            PeriMaxSpider { .. } => "peri-max-spider",
            Broom { .. } => "broom",
            TwoStarBridge { .. } => "two-star-bridge",
            OverlapStar { .. } => "overlap-star",
        }
    }

    pub const TAGS: [&'static str; 17] = [
        "path",
        "cycle",
        "complete",
        "complete-bipartite",
        "star",
        "spider",
        "balanced-spider",
        "k-thick-spider",
        "factorial-tree",
        "full-mary-tree",
        "clique-star",
        "clique-spider",
        "five-layer",
        "peri-max-spider",
        "broom",
        "two-star-bridge",
        "overlap-star",
    ];

    /// Parses a tag and integer parameters. `universal-join` takes
    /// parts separated by `+`, e.g. `universal-join cycle 4 + complete 3`.
    pub fn parse(tag: &str, params: &[&str]) -> Result<FamilySpec> {
        use FamilySpec::*;
        if tag == "universal-join" {
            let mut parts = Vec::new();
            for chunk in params.split(|p| *p == "+") {
                let (t, rest) = chunk.split_first().ok_or_else(|| bad("empty universal-join part"))?;
                parts.push(FamilySpec::parse(t, rest)?);
            }
            let spec = UniversalJoin { parts };
            spec.validate()?;
            return Ok(spec);
        }
        let nums: Vec<usize> = params
            .iter()
            .map(|p| p.parse().map_err(|_| bad(format!("parameter {p:?} is not a non-negative integer"))))
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(format!("{tag} takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let spec = match tag {
            "spider" => Spider { legs: nums.clone() },
            "path" | "cycle" | "complete" | "star" | "factorial-tree" | "five-layer" | "peri-max-spider" => {
                want(1)?;
                let n = nums[0];
                match tag {
                    "path" => Path { n },
                    "cycle" => Cycle { n },
                    "complete" => Complete { n },
                    "star" => Star { n },
                    "factorial-tree" => FactorialTree { m: n },
                    "five-layer" => FiveLayer { n },
                    _ => PeriMaxSpider { n },
                }
            }
            "complete-bipartite" | "balanced-spider" | "full-mary-tree" | "clique-star" | "broom"
            | "two-star-bridge" | "overlap-star" => {
                want(2)?;
                let (x, y) = (nums[0], nums[1]);
                match tag {
                    "complete-bipartite" => CompleteBipartite { m: x, n: y },
                    "balanced-spider" => BalancedSpider { a: x, b: y },
                    "full-mary-tree" => FullMaryTree { m: x, d: y },
                    "clique-star" => CliqueStar { m: x, n: y },
                    "broom" => Broom { a: x, b: y },
                    "two-star-bridge" => TwoStarBridge { m: x, n: y },
                    _ => OverlapStar { m: x, n: y },
                }
            }
            "k-thick-spider" | "clique-spider" => {
                want(3)?;
                let (x, y, z) = (nums[0], nums[1], nums[2]);
                if tag == "k-thick-spider" {
                    KThickSpider { a: x, b: y, k: z }
                } else {
                    CliqueSpider { a: x, b: y, m: z }
                }
            }
            _ => return Err(bad(format!("unknown family {tag:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks parameter domains.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let ok = match self {
            Path { n } | Complete { n } => *n >= 1,
            Cycle { n } => *n >= 3,
            CompleteBipartite { m, n } => *m >= 1 && *n >= 1,
            Star { n } => *n >= 1,
            Spider { legs } => !legs.is_empty() && legs.iter().all(|&l| l >= 1),
            BalancedSpider { a, b } => *a >= 2 && *b >= 1,
            KThickSpider { a, b, k } => *k >= 1 && a >= k && *b > *k,
            FactorialTree { m } => *m >= 2,
            FullMaryTree { m, d } => *m >= 2 && *d >= 1,
            CliqueStar { m, n } => *m >= 2 && *n >= 2,
            CliqueSpider { a, b, m } => *a >= 2 && *b >= 1 && *m >= 2,
            UniversalJoin { parts } => {
                if parts.is_empty() {
                    return Err(bad("universal-join needs at least one part"));
                }
                for p in parts {
                    p.validate()?;
                    if mostar_graph(&p.generate_unchecked())? != 0 {
                        return Err(bad(format!("universal-join part {p} has nonzero Mostar index")));
                    }
                }
                true
            }
            FiveLayer { n } => *n >= 1,
            PeriMaxSpider { n } => *n >= 10,
            Broom { a, b } => *a >= 1 && *b >= 1,
            TwoStarBridge { m, n } => *m >= 1 && *n >= 1,
            OverlapStar { m, n } => *n >= 1 && n <= m && *m >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(bad(format!("parameters out of domain for {self}")))
        }
    }

    /// Leg lengths of the three-leg spider of order `n` (n >= 10).
    pub fn peri_max_legs(n: usize) -> [usize; 3] {
        let k = (n - 1) / 3;
        match n % 3 {
            1 => [k - 1, k, k + 1],
            2 => [k - 1, k, k + 2],
            _ => [k - 1, k + 1, k + 2],
        }
    }

    /// Builds the graph, validating parameters first.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        Ok(self.generate_unchecked())
    }

    fn generate_unchecked(&self) -> Graph {
        use FamilySpec::*;
        let mut b = Builder::default();
        match self {
            Path { n } => {
                b.vertices(*n);
                b.path_through(&(0..*n).collect::<Vec<_>>());
            }
            Cycle { n } => {
                b.vertices(*n);
                b.path_through(&(0..*n).collect::<Vec<_>>());
                b.edge(*n - 1, 0);
            }
            Complete { n } => {
                b.vertices(*n);
                b.clique(&(0..*n).collect::<Vec<_>>());
            }
            CompleteBipartite { m, n } => {
                b.vertices(m + n);
                for u in 0..*m {
                    for v in *m..m + n {
                        b.edge(u, v);
                    }
                }
            }
            Star { n } => return spider(&vec![1; *n]),
            Spider { legs } => return spider(legs),
            BalancedSpider { a, b: len } => return spider(&vec![*len; *a]),
            KThickSpider { a, b: len, k } => {
                let base = spider(&vec![*len; *a]);
                b.vertices(base.n());
                for &(u, v) in base.edges() {
                    b.edge(u, v);
                }
                for leg in 0..*a {
                    let first = 1 + leg * len;
                    for i in 0..*len {
                        for j in i + 2..(i + k + 1).min(*len) {
                            b.edge(first + i, first + j);
                        }
                    }
                }
            }
            FactorialTree { m } => {
                let m = *m;
                b.vertices(1);
                let mut frontier = vec![0usize];
                for depth in 0..m - 1 {
                    let children = if depth == 0 { m } else { m - depth - 1 };
                    let mut next = Vec::new();
                    for &p in &frontier {
                        for _ in 0..children {
                            let c = b.add();
                            b.edge(p, c);
                            next.push(c);
                        }
                    }
                    frontier = next;
                }
            }
            FullMaryTree { m, d } => {
                b.vertices(1);
                let mut frontier = vec![0usize];
                for _ in 0..*d {
                    let mut next = Vec::new();
                    for &p in &frontier {
                        for _ in 0..*m {
                            let c = b.add();
                            b.edge(p, c);
                            next.push(c);
                        }
                    }
                    frontier = next;
                }
            }
            CliqueStar { m, n } => {
                b.vertices(1);
                for _ in 0..*n {
                    let group: Vec<usize> = (0..*m).map(|_| b.add()).collect();
                    b.clique(&group);
                    for &v in &group {
                        b.edge(0, v);
                    }
                }
            }
            CliqueSpider { a, b: len, m } => {
                b.vertices(1);
                for _ in 0..*a {
                    let mut prev = 0;
                    for _ in 0..len - 1 {
                        let v = b.add();
                        b.edge(prev, v);
                        prev = v;
                    }
                    let group: Vec<usize> = (0..*m).map(|_| b.add()).collect();
                    b.clique(&group);
                    for &v in &group {
                        b.edge(prev, v);
                    }
                }
            }
            UniversalJoin { parts } => {
                b.vertices(1);
                for p in parts {
                    let g = p.generate_unchecked();
                    let offset = b.n;
                    b.vertices(g.n());
                    for &(u, v) in g.edges() {
                        b.edge(offset + u, offset + v);
                    }
                    for v in 0..g.n() {
                        b.edge(0, offset + v);
                    }
                }
            }
            FiveLayer { n } => {
                b.vertices(5 * n);
                for layer in 0..4 {
                    for i in 0..*n {
                        for j in 0..*n {
                            b.edge(layer * n + i, (layer + 1) * n + j);
                        }
                    }
                }
            }
            PeriMaxSpider { n } => return spider(&Self::peri_max_legs(*n)),
            Broom { a, b: len } => {
                let mut legs = vec![1; *a];
                legs.push(*len);
                return spider(&legs);
            }
            TwoStarBridge { m, n } => {
                b.vertices(m + n);
                for leaf in 1..*m {
                    b.edge(0, leaf);
                }
                for leaf in m + 1..m + n {
                    b.edge(*m, leaf);
                }
                b.edge(0, *m);
            }
            OverlapStar { m, n } => {
                b.vertices(m + 1);
                for leaf in 1..*m {
                    b.edge(0, leaf);
                }
                b.edge(0, *m);
                for leaf in 1..*n {
                    b.edge(*m, leaf);
                }
            }
        }
        b.build()
    }
}

/// Spider with center 0; leg `i` occupies a consecutive id block, numbered outward.
fn spider(legs: &[usize]) -> Graph {
    let mut b = Builder::default();
    b.vertices(1);
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            let v = b.add();
            b.edge(prev, v);
            prev = v;
        }
    }
    b.build()
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertices(&mut self, k: usize) {
        self.n += k;
    }
    fn add(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }
    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }
    fn path_through(&mut self, vs: &[usize]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }
    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }
    fn build(self) -> Graph {
        build_graph(self.n, &self.edges).expect("family edges are valid")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        write!(f, "{}", self.tag())?;
        match self {
            Path { n } | Cycle { n } | Complete { n } | Star { n } | FiveLayer { n } | PeriMaxSpider { n } => {
                write!(f, " {n}")
            }
            FactorialTree { m } => write!(f, " {m}"),
            CompleteBipartite { m, n } | CliqueStar { m, n } | TwoStarBridge { m, n } | OverlapStar { m, n } => {
                write!(f, " {m} {n}")
            }
            BalancedSpider { a, b } | Broom { a, b } => write!(f, " {a} {b}"),
            FullMaryTree { m, d } => write!(f, " {m} {d}"),
            KThickSpider { a, b, k } => write!(f, " {a} {b} {k}"),
            CliqueSpider { a, b, m } => write!(f, " {a} {b} {m}"),
            Spider { legs } => legs.iter().try_for_each(|l| write!(f, " {l}")),
            UniversalJoin { parts } => {
                for (i, p) in parts.iter().enumerate() {
                    let sep = if i == 0 { " " } else { " + " };
                    write!(f, "{sep}{p}")?;
                }
                Ok(())
            }
        }
    }
}
