use clap::{Args, Parser, Subcommand, ValueEnum};
use periph_core::extremal::{
    scan, scan_trees_resumable, verify_claims, ClaimGroup, Direction, ExtremalResult, GraphClass, Objective,
    VerifyOptions, MAX_CONNECTED_ORDER,
};
use periph_core::families::{check_family, closed_form, evaluate, FamilySpec, Measure};
use periph_core::mechanisms::{
    builtin, compare_tables, parse_edge_list, parse_mechanism, rank_table, reactant_graph, Dataset, NamedGraph,
    TableKind,
};
use periph_core::random::{expected_irr_edge_conditioned, irr_asymptotic, monte_carlo_irr, rational_to_f64};
use periph_core::reductions::{check_reduction, constrained_clique, Constraint, GadgetGraph, GadgetKind, Reduction};
use periph_core::{Graph, MeasureReport};
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

/// Tree orders above this need `--long`.
const LONG_TREE_ORDER: usize = 20;
/// Monte Carlo work (trials x n^2) above this needs `--long`.
const LONG_RANDOM_WORK: u64 = 200_000_000;

#[derive(Parser)]
#[command(name = "periph", version, about = "Mostar-type peripherality measures and related experiments")]
struct Cli {
    /// Worker threads (default: all cores, or the THREADS environment variable).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph in the text format.
    Gen {
        tag: String,
        params: Vec<String>,
    },
    /// Every measure of a connected graph.
    Measure {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Competition-rank table of a graph's vertices or edges.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Kind::Vertex)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Closed form next to the computed value for a family graph.
    Oracle {
        tag: String,
        /// Family parameters followed by the measure id.
        #[arg(num_args = 1.., required = true)]
        rest: Vec<String>,
    },
    /// Re-derive the extremal statements by exhaustive search.
    Verify {
        /// Comma-separated groups: trees, connected, probes, long.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Order range `A..B` (inclusive) applied to the selected groups.
        #[arg(long)]
        n: Option<String>,
        /// Include the order-22 tree scan.
        #[arg(long)]
        long: bool,
    },
    /// Exact optimum of one objective over trees or connected graphs.
    Scan {
        #[arg(long)]
        objective: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "max")]
        direction: String,
        #[arg(long, default_value = "trees")]
        class: String,
        /// Checkpoint file for resumable tree scans.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        every: u64,
        #[arg(long)]
        long: bool,
    },
    /// Build a clique-reduction gadget.
    Reduce {
        /// H, Hp, J, Jp or X.
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constrained clique search, or a reduction check with `--reduction`.
    Clique {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        /// e.g. `mo=`, `irr!=`, `peri=`.
        #[arg(long, conflicts_with = "reduction")]
        constraint: Option<String>,
        /// e.g. `H/mo=`, `J/irr!=`.
        #[arg(long)]
        reduction: Option<String>,
    },
    /// Chemical mechanism tables.
    Mech {
        #[command(subcommand)]
        command: MechCommand,
    },
    /// Random-graph experiments.
    Random {
        #[command(subcommand)]
        command: RandomCommand,
    },
}

#[derive(Subcommand)]
enum MechCommand {
    /// Rank table of a built-in or supplied mechanism.
    Rank {
        #[arg(long, value_enum, conflicts_with_all = ["input", "reactions"])]
        dataset: Option<DatasetArg>,
        /// Edge list of species pairs.
        #[arg(long = "in", conflicts_with = "reactions")]
        input: Option<PathBuf>,
        /// Reaction file.
        #[arg(long)]
        reactions: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Kind::Vertex)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Compare with the reference table of `--dataset`; exit 1 on any mismatch.
        #[arg(long, requires = "dataset")]
        compare: bool,
    },
}

#[derive(Subcommand)]
enum RandomCommand {
    /// Monte Carlo irregularity of G(n, p).
    Irr {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        long: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file in the text format; stdin when absent or `-`.
    #[arg(long = "in")]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Vertex,
    Edge,
}

impl From<Kind> for TableKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Vertex => TableKind::Vertex,
            Kind::Edge => TableKind::Edge,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DatasetArg {
    Superfast,
    Mozart4,
}

impl From<DatasetArg> for Dataset {
    fn from(d: DatasetArg) -> Self {
        match d {
            DatasetArg::Superfast => Dataset::SuperFast,
            DatasetArg::Mozart4 => Dataset::Mozart4,
        }
    }
}

#[derive(Debug)]
enum Failure {
    /// Bad flags or flag combinations.
    Usage(String),
    /// Valid request that the domain rejects or that reports a negative result.
    Domain(String),
}

impl From<periph_core::Error> for Failure {
    fn from(e: periph_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    Ok(Graph::parse(&read_text(input.path.as_ref())?)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || usage(format!("expected a range A..B or a single order, got {text:?}"));
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => text.parse().map(|n| n..=n).map_err(|_| bad()),
    }
}

/// Plain graphs are labeled by zero-padded vertex ids so label order is numeric order.
fn numbered(g: Graph) -> NamedGraph {
    let width = g.n().saturating_sub(1).to_string().len();
    let names = (0..g.n()).map(|v| format!("{v:0width$}")).collect();
    NamedGraph { graph: g, names }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { tag, params } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let spec = FamilySpec::parse(&tag, &params)?;
            Ok(spec.generate()?.to_text())
        }
        Command::Measure { input, format } => {
            let report = MeasureReport::compute(&read_graph(&input)?)?;
            match format {
                Format::Json => Ok(pretty(&report.to_json())),
                Format::Csv => Ok(report.to_csv()),
                Format::Text => Err(usage("measure supports --format json or csv")),
            }
        }
        Command::Rank { input, kind, format } => {
            let table = rank_table(&numbered(read_graph(&input)?), kind.into())?;
            let header = match kind {
                Kind::Vertex => "vertex",
                Kind::Edge => "edge",
            };
            match format {
                Format::Csv => Ok(table.to_csv(header)),
                Format::Json => Ok(pretty(&table.to_json())),
                Format::Text => Err(usage("rank supports --format csv or json")),
            }
        }
        Command::Oracle { tag, rest } => oracle(&tag, &rest),
        Command::Verify { claims, n, long } => verify(&claims, n.as_deref(), long),
        Command::Scan { objective, n, direction, class, checkpoint, every, long } => {
            let objective: Objective = objective.parse()?;
            let direction: Direction = direction.parse()?;
            let class: GraphClass = class.parse()?;
            if class == GraphClass::Trees && n > LONG_TREE_ORDER && !long {
                return Err(usage(format!("tree scans above order {LONG_TREE_ORDER} need --long")));
            }
            let result: ExtremalResult = match (class, checkpoint) {
                (GraphClass::Trees, Some(path)) => {
                    scan_trees_resumable(objective, n, direction, Some(&path), every, |cp| {
                        eprintln!("checkpoint: {} trees scanned", cp.scanned);
                    })?
                }
                (GraphClass::Connected, Some(_)) => return Err(usage("--checkpoint applies to tree scans only")),
                (_, None) => scan(objective, n, direction, class)?,
            };
            Ok(pretty(&serde_json::to_value(&result).expect("serializable")))
        }
        Command::Reduce { kind, input, out } => {
            let g = read_graph(&input)?;
            let gadget = match kind.as_str() {
                "Jp" => periph_core::reductions::build_j_pruned(&g)?,
                other => match other.parse::<GadgetKind>()? {
                    GadgetKind::H => periph_core::reductions::build_h(&g),
                    GadgetKind::HPruned => periph_core::reductions::build_h_pruned(&g),
                    GadgetKind::J => periph_core::reductions::build_j(&g)?,
                    GadgetKind::X => periph_core::reductions::build_x(&g),
                },
            };
            let text = pretty(&gadget.to_json());
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Clique { input, k, constraint, reduction } => {
            let g = read_graph(&input)?;
            if let Some(r) = reduction {
                let r: Reduction = r.parse()?;
                let check = check_reduction(&g, k, r)?;
                let value = json!({
                    "reduction": r.id(),
                    "k": k,
                    "target": r.target(k),
                    "source_clique": check.source_clique,
                    "gadget_clique": check.gadget_clique,
                    "agrees": check.agrees(),
                });
                if check.agrees() {
                    Ok(pretty(&value))
                } else {
                    print!("{}", pretty(&value));
                    Err(Failure::Domain(format!("{} disagrees on this graph", r.id())))
                }
            } else {
                let c: Option<Constraint> = constraint.map(|c| c.parse()).transpose()?;
                let found = match c {
                    Some(c) => constrained_clique(&GadgetGraph::Plain(g), k, c)?,
                    None => periph_core::reductions::find_clique(&g, k)?,
                };
                let value = json!({
                    "k": k,
                    "constraint": c.map(|c| c.to_string()),
                    "clique": found,
                });
                Ok(pretty(&value))
            }
        }
        Command::Mech { command: MechCommand::Rank { dataset, input, reactions, kind, format, compare } } => {
            let ng = match (dataset, input, reactions) {
                (Some(d), _, _) => builtin(d.into()),
                (None, Some(p), _) => parse_edge_list(&read_text(Some(&p))?)?,
                (None, None, Some(p)) => reactant_graph(&parse_mechanism(&read_text(Some(&p))?)?)?,
                (None, None, None) => return Err(usage("one of --dataset, --in or --reactions is required")),
            };
            let table = rank_table(&ng, kind.into())?;
            if compare {
                let d: Dataset = dataset.expect("clap enforces --dataset").into();
                let mismatches = compare_tables(&table, &d.reference(kind.into()))?;
                if !mismatches.is_empty() {
                    for m in &mismatches {
                        eprintln!("{m}");
                    }
                    return Err(Failure::Domain(format!("{} cells differ from the reference table", mismatches.len())));
                }
                eprintln!("{} rows match the reference table", table.rows.len());
            }
            let header = match kind {
                Kind::Vertex => "species",
                Kind::Edge => "edge",
            };
            match format {
                Format::Csv => Ok(table.to_csv(header)),
                Format::Json => Ok(pretty(&table.to_json())),
                Format::Text => Err(usage("mech rank supports --format csv or json")),
            }
        }
        Command::Random { command: RandomCommand::Irr { n, p, trials, seed, format, long } } => {
            let work = trials as u64 * (n as u64).pow(2);
            if work > LONG_RANDOM_WORK && !long {
                return Err(usage(format!("{trials} trials at n = {n} need --long")));
            }
            let run = monte_carlo_irr(n, p, trials, seed)?;
            let exact = (p == 0.5).then(|| rational_to_f64(&expected_irr_edge_conditioned(n as u64)));
            match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&run).expect("serializable");
                    v["asymptotic"] = json!(irr_asymptotic(n));
                    v["exact_mean"] = json!(exact);
                    Ok(pretty(&v))
                }
                Format::Text => {
                    let mut s = format!(
                        "n {n}\np {p}\ntrials {trials}\nseed {seed}\nmean {}\nstd_error {}\nratio {}\n",
                        run.mean, run.std_error, run.ratio
                    );
                    if let Some(x) = exact {
                        s.push_str(&format!("exact_mean {x}\n"));
                    }
                    Ok(s)
                }
                Format::Csv => {
                    let mut s = String::from("trial,irr\n");
                    for (t, v) in run.values.iter().enumerate() {
                        s.push_str(&format!("{t},{v}\n"));
                    }
                    Ok(s)
                }
            }
        }
    }
}

fn oracle(tag: &str, rest: &[String]) -> Outcome {
    let (measure, params) = rest.split_last().expect("clap requires one value");
    let measure: Measure = measure.parse()?;
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    let spec = FamilySpec::parse(tag, &params)?;
    let g = spec.generate()?;
    let mut out = String::from("scope\tclosed_form\tcomputed\tsource\n");
    let mut bad = 0;
    match closed_form(&spec, measure) {
        Some(cf) => {
            let computed = evaluate(&g, measure)?;
            bad += usize::from(cf.value != computed);
            out.push_str(&format!("graph\t{}\t{}\t{}\n", cf.value, computed, cf.source));
        }
        None => out.push_str(&format!("graph\tnot covered\t{}\t-\n", evaluate(&g, measure)?)),
    }
    for c in check_family(&spec)?.into_iter().filter(|c| c.measure == measure && c.scope != "graph") {
        bad += usize::from(!c.holds());
        out.push_str(&format!("{}\t{}\t{}\t-\n", c.scope, c.expected, c.computed));
    }
    if bad > 0 {
        print!("{out}");
        return Err(Failure::Domain(format!("{bad} closed forms disagree with the computed values")));
    }
    Ok(out)
}

fn verify(claims: &[String], n: Option<&str>, long: bool) -> Outcome {
    let mut opts = VerifyOptions::default();
    if !claims.is_empty() {
        opts.groups = claims.iter().map(|c| c.parse()).collect::<Result<_, _>>()?;
    }
    if long && !opts.groups.contains(&ClaimGroup::Long) {
        opts.groups.push(ClaimGroup::Long);
    }
    if opts.groups.contains(&ClaimGroup::Long) && !long {
        return Err(usage("the long claim group needs --long"));
    }
    if let Some(text) = n {
        let range = parse_range(text)?;
        if opts.groups.contains(&ClaimGroup::Connected) && *range.end() > MAX_CONNECTED_ORDER {
            return Err(usage(format!("connected claims support orders up to {MAX_CONNECTED_ORDER}")));
        }
        if *range.end() > LONG_TREE_ORDER && !long {
            return Err(usage(format!("tree orders above {LONG_TREE_ORDER} need --long")));
        }
        opts.trees = range.clone();
        opts.connected = range;
    }
    let report = verify_claims(&opts)?;
    let text = pretty(&serde_json::to_value(&report).expect("serializable"));
    eprintln!("{} passed, {} failed, {} findings", report.passed, report.failed, report.findings);
    if report.all_pass() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Domain(format!("{} claims failed", report.failed)))
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), Failure> {
    let threads = match flag {
        Some(t) => Some(t),
        None => match std::env::var("THREADS") {
            Ok(v) => Some(v.trim().parse().map_err(|_| usage(format!("THREADS={v:?} is not a count")))?),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        if t == 0 {
            return Err(usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Domain(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads(cli.threads).and_then(|()| run(cli));
    match result {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
