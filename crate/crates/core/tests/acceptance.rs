//! Acceptance criteria. Each criterion prints one PASS/FAIL line.
//!
//! Run with `--ignored` (or `--include-ignored`) to add the order-22 tree scan.

use num_bigint::BigUint;
use num_rational::BigRational;
use periph_core::extremal::{layout_to_graph, scan, Direction, FreeTrees, GraphClass, Objective};
use periph_core::families::{broom_min_mostar_edge, broom_vertex, check_family, default_grid, FamilySpec};
use periph_core::measures::{eecc, edeg, CloserTable};
use periph_core::mechanisms::{builtin, compare_tables, rank_table, Dataset, TableKind};
use periph_core::random::{
    exact_expected_irr, expected_irr_edge_conditioned, monte_carlo_irr, sample_connected, sample_gnp, sample_tree,
};
use periph_core::reductions::{build_j, check_reduction, validate_reduction, GadgetGraph, Reduction};
use periph_core::weighted::{expand, Point, WeightedDistances};
use periph_core::{all_pairs, bfs_distances, build_graph, Graph, MeasureReport};
use std::process::ExitCode;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn path_like(w: &[(usize, usize)], n: usize) -> (bool, bool) {
    let mut deg = vec![0; n];
    for &(u, v) in w {
        deg[u] += 1;
        deg[v] += 1;
    }
    (deg.iter().all(|&d| d <= 2), deg.iter().any(|&d| d + 1 == n))
}

fn criterion_1() -> Outcome {
    let mut total = 0usize;
    for spec in default_grid() {
        for c in check_family(&spec).map_err(|e| format!("{spec}: {e}"))? {
            total += 1;
            ensure(c.holds(), || {
                format!("{} {} {}: formula {} computed {}", c.family, c.measure, c.scope, c.expected, c.computed)
            })?;
        }
    }
    ensure(total >= 2000, || format!("only {total} assertions"))?;
    Ok(format!("{total} closed-form assertions"))
}

fn criterion_2() -> Outcome {
    use Direction::*;
    let t = |o, n, d| scan(o, n, d, GraphClass::Trees).map_err(|e| e.to_string());
    for n in 4..=12usize {
        let ni = n as i64;
        let r = t(Objective::Mo, n, Min)?;
        ensure(r.optimum == (ni - 1) * (ni - 1) / 2 && r.witness_count == 1 && path_like(&r.witnesses[0], n).0, || {
            format!("n={n}: min Mo {} ({} optimal)", r.optimum, r.witness_count)
        })?;
        let r = t(Objective::Mo, n, Max)?;
        ensure(r.optimum == (ni - 1) * (ni - 2) && r.witness_count == 1 && path_like(&r.witnesses[0], n).1, || {
            format!("n={n}: max Mo {} ({} optimal)", r.optimum, r.witness_count)
        })?;
        let r = t(Objective::MoTerminal, n, Max)?;
        ensure(r.optimum == (ni - 1) * (ni - 3) && r.witness_count == 1 && path_like(&r.witnesses[0], n).1, || {
            format!("n={n}: max terminal Mo {} ({} optimal)", r.optimum, r.witness_count)
        })?;
        if n >= 7 {
            let r = t(Objective::MoMinusIrr, n, Max)?;
            ensure(r.optimum == ni * ni - 7 * ni + 18, || format!("n={n}: max Mo-irr {}", r.optimum))?;
        }
        if n >= 9 {
            let r = t(Objective::Peri, n, Max)?;
            ensure(r.optimum == ni * (ni - 1) / 2, || format!("n={n}: max peri {}", r.optimum))?;
        }
    }
    Ok("trees n = 4..12".into())
}

fn criterion_2_long() -> Outcome {
    let r = scan(Objective::MoMinusIrr, 22, Direction::Max, GraphClass::Trees).map_err(|e| e.to_string())?;
    ensure(r.count_scanned == 5_623_756, || format!("scanned {} trees", r.count_scanned))?;
    ensure(r.optimum == 346, || format!("max Mo-irr at n=22 is {}", r.optimum))?;
    Ok(format!("n = 22: max(Mo - irr) = 346 over {} trees", r.count_scanned))
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for n in [30u64, 60, 90] {
        let t = (n as f64 * (0.5 - 1.0 / (2.0 * 3f64.sqrt()))).round() as usize;
        let g = FamilySpec::CompleteBipartite { m: t, n: n as usize - t }.generate().map_err(|e| e.to_string())?;
        let dm = all_pairs(&g);
        let ct = CloserTable::new(&dm);
        let mo: u128 = g.edges().iter().map(|&(u, v)| u128::from(ct.diff(u, v))).sum();
        let n = u128::from(n);
        // Mo >= n^3/(6 sqrt 3) - 6n  <=>  108 (Mo + 6n)^2 >= n^6.
        ensure(108 * (mo + 6 * n).pow(2) >= n.pow(6), || format!("n={n}: Mo={mo} below n^3/(6 sqrt 3) - 6n"))?;
        ensure(27 * mo > 2 * n.pow(3), || format!("n={n}: Mo={mo} not above 2n^3/27"))?;
        notes.push(format!("n={n} t={t} Mo={mo}"));
    }
    Ok(notes.join(", "))
}

fn criterion_4() -> Outcome {
    let mut cells = 0;
    for d in Dataset::ALL {
        let g = builtin(d);
        for kind in [TableKind::Vertex, TableKind::Edge] {
            let computed = rank_table(&g, kind).map_err(|e| e.to_string())?;
            let reference = d.reference(kind);
            let diff = compare_tables(&computed, &reference).map_err(|e| e.to_string())?;
            ensure(diff.is_empty(), || format!("{} {kind:?}: {} mismatches, first {}", d.id(), diff.len(), diff[0]))?;
            cells += reference.rows.len() * reference.columns.len();
        }
    }
    Ok(format!("{cells} table cells reproduced"))
}

fn brute_clique(g: &Graph, k: usize) -> bool {
    let n = g.n();
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            build_graph(n, &e).expect("valid pairs")
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let plain = [
        Reduction::HMoEq,
        Reduction::HIrrEq,
        Reduction::HPrunedPeriEq,
        Reduction::HPrunedEperiEq,
        Reduction::XEccEq,
        Reduction::XEeccEq,
    ];
    let (mut checks, mut yes) = (0, 0);
    for seed in 0..50 {
        let g = sample_gnp(6, 0.5, seed).map_err(|e| e.to_string())?;
        let truth = brute_clique(&g, 4);
        yes += usize::from(truth);
        for r in plain {
            let c = check_reduction(&g, 4, r).map_err(|e| e.to_string())?;
            ensure(c.source_clique.is_some() == truth, || format!("clique solver disagrees, seed {seed}"))?;
            ensure(c.gadget_clique.is_some() == truth, || format!("{} seed {seed}: gadget answer differs", r.id()))?;
            checks += 1;
        }
    }
    for n in 2..=4 {
        for g in all_graphs(n) {
            for k in 3..=4 {
                for r in [Reduction::JMoNeq, Reduction::JIrrNeq] {
                    let ok = validate_reduction(&g, k, r).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("{} k={k} edges {:?}", r.id(), g.edges()))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} equivalences ({yes}/50 random graphs contain K4)"))
}

fn criterion_6() -> Outcome {
    let j = build_j(&Graph::complete(2)).map_err(|e| e.to_string())?;
    let GadgetGraph::Weighted(wg) = &j.graph else { return Err("J is not weighted".into()) };
    let big = expand(wg).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<u32>> = (0..3).map(|v| bfs_distances(&big, v)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let wd = WeightedDistances::new(wg);
    for u in 0..3 {
        for v in u + 1..3 {
            let a = (0..big.n()).filter(|&x| rows[u][x] < rows[v][x]).count();
            let b = (0..big.n()).filter(|&x| rows[v][x] < rows[u][x]).count();
            let weighted = wd.mostar_difference(Point::Core(u), Point::Core(v)).map_err(|e| e.to_string())?;
            ensure(weighted == BigUint::from(a.abs_diff(b)), || format!("pair ({u},{v}): weighted {weighted}, explicit {}", a.abs_diff(b)))?;
        }
    }
    Ok(format!("J(K2) expanded to {} vertices", big.n()))
}

fn closed_neighborhood(g: &Graph, v: usize) -> Vec<usize> {
    let mut s: Vec<usize> = g.neighbors(v).to_vec();
    s.push(v);
    s.sort_unstable();
    s
}

fn criterion_7() -> Outcome {
    for m in 2..=4 {
        for n in 2..=5 {
            let g = FamilySpec::CliqueStar { m, n }.generate().map_err(|e| e.to_string())?;
            let ct = CloserTable::new(&all_pairs(&g));
            let hub = (0..g.n()).max_by_key(|&v| g.degree(v)).expect("nonempty");
            for &(u, v) in g.edges() {
                let at_hub = u == hub || v == hub;
                ensure((ct.diff(u, v) > 0) == at_hub, || format!("G_{{{m},{n}}} edge {u}-{v}"))?;
            }
        }
    }
    for a in [4, 5] {
        for b in [2, 3] {
            for m in [2, 3] {
                let g = FamilySpec::CliqueSpider { a, b, m }.generate().map_err(|e| e.to_string())?;
                let ct = CloserTable::new(&all_pairs(&g));
                for &(u, v) in g.edges() {
                    // Leaf-clique members are exactly the adjacent true twins.
                    let twins = closed_neighborhood(&g, u) == closed_neighborhood(&g, v);
                    ensure((ct.diff(u, v) == 0) == twins, || format!("H_{{{a},{b},{m}}} edge {u}-{v}"))?;
                }
            }
        }
    }
    let mut brooms = 0;
    for a in 2..=12 {
        for b in a + 1..=12 {
            let g = FamilySpec::Broom { a, b }.generate().map_err(|e| e.to_string())?;
            let ct = CloserTable::new(&all_pairs(&g));
            let min = g.edges().iter().map(|&(u, v)| ct.diff(u, v)).min().expect("has edges");
            let mut argmin: Vec<(usize, usize)> =
                g.edges().iter().copied().filter(|&(u, v)| ct.diff(u, v) == min).map(|(u, v)| (u.min(v), u.max(v))).collect();
            argmin.sort_unstable();
            let mut predicted: Vec<(usize, usize)> = broom_min_mostar_edge(a, b)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|(i, j)| {
                    let (x, y) = (broom_vertex(a, i), broom_vertex(a, j));
                    (x.min(y), x.max(y))
                })
                .collect();
            predicted.sort_unstable();
            ensure(argmin == predicted, || format!("broom a={a} b={b}: minimizers {argmin:?}, formula {predicted:?}"))?;
            brooms += 1;
        }
    }
    Ok(format!("12 G graphs, 8 H graphs, {brooms} brooms"))
}

/// Violation tally for one inequality.
#[derive(Default)]
struct Bound {
    checked: u64,
    violations: u64,
    first: Option<String>,
}

impl Bound {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            self.first.get_or_insert_with(what);
        }
    }
}

fn criterion_8() -> Outcome {
    let names = [
        "edeg sandwich",
        "eecc sandwich",
        "Mo <= sum e_i(n - e_i)",
        "spr diameter bound",
        "ecc equal-distance bound",
        "espr >= 2(n-2)m",
        "eperi(e) <= min peri",
        "tree Mo >= 2 Delta (n-3)",
        "tree eperi <= peri",
    ];
    let mut b: Vec<Bound> = names.iter().map(|_| Bound::default()).collect();
    let mut graphs = 0;
    for seed in 0..500u64 {
        let n = 2 + (seed % 29) as usize;
        let p = [0.05, 0.1, 0.2, 0.4][(seed / 29 % 4) as usize];
        let g = sample_connected(n, p, seed).map_err(|e| e.to_string())?;
        let dm = all_pairs(&g);
        let ct = CloserTable::new(&dm);
        let ecc: Vec<u32> = (0..n).map(|v| dm.eccentricity(v)).collect();
        let m = g.m();
        for &(u, v) in g.edges() {
            let e = edeg(&g, (u, v));
            let (du, dv) = (g.degree(u), g.degree(v));
            b[0].check(du.max(dv) - 1 <= e && e <= du + dv - 2, || format!("seed {seed} edge {u}-{v}"));
            let x = eecc(&dm, (u, v));
            let lo = ecc[u].min(ecc[v]);
            b[1].check(lo - 1 <= x && x <= lo, || format!("seed {seed} edge {u}-{v}"));
            b[6].check(ct.eperi((u, v)) <= ct.peri(u).min(ct.peri(v)), || format!("seed {seed} edge {u}-{v}"));
        }
        // Earlier neighbors under non-increasing degree order.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let bound: u64 = order
            .iter()
            .map(|&v| {
                let e = g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count() as u64;
                e * (n as u64 - e)
            })
            .sum();
        let mo: u64 = g.edges().iter().map(|&(u, v)| ct.diff(u, v)).sum();
        b[2].check(mo <= bound, || format!("seed {seed}: Mo {mo} > {bound}"));
        // Scaled by 2D to stay in integers.
        let (nn, d) = (n as u128, u128::from(dm.diameter()));
        let spr = u128::from(ct.spr_total());
        b[3].check(2 * d * spr + nn * (nn - 1).pow(2) <= d * nn * nn * (nn - 1) + d * nn * (nn - 1), || {
            format!("seed {seed}: spr {spr}")
        });
        // Scaled by 2 ecc(w).
        for w in 0..n {
            let mut layer = vec![0u64; n];
            for x in 0..n {
                layer[dm.get(w, x) as usize] += 1;
            }
            let pairs: u64 = layer.iter().skip(1).map(|&k| k * k.saturating_sub(1) / 2).sum();
            let (e, n1) = (u64::from(ecc[w]), n as u64 - 1);
            b[4].check(2 * pairs * e + n1 * e >= n1 * n1, || format!("seed {seed} vertex {w}"));
        }
        let espr: u64 = g.edges().iter().map(|&e| ct.espr(e)).sum();
        b[5].check(espr >= 2 * (n as u64 - 2) * m as u64, || format!("seed {seed}: espr {espr}"));
        graphs += 1;
    }
    let mut trees = 0;
    let mut tree_bounds = |g: &Graph, b: &mut [Bound]| {
        let n = g.n() as u64;
        let ct = CloserTable::new(&all_pairs(g));
        let mo: u64 = g.edges().iter().map(|&(u, v)| ct.diff(u, v)).sum();
        let delta = g.max_degree() as u64;
        b[7].check(mo >= 2 * delta * (n - 3), || format!("{:?}: Mo {mo} < {}", g.edges(), 2 * delta * (n - 3)));
        let eperi: u64 = g.edges().iter().map(|&e| ct.eperi(e)).sum();
        b[8].check(eperi <= ct.peri_total(), || format!("{:?}", g.edges()));
        trees += 1;
    };
    for seed in 0..500u64 {
        tree_bounds(&sample_tree(3 + (seed % 28) as usize, seed), &mut b);
    }
    for n in 3..=10 {
        for layout in FreeTrees::new(n).expect("order in range") {
            tree_bounds(&layout_to_graph(&layout), &mut b);
        }
    }
    let failing: Vec<String> = names
        .iter()
        .zip(&b)
        .filter(|(_, x)| x.violations > 0)
        .map(|(name, x)| {
            format!("{name}: {} of {} violated, first {}", x.violations, x.checked, x.first.as_deref().unwrap_or(""))
        })
        .collect();
    let summary = format!("{graphs} random connected graphs, {trees} trees, {} bounds", names.len());
    if failing.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", failing.join("; ")))
    }
}

/// `E[irr]` by summing degree differences over every labeled graph.
fn enumerated_irr(n: usize) -> BigRational {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut total = 0i64;
    for mask in 0u32..1 << pairs.len() {
        let mut deg = vec![0i64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                total += (deg[u] - deg[v]).abs();
            }
        }
    }
    BigRational::new(total.into(), (1i64 << pairs.len()).into())
}

fn criterion_9() -> Outcome {
    for n in 1..=5 {
        let exact = exact_expected_irr(n).map_err(|e| e.to_string())?;
        ensure(exact == enumerated_irr(n), || format!("n={n}: {exact} vs enumeration"))?;
        ensure(exact == expected_irr_edge_conditioned(n as u64), || format!("n={n}: edge-conditioned form differs"))?;
    }
    let mut ratios = Vec::new();
    for (n, trials) in [(50, 2000), (100, 200), (200, 200)] {
        let r = monte_carlo_irr(n, 0.5, trials, 7).map_err(|e| e.to_string())?;
        ratios.push((n, r.ratio));
    }
    let last = ratios[2].1;
    ensure((0.95..=1.05).contains(&last), || format!("ratio at n=200 is {last:.4}"))?;
    ensure(ratios.windows(2).all(|w| w[0].1 <= w[1].1), || format!("ratios not monotone: {ratios:?}"))?;
    Ok(ratios.iter().map(|(n, r)| format!("n={n} ratio={r:.4}")).collect::<Vec<_>>().join(", "))
}

fn criterion_10() -> Outcome {
    for seed in 0..1000u64 {
        let n = 2 + (seed % 8) as usize;
        let p = [0.1, 0.3, 0.5][(seed % 3) as usize];
        let g = sample_connected(n, p, 10_000 + seed).map_err(|e| e.to_string())?;
        let report = MeasureReport::compute(&g).map_err(|e| e.to_string())?;
        let bad = report.decomposition_failures();
        ensure(bad.is_empty(), || format!("seed {seed}: {bad:?} on {:?}", g.edges()))?;
    }
    Ok("1000 random connected graphs".into())
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let long = args.iter().any(|a| a == "--ignored" || a == "--include-ignored");
    let mut criteria: Vec<Criterion> = vec![
        ("1", "closed-form oracle suite", criterion_1),
        ("2", "tree extremal reproduction", criterion_2),
        ("3", "bipartite conjecture refutation", criterion_3),
        ("4", "golden rank tables", criterion_4),
        ("5", "reduction equivalence", criterion_5),
        ("6", "weighted gadget exactness", criterion_6),
        ("7", "mostar-misleads properties", criterion_7),
        ("8", "bound suites", criterion_8),
        ("9", "random-graph irregularity", criterion_9),
        ("10", "decomposition identities", criterion_10),
    ];
    if long {
        criteria.push(("2-long", "tree extremal at n = 22", criterion_2_long));
    }
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("PASS criterion {id} {name} ({secs:.2}s): {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} {name} ({secs:.2}s): {why}");
            }
        }
    }
    if !long {
        println!("SKIP criterion 2-long tree extremal at n = 22 (run with --ignored)");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
