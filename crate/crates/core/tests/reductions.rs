use num_bigint::BigUint;
use periph_core::measures::{eecc, CloserTable};
use periph_core::random::sample_gnp;
use periph_core::reductions::*;
use periph_core::weighted::{expand, Point, WeightedDistances};
use periph_core::{all_pairs, build_graph, Graph};

/// Every labeled graph on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        build_graph(n, &e).unwrap()
    })
}

/// Independent k-clique test by subset bitmask.
fn has_clique(g: &Graph, k: usize) -> bool {
    let n = g.n();
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

#[test]
fn h_and_x_reductions_agree_on_random_graphs() {
    let kinds = [
        Reduction::HMoEq,
        Reduction::HIrrEq,
        Reduction::HPrunedPeriEq,
        Reduction::HPrunedEperiEq,
        Reduction::XEccEq,
        Reduction::XEeccEq,
    ];
    for seed in 0..50 {
        let g = sample_gnp(6, 0.5, seed).unwrap();
        let expected = has_clique(&g, 4);
        for r in kinds {
            let check = check_reduction(&g, 4, r).unwrap();
            assert_eq!(check.source_clique.is_some(), expected);
            assert!(check.agrees(), "{} seed {seed}", r.id());
        }
    }
}

#[test]
fn j_reductions_agree_on_all_small_graphs() {
    for n in 2..=4 {
        for g in all_graphs(n) {
            for k in 3..=4 {
                for r in [Reduction::JMoNeq, Reduction::JIrrNeq, Reduction::JPrunedPeriNeq] {
                    assert!(validate_reduction(&g, k, r).unwrap(), "{} on {:?} k={k}", r.id(), g.edges());
                }
            }
        }
    }
}

#[test]
fn k4_plus_isolated_has_distinct_mostar_clique_in_j() {
    let g = build_graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let j = build_j(&g).unwrap();
    let w = constrained_clique(&j.graph, 5, Constraint::neq(ConstraintMeasure::Mo)).unwrap();
    assert_eq!(w, Some(vec![0, 1, 2, 3, 5]));
}

#[test]
fn j_of_k2_matches_explicit_expansion() {
    let j = build_j(&Graph::complete(2)).unwrap();
    let GadgetGraph::Weighted(wg) = &j.graph else { panic!("J is weighted") };
    let big = expand(wg).unwrap();
    assert_eq!(big.n(), 65_859);
    let wd = WeightedDistances::new(wg);
    let rows: Vec<Vec<u32>> = (0..3).map(|v| periph_core::bfs_distances(&big, v).unwrap()).collect();
    for u in 0..3 {
        for v in 0..3 {
            if u == v {
                continue;
            }
            let explicit = (0..big.n()).filter(|&x| rows[u][x] < rows[v][x]).count();
            assert_eq!(wd.n_closer(Point::Core(u), Point::Core(v)).unwrap(), BigUint::from(explicit));
        }
    }
}

#[test]
fn j_core_differences_are_injective_and_banded() {
    for n in 2..=5usize {
        let g = Graph::complete(n);
        let j = build_j(&g).unwrap();
        let GadgetGraph::Weighted(wg) = &j.graph else { panic!() };
        let wd = WeightedDistances::new(wg);
        let four = BigUint::from(4u32);
        let mut seen = Vec::new();
        for i in 0..n {
            for jx in i + 1..n {
                let (a, b) = wd.closer_pair(Point::Core(jx), Point::Core(i)).unwrap();
                assert!(a > b);
                let d = a - b;
                let upper = four.pow((n + jx + 1) as u32);
                let lower = four.pow((n + jx) as u32);
                assert!(lower < d && d < upper, "n={n} ({i},{jx})");
                assert!(!seen.contains(&d));
                seen.push(d);
            }
        }
    }
}

#[test]
fn h_properties() {
    for seed in 0..20 {
        let g = sample_gnp(6, 0.5, seed).unwrap();
        let h = build_h(&g);
        let GadgetGraph::Plain(hg) = &h.graph else { panic!() };
        let dm = all_pairs(hg);
        let ct = CloserTable::new(&dm);
        for u in 0..6 {
            for v in u + 1..6 {
                assert_eq!(ct.get(u, v), ct.get(v, u));
            }
        }
        let core_max = g.edges().iter().map(|&(u, v)| ct.diff(u, v)).max().unwrap_or(0);
        for &v in hg.neighbors(h.c) {
            assert!(ct.diff(h.c, v) > core_max);
        }
        // Every non-core, non-hub vertex has degree at most 2.
        for v in 0..hg.n() {
            if v >= 6 && v != h.c {
                assert!(hg.degree(v) <= 2);
            }
        }
    }
}

#[test]
fn x_eccentricities() {
    for seed in 0..20 {
        let g = sample_gnp(5, 0.4, seed).unwrap();
        let x = build_x(&g);
        let xg = x.graph.core();
        let dm = all_pairs(xg);
        for v in 0..xg.n() {
            assert_eq!(dm.eccentricity(v), if v == x.c { 1 } else { 2 });
        }
        for &(u, v) in xg.edges() {
            let want = if u == x.c || v == x.c { 1 } else { 2 };
            assert_eq!(eecc(&dm, (u, v)), want);
        }
    }
}

#[test]
fn polynomial_deciders_match_brute_force() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            for k in 2..=4 {
                let plain = GadgetGraph::Plain(g.clone());
                let ecc = constrained_clique(&plain, k, Constraint::neq(ConstraintMeasure::Ecc)).unwrap();
                assert_eq!(decide_ecc_neq(&g, k), ecc.is_some());
                let e = constrained_clique(&plain, k, Constraint::neq(ConstraintMeasure::Eecc)).unwrap();
                assert_eq!(decide_eecc_neq(&g, k), e.is_some());
            }
        }
    }
}

#[test]
fn errors_and_caps() {
    assert!(build_j(&Graph::empty(1)).is_err());
    let big = GadgetGraph::Plain(Graph::complete(200));
    assert!(matches!(
        constrained_clique(&big, 5, Constraint::eq(ConstraintMeasure::Mo)),
        Err(periph_core::Error::CapExceeded { .. })
    ));
    let j = build_j(&Graph::complete(3)).unwrap();
    assert!(constrained_clique(&j.graph, 3, Constraint::neq(ConstraintMeasure::Mo)).is_err());
    assert!(constrained_clique(&j.graph, 4, Constraint::eq(ConstraintMeasure::Eperi)).is_err());
    assert!(check_reduction(&Graph::complete(4), 3, Reduction::HMoEq).is_err());
}

#[test]
fn gadget_json_carries_decimal_weights() {
    let j = build_j(&Graph::complete(2)).unwrap();
    let v = j.to_json();
    assert_eq!(v["weights"][2], "65537");
    assert_eq!(v["total_order"], "65859");
    assert_eq!(v["core_map"][1], 1);
}
