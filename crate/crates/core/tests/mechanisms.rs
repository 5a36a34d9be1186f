use periph_core::mechanisms::{
    builtin, compare_tables, parse_mechanism, rank_table, reactant_graph, Dataset, RankTable, TableKind,
    SUPERFAST_REACTIONS,
};

#[test]
fn builtin_tables_reproduce_references() {
    for d in Dataset::ALL {
        let g = builtin(d);
        for kind in [TableKind::Vertex, TableKind::Edge] {
            let t = rank_table(&g, kind).unwrap();
            let diff = compare_tables(&t, &d.reference(kind)).unwrap();
            for m in &diff {
                eprintln!("{} {:?}: {m}", d.id(), kind);
            }
            assert!(diff.is_empty(), "{} {:?}: {} mismatches", d.id(), kind, diff.len());
        }
    }
}

#[test]
fn mozart4_shape() {
    let g = builtin(Dataset::Mozart4);
    assert_eq!((g.graph.n(), g.graph.m()), (81, 139));
    assert_eq!(g.graph.diameter().unwrap(), 6);
    assert_eq!(g.graph.max_degree(), 54);
    assert_eq!(g.graph.degree(g.index("OH").unwrap()), 54);
}

#[test]
fn superfast_reaction_file_matches_builtin() {
    let parsed = reactant_graph(&parse_mechanism(SUPERFAST_REACTIONS).unwrap()).unwrap();
    let built = builtin(Dataset::SuperFast);
    assert_eq!(parsed.names, built.names);
    assert_eq!(parsed.to_edge_text(), built.to_edge_text());
    assert!(built.graph.is_connected());
}

#[test]
fn headline_ranks() {
    let sf = builtin(Dataset::SuperFast);
    let v = rank_table(&sf, TableKind::Vertex).unwrap();
    let oh = &v.rows.iter().find(|r| r.0 == "OH").unwrap().1;
    assert!(oh.iter().all(|&r| r == 1));
    let h2o = &v.rows.iter().find(|r| r.0 == "H2O").unwrap().1;
    assert_eq!(h2o, &[15, 15, 10, 15, 7, 15, 13]);
    let e = rank_table(&sf, TableKind::Edge).unwrap();
    assert_eq!(e.get("HO2 , O3", "mo"), Some(1));
    let mz = rank_table(&builtin(Dataset::Mozart4), TableKind::Edge).unwrap();
    assert_eq!(mz.get("CH3CO3 , CH3O2", "mo"), Some(1));
}

#[test]
fn competition_ranking_law_holds_in_every_column() {
    for d in Dataset::ALL {
        for kind in [TableKind::Vertex, TableKind::Edge] {
            let t = d.reference(kind);
            for c in 0..t.columns.len() {
                let mut ranks: Vec<usize> = t.rows.iter().map(|r| r.1[c]).collect();
                ranks.sort_unstable();
                let mut i = 0;
                while i < ranks.len() {
                    assert_eq!(ranks[i], i + 1, "{} {:?} column {}", d.id(), kind, t.columns[c]);
                    let j = ranks[i..].iter().take_while(|&&r| r == ranks[i]).count();
                    i += j;
                }
            }
        }
    }
}

#[test]
fn shape_mismatch_is_an_error() {
    let a = Dataset::SuperFast.reference(TableKind::Vertex);
    let b = Dataset::SuperFast.reference(TableKind::Edge);
    assert!(compare_tables(&a, &b).is_err());
    let mut c = a.clone();
    c.rows.pop();
    assert!(compare_tables(&a, &c).is_err());
    let csv = "species,peri\nX,1\n";
    assert_eq!(RankTable::from_csv(csv).unwrap().rows.len(), 1);
}
