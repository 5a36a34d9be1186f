use periph_core::random::sample_gnp;
use periph_core::{all_pairs, bfs_distances, build_graph, n_closer, Error, Graph, UNREACHABLE};

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != UNREACHABLE && d[k][j] != UNREACHABLE && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

#[test]
fn bfs_agrees_with_floyd_warshall() {
    for seed in 0..60 {
        let n = 2 + (seed as usize % 14);
        let p = [0.1, 0.25, 0.5][seed as usize % 3];
        let g = sample_gnp(n, p, seed).unwrap();
        let fw = floyd_warshall(&g);
        let dm = all_pairs(&g);
        for (u, row) in fw.iter().enumerate() {
            assert_eq!(dm.row(u), row.as_slice(), "seed {seed} row {u}");
            assert_eq!(bfs_distances(&g, u).unwrap(), *row);
        }
    }
}

#[test]
fn closer_counts_partition_the_vertices() {
    for seed in 0..30 {
        let g = sample_gnp(9, 0.4, 100 + seed).unwrap();
        let dm = all_pairs(&g);
        for u in 0..9 {
            for v in 0..9 {
                if u == v {
                    continue;
                }
                let a = n_closer(&dm, u, v).unwrap();
                let b = n_closer(&dm, v, u).unwrap();
                let tied = (0..9).filter(|&w| dm.get(w, u) == dm.get(w, v)).count();
                assert_eq!(a + b + tied, 9);
            }
        }
    }
}

#[test]
fn k23_closer_counts() {
    let g = build_graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let dm = all_pairs(&g);
    assert_eq!(n_closer(&dm, 0, 2).unwrap(), 3);
    assert_eq!(n_closer(&dm, 2, 0).unwrap(), 2);
    assert!(matches!(n_closer(&dm, 1, 1), Err(Error::SameVertex(1))));
}

#[test]
fn text_format_round_trips_and_reports_lines() {
    let g = sample_gnp(12, 0.3, 5).unwrap();
    assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    let commented = "# a path\n3 2\n0 1\n\n1 2\n";
    assert_eq!(Graph::parse(commented).unwrap().m(), 2);
    match Graph::parse("3 2\n0 1\n1 x\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(Graph::parse("3 1\n0 3\n"), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
    assert!(matches!(Graph::parse("3 1\n1 1\n"), Err(Error::SelfLoop(1))));
    assert!(Graph::parse("3 2\n0 1\n").is_err());
    assert!(Graph::parse("3 1\n0 1\n1 2\n").is_err());
}

#[test]
fn components_and_induced_subgraphs() {
    let g = build_graph(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
    let comps = g.components();
    assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
    assert!(!g.is_connected());
    assert!(g.diameter().is_err());
    let h = g.induced(&[1, 2, 3, 4]);
    assert_eq!(h.edges(), &[(0, 1), (2, 3)]);
}
