use num_rational::BigRational;
use periph_core::measures::irregularity_graph;
use periph_core::random::{
    abs_diff_binomial_bruteforce, abs_diff_binomial_expectation, exact_expected_irr, expected_irr_edge_conditioned,
    expected_irr_unconditioned, monte_carlo_irr, rational_to_f64, sample_connected, sample_gnp, sample_tree,
    MAX_EXACT_ORDER,
};
use periph_core::build_graph;

#[test]
fn binomial_closed_form_matches_summation() {
    for m in 0..=12 {
        assert_eq!(abs_diff_binomial_expectation(m), abs_diff_binomial_bruteforce(m), "m={m}");
    }
}

/// Sum of irr over every labeled graph on `n` vertices, by explicit edge lists.
fn enumerated_expectation(n: usize) -> BigRational {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total: u64 = (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            irregularity_graph(&build_graph(n, &edges).unwrap())
        })
        .sum();
    BigRational::new(total.into(), (1u64 << pairs.len()).into())
}

#[test]
fn exact_expectation_matches_enumeration_and_edge_formula() {
    for n in 1..=MAX_EXACT_ORDER {
        let exact = exact_expected_irr(n).unwrap();
        assert_eq!(exact, enumerated_expectation(n), "n={n}");
        assert_eq!(exact, expected_irr_edge_conditioned(n as u64), "n={n}");
    }
    assert!(exact_expected_irr(MAX_EXACT_ORDER + 1).is_err());
}

#[test]
fn independence_shortcut_overshoots_by_one_over_2m() {
    // Treating endpoint degrees as independent Bin(n-1, 1/2) ignores the shared
    // edge; the ratio to the exact value is 1 + 1/(2(n-2)).
    for n in 3u64..=200 {
        let exact = expected_irr_edge_conditioned(n);
        let loose = expected_irr_unconditioned(n);
        let expected = BigRational::new((2 * n - 3).into(), (2 * n - 4).into());
        assert_eq!(loose / exact, expected, "n={n}");
    }
}

#[test]
fn experiments_are_reproducible() {
    let a = monte_carlo_irr(30, 0.5, 40, 99).unwrap();
    let b = monte_carlo_irr(30, 0.5, 40, 99).unwrap();
    assert_eq!(a, b);
    let c = monte_carlo_irr(30, 0.5, 40, 100).unwrap();
    assert_ne!(a.values, c.values);
    // Trial t is a fixed stream, so a longer run extends a shorter one.
    let longer = monte_carlo_irr(30, 0.5, 80, 99).unwrap();
    assert_eq!(&longer.values[..40], a.values.as_slice());
    assert!(monte_carlo_irr(30, 1.5, 10, 1).is_err());
}

#[test]
fn monte_carlo_tracks_the_exact_mean() {
    let n = 12u64;
    let exact = rational_to_f64(&expected_irr_edge_conditioned(n));
    let run = monte_carlo_irr(n as usize, 0.5, 4000, 7).unwrap();
    assert!((run.mean - exact).abs() < 4.0 * run.std_error, "mean {} vs {exact} (se {})", run.mean, run.std_error);
}

#[test]
fn samplers_produce_the_requested_shapes() {
    for seed in 0..20 {
        let t = sample_tree(15, seed);
        assert!(t.is_tree());
        let g = sample_connected(15, 0.1, seed).unwrap();
        assert!(g.is_connected() && g.m() >= 14);
        assert_eq!(sample_gnp(15, 0.3, seed).unwrap(), sample_gnp(15, 0.3, seed).unwrap());
    }
}
