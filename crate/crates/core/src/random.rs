//! G(n, p) sampling and expected irregularity.
//!
//! The generator is ChaCha8. Trial `t` of a seeded experiment uses stream `t`
//! of the generator keyed by the seed, so trials are independent of thread
//! scheduling.

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::measures::irregularity_graph;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")))
    }
}

fn sample_with(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build_graph(n, &edges).expect("sampled edges are valid")
}

/// Each pair `u < v` is visited in lexicographic order and kept with probability `p`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    Ok(sample_with(n, p, &mut rng_for(seed, 0)))
}

/// A random recursive spanning tree (vertex `i` joins a uniform earlier vertex)
/// overlaid with G(n, p). Always connected.
pub fn sample_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut rng = rng_for(seed, 0);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build_graph(n, &edges)
}

/// A random recursive tree on `n` vertices.
pub fn sample_tree(n: usize, seed: u64) -> Graph {
    sample_connected(n, 0.0, seed).expect("p = 0 is valid")
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `E|X - Y|` for independent `X, Y ~ Bin(m, 1/2)`: `(m+1) C(2m, m+1) / 4^m`.
pub fn abs_diff_binomial_expectation(m: u64) -> BigRational {
    let num = BigUint::from(m + 1) * binomial(2 * m, m + 1);
    ratio(num, BigUint::from(4u32).pow(m as u32))
}

/// The same expectation by direct summation over both binomials.
pub fn abs_diff_binomial_bruteforce(m: u64) -> BigRational {
    let mut num = BigUint::zero();
    for a in 0..=m {
        for b in 0..=m {
            num += BigUint::from(a.abs_diff(b)) * binomial(m, a) * binomial(m, b);
        }
    }
    ratio(num, BigUint::from(4u32).pow(m as u32))
}

/// Largest order for exhaustive enumeration.
pub const MAX_EXACT_ORDER: usize = 5;

/// Exact `E[irr(G(n, 1/2))]` over all labeled graphs on `n` vertices.
pub fn exact_expected_irr(n: usize) -> Result<BigRational> {
    if n > MAX_EXACT_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive expectation supports n <= {MAX_EXACT_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total: u64 = (0u64..1 << pairs.len())
        .map(|mask| {
            let mut deg = [0u64; MAX_EXACT_ORDER];
            let present: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            for &(u, v) in &present {
                deg[u] += 1;
                deg[v] += 1;
            }
            present.iter().map(|&(u, v)| deg[u].abs_diff(deg[v])).sum::<u64>()
        })
        .sum();
    Ok(ratio(BigUint::from(total), BigUint::one() << pairs.len()))
}

/// `C(n,2) · 1/2 · E|X' - Y'|` with `X', Y' ~ Bin(n-2, 1/2)`: conditioning on the
/// edge being present makes both endpoint degrees `1 + Bin(n-2, 1/2)`.
pub fn expected_irr_edge_conditioned(n: u64) -> BigRational {
    if n < 2 {
        return BigRational::zero();
    }
    let pairs = ratio(binomial(n, 2), BigUint::from(2u32));
    pairs * abs_diff_binomial_expectation(n - 2)
}

/// `C(n,2) · 1/2 · E|X - Y|` with `X, Y ~ Bin(n-1, 1/2)` treated as independent.
pub fn expected_irr_unconditioned(n: u64) -> BigRational {
    if n < 1 {
        return BigRational::zero();
    }
    let pairs = ratio(binomial(n, 2), BigUint::from(2u32));
    pairs * abs_diff_binomial_expectation(n - 1)
}

/// Leading term `n^{5/2} / (4 √π)`.
pub fn irr_asymptotic(n: usize) -> f64 {
    (n as f64).powf(2.5) / (4.0 * std::f64::consts::PI.sqrt())
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomExperiment {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub values: Vec<u64>,
    pub mean: f64,
    pub std_error: f64,
    /// `mean / (n^{5/2} / (4 √π))`.
    pub ratio: f64,
}

/// Neumaier-compensated sum.
fn compensated_sum(xs: impl Iterator<Item = f64>) -> f64 {
    let (mut s, mut c) = (0.0f64, 0.0f64);
    for x in xs {
        let t = s + x;
        c += if s.abs() >= x.abs() { (s - t) + x } else { (x - t) + s };
        s = t;
    }
    s + c
}

/// Samples `trials` graphs from G(n, p) (trial `t` on stream `t`) and reports irregularity statistics.
pub fn monte_carlo_irr(n: usize, p: f64, trials: usize, seed: u64) -> Result<RandomExperiment> {
    check_p(p)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    let values: Vec<u64> = (0..trials as u64)
        .into_par_iter()
        .map(|t| irregularity_graph(&sample_with(n, p, &mut rng_for(seed, t))))
        .collect();
    let k = trials as f64;
    let mean = compensated_sum(values.iter().map(|&v| v as f64)) / k;
    let var = if trials > 1 {
        compensated_sum(values.iter().map(|&v| (v as f64 - mean).powi(2))) / (k - 1.0)
    } else {
        0.0
    };
    let std_error = (var / k).sqrt();
    Ok(RandomExperiment { n, p, trials, seed, values, mean, std_error, ratio: mean / irr_asymptotic(n) })
}
