//! Degree-free classical centralities: eccentricity, closeness, betweenness, eigenvector.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, VecDeque};

pub fn eccentricities(dm: &DistanceMatrix) -> Vec<u32> {
    (0..dm.n()).map(|v| dm.eccentricity(v)).collect()
}

/// `sum over u of d(v,u)`; closeness is its reciprocal.
pub fn distance_sums(dm: &DistanceMatrix) -> Result<Vec<u64>> {
    (0..dm.n())
        .map(|v| {
            dm.row(v).iter().try_fold(0u64, |acc, &d| {
                if d == UNREACHABLE {
                    Err(Error::Disconnected("closeness"))
                } else {
                    Ok(acc + u64::from(d))
                }
            })
        })
        .collect()
}

/// `cc(v) = 1 / sum of distances` (0 for a single vertex).
pub fn closeness(dm: &DistanceMatrix) -> Result<Vec<f64>> {
    Ok(distance_sums(dm)?
        .into_iter()
        .map(|s| if s == 0 { 0.0 } else { 1.0 / s as f64 })
        .collect())
}

fn path_counts(g: &Graph, s: usize) -> Result<(Vec<u32>, Vec<u128>)> {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut sigma = vec![0u128; n];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    sigma[s] = 1;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[u] + 1 {
                sigma[w] = sigma[w].checked_add(sigma[u]).ok_or(Error::Overflow("path counting"))?;
            }
        }
    }
    Ok((dist, sigma))
}

/// Exact betweenness over unordered pairs `{s, t}` with `s, t != v`.
pub fn betweenness(g: &Graph) -> Result<Vec<BigRational>> {
    let n = g.n();
    let rows: Vec<(Vec<u32>, Vec<u128>)> = (0..n).map(|s| path_counts(g, s)).collect::<Result<_>>()?;
    // Per vertex: denominator -> accumulated numerator.
    let mut acc: Vec<BTreeMap<u128, u128>> = vec![BTreeMap::new(); n];
    for s in 0..n {
        let (ds, ss) = &rows[s];
        for t in s + 1..n {
            let dst = ds[t];
            if dst == UNREACHABLE || dst < 2 {
                continue;
            }
            let (dt, st) = &rows[t];
            for v in 0..n {
                if v == s || v == t || ds[v] == UNREACHABLE || ds[v] + dt[v] != dst {
                    continue;
                }
                let num = ss[v].checked_mul(st[v]).ok_or(Error::Overflow("betweenness"))?;
                let slot = acc[v].entry(ss[t]).or_insert(0);
                *slot = slot.checked_add(num).ok_or(Error::Overflow("betweenness"))?;
            }
        }
    }
    Ok(acc
        .into_iter()
        .map(|m| {
            m.into_iter().fold(BigRational::zero(), |sum, (den, num)| {
                sum + BigRational::new(BigInt::from(num), BigInt::from(den))
            })
        })
        .collect())
}

pub fn betweenness_f64(bc: &[BigRational]) -> Vec<f64> {
    bc.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions { tolerance: 1e-12, max_iterations: 100_000 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvector {
    pub vector: Vec<f64>,
    pub eigenvalue: f64,
    pub iterations: usize,
}

impl Eigenvector {
    /// Coordinates rounded to 1e-9, for exact tie detection.
    pub fn rank_keys(&self) -> Vec<i64> {
        self.vector.iter().map(|x| (x * 1e9).round() as i64).collect()
    }
}

pub fn eigenvector(g: &Graph) -> Result<Eigenvector> {
    eigenvector_with(g, EigenOptions::default())
}

/// Dominant unit eigenvector of the adjacency matrix, by power iteration on
/// `A + I` from the all-ones vector. The shift keeps bipartite graphs from
/// oscillating and leaves the eigenvectors unchanged.
pub fn eigenvector_with(g: &Graph, opts: EigenOptions) -> Result<Eigenvector> {
    g.require_connected("eigenvector centrality")?;
    let n = g.n();
    if n == 0 {
        return Ok(Eigenvector { vector: Vec::new(), eigenvalue: 0.0, iterations: 0 });
    }
    let norm = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for it in 1..=opts.max_iterations {
        for v in 0..n {
            y[v] = x[v] + g.neighbors(v).iter().map(|&u| x[u]).sum::<f64>();
        }
        let s = norm(&y);
        y.iter_mut().for_each(|v| *v /= s);
        let delta = x.iter().zip(&y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        std::mem::swap(&mut x, &mut y);
        if delta < opts.tolerance {
            let ax: Vec<f64> = (0..n).map(|v| g.neighbors(v).iter().map(|&u| x[u]).sum()).collect();
            let eigenvalue = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
            return Ok(Eigenvector { vector: x, eigenvalue, iterations: it });
        }
    }
    Err(Error::NoConvergence(opts.max_iterations))
}
