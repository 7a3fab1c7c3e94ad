//! Alpha centrality: x = (I - alpha A)^{-1} 1 with alpha a fraction of the
//! inverse spectral radius, returned as a descending probability vector.

use crate::error::{Error, Result};
use crate::graph::Graph;

const POWER_ITERATION_LIMIT: usize = 10_000;
const POWER_ITERATION_TOL: f64 = 1e-10;

/// Largest adjacency eigenvalue by power iteration on the all-ones start
/// vector (norm-ratio estimate, which is stable on bipartite graphs too).
pub fn largest_adjacency_eigenvalue(graph: &Graph) -> Result<f64> {
    let n = graph.node_count();
    if n == 0 || graph.edge_count() == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut estimate = 0.0;
    for _ in 0..POWER_ITERATION_LIMIT {
        let mut y = vec![0.0; n];
        for (u, yu) in y.iter_mut().enumerate() {
            for &v in graph.neighbors(u) {
                *yu += x[v];
            }
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        let previous = estimate;
        estimate = norm;
        for v in &mut y {
            *v /= norm;
        }
        x = y;
        if (estimate - previous).abs() < POWER_ITERATION_TOL * estimate.max(1.0) {
            return Ok(estimate);
        }
    }
    Err(Error::numeric("power iteration did not converge"))
}

/// Solve x = alpha A x + 1 by fixed-point iteration (contracts for
/// alpha < 1/lambda_max), normalize to sum 1 and sort descending.
pub fn alpha_centrality_distribution(graph: &Graph, alpha_frac: f64) -> Result<Vec<f64>> {
    if !(0.0..1.0).contains(&alpha_frac) {
        return Err(Error::invalid(format!(
            "alpha fraction {alpha_frac} outside [0, 1)"
        )));
    }
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::invalid("alpha centrality needs at least one node"));
    }
    let lambda = largest_adjacency_eigenvalue(graph)?;
    let mut x = vec![1.0; n];
    if lambda > 0.0 && alpha_frac > 0.0 {
        let alpha = alpha_frac / lambda;
        for _ in 0..200_000 {
            let mut next = vec![1.0; n];
            for (u, xu) in x.iter().enumerate() {
                if *xu == 0.0 {
                    continue;
                }
                for &v in graph.neighbors(u) {
                    next[v] += alpha * xu;
                }
            }
            let max_delta = next
                .iter()
                .zip(&x)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            let scale = next.iter().cloned().fold(0.0, f64::max);
            x = next;
            if max_delta <= 1e-13 * scale {
                break;
            }
        }
    }
    let total: f64 = x.iter().sum();
    for v in &mut x {
        *v /= total;
    }
    x.sort_by(|a, b| b.total_cmp(a));
    Ok(x)
}
