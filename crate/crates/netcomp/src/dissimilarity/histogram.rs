//! Per-node distance distributions: binned embedding distances, shortest
//! path histograms, and the lambda-blend of the two.

use rayon::prelude::*;

use crate::dissimilarity::divergence::DistributionSet;
use crate::embedding::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// Row i: the N-1 off-diagonal distances of node i binned into `bins`
/// intervals of the matrix-wide range. Bin z covers ((z-1)D, zD] with
/// D = b_max / bins, except bin 1 which closes at 0. When every distance is
/// zero the mass degenerates into bin 1.
pub fn embedding_histograms(dm: &DistanceMatrix, bins: usize) -> Result<DistributionSet> {
    if bins < 1 {
        return Err(Error::invalid("histogram needs at least one bin"));
    }
    let n = dm.node_count();
    if n < 2 {
        return Err(Error::invalid("distance histograms need at least two nodes"));
    }
    let b_max = dm.b_max();
    let weight = 1.0 / (n - 1) as f64;
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0.0; bins];
            for (j, &x) in dm.row(i).iter().enumerate() {
                if j == i {
                    continue;
                }
                let z = if b_max == 0.0 || x <= 0.0 {
                    1
                } else {
                    ((x / b_max) * bins as f64).ceil() as usize
                };
                row[z.clamp(1, bins) - 1] += weight;
            }
            row
        })
        .collect();
    DistributionSet::new(rows)
}

/// Shortest-path distance distributions plus the diameter that shaped them.
/// Rows have length diameter + 2: index j in 1..=diameter holds the
/// fraction of other nodes at hop distance j, the final index holds the
/// unreachable fraction, index 0 stays empty.
#[derive(Debug, Clone, PartialEq)]
pub struct SpdDistributionSet {
    pub distributions: DistributionSet,
    pub diameter: usize,
}

pub fn spd_distributions(graph: &Graph) -> Result<SpdDistributionSet> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::invalid("shortest-path distributions need at least two nodes"));
    }
    let diameter = (0..n)
        .into_par_iter()
        .map(|s| {
            graph
                .bfs_distances(s)
                .into_iter()
                .filter(|&d| d != UNREACHABLE)
                .max()
                .unwrap_or(0)
        })
        .reduce(|| 0, u32::max) as usize;

    let weight = 1.0 / (n - 1) as f64;
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut row = vec![0.0; diameter + 2];
            for (v, &d) in graph.bfs_distances(s).iter().enumerate() {
                if v == s {
                    continue;
                }
                if d == UNREACHABLE {
                    row[diameter + 1] += weight;
                } else {
                    row[d as usize] += weight;
                }
            }
            row
        })
        .collect();
    Ok(SpdDistributionSet { distributions: DistributionSet::new(rows)?, diameter })
}

/// Per-node blend lambda * P_i + (1 - lambda) * H_i after tail-padding both
/// sets to a common row length, renormalized to sum 1. The endpoints are
/// exact: lambda 0 returns the padded embedding rows untouched, lambda 1
/// the padded shortest-path rows.
pub fn hybrid_distributions(
    spd: &SpdDistributionSet,
    emb: &DistributionSet,
    lambda: f64,
) -> Result<DistributionSet> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::invalid(format!("lambda {lambda} outside [0, 1]")));
    }
    if spd.distributions.len() != emb.len() {
        return Err(Error::invalid(format!(
            "row-count mismatch: {} shortest-path rows vs {} embedding rows",
            spd.distributions.len(),
            emb.len()
        )));
    }
    let len = spd.distributions.row_len().max(emb.row_len());
    let p = spd.distributions.padded_to(len);
    if lambda == 1.0 {
        return Ok(p);
    }
    let h = emb.padded_to(len);
    if lambda == 0.0 {
        return Ok(h);
    }
    let rows = p
        .rows()
        .iter()
        .zip(h.rows())
        .map(|(pi, hi)| {
            let mut row: Vec<f64> = pi
                .iter()
                .zip(hi)
                .map(|(a, b)| lambda * a + (1.0 - lambda) * b)
                .collect();
            let sum: f64 = row.iter().sum();
            if sum > 0.0 {
                for v in &mut row {
                    *v /= sum;
                }
            }
            row
        })
        .collect();
    DistributionSet::new(rows)
}
