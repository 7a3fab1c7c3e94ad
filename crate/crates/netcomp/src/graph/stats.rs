//! Structural summary metrics: average degree, average shortest path
//! length, link density, mean local clustering, diameter and component
//! count. Path metrics are computed over reachable pairs only so
//! disconnected inputs do not poison the averages.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, UNREACHABLE};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub average_degree: f64,
    /// Mean hop distance over reachable ordered pairs; 0 when no pair is
    /// reachable.
    pub average_path_length: f64,
    pub link_density: f64,
    pub average_clustering: f64,
    /// Largest finite hop distance.
    pub diameter: usize,
    pub component_count: usize,
}

/// Local clustering coefficient of `v`; nodes of degree < 2 contribute 0.
pub fn local_clustering(graph: &Graph, v: usize) -> f64 {
    let nbrs = graph.neighbors(v);
    let d = nbrs.len();
    if d < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if graph.has_edge(a, b) {
                links += 1;
            }
        }
    }
    2.0 * links as f64 / (d as f64 * (d - 1) as f64)
}

pub fn graph_stats(graph: &Graph) -> GraphStats {
    let n = graph.node_count();
    let m = graph.edge_count();
    assert!(n >= 1, "graph_stats requires at least one node");

    let (dist_sum, reachable_pairs, diameter) = (0..n)
        .into_par_iter()
        .map(|source| {
            let dist = graph.bfs_distances(source);
            let mut sum = 0u64;
            let mut pairs = 0u64;
            let mut max = 0u32;
            for (v, &d) in dist.iter().enumerate() {
                if v != source && d != UNREACHABLE {
                    sum += d as u64;
                    pairs += 1;
                    max = max.max(d);
                }
            }
            (sum, pairs, max)
        })
        .reduce(
            || (0, 0, 0),
            |a, b| (a.0 + b.0, a.1 + b.1, a.2.max(b.2)),
        );

    // collect then sum in index order: float addition must not depend on
    // the parallel reduction shape
    let per_node: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|v| local_clustering(graph, v))
        .collect();
    let clustering_sum: f64 = per_node.iter().sum();

    let (_, components) = graph.connected_components();

    GraphStats {
        node_count: n,
        edge_count: m,
        average_degree: 2.0 * m as f64 / n as f64,
        average_path_length: if reachable_pairs > 0 {
            dist_sum as f64 / reachable_pairs as f64
        } else {
            0.0
        },
        link_density: if n >= 2 {
            2.0 * m as f64 / (n as f64 * (n - 1) as f64)
        } else {
            0.0
        },
        average_clustering: clustering_sum / n as f64,
        diameter: diameter as usize,
        component_count: components,
    }
}
