//! Newman modularity and a greedy agglomerative (Louvain-style) optimizer:
//! seeded local moves followed by community aggregation, repeated to a fixed
//! point, best-of-restarts reported.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{derive_seed, rng_from};

/// Assignment of every node to exactly one community label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Build from raw labels; they are renumbered densely in order of first
    /// appearance.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        let mut remap = BTreeMap::new();
        let mut dense = Vec::with_capacity(labels.len());
        for l in labels {
            let next = remap.len();
            let id = *remap.entry(l).or_insert(next);
            dense.push(id);
        }
        Partition { labels: dense }
    }

    pub fn all_in_one(node_count: usize) -> Self {
        Partition { labels: vec![0; node_count] }
    }

    pub fn singletons(node_count: usize) -> Self {
        Partition { labels: (0..node_count).collect() }
    }

    pub fn community_of(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn community_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Q = sum over communities of [e_c/|E| - (d_c/2|E|)^2].
pub fn modularity(graph: &Graph, partition: &Partition) -> Result<f64> {
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::invalid("modularity is undefined for a graph with no edges"));
    }
    if partition.len() != graph.node_count() {
        return Err(Error::invalid(format!(
            "partition covers {} nodes, graph has {}",
            partition.len(),
            graph.node_count()
        )));
    }
    let communities = partition.community_count();
    let mut intra = vec![0usize; communities];
    let mut degree = vec![0usize; communities];
    for v in 0..graph.node_count() {
        degree[partition.community_of(v)] += graph.degree(v);
    }
    for (u, v) in graph.edges() {
        if partition.community_of(u) == partition.community_of(v) {
            intra[partition.community_of(u)] += 1;
        }
    }
    let m = m as f64;
    let mut q = 0.0;
    for c in 0..communities {
        let e_c = intra[c] as f64 / m;
        let d_c = degree[c] as f64 / (2.0 * m);
        q += e_c - d_c * d_c;
    }
    Ok(q)
}

/// Aggregated working graph for the optimizer: weighted adjacency between
/// current communities plus intra-community weight per node.
struct WorkGraph {
    adj: Vec<BTreeMap<usize, f64>>,
    self_weight: Vec<f64>,
    total_weight: f64, // == |E| of the original graph
}

impl WorkGraph {
    fn from_graph(graph: &Graph) -> Self {
        let n = graph.node_count();
        let mut adj = vec![BTreeMap::new(); n];
        for (u, v) in graph.edges() {
            *adj[u].entry(v).or_insert(0.0) += 1.0;
            *adj[v].entry(u).or_insert(0.0) += 1.0;
        }
        WorkGraph {
            adj,
            self_weight: vec![0.0; n],
            total_weight: graph.edge_count() as f64,
        }
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    fn strength(&self, v: usize) -> f64 {
        self.adj[v].values().sum::<f64>() + 2.0 * self.self_weight[v]
    }

    /// One pass of local moves in `order`; returns whether anything moved.
    fn local_move_pass(
        &self,
        community: &mut [usize],
        community_strength: &mut [f64],
        order: &[usize],
    ) -> bool {
        let two_m = 2.0 * self.total_weight;
        let mut moved = false;
        for &v in order {
            let k_v = self.strength(v);
            let current = community[v];
            community_strength[current] -= k_v;

            // total edge weight from v into each neighboring community
            let mut weight_to: BTreeMap<usize, f64> = BTreeMap::new();
            weight_to.insert(current, 0.0);
            for (&u, &w) in &self.adj[v] {
                *weight_to.entry(community[u]).or_insert(0.0) += w;
            }

            let mut best = current;
            let mut best_gain = weight_to[&current] - community_strength[current] * k_v / two_m;
            for (&c, &w) in &weight_to {
                let gain = w - community_strength[c] * k_v / two_m;
                if gain > best_gain + 1e-12 {
                    best_gain = gain;
                    best = c;
                }
            }

            community_strength[best] += k_v;
            if best != current {
                community[v] = best;
                moved = true;
            }
        }
        moved
    }

    /// Collapse communities into single nodes.
    fn aggregate(&self, community: &[usize]) -> (WorkGraph, Vec<usize>) {
        let mut remap = BTreeMap::new();
        for &c in community {
            let next = remap.len();
            remap.entry(c).or_insert(next);
        }
        let k = remap.len();
        let mut adj = vec![BTreeMap::new(); k];
        let mut self_weight = vec![0.0; k];
        for v in 0..self.node_count() {
            let cv = remap[&community[v]];
            self_weight[cv] += self.self_weight[v];
            for (&u, &w) in &self.adj[v] {
                let cu = remap[&community[u]];
                if cu == cv {
                    if u > v {
                        self_weight[cv] += w;
                    }
                } else {
                    *adj[cv].entry(cu).or_insert(0.0) += w;
                }
            }
        }
        let dense: Vec<usize> = community.iter().map(|c| remap[c]).collect();
        (
            WorkGraph { adj, self_weight, total_weight: self.total_weight },
            dense,
        )
    }
}

fn louvain_once(graph: &Graph, seed: u64) -> Partition {
    let n = graph.node_count();
    let mut membership: Vec<usize> = (0..n).collect();
    let mut work = WorkGraph::from_graph(graph);
    let mut level = 0u64;

    loop {
        let wn = work.node_count();
        let mut community: Vec<usize> = (0..wn).collect();
        let mut community_strength: Vec<f64> = (0..wn).map(|v| work.strength(v)).collect();

        let mut order: Vec<usize> = (0..wn).collect();
        let mut rng = rng_from(seed, &[0x10_0741, level]);
        let mut any_moved = false;
        loop {
            order.shuffle(&mut rng);
            let moved = work.local_move_pass(&mut community, &mut community_strength, &order);
            any_moved |= moved;
            if !moved {
                break;
            }
        }
        if !any_moved {
            break;
        }
        let (aggregated, dense) = work.aggregate(&community);
        for label in &mut membership {
            *label = dense[*label];
        }
        if aggregated.node_count() == wn {
            break;
        }
        work = aggregated;
        level += 1;
    }

    Partition::from_labels(membership)
}

/// Best modularity over `restarts` seeded optimizer runs. Never returns a
/// partition scoring below the all-in-one baseline, and the returned Q is
/// exactly `modularity(graph, partition)`.
pub fn best_modularity(graph: &Graph, seed: u64, restarts: usize) -> Result<(Partition, f64)> {
    if graph.edge_count() == 0 {
        return Err(Error::invalid("modularity optimization requires at least one edge"));
    }
    let baseline = Partition::all_in_one(graph.node_count());
    let mut best_q = modularity(graph, &baseline)?;
    let mut best = baseline;
    for r in 0..restarts.max(1) {
        let candidate = louvain_once(graph, derive_seed(seed, &[r as u64]));
        let q = modularity(graph, &candidate)?;
        if q > best_q {
            best_q = q;
            best = candidate;
        }
    }
    Ok((best, best_q))
}
