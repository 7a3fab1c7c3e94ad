//! Truncated uniform random walks. Each pass shuffles the start-node order,
//! and every walk derives its own RNG stream from (seed, pass, start node),
//! so generation parallelizes without affecting the result.

use rand::seq::SliceRandom;
use rand::RngExt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::rng_from;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WalkConfig {
    pub walks_per_node: usize,
    pub walk_length: usize,
    pub seed: u64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig { walks_per_node: 10, walk_length: 60, seed: 0 }
    }
}

impl WalkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.walks_per_node < 1 || self.walk_length < 1 {
            return Err(Error::invalid("walk count and length must be at least 1"));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// One walk: uniform steps over neighbors, stopping early at a dead end.
fn single_walk(graph: &Graph, start: usize, length: usize, seed: u64, path: &[u64]) -> Vec<u32> {
    let mut rng = rng_from(seed, path);
    let mut walk = Vec::with_capacity(length);
    let mut current = start;
    walk.push(current as u32);
    for _ in 1..length {
        let nbrs = graph.neighbors(current);
        if nbrs.is_empty() {
            break;
        }
        current = nbrs[rng.random_range(0..nbrs.len())];
        walk.push(current as u32);
    }
    walk
}

/// `walks_per_node * N` walks; every node starts exactly `walks_per_node`
/// walks, in a freshly shuffled order per pass.
pub fn generate_walks(graph: &Graph, cfg: &WalkConfig) -> Result<Vec<Vec<u32>>> {
    cfg.validate()?;
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::invalid("cannot walk an empty graph"));
    }
    assert!(n <= u32::MAX as usize, "node indices must fit in u32");
    let mut corpus = Vec::with_capacity(cfg.walks_per_node * n);
    for pass in 0..cfg.walks_per_node {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng_from(cfg.seed, &[0x0D_DE, pass as u64]));
        let walks: Vec<Vec<u32>> = order
            .par_iter()
            .map(|&start| {
                single_walk(
                    graph,
                    start,
                    cfg.walk_length,
                    cfg.seed,
                    &[0x57_1E9, pass as u64, start as u64],
                )
            })
            .collect();
        corpus.extend(walks);
    }
    Ok(corpus)
}
