//! SkipGram with negative sampling over walk corpora.
//!
//! Center ("input") vectors start uniform in [-0.5/d, 0.5/d), context
//! vectors start at zero. For every in-window (center, context) pair the
//! positive update is paired with `negatives` samples drawn proportionally
//! to corpus frequency^(3/4); the learning rate decays linearly from
//! `initial_lr` to `min_lr` over the total number of pairs. Deterministic
//! mode processes pairs in a fixed order on one thread; parallel mode shards
//! walks across threads with lock-free element-wise atomic updates.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rand::RngExt;
use rand_pcg::Pcg64Mcg;
use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingMatrix;
use crate::error::{Error, Result};
use crate::rng::rng_from;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkipGramConfig {
    pub dimension: usize,
    pub window: usize,
    pub negatives: usize,
    pub epochs: usize,
    pub initial_lr: f64,
    pub min_lr: f64,
    pub seed: u64,
    /// False: deterministic single-threaded training. True: lock-free
    /// multi-threaded updates whose result varies run to run.
    pub parallel: bool,
}

impl Default for SkipGramConfig {
    fn default() -> Self {
        SkipGramConfig {
            dimension: 128,
            window: 8,
            negatives: 5,
            epochs: 5,
            initial_lr: 0.025,
            min_lr: 1e-4,
            seed: 0,
            parallel: false,
        }
    }
}

impl SkipGramConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dimension < 1 {
            return Err(Error::invalid("embedding dimension must be at least 1"));
        }
        if self.window < 1 || self.negatives < 1 {
            return Err(Error::invalid("window and negative count must be at least 1"));
        }
        if !(self.initial_lr > self.min_lr && self.min_lr > 0.0) {
            return Err(Error::invalid("learning rates must satisfy initial_lr > min_lr > 0"));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[inline]
fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    let ac = a.chunks_exact(8);
    let bc = b.chunks_exact(8);
    let (ra, rb) = (ac.remainder(), bc.remainder());
    let mut acc = [0.0f64; 8];
    for (x, y) in ac.zip(bc) {
        for i in 0..8 {
            acc[i] += x[i] * y[i];
        }
    }
    let mut s = acc.iter().sum::<f64>();
    for (x, y) in ra.iter().zip(rb) {
        s += x * y;
    }
    s
}

#[inline]
fn axpy(y: &mut [f64], a: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Walker–Vose alias table for O(1) draws from the unigram^(3/4) table.
struct AliasTable {
    prob: Vec<f64>,
    alias: Vec<u32>,
}

impl AliasTable {
    fn new(weights: &[f64]) -> Self {
        let n = weights.len();
        let total: f64 = weights.iter().sum();
        let mut prob = vec![0.0; n];
        let mut alias = vec![0u32; n];
        let mut scaled: Vec<f64> = weights.iter().map(|w| w * n as f64 / total).collect();
        let mut small: Vec<usize> = Vec::new();
        let mut large: Vec<usize> = Vec::new();
        for (i, &s) in scaled.iter().enumerate() {
            if s < 1.0 {
                small.push(i);
            } else {
                large.push(i);
            }
        }
        while let (Some(&s), Some(&l)) = (small.last(), large.last()) {
            small.pop();
            prob[s] = scaled[s];
            alias[s] = l as u32;
            scaled[l] = (scaled[l] + scaled[s]) - 1.0;
            if scaled[l] < 1.0 {
                large.pop();
                small.push(l);
            }
        }
        for &i in small.iter().chain(large.iter()) {
            prob[i] = 1.0;
            alias[i] = i as u32;
        }
        AliasTable { prob, alias }
    }

    /// One uniform draw serves both the slot index and the coin.
    #[inline]
    fn sample(&self, rng: &mut Pcg64Mcg) -> u32 {
        let bits = rng.random::<u64>();
        let i = ((bits >> 32) as usize * self.prob.len()) >> 32;
        let coin = (bits & 0xFFFF_FFFF) as f64 / 4294967296.0;
        if coin < self.prob[i] {
            i as u32
        } else {
            self.alias[i]
        }
    }
}

fn frequency_weights(walks: &[Vec<u32>], node_count: usize) -> Vec<f64> {
    let mut counts = vec![0u64; node_count];
    for walk in walks {
        for &token in walk {
            counts[token as usize] += 1;
        }
    }
    counts.iter().map(|&c| (c as f64).powf(0.75)).collect()
}

/// Number of (center, context) pairs the window produces over one epoch.
pub fn pairs_per_epoch(walks: &[Vec<u32>], window: usize) -> u64 {
    let mut total = 0u64;
    for walk in walks {
        let l = walk.len();
        for t in 0..l {
            let lo = t.saturating_sub(window);
            let hi = (t + window).min(l - 1);
            total += (hi - lo) as u64;
        }
    }
    total
}

#[inline]
fn prefetch_start(data: &[f64], offset: usize) {
    #[cfg(target_arch = "x86_64")]
    unsafe {
        use std::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        let ptr = data.as_ptr().add(offset) as *const i8;
        _mm_prefetch(ptr, _MM_HINT_T0);
        _mm_prefetch(ptr.add(64), _MM_HINT_T0);
        _mm_prefetch(ptr.add(128), _MM_HINT_T0);
        _mm_prefetch(ptr.add(192), _MM_HINT_T0);
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        let _ = (data, offset);
    }
}

/// One positive update plus its negative samples; the accumulated center
/// delta is applied by the caller (word2vec convention). Targets are drawn
/// upfront (same stream as drawing inline) so the next row can be
/// prefetched while the current one is processed; the first target
/// initializes the delta buffer and the delta accumulation shares one pass
/// with each context-row update.
#[inline]
#[allow(clippy::too_many_arguments)]
fn update_pair(
    centers: &[f64],
    contexts: &mut [f64],
    center_delta: &mut [f64],
    targets: &mut Vec<(usize, f64)>,
    d: usize,
    center: usize,
    context: usize,
    negatives: usize,
    lr: f64,
    table: &AliasTable,
    rng: &mut Pcg64Mcg,
) {
    let center_row = &centers[center * d..(center + 1) * d];
    targets.clear();
    targets.push((context, 1.0));
    for _ in 0..negatives {
        let t = table.sample(rng) as usize;
        if t != context {
            targets.push((t, 0.0));
        }
    }
    prefetch_start(contexts, targets[0].0 * d);

    for i in 0..targets.len() {
        let (target, label) = targets[i];
        if i + 1 < targets.len() {
            prefetch_start(contexts, targets[i + 1].0 * d);
        }
        let target_row = &mut contexts[target * d..(target + 1) * d];
        let g = (label - sigmoid(dot(center_row, target_row))) * lr;
        if i == 0 {
            for ((delta, u), &c) in center_delta.iter_mut().zip(target_row).zip(center_row) {
                let u_old = *u;
                *delta = g * u_old;
                *u = u_old + g * c;
            }
        } else {
            for ((delta, u), &c) in center_delta.iter_mut().zip(target_row).zip(center_row) {
                let u_old = *u;
                *delta += g * u_old;
                *u = u_old + g * c;
            }
        }
    }
}

fn init_centers(node_count: usize, d: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng_from(seed, &[0x1_817]);
    let span = 0.5 / d as f64;
    (0..node_count * d).map(|_| rng.random_range(-span..span)).collect()
}

fn train_deterministic(
    walks: &[Vec<u32>],
    node_count: usize,
    cfg: &SkipGramConfig,
    table: &AliasTable,
    total_pairs: u64,
) -> (Vec<f64>, Vec<f64>) {
    let d = cfg.dimension;
    let mut centers = init_centers(node_count, d, cfg.seed);
    let mut contexts = vec![0.0; node_count * d];
    let mut center_delta = vec![0.0; d];
    let mut targets = Vec::with_capacity(cfg.negatives + 1);
    let mut rng = rng_from(cfg.seed, &[0x4E_9]);
    let lr_step = (cfg.initial_lr - cfg.min_lr) / total_pairs as f64;
    let mut pair_idx = 0u64;

    for _ in 0..cfg.epochs {
        for walk in walks {
            let l = walk.len();
            for t in 0..l {
                let center = walk[t] as usize;
                let lo = t.saturating_sub(cfg.window);
                let hi = (t + cfg.window).min(l - 1);
                for o in lo..=hi {
                    if o == t {
                        continue;
                    }
                    let lr = (cfg.initial_lr - lr_step * pair_idx as f64).max(cfg.min_lr);
                    update_pair(
                        &centers,
                        &mut contexts,
                        &mut center_delta,
                        &mut targets,
                        d,
                        center,
                        walk[o] as usize,
                        cfg.negatives,
                        lr,
                        table,
                        &mut rng,
                    );
                    axpy(&mut centers[center * d..(center + 1) * d], 1.0, &center_delta);
                    pair_idx += 1;
                }
            }
        }
    }
    (centers, contexts)
}

/// Lock-free parallel training: walks are sharded across threads, vectors
/// live in atomic cells, updates use relaxed element-wise load/store. Races
/// may drop updates; results vary run to run by design.
fn train_parallel(
    walks: &[Vec<u32>],
    node_count: usize,
    cfg: &SkipGramConfig,
    table: &AliasTable,
    total_pairs: u64,
) -> (Vec<f64>, Vec<f64>) {
    use rayon::prelude::*;

    let d = cfg.dimension;
    let centers: Vec<AtomicU64> = init_centers(node_count, d, cfg.seed)
        .into_iter()
        .map(|v| AtomicU64::new(v.to_bits()))
        .collect();
    let contexts: Vec<AtomicU64> =
        (0..node_count * d).map(|_| AtomicU64::new(0f64.to_bits())).collect();
    let progress = AtomicUsize::new(0);
    let lr_span = cfg.initial_lr - cfg.min_lr;

    let load_row = |m: &[AtomicU64], r: usize, buf: &mut [f64]| {
        for (b, cell) in buf.iter_mut().zip(&m[r * d..(r + 1) * d]) {
            *b = f64::from_bits(cell.load(Ordering::Relaxed));
        }
    };
    let add_row = |m: &[AtomicU64], r: usize, a: f64, x: &[f64]| {
        for (cell, xi) in m[r * d..(r + 1) * d].iter().zip(x) {
            let old = f64::from_bits(cell.load(Ordering::Relaxed));
            cell.store((old + a * xi).to_bits(), Ordering::Relaxed);
        }
    };

    for epoch in 0..cfg.epochs {
        walks.par_iter().enumerate().for_each(|(widx, walk)| {
            let mut rng = rng_from(cfg.seed, &[0x4E_9, epoch as u64, widx as u64]);
            let mut center_buf = vec![0.0; d];
            let mut target_buf = vec![0.0; d];
            let mut delta = vec![0.0; d];
            let l = walk.len();
            for t in 0..l {
                let center = walk[t] as usize;
                let lo = t.saturating_sub(cfg.window);
                let hi = (t + cfg.window).min(l - 1);
                for o in lo..=hi {
                    if o == t {
                        continue;
                    }
                    let done = progress.fetch_add(1, Ordering::Relaxed) as f64;
                    let lr = (cfg.initial_lr - lr_span * (done / total_pairs as f64))
                        .max(cfg.min_lr);
                    load_row(&centers, center, &mut center_buf);
                    delta.fill(0.0);
                    let context = walk[o] as usize;
                    for k in 0..=cfg.negatives {
                        let (target, label) = if k == 0 {
                            (context, 1.0)
                        } else {
                            let t = table.sample(&mut rng) as usize;
                            if t == context {
                                continue;
                            }
                            (t, 0.0)
                        };
                        load_row(&contexts, target, &mut target_buf);
                        let g = (label - sigmoid(dot(&center_buf, &target_buf))) * lr;
                        axpy(&mut delta, g, &target_buf);
                        add_row(&contexts, target, g, &center_buf);
                    }
                    add_row(&centers, center, 1.0, &delta);
                }
            }
        });
    }

    let centers: Vec<f64> = centers
        .into_iter()
        .map(|c| f64::from_bits(c.into_inner()))
        .collect();
    let contexts: Vec<f64> = contexts
        .into_iter()
        .map(|c| f64::from_bits(c.into_inner()))
        .collect();
    (centers, contexts)
}

/// Train and return the center ("input") vectors.
pub fn train_skipgram(
    walks: &[Vec<u32>],
    node_count: usize,
    cfg: &SkipGramConfig,
) -> Result<EmbeddingMatrix> {
    let (centers, _) = train_skipgram_with_context(walks, node_count, cfg)?;
    Ok(centers)
}

/// Variant exposing the context matrix as well (used by the loss probe).
pub fn train_skipgram_with_context(
    walks: &[Vec<u32>],
    node_count: usize,
    cfg: &SkipGramConfig,
) -> Result<(EmbeddingMatrix, EmbeddingMatrix)> {
    cfg.validate()?;
    if walks.is_empty() {
        return Err(Error::invalid("cannot train on an empty walk corpus"));
    }
    let d = cfg.dimension;
    if cfg.epochs == 0 {
        return Ok((
            EmbeddingMatrix::from_raw(node_count, d, init_centers(node_count, d, cfg.seed)),
            EmbeddingMatrix::from_raw(node_count, d, vec![0.0; node_count * d]),
        ));
    }
    let table = AliasTable::new(&frequency_weights(walks, node_count));
    let total_pairs = (pairs_per_epoch(walks, cfg.window) * cfg.epochs as u64).max(1);
    let (centers, contexts) = if cfg.parallel {
        train_parallel(walks, node_count, cfg, &table, total_pairs)
    } else {
        train_deterministic(walks, node_count, cfg, &table, total_pairs)
    };
    Ok((
        EmbeddingMatrix::from_raw(node_count, d, centers),
        EmbeddingMatrix::from_raw(node_count, d, contexts),
    ))
}

/// Negative-sampling objective over the corpus with negatives drawn from a
/// fixed seeded stream; used to check that training reduces the loss.
pub fn corpus_loss(
    centers: &EmbeddingMatrix,
    contexts: &EmbeddingMatrix,
    walks: &[Vec<u32>],
    cfg: &SkipGramConfig,
    loss_seed: u64,
) -> f64 {
    let table = AliasTable::new(&frequency_weights(walks, centers.node_count()));
    let mut rng = rng_from(loss_seed, &[0x10_55]);
    let mut loss = 0.0;
    for walk in walks {
        let l = walk.len();
        for t in 0..l {
            let center = walk[t] as usize;
            let lo = t.saturating_sub(cfg.window);
            let hi = (t + cfg.window).min(l - 1);
            for o in lo..=hi {
                if o == t {
                    continue;
                }
                let context = walk[o] as usize;
                let s = sigmoid(dot(centers.row(center), contexts.row(context)));
                loss -= s.max(1e-300).ln();
                for _ in 0..cfg.negatives {
                    let neg = table.sample(&mut rng) as usize;
                    if neg == context {
                        continue;
                    }
                    let s = sigmoid(-dot(centers.row(center), contexts.row(neg)));
                    loss -= s.max(1e-300).ln();
                }
            }
        }
    }
    loss
}
