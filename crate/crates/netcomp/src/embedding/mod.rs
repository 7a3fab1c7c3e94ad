//! Node embeddings via truncated random walks and SkipGram, plus the
//! pairwise Euclidean distance matrix derived from them.

mod skipgram;
mod walks;

pub use skipgram::{
    corpus_loss, pairs_per_epoch, train_skipgram, train_skipgram_with_context, SkipGramConfig,
};
pub use walks::{generate_walks, WalkConfig};

use std::io::{BufRead, Read, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// N x d matrix of node vectors, row i holding the vector for node i
/// (isolated nodes included).
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix {
    node_count: usize,
    dimension: usize,
    data: Vec<f64>,
}

impl EmbeddingMatrix {
    pub fn from_raw(node_count: usize, dimension: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), node_count * dimension);
        EmbeddingMatrix { node_count, dimension, data }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn max_row_norm(&self) -> f64 {
        (0..self.node_count)
            .map(|i| self.row(i).iter().map(|v| v * v).sum::<f64>().sqrt())
            .fold(0.0, f64::max)
    }

    /// Text form: header "N d", then one row of decimals per node.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {}", self.node_count, self.dimension)?;
        for i in 0..self.node_count {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v}")).collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::invalid("missing embedding header"))??;
        let mut parts = header.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::invalid(format!("bad embedding header '{header}'")))
        };
        let n = parse(parts.next())?;
        let d = parse(parts.next())?;
        let mut data = Vec::with_capacity(n * d);
        for (i, line) in lines.enumerate() {
            let line = line?;
            for tok in line.split_whitespace() {
                let v: f64 = tok.parse().map_err(|_| Error::Parse {
                    line: i + 2,
                    message: format!("bad float '{tok}'"),
                })?;
                data.push(v);
            }
        }
        if data.len() != n * d {
            return Err(Error::invalid(format!(
                "embedding body holds {} values, header promises {}",
                data.len(),
                n * d
            )));
        }
        Ok(EmbeddingMatrix::from_raw(n, d, data))
    }

    /// Binary form: u64-LE node count and dimension, then f64-LE row-major
    /// values. Round-trips exactly.
    pub fn write_binary<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(&(self.node_count as u64).to_le_bytes())?;
        w.write_all(&(self.dimension as u64).to_le_bytes())?;
        for v in &self.data {
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(mut r: R) -> Result<Self> {
        let mut u64buf = [0u8; 8];
        r.read_exact(&mut u64buf)?;
        let n = u64::from_le_bytes(u64buf) as usize;
        r.read_exact(&mut u64buf)?;
        let d = u64::from_le_bytes(u64buf) as usize;
        let mut data = Vec::with_capacity(n * d);
        for _ in 0..n * d {
            r.read_exact(&mut u64buf)?;
            data.push(f64::from_le_bytes(u64buf));
        }
        Ok(EmbeddingMatrix::from_raw(n, d, data))
    }
}

/// Symmetric pairwise Euclidean distance matrix with zero diagonal.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
    b_max: f64,
    b_min: f64,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn b_max(&self) -> f64 {
        self.b_max
    }

    pub fn b_min(&self) -> f64 {
        self.b_min
    }
}

/// Pairwise Euclidean distances between embedding rows.
pub fn distance_matrix(emb: &EmbeddingMatrix) -> Result<DistanceMatrix> {
    if emb.data().iter().any(|v| !v.is_finite()) {
        return Err(Error::numeric("embedding contains non-finite values"));
    }
    let n = emb.node_count();
    let mut data = vec![0.0; n * n];
    data.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        let a = emb.row(i);
        for (j, slot) in row.iter_mut().enumerate() {
            if i == j {
                continue;
            }
            let b = emb.row(j);
            let mut s = 0.0;
            for (x, y) in a.iter().zip(b) {
                let diff = x - y;
                s += diff * diff;
            }
            *slot = s.sqrt();
        }
    });
    let b_max = data.par_iter().cloned().reduce(|| 0.0, f64::max);
    Ok(DistanceMatrix { n, data, b_max, b_min: 0.0 })
}

/// Walks plus SkipGram in one call.
pub fn deepwalk(graph: &Graph, wcfg: &WalkConfig, scfg: &SkipGramConfig) -> Result<EmbeddingMatrix> {
    let walks = generate_walks(graph, wcfg)?;
    train_skipgram(&walks, graph.node_count(), scfg)
}



#[cfg(test)]
mod bench_duo {
    use super::*;
    use rayon::prelude::*;

    #[test]
    #[ignore]
    fn bench_two_concurrent_embeddings() {
        let g = crate::generators::watts_strogatz(500, 10, 0.1, 1).unwrap();
        let walks = generate_walks(&g, &WalkConfig::default()).unwrap();
        let t0 = std::time::Instant::now();
        let embs: Vec<_> = [1u64, 2u64]
            .par_iter()
            .map(|&s| {
                train_skipgram(
                    &walks,
                    500,
                    &SkipGramConfig { seed: s, ..SkipGramConfig::default() },
                )
                .unwrap()
            })
            .collect();
        println!("two concurrent trainings: {:?} ({} rows)", t0.elapsed(), embs.len());
    }
}
