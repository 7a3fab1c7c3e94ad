//! Communicability: the matrix exponential of the adjacency matrix and the
//! sorted normalized sequence of its upper triangle (diagonal included).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{expm, Matrix};

/// Dense exponential work is O(N^3); refuse anything bigger than this.
pub const DENSE_NODE_LIMIT: usize = 5000;

pub fn communicability_matrix(graph: &Graph) -> Result<Matrix> {
    let n = graph.node_count();
    if n > DENSE_NODE_LIMIT {
        return Err(Error::TooLarge { n, limit: DENSE_NODE_LIMIT });
    }
    let mut a = Matrix::zeros(n);
    for (u, v) in graph.edges() {
        a.set(u, v, 1.0);
        a.set(v, u, 1.0);
    }
    expm(&a)
}

/// Upper-triangle entries (with diagonal) normalized to sum 1, ascending.
/// Length N(N+1)/2.
pub fn communicability_sequence(matrix: &Matrix) -> Vec<f64> {
    let n = matrix.size();
    let mut seq = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            seq.push(matrix.get(i, j));
        }
    }
    let total: f64 = seq.iter().sum();
    if total > 0.0 {
        for v in &mut seq {
            *v /= total;
        }
    }
    seq.sort_by(f64::total_cmp);
    seq
}
