//! Minimal dense linear algebra: just enough for the matrix exponential,
//! the centrality solves and the SPD checks used elsewhere in the crate.
//! Row-major `f64` storage throughout; matrix products parallelize over rows
//! so results do not depend on the thread schedule.

use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend_from_slice(row);
        }
        Matrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        let n = self.n;
        let mut col_sums = vec![0.0; n];
        for i in 0..n {
            let row = self.row(i);
            for (j, v) in row.iter().enumerate() {
                col_sums[j] += v.abs();
            }
        }
        col_sums.into_iter().fold(0.0, f64::max)
    }

    pub fn scale_in_place(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    /// self + other * s
    pub fn add_scaled(&self, other: &Matrix, s: f64) -> Matrix {
        assert_eq!(self.n, other.n);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b * s)
            .collect();
        Matrix { n: self.n, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { n: self.n, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.add_scaled(other, 1.0)
    }

    /// Dense product, ikj loop order, parallel over output rows.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![0.0; n * n];
        out.par_chunks_mut(n).enumerate().for_each(|(i, out_row)| {
            let a_row = self.row(i);
            for (k, &aik) in a_row.iter().enumerate() {
                if aik == 0.0 {
                    continue;
                }
                let b_row = other.row(k);
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += aik * b;
                }
            }
        });
        Matrix { n, data: out }
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in (i + 1)..n {
                if (self.get(i, j) - self.get(j, i)).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Cholesky factorization; `None` when the matrix is not positive
    /// definite. Used by tests to certify SPD outputs.
    pub fn cholesky(&self) -> Option<Matrix> {
        let n = self.n;
        let mut l = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut sum = self.get(i, j);
                for k in 0..j {
                    sum -= l.get(i, k) * l.get(j, k);
                }
                if i == j {
                    if sum <= 0.0 {
                        return None;
                    }
                    l.set(i, j, sum.sqrt());
                } else {
                    l.set(i, j, sum / l.get(j, j));
                }
            }
        }
        Some(l)
    }
}

/// LU factorization with partial pivoting, solving A X = B for matrix B.
/// Consumes copies; sizes are modest everywhere this is used.
pub fn lu_solve(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    assert_eq!(a.n, b.n);
    let n = a.n;
    let mut lu = a.data.clone();
    let mut x = b.clone();
    let mut perm: Vec<usize> = (0..n).collect();

    for col in 0..n {
        // pivot
        let mut pivot_row = col;
        let mut pivot_val = lu[perm[col] * n + col].abs();
        for r in (col + 1)..n {
            let v = lu[perm[r] * n + col].abs();
            if v > pivot_val {
                pivot_val = v;
                pivot_row = r;
            }
        }
        if pivot_val == 0.0 {
            return Err(Error::numeric("singular matrix in linear solve"));
        }
        perm.swap(col, pivot_row);
        let p = perm[col];
        let diag = lu[p * n + col];
        for r in (col + 1)..n {
            let pr = perm[r];
            let factor = lu[pr * n + col] / diag;
            lu[pr * n + col] = factor;
            if factor != 0.0 {
                for c in (col + 1)..n {
                    lu[pr * n + c] -= factor * lu[p * n + c];
                }
            }
        }
    }

    // apply permutation to RHS rows, then forward/back substitution per column
    let mut rhs = vec![0.0; n * n];
    for (r, &pr) in perm.iter().enumerate() {
        rhs[r * n..(r + 1) * n].copy_from_slice(&b.data[pr * n..(pr + 1) * n]);
    }
    // forward: L y = P b (unit lower)
    for r in 1..n {
        let pr = perm[r];
        for k in 0..r {
            let factor = lu[pr * n + k];
            if factor != 0.0 {
                for c in 0..n {
                    rhs[r * n + c] -= factor * rhs[k * n + c];
                }
            }
        }
    }
    // back: U x = y
    for r in (0..n).rev() {
        let pr = perm[r];
        for k in (r + 1)..n {
            let factor = lu[pr * n + k];
            if factor != 0.0 {
                for c in 0..n {
                    rhs[r * n + c] -= factor * rhs[k * n + c];
                }
            }
        }
        let diag = lu[pr * n + r];
        for c in 0..n {
            rhs[r * n + c] /= diag;
        }
    }
    x.data = rhs;
    Ok(x)
}

/// Padé(13) coefficients for the exponential.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling and squaring on a Padé(13) core.
pub fn expm(a: &Matrix) -> Result<Matrix> {
    let n = a.size();
    if n == 0 {
        return Ok(Matrix::zeros(0));
    }
    let norm = a.one_norm();
    if !norm.is_finite() {
        return Err(Error::numeric("non-finite entries in matrix exponential input"));
    }
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let mut a_scaled = a.clone();
    if s > 0 {
        a_scaled.scale_in_place(1.0 / 2f64.powi(s as i32));
    }

    let id = Matrix::identity(n);
    let a2 = a_scaled.mul(&a_scaled);
    let a4 = a2.mul(&a2);
    let a6 = a2.mul(&a4);

    // U = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let mut inner = a6.clone();
    inner.scale_in_place(PADE13[13]);
    inner = inner.add_scaled(&a4, PADE13[11] / 1.0);
    inner = inner.add_scaled(&a2, PADE13[9] / 1.0);
    let mut u = a6.mul(&inner);
    u = u.add_scaled(&a6, PADE13[7]);
    u = u.add_scaled(&a4, PADE13[5]);
    u = u.add_scaled(&a2, PADE13[3]);
    u = u.add_scaled(&id, PADE13[1]);
    u = a_scaled.mul(&u);

    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let mut inner_v = a6.clone();
    inner_v.scale_in_place(PADE13[12]);
    inner_v = inner_v.add_scaled(&a4, PADE13[10]);
    inner_v = inner_v.add_scaled(&a2, PADE13[8]);
    let mut v = a6.mul(&inner_v);
    v = v.add_scaled(&a6, PADE13[6]);
    v = v.add_scaled(&a4, PADE13[4]);
    v = v.add_scaled(&a2, PADE13[2]);
    v = v.add_scaled(&id, PADE13[0]);

    // r = (V - U)^{-1} (V + U), then square s times
    let mut r = lu_solve(&v.sub(&u), &v.add(&u))?;
    for _ in 0..s {
        r = r.mul(&r);
    }
    Ok(r)
}
