//! Shannon entropies and the generalized Jensen–Shannon divergence over
//! sets of per-node distributions. Natural logs throughout; the 0 log 0 = 0
//! convention applies everywhere.

use crate::error::{Error, Result};

/// Rows of equal length, each either a probability distribution (summing
/// to 1) or an all-zero pad.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSet {
    rows: Vec<Vec<f64>>,
    row_len: usize,
}

impl DistributionSet {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let row_len = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != row_len) {
            return Err(Error::invalid("distribution rows must share one length"));
        }
        Ok(DistributionSet { rows, row_len })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_len(&self) -> usize {
        self.row_len
    }

    /// Per-index average of the rows.
    pub fn mean(&self) -> Vec<f64> {
        let mut mu = vec![0.0; self.row_len];
        for row in &self.rows {
            for (m, v) in mu.iter_mut().zip(row) {
                *m += v;
            }
        }
        let n = self.rows.len() as f64;
        for m in &mut mu {
            *m /= n;
        }
        mu
    }

    /// Tail-pad every row with zeros up to `len`.
    pub fn padded_to(&self, len: usize) -> DistributionSet {
        assert!(len >= self.row_len);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut row = r.clone();
                row.resize(len, 0.0);
                row
            })
            .collect();
        DistributionSet { rows, row_len: len }
    }
}

/// -sum p ln p.
pub fn entropy_nats(p: &[f64]) -> f64 {
    p.iter().map(|&v| if v > 0.0 { -v * v.ln() } else { 0.0 }).sum()
}

/// -sum p log2 p.
pub fn entropy_bits(p: &[f64]) -> f64 {
    p.iter().map(|&v| if v > 0.0 { -v * v.log2() } else { 0.0 }).sum()
}

/// Generalized Jensen–Shannon divergence of N rows against their mean:
/// (1/N) sum_{i,j} row_i(j) ln(row_i(j) / mu_j), in [0, ln N].
pub fn generalized_js(set: &DistributionSet) -> f64 {
    if set.is_empty() {
        return 0.0;
    }
    let mu = set.mean();
    let mut total = 0.0;
    for row in set.rows() {
        for (&p, &m) in row.iter().zip(&mu) {
            if p > 0.0 {
                total += p * (p / m).ln();
            }
        }
    }
    (total / set.len() as f64).max(0.0)
}

/// Distribution heterogeneity of a graph-sized set: generalized divergence
/// normalized by ln(N + 1), in [0, 1).
pub fn network_js(set: &DistributionSet) -> f64 {
    if set.len() <= 1 {
        return 0.0;
    }
    generalized_js(set) / ((set.len() + 1) as f64).ln()
}

/// Two-distribution Jensen–Shannon divergence in nats:
/// S((p+q)/2) - (S(p) + S(q))/2, in [0, ln 2].
pub fn js_two(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::invalid(format!(
            "distribution length mismatch: {} vs {} (pad before comparing)",
            p.len(),
            q.len()
        )));
    }
    let mix: Vec<f64> = p.iter().zip(q).map(|(a, b)| (a + b) / 2.0).collect();
    let js = entropy_nats(&mix) - (entropy_nats(p) + entropy_nats(q)) / 2.0;
    Ok(js.clamp(0.0, std::f64::consts::LN_2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngExt;

    fn random_distribution(rng: &mut rand_pcg::Pcg64Mcg, len: usize) -> Vec<f64> {
        let mut row: Vec<f64> = (0..len).map(|_| rng.random_range(0.0..1.0)).collect();
        let sum: f64 = row.iter().sum();
        for v in &mut row {
            *v /= sum;
        }
        row
    }

    #[test]
    fn identical_rows_have_zero_divergence() {
        let row = vec![0.2, 0.3, 0.5];
        let set = DistributionSet::new(vec![row.clone(); 7]).unwrap();
        // the mean row is only equal to the inputs up to summation rounding
        assert!(generalized_js(&set) < 1e-14);
        assert!(network_js(&set) < 1e-14);
    }

    #[test]
    fn disjoint_one_hot_rows_reach_ln_n() {
        for n in [2usize, 4, 9] {
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|i| {
                    let mut r = vec![0.0; n];
                    r[i] = 1.0;
                    r
                })
                .collect();
            let set = DistributionSet::new(rows).unwrap();
            assert!((generalized_js(&set) - (n as f64).ln()).abs() < 1e-12);
        }
        // normalized: 4 one-hot rows over 4 bins
        let rows: Vec<Vec<f64>> = (0..4)
            .map(|i| {
                let mut r = vec![0.0; 4];
                r[i] = 1.0;
                r
            })
            .collect();
        let set = DistributionSet::new(rows).unwrap();
        assert!((network_js(&set) - 4f64.ln() / 5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn single_row_set_is_zero() {
        let set = DistributionSet::new(vec![vec![0.5, 0.5]]).unwrap();
        assert_eq!(network_js(&set), 0.0);
    }

    #[test]
    fn divergence_matches_entropy_identity() {
        // J = S(mu) - mean S(rows), an independent algebraic route
        let mut rng = crate::rng::rng_from(12, &[0]);
        for _ in 0..50 {
            let n = rng.random_range(2..12);
            let len = rng.random_range(2..9);
            let rows: Vec<Vec<f64>> =
                (0..n).map(|_| random_distribution(&mut rng, len)).collect();
            let set = DistributionSet::new(rows).unwrap();
            let direct = generalized_js(&set);
            let by_entropy = entropy_nats(&set.mean())
                - set.rows().iter().map(|r| entropy_nats(r)).sum::<f64>() / n as f64;
            assert!((direct - by_entropy).abs() < 1e-12);
        }
    }

    #[test]
    fn js_two_basics() {
        assert_eq!(js_two(&[0.5, 0.5], &[0.5, 0.5]).unwrap(), 0.0);
        let full = js_two(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!((full - std::f64::consts::LN_2).abs() < 1e-15);
        assert!(js_two(&[1.0], &[0.5, 0.5]).is_err());
    }

    #[test]
    fn js_two_agrees_with_generalized_at_n2() {
        let mut rng = crate::rng::rng_from(14, &[3]);
        for _ in 0..50 {
            let len = rng.random_range(2..10);
            let p = random_distribution(&mut rng, len);
            let q = random_distribution(&mut rng, len);
            let two = js_two(&p, &q).unwrap();
            let set = DistributionSet::new(vec![p, q]).unwrap();
            assert!((two - generalized_js(&set)).abs() < 1e-12);
        }
    }

    #[test]
    fn padding_keeps_divergences_unchanged() {
        let mut rng = crate::rng::rng_from(15, &[1]);
        let rows: Vec<Vec<f64>> = (0..5).map(|_| random_distribution(&mut rng, 6)).collect();
        let set = DistributionSet::new(rows).unwrap();
        let padded = set.padded_to(10);
        assert_eq!(generalized_js(&set), generalized_js(&padded));
        assert_eq!(network_js(&set), network_js(&padded));
    }
}
