//! Seeded synthetic graph models (ring lattice, small-world rewiring,
//! preferential attachment) and random edge perturbation. All constructors
//! are deterministic functions of (parameters, seed).

use rand::seq::SliceRandom;
use rand::RngExt;
use rand_pcg::Pcg64Mcg;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::rng_from;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorModel {
    #[serde(rename = "KREGULAR")]
    KRegular,
    #[serde(rename = "WS")]
    WattsStrogatz,
    #[serde(rename = "BA")]
    BarabasiAlbert,
}

impl GeneratorModel {
    pub fn parse(token: &str) -> Result<Self> {
        match token.to_ascii_lowercase().as_str() {
            "kregular" | "k-regular" => Ok(GeneratorModel::KRegular),
            "ws" => Ok(GeneratorModel::WattsStrogatz),
            "ba" => Ok(GeneratorModel::BarabasiAlbert),
            other => Err(Error::invalid(format!("unknown generator model '{other}'"))),
        }
    }
}

/// Serializable description of one generated graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub model: GeneratorModel,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        match self.model {
            GeneratorModel::KRegular => {
                let k = self.k.ok_or_else(|| Error::invalid("k-regular model requires k"))?;
                k_regular_ring(self.n, k)
            }
            GeneratorModel::WattsStrogatz => {
                let k = self.k.ok_or_else(|| Error::invalid("WS model requires k"))?;
                let p = self.p.ok_or_else(|| Error::invalid("WS model requires p"))?;
                watts_strogatz(self.n, k, p, self.seed)
            }
            GeneratorModel::BarabasiAlbert => {
                let m = self.m.ok_or_else(|| Error::invalid("BA model requires m"))?;
                barabasi_albert(self.n, m, self.seed)
            }
        }
    }
}

fn check_ring_params(n: usize, k: usize) -> Result<()> {
    if k % 2 != 0 {
        return Err(Error::invalid(format!("ring-lattice degree k={k} must be even")));
    }
    if k >= n {
        return Err(Error::invalid(format!("ring lattice requires k < N (k={k}, N={n})")));
    }
    Ok(())
}

/// Ring lattice: each node connects to its k/2 nearest neighbors per side.
pub fn k_regular_ring(n: usize, k: usize) -> Result<Graph> {
    check_ring_params(n, k)?;
    let mut g = Graph::empty(n);
    for j in 1..=(k / 2) {
        for i in 0..n {
            g.add_edge(i, (i + j) % n);
        }
    }
    Ok(g)
}

/// Rewire one edge the Watts–Strogatz way: keep `keep`, redirect the other
/// endpoint to a uniform non-neighbor. Resamples up to n times before giving
/// up; returns false when skipped.
fn rewire_one(g: &mut Graph, keep: usize, drop: usize, rng: &mut Pcg64Mcg) -> bool {
    let n = g.node_count();
    for _ in 0..n {
        let target = rng.random_range(0..n);
        if target == keep || target == drop || g.has_edge(keep, target) {
            continue;
        }
        g.remove_edge(keep, drop);
        g.add_edge(keep, target);
        return true;
    }
    false
}

/// Watts–Strogatz small world: ring lattice with each edge independently
/// rewired with probability p. Edge count is preserved.
pub fn watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph> {
    check_ring_params(n, k)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("rewiring probability p={p} outside [0, 1]")));
    }
    let mut g = k_regular_ring(n, k)?;
    let mut rng = rng_from(seed, &[0x57_5347]);
    for j in 1..=(k / 2) {
        for i in 0..n {
            if rng.random_range(0.0..1.0) < p {
                let far = (i + j) % n;
                if g.has_edge(i, far) {
                    rewire_one(&mut g, i, far, &mut rng);
                }
            }
        }
    }
    Ok(g)
}

/// Rewire exactly round(fraction * |E|) distinct edges, WS-style. Degree sum
/// and edge count are preserved.
pub fn rewire_fraction(graph: &Graph, fraction: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&fraction) {
        return Err(Error::invalid(format!("rewire fraction {fraction} outside [0, 1]")));
    }
    let mut g = graph.clone();
    let count = (fraction * graph.edge_count() as f64).round() as usize;
    if count == 0 {
        return Ok(g);
    }
    let mut rng = rng_from(seed, &[0x52_4557]);
    let mut edges = graph.edges();
    edges.shuffle(&mut rng);
    for &(u, v) in edges.iter().take(count) {
        let (keep, drop) = if rng.random_range(0..2u8) == 0 { (u, v) } else { (v, u) };
        if g.has_edge(keep, drop) {
            rewire_one(&mut g, keep, drop, &mut rng);
        }
    }
    Ok(g)
}

/// Barabási–Albert preferential attachment. Seed graph is the complete graph
/// on m+1 nodes; each subsequent node attaches m edges to distinct existing
/// nodes chosen proportionally to current degree.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m < 1 || m >= n {
        return Err(Error::invalid(format!("BA model requires 1 <= m < N (m={m}, N={n})")));
    }
    let mut g = Graph::empty(n);
    // endpoint multiset: each node appears once per unit of degree
    let mut stubs: Vec<usize> = Vec::with_capacity(2 * (m * n));
    for u in 0..=m {
        for v in (u + 1)..=m {
            g.add_edge(u, v);
            stubs.push(u);
            stubs.push(v);
        }
    }
    let mut rng = rng_from(seed, &[0x42_41]);
    let mut chosen = Vec::with_capacity(m);
    for new_node in (m + 1)..n {
        chosen.clear();
        while chosen.len() < m {
            let target = stubs[rng.random_range(0..stubs.len())];
            if !chosen.contains(&target) {
                chosen.push(target);
            }
        }
        for &target in &chosen {
            g.add_edge(new_node, target);
            stubs.push(new_node);
            stubs.push(target);
        }
    }
    Ok(g)
}

/// Randomly add (f > 0) or delete (f < 0) round(|f| * |E|) edges.
pub fn perturb(graph: &Graph, f: f64, seed: u64) -> Result<Graph> {
    if !(-1.0..=1.0).contains(&f) {
        return Err(Error::invalid(format!("perturbation fraction f={f} outside [-1, 1]")));
    }
    let m = graph.edge_count();
    let count = (f.abs() * m as f64).round() as usize;
    let mut g = graph.clone();
    if count == 0 {
        return Ok(g);
    }
    let mut rng = rng_from(seed, &[0x50_4552]);
    if f < 0.0 {
        let mut edges = graph.edges();
        edges.shuffle(&mut rng);
        for &(u, v) in edges.iter().take(count) {
            g.remove_edge(u, v);
        }
    } else {
        let n = graph.node_count();
        let capacity = n * (n - 1) / 2;
        let available = capacity - m;
        if count > available {
            return Err(Error::invalid(format!(
                "cannot add {count} edges: only {available} non-edges exist"
            )));
        }
        if m * 2 >= capacity {
            // dense graph: enumerate the complement and sample exactly
            let mut non_edges = Vec::with_capacity(available);
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        non_edges.push((u, v));
                    }
                }
            }
            non_edges.shuffle(&mut rng);
            for &(u, v) in non_edges.iter().take(count) {
                g.add_edge(u, v);
            }
        } else {
            let mut added = 0;
            while added < count {
                let u = rng.random_range(0..n);
                let v = rng.random_range(0..n);
                if u != v && g.add_edge(u, v) {
                    added += 1;
                }
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::spearman;

    #[test]
    fn ring_lattice_shapes() {
        let g = k_regular_ring(1000, 10).unwrap();
        assert_eq!(g.edge_count(), 5000);
        assert!((0..1000).all(|v| g.degree(v) == 10));

        let c4 = k_regular_ring(4, 2).unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);

        let g6 = k_regular_ring(6, 4).unwrap();
        assert_eq!(g6.edge_count(), 12);
        assert!((0..6).all(|v| g6.degree(v) == 4));
    }

    #[test]
    fn ring_lattice_rejects_bad_params() {
        assert!(k_regular_ring(10, 3).is_err());
        assert!(k_regular_ring(10, 10).is_err());
    }

    #[test]
    fn ws_with_p_zero_is_the_lattice() {
        let lattice = k_regular_ring(100, 6).unwrap();
        let ws = watts_strogatz(100, 6, 0.0, 5).unwrap();
        assert_eq!(ws, lattice);
    }

    #[test]
    fn ws_preserves_edge_count() {
        for p in [0.1, 0.5, 1.0] {
            let g = watts_strogatz(1000, 10, p, 42).unwrap();
            assert_eq!(g.edge_count(), 5000, "p={p}");
        }
    }

    #[test]
    fn ws_rewired_count_tracks_binomial() {
        // count surviving lattice edges over many seeds; compare to Binomial(|E|, p)
        let n = 200;
        let k = 6;
        let p = 0.3;
        let lattice = k_regular_ring(n, k).unwrap();
        let lattice_edges = lattice.edges();
        let e = lattice_edges.len() as f64;
        let seeds = 100;
        let mut total_rewired = 0.0;
        for seed in 0..seeds {
            let g = watts_strogatz(n, k, p, seed).unwrap();
            let surviving = lattice_edges.iter().filter(|&&(u, v)| g.has_edge(u, v)).count();
            total_rewired += e - surviving as f64;
        }
        let mean_rewired = total_rewired / seeds as f64;
        // a rewire both fires with prob p and must find a free target; the
        // binomial mean is the ceiling, allow 3 sigma around it
        let expected = e * p;
        let sigma = (e * p * (1.0 - p) / seeds as f64).sqrt();
        assert!(
            (mean_rewired - expected).abs() < 3.0 * sigma + 1.0,
            "mean={mean_rewired} expected={expected}"
        );

        // p=1: essentially no lattice edge survives
        let g = watts_strogatz(1000, 10, 1.0, 7).unwrap();
        let lattice = k_regular_ring(1000, 10).unwrap();
        let surviving = lattice.edges().iter().filter(|&&(u, v)| g.has_edge(u, v)).count();
        assert!((surviving as f64) < 0.02 * 5000.0, "surviving={surviving}");
    }

    #[test]
    fn rewire_fraction_counts() {
        let g = k_regular_ring(1000, 10).unwrap();
        assert_eq!(rewire_fraction(&g, 0.0, 3).unwrap(), g);

        for (fraction, expected_rewired) in [(0.01, 50usize), (0.10, 500usize)] {
            let rewired = rewire_fraction(&g, fraction, 3).unwrap();
            assert_eq!(rewired.edge_count(), 5000);
            let shared = g.edges().iter().filter(|&&(u, v)| rewired.has_edge(u, v)).count();
            let moved = 5000 - shared;
            // every selected edge moves unless target sampling failed or a
            // previous rewire landed on the same pair
            assert!(
                moved <= expected_rewired && moved + 3 >= expected_rewired,
                "fraction={fraction}: moved {moved}, expected about {expected_rewired}"
            );
            assert_eq!(
                (0..1000).map(|v| rewired.degree(v)).sum::<usize>(),
                (0..1000).map(|v| g.degree(v)).sum::<usize>()
            );
        }
    }

    #[test]
    fn ba_edge_count_formula() {
        let g = barabasi_albert(1000, 5, 9).unwrap();
        assert_eq!(g.edge_count(), 15 + 5 * 994);
        assert!((2.0 * g.edge_count() as f64 / 1000.0 - 9.97).abs() < 1e-9);
    }

    #[test]
    fn ba_m1_is_a_tree() {
        let g = barabasi_albert(50, 1, 4).unwrap();
        assert_eq!(g.edge_count(), 49);
        let (_, components) = g.connected_components();
        assert_eq!(components, 1);
    }

    #[test]
    fn ba_rejects_bad_params() {
        assert!(barabasi_albert(5, 0, 1).is_err());
        assert!(barabasi_albert(5, 5, 1).is_err());
    }

    #[test]
    fn ba_early_nodes_accumulate_degree() {
        // Spearman between arrival index and final degree is negative
        for seed in 0..20 {
            let g = barabasi_albert(300, 3, seed).unwrap();
            let arrival: Vec<f64> = (0..300).map(|v| v as f64).collect();
            let degree: Vec<f64> = (0..300).map(|v| g.degree(v) as f64).collect();
            let rho = spearman(&arrival, &degree).unwrap();
            assert!(rho < 0.0, "seed {seed}: rho={rho}");
        }
    }

    #[test]
    fn ba_degree_tail_follows_power_law() {
        // pooled degrees over 100 seeds; CCDF slope on the log-log tail
        let mut degrees: Vec<usize> = Vec::new();
        for seed in 0..100 {
            let g = barabasi_albert(5000, 5, seed).unwrap();
            degrees.extend((0..5000).map(|v| g.degree(v)));
        }
        let total = degrees.len() as f64;
        let max_deg = *degrees.iter().max().unwrap();
        let mut counts = vec![0usize; max_deg + 1];
        for &d in &degrees {
            counts[d] += 1;
        }
        // CCDF at log-spaced degrees within the tail
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let mut above: f64 = total;
        let mut ccdf = vec![0.0; max_deg + 2];
        for d in 0..=max_deg {
            ccdf[d] = above / total;
            above -= counts[d] as f64;
        }
        let mut d = 10.0f64;
        while d < max_deg as f64 / 4.0 {
            let di = d.round() as usize;
            if ccdf[di] > 1e-5 {
                xs.push((di as f64).ln());
                ys.push(ccdf[di].ln());
            }
            d *= 1.3;
        }
        assert!(xs.len() >= 5, "not enough tail points");
        // least squares slope
        let n = xs.len() as f64;
        let sx: f64 = xs.iter().sum();
        let sy: f64 = ys.iter().sum();
        let sxx: f64 = xs.iter().map(|v| v * v).sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(a, b)| a * b).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert!(
            (-2.2..=-1.6).contains(&slope),
            "CCDF tail slope {slope} outside [-2.2, -1.6]"
        );
    }

    #[test]
    fn perturb_edge_arithmetic() {
        let g = watts_strogatz(1000, 10, 0.2, 1).unwrap();
        assert_eq!(perturb(&g, 0.0, 2).unwrap(), g);
        assert_eq!(perturb(&g, -0.5, 2).unwrap().edge_count(), 2500);
        assert_eq!(perturb(&g, 0.3, 2).unwrap().edge_count(), 6500);
    }

    #[test]
    fn perturb_rejects_overfull_addition() {
        let mut g = Graph::empty(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                g.add_edge(u, v);
            }
        }
        g.remove_edge(0, 1);
        // 5 edges, 1 non-edge; f=1.0 would need 5 additions
        assert!(perturb(&g, 1.0, 0).is_err());
        // exactly one addition works and must fill the only free pair
        let filled = perturb(&g, 0.2, 0).unwrap();
        assert_eq!(filled.edge_count(), 6);
    }

    #[test]
    fn generators_are_deterministic_in_seed() {
        let a = watts_strogatz(300, 8, 0.4, 77).unwrap();
        let b = watts_strogatz(300, 8, 0.4, 77).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, watts_strogatz(300, 8, 0.4, 78).unwrap());

        let a = barabasi_albert(300, 4, 5).unwrap();
        let b = barabasi_albert(300, 4, 5).unwrap();
        assert_eq!(a, b);

        let base = k_regular_ring(100, 6).unwrap();
        assert_eq!(
            perturb(&base, 0.2, 9).unwrap(),
            perturb(&base, 0.2, 9).unwrap()
        );
        assert_eq!(
            rewire_fraction(&base, 0.1, 9).unwrap(),
            rewire_fraction(&base, 0.1, 9).unwrap()
        );
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = GeneratorSpec {
            model: GeneratorModel::WattsStrogatz,
            n: 1000,
            k: Some(10),
            p: Some(0.3),
            m: None,
            seed: 7,
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"WS\""));
        assert!(json.contains("\"N\":1000"));
        let back: GeneratorSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        assert_eq!(spec.build().unwrap().edge_count(), 5000);
    }
}
