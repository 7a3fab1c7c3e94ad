//! The four dissimilarity measures between undirected graphs:
//!
//! * embedding-based ("dne"): node-embedding distance distributions
//!   compared through Jensen–Shannon divergence, averaged over stochastic
//!   embedding realizations;
//! * shortest-path ("dsp"): three weighted terms over hop-distance
//!   distributions, node dispersion, and alpha centrality of the graph and
//!   its complement;
//! * communicability ("dc"): base-2 Jensen–Shannon divergence of sorted
//!   normalized communicability sequences;
//! * hybrid ("dm"): the embedding measure with the histogram replaced by a
//!   lambda-blend of shortest-path and embedding distributions.

mod alpha;
mod communicability;
mod divergence;
mod histogram;

pub use alpha::{alpha_centrality_distribution, largest_adjacency_eigenvalue};
pub use communicability::{communicability_matrix, communicability_sequence, DENSE_NODE_LIMIT};
pub use divergence::{
    entropy_bits, entropy_nats, generalized_js, js_two, network_js, DistributionSet,
};
pub use histogram::{
    embedding_histograms, hybrid_distributions, spd_distributions, SpdDistributionSet,
};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{
    distance_matrix, generate_walks, train_skipgram, SkipGramConfig, WalkConfig,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::derive_seed;

const LN2: f64 = std::f64::consts::LN_2;

/// Outcome of one measure evaluation, ready for JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DissimilarityResult {
    pub measure: String,
    pub value: f64,
    /// Sample standard deviation over realizations (0 when deterministic).
    pub std_dev: f64,
    pub realizations: usize,
    /// Mean contribution of each weighted term.
    pub terms: BTreeMap<String, f64>,
    pub params: MeasureParams,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct MeasureParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bins: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_frac: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w3: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walks_per_node: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negatives: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epochs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Everything the embedding-based measures need per evaluation.
#[derive(Debug, Clone)]
pub struct EmbeddingMeasureConfig {
    /// Weight of the mean-distribution term; 1 - omega weighs the
    /// heterogeneity difference.
    pub omega: f64,
    /// Histogram bin count L.
    pub bins: usize,
    pub walk: WalkConfig,
    pub skipgram: SkipGramConfig,
    pub realizations: usize,
    /// Master seed; per-realization seeds derive from it.
    pub seed: u64,
}

impl Default for EmbeddingMeasureConfig {
    fn default() -> Self {
        EmbeddingMeasureConfig {
            omega: 1.0,
            bins: 10,
            walk: WalkConfig::default(),
            skipgram: SkipGramConfig::default(),
            realizations: 10,
            seed: 0,
        }
    }
}

impl EmbeddingMeasureConfig {
    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.omega) {
            return Err(Error::invalid(format!("omega {} outside [0, 1]", self.omega)));
        }
        if self.realizations == 0 {
            return Err(Error::invalid("at least one realization required"));
        }
        self.walk.validate()?;
        self.skipgram.validate()
    }

    fn fill_params(&self, params: &mut MeasureParams) {
        params.omega = Some(self.omega);
        params.bins = Some(self.bins);
        params.dimension = Some(self.skipgram.dimension);
        params.walks_per_node = Some(self.walk.walks_per_node);
        params.walk_length = Some(self.walk.walk_length);
        params.window = Some(self.skipgram.window);
        params.negatives = Some(self.skipgram.negatives);
        params.epochs = Some(self.skipgram.epochs);
        params.seed = Some(self.seed);
    }
}

/// Per-graph artifact of one embedding realization: the binned distance
/// rows and their heterogeneity.
#[derive(Debug, Clone)]
pub struct EmbeddingProfile {
    pub histograms: DistributionSet,
    pub heterogeneity: f64,
}

/// Embed one graph with explicit seeds and bin the distances.
pub fn embedding_profile(
    graph: &Graph,
    bins: usize,
    walk: &WalkConfig,
    skipgram: &SkipGramConfig,
) -> Result<EmbeddingProfile> {
    let walks = generate_walks(graph, walk)?;
    let emb = train_skipgram(&walks, graph.node_count(), skipgram)?;
    let dm = distance_matrix(&emb)?;
    let histograms = embedding_histograms(&dm, bins)?;
    let heterogeneity = network_js(&histograms);
    Ok(EmbeddingProfile { histograms, heterogeneity })
}

/// Build the profile for realization `realization` of the configured run;
/// `side` keeps the two compared graphs on independent streams.
pub fn embedding_profile_for_realization(
    graph: &Graph,
    cfg: &EmbeddingMeasureConfig,
    realization: u64,
    side: u64,
) -> Result<EmbeddingProfile> {
    let wcfg = WalkConfig {
        seed: derive_seed(cfg.seed, &[realization, side, 0]),
        ..cfg.walk
    };
    let scfg = SkipGramConfig {
        seed: derive_seed(cfg.seed, &[realization, side, 1]),
        ..cfg.skipgram
    };
    embedding_profile(graph, cfg.bins, &wcfg, &scfg)
}

/// The symmetric combination at the core of the embedding measure:
/// omega sqrt(js(mu1, mu2)/ln 2) + (1-omega) |sqrt(js_g1) - sqrt(js_g2)|.
/// Mean rows are tail-padded to a common length. Returns (value, term1, term2).
pub fn dissimilarity_from_profiles(
    left: &EmbeddingProfile,
    right: &EmbeddingProfile,
    omega: f64,
) -> Result<(f64, f64, f64)> {
    let len = left.histograms.row_len().max(right.histograms.row_len());
    let mut mu1 = left.histograms.mean();
    let mut mu2 = right.histograms.mean();
    mu1.resize(len, 0.0);
    mu2.resize(len, 0.0);
    let term1 = omega * (js_two(&mu1, &mu2)? / LN2).sqrt();
    let term2 = (1.0 - omega) * (left.heterogeneity.sqrt() - right.heterogeneity.sqrt()).abs();
    Ok((term1 + term2, term1, term2))
}

fn mean_and_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn check_pair(g1: &Graph, g2: &Graph) -> Result<()> {
    if g1.node_count() < 2 || g2.node_count() < 2 {
        return Err(Error::invalid(
            "dissimilarity measures need at least two nodes per graph",
        ));
    }
    Ok(())
}

/// Embedding-based dissimilarity, mean over seeded realizations.
pub fn embedding_dissimilarity(
    g1: &Graph,
    g2: &Graph,
    cfg: &EmbeddingMeasureConfig,
) -> Result<DissimilarityResult> {
    cfg.validate()?;
    check_pair(g1, g2)?;
    let samples: Vec<(f64, f64, f64)> = (0..cfg.realizations as u64)
        .into_par_iter()
        .map(|r| {
            let p1 = embedding_profile_for_realization(g1, cfg, r, 0)?;
            let p2 = embedding_profile_for_realization(g2, cfg, r, 1)?;
            dissimilarity_from_profiles(&p1, &p2, cfg.omega)
        })
        .collect::<Result<_>>()?;

    let (value, std_dev) = mean_and_std(&samples.iter().map(|s| s.0).collect::<Vec<_>>());
    let mut terms = BTreeMap::new();
    terms.insert(
        "mean_distribution".to_string(),
        samples.iter().map(|s| s.1).sum::<f64>() / samples.len() as f64,
    );
    terms.insert(
        "heterogeneity".to_string(),
        samples.iter().map(|s| s.2).sum::<f64>() / samples.len() as f64,
    );
    let mut params = MeasureParams::default();
    cfg.fill_params(&mut params);
    Ok(DissimilarityResult {
        measure: "dne".to_string(),
        value,
        std_dev,
        realizations: cfg.realizations,
        terms,
        params,
    })
}

/// Network node dispersion: generalized divergence of the shortest-path
/// rows normalized by ln(diameter + 1).
pub fn node_dispersion(graph: &Graph) -> Result<f64> {
    let spd = spd_distributions(graph)?;
    Ok(node_dispersion_of(&spd))
}

/// Dispersion from an already-computed distribution set.
pub fn node_dispersion_of(spd: &SpdDistributionSet) -> f64 {
    let j = generalized_js(&spd.distributions);
    if j <= 0.0 || spd.diameter == 0 {
        return 0.0;
    }
    j / ((spd.diameter + 1) as f64).ln()
}

/// Weights of the three shortest-path terms plus the centrality fraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpWeights {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
    pub alpha_frac: f64,
}

impl Default for SpWeights {
    fn default() -> Self {
        SpWeights { w1: 0.45, w2: 0.45, w3: 0.1, alpha_frac: 0.95 }
    }
}

impl SpWeights {
    fn validate(&self) -> Result<()> {
        if self.w1 < 0.0 || self.w2 < 0.0 || self.w3 < 0.0 {
            return Err(Error::invalid("weights must be nonnegative"));
        }
        if (self.w1 + self.w2 + self.w3 - 1.0).abs() > 1e-9 {
            return Err(Error::invalid(format!(
                "weights must sum to 1 (got {})",
                self.w1 + self.w2 + self.w3
            )));
        }
        Ok(())
    }
}

fn padded_js_sqrt(a: &[f64], b: &[f64]) -> Result<f64> {
    let len = a.len().max(b.len());
    let mut pa = a.to_vec();
    let mut pb = b.to_vec();
    pa.resize(len, 0.0);
    pb.resize(len, 0.0);
    Ok((js_two(&pa, &pb)? / LN2).sqrt())
}

/// Deterministic per-graph inputs of the shortest-path measure.
#[derive(Debug, Clone)]
pub struct SpArtifacts {
    pub spd: SpdDistributionSet,
    pub alpha: Vec<f64>,
    pub alpha_complement: Vec<f64>,
}

pub fn sp_artifacts(graph: &Graph, alpha_frac: f64) -> Result<SpArtifacts> {
    Ok(SpArtifacts {
        spd: spd_distributions(graph)?,
        alpha: alpha_centrality_distribution(graph, alpha_frac)?,
        alpha_complement: alpha_centrality_distribution(&graph.complement(), alpha_frac)?,
    })
}

/// The three weighted terms from precomputed artifacts:
/// (value, mean-distribution, dispersion, alpha-centrality).
pub fn sp_value_from_artifacts(
    a: &SpArtifacts,
    b: &SpArtifacts,
    weights: &SpWeights,
) -> Result<(f64, f64, f64, f64)> {
    let term1 =
        weights.w1 * padded_js_sqrt(&a.spd.distributions.mean(), &b.spd.distributions.mean())?;
    let term2 = weights.w2
        * (node_dispersion_of(&a.spd).sqrt() - node_dispersion_of(&b.spd).sqrt()).abs();
    let term3 = weights.w3 / 2.0
        * (padded_js_sqrt(&a.alpha, &b.alpha)?
            + padded_js_sqrt(&a.alpha_complement, &b.alpha_complement)?);
    Ok((term1 + term2 + term3, term1, term2, term3))
}

/// Shortest-path dissimilarity: mean-distribution term, dispersion term and
/// the alpha-centrality term over graph and complement.
pub fn shortest_path_dissimilarity(
    g1: &Graph,
    g2: &Graph,
    weights: &SpWeights,
) -> Result<DissimilarityResult> {
    weights.validate()?;
    check_pair(g1, g2)?;

    let a = sp_artifacts(g1, weights.alpha_frac)?;
    let b = sp_artifacts(g2, weights.alpha_frac)?;
    let (value, term1, term2, term3) = sp_value_from_artifacts(&a, &b, weights)?;

    let mut terms = BTreeMap::new();
    terms.insert("mean_distribution".to_string(), term1);
    terms.insert("dispersion".to_string(), term2);
    terms.insert("alpha_centrality".to_string(), term3);
    Ok(DissimilarityResult {
        measure: "dsp".to_string(),
        value,
        std_dev: 0.0,
        realizations: 1,
        terms,
        params: MeasureParams {
            w1: Some(weights.w1),
            w2: Some(weights.w2),
            w3: Some(weights.w3),
            alpha_frac: Some(weights.alpha_frac),
            ..Default::default()
        },
    })
}

/// Base-2 Jensen–Shannon divergence of two sorted normalized sequences,
/// front-padded to equal length so sortedness is preserved. In [0, 1].
pub fn communicability_value(s1: &[f64], s2: &[f64]) -> f64 {
    let len = s1.len().max(s2.len());
    let front_pad = |s: &[f64]| -> Vec<f64> {
        let mut padded = vec![0.0; len - s.len()];
        padded.extend_from_slice(s);
        padded
    };
    let p = front_pad(s1);
    let q = front_pad(s2);
    let mix: Vec<f64> = p.iter().zip(&q).map(|(a, b)| (a + b) / 2.0).collect();
    (entropy_bits(&mix) - (entropy_bits(&p) + entropy_bits(&q)) / 2.0).clamp(0.0, 1.0)
}

/// Communicability dissimilarity between two graphs.
pub fn communicability_dissimilarity(g1: &Graph, g2: &Graph) -> Result<DissimilarityResult> {
    let s1 = communicability_sequence(&communicability_matrix(g1)?);
    let s2 = communicability_sequence(&communicability_matrix(g2)?);
    let value = communicability_value(&s1, &s2);

    let mut terms = BTreeMap::new();
    terms.insert("sequence_divergence".to_string(), value);
    Ok(DissimilarityResult {
        measure: "dc".to_string(),
        value,
        std_dev: 0.0,
        realizations: 1,
        terms,
        params: MeasureParams::default(),
    })
}

/// Blend profile: hybrid rows plus their heterogeneity, for one lambda.
pub fn hybrid_profile(
    spd: &SpdDistributionSet,
    emb: &DistributionSet,
    lambda: f64,
) -> Result<EmbeddingProfile> {
    let rows = hybrid_distributions(spd, emb, lambda)?;
    let heterogeneity = network_js(&rows);
    Ok(EmbeddingProfile { histograms: rows, heterogeneity })
}

/// Hybrid dissimilarity: the embedding measure evaluated on blended
/// distributions. At lambda 0 it reproduces the embedding measure on the
/// same realization seeds exactly.
pub fn hybrid_dissimilarity(
    g1: &Graph,
    g2: &Graph,
    lambda: f64,
    cfg: &EmbeddingMeasureConfig,
) -> Result<DissimilarityResult> {
    cfg.validate()?;
    check_pair(g1, g2)?;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::invalid(format!("lambda {lambda} outside [0, 1]")));
    }
    let spd1 = spd_distributions(g1)?;
    let spd2 = spd_distributions(g2)?;

    let samples: Vec<(f64, f64, f64)> = (0..cfg.realizations as u64)
        .into_par_iter()
        .map(|r| {
            let p1 = embedding_profile_for_realization(g1, cfg, r, 0)?;
            let p2 = embedding_profile_for_realization(g2, cfg, r, 1)?;
            let h1 = hybrid_profile(&spd1, &p1.histograms, lambda)?;
            let h2 = hybrid_profile(&spd2, &p2.histograms, lambda)?;
            dissimilarity_from_profiles(&h1, &h2, cfg.omega)
        })
        .collect::<Result<_>>()?;

    let (value, std_dev) = mean_and_std(&samples.iter().map(|s| s.0).collect::<Vec<_>>());
    let mut terms = BTreeMap::new();
    terms.insert(
        "mean_distribution".to_string(),
        samples.iter().map(|s| s.1).sum::<f64>() / samples.len() as f64,
    );
    terms.insert(
        "heterogeneity".to_string(),
        samples.iter().map(|s| s.2).sum::<f64>() / samples.len() as f64,
    );
    let mut params = MeasureParams::default();
    cfg.fill_params(&mut params);
    params.lambda = Some(lambda);
    Ok(DissimilarityResult {
        measure: "dm".to_string(),
        value,
        std_dev,
        realizations: cfg.realizations,
        terms,
        params,
    })
}
