//! Batch experiment harness behind the command-line interface: graph
//! generation, pairwise comparison, parameter sweeps, null-model curves,
//! perturbation curves, structural stats and cross-result correlation.
//!
//! Every entry point takes one master seed; the seed of each internal task
//! derives from (master seed, command tag, task indices) so whole suites
//! are reproducible byte for byte in deterministic mode.

mod csvio;

pub use csvio::{read_matrix_csv, read_table_csv, write_matrix_csv, write_table_csv};

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dissimilarity::{
    communicability_dissimilarity, communicability_matrix, communicability_sequence,
    communicability_value, dissimilarity_from_profiles, embedding_dissimilarity,
    embedding_profile, hybrid_dissimilarity, hybrid_profile, shortest_path_dissimilarity,
    sp_artifacts, sp_value_from_artifacts, DissimilarityResult, EmbeddingMeasureConfig,
    EmbeddingProfile, SpArtifacts, SpWeights, SpdDistributionSet,
};
use crate::embedding::{SkipGramConfig, WalkConfig};
use crate::error::{Error, Result};
use crate::generators::{perturb, GeneratorModel, GeneratorSpec};
use crate::graph::{
    best_modularity, graph_stats, read_edge_list_path, write_edge_list_path, Graph, GraphStats,
    LoadedGraph,
};
use crate::null_models::{randomize, DkConfig, DkReport, DkSeries};
use crate::rng::derive_seed;

// command tags keeping seed streams disjoint across subcommands
const TAG_SWEEP_GRAPH: u64 = 0x5357_4731;
const TAG_SWEEP_PREP: u64 = 0x5357_5052;
const TAG_NULL_RANDOMIZE: u64 = 0x4E55_4C31;
const TAG_NULL_PREP: u64 = 0x4E55_4C32;
const TAG_PERTURB: u64 = 0x5045_5231;
const TAG_PERTURB_PREP: u64 = 0x5045_5232;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeasureKind {
    #[serde(rename = "dne")]
    Dne,
    #[serde(rename = "dsp")]
    Dsp,
    #[serde(rename = "dc")]
    Dc,
    #[serde(rename = "dm")]
    Dm,
}

impl MeasureKind {
    pub fn parse(token: &str) -> Result<Self> {
        match token.to_ascii_lowercase().as_str() {
            "dne" => Ok(MeasureKind::Dne),
            "dsp" => Ok(MeasureKind::Dsp),
            "dc" => Ok(MeasureKind::Dc),
            "dm" => Ok(MeasureKind::Dm),
            other => Err(Error::invalid(format!(
                "unknown measure '{other}' (expected dne, dsp, dc or dm)"
            ))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MeasureKind::Dne => "dne",
            MeasureKind::Dsp => "dsp",
            MeasureKind::Dc => "dc",
            MeasureKind::Dm => "dm",
        }
    }
}

/// All measure knobs plus run control, mirroring the CLI flags.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureOptions {
    pub measure: MeasureKind,
    pub omega: f64,
    pub lambda: f64,
    pub bins: usize,
    pub alpha_frac: f64,
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
    pub dimension: usize,
    pub walks_per_node: usize,
    pub walk_length: usize,
    pub window: usize,
    pub negatives: usize,
    pub epochs: usize,
    pub realizations: usize,
    pub seed: u64,
    /// Single-threaded fixed-order SkipGram updates; byte-reproducible runs.
    pub deterministic: bool,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions {
            measure: MeasureKind::Dne,
            omega: 1.0,
            lambda: 0.5,
            bins: 10,
            alpha_frac: 0.95,
            w1: 0.45,
            w2: 0.45,
            w3: 0.1,
            dimension: 128,
            walks_per_node: 10,
            walk_length: 60,
            window: 8,
            negatives: 5,
            epochs: 5,
            realizations: 10,
            seed: 0,
            deterministic: false,
        }
    }
}

impl MeasureOptions {
    pub fn embedding_cfg(&self) -> EmbeddingMeasureConfig {
        EmbeddingMeasureConfig {
            omega: self.omega,
            bins: self.bins,
            walk: WalkConfig {
                walks_per_node: self.walks_per_node,
                walk_length: self.walk_length,
                seed: 0,
            },
            skipgram: SkipGramConfig {
                dimension: self.dimension,
                window: self.window,
                negatives: self.negatives,
                epochs: self.epochs,
                parallel: !self.deterministic,
                ..SkipGramConfig::default()
            },
            realizations: self.realizations,
            seed: self.seed,
        }
    }

    pub fn sp_weights(&self) -> SpWeights {
        SpWeights { w1: self.w1, w2: self.w2, w3: self.w3, alpha_frac: self.alpha_frac }
    }
}

/// Dispatch a full measure evaluation between two graphs.
pub fn evaluate(g1: &Graph, g2: &Graph, opts: &MeasureOptions) -> Result<DissimilarityResult> {
    match opts.measure {
        MeasureKind::Dne => embedding_dissimilarity(g1, g2, &opts.embedding_cfg()),
        MeasureKind::Dsp => shortest_path_dissimilarity(g1, g2, &opts.sp_weights()),
        MeasureKind::Dc => communicability_dissimilarity(g1, g2),
        MeasureKind::Dm => hybrid_dissimilarity(g1, g2, opts.lambda, &opts.embedding_cfg()),
    }
}

/// Per-graph artifacts for one realization of a sweep/curve cell, so a
/// graph embedded once can enter many pair evaluations.
struct Prepared {
    profile: Option<EmbeddingProfile>,
    spd: Option<SpdDistributionSet>,
    sp: Option<SpArtifacts>,
    comm: Option<Vec<f64>>,
}

fn prepare_graph(graph: &Graph, opts: &MeasureOptions, seed: u64) -> Result<Prepared> {
    let mut prepared = Prepared { profile: None, spd: None, sp: None, comm: None };
    match opts.measure {
        MeasureKind::Dne | MeasureKind::Dm => {
            let wcfg = WalkConfig {
                walks_per_node: opts.walks_per_node,
                walk_length: opts.walk_length,
                seed: derive_seed(seed, &[0]),
            };
            let scfg = SkipGramConfig {
                dimension: opts.dimension,
                window: opts.window,
                negatives: opts.negatives,
                epochs: opts.epochs,
                parallel: !opts.deterministic,
                seed: derive_seed(seed, &[1]),
                ..SkipGramConfig::default()
            };
            prepared.profile = Some(embedding_profile(graph, opts.bins, &wcfg, &scfg)?);
            if opts.measure == MeasureKind::Dm {
                prepared.spd = Some(crate::dissimilarity::spd_distributions(graph)?);
            }
        }
        MeasureKind::Dsp => {
            prepared.sp = Some(sp_artifacts(graph, opts.alpha_frac)?);
        }
        MeasureKind::Dc => {
            prepared.comm = Some(communicability_sequence(&communicability_matrix(graph)?));
        }
    }
    Ok(prepared)
}

fn pair_value(a: &Prepared, b: &Prepared, opts: &MeasureOptions) -> Result<f64> {
    match opts.measure {
        MeasureKind::Dne => {
            let (v, _, _) = dissimilarity_from_profiles(
                a.profile.as_ref().unwrap(),
                b.profile.as_ref().unwrap(),
                opts.omega,
            )?;
            Ok(v)
        }
        MeasureKind::Dm => {
            let ha = hybrid_profile(
                a.spd.as_ref().unwrap(),
                &a.profile.as_ref().unwrap().histograms,
                opts.lambda,
            )?;
            let hb = hybrid_profile(
                b.spd.as_ref().unwrap(),
                &b.profile.as_ref().unwrap().histograms,
                opts.lambda,
            )?;
            let (v, _, _) = dissimilarity_from_profiles(&ha, &hb, opts.omega)?;
            Ok(v)
        }
        MeasureKind::Dsp => {
            let (v, _, _, _) = sp_value_from_artifacts(
                a.sp.as_ref().unwrap(),
                b.sp.as_ref().unwrap(),
                &opts.sp_weights(),
            )?;
            Ok(v)
        }
        MeasureKind::Dc => Ok(communicability_value(
            a.comm.as_ref().unwrap(),
            b.comm.as_ref().unwrap(),
        )),
    }
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

fn label_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_graph(path: &Path) -> Result<LoadedGraph> {
    read_edge_list_path(path).map_err(|e| match e {
        Error::Io(io) => Error::invalid(format!("cannot read '{}': {io}", path.display())),
        other => other,
    })
}

// ---------------------------------------------------------------------------
// generate

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenerateReport {
    pub kind: String,
    pub spec: GeneratorSpec,
    pub nodes: usize,
    pub edges: usize,
    pub path: PathBuf,
    pub sidecar: PathBuf,
}

/// Build a graph from its spec, write the edge list plus a JSON sidecar
/// carrying the spec.
pub fn run_generate(spec: &GeneratorSpec, out: &Path) -> Result<GenerateReport> {
    let graph = spec.build()?;
    write_edge_list_path(&graph, out)?;
    let sidecar = PathBuf::from(format!("{}.spec.json", out.display()));
    std::fs::write(&sidecar, serde_json::to_string_pretty(spec)?)?;
    Ok(GenerateReport {
        kind: "generate".to_string(),
        spec: spec.clone(),
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        path: out.to_path_buf(),
        sidecar,
    })
}

// ---------------------------------------------------------------------------
// compare

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub kind: String,
    pub graph_a: String,
    pub graph_b: String,
    #[serde(flatten)]
    pub result: DissimilarityResult,
}

pub fn run_compare(a: &Path, b: &Path, opts: &MeasureOptions) -> Result<ComparisonReport> {
    let ga = load_graph(a)?;
    let gb = load_graph(b)?;
    let result = evaluate(&ga.graph, &gb.graph, opts)?;
    Ok(ComparisonReport {
        kind: "comparison".to_string(),
        graph_a: label_of(a),
        graph_b: label_of(b),
        result,
    })
}

// ---------------------------------------------------------------------------
// sweep

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepResult {
    pub kind: String,
    pub model: GeneratorModel,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub measure: String,
    pub axis: Vec<f64>,
    pub labels: Vec<String>,
    pub mean: Vec<Vec<f64>>,
    pub std: Vec<Vec<f64>>,
    pub realizations: usize,
    pub seed: u64,
}

fn sweep_spec(
    model: GeneratorModel,
    n: usize,
    k: usize,
    value: f64,
    seed: u64,
) -> Result<GeneratorSpec> {
    match model {
        GeneratorModel::WattsStrogatz => {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::invalid(format!("sweep p value {value} outside [0, 1]")));
            }
            Ok(GeneratorSpec { model, n, k: Some(k), p: Some(value), m: None, seed })
        }
        GeneratorModel::BarabasiAlbert => {
            let m = value.round() as usize;
            if (value - m as f64).abs() > 1e-9 || m < 1 {
                return Err(Error::invalid(format!(
                    "sweep m value {value} must be a positive integer"
                )));
            }
            Ok(GeneratorSpec { model, n, k: None, p: None, m: Some(m), seed })
        }
        GeneratorModel::KRegular => Err(Error::invalid("sweep supports the WS and BA models")),
    }
}

/// Pairwise dissimilarity heatmap over a parameter grid. Off-diagonal cells
/// compare graphs generated at the two parameter values; diagonal cells
/// compare two independent realizations at the same value. Cell statistics
/// aggregate `realizations` repetitions with fresh graphs and embeddings.
pub fn run_sweep(
    model: GeneratorModel,
    n: usize,
    k: usize,
    grid: &[f64],
    opts: &MeasureOptions,
    out_dir: Option<&Path>,
) -> Result<SweepResult> {
    if grid.is_empty() {
        return Err(Error::invalid("sweep grid must not be empty"));
    }
    let g = grid.len();
    let reps = opts.realizations.max(1);

    // prepare all (realization, grid index, side) artifacts in parallel
    let tasks: Vec<(usize, usize, usize)> = (0..reps)
        .flat_map(|r| (0..g).flat_map(move |i| [(r, i, 0), (r, i, 1)]))
        .collect();
    let prepared: Vec<Prepared> = tasks
        .par_iter()
        .map(|&(r, i, side)| {
            let gseed =
                derive_seed(opts.seed, &[TAG_SWEEP_GRAPH, r as u64, i as u64, side as u64]);
            let spec = sweep_spec(model, n, k, grid[i], gseed)?;
            let graph = spec.build()?;
            let pseed =
                derive_seed(opts.seed, &[TAG_SWEEP_PREP, r as u64, i as u64, side as u64]);
            prepare_graph(&graph, opts, pseed)
        })
        .collect::<Result<_>>()?;
    let at = |r: usize, i: usize, side: usize| &prepared[(r * g + i) * 2 + side];

    let mut samples = vec![vec![Vec::with_capacity(reps); g]; g];
    for r in 0..reps {
        for i in 0..g {
            for j in i..g {
                let value = if i == j {
                    pair_value(at(r, i, 0), at(r, i, 1), opts)?
                } else {
                    pair_value(at(r, i, 0), at(r, j, 0), opts)?
                };
                samples[i][j].push(value);
            }
        }
    }

    let mut mean = vec![vec![0.0; g]; g];
    let mut std = vec![vec![0.0; g]; g];
    for i in 0..g {
        for j in i..g {
            let (m, s) = mean_and_std(&samples[i][j]);
            mean[i][j] = m;
            mean[j][i] = m;
            std[i][j] = s;
            std[j][i] = s;
        }
    }

    let prefix = match model {
        GeneratorModel::WattsStrogatz => "p",
        GeneratorModel::BarabasiAlbert => "m",
        GeneratorModel::KRegular => "k",
    };
    let labels: Vec<String> = grid.iter().map(|v| format!("{prefix}={v}")).collect();
    let result = SweepResult {
        kind: "sweep".to_string(),
        model,
        n,
        k: (model == GeneratorModel::WattsStrogatz).then_some(k),
        measure: opts.measure.label().to_string(),
        axis: grid.to_vec(),
        labels: labels.clone(),
        mean,
        std,
        realizations: reps,
        seed: opts.seed,
    };

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        write_matrix_csv(&dir.join("sweep_mean.csv"), &labels, &result.mean)?;
        write_matrix_csv(&dir.join("sweep_std.csv"), &labels, &result.std)?;
        std::fs::write(dir.join("sweep_meta.json"), serde_json::to_string_pretty(&result)?)?;
    }
    Ok(result)
}

// ---------------------------------------------------------------------------
// null models

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NullModelCurves {
    pub kind: String,
    pub input: String,
    pub orders: Vec<String>,
    pub lambda_grid: Vec<f64>,
    /// mean[order][lambda]
    pub mean: Vec<Vec<f64>>,
    pub std: Vec<Vec<f64>>,
    pub omega: f64,
    pub realizations: usize,
    pub seed: u64,
}

/// Hybrid-measure curves between a graph and its randomizations: one
/// column per dk order, one row per lambda.
pub fn run_nullmodels(
    input: &Path,
    orders: &[DkSeries],
    lambda_grid: &[f64],
    swap_budget: Option<usize>,
    anneal_steps: Option<usize>,
    opts: &MeasureOptions,
    out_dir: Option<&Path>,
) -> Result<NullModelCurves> {
    if orders.is_empty() {
        return Err(Error::invalid("at least one dk order required"));
    }
    if lambda_grid.is_empty() {
        return Err(Error::invalid("lambda grid must not be empty"));
    }
    for &l in lambda_grid {
        if !(0.0..=1.0).contains(&l) {
            return Err(Error::invalid(format!("lambda {l} outside [0, 1]")));
        }
    }
    let loaded = load_graph(input)?;
    let graph = loaded.graph;
    let spd_original = crate::dissimilarity::spd_distributions(&graph)?;
    let reps = opts.realizations.max(1);

    // per realization: value[order][lambda]
    let per_rep: Vec<Vec<Vec<f64>>> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let wcfg = |seed: u64| WalkConfig {
                walks_per_node: opts.walks_per_node,
                walk_length: opts.walk_length,
                seed,
            };
            let scfg = |seed: u64| SkipGramConfig {
                dimension: opts.dimension,
                window: opts.window,
                negatives: opts.negatives,
                epochs: opts.epochs,
                parallel: !opts.deterministic,
                seed,
                ..SkipGramConfig::default()
            };
            let base_profile = embedding_profile(
                &graph,
                opts.bins,
                &wcfg(derive_seed(opts.seed, &[TAG_NULL_PREP, r, 0, 0])),
                &scfg(derive_seed(opts.seed, &[TAG_NULL_PREP, r, 0, 1])),
            )?;
            let mut rows = Vec::with_capacity(orders.len());
            for (oi, &order) in orders.iter().enumerate() {
                let cfg = DkConfig { order, swap_budget, anneal_steps };
                let (randomized, _) = randomize(
                    &graph,
                    &cfg,
                    derive_seed(opts.seed, &[TAG_NULL_RANDOMIZE, r, oi as u64]),
                )?;
                let spd_rand = crate::dissimilarity::spd_distributions(&randomized)?;
                let rand_profile = embedding_profile(
                    &randomized,
                    opts.bins,
                    &wcfg(derive_seed(opts.seed, &[TAG_NULL_PREP, r, 1 + oi as u64, 0])),
                    &scfg(derive_seed(opts.seed, &[TAG_NULL_PREP, r, 1 + oi as u64, 1])),
                )?;
                let mut curve = Vec::with_capacity(lambda_grid.len());
                for &lambda in lambda_grid {
                    let h1 = hybrid_profile(&spd_original, &base_profile.histograms, lambda)?;
                    let h2 = hybrid_profile(&spd_rand, &rand_profile.histograms, lambda)?;
                    let (v, _, _) = dissimilarity_from_profiles(&h1, &h2, opts.omega)?;
                    curve.push(v);
                }
                rows.push(curve);
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;

    let mut mean = vec![vec![0.0; lambda_grid.len()]; orders.len()];
    let mut std = vec![vec![0.0; lambda_grid.len()]; orders.len()];
    for oi in 0..orders.len() {
        for li in 0..lambda_grid.len() {
            let samples: Vec<f64> = per_rep.iter().map(|rep| rep[oi][li]).collect();
            let (m, s) = mean_and_std(&samples);
            mean[oi][li] = m;
            std[oi][li] = s;
        }
    }

    let curves = NullModelCurves {
        kind: "nullmodels".to_string(),
        input: label_of(input),
        orders: orders.iter().map(|o| o.label().to_string()).collect(),
        lambda_grid: lambda_grid.to_vec(),
        mean,
        std,
        omega: opts.omega,
        realizations: reps,
        seed: opts.seed,
    };

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        let mut header = vec!["lambda".to_string()];
        for order in &curves.orders {
            header.push(format!("dm_dk{order}_mean"));
            header.push(format!("dm_dk{order}_std"));
        }
        let rows: Vec<Vec<f64>> = lambda_grid
            .iter()
            .enumerate()
            .map(|(li, &lambda)| {
                let mut row = vec![lambda];
                for oi in 0..orders.len() {
                    row.push(curves.mean[oi][li]);
                    row.push(curves.std[oi][li]);
                }
                row
            })
            .collect();
        write_table_csv(&dir.join("nullmodels.csv"), &header, &rows)?;
        std::fs::write(
            dir.join("nullmodels_meta.json"),
            serde_json::to_string_pretty(&curves)?,
        )?;
    }
    Ok(curves)
}

/// Plain randomization: write the randomized edge list and return the
/// swap-chain report.
pub fn run_randomize(
    input: &Path,
    order: DkSeries,
    swap_budget: Option<usize>,
    anneal_steps: Option<usize>,
    seed: u64,
    out: &Path,
) -> Result<DkReport> {
    let loaded = load_graph(input)?;
    let cfg = DkConfig { order, swap_budget, anneal_steps };
    let (randomized, report) = randomize(&loaded.graph, &cfg, seed)?;
    write_edge_list_path(&randomized, out)?;
    Ok(report)
}

// ---------------------------------------------------------------------------
// perturb

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerturbCurve {
    pub kind: String,
    pub input: String,
    pub f_grid: Vec<f64>,
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    pub edge_counts: Vec<usize>,
    pub measure: String,
    pub realizations: usize,
    pub seed: u64,
}

/// Dissimilarity between a graph and random edge additions/deletions at
/// each fraction in the grid.
pub fn run_perturb(
    input: &Path,
    f_grid: &[f64],
    opts: &MeasureOptions,
    out_dir: Option<&Path>,
) -> Result<PerturbCurve> {
    if f_grid.is_empty() {
        return Err(Error::invalid("perturbation grid must not be empty"));
    }
    let loaded = load_graph(input)?;
    let graph = loaded.graph;
    let reps = opts.realizations.max(1);

    let per_rep: Vec<Vec<f64>> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let base = prepare_graph(
                &graph,
                opts,
                derive_seed(opts.seed, &[TAG_PERTURB_PREP, r, u64::MAX]),
            )?;
            let mut row = Vec::with_capacity(f_grid.len());
            for (fi, &f) in f_grid.iter().enumerate() {
                let perturbed =
                    perturb(&graph, f, derive_seed(opts.seed, &[TAG_PERTURB, r, fi as u64]))?;
                let prepared = prepare_graph(
                    &perturbed,
                    opts,
                    derive_seed(opts.seed, &[TAG_PERTURB_PREP, r, fi as u64]),
                )?;
                row.push(pair_value(&base, &prepared, opts)?);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    let mut mean = Vec::with_capacity(f_grid.len());
    let mut std = Vec::with_capacity(f_grid.len());
    for fi in 0..f_grid.len() {
        let samples: Vec<f64> = per_rep.iter().map(|rep| rep[fi]).collect();
        let (m, s) = mean_and_std(&samples);
        mean.push(m);
        std.push(s);
    }
    let edge_counts: Vec<usize> = f_grid
        .iter()
        .enumerate()
        .map(|(fi, &f)| {
            perturb(&graph, f, derive_seed(opts.seed, &[TAG_PERTURB, 0, fi as u64]))
                .map(|g| g.edge_count())
        })
        .collect::<Result<_>>()?;

    let curve = PerturbCurve {
        kind: "perturb".to_string(),
        input: label_of(input),
        f_grid: f_grid.to_vec(),
        mean,
        std,
        edge_counts,
        measure: opts.measure.label().to_string(),
        realizations: reps,
        seed: opts.seed,
    };

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        let header = vec![
            "f".to_string(),
            "mean".to_string(),
            "std".to_string(),
            "edges".to_string(),
        ];
        let rows: Vec<Vec<f64>> = f_grid
            .iter()
            .enumerate()
            .map(|(i, &f)| vec![f, curve.mean[i], curve.std[i], curve.edge_counts[i] as f64])
            .collect();
        write_table_csv(&dir.join("perturb.csv"), &header, &rows)?;
        std::fs::write(dir.join("perturb_meta.json"), serde_json::to_string_pretty(&curve)?)?;
    }
    Ok(curve)
}

// ---------------------------------------------------------------------------
// stats

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StatsReport {
    pub kind: String,
    pub label: String,
    #[serde(flatten)]
    pub stats: GraphStats,
    /// Best modularity found; absent for graphs without edges.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modularity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub communities: Option<usize>,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

pub fn run_stats(input: &Path, seed: u64, restarts: usize) -> Result<StatsReport> {
    let loaded = load_graph(input)?;
    let stats = graph_stats(&loaded.graph);
    let (modularity, communities) = if loaded.graph.edge_count() > 0 {
        let (partition, q) = best_modularity(&loaded.graph, seed, restarts)?;
        (Some(q), Some(partition.community_count()))
    } else {
        (None, None)
    };
    Ok(StatsReport {
        kind: "stats".to_string(),
        label: label_of(input),
        stats,
        modularity,
        communities,
        self_loops_dropped: loaded.self_loops_dropped,
        duplicates_dropped: loaded.duplicates_dropped,
    })
}

// ---------------------------------------------------------------------------
// correlate

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrelationEntry {
    pub against: String,
    pub r: f64,
    pub p: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub kind: String,
    pub pair_count: usize,
    pub entries: Vec<CorrelationEntry>,
}

/// Correlate embedding-based dissimilarities against the shortest-path
/// measure and against per-graph property differences, from a directory of
/// comparison and stats JSON files.
pub fn run_correlate(dir: &Path) -> Result<CorrelationReport> {
    let mut comparisons: BTreeMap<(String, String), BTreeMap<String, f64>> = BTreeMap::new();
    let mut stats: BTreeMap<String, (f64, f64, Option<f64>)> = BTreeMap::new();

    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();

    for path in &paths {
        let text = std::fs::read_to_string(path)?;
        let value: serde_json::Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(_) => continue,
        };
        match value.get("kind").and_then(|k| k.as_str()) {
            Some("comparison") => {
                let (Some(a), Some(b), Some(measure), Some(v)) = (
                    value.get("graph_a").and_then(|v| v.as_str()),
                    value.get("graph_b").and_then(|v| v.as_str()),
                    value.get("measure").and_then(|v| v.as_str()),
                    value.get("value").and_then(|v| v.as_f64()),
                ) else {
                    continue;
                };
                let key = if a <= b {
                    (a.to_string(), b.to_string())
                } else {
                    (b.to_string(), a.to_string())
                };
                comparisons.entry(key).or_default().insert(measure.to_string(), v);
            }
            Some("stats") => {
                let (Some(label), Some(avl), Some(ld)) = (
                    value.get("label").and_then(|v| v.as_str()),
                    value.get("average_path_length").and_then(|v| v.as_f64()),
                    value.get("link_density").and_then(|v| v.as_f64()),
                ) else {
                    continue;
                };
                let q = value.get("modularity").and_then(|v| v.as_f64());
                stats.insert(label.to_string(), (avl, ld, q));
            }
            _ => continue,
        }
    }

    let with_dne: Vec<(&(String, String), f64)> = comparisons
        .iter()
        .filter_map(|(k, m)| m.get("dne").map(|&v| (k, v)))
        .collect();
    if with_dne.len() < 3 {
        return Err(Error::invalid(format!(
            "correlation needs at least 3 pairs with a dne value, found {}",
            with_dne.len()
        )));
    }

    let mut entries = Vec::new();
    let mut push_entry = |name: &str, points: Vec<(f64, f64)>| -> Result<()> {
        if points.len() < 3 {
            return Err(Error::invalid(format!(
                "correlation against {name} needs at least 3 pairs, found {}",
                points.len()
            )));
        }
        let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
        let (r, p) = crate::correlation::pearson(&xs, &ys)
            .map_err(|e| Error::invalid(format!("correlation against {name}: {e}")))?;
        entries.push(CorrelationEntry { against: name.to_string(), r, p, points: points.len() });
        Ok(())
    };

    push_entry(
        "dsp",
        with_dne
            .iter()
            .filter_map(|(k, dne)| comparisons[*k].get("dsp").map(|&dsp| (*dne, dsp)))
            .collect(),
    )?;
    let stat_points = |pick: &dyn Fn(&(f64, f64, Option<f64>)) -> Option<f64>| -> Vec<(f64, f64)> {
        with_dne
            .iter()
            .filter_map(|((a, b), dne)| {
                let sa = stats.get(a)?;
                let sb = stats.get(b)?;
                Some((*dne, (pick(sa)? - pick(sb)?).abs()))
            })
            .collect()
    };
    push_entry("delta_avl", stat_points(&|s| Some(s.0)))?;
    push_entry("delta_ld", stat_points(&|s| Some(s.1)))?;
    push_entry("delta_q", stat_points(&|s| s.2))?;

    Ok(CorrelationReport {
        kind: "correlation".to_string(),
        pair_count: with_dne.len(),
        entries,
    })
}
