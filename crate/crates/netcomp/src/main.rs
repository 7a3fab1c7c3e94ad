//! Batch command-line interface over the experiment harness. Subcommands
//! print a JSON report to standard output; CSV artifacts go to --out-dir.
//! Exit codes: 0 success, 2 input error, 3 numeric failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use netcomp::error::{Error, Result};
use netcomp::experiments::{
    run_compare, run_correlate, run_generate, run_nullmodels, run_perturb, run_randomize,
    run_stats, run_sweep, MeasureKind, MeasureOptions,
};
use netcomp::generators::{GeneratorModel, GeneratorSpec};
use netcomp::null_models::DkSeries;

#[derive(Parser)]
#[command(
    name = "netcomp",
    version,
    about = "Network comparison toolkit: generate graphs, compare them with \
             embedding, shortest-path, communicability and hybrid measures, \
             randomize with dk-series null models, and run reproducible sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Measure and run-control flags shared by the comparison commands.
/// A --config JSON file provides defaults; explicit flags win.
#[derive(Args, Debug, Default)]
struct CommonOpts {
    /// Master seed for all derived randomness
    #[arg(long)]
    seed: Option<u64>,
    /// Repetitions for stochastic measures and ensemble curves
    #[arg(long)]
    realizations: Option<usize>,
    /// Single-threaded fixed-order training; byte-reproducible outputs
    #[arg(long)]
    deterministic: bool,
    /// Directory for CSV/JSON artifacts
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// JSON file with default options (same field names as the flags)
    #[arg(long)]
    config: Option<PathBuf>,
    /// dne | dsp | dc | dm
    #[arg(long)]
    measure: Option<String>,
    /// Weight of the mean-distribution term (embedding/hybrid measures)
    #[arg(long)]
    omega: Option<f64>,
    /// Blend of shortest-path vs embedding distributions (hybrid measure)
    #[arg(long)]
    lambda: Option<f64>,
    /// Histogram bin count
    #[arg(long)]
    bins: Option<usize>,
    /// Embedding dimension
    #[arg(long)]
    dim: Option<usize>,
    /// Walks per node
    #[arg(long)]
    walks: Option<usize>,
    /// Nodes per walk
    #[arg(long)]
    walk_length: Option<usize>,
    /// Context window
    #[arg(long)]
    window: Option<usize>,
    /// Negative samples per positive pair
    #[arg(long)]
    negatives: Option<usize>,
    /// Training epochs
    #[arg(long)]
    epochs: Option<usize>,
    /// Centrality attenuation as a fraction of 1/lambda_max
    #[arg(long)]
    alpha_frac: Option<f64>,
    /// First shortest-path term weight
    #[arg(long)]
    w1: Option<f64>,
    /// Second shortest-path term weight
    #[arg(long)]
    w2: Option<f64>,
    /// Third shortest-path term weight
    #[arg(long)]
    w3: Option<f64>,
}

/// Optional fields accepted in a --config JSON file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    seed: Option<u64>,
    realizations: Option<usize>,
    deterministic: Option<bool>,
    measure: Option<String>,
    omega: Option<f64>,
    lambda: Option<f64>,
    bins: Option<usize>,
    dimension: Option<usize>,
    walks_per_node: Option<usize>,
    walk_length: Option<usize>,
    window: Option<usize>,
    negatives: Option<usize>,
    epochs: Option<usize>,
    alpha_frac: Option<f64>,
    w1: Option<f64>,
    w2: Option<f64>,
    w3: Option<f64>,
}

impl CommonOpts {
    fn resolve(&self) -> Result<MeasureOptions> {
        let config: ConfigFile = match &self.config {
            Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
            None => ConfigFile::default(),
        };
        let defaults = MeasureOptions::default();
        let measure = match self.measure.as_deref().or(config.measure.as_deref()) {
            Some(token) => MeasureKind::parse(token)?,
            None => defaults.measure,
        };
        Ok(MeasureOptions {
            measure,
            omega: self.omega.or(config.omega).unwrap_or(defaults.omega),
            lambda: self.lambda.or(config.lambda).unwrap_or(defaults.lambda),
            bins: self.bins.or(config.bins).unwrap_or(defaults.bins),
            alpha_frac: self.alpha_frac.or(config.alpha_frac).unwrap_or(defaults.alpha_frac),
            w1: self.w1.or(config.w1).unwrap_or(defaults.w1),
            w2: self.w2.or(config.w2).unwrap_or(defaults.w2),
            w3: self.w3.or(config.w3).unwrap_or(defaults.w3),
            dimension: self.dim.or(config.dimension).unwrap_or(defaults.dimension),
            walks_per_node: self
                .walks
                .or(config.walks_per_node)
                .unwrap_or(defaults.walks_per_node),
            walk_length: self.walk_length.or(config.walk_length).unwrap_or(defaults.walk_length),
            window: self.window.or(config.window).unwrap_or(defaults.window),
            negatives: self.negatives.or(config.negatives).unwrap_or(defaults.negatives),
            epochs: self.epochs.or(config.epochs).unwrap_or(defaults.epochs),
            realizations: self
                .realizations
                .or(config.realizations)
                .unwrap_or(defaults.realizations),
            seed: self.seed.or(config.seed).unwrap_or(defaults.seed),
            deterministic: self.deterministic || config.deterministic.unwrap_or(false),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic graph and write its edge list plus spec sidecar
    Generate {
        /// kregular | ws | ba
        #[arg(long)]
        model: String,
        /// Node count
        #[arg(long)]
        n: usize,
        /// Ring-lattice degree (kregular, ws)
        #[arg(long)]
        k: Option<usize>,
        /// Rewiring probability (ws)
        #[arg(long)]
        p: Option<f64>,
        /// Edges per new node (ba)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output edge-list path
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare two edge-list files with one measure
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
        /// Also write the JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise dissimilarity heatmap over a WS p-grid or BA m-grid
    Sweep {
        /// ws | ba
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 500)]
        n: usize,
        /// Ring-lattice degree for the WS model
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// Comma-separated grid values (p values or m values)
        #[arg(long)]
        grid: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Null-model curves (hybrid measure vs lambda), or a single
    /// dk-randomization when --dk is given
    Nullmodels {
        /// Input edge-list file
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated dk orders for the curve mode
        #[arg(long, default_value = "1.0,2.0,2.5")]
        orders: String,
        /// Comma-separated lambda grid
        #[arg(long, default_value = "0,0.25,0.5,0.75,1")]
        lambda_grid: String,
        /// Swap attempts for orders 1.0/2.0 (default 10|E|)
        #[arg(long)]
        swaps: Option<usize>,
        /// Annealing steps for order 2.5 (default 50|E|)
        #[arg(long)]
        anneal_steps: Option<usize>,
        /// Randomize-only mode: order of the single randomization
        #[arg(long)]
        dk: Option<String>,
        /// Randomize-only mode: output edge-list path
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Dissimilarity curve against random edge addition/deletion
    Perturb {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated signed fractions in [-1, 1]
        #[arg(long, allow_hyphen_values = true)]
        f_grid: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Structural metrics plus best-found modularity
    Stats {
        #[arg(long)]
        input: PathBuf,
        /// Optimizer restarts
        #[arg(long, default_value_t = 5)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Correlate stored comparison results and stats from a directory
    Correlate {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn parse_grid(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Error::invalid(format!("bad grid value '{t}'")))
        })
        .collect()
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate { model, n, k, p, m, seed, out } => {
            let spec = GeneratorSpec {
                model: GeneratorModel::parse(&model)?,
                n,
                k,
                p,
                m,
                seed,
            };
            let report = run_generate(&spec, &out)?;
            print_json(&report)
        }
        Command::Compare { file_a, file_b, common, out } => {
            let opts = common.resolve()?;
            let report = run_compare(&file_a, &file_b, &opts)?;
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
            }
            print_json(&report)
        }
        Command::Sweep { model, n, k, grid, common } => {
            let opts = common.resolve()?;
            let result = run_sweep(
                GeneratorModel::parse(&model)?,
                n,
                k,
                &parse_grid(&grid)?,
                &opts,
                common.out_dir.as_deref(),
            )?;
            print_json(&result)
        }
        Command::Nullmodels {
            input,
            orders,
            lambda_grid,
            swaps,
            anneal_steps,
            dk,
            out,
            common,
        } => {
            let opts = common.resolve()?;
            if let Some(order) = dk {
                let order = DkSeries::parse(&order)?;
                let out = out.ok_or_else(|| {
                    Error::invalid("randomize mode (--dk) requires --out for the edge list")
                })?;
                let report = run_randomize(&input, order, swaps, anneal_steps, opts.seed, &out)?;
                print_json(&report)
            } else {
                let orders = orders
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(DkSeries::parse)
                    .collect::<Result<Vec<_>>>()?;
                let curves = run_nullmodels(
                    &input,
                    &orders,
                    &parse_grid(&lambda_grid)?,
                    swaps,
                    anneal_steps,
                    &opts,
                    common.out_dir.as_deref(),
                )?;
                print_json(&curves)
            }
        }
        Command::Perturb { input, f_grid, common } => {
            let opts = common.resolve()?;
            let curve =
                run_perturb(&input, &parse_grid(&f_grid)?, &opts, common.out_dir.as_deref())?;
            print_json(&curve)
        }
        Command::Stats { input, restarts, seed, out } => {
            let report = run_stats(&input, seed, restarts)?;
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
            }
            print_json(&report)
        }
        Command::Correlate { dir } => {
            let report = run_correlate(&dir)?;
            print_json(&report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
