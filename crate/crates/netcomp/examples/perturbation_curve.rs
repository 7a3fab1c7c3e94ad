//! Dissimilarity between a graph and randomly perturbed copies: the larger
//! the fraction of added or deleted edges, the larger the measure.
//!
//! ```bash
//! cargo run --release --example perturbation_curve
//! ```

use netcomp::dissimilarity::{
    dissimilarity_from_profiles, embedding_profile, EmbeddingProfile,
};
use netcomp::embedding::{SkipGramConfig, WalkConfig};
use netcomp::generators::{perturb, watts_strogatz};
use netcomp::rng::derive_seed;

fn profile(graph: &netcomp::Graph, seed: u64) -> netcomp::Result<EmbeddingProfile> {
    embedding_profile(
        graph,
        10,
        &WalkConfig { walks_per_node: 5, walk_length: 30, seed: derive_seed(seed, &[0]) },
        &SkipGramConfig { dimension: 32, epochs: 3, seed: derive_seed(seed, &[1]), ..Default::default() },
    )
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = watts_strogatz(250, 10, 0.3, 2)?;
    let base = profile(&graph, 100)?;

    println!("    f   edges   dissimilarity");
    for step in [-5i32, -4, -3, -2, -1, 1, 2, 3, 4, 5] {
        let f = step as f64 / 10.0;
        let perturbed = perturb(&graph, f, derive_seed(7, &[step.unsigned_abs() as u64, (step < 0) as u64]))?;
        let other = profile(&perturbed, 200 + step.unsigned_abs() as u64)?;
        let (value, _, _) = dissimilarity_from_profiles(&base, &other, 1.0)?;
        println!(
            " {f:+.1}  {:6}   {value:.4} {}",
            perturbed.edge_count(),
            "*".repeat((value * 80.0) as usize)
        );
    }
    println!("\nedge counts follow round(|f| * |E|) exactly; dissimilarity grows with |f|");
    Ok(())
}
