//! The embedding measure step by step: walks, SkipGram training, pairwise
//! distances, binned per-node distributions and the heterogeneity score.
//!
//! ```bash
//! cargo run --release --example embedding_pipeline
//! ```

use netcomp::dissimilarity::{embedding_histograms, js_two, network_js};
use netcomp::embedding::{
    distance_matrix, generate_walks, train_skipgram, SkipGramConfig, WalkConfig,
};
use netcomp::generators::watts_strogatz;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = watts_strogatz(150, 8, 0.1, 3)?;

    let wcfg = WalkConfig { walks_per_node: 10, walk_length: 60, seed: 11 };
    let walks = generate_walks(&graph, &wcfg)?;
    println!("corpus: {} walks of up to {} nodes", walks.len(), wcfg.walk_length);

    let scfg = SkipGramConfig { dimension: 64, seed: 12, ..Default::default() };
    let embedding = train_skipgram(&walks, graph.node_count(), &scfg)?;
    println!(
        "embedding: {} x {} matrix, largest row norm {:.3}",
        embedding.node_count(),
        embedding.dimension(),
        embedding.max_row_norm()
    );

    let distances = distance_matrix(&embedding)?;
    println!("distance range: [0, {:.3}]", distances.b_max());

    let histograms = embedding_histograms(&distances, 10)?;
    let mu = histograms.mean();
    println!("mean distance distribution over 10 bins:");
    for (bin, mass) in mu.iter().enumerate() {
        println!("  bin {:2}: {:.4} {}", bin + 1, mass, "#".repeat((mass * 120.0) as usize));
    }
    println!("heterogeneity JS(G) = {:.5}", network_js(&histograms));

    // ring neighbors sit closer in embedding space than distant pairs
    let near = distances.get(0, 1);
    let far = distances.get(0, 75);
    println!("\ndistance to a ring neighbor: {near:.3}, to the far side: {far:.3}");

    // two-distribution divergence of the first two node profiles
    let rows = histograms.rows();
    println!(
        "js between node 0 and node 1 profiles: {:.5} nats",
        js_two(&rows[0], &rows[1])?
    );
    Ok(())
}
