//! Edge-list ingestion: arbitrary node identifiers, comment lines, the
//! node-count header for isolated nodes, and embedding serialization.
//!
//! ```bash
//! cargo run --release --example edge_list_io
//! ```

use netcomp::embedding::{deepwalk, EmbeddingMatrix, SkipGramConfig, WalkConfig};
use netcomp::graph::{read_edge_list, write_edge_list};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = "\
# a tiny collaboration network
alice bob
bob carol
carol alice
dave bob
bob bob
alice bob
";
    let loaded = read_edge_list(text.as_bytes())?;
    println!(
        "parsed {} nodes, {} edges ({} self-loop dropped, {} duplicate dropped)",
        loaded.graph.node_count(),
        loaded.graph.edge_count(),
        loaded.self_loops_dropped,
        loaded.duplicates_dropped
    );
    println!("identifier mapping: {:?}", loaded.labels);

    let mut round_trip = Vec::new();
    write_edge_list(&loaded.graph, &mut round_trip)?;
    println!("\ncanonical form:\n{}", String::from_utf8(round_trip)?);

    // embeddings serialize as text ("N d" header) or exact binary
    let emb = deepwalk(
        &loaded.graph,
        &WalkConfig { walks_per_node: 3, walk_length: 10, seed: 1 },
        &SkipGramConfig { dimension: 4, epochs: 2, ..Default::default() },
    )?;
    let mut binary = Vec::new();
    emb.write_binary(&mut binary)?;
    let back = EmbeddingMatrix::read_binary(binary.as_slice())?;
    println!("binary embedding round-trip exact: {}", back == emb);

    let mut as_text = Vec::new();
    emb.write_text(&mut as_text)?;
    println!("text embedding header + first row:");
    for line in String::from_utf8(as_text)?.lines().take(2) {
        println!("  {line}");
    }
    Ok(())
}
