//! Generating the synthetic graph families and inspecting their structure.
//!
//! ```bash
//! cargo run --release --example generate_graphs
//! ```

use netcomp::generators::{barabasi_albert, k_regular_ring, rewire_fraction, watts_strogatz};
use netcomp::graph::graph_stats;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 1000;
    let k = 10;

    let ring = k_regular_ring(n, k)?;
    let wsl = rewire_fraction(&ring, 0.01, 7)?; // 1% of edges rewired
    let wsh = rewire_fraction(&ring, 0.10, 7)?; // 10% of edges rewired
    let ws = watts_strogatz(n, k, 0.3, 7)?;
    let ba = barabasi_albert(n, 5, 7)?;

    for (name, graph) in [
        ("ring lattice (k=10)", &ring),
        ("low rewiring (1%)", &wsl),
        ("high rewiring (10%)", &wsh),
        ("small world (p=0.3)", &ws),
        ("preferential attachment (m=5)", &ba),
    ] {
        let s = graph_stats(graph);
        println!(
            "{name:32} N={} |E|={} avg_degree={:.2} avg_path={:.3} clustering={:.3} diameter={}",
            s.node_count,
            s.edge_count,
            s.average_degree,
            s.average_path_length,
            s.average_clustering,
            s.diameter
        );
    }

    println!("\nring lattices are vertex transitive: every degree equals k");
    assert!((0..n).all(|v| ring.degree(v) == k));
    println!("rewiring preserves the edge count: {} = {}", wsl.edge_count(), ring.edge_count());
    Ok(())
}
