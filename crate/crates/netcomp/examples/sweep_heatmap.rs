//! Pairwise dissimilarity heatmap over a rewiring-probability grid:
//! similar parameters give small values, distant parameters large ones.
//!
//! ```bash
//! cargo run --release --example sweep_heatmap
//! ```

use netcomp::experiments::{run_sweep, MeasureKind, MeasureOptions};
use netcomp::generators::GeneratorModel;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = [0.05, 0.2, 0.5, 1.0];
    let opts = MeasureOptions {
        measure: MeasureKind::Dne,
        dimension: 32,
        walks_per_node: 5,
        walk_length: 30,
        epochs: 3,
        realizations: 3,
        seed: 17,
        deterministic: true,
        ..Default::default()
    };
    let result = run_sweep(GeneratorModel::WattsStrogatz, 120, 8, &grid, &opts, None)?;

    print!("        ");
    for label in &result.labels {
        print!("{label:>9}");
    }
    println!();
    for (i, label) in result.labels.iter().enumerate() {
        print!("{label:>8}");
        for j in 0..grid.len() {
            print!("{:9.4}", result.mean[i][j]);
        }
        println!();
    }
    println!("\ndiagonal cells compare two independent realizations at the same p,");
    println!("so they show the noise floor of the stochastic embedding measure");
    Ok(())
}
