//! The hybrid measure across lambda for the three null-model orders.
//! At lambda 0 it degenerates to the pure embedding measure, at lambda 1 to
//! the shortest-path distribution; in between the null-model ordering
//! dk1.0 >= dk2.0 >= dk2.5 reflects how much structure each order keeps.
//!
//! ```bash
//! cargo run --release --example hybrid_lambda_curve
//! ```

use netcomp::dissimilarity::{
    dissimilarity_from_profiles, embedding_profile, hybrid_profile, spd_distributions,
};
use netcomp::embedding::{SkipGramConfig, WalkConfig};
use netcomp::generators::watts_strogatz;
use netcomp::null_models::{randomize, DkConfig, DkSeries};
use netcomp::rng::derive_seed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = watts_strogatz(200, 10, 0.1, 4)?;
    let seed = 31u64;

    let spd = spd_distributions(&graph)?;
    let base = embedding_profile(
        &graph,
        10,
        &WalkConfig { walks_per_node: 5, walk_length: 30, seed: derive_seed(seed, &[0]) },
        &SkipGramConfig { dimension: 32, epochs: 3, seed: derive_seed(seed, &[1]), ..Default::default() },
    )?;

    println!("lambda   dk1.0    dk2.0    dk2.5");
    let orders = [DkSeries::Dk1, DkSeries::Dk2, DkSeries::Dk25];
    let randomized: Vec<_> = orders
        .iter()
        .enumerate()
        .map(|(i, &order)| {
            let (g, _) = randomize(&graph, &DkConfig::new(order), derive_seed(seed, &[2, i as u64]))?;
            let spd_r = spd_distributions(&g)?;
            let profile = embedding_profile(
                &g,
                10,
                &WalkConfig { walks_per_node: 5, walk_length: 30, seed: derive_seed(seed, &[3, i as u64]) },
                &SkipGramConfig {
                    dimension: 32,
                    epochs: 3,
                    seed: derive_seed(seed, &[4, i as u64]),
                    ..Default::default()
                },
            )?;
            Ok((spd_r, profile))
        })
        .collect::<netcomp::Result<_>>()?;

    for lambda in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let blended_base = hybrid_profile(&spd, &base.histograms, lambda)?;
        print!("{lambda:5.2} ");
        for (spd_r, profile) in &randomized {
            let blended = hybrid_profile(spd_r, &profile.histograms, lambda)?;
            let (value, _, _) = dissimilarity_from_profiles(&blended_base, &blended, 1.0)?;
            print!("  {value:.4}");
        }
        println!();
    }
    Ok(())
}
