//! Modularity scoring and the greedy community optimizer.
//!
//! ```bash
//! cargo run --release --example community_modularity
//! ```

use netcomp::graph::{best_modularity, modularity, Graph, Partition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // two triangles joined by nothing: the optimizer must split them
    let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])?;
    let (partition, q) = best_modularity(&two_triangles, 1, 4)?;
    println!("two disjoint triangles: Q = {q} with {} communities", partition.community_count());

    let by_hand = Partition::from_labels(vec![0, 0, 0, 1, 1, 1]);
    println!("  triangle split scores  {}", modularity(&two_triangles, &by_hand)?);
    println!("  all-in-one scores      {}", modularity(&two_triangles, &Partition::all_in_one(6))?);

    // complete graph: no community structure, a single block is optimal
    let mut k5 = Graph::empty(5);
    for u in 0..5 {
        for v in (u + 1)..5 {
            k5.add_edge(u, v);
        }
    }
    let (p5, q5) = best_modularity(&k5, 2, 4)?;
    println!("\ncomplete graph K5: Q = {q5} with {} community", p5.community_count());

    // ring of three 10-cliques: clear planted structure
    let mut ring = Graph::empty(30);
    for c in 0..3 {
        for u in 0..10 {
            for v in (u + 1)..10 {
                ring.add_edge(c * 10 + u, c * 10 + v);
            }
        }
    }
    ring.add_edge(9, 10);
    ring.add_edge(19, 20);
    ring.add_edge(29, 0);
    let (pr, qr) = best_modularity(&ring, 3, 4)?;
    println!("\nring of three 10-cliques: Q = {qr:.4} with {} communities", pr.community_count());
    for c in 0..3 {
        let members: Vec<usize> =
            (0..30).filter(|&v| pr.community_of(v) == pr.community_of(c * 10)).collect();
        println!("  community around node {:2}: {members:?}", c * 10);
    }
    Ok(())
}
