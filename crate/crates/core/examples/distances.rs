// Shortest-path and truncated distances on undirected and directed graphs.

use std::error::Error;

use resolvedim::{all_pairs_distances, truncated_distance, Graph};

pub fn run() -> Result<(), Box<dyn Error>> {
    let cycle = Graph::new(5, false, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    let dm = all_pairs_distances(&cycle);
    println!(
        "C5 distances out of 0: {:?}",
        dm.row(0).iter().map(|d| d.to_string()).collect::<Vec<_>>()
    );
    println!("d_1(0, 2) = {}", truncated_distance(&dm, 0, 2, 1));

    // along edge directions only; the way back is unreachable
    let dipath = Graph::new(3, true, [(0, 1), (1, 2)])?;
    let dm = all_pairs_distances(&dipath);
    println!(
        "directed d(0, 2) = {}, d(2, 0) = {}",
        dm.get(0, 2),
        dm.get(2, 0)
    );
    println!("d_1(2, 0) = {}", truncated_distance(&dm, 2, 0, 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
