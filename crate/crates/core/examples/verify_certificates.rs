// Checking certificates: broadcasts, adjacency resolving sets,
// locating-dominating sets and resolving sets.

use std::error::Error;

use resolvedim::families::make_path;
use resolvedim::{
    verify_adjacency_set, verify_broadcast, verify_locating_dominating, verify_resolving_set,
    Broadcast,
};

pub fn run() -> Result<(), Box<dyn Error>> {
    let p4 = make_path(4);

    let report = verify_broadcast(&p4, &Broadcast::new(vec![0, 0, 0, 0]))?;
    println!(
        "zero broadcast on P4: valid {}, {} pairs left",
        report.valid,
        report.undifferentiated_pairs.len()
    );

    let f = Broadcast::new(vec![2, 0, 0, 0]);
    println!(
        "weight 2 on an end vertex: valid {}",
        verify_broadcast(&p4, &f)?.valid
    );

    // {0, 1} tells every pair apart but never reaches vertex 3
    let s = [0, 1];
    let adj = verify_adjacency_set(&p4, &s)?;
    let ld = verify_locating_dominating(&p4, &s)?;
    println!(
        "{{0, 1}}: adjacency {} (unseen {:?}), locating-dominating {}",
        adj.valid, adj.unseen, ld.valid
    );

    println!(
        "{{0}} resolves P4 with exact distances: {}",
        verify_resolving_set(&p4, &[0])?.valid
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
