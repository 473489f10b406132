// Rewriting a resolving broadcast on an out-tree into a 0/1 broadcast.

use std::error::Error;

use resolvedim::constructions::{crucial_vertices, tree_broadcast_to_adjacency};
use resolvedim::families::make_kary_out_tree;
use resolvedim::{Broadcast, Graph};

pub fn run() -> Result<(), Box<dyn Error>> {
    let path = Graph::new(4, true, [(0, 1), (1, 2), (2, 3)])?;
    let f = Broadcast::new(vec![3, 0, 0, 0]);
    let out = tree_broadcast_to_adjacency(&path, &f)?;
    println!("{:?} -> {:?}", f.weights(), out.broadcast.weights());
    for step in &out.steps {
        println!(
            "  vertex {} (weight {}), crucial for {:?}, skipped child {:?}",
            step.vertex, step.weight, step.crucial, step.excluded_child
        );
    }

    let tree = make_kary_out_tree(2, 3)?;
    let f = Broadcast::indicator(7, &[0, 1, 4, 5, 6])?;
    println!(
        "root of the binary tree is crucial for {:?}",
        crucial_vertices(&tree, &f, 0)?
    );

    // the root sits above the heavy vertex, so it joins the crucial set and
    // the rewrite stops
    let g = Graph::new(4, true, [(2, 3), (3, 1), (1, 0)])?;
    match tree_broadcast_to_adjacency(&g, &Broadcast::new(vec![0, 0, 0, 2])) {
        Ok(out) => println!("rewritten to {:?}", out.broadcast.weights()),
        Err(e) => println!("rewrite refused: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
