// Adjacency resolving sets of 2- and 3-row grids assembled from blocks.

use std::error::Error;

use resolvedim::constructions::blocks::{grid2_blocks, grid2_recipe, grid3_blocks};
use resolvedim::constructions::{grid2_certificate, grid3_certificate};
use resolvedim::graph::grid_product;
use resolvedim::verify_adjacency_set;

pub fn run() -> Result<(), Box<dyn Error>> {
    let blocks = grid2_blocks();
    println!("block C:\n{}", blocks.c);
    println!("block D:\n{}", blocks.d);
    println!("blocks for n = 11:\n{}", blocks.assemble(&grid2_recipe(11)));
    println!("block G:\n{}", grid3_blocks().g);

    for n in [8, 9, 13, 30] {
        let c = grid2_certificate(n)?;
        let (g, _) = grid_product(2, n);
        let ok = verify_adjacency_set(&g, &c.set)?.valid;
        println!(
            "P2 x P{n}: {} vertices from {}, valid {ok}",
            c.set.len(),
            c.recipe
        );
    }
    for n in [4, 5, 6, 31] {
        let c = grid3_certificate(n)?;
        let (g, _) = grid_product(3, n);
        let ok = verify_adjacency_set(&g, &c.set)?.valid;
        println!(
            "P3 x P{n}: {} vertices from {}, valid {ok}",
            c.set.len(),
            c.recipe
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
