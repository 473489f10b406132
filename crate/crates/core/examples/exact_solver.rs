// Exact dim, adim, LD and bdim with their witnesses.

use std::error::Error;

use resolvedim::families::{make_complete, make_cycle};
use resolvedim::graph::grid_product;
use resolvedim::{Parameter, Solver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let solver = Solver::default();
    let (grid, _) = grid_product(2, 5);
    let graphs = [
        ("K4", make_complete(4)),
        ("C6", make_cycle(6)?),
        ("P2 x P5", grid),
    ];
    for (name, g) in &graphs {
        for p in Parameter::ALL {
            let r = solver.solve(g, p)?;
            println!(
                "{name:8} {p:4} = {} via {:?} ({} nodes)",
                r.value, r.witness, r.nodes_explored
            );
        }
    }

    // graphs above the size limit are refused rather than searched
    let big = make_cycle(40)?;
    println!("C40: {}", solver.solve(&big, Parameter::Adim).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
