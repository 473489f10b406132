// Complete out-directed k-ary trees: the closed formula, a certificate of
// that size, and the exact value.

use std::error::Error;

use resolvedim::constructions::{kary_adim_formula, kary_tree_certificate};
use resolvedim::families::make_kary_out_tree;
use resolvedim::{verify_adjacency_set, Parameter, Solver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let solver = Solver::default();
    for (k, layers) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let g = make_kary_out_tree(k, layers)?;
        let formula = kary_adim_formula(k, layers)?;
        let c = kary_tree_certificate(k, layers)?;
        let valid = verify_adjacency_set(&g, &c.set)?.valid;
        let exact = solver.solve(&g, Parameter::Adim)?;
        println!(
            "k = {k}, {layers} layers: formula {formula}, certificate {} (valid {valid}), exact {} via {:?}",
            c.set.len(),
            exact.value,
            exact.witness
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
