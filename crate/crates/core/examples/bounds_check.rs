// Closed-form bounds next to exact values.

use std::error::Error;

use resolvedim::bounds::{check_sandwich, grid2_bounds, grid3_bounds, maxdeg_lower};
use resolvedim::families::make_maxdeg_tight;
use resolvedim::graph::grid_product;
use resolvedim::random::undirected_corpus;
use resolvedim::{max_degree, Parameter, Solver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let solver = Solver::default();
    for n in [4, 8, 9] {
        let (g, _) = grid_product(2, n);
        let b = grid2_bounds(n as u64)?.with_exact(solver.solve(&g, Parameter::Adim)?.value);
        println!(
            "{}: [{}, {}] exact {:?}",
            b.parameter, b.lower, b.upper, b.exact
        );
    }
    let (g, _) = grid_product(3, 7);
    let b = grid3_bounds(7)?.with_exact(solver.solve(&g, Parameter::Adim)?.value);
    println!(
        "{}: [{}, {}] exact {:?}",
        b.parameter, b.lower, b.upper, b.exact
    );

    let tight = make_maxdeg_tight(4, 3)?;
    println!(
        "degree bound on the tight graph: {} vs adim {}",
        maxdeg_lower(tight.order() as u64, max_degree(&tight) as u64),
        solver.solve(&tight, Parameter::Adim)?.value
    );

    for g in undirected_corpus(0, 5, 8) {
        let s = check_sandwich(&solver, &g)?;
        println!(
            "n = {}: ld {}, adim {}, bdim {}",
            g.order(),
            s.ld.value,
            s.adim.value,
            s.bdim.value
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
