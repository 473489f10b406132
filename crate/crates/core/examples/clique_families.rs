// The clique families F_k and R_k, undirected and oriented.

use std::error::Error;

use resolvedim::families::{clique_v, make_f_k, make_r_k, FamilySpec};
use resolvedim::{verify_adjacency_set, Parameter, Solver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let solver = Solver::default();
    for k in 2..=3 {
        for oriented in [false, true] {
            let f = make_f_k(k, oriented)?;
            let r = make_r_k(k, oriented)?;
            println!(
                "k = {k}, oriented {oriented:5}: F_k bdim {}, R_k bdim {}",
                solver.solve(&f, Parameter::Bdim)?.value,
                solver.solve(&r, Parameter::Bdim)?.value,
            );
        }
    }

    let vs: Vec<usize> = (1..=3).map(clique_v).collect();
    let f3 = make_f_k(3, false)?;
    println!(
        "{{v_1, v_2, v_3}} resolves F_3: {}",
        verify_adjacency_set(&f3, &vs)?.valid
    );

    let spec = FamilySpec::RK {
        k: 2,
        oriented: true,
    };
    println!(
        "{} as {}",
        spec.build()?.edge_count(),
        serde_json::to_string(&spec)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
