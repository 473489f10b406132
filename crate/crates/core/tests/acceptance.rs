//! One check per acceptance criterion. Each prints a single PASS/FAIL line
//! (written to stderr directly so it shows even when output is captured)
//! and then fails the test if the check failed.

mod common;

use std::io::Write;
use std::time::Instant;

use resolvedim::bounds::{
    check_sandwich, grid2_bounds, grid2_target, grid3_bounds, grid3_target, maxdeg_lower,
};
use resolvedim::constructions::{
    grid2_certificate, grid3_certificate, kary_adim_formula, tree_broadcast_to_adjacency,
};
use resolvedim::families::{clique_v, make_f_k, make_kary_out_tree, make_maxdeg_tight, make_r_k};
use resolvedim::graph::grid_product;
use resolvedim::random::{out_tree_corpus, undirected_corpus};
use resolvedim::{
    max_degree, verify_adjacency_set, verify_broadcast, Graph, Parameter, SolveError, Solver,
};

const CORPUS_SEED: u64 = 0;
const TREE_SEED: u64 = 0;

fn corpus() -> Vec<Graph> {
    undirected_corpus(CORPUS_SEED, 200, 10)
}

fn report(id: u32, title: &str, pass: bool, detail: &str) {
    let line = format!(
        "criterion {id:>2} {}: {title} -- {detail}\n",
        if pass { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(pass, "criterion {id} failed: {detail}");
}

fn adim(g: &Graph) -> u64 {
    Solver::default().solve(g, Parameter::Adim).unwrap().value
}

#[test]
fn criterion_01_two_row_grid_adim() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for n in 2..=12 {
        let (g, _) = grid_product(2, n);
        let b = grid2_bounds(n as u64).unwrap().with_exact(adim(&g));
        values.push(b.exact.unwrap());
        if !b.holds() {
            bad.push((n, b.lower, b.upper, b.exact));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = bad.is_empty() && secs < 120.0;
    report(
        1,
        "adim(P2 x Pn) within [ceil((3n-1)/4) - 1, ceil((3n-1)/4)], n = 2..12",
        pass,
        &format!("exact {values:?}, violations {bad:?}, {secs:.2}s"),
    );
}

#[test]
fn criterion_02_two_row_grid_ld_lower() {
    let s = Solver::default();
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for n in 2..=10 {
        let (g, _) = grid_product(2, n);
        let ld = s.solve(&g, Parameter::Ld).unwrap().value;
        values.push(ld);
        if ld < grid2_target(n as u64) {
            bad.push((n, ld));
        }
    }
    report(
        2,
        "LD(P2 x Pn) >= ceil((3n-1)/4), n = 2..10",
        bad.is_empty(),
        &format!("exact {values:?}, violations {bad:?}"),
    );
}

#[test]
fn criterion_03_three_row_grid_adim() {
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for n in 2..=8 {
        let (g, _) = grid_product(3, n);
        let b = grid3_bounds(n as u64).unwrap().with_exact(adim(&g));
        values.push(b.exact.unwrap());
        // the stated interval, spelled out independently of grid3_bounds
        let shift = u64::from(n % 3 == 1);
        let (lo, hi) = (n as u64 - 1 + shift, n as u64 + shift);
        if !b.holds() || (b.lower, b.upper) != (lo, hi) {
            bad.push((n, b.lower, b.upper, b.exact));
        }
    }
    report(
        3,
        "adim(P3 x Pn) within [n - 1 + [n = 1 mod 3], n + [n = 1 mod 3]], n = 2..8",
        bad.is_empty(),
        &format!("exact {values:?}, violations {bad:?}"),
    );
}

#[test]
fn criterion_04_grid_certificates() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 2..=200usize {
        let c2 = grid2_certificate(n).unwrap();
        let (g2, _) = grid_product(2, n);
        if c2.set.len() != (3 * n - 1).div_ceil(4)
            || !verify_adjacency_set(&g2, &c2.set).unwrap().valid
        {
            bad.push((2, n));
        }
        let c3 = grid3_certificate(n).unwrap();
        let (g3, _) = grid_product(3, n);
        if c3.set.len() as u64 != grid3_target(n as u64)
            || !verify_adjacency_set(&g3, &c3.set).unwrap().valid
        {
            bad.push((3, n));
        }
    }
    report(
        4,
        "grid2/grid3 certificates verify at the stated sizes, n = 2..200",
        bad.is_empty(),
        &format!("failures {bad:?}, {:.2}s", start.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_05_kary_trees() {
    let cases = [(2, 2, 2), (2, 3, 5), (2, 4, 10), (3, 2, 3), (3, 3, 10)];
    let mut rows = Vec::new();
    let mut pass = true;
    for (k, layers, stated) in cases {
        let formula = kary_adim_formula(k, layers).unwrap();
        let exact = adim(&make_kary_out_tree(k, layers).unwrap());
        pass &= formula == stated && exact == formula;
        rows.push(format!(
            "(k={k}, n={layers}): formula {formula}, exact {exact}"
        ));
    }
    report(
        5,
        "directed adim of complete k-ary out-trees equals the closed formula",
        pass,
        &rows.join("; "),
    );
}

#[test]
fn criterion_06_out_trees() {
    let s = Solver::default();
    let trees = out_tree_corpus(TREE_SEED, 100, 12);
    let mut unequal = Vec::new();
    let mut rewrites = 0;
    let mut rewrite_failures = Vec::new();
    for (i, g) in trees.iter().enumerate() {
        let a = s.solve(g, Parameter::Adim).unwrap().value;
        let b = s.solve(g, Parameter::Bdim).unwrap().value;
        if a != b {
            unequal.push((i, a, b));
        }
        for f in s.optimal_broadcasts(g).unwrap() {
            rewrites += 1;
            let ok = match tree_broadcast_to_adjacency(g, &f) {
                Ok(out) => {
                    out.broadcast.is_adjacency()
                        && out.broadcast.cost() <= f.cost()
                        && verify_broadcast(g, &out.broadcast).unwrap().valid
                }
                Err(_) => false,
            };
            if !ok {
                rewrite_failures.push(i);
            }
        }
    }
    let failed_trees = {
        let mut t = rewrite_failures.clone();
        t.dedup();
        t.len()
    };
    let pass = unequal.is_empty() && rewrite_failures.is_empty();
    report(6, "out-trees: adim = bdim, and every optimal broadcast rewrites to a valid 0/1 broadcast", pass,
        &format!(
            "adim != bdim on {} of 100 trees; rewrite failed on {} of {rewrites} optimal broadcasts ({failed_trees} trees)",
            unequal.len(),
            rewrite_failures.len()
        ));
}

#[test]
fn criterion_07_f_k() {
    let s = Solver::new(26);
    let f2 = make_f_k(2, false).unwrap();
    let cert2 = verify_adjacency_set(&f2, &[clique_v(1), clique_v(2)])
        .unwrap()
        .valid;
    let bdim2 = s
        .solve(&make_f_k(2, true).unwrap(), Parameter::Bdim)
        .unwrap()
        .value;
    let f3 = make_f_k(3, false).unwrap();
    let cert3 = verify_adjacency_set(&f3, &[clique_v(1), clique_v(2), clique_v(3)])
        .unwrap()
        .valid;
    let capped = s.broadcast_dimension(&make_f_k(3, true).unwrap(), Some(7));
    let none_at_7 = matches!(capped, Err(SolveError::Infeasible { .. }));
    let found = capped.map(|r| r.value).ok();
    let pass = cert2 && bdim2 >= 4 && cert3 && none_at_7;
    report(7, "F_k: {v_1..v_k} resolves F_k; oriented bdim >= 2^k (k = 2 exact, k = 3 none at cost <= 7)", pass,
        &format!(
            "k=2 certificate {cert2}, oriented bdim {bdim2}; k=3 certificate {cert3}, cheapest oriented broadcast within cost 7: {found:?}"
        ));
}

#[test]
fn criterion_08_r_k() {
    let s = Solver::default();
    let bdim = s
        .solve(&make_r_k(2, false).unwrap(), Parameter::Bdim)
        .unwrap()
        .value;
    let oriented = make_r_k(2, true).unwrap();
    let adim_oriented = s.solve(&oriented, Parameter::Adim).unwrap().value;
    let cert = verify_adjacency_set(&oriented, &[clique_v(1), clique_v(2)])
        .unwrap()
        .valid;
    let pass = bdim == 5 && adim_oriented <= 2 && cert;
    report(
        8,
        "bdim(R_2) = 5 and adim(oriented R_2) <= 2",
        pass,
        &format!("bdim {bdim}, oriented adim {adim_oriented}, {{v_1, v_2}} verifies: {cert}"),
    );
}

#[test]
fn criterion_09_max_degree() {
    let tight = make_maxdeg_tight(4, 3).unwrap();
    let lower = maxdeg_lower(13, 3);
    let exact = adim(&tight);
    let tight_ok = tight.order() == 13 && max_degree(&tight) == 3 && exact == 4 && lower == 4;
    let mut bad = Vec::new();
    for (i, g) in corpus().iter().enumerate() {
        let lb = maxdeg_lower(g.order() as u64, max_degree(g) as u64);
        if adim(g) < lb {
            bad.push(i);
        }
    }
    report(
        9,
        "adim >= ceil(2(n-1)/(D+3)), tight on the (m=4, D=3) construction",
        tight_ok && bad.is_empty(),
        &format!(
            "construction: n {}, adim {exact}, bound {lower}; corpus violations {bad:?}",
            tight.order()
        ),
    );
}

#[test]
fn criterion_10_sandwich() {
    let s = Solver::default();
    let mut bad = Vec::new();
    for (i, g) in corpus().iter().enumerate() {
        match check_sandwich(&s, g) {
            Ok(w)
                if w.report.holds()
                    && w.bdim.value <= w.adim.value
                    && w.adim.value <= g.order() as u64 => {}
            other => bad.push((i, format!("{other:?}"))),
        }
    }
    report(
        10,
        "LD - 1 <= adim <= LD and bdim <= adim <= n on the 200-graph corpus",
        bad.is_empty(),
        &format!("violations {bad:?}"),
    );
}

#[test]
fn criterion_11_oracle_equivalence() {
    let s = Solver::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    for (i, g) in corpus().iter().enumerate().filter(|(_, g)| g.order() <= 7) {
        checked += 1;
        let expected = [
            common::dim(g).0,
            common::adim(g).0,
            common::ld(g).0,
            common::bdim(g).0,
        ];
        for (p, want) in Parameter::ALL.into_iter().zip(expected) {
            let got = s.solve(g, p).unwrap().value;
            if got != want {
                bad.push((i, p, got, want));
            }
        }
    }
    report(
        11,
        "solver equals naive enumeration for dim, adim, ld, bdim on corpus graphs with n <= 7",
        bad.is_empty(),
        &format!("{checked} graphs checked, mismatches {bad:?}"),
    );
}
