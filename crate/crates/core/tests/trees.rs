mod common;

use resolvedim::constructions::kary::depth_parity_marking;
use resolvedim::constructions::{
    kary_adim_formula, kary_tree_certificate, tree_broadcast_to_adjacency, TransformError,
};
use resolvedim::families::make_kary_out_tree;
use resolvedim::{verify_adjacency_set, Broadcast, Graph, Parameter, Solver};

#[test]
fn certificates_have_formula_size() {
    for k in 2..=4 {
        for layers in 1..=5 {
            let g = make_kary_out_tree(k, layers).unwrap();
            let c = kary_tree_certificate(k, layers).unwrap();
            assert_eq!(c.set.len() as u64, kary_adim_formula(k, layers).unwrap());
            assert!(verify_adjacency_set(&g, &c.set).unwrap().valid);
        }
    }
}

#[test]
fn certificates_are_optimal_on_small_trees() {
    let s = Solver::default();
    let mut mismatches = Vec::new();
    for (k, layers) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let g = make_kary_out_tree(k, layers).unwrap();
        let exact = s.solve(&g, Parameter::Adim).unwrap().value;
        let size = kary_tree_certificate(k, layers).unwrap().set.len() as u64;
        if exact != size {
            mismatches.push((k, layers, size, exact));
        }
    }
    assert!(
        mismatches.is_empty(),
        "(k, layers, certificate, exact): {mismatches:?}"
    );
}

#[test]
fn exact_values_on_small_trees() {
    // by the naive oracle; one leaf may stay unseen
    for (k, layers, expected) in [(2, 2, 2), (2, 3, 4), (2, 4, 9), (3, 2, 3), (3, 3, 9)] {
        let g = make_kary_out_tree(k, layers).unwrap();
        assert_eq!(common::adim(&g).0, expected);
        assert_eq!(
            Solver::default().solve(&g, Parameter::Adim).unwrap().value,
            expected
        );
    }
}

#[test]
fn whole_layer_marking_leaves_siblings_together() {
    let g = make_kary_out_tree(3, 3).unwrap();
    let report = verify_adjacency_set(&g, &depth_parity_marking(3, 3)).unwrap();
    assert!(!report.valid);
    assert_eq!(report.undifferentiated_pairs, vec![(1, 2), (1, 3), (2, 3)]);
}

#[test]
fn rewrite_stops_on_oversized_crucial_set() {
    // 2 -> 3 -> 1 -> 0 with all weight on 3: 3 is crucial for every vertex,
    // the unreachable root included
    let g = Graph::new(4, true, [(2, 3), (3, 1), (1, 0)]).unwrap();
    let f = Broadcast::new(vec![0, 0, 0, 2]);
    assert_eq!(
        tree_broadcast_to_adjacency(&g, &f),
        Err(TransformError::CrucialSetTooLarge {
            vertex: 3,
            weight: 2,
            size: 4
        })
    );
}
