mod common;

use resolvedim::families::{make_complete, make_cycle, make_path};
use resolvedim::random::undirected_corpus;
use resolvedim::{Broadcast, Graph, Parameter, SolveError, Solver, Witness};

fn value(g: &Graph, p: Parameter) -> u64 {
    Solver::default().solve(g, p).unwrap().value
}

#[test]
fn small_known_values() {
    let k4 = make_complete(4);
    assert_eq!(value(&k4, Parameter::Dim), 3);
    assert_eq!(value(&k4, Parameter::Bdim), 3);
    assert_eq!(value(&make_cycle(6).unwrap(), Parameter::Dim), 2);
    assert_eq!(value(&make_path(4), Parameter::Ld), 2);
    assert_eq!(value(&make_complete(3), Parameter::Ld), 2);
    assert_eq!(value(&make_cycle(4).unwrap(), Parameter::Adim), 2);
    assert_eq!(value(&make_path(5), Parameter::Adim), 2);

    // out-star: the leaves are told apart only by themselves, bar one
    let star = Graph::new(4, true, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(value(&star, Parameter::Adim), 3);

    let dipath = Graph::new(4, true, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(value(&dipath, Parameter::Bdim), 2);
}

#[test]
fn trivial_graphs() {
    let k1 = Graph::empty(1, false);
    assert_eq!(value(&k1, Parameter::Adim), 0);
    assert_eq!(value(&k1, Parameter::Dim), 0);
    assert_eq!(value(&k1, Parameter::Bdim), 0);
    // the lone vertex must dominate itself
    assert_eq!(value(&k1, Parameter::Ld), 1);
    let empty = Graph::empty(0, false);
    for p in Parameter::ALL {
        assert_eq!(value(&empty, p), 0);
    }
    // n isolated vertices: all but one must be chosen
    let e4 = Graph::empty(4, false);
    assert_eq!(value(&e4, Parameter::Adim), 3);
    assert_eq!(value(&e4, Parameter::Bdim), 3);
    assert_eq!(value(&e4, Parameter::Ld), 4);
}

#[test]
fn size_guardrail() {
    let g = make_path(30);
    let err = Solver::default().solve(&g, Parameter::Adim).unwrap_err();
    assert_eq!(err, SolveError::TooLarge { n: 30, limit: 26 });
    assert!(Solver::new(30).solve(&g, Parameter::Adim).is_ok());
}

#[test]
fn broadcast_cost_cap() {
    let k4 = make_complete(4);
    let s = Solver::default();
    assert!(matches!(
        s.broadcast_dimension(&k4, Some(2)),
        Err(SolveError::Infeasible {
            parameter: Parameter::Bdim,
            cap: Some(2)
        })
    ));
    assert_eq!(s.broadcast_dimension(&k4, Some(3)).unwrap().value, 3);
}

#[test]
fn witnesses_are_lexicographically_least() {
    let s = Solver::default();
    let r = s.solve(&make_path(4), Parameter::Ld).unwrap();
    assert_eq!(r.witness, Witness::Set(vec![0, 2]));
    let r = s.solve(&make_complete(4), Parameter::Bdim).unwrap();
    assert_eq!(
        r.witness,
        Witness::Broadcast(Broadcast::new(vec![0, 1, 1, 1]))
    );
}

#[test]
fn repeated_solves_agree() {
    let s = Solver::default();
    for g in undirected_corpus(3, 20, 9) {
        for p in Parameter::ALL {
            assert_eq!(s.solve(&g, p).unwrap(), s.solve(&g, p).unwrap());
        }
    }
}

#[test]
fn agrees_with_naive_enumeration() {
    let s = Solver::default();
    let graphs = undirected_corpus(11, 120, 7);
    for g in &graphs {
        let dim = s.solve(g, Parameter::Dim).unwrap();
        let adim = s.solve(g, Parameter::Adim).unwrap();
        let ld = s.solve(g, Parameter::Ld).unwrap();
        let bdim = s.solve(g, Parameter::Bdim).unwrap();
        let (dv, dw) = common::dim(g);
        let (av, aw) = common::adim(g);
        let (lv, lw) = common::ld(g);
        let (bv, bw) = common::bdim(g);
        assert_eq!((dim.value, dim.witness), (dv, Witness::Set(dw)), "{g:?}");
        assert_eq!((adim.value, adim.witness), (av, Witness::Set(aw)), "{g:?}");
        assert_eq!((ld.value, ld.witness), (lv, Witness::Set(lw)), "{g:?}");
        let bw: Vec<u32> = bw.into_iter().map(|w| w as u32).collect();
        assert_eq!(
            (bdim.value, bdim.witness),
            (bv, Witness::Broadcast(Broadcast::new(bw))),
            "{g:?}"
        );
    }
}

#[test]
fn agrees_with_naive_enumeration_on_directed_graphs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let s = Solver::default();
    for _ in 0..80 {
        let n = rng.gen_range(1..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, true, edges).unwrap();
        assert_eq!(
            s.solve(&g, Parameter::Dim).unwrap().value,
            common::dim(&g).0,
            "{g:?}"
        );
        assert_eq!(
            s.solve(&g, Parameter::Adim).unwrap().value,
            common::adim(&g).0,
            "{g:?}"
        );
        assert_eq!(
            s.solve(&g, Parameter::Ld).unwrap().value,
            common::ld(&g).0,
            "{g:?}"
        );
        assert_eq!(
            s.solve(&g, Parameter::Bdim).unwrap().value,
            common::bdim(&g).0,
            "{g:?}"
        );
    }
}

#[test]
fn all_optimal_broadcasts_are_optimal_and_complete() {
    let s = Solver::default();
    for g in undirected_corpus(2, 30, 6) {
        let best = s.solve(&g, Parameter::Bdim).unwrap().value;
        let all = s.optimal_broadcasts(&g).unwrap();
        assert!(!all.is_empty());
        assert!(all.windows(2).all(|w| w[0].weights() < w[1].weights()));
        let d = common::distances(&g);
        assert_eq!(
            all.len(),
            common::optimal_broadcast_count(&g, best),
            "{g:?}"
        );
        for f in &all {
            assert_eq!(f.cost(), best);
            let w: Vec<u64> = f.weights().iter().map(|&w| w as u64).collect();
            assert!(common::is_resolving_broadcast(&d, &w));
        }
    }
}
