mod common;

use deltamin::colouring::Colour;
use deltamin::graph::{enumerate_cubic, make_named, random_subcubic, Graph, NamedGraph};
use deltamin::solver::{
    enumerate_two_factors, find_two_factor, heuristic_descent, is_3_edge_colourable,
    lemma1_colouring, resistance_exact, solve_exact, Method, SolveError,
};
use proptest::prelude::*;

fn prism() -> Graph {
    Graph::new(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

#[test]
fn colourability_matches_naive_oracle() {
    let mut graphs: Vec<Graph> = [4, 6, 8, 10]
        .iter()
        .flat_map(|&n| enumerate_cubic(n).unwrap())
        .collect();
    graphs.extend((0..150).map(|s| random_subcubic(2 + (s as usize % 10), s)));
    for g in &graphs {
        let none = vec![false; g.edge_count()];
        let found = is_3_edge_colourable(g);
        assert_eq!(found.is_some(), common::naive_3_colourable(g, &none));
        if let Some(c) = found {
            assert!(c.is_proper());
            assert_eq!(c.delta_count(), 0);
        }
    }
}

#[test]
fn petersen_needs_two_delta_edges() {
    let p = make_named(NamedGraph::Petersen).unwrap();
    assert_eq!(common::brute_colour_number(&p, 2), Some(2));
    let r = solve_exact(&p);
    assert_eq!(r.s_value, 2);
    assert!(r.witness.is_proper());
    // every single edge deletion leaves a class-2 graph
    for e in 0..15 {
        let mut skip = vec![false; 15];
        skip[e] = true;
        assert!(!common::naive_3_colourable(&p, &skip));
    }
}

#[test]
fn petersen_two_factors() {
    let p = make_named(NamedGraph::Petersen).unwrap();
    let factors = enumerate_two_factors(&p).unwrap();
    assert_eq!(factors.len(), common::brute_perfect_matchings(&p).len());
    assert_eq!(factors.len(), 6);
    for f in &factors {
        let mut lengths: Vec<usize> = f.cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, [5, 5]);
        assert_eq!(f.odd_cycle_count(), 2);
        let c = lemma1_colouring(&p, f).unwrap();
        assert!(c.is_proper());
        assert_eq!(c.delta_count(), 2);
        for e in &f.complement_matching {
            assert_eq!(c.colour(e), Colour::Gamma);
        }
    }
}

#[test]
fn prism_two_factors() {
    let g = prism();
    let factors = enumerate_two_factors(&g).unwrap();
    assert_eq!(factors.len(), common::brute_perfect_matchings(&g).len());
    let mut odd: Vec<usize> = factors.iter().map(|f| f.odd_cycle_count()).collect();
    odd.sort_unstable();
    // the spokes leave two triangles; the other three matchings a hexagon
    assert_eq!(odd, [0, 0, 0, 2]);
    assert_eq!(solve_exact(&g).s_value, 0);
}

#[test]
fn flower_snarks_upper_bounds() {
    for k in [5, 7] {
        let g = make_named(NamedGraph::FlowerSnark(k)).unwrap();
        let f = find_two_factor(&g).unwrap();
        let c = lemma1_colouring(&g, &f).unwrap();
        assert!(c.is_proper());
        assert_eq!(c.delta_count(), f.odd_cycle_count());
        let h = heuristic_descent(&g, 1, 5000);
        assert!(h.witness.is_proper());
        assert_eq!(h.method, Method::HeuristicUpperBound);
        assert!(h.s_value >= 2, "flower{k} is class 2");
    }
    let j5 = make_named(NamedGraph::FlowerSnark(5)).unwrap();
    assert_eq!(
        enumerate_two_factors(&j5).unwrap_err(),
        SolveError::TooLarge {
            order: 20,
            limit: 16
        }
    );
}

#[test]
fn two_factor_bound_and_colouring() {
    for n in [4, 6, 8, 10] {
        for g in enumerate_cubic(n).unwrap() {
            let s = solve_exact(&g).s_value;
            for f in enumerate_two_factors(&g).unwrap() {
                assert!(f.odd_cycle_count() >= s);
                let c = lemma1_colouring(&g, &f).unwrap();
                assert!(c.is_proper());
                assert_eq!(c.delta_count(), f.odd_cycle_count());
            }
        }
    }
}

#[test]
fn resistance_agrees_on_small_corpus() {
    for n in [4, 6, 8, 10] {
        for g in enumerate_cubic(n).unwrap() {
            let s = solve_exact(&g).s_value;
            assert_eq!(resistance_exact(&g), s);
            assert_eq!(common::brute_colour_number(&g, 3), Some(s));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_matches_brute_force(n in 1usize..10, seed in any::<u64>()) {
        let g = random_subcubic(n, seed);
        let r = solve_exact(&g);
        prop_assert!(r.witness.is_proper());
        prop_assert_eq!(r.witness.delta_count(), r.s_value);
        prop_assert!(r.witness.colour_class(Colour::Delta).is_matching(&g));
        prop_assert_eq!(Some(r.s_value), common::brute_colour_number(&g, 4));
        prop_assert_eq!(resistance_exact(&g), r.s_value);
        prop_assert!(heuristic_descent(&g, seed, 200).s_value >= r.s_value);
    }

}
