//! Solver-level invariants: exact oracle agreement against set-partition
//! search, soundness of every returned colouring, monotonicity, and the
//! avoiding/frugal equivalence.

mod common;

use common::*;
use frugal_core::generators::pg_incidence;
use frugal_core::graph::Graph;
use frugal_core::hypergraph::{Colouring, Hypergraph};
use frugal_core::reduction::{build_basic, build_cycle_reduction, ReductionParams};
use frugal_core::solvers::{
    exact_frugal_chromatic, exact_hypergraph_chromatic, greedy_colour, resample_colour,
    verify_avoiding, verify_frugal,
};

#[test]
fn exact_frugal_matches_partition_search() {
    for seed in 0..10u64 {
        let g = test_gnp(7, 0.45, seed);
        for beta in 1..=3usize {
            assert_eq!(
                exact_frugal_chromatic(&g, beta).unwrap(),
                frugal_chromatic_bruteforce(&g, beta),
                "seed {seed} beta {beta}"
            );
        }
    }
}

#[test]
fn exact_hypergraph_matches_partition_search() {
    for seed in 0..8u64 {
        let g = test_gnp(7, 0.4, seed);
        let h = build_basic(&g, 2);
        assert_eq!(
            exact_hypergraph_chromatic(&h).unwrap(),
            hypergraph_chromatic_bruteforce(&h),
            "seed {seed}"
        );
    }
}

#[test]
fn frugal_equals_basic_reduction_chromatic() {
    for seed in 0..10u64 {
        let g = test_gnp(8, 0.4, seed);
        for beta in 1..=3usize {
            let h = build_basic(&g, beta);
            assert_eq!(
                exact_frugal_chromatic(&g, beta).unwrap(),
                exact_hypergraph_chromatic(&h).unwrap(),
                "seed {seed} beta {beta}"
            );
        }
    }
}

#[test]
fn frugal_chromatic_monotone_in_beta_and_above_chromatic() {
    for seed in 0..8u64 {
        let g = test_gnp(8, 0.45, seed);
        let chi = exact_hypergraph_chromatic(&Hypergraph::from_graph(&g)).unwrap();
        let mut prev = usize::MAX;
        for beta in 1..=4usize {
            let val = exact_frugal_chromatic(&g, beta).unwrap();
            assert!(val <= prev, "not monotone at seed {seed} beta {beta}");
            assert!(val >= chi);
            prev = val;
        }
        // frugality is vacuous once beta reaches the maximum degree
        let beta = g.max_degree().max(1);
        assert_eq!(exact_frugal_chromatic(&g, beta).unwrap(), chi);
    }
}

#[test]
fn chi1_is_the_chromatic_number_of_the_square() {
    for seed in 0..8u64 {
        let g = test_gnp(9, 0.3, seed);
        let chi_sq =
            exact_hypergraph_chromatic(&Hypergraph::from_graph(&g.square())).unwrap();
        assert_eq!(exact_frugal_chromatic(&g, 1).unwrap(), chi_sq, "seed {seed}");
    }
    // and the classic square case
    let c4 = Graph::cycle(4);
    assert_eq!(exact_frugal_chromatic(&c4, 1).unwrap(), 4);
}

#[test]
fn cycle_reduction_upper_bounds_the_frugal_chromatic() {
    for seed in 0..10u64 {
        let g = test_gnp(9, 0.3, seed);
        if !g.is_c2t_free(2) {
            continue;
        }
        let params = ReductionParams::for_graph(&g, 2, 2).unwrap();
        let h = build_cycle_reduction(&g, &params);
        let chi_h = exact_hypergraph_chromatic(&h).unwrap();
        let chi_b = exact_frugal_chromatic(&g, 2).unwrap();
        assert!(chi_h >= chi_b, "seed {seed}: {chi_h} < {chi_b}");
    }
}

#[test]
fn greedy_results_are_proper_and_frugal() {
    for seed in 0..10u64 {
        let g = test_gnp(12, 0.35, seed);
        for beta in 1..=3usize {
            let h = build_basic(&g, beta);
            let k = g.max_degree() * g.max_degree() + 1;
            let res = greedy_colour(&h, k).unwrap();
            assert_eq!(h.is_proper(&res.colouring), Ok(true));
            assert!(verify_frugal(&g, &res.colouring, beta).unwrap().is_frugal());
        }
    }
}

#[test]
fn resample_succeeds_at_comfortable_palettes() {
    // k above rank * delta_star: success expected across all 20 seeds
    let g = pg_incidence(2, 1).unwrap();
    let h = build_basic(&g, 2);
    let rank = h.rank().unwrap();
    let k = (rank as f64 * h.delta_star().unwrap()).ceil() as usize + 1;
    for seed in 0..20u64 {
        let res = resample_colour(&h, k, seed, 50_000).unwrap();
        assert_eq!(h.is_proper(&res.colouring), Ok(true));
        assert!(verify_frugal(&g, &res.colouring, 2).unwrap().is_frugal());
    }
}

#[test]
fn resample_is_reproducible() {
    let g = test_gnp(10, 0.4, 3);
    let h = build_basic(&g, 2);
    let a = resample_colour(&h, 6, 99, 100_000).unwrap();
    let b = resample_colour(&h, 6, 99, 100_000).unwrap();
    assert_eq!(a, b);
}

#[test]
fn avoiding_star_pattern_is_exactly_frugality() {
    // (2, K_{1,beta+1})-avoiding == beta-frugal, over random proper colourings
    let mut checked = 0;
    for seed in 0..40u64 {
        let g = test_gnp(8, 0.35, seed);
        let colours: Vec<usize> = (0..g.n()).map(|v| (v * 5 + seed as usize) % 8).collect();
        let c = match Colouring::new(colours.clone(), 8) {
            Ok(c) => c,
            Err(_) => continue,
        };
        if g.edges().any(|(u, v)| c.colour(u) == c.colour(v)) {
            continue;
        }
        checked += 1;
        for beta in 1..=3usize {
            let star = Graph::star(beta + 1);
            let avoiding = verify_avoiding(&g, &c, &star).unwrap();
            let frugal = verify_frugal(&g, &c, beta).unwrap().is_frugal();
            assert_eq!(avoiding, frugal, "seed {seed} beta {beta}");
        }
    }
    assert!(checked >= 10, "only {checked} proper colourings sampled");
}
