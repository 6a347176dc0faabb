//! Shared instance builders for the benchmark targets.

use frugal_core::generators::{pg_incidence, sample_gnp, GnpSpec};
use frugal_core::graph::Graph;
use frugal_core::hypergraph::Hypergraph;
use frugal_core::reduction::{build_basic, build_cycle_reduction, ReductionParams};

pub fn sparse_gnp(n: usize, mean_degree: f64, seed: u64) -> Graph {
    sample_gnp(&GnpSpec {
        n,
        p: mean_degree / n as f64,
        seed,
    })
    .expect("valid spec")
}

pub fn pg_basic(q: usize, beta: usize) -> (Graph, Hypergraph) {
    let g = pg_incidence(q, 1).expect("small pg instance");
    let h = build_basic(&g, beta);
    (g, h)
}

pub fn pg_cycle(q: usize, beta: usize, t: usize) -> (Graph, Hypergraph) {
    let g = pg_incidence(q, 1).expect("small pg instance");
    let params = ReductionParams::for_graph(&g, beta, t).expect("valid params");
    let h = build_cycle_reduction(&g, &params);
    (g, h)
}
