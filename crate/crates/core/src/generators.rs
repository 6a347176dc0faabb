//! Instance constructions: coordinate grid graphs, projective-geometry
//! incidence graphs, seeded Erdős–Rényi samples, and the degree/girth
//! pruning procedure.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`, with pairs
//! `(u, v)`, `u < v`, drawn in row-major order, so samples are reproducible
//! across platforms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{shortest_cycle_from, Graph};
use crate::hypergraph::Colouring;

/// Default vertex cap for the deterministic generators; override with the
/// `_capped` variants.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// The grid graph on `[n]^{beta+1}`: tuples are adjacent iff they agree in at
/// least one coordinate. Regular of degree `n^{beta+1} - (n-1)^{beta+1} - 1`.
pub fn grid_graph(n: usize, beta: usize) -> Result<Graph> {
    grid_graph_capped(n, beta, DEFAULT_SIZE_CAP)
}

pub fn grid_graph_capped(n: usize, beta: usize, cap: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            requirement: "n >= 2",
        });
    }
    if beta < 1 {
        return Err(Error::InvalidParameter {
            name: "beta",
            requirement: "beta >= 1",
        });
    }
    let dims = beta + 1;
    let size = n.checked_pow(dims as u32).ok_or(Error::CapExceeded {
        size: usize::MAX,
        cap,
    })?;
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let coords: Vec<Vec<usize>> = (0..size)
        .map(|mut ix| {
            let mut tuple = vec![0; dims];
            for slot in tuple.iter_mut() {
                *slot = ix % n;
                ix /= n;
            }
            tuple
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..size {
        for v in u + 1..size {
            if coords[u].iter().zip(&coords[v]).any(|(a, b)| a == b) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(size, edges)
}

/// Checker for the grid lower-bound argument: given a β-frugal colouring of a
/// grid graph (caller-verified), every colour class must have at most β
/// vertices.
pub fn grid_colour_class_bound(g: &Graph, c: &Colouring, beta: usize) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::ColouringSize {
            got: c.len(),
            want: g.n(),
        });
    }
    Ok(c.class_sizes().into_iter().all(|size| size <= beta))
}

/// Point-hyperplane incidence graph of the projective geometry PG(beta+1, q)
/// for prime `q`.
///
/// One side holds the 1-dimensional subspaces of F_q^{beta+2}, the other the
/// hyperplanes, represented by their dual normal vectors; both canonicalised
/// so the first nonzero coordinate is 1. A point lies on a hyperplane iff the
/// dot product vanishes mod q. Both sides have (q^{beta+2}-1)/(q-1) vertices
/// and the graph is biregular of degree (q^{beta+1}-1)/(q-1).
pub fn pg_incidence(q: usize, beta: usize) -> Result<Graph> {
    pg_incidence_capped(q, beta, DEFAULT_SIZE_CAP)
}

pub fn pg_incidence_capped(q: usize, beta: usize, cap: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::NotPrime { q });
    }
    if beta < 1 {
        return Err(Error::InvalidParameter {
            name: "beta",
            requirement: "beta >= 1",
        });
    }
    let dim = beta + 2;
    let side = ((q.checked_pow(dim as u32)).ok_or(Error::CapExceeded {
        size: usize::MAX,
        cap,
    })? - 1)
        / (q - 1);
    if 2 * side > cap {
        return Err(Error::CapExceeded {
            size: 2 * side,
            cap,
        });
    }
    let reps = canonical_vectors(q, dim);
    debug_assert_eq!(reps.len(), side);
    // vertices: points 0..side, hyperplanes side..2*side
    let mut edges = Vec::new();
    for (pi, p) in reps.iter().enumerate() {
        for (hi, h) in reps.iter().enumerate() {
            let dot: usize = p.iter().zip(h).map(|(a, b)| a * b).sum();
            if dot.is_multiple_of(q) {
                edges.push((pi, side + hi));
            }
        }
    }
    Graph::from_edges(2 * side, edges)
}

/// Nonzero vectors of F_q^dim whose first nonzero coordinate is 1, one per
/// 1-dimensional subspace.
fn canonical_vectors(q: usize, dim: usize) -> Vec<Vec<usize>> {
    let total = q.pow(dim as u32);
    let mut reps = Vec::new();
    for mut ix in 1..total {
        let mut vec = vec![0; dim];
        for slot in vec.iter_mut().rev() {
            *slot = ix % q;
            ix /= q;
        }
        let first = vec.iter().find(|&&a| a != 0);
        if first == Some(&1) {
            reps.push(vec);
        }
    }
    reps
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parameters for a seeded Erdős–Rényi sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GnpSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

/// Samples G(n, p): every pair independently an edge with probability `p`,
/// deterministic per seed.
pub fn sample_gnp(spec: &GnpSpec) -> Result<Graph> {
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(Error::InvalidParameter {
            name: "p",
            requirement: "0 <= p <= 1",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if rng.random_bool(spec.p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(spec.n, edges)
}

/// Outcome of [`prune`]: the surviving induced subgraph plus the removal
/// report.
#[derive(Debug, Clone)]
pub struct PruneReport {
    pub graph: Graph,
    /// Original ids of the surviving vertices, ascending; index = new id.
    pub kept: Vec<usize>,
    /// Vertices dropped for having original degree >= 10d.
    pub removed_high_degree: Vec<usize>,
    /// Vertices dropped to break short cycles, in deletion order.
    pub removed_cycle_break: Vec<usize>,
}

/// Removes every vertex of original degree at least `10d`, then repeatedly
/// finds a cycle shorter than `girth_target` and deletes its highest-degree
/// vertex (ties to the smallest id) until none remain.
///
/// The survivors induce a subgraph with maximum degree below `10d` and girth
/// at least `girth_target`.
pub fn prune(g: &Graph, d: f64, girth_target: usize) -> PruneReport {
    let threshold = 10.0 * d;
    let mut alive = vec![true; g.n()];
    let mut removed_high_degree = Vec::new();
    for (v, keep) in alive.iter_mut().enumerate() {
        if g.degree(v) as f64 >= threshold {
            *keep = false;
            removed_high_degree.push(v);
        }
    }
    let mut degree: Vec<usize> = (0..g.n())
        .map(|v| g.neighbours(v).iter().filter(|&&u| alive[u]).count())
        .collect();
    for &v in &removed_high_degree {
        degree[v] = 0;
    }

    let mut removed_cycle_break = Vec::new();
    if girth_target > 3 {
        // cycles of length < girth_target are detectable from some root by
        // expanding the BFS ball to this depth
        let expand_cap = (girth_target - 2) / 2;
        let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbours(v).to_vec()).collect();
        loop {
            let mut deleted_any = false;
            for root in 0..g.n() {
                while alive[root] {
                    let Some(cycle) = shortest_cycle_from(&adj, &alive, root, expand_cap) else {
                        break;
                    };
                    if cycle.len() >= girth_target {
                        break;
                    }
                    let &victim = cycle
                        .iter()
                        .max_by_key(|&&v| (degree[v], std::cmp::Reverse(v)))
                        .expect("cycles are non-empty");
                    alive[victim] = false;
                    for &u in g.neighbours(victim) {
                        if alive[u] {
                            degree[u] -= 1;
                        }
                    }
                    degree[victim] = 0;
                    removed_cycle_break.push(victim);
                    deleted_any = true;
                }
            }
            if !deleted_any {
                break;
            }
        }
    }

    let kept: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    let (graph, kept) = g.induced(&kept);
    PruneReport {
        graph,
        kept,
        removed_high_degree,
        removed_cycle_break,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_2_1_is_c4() {
        let g = grid_graph(2, 1).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        for v in 0..4 {
            assert_eq!(g.degree(v), 2);
        }
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn grid_3_1_is_the_3x3_rook_graph() {
        let g = grid_graph(3, 1).unwrap();
        assert_eq!(g.n(), 9);
        for v in 0..9 {
            assert_eq!(g.degree(v), 4);
        }
    }

    #[test]
    fn grid_regularity_formula() {
        for (n, beta) in [(2usize, 1usize), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3)] {
            let g = grid_graph(n, beta).unwrap();
            let expected = n.pow(beta as u32 + 1) - (n - 1).pow(beta as u32 + 1) - 1;
            for v in 0..g.n() {
                assert_eq!(g.degree(v), expected, "grid({n},{beta}) at {v}");
            }
        }
    }

    #[test]
    fn grid_refuses_oversized_instances() {
        assert!(matches!(
            grid_graph_capped(10, 3, 4096),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn class_bound_checker() {
        let g = grid_graph(2, 1).unwrap();
        let rainbow = Colouring::new(vec![0, 1, 2, 3], 4).unwrap();
        assert_eq!(grid_colour_class_bound(&g, &rainbow, 1), Ok(true));
        let paired = Colouring::new(vec![0, 0, 1, 1], 2).unwrap();
        assert_eq!(grid_colour_class_bound(&g, &paired, 1), Ok(false));
    }

    #[test]
    fn pg_2_1_is_the_fano_incidence_graph() {
        let g = pg_incidence(2, 1).unwrap();
        assert_eq!(g.n(), 14);
        assert_eq!(g.m(), 21);
        for v in 0..14 {
            assert_eq!(g.degree(v), 3);
        }
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn pg_3_1_sizes() {
        let g = pg_incidence(3, 1).unwrap();
        assert_eq!(g.n(), 26);
        for v in 0..26 {
            assert_eq!(g.degree(v), 4);
        }
    }

    #[test]
    fn pg_2_2_sizes() {
        let g = pg_incidence(2, 2).unwrap();
        assert_eq!(g.n(), 30);
        for v in 0..30 {
            assert_eq!(g.degree(v), 7);
        }
    }

    #[test]
    fn pg_rejects_composite_order() {
        assert_eq!(pg_incidence(4, 1), Err(Error::NotPrime { q: 4 }));
    }

    #[test]
    fn gnp_extremes() {
        let empty = sample_gnp(&GnpSpec {
            n: 6,
            p: 0.0,
            seed: 3,
        })
        .unwrap();
        assert_eq!(empty.m(), 0);
        let full = sample_gnp(&GnpSpec {
            n: 6,
            p: 1.0,
            seed: 3,
        })
        .unwrap();
        assert_eq!(full.m(), 15);
        assert!(sample_gnp(&GnpSpec {
            n: 3,
            p: 1.5,
            seed: 0
        })
        .is_err());
    }

    #[test]
    fn gnp_is_seed_deterministic() {
        let spec = GnpSpec {
            n: 40,
            p: 0.2,
            seed: 11,
        };
        assert_eq!(sample_gnp(&spec).unwrap(), sample_gnp(&spec).unwrap());
    }

    #[test]
    fn prune_keeps_forests() {
        let g = Graph::path(7);
        let report = prune(&g, 1.0, 6);
        assert_eq!(report.graph.n(), 7);
        assert_eq!(report.graph.m(), 6);
        assert!(report.removed_cycle_break.is_empty());
    }

    #[test]
    fn prune_breaks_a_triangle() {
        let report = prune(&Graph::complete(3), 1.0, 4);
        assert_eq!(report.graph.n(), 2);
        assert_eq!(report.removed_cycle_break, vec![0]);
        assert_eq!(report.kept, vec![1, 2]);
    }

    #[test]
    fn prune_drops_high_degree_first() {
        // star centre has degree 5 >= 10 * 0.5
        let report = prune(&Graph::star(5), 0.5, 3);
        assert_eq!(report.removed_high_degree, vec![0]);
        assert_eq!(report.graph.n(), 5);
        assert_eq!(report.graph.m(), 0);
    }
}
