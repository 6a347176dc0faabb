//! The auxiliary-hypergraph reductions and the certificate checker.
//!
//! Three builders turn a graph `G` into a hypergraph `H` whose proper
//! colourings induce β-frugal colourings of `G`:
//!
//! * [`build_basic`]: `E(G)` plus every (β+1)-subset of a neighbourhood.
//!   Proper colourings of `H` are exactly the β-frugal colourings of `G`,
//!   so the chromatic numbers agree.
//! * [`build_cycle_reduction`]: additionally promotes *special pairs*
//!   (non-adjacent pairs with more than α = 2t common neighbours) to
//!   2-edges and keeps only (β+1)-subsets containing no smaller edge.
//! * [`build_kbt_reduction`]: generalises pairs to *special s-sets* for
//!   s = 2..β with per-size thresholds α_s.
//!
//! [`certify`] measures the codegree and triangle conditions that the sparse
//! hypergraph colouring bound asks for and reports a verdict per condition.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{combinations, Graph, VertexSet};
use crate::hypergraph::Hypergraph;

/// Reduction thresholds for a graph of maximum degree Δ.
///
/// The quantities are kept symbolic (β, t, Δ) and evaluated to floats only at
/// comparison time: ε = 1/(4β²) exactly as a rational, f = Δ^ε, α = 2t for
/// the cycle reduction, and α_s = Δ^{(β+1-s)/β - ε} for 2 ≤ s ≤ β with
/// α_1 = Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionParams {
    beta: usize,
    t: usize,
    delta: usize,
}

impl ReductionParams {
    pub fn new(beta: usize, t: usize, delta: usize) -> Result<Self> {
        if beta < 2 {
            return Err(Error::InvalidParameter {
                name: "beta",
                requirement: "beta >= 2",
            });
        }
        if t < 2 {
            return Err(Error::InvalidParameter {
                name: "t",
                requirement: "t >= 2",
            });
        }
        Ok(ReductionParams { beta, t, delta })
    }

    /// Thresholds for `g`, taking Δ from the graph itself.
    pub fn for_graph(g: &Graph, beta: usize, t: usize) -> Result<Self> {
        ReductionParams::new(beta, t, g.max_degree())
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// ε = 1/(4β²).
    pub fn epsilon(&self) -> f64 {
        1.0 / (4 * self.beta * self.beta) as f64
    }

    /// f = Δ^ε, the sparsity margin used by the biclique reduction.
    pub fn f(&self) -> f64 {
        (self.delta as f64).powf(self.epsilon())
    }

    /// α = 2t, the common-neighbourhood threshold for special pairs.
    pub fn alpha(&self) -> usize {
        2 * self.t
    }

    /// α_s for 1 ≤ s ≤ β: α_1 = Δ and α_s = Δ^{(β+1-s)/β - ε} for s ≥ 2.
    pub fn alpha_s(&self, s: usize) -> f64 {
        assert!(1 <= s && s <= self.beta, "alpha_s needs 1 <= s <= beta");
        if s == 1 {
            return self.delta as f64;
        }
        let exponent = (self.beta + 1 - s) as f64 / self.beta as f64 - self.epsilon();
        (self.delta as f64).powf(exponent)
    }
}

/// `E(G)` plus every (β+1)-subset of vertices lying inside some
/// neighbourhood. Proper colourings of the result are exactly the β-frugal
/// colourings of `g`.
pub fn build_basic(g: &Graph, beta: usize) -> Hypergraph {
    assert!(beta >= 1, "frugality must be at least 1");
    let mut edges: Vec<VertexSet> = g
        .edges()
        .map(|(u, v)| VertexSet::new(vec![u, v]))
        .collect();
    for v in 0..g.n() {
        for subset in combinations(g.neighbours(v), beta + 1) {
            edges.push(VertexSet::new(subset));
        }
    }
    Hypergraph::new(g.n(), edges).expect("reduction edges are valid")
}

/// Non-adjacent pairs `{u, v}` with strictly more than `alpha` common
/// neighbours, in lexicographic order.
pub fn find_special_pairs(g: &Graph, alpha: usize) -> Vec<VertexSet> {
    let mut pairs = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let set = VertexSet::new(vec![u, v]);
            let common = g
                .common_neighbourhood(&set)
                .expect("pair of valid vertices");
            if common.len() > alpha {
                pairs.push(set);
            }
        }
    }
    pairs
}

/// The even-cycle reduction: `E(G)`, the special pairs at threshold α = 2t,
/// and every (β+1)-subset of a neighbourhood that contains no 2-edge.
pub fn build_cycle_reduction(g: &Graph, params: &ReductionParams) -> Hypergraph {
    let special: HashSet<(usize, usize)> = find_special_pairs(g, params.alpha())
        .into_iter()
        .map(|p| (p.as_slice()[0], p.as_slice()[1]))
        .collect();
    let mut edges: Vec<VertexSet> = g
        .edges()
        .map(|(u, v)| VertexSet::new(vec![u, v]))
        .collect();
    edges.extend(
        special
            .iter()
            .map(|&(u, v)| VertexSet::new(vec![u, v])),
    );
    let beta = params.beta();
    for v in 0..g.n() {
        'subset: for subset in combinations(g.neighbours(v), beta + 1) {
            for (i, &a) in subset.iter().enumerate() {
                for &b in &subset[i + 1..] {
                    if g.has_edge(a, b) || special.contains(&(a, b)) {
                        continue 'subset;
                    }
                }
            }
            edges.push(VertexSet::new(subset));
        }
    }
    Hypergraph::new(g.n(), edges).expect("reduction edges are valid")
}

/// Special s-sets for s = 2..β, discovered in increasing s order so that the
/// minimality requirement (no smaller special set inside) is enforced
/// against already-committed sets. Each set is independent in `g` and has
/// strictly more than α_s common neighbours.
pub fn find_special_sets(g: &Graph, params: &ReductionParams) -> Vec<VertexSet> {
    let mut committed: Vec<VertexSet> = Vec::new();
    let mut committed_lookup: HashSet<Vec<usize>> = HashSet::new();
    for s in 2..=params.beta() {
        let threshold = params.alpha_s(s);
        let mut level: Vec<VertexSet> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for v in 0..g.n() {
            'candidate: for subset in combinations(g.neighbours(v), s) {
                if !seen.insert(subset.clone()) {
                    continue;
                }
                for (i, &a) in subset.iter().enumerate() {
                    for &b in &subset[i + 1..] {
                        if g.has_edge(a, b) {
                            continue 'candidate;
                        }
                    }
                }
                if contains_committed(&subset, s, &committed_lookup) {
                    continue;
                }
                let set = VertexSet::new(subset);
                let common = g
                    .common_neighbourhood(&set)
                    .expect("subset of a neighbourhood is valid");
                if (common.len() as f64) > threshold {
                    level.push(set);
                }
            }
        }
        level.sort_unstable();
        for set in level {
            committed_lookup.insert(set.as_slice().to_vec());
            committed.push(set);
        }
    }
    committed.sort_unstable_by_key(|s| (s.len(), s.clone()));
    committed
}

fn contains_committed(subset: &[usize], size: usize, committed: &HashSet<Vec<usize>>) -> bool {
    if committed.is_empty() {
        return false;
    }
    for smaller in 2..size {
        for sub in combinations(subset, smaller) {
            if committed.contains(&sub) {
                return true;
            }
        }
    }
    false
}

/// The biclique reduction: `E(G)`, all special s-sets, and every
/// (β+1)-subset of a neighbourhood that contains no smaller edge (neither a
/// graph edge nor a special set).
pub fn build_kbt_reduction(g: &Graph, params: &ReductionParams) -> Hypergraph {
    let special = find_special_sets(g, params);
    let special_lookup: HashSet<Vec<usize>> = special
        .iter()
        .map(|s| s.as_slice().to_vec())
        .collect();
    let mut edges: Vec<VertexSet> = g
        .edges()
        .map(|(u, v)| VertexSet::new(vec![u, v]))
        .collect();
    edges.extend(special.iter().cloned());
    let beta = params.beta();
    for v in 0..g.n() {
        'subset: for subset in combinations(g.neighbours(v), beta + 1) {
            for (i, &a) in subset.iter().enumerate() {
                for &b in &subset[i + 1..] {
                    if g.has_edge(a, b) {
                        continue 'subset;
                    }
                }
            }
            if contains_committed(&subset, beta + 1, &special_lookup) {
                continue;
            }
            edges.push(VertexSet::new(subset));
        }
    }
    Hypergraph::new(g.n(), edges).expect("reduction edges are valid")
}

/// Measured codegrees and triangle counts of a hypergraph against the two
/// sparse-colouring hypotheses at margin `f`:
///
/// * (a) Δ_{s,ℓ} ≤ Δ_*^{ℓ-s} / f for all 2 ≤ s < ℓ ≤ rank, and
/// * (b) every vertex of the 2-edge layer lies in at most Δ_*²/f triangles.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub rank: usize,
    pub delta_star: f64,
    pub f: f64,
    /// Observed Δ_{s,ℓ} keyed by `(s, ell)` for 2 ≤ s < ℓ ≤ rank.
    pub codegree_table: BTreeMap<(usize, usize), usize>,
    /// Largest per-vertex triangle count of the 2-edge layer.
    pub triangle_max: usize,
    pub verdict_a: bool,
    pub verdict_b: bool,
}

impl Certificate {
    /// The codegree bound Δ_*^{ℓ-s} / f for a table entry.
    pub fn codegree_bound(&self, s: usize, ell: usize) -> f64 {
        self.delta_star.powi((ell - s) as i32) / self.f
    }

    /// The triangle bound Δ_*² / f.
    pub fn triangle_bound(&self) -> f64 {
        self.delta_star * self.delta_star / self.f
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(out, "rank {}", self.rank)?;
        writeln!(out, "delta_star {:.6}", self.delta_star)?;
        writeln!(out, "f {:.6}", self.f)?;
        for (&(s, ell), &observed) in &self.codegree_table {
            let bound = self.codegree_bound(s, ell);
            let ok = (observed as f64) <= bound;
            writeln!(
                out,
                "codegree s={s} ell={ell} observed={observed} bound={bound:.6} {}",
                if ok { "pass" } else { "FAIL" }
            )?;
        }
        writeln!(
            out,
            "triangles max={} bound={:.6} {}",
            self.triangle_max,
            self.triangle_bound(),
            if self.verdict_b { "pass" } else { "FAIL" }
        )?;
        writeln!(out, "verdict_a {}", self.verdict_a)?;
        write!(out, "verdict_b {}", self.verdict_b)
    }
}

/// Fills the codegree table for all 2 ≤ s < ℓ ≤ rank, measures the triangle
/// maximum of the 2-edge layer, and evaluates both verdicts at margin `f`.
///
/// `f` is an explicit argument because each reduction comes with its own
/// margin (Δ^{1/β}/t, Δ^{1/β}/2t, or Δ^ε); it must exceed 1 and the rank must
/// be at least 3.
pub fn certify(h: &Hypergraph, f: f64) -> Result<Certificate> {
    // the negated form also rejects NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(f > 1.0) {
        return Err(Error::FNotAboveOne { f });
    }
    let rank = h.rank()?;
    if rank < 3 {
        return Err(Error::CertificateRank { rank });
    }
    let delta_star = h.delta_star()?;
    let mut codegree_table = BTreeMap::new();
    for ell in 3..=rank {
        for s in 2..ell {
            codegree_table.insert((s, ell), h.max_codegree(s, ell)?);
        }
    }
    let two_layer = Graph::from_edges(
        h.n(),
        h.edges()
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| (e.as_slice()[0], e.as_slice()[1])),
    )
    .expect("2-edges of a hypergraph form a simple graph");
    let triangle_max = (0..h.n())
        .map(|v| two_layer.count_triangles_at(v))
        .max()
        .unwrap_or(0);
    let verdict_a = codegree_table
        .iter()
        .all(|(&(s, ell), &observed)| observed as f64 <= delta_star.powi((ell - s) as i32) / f);
    let verdict_b = (triangle_max as f64) <= delta_star * delta_star / f;
    Ok(Certificate {
        rank,
        delta_star,
        f,
        codegree_table,
        triangle_max,
        verdict_a,
        verdict_b,
    })
}
