//! Brute-force reference implementations used as oracles by the integration
//! suites. Each one takes a route independent of the library code it checks:
//! subset/permutation enumeration, bitmask DP, and set-partition search
//! instead of the library's incremental algorithms.

#![allow(dead_code)]

use frugal_core::graph::{Graph, VertexSet};
use frugal_core::hypergraph::Hypergraph;

/// Girth by exhaustive DFS cycle enumeration with canonical minimum-vertex
/// anchoring.
pub fn girth_bruteforce(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        on_path[start] = true;
        let mut path = vec![start];
        cycle_dfs(g, start, &mut path, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}

fn cycle_dfs(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    best: &mut Option<usize>,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(last, start) {
        let len = path.len();
        if best.is_none_or(|b| len < b) {
            *best = Some(len);
        }
    }
    if let Some(b) = *best {
        if path.len() + 1 >= b {
            return;
        }
    }
    for &w in g.neighbours(last) {
        if w <= start || on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        cycle_dfs(g, start, path, on_path, best);
        path.pop();
        on_path[w] = false;
    }
}

/// Common neighbourhood by scanning every vertex of the graph.
pub fn common_neighbourhood_bruteforce(g: &Graph, s: &[usize]) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| s.iter().all(|&u| g.has_edge(u, v)))
        .collect()
}

/// Triangles at `v` by enumerating all vertex triples.
pub fn triangles_at_bruteforce(g: &Graph, v: usize) -> usize {
    let mut count = 0;
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}

/// Total triangle count by enumerating all triples.
pub fn total_triangles_bruteforce(g: &Graph) -> usize {
    let mut count = 0;
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            for c in b + 1..g.n() {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Whether the graph has a simple path on `t` vertices, by bitmask DP over
/// (visited set, endpoint) states. Meant for n <= ~15.
pub fn has_path_on_bruteforce(g: &Graph, t: usize) -> bool {
    let n = g.n();
    if t > n {
        return false;
    }
    if t <= 1 {
        return n >= t;
    }
    let mut reach = vec![vec![false; n]; 1usize << n];
    for v in 0..n {
        reach[1 << v][v] = true;
    }
    for mask in 1usize..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= t {
            continue;
        }
        for last in 0..n {
            if !reach[mask][last] {
                continue;
            }
            for &w in g.neighbours(last) {
                if mask & (1 << w) == 0 {
                    let next = mask | (1 << w);
                    if size + 1 == t {
                        return true;
                    }
                    reach[next][w] = true;
                }
            }
        }
    }
    false
}

/// K_{s,t} containment by scanning every s-subset and every t-subset of the
/// whole vertex set, both orientations spelled out.
pub fn contains_kst_bruteforce(g: &Graph, s: usize, t: usize) -> bool {
    let orientation = |a: usize, b: usize| {
        subsets(g.n(), a)
            .into_iter()
            .any(|sub| common_neighbourhood_bruteforce(g, &sub).len() >= b)
    };
    orientation(s, t) || orientation(t, s)
}

/// C_{2t} containment by picking every 2t-subset and searching for a
/// Hamiltonian cycle inside it by permutation.
pub fn contains_c2t_bruteforce(g: &Graph, t: usize) -> bool {
    let len = 2 * t;
    subsets(g.n(), len)
        .into_iter()
        .any(|sub| has_ham_cycle_on(g, &sub))
}

fn has_ham_cycle_on(g: &Graph, verts: &[usize]) -> bool {
    let first = verts[0];
    let mut rest: Vec<usize> = verts[1..].to_vec();
    permutations(&mut rest, 0, &mut |perm| {
        let mut prev = first;
        for &v in perm.iter() {
            if !g.has_edge(prev, v) {
                return false;
            }
            prev = v;
        }
        g.has_edge(prev, first)
    })
}

fn permutations(items: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return check(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, check) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// All `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Maximum (s, ell)-codegree by scanning every s-subset of the vertex set.
pub fn codegree_bruteforce(h: &Hypergraph, s: usize, ell: usize) -> usize {
    subsets(h.n(), s)
        .into_iter()
        .map(|sub| {
            let set = VertexSet::new(sub);
            h.edges()
                .iter()
                .filter(|e| e.len() == ell && set.is_subset_of(e))
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Maximum ell-degree by direct incidence counting.
pub fn ell_degree_bruteforce(h: &Hypergraph, ell: usize) -> usize {
    (0..h.n())
        .map(|v| {
            h.edges()
                .iter()
                .filter(|e| e.len() == ell && e.contains(v))
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Visits every set partition of `0..n` as a restricted-growth assignment
/// (`assign[v]` = class of v, classes introduced in order). Aborts early when
/// the visitor returns false.
pub fn for_each_partition(n: usize, visit: &mut impl FnMut(&[usize]) -> bool) {
    let mut assign = vec![0usize; n];
    fn rec(pos: usize, max_used: usize, assign: &mut Vec<usize>, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if pos == assign.len() {
            return visit(assign);
        }
        for c in 0..=max_used + 1 {
            assign[pos] = c;
            let next_max = max_used.max(c);
            if !rec(pos + 1, next_max, assign, visit) {
                return false;
            }
        }
        true
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    assign[0] = 0;
    rec(1, 0, &mut assign, visit);
}

/// Chromatic number of a hypergraph by set-partition search; independent of
/// the branch-and-bound solver.
pub fn hypergraph_chromatic_bruteforce(h: &Hypergraph) -> usize {
    if h.n() == 0 {
        return 0;
    }
    let mut best = h.n();
    for_each_partition(h.n(), &mut |assign| {
        let classes = assign.iter().max().unwrap() + 1;
        if classes >= best {
            return true;
        }
        let proper = h.edges().iter().all(|e| {
            let mut it = e.iter();
            let first = assign[it.next().unwrap()];
            !it.all(|v| assign[v] == first)
        });
        if proper {
            best = classes;
        }
        true
    });
    best
}

/// β-frugal chromatic number by set-partition search.
pub fn frugal_chromatic_bruteforce(g: &Graph, beta: usize) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = g.n();
    for_each_partition(g.n(), &mut |assign| {
        let classes = assign.iter().max().unwrap() + 1;
        if classes >= best {
            return true;
        }
        if is_frugal_assignment(g, assign, beta) {
            best = classes;
        }
        true
    });
    best
}

pub fn is_frugal_assignment(g: &Graph, assign: &[usize], beta: usize) -> bool {
    for (u, v) in g.edges() {
        if assign[u] == assign[v] {
            return false;
        }
    }
    for v in 0..g.n() {
        let mut counts = std::collections::HashMap::new();
        for &w in g.neighbours(v) {
            *counts.entry(assign[w]).or_insert(0usize) += 1;
        }
        if counts.values().any(|&c| c > beta) {
            return false;
        }
    }
    true
}

/// Deterministic small random graphs for the suites.
pub fn test_gnp(n: usize, p: f64, seed: u64) -> Graph {
    frugal_core::generators::sample_gnp(&frugal_core::generators::GnpSpec { n, p, seed }).unwrap()
}

/// The documented parameter grid for the binomial tail check: every point
/// satisfies the precondition window by construction.
///
/// beta ranges over 1..=3, t·p over 0.15..0.95 in steps of 0.05, and two
/// trial scales per point, 102 points in all; `t` is sized so that the
/// absorbed-slack precondition beta·p <= (tp)^{beta+1}(1/e - 1/4)/(beta+1)!
/// holds with a 10x margin, and d = 8 keeps 1/d < t·p.
pub fn binomial_tail_grid() -> Vec<(u64, f64, usize, f64)> {
    let mut grid = Vec::new();
    let c = 1.0 / std::f64::consts::E - 0.25;
    for beta in 1..=3usize {
        let fact: f64 = (1..=beta + 1).map(|i| i as f64).product();
        for step in 0..17 {
            let tp = 0.15 + 0.05 * step as f64;
            let t_min = 10.0 * beta as f64 * fact / (tp.powi(beta as i32) * c);
            for scale in [1.0, 4.0] {
                let t = (t_min * scale).ceil() as u64 + 1000;
                let p = tp / t as f64;
                grid.push((t, p, beta, 8.0));
            }
        }
    }
    grid
}
