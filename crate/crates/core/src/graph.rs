//! Simple undirected graphs with the neighbourhood, girth, and
//! forbidden-subgraph queries the reductions and solvers consume.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted, which makes
//! intersections and membership tests cheap. Graph values are immutable after
//! construction and safe to share across threads.
//!
//! The subgraph-freeness checks (`is_c2t_free`, `is_kst_free`, `is_pt_free`)
//! are exhaustive searches meant for desk-scale instances (tens of vertices,
//! low hundreds for the biclique scan with small side sizes). They are not
//! general subgraph-isomorphism machinery.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A sorted set of distinct vertex ids.
///
/// Doubles as a hyperedge and as the subsets handed to the common
/// neighbourhood and special-set machinery. The derived `Ord` (lexicographic
/// on the sorted ids) is the canonical order used whenever edges need a
/// deterministic ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from arbitrary ids, sorting and removing repeats.
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Wraps a list that is already strictly increasing.
    pub fn from_sorted(ids: Vec<usize>) -> Result<Self> {
        if !ids.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::PreconditionFailed(
                "vertex set must be strictly increasing".into(),
            ));
        }
        Ok(VertexSet(ids))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        VertexSet::new(ids)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph: no self-loops, no parallel edges, sorted
/// neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges. Rejects self-loops,
    /// out-of-range endpoints, and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    u: u.min(w[0]),
                    v: u.max(w[0]),
                });
            }
        }
        Ok(Graph { n, m, adj })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// Cycle C_n, n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges = (0..n).map(|u| (u, (u + 1) % n)).map(|(u, v)| (u.min(v), u.max(v)));
        Graph::from_edges(n, edges).expect("cycle edges are valid")
    }

    /// Path P_n on n vertices (n - 1 edges).
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Graph::from_edges(n, edges).expect("path edges are valid")
    }

    /// Star K_{1,m}: vertex 0 is the centre, 1..=m the leaves.
    pub fn star(m: usize) -> Self {
        let edges = (1..=m).map(|v| (0, v));
        Graph::from_edges(m + 1, edges).expect("star edges are valid")
    }

    /// Complete bipartite K_{a,b}: part A is 0..a, part B is a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("biclique edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Maximum degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Common neighbourhood of a non-empty set: the vertices adjacent to
    /// every member of `s`.
    pub fn common_neighbourhood(&self, s: &VertexSet) -> Result<VertexSet> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for v in s.iter() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut it = s.iter();
        let first = it.next().expect("set is non-empty");
        let mut common: Vec<usize> = self.adj[first].clone();
        for v in it {
            common = intersect_sorted(&common, &self.adj[v]);
            if common.is_empty() {
                break;
            }
        }
        Ok(VertexSet(common))
    }

    /// Girth: length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let alive = vec![true; self.n];
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            if let Some(cycle) = shortest_cycle_from(&self.adj, &alive, root, usize::MAX) {
                if best.is_none_or(|b| cycle.len() < b) {
                    best = Some(cycle.len());
                    if cycle.len() == 3 {
                        break;
                    }
                }
            }
        }
        best
    }

    /// True iff the graph has no cycle of length exactly `2t` as a subgraph.
    /// Exhaustive path search; meant for small instances.
    pub fn is_c2t_free(&self, t: usize) -> bool {
        assert!(t >= 2, "C_{{2t}} needs t >= 2");
        let len = 2 * t;
        if len > self.n {
            return true;
        }
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            on_path[start] = true;
            if self.extend_cycle(start, start, 1, len, &mut on_path) {
                return false;
            }
            on_path[start] = false;
        }
        true
    }

    /// Grows a simple path anchored at `start` using vertices > `start` and
    /// reports whether it closes into a cycle of exactly `target` vertices.
    fn extend_cycle(
        &self,
        start: usize,
        last: usize,
        len: usize,
        target: usize,
        on_path: &mut Vec<bool>,
    ) -> bool {
        if len == target {
            return self.has_edge(last, start);
        }
        for &w in &self.adj[last] {
            if w <= start || on_path[w] {
                continue;
            }
            on_path[w] = true;
            if self.extend_cycle(start, w, len + 1, target, on_path) {
                on_path[w] = false;
                return true;
            }
            on_path[w] = false;
        }
        false
    }

    /// True iff the graph has no K_{s,t} subgraph, in either orientation.
    ///
    /// K_{s,t} is contained iff some set of min(s,t) vertices has at least
    /// max(s,t) common neighbours, so the scan enumerates subsets of the
    /// smaller side inside single neighbourhoods.
    pub fn is_kst_free(&self, s: usize, t: usize) -> bool {
        assert!(s >= 1 && t >= 1, "biclique sides must be at least 1");
        let (small, large) = (s.min(t), s.max(t));
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for v in 0..self.n {
            if self.adj[v].len() < small {
                continue;
            }
            for subset in combinations(&self.adj[v], small) {
                if !seen.insert(subset.clone()) {
                    continue;
                }
                let set = VertexSet(subset);
                let common = self
                    .common_neighbourhood(&set)
                    .expect("subset of a neighbourhood is valid");
                if common.len() >= large {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the graph has no path on `t` vertices as a subgraph.
    /// Exhaustive search, intended as a small-instance oracle.
    pub fn is_pt_free(&self, t: usize) -> bool {
        assert!(t >= 2, "P_t needs t >= 2");
        if t > self.n {
            return true;
        }
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            on_path[start] = true;
            if self.extend_path(start, 1, t, &mut on_path) {
                return false;
            }
            on_path[start] = false;
        }
        true
    }

    fn extend_path(&self, last: usize, len: usize, target: usize, on_path: &mut Vec<bool>) -> bool {
        if len == target {
            return true;
        }
        for &w in &self.adj[last] {
            if on_path[w] {
                continue;
            }
            on_path[w] = true;
            if self.extend_path(w, len + 1, target, on_path) {
                on_path[w] = false;
                return true;
            }
            on_path[w] = false;
        }
        false
    }

    /// Number of edges spanned by the neighbourhood of `v`, i.e. triangles
    /// through `v`.
    pub fn count_triangles_at(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex out of range");
        let nb = &self.adj[v];
        let mut count = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if self.has_edge(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The square: same vertices, u ~ v iff their distance in `self` is 1 or 2.
    pub fn square(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n {
            let mut reach: HashSet<usize> = HashSet::new();
            for &u in &self.adj[v] {
                reach.insert(u);
                for &w in &self.adj[u] {
                    reach.insert(w);
                }
            }
            reach.remove(&v);
            for w in reach {
                if w > v {
                    edges.push((v, w));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("square edges are valid")
    }

    /// Induced subgraph on the given sorted, distinct vertices; the returned
    /// vector maps new ids back to the originals.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &v in keep {
            for &u in &self.adj[v] {
                if u > v && new_id[u] != usize::MAX {
                    edges.push((new_id[v], new_id[u]));
                }
            }
        }
        let g = Graph::from_edges(keep.len(), edges).expect("induced edges are valid");
        (g, keep.to_vec())
    }

    /// Parses the graph text format: first line `n m`, then `m` lines `u v`
    /// with `0 <= u < v < n`. `#` starts a comment, blank lines are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields = parse_fields(line, lineno + 1)?;
            match header {
                None => {
                    let [n, m] = two(&fields, lineno + 1)?;
                    header = Some((n, m));
                }
                Some((n, m)) => {
                    let [u, v] = two(&fields, lineno + 1)?;
                    if u >= v {
                        return Err(Error::EdgeNotCanonical { u, v });
                    }
                    if v >= n {
                        return Err(Error::VertexOutOfRange { v, n });
                    }
                    edges.push((u, v));
                    if edges.len() > m {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            what: format!("more than {m} edge lines"),
                        });
                    }
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            what: "missing header line".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                what: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Canonical text form: header, then edges in lexicographic order. The
    /// output round-trips through [`Graph::from_text`] bit-exactly.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_fields(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                what: format!("bad integer {tok:?}"),
            })
        })
        .collect()
}

fn two(fields: &[usize], lineno: usize) -> Result<[usize; 2]> {
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: lineno,
            what: format!("expected 2 fields, found {}", fields.len()),
        });
    }
    Ok([fields[0], fields[1]])
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// All `k`-subsets of a sorted slice, in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance the rightmost index that can still move
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + items.len() - k {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
    }
}

/// BFS-based shortest-cycle witness through the ball around `root`.
///
/// Expands vertices at distance <= `expand_cap`; every non-tree edge found
/// yields a closed walk through the BFS tree, and the simple cycle through the
/// lowest common ancestor is extracted. Returns the shortest cycle seen from
/// this root, as a vertex list. Scanning every root and taking the minimum
/// length gives the girth: any witness is a genuine cycle, and a root lying on
/// a globally shortest cycle produces a witness of exactly that length.
pub(crate) fn shortest_cycle_from(
    adj: &[Vec<usize>],
    alive: &[bool],
    root: usize,
    expand_cap: usize,
) -> Option<Vec<usize>> {
    if !alive[root] {
        return None;
    }
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    let mut best: Option<Vec<usize>> = None;
    while let Some(u) = queue.pop_front() {
        if dist[u] > expand_cap {
            continue;
        }
        for &v in &adj[u] {
            if !alive[v] {
                continue;
            }
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if parent[u] != v && parent[v] != u {
                let cand = dist[u] + dist[v] + 1;
                if best.as_ref().is_none_or(|b| cand < b.len()) {
                    let cycle = extract_cycle(u, v, &parent);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// The simple cycle formed by the tree paths of `u` and `v` up to their
/// lowest common ancestor, closed by the edge `u`-`v`.
fn extract_cycle(u: usize, v: usize, parent: &[usize]) -> Vec<usize> {
    let mut up_u = vec![u];
    let mut x = u;
    while parent[x] != usize::MAX {
        x = parent[x];
        up_u.push(x);
    }
    let pos: std::collections::HashMap<usize, usize> =
        up_u.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut up_v = vec![v];
    let mut y = v;
    while !pos.contains_key(&y) {
        y = parent[y];
        up_v.push(y);
    }
    let lca_idx = pos[&y];
    let mut cycle: Vec<usize> = up_u[..=lca_idx].to_vec();
    // up_v ends at the lca, which is already in the list
    for &w in up_v[..up_v.len() - 1].iter().rev() {
        cycle.push(w);
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_degree_basics() {
        assert_eq!(Graph::cycle(4).max_degree(), 2);
        assert_eq!(Graph::edgeless(5).max_degree(), 0);
    }

    #[test]
    fn common_neighbourhood_basics() {
        let g = Graph::complete_bipartite(2, 5);
        let left = VertexSet::new(vec![0, 1]);
        let common = g.common_neighbourhood(&left).unwrap();
        assert_eq!(common.as_slice(), &[2, 3, 4, 5, 6]);

        let p3 = Graph::path(3);
        let ends = VertexSet::new(vec![0, 2]);
        assert_eq!(p3.common_neighbourhood(&ends).unwrap().as_slice(), &[1]);

        assert_eq!(
            g.common_neighbourhood(&VertexSet::new(vec![])),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn girth_basics() {
        assert_eq!(Graph::cycle(7).girth(), Some(7));
        assert_eq!(Graph::path(6).girth(), None);
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::complete_bipartite(2, 3).girth(), Some(4));
    }

    #[test]
    fn c2t_free_basics() {
        assert!(!Graph::cycle(4).is_c2t_free(2));
        assert!(Graph::path(9).is_c2t_free(2));
        assert!(Graph::path(9).is_c2t_free(3));
        // the triangle has odd girth and no even cycle at all
        assert!(Graph::complete(3).is_c2t_free(2));
        // K4 contains a 4-cycle
        assert!(!Graph::complete(4).is_c2t_free(2));
    }

    #[test]
    fn kst_free_basics() {
        assert!(!Graph::complete_bipartite(2, 3).is_kst_free(2, 3));
        // orientation swap is the same containment question
        assert!(!Graph::complete_bipartite(2, 3).is_kst_free(3, 2));
        assert!(Graph::cycle(6).is_kst_free(2, 2));
        // degree characterisation of K_{1,t}
        let star = Graph::star(4);
        assert!(!star.is_kst_free(1, 4));
        assert!(star.is_kst_free(1, 5));
    }

    #[test]
    fn pt_free_basics() {
        assert!(!Graph::path(4).is_pt_free(4));
        assert!(Graph::path(4).is_pt_free(5));
        // perfect matching has no P_3
        let matching = Graph::from_edges(6, vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(matching.is_pt_free(3));
    }

    #[test]
    fn triangles_at_basics() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert_eq!(k4.count_triangles_at(v), 3);
        }
        let bip = Graph::complete_bipartite(3, 3);
        for v in 0..6 {
            assert_eq!(bip.count_triangles_at(v), 0);
        }
    }

    #[test]
    fn square_basics() {
        assert_eq!(Graph::cycle(4).square(), Graph::complete(4));
        assert_eq!(Graph::edgeless(3).square(), Graph::edgeless(3));
        // C7 squared is the 4-regular circulant with distances 1 and 2
        let c7sq = Graph::cycle(7).square();
        for v in 0..7 {
            assert_eq!(c7sq.degree(v), 4);
        }
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, vec![(0, 0)]),
            Err(Error::SelfLoop { v: 0 })
        );
        assert_eq!(
            Graph::from_edges(3, vec![(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::from_edges(2, vec![(0, 5)]),
            Err(Error::VertexOutOfRange { v: 5, n: 2 })
        );
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(5, vec![(0, 1), (1, 2), (0, 4)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "5 3\n0 1\n0 4\n1 2\n");
        let back = Graph::from_text(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn text_parses_comments_and_rejects_junk() {
        let g = Graph::from_text("# a comment\n3 1 # header\n\n0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 2));

        assert!(Graph::from_text("3 1\n2 0\n").is_err());
        assert!(Graph::from_text("3 2\n0 1\n").is_err());
        assert!(Graph::from_text("3 1\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn combinations_enumerates_lexicographically() {
        let c = combinations(&[1, 3, 5, 7], 2);
        assert_eq!(
            c,
            vec![
                vec![1, 3],
                vec![1, 5],
                vec![1, 7],
                vec![3, 5],
                vec![3, 7],
                vec![5, 7]
            ]
        );
        assert!(combinations(&[1, 2], 3).is_empty());
    }
}
