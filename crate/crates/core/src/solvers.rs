//! Hypergraph and frugal colouring algorithms: greedy, randomized
//! resampling, exact branch-and-bound oracles, and verifiers.
//!
//! Determinism contract: `greedy_colour` and the exact solvers are fully
//! deterministic; `resample_colour` is a pure function of the hypergraph,
//! palette, seed, and budget. The generator behind the seed is ChaCha8
//! (`ChaCha8Rng::seed_from_u64`), a portable counter-based stream cipher, so
//! runs reproduce across platforms. Resampling always picks the monochromatic
//! edge that is minimal in canonical (lexicographic) edge order and redraws
//! its vertices in ascending vertex order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{Colouring, Hypergraph};

/// Default vertex cap for the exact solvers; override with the `_capped`
/// variants.
pub const DEFAULT_EXACT_CAP: usize = 14;

/// Outcome of a successful solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub colouring: Colouring,
    /// Number of colours offered (used colours may be fewer).
    pub palette_size: usize,
    /// Resampling steps taken; 0 for greedy.
    pub iterations: u64,
    /// RNG seed used, when the algorithm is randomized.
    pub seed: Option<u64>,
}

/// Edge indices through each vertex.
fn incidence(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut at = vec![Vec::new(); h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            at[v].push(i);
        }
    }
    at
}

/// Greedy proper colouring with `k` colours.
///
/// Vertices are processed by descending 2-degree, ties by id. A colour `c` is
/// forbidden at `v` iff some edge through `v` has all of its other vertices
/// already coloured `c`; the least permitted colour is taken. Fails with the
/// blocking vertex when all `k` colours are forbidden.
pub fn greedy_colour(h: &Hypergraph, k: usize) -> Result<SolverResult> {
    if k < 1 {
        return Err(Error::PaletteTooSmall { k, min: 1 });
    }
    let at = incidence(h);
    let mut two_degree = vec![0usize; h.n()];
    for e in h.edges().iter().filter(|e| e.len() == 2) {
        for v in e.iter() {
            two_degree[v] += 1;
        }
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(two_degree[v]), v));

    let mut colour: Vec<Option<usize>> = vec![None; h.n()];
    for &v in &order {
        let mut forbidden = vec![false; k];
        for &ei in &at[v] {
            let e = h.edges()[ei].as_slice();
            let mut others = e.iter().filter(|&&w| w != v).map(|&w| colour[w]);
            let first = match others.next() {
                Some(Some(c)) => c,
                _ => continue,
            };
            if others.all(|c| c == Some(first)) && first < k {
                forbidden[first] = true;
            }
        }
        match forbidden.iter().position(|&f| !f) {
            Some(c) => colour[v] = Some(c),
            None => return Err(Error::GreedyBlocked { vertex: v, k }),
        }
    }
    let colours: Vec<usize> = colour.into_iter().map(|c| c.expect("all assigned")).collect();
    Ok(SolverResult {
        colouring: Colouring::new(colours, k)?,
        palette_size: k,
        iterations: 0,
        seed: None,
    })
}

/// Moser–Tardos style resampling with `k >= 2` colours.
///
/// Starts from a uniform random colouring; while a monochromatic edge exists,
/// the canonically smallest one is picked and its vertices are redrawn
/// uniformly. Stops with the colouring on success, or with
/// [`Error::ResampleTimeout`] after `max_rounds` resamplings, which means
/// "not found within budget", not "impossible".
pub fn resample_colour(h: &Hypergraph, k: usize, seed: u64, max_rounds: u64) -> Result<SolverResult> {
    if k < 2 {
        return Err(Error::PaletteTooSmall { k, min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colours: Vec<usize> = (0..h.n()).map(|_| rng.random_range(0..k)).collect();
    let mut rounds = 0u64;
    loop {
        let mono = h.edges().iter().position(|e| {
            let mut it = e.iter();
            let first = colours[it.next().expect("edges are non-empty")];
            it.all(|v| colours[v] == first)
        });
        let Some(ei) = mono else {
            return Ok(SolverResult {
                colouring: Colouring::new(colours, k)?,
                palette_size: k,
                iterations: rounds,
                seed: Some(seed),
            });
        };
        if rounds == max_rounds {
            return Err(Error::ResampleTimeout { rounds });
        }
        for v in h.edges()[ei].iter() {
            colours[v] = rng.random_range(0..k);
        }
        rounds += 1;
    }
}

/// Exact hypergraph chromatic number with the default vertex cap.
pub fn exact_hypergraph_chromatic(h: &Hypergraph) -> Result<usize> {
    exact_hypergraph_chromatic_capped(h, DEFAULT_EXACT_CAP)
}

/// Exact hypergraph chromatic number, refusing instances above `cap`
/// vertices. Branch and bound over vertices in descending-degree order, with
/// colour classes introduced in first-use order and branches pruned once they
/// cannot beat the incumbent.
pub fn exact_hypergraph_chromatic_capped(h: &Hypergraph, cap: usize) -> Result<usize> {
    Ok(exact_hypergraph_colouring_capped(h, cap)?.0)
}

/// Exact chromatic number together with a witness colouring.
pub fn exact_hypergraph_colouring_capped(h: &Hypergraph, cap: usize) -> Result<(usize, Colouring)> {
    if h.n() > cap {
        return Err(Error::CapExceeded { size: h.n(), cap });
    }
    if h.n() == 0 {
        return Ok((0, Colouring::new(vec![], 0)?));
    }
    if h.edge_count() == 0 {
        return Ok((1, Colouring::new(vec![0; h.n()], 1)?));
    }
    let at = incidence(h);
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(at[v].len()), v));

    // incumbent from the always-succeeding greedy palette
    let max_incident = at.iter().map(Vec::len).max().unwrap_or(0);
    let greedy = greedy_colour(h, max_incident + 1)?;
    let mut incumbent = greedy
        .colouring
        .colours()
        .iter()
        .copied()
        .collect::<std::collections::HashSet<_>>()
        .len();
    let mut best: Vec<usize> = greedy.colouring.colours().to_vec();

    let mut colour: Vec<Option<usize>> = vec![None; h.n()];
    search_hyper(
        h,
        &at,
        &order,
        0,
        0,
        &mut colour,
        &mut incumbent,
        &mut best,
    );
    let colouring = Colouring::new(best, incumbent)?;
    Ok((incumbent, colouring))
}

#[allow(clippy::too_many_arguments)]
fn search_hyper(
    h: &Hypergraph,
    at: &[Vec<usize>],
    order: &[usize],
    pos: usize,
    used: usize,
    colour: &mut Vec<Option<usize>>,
    incumbent: &mut usize,
    best: &mut Vec<usize>,
) {
    if pos == order.len() {
        if used < *incumbent {
            *incumbent = used;
            *best = colour.iter().map(|c| c.expect("complete")).collect();
        }
        return;
    }
    if used >= *incumbent {
        return;
    }
    let v = order[pos];
    // existing classes first, then one fresh colour if it can still improve
    let limit = if used + 1 < *incumbent { used + 1 } else { used };
    for c in 0..limit {
        if completes_monochromatic(h, at, colour, v, c) {
            continue;
        }
        colour[v] = Some(c);
        let next_used = used.max(c + 1);
        search_hyper(h, at, order, pos + 1, next_used, colour, incumbent, best);
        colour[v] = None;
    }
}

/// Would assigning colour `c` to `v` make some edge through `v` fully
/// monochromatic?
fn completes_monochromatic(
    h: &Hypergraph,
    at: &[Vec<usize>],
    colour: &[Option<usize>],
    v: usize,
    c: usize,
) -> bool {
    at[v].iter().any(|&ei| {
        h.edges()[ei]
            .iter()
            .filter(|&w| w != v)
            .all(|w| colour[w] == Some(c))
    })
}

/// Exact β-frugal chromatic number with the default vertex cap.
pub fn exact_frugal_chromatic(g: &Graph, beta: usize) -> Result<usize> {
    exact_frugal_chromatic_capped(g, beta, DEFAULT_EXACT_CAP)
}

/// Exact β-frugal chromatic number, refusing instances above `cap` vertices.
pub fn exact_frugal_chromatic_capped(g: &Graph, beta: usize, cap: usize) -> Result<usize> {
    Ok(exact_frugal_colouring_capped(g, beta, cap)?.0)
}

/// Exact β-frugal chromatic number together with a witness colouring.
pub fn exact_frugal_colouring_capped(
    g: &Graph,
    beta: usize,
    cap: usize,
) -> Result<(usize, Colouring)> {
    if beta < 1 {
        return Err(Error::InvalidParameter {
            name: "beta",
            requirement: "beta >= 1",
        });
    }
    if g.n() > cap {
        return Err(Error::CapExceeded { size: g.n(), cap });
    }
    if g.n() == 0 {
        return Ok((0, Colouring::new(vec![], 0)?));
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // distinct colours are always proper and beta-frugal
    let mut incumbent = g.n();
    let mut best: Vec<usize> = (0..g.n()).collect();

    let mut colour: Vec<Option<usize>> = vec![None; g.n()];
    // counts[w][c]: coloured neighbours of w with colour c
    let mut counts = vec![vec![0usize; g.n()]; g.n()];
    search_frugal(
        g,
        beta,
        &order,
        0,
        0,
        &mut colour,
        &mut counts,
        &mut incumbent,
        &mut best,
    );
    let colouring = Colouring::new(best, incumbent.max(1))?;
    Ok((incumbent, colouring))
}

#[allow(clippy::too_many_arguments)]
fn search_frugal(
    g: &Graph,
    beta: usize,
    order: &[usize],
    pos: usize,
    used: usize,
    colour: &mut Vec<Option<usize>>,
    counts: &mut Vec<Vec<usize>>,
    incumbent: &mut usize,
    best: &mut Vec<usize>,
) {
    if pos == order.len() {
        if used < *incumbent {
            *incumbent = used;
            *best = colour.iter().map(|c| c.expect("complete")).collect();
        }
        return;
    }
    if used >= *incumbent {
        return;
    }
    let v = order[pos];
    let limit = if used + 1 < *incumbent { used + 1 } else { used };
    'colours: for c in 0..limit {
        // properness: no neighbour of v already has colour c
        if counts[v][c] > 0 {
            continue;
        }
        // frugality: v joins N(w) for every neighbour w
        for &w in g.neighbours(v) {
            if counts[w][c] >= beta {
                continue 'colours;
            }
        }
        colour[v] = Some(c);
        for &w in g.neighbours(v) {
            counts[w][c] += 1;
        }
        let next_used = used.max(c + 1);
        search_frugal(
            g, beta, order, pos + 1, next_used, colour, counts, incumbent, best,
        );
        for &w in g.neighbours(v) {
            counts[w][c] -= 1;
        }
        colour[v] = None;
    }
}

/// Result of a frugality check, carrying a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrugalVerdict {
    Frugal,
    /// A monochromatic edge.
    Improper { u: usize, v: usize },
    /// A colour appearing more than β times in a neighbourhood.
    TooFrequent {
        vertex: usize,
        colour: usize,
        count: usize,
    },
}

impl FrugalVerdict {
    pub fn is_frugal(&self) -> bool {
        matches!(self, FrugalVerdict::Frugal)
    }
}

impl std::fmt::Display for FrugalVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FrugalVerdict::Frugal => write!(f, "frugal"),
            FrugalVerdict::Improper { u, v } => {
                write!(f, "monochromatic edge {u}-{v}")
            }
            FrugalVerdict::TooFrequent {
                vertex,
                colour,
                count,
            } => write!(
                f,
                "colour {colour} appears {count} times in the neighbourhood of {vertex}"
            ),
        }
    }
}

/// Checks that `c` is proper on `g` and that no colour appears more than
/// `beta` times in any neighbourhood.
pub fn verify_frugal(g: &Graph, c: &Colouring, beta: usize) -> Result<FrugalVerdict> {
    if c.len() != g.n() {
        return Err(Error::ColouringSize {
            got: c.len(),
            want: g.n(),
        });
    }
    for (u, v) in g.edges() {
        if c.colour(u) == c.colour(v) {
            return Ok(FrugalVerdict::Improper { u, v });
        }
    }
    for v in 0..g.n() {
        let mut counts = vec![0usize; c.k().max(1)];
        for &w in g.neighbours(v) {
            counts[c.colour(w)] += 1;
        }
        for (colour, &count) in counts.iter().enumerate() {
            if count > beta {
                return Ok(FrugalVerdict::TooFrequent {
                    vertex: v,
                    colour,
                    count,
                });
            }
        }
    }
    Ok(FrugalVerdict::Frugal)
}

/// Checks that the proper colouring `c` leaves no subgraph copy of the tree
/// `pattern` on exactly 2 colours.
///
/// Supports any tree pattern with at least 2 edges; the star K_{1,β+1}
/// recovers β-frugality and P_4 recovers star colouring. Since `c` is proper
/// and the pattern is connected with an edge, a copy on at most 2 colours
/// uses exactly 2, so the search scans each pair of used colours and looks
/// for an embedding inside the vertices of those two colours.
pub fn verify_avoiding(g: &Graph, c: &Colouring, pattern: &Graph) -> Result<bool> {
    if !is_tree(pattern) {
        return Err(Error::PatternNotTree);
    }
    if pattern.m() < 2 {
        return Err(Error::InvalidParameter {
            name: "pattern",
            requirement: "at least 2 edges",
        });
    }
    if c.len() != g.n() {
        return Err(Error::ColouringSize {
            got: c.len(),
            want: g.n(),
        });
    }
    for (u, v) in g.edges() {
        if c.colour(u) == c.colour(v) {
            return Err(Error::ImproperColouring { u, v });
        }
    }
    let mut used: Vec<usize> = c.colours().to_vec();
    used.sort_unstable();
    used.dedup();
    for (i, &a) in used.iter().enumerate() {
        for &b in &used[i + 1..] {
            let allowed = |v: usize| c.colour(v) == a || c.colour(v) == b;
            if embeds_tree(g, pattern, &allowed) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn is_tree(t: &Graph) -> bool {
    if t.n() == 0 || t.m() != t.n() - 1 {
        return false;
    }
    // connectivity by BFS from 0
    let mut seen = vec![false; t.n()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &v in t.neighbours(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                stack.push(v);
            }
        }
    }
    reached == t.n()
}

/// Backtracking search for an injective embedding of `tree` into the
/// subgraph of `host` induced on `allowed` vertices, with tree edges mapped
/// to host edges.
fn embeds_tree(host: &Graph, tree: &Graph, allowed: &dyn Fn(usize) -> bool) -> bool {
    // BFS order rooted at a maximum-degree tree vertex: every later vertex
    // has its parent placed already
    let root = (0..tree.n()).max_by_key(|&v| tree.degree(v)).unwrap_or(0);
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; tree.n()];
    let mut seen = vec![false; tree.n()];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in tree.neighbours(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut image = vec![usize::MAX; tree.n()];
    let mut used = vec![false; host.n()];
    place(host, tree, allowed, &order, &parent, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn place(
    host: &Graph,
    tree: &Graph,
    allowed: &dyn Fn(usize) -> bool,
    order: &[usize],
    parent: &[usize],
    pos: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let t = order[pos];
    let candidates: Vec<usize> = if parent[t] == usize::MAX {
        (0..host.n()).filter(|&v| allowed(v)).collect()
    } else {
        host.neighbours(image[parent[t]])
            .iter()
            .copied()
            .filter(|&v| allowed(v))
            .collect()
    };
    for v in candidates {
        if used[v] || host.degree(v) < tree.degree(t) {
            continue;
        }
        image[t] = v;
        used[v] = true;
        if place(host, tree, allowed, order, parent, pos + 1, image, used) {
            return true;
        }
        used[v] = false;
        image[t] = usize::MAX;
    }
    false
}
