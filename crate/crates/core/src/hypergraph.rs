//! Rank-r hypergraphs with the ℓ-degree, (s,ℓ)-codegree, and properness
//! queries the certificate checker and the solvers need.
//!
//! Edges are [`VertexSet`]s of size at least 2, stored sorted in canonical
//! (lexicographic) order with duplicates merged: the reductions can generate
//! the same (β+1)-set from several common neighbours, and what matters is the
//! set, not its multiplicity. Values are immutable after construction.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Hypergraph on `n` vertices. Each edge must have at least 2 distinct
    /// vertices, all below `n`; repeated edges are merged silently.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for e in &edges {
            if e.len() < 2 {
                return Err(Error::HyperedgeTooSmall { len: e.len() });
            }
            if let Some(v) = e.max() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { n, edges })
    }

    /// The 2-uniform hypergraph with the same edges as `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g
            .edges()
            .map(|(u, v)| VertexSet::new(vec![u, v]))
            .collect();
        Hypergraph::new(g.n(), edges).expect("graph edges are valid hyperedges")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Rank: the maximum edge size. Undefined (an error) when edgeless.
    pub fn rank(&self) -> Result<usize> {
        self.edges
            .iter()
            .map(VertexSet::len)
            .max()
            .ok_or(Error::RankUndefined)
    }

    /// Maximum ℓ-degree: the largest number of ℓ-edges through one vertex.
    pub fn max_ell_degree(&self, ell: usize) -> Result<usize> {
        let rank = self.rank()?;
        if ell < 2 || ell > rank {
            return Err(Error::EllOutOfRange { ell, rank });
        }
        let mut count = vec![0usize; self.n];
        for e in self.edges.iter().filter(|e| e.len() == ell) {
            for v in e.iter() {
                count[v] += 1;
            }
        }
        Ok(count.into_iter().max().unwrap_or(0))
    }

    /// Maximum (s,ℓ)-codegree: the largest number of ℓ-edges containing a
    /// common s-set. Computed by scanning the s-subsets of each ℓ-edge, never
    /// by enumerating the s-subsets of the whole vertex set.
    pub fn max_codegree(&self, s: usize, ell: usize) -> Result<usize> {
        let rank = self.rank()?;
        if !(1 <= s && s < ell && ell <= rank) {
            return Err(Error::CodegreeParams { s, ell, rank });
        }
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for e in self.edges.iter().filter(|e| e.len() == ell) {
            for sub in e.iter().combinations(s) {
                *counts.entry(sub).or_insert(0) += 1;
            }
        }
        Ok(counts.into_values().max().unwrap_or(0))
    }

    /// Δ_*: the maximum over ℓ of Δ_ℓ^{1/(ℓ-1)}, the effective degree scale
    /// of the certificate conditions.
    pub fn delta_star(&self) -> Result<f64> {
        let rank = self.rank()?;
        let mut best = 0.0f64;
        for ell in 2..=rank {
            let d = self.max_ell_degree(ell)? as f64;
            let scaled = d.powf(1.0 / (ell - 1) as f64);
            if scaled > best {
                best = scaled;
            }
        }
        Ok(best)
    }

    /// True iff no edge is monochromatic under the (total) colouring.
    pub fn is_proper(&self, c: &Colouring) -> Result<bool> {
        if c.len() != self.n {
            return Err(Error::ColouringSize {
                got: c.len(),
                want: self.n,
            });
        }
        Ok(self.first_monochromatic(c).is_none())
    }

    /// The first monochromatic edge in canonical order, if any.
    pub(crate) fn first_monochromatic(&self, c: &Colouring) -> Option<usize> {
        self.edges.iter().position(|e| {
            let mut it = e.iter();
            let first = c.colour(it.next().expect("edges are non-empty"));
            it.all(|v| c.colour(v) == first)
        })
    }

    /// Parses the hypergraph text format: first line `n m`, then `m` lines
    /// each listing one edge's vertices in ascending order.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<VertexSet> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        what: format!("bad integer {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            match header {
                None => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            what: "header must be `n m`".into(),
                        });
                    }
                    header = Some((fields[0], fields[1]));
                }
                Some((_, m)) => {
                    if !fields.windows(2).all(|w| w[0] < w[1]) {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            what: "edge vertices must be strictly ascending".into(),
                        });
                    }
                    edges.push(VertexSet::new(fields));
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
        Hypergraph::new(n, edges)
    }

    /// Canonical text form; round-trips through [`Hypergraph::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Total colouring of `0..len` vertices with palette `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<usize>,
    k: usize,
}

impl Colouring {
    pub fn new(colours: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&c) = colours.iter().find(|&&c| c >= k) {
            return Err(Error::ColourOutOfRange { colour: c, k });
        }
        Ok(Colouring { colours, k })
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Palette size (used colours may be fewer).
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices per colour class, indexed by colour.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colours {
            sizes[c] += 1;
        }
        sizes
    }

    /// Parses the colouring file format: one line `v c` per vertex, every
    /// vertex 0..n present exactly once. The palette is the smallest one
    /// containing all used colours.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        what: format!("bad integer {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    what: "expected `v c`".into(),
                });
            }
            pairs.push((fields[0], fields[1]));
        }
        pairs.sort_unstable();
        let n = pairs.len();
        let mut colours = vec![0; n];
        for (i, &(v, c)) in pairs.iter().enumerate() {
            if v != i {
                return Err(Error::Parse {
                    line: 0,
                    what: format!("vertices must cover 0..{n} exactly once, problem at {v}"),
                });
            }
            colours[v] = c;
        }
        let k = colours.iter().max().map_or(0, |&c| c + 1);
        Colouring::new(colours, k.max(1))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, &c) in self.colours.iter().enumerate() {
            out.push_str(&format!("{v} {c}\n"));
        }
        out
    }
}
