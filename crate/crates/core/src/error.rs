//! Crate-wide error type. Precondition violations that the contracts promise
//! to report come back as [`Error`] values rather than panics.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {u} {v} not in canonical form (need u < v)")]
    EdgeNotCanonical { u: usize, v: usize },

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("hyperedge needs at least 2 distinct vertices, got {len}")]
    HyperedgeTooSmall { len: usize },

    #[error("rank is undefined on an edgeless hypergraph")]
    RankUndefined,

    #[error("ell={ell} outside valid range 2..=rank where rank={rank}")]
    EllOutOfRange { ell: usize, rank: usize },

    #[error("codegree parameters need 1 <= s < ell <= rank, got s={s}, ell={ell}, rank={rank}")]
    CodegreeParams { s: usize, ell: usize, rank: usize },

    #[error("colouring has {got} entries, instance has {want} vertices")]
    ColouringSize { got: usize, want: usize },

    #[error("colour {colour} outside palette 0..{k}")]
    ColourOutOfRange { colour: usize, k: usize },

    #[error("parameter {name} out of range: {requirement}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
    },

    #[error("instance size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("{q} is not prime")]
    NotPrime { q: usize },

    #[error("palette of size {k} too small, need at least {min}")]
    PaletteTooSmall { k: usize, min: usize },

    #[error("greedy colouring blocked at vertex {vertex}: all {k} colours forbidden")]
    GreedyBlocked { vertex: usize, k: usize },

    #[error("resampling budget exhausted after {rounds} rounds")]
    ResampleTimeout { rounds: u64 },

    #[error("pattern is not a tree")]
    PatternNotTree,

    #[error("colouring is not proper: edge {u}-{v} is monochromatic")]
    ImproperColouring { u: usize, v: usize },

    #[error("certificate needs f > 1, got f={f}")]
    FNotAboveOne { f: f64 },

    #[error("certificate needs rank >= 3, got rank={rank}")]
    CertificateRank { rank: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("parse error on line {line}: {what}")]
    Parse { line: usize, what: String },
}
