//! Frugal graph colouring toolkit.
//!
//! A proper colouring is β-frugal when no colour appears more than β times in
//! any vertex's neighbourhood. This crate turns that constraint into proper
//! hypergraph colouring via auxiliary reductions and ships everything needed
//! to experiment with them at desk scale:
//!
//! * [`graph`]: simple graphs with girth and forbidden-subgraph queries;
//! * [`hypergraph`]: rank-r hypergraphs with ℓ-degree and codegree queries;
//! * [`reduction`]: the basic, even-cycle, and biclique reductions plus the
//!   codegree/triangle certificate checker;
//! * [`solvers`]: greedy, resampling, and exact colouring algorithms with
//!   frugality verifiers;
//! * [`generators`]: grid graphs, projective-geometry incidence graphs,
//!   seeded G(n,p), and degree/girth pruning;
//! * [`bounds`]: closed-form extremal bounds and tail-inequality checkers.

pub mod bounds;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod reduction;
pub mod solvers;

pub use bounds::BoundReport;
pub use error::{Error, Result};
pub use generators::{GnpSpec, PruneReport};
pub use graph::{Graph, VertexSet};
pub use hypergraph::{Colouring, Hypergraph};
pub use reduction::{Certificate, ReductionParams};
pub use solvers::{FrugalVerdict, SolverResult};
