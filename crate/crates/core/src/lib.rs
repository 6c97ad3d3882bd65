//! Edge ideals of graphs: graded Betti numbers through Hochster's formula,
//! regularity and projective dimension, Alexander duality, linear quotients,
//! shellability and vertex decomposability certificates, and the graph
//! invariants that bound the regularity.

pub mod analysis;
pub mod betti;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod parse;
pub mod simplicial;
pub mod structure;

pub use betti::{BettiSource, BettiTable};
pub use graph::{Graph, GraphError, VertexSet};
pub use homology::{FieldChoice, HomologyError};
pub use ideal::{IdealError, LinearQuotientCertificate, SquarefreeIdeal};
pub use simplicial::SimplicialComplex;
