//! Zero forcing on 2-connected outerplanar graphs.
//!
//! * [`graph`], [`graph6`], [`generate`]: representation, I/O and families.
//! * [`forcing`]: the colour-change rule, closure, exact `Z(G)` and `P(G)`.
//! * [`outerplanar`]: outer cycle, weak dual and foliage/trunk decomposition.
//! * [`bounds`]: leaf-count bounds, the constructive forcing strategy and a
//!   per-graph audit of the structural inequalities.

pub mod bounds;
pub mod fixtures;
pub mod forcing;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod outerplanar;

pub use forcing::{
    closure, is_forcing_set, path_cover_number, verify_certificate, zero_forcing_number, ColorSet, ForcingChronicle,
    ForcingError, PathPartition, ZfsCertificate,
};
pub use generate::{generate, GenerateError, GeneratorSpec};
pub use graph::{Graph, GraphError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use outerplanar::{check_outerplanar, Decomposition, OuterEmbedding, OuterplanarError, Structure};
