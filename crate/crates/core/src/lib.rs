//! Kauffman states of oriented singular knot diagrams.
//!
//! The crate parses diagrams, traces their regions, enumerates generalized
//! Kauffman states with Alexander and Maslov gradings, and computes the
//! Alexander polynomial twice: as a state sum and by skein recursion over
//! singular vertices. For planar (all-singular) diagrams the bigraded
//! Floer ranks are read off the states directly.

pub mod alexander;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod faces;
pub mod floer;
pub mod laurent;
pub mod pruning;
pub mod states;
pub mod verify;

pub use alexander::{
    alexander_skein, alexander_state_sum, classical_skein_check, euler_hfa, euler_hfb,
    AlexanderReport, AlexanderResult, Method, SkeinBranch,
};
pub use diagram::{from_braid, parse_diagram, Diagram, EdgeLabel, ResolveMode, Vertex, VertexId, VertexKind};
pub use error::{Error, Result};
pub use faces::{compute_faces, Face, FaceSet, Quadrant, QuadrantPos};
pub use floer::{chain_table, hfb_planar, ChainTable, HomologyTable};
pub use laurent::{HalfLaurent, RenderStyle};
pub use pruning::{equivalence_classes, pruning_graph, Pruning};
pub use states::{
    count_states_oracle, enumerate_states, generator_table, BigradedTable, Corner, CornerWeights,
    KauffmanState,
};
