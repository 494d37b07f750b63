//! Structure and optimization for (dart, odd hole)-free graphs.
//!
//! A dart is the five-vertex graph with edges ab, bc, bd, be, cd, de; an odd
//! hole is a chordless cycle of odd length at least five. Graphs avoiding
//! both as induced subgraphs decompose into perfect pieces, pieces without a
//! stable set of size three, joins and co-joins ([`decomposition`]). That
//! decomposition drives exact minimum coloring ([`coloring`]) and perfect
//! divisions ([`divisibility`]); maximum stable sets come from vertex
//! non-neighbourhoods ([`stableset`]). Every algorithm has an independent
//! brute-force counterpart in [`oracles`] for small graphs.

pub mod cli;
pub mod coloring;
pub mod decomposition;
pub mod divisibility;
pub mod error;
pub mod families;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod options;
pub mod oracles;
pub mod recognition;
pub mod stableset;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use options::Options;
pub use recognition::{SearchBudget, Witness, WitnessKind};
pub use vertex_set::VertexSet;
