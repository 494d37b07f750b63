use thiserror::Error;

use crate::recognition::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),

    #[error("search budget of {budget} steps exhausted before a conclusive answer")]
    Inconclusive { budget: u64 },

    #[error("graph is not (dart, odd hole)-free: contains {}", .0.kind)]
    NotInClass(Witness),

    #[error("no odd antihole on at least {min_len} vertices found in a non-perfect graph")]
    NoOddAntihole { min_len: usize },

    #[error("graph has a stable set of size three: {:?}", .0.vertices)]
    CoTriangle(Witness),

    #[error(
        "internal inconsistency: exact coloring used {chi} colors but the clique number is {omega}"
    )]
    ChiOmegaMismatch { chi: usize, omega: usize },

    #[error("{what} limited to {cap} vertices, graph has {n}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("no perfect part meeting every maximum clique was found within the search budget")]
    DivisionNotFound,

    #[error("{0}")]
    InvalidInput(String),

    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
