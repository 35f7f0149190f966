use thiserror::Error;

use crate::graph::VERTEX_CAP;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph (or a construction that would produce one) exceeds the vertex capacity.
    #[error("graph order {0} exceeds the capacity of {VERTEX_CAP} vertices")]
    TooManyVertices(usize),

    /// A vertex index is out of range for the graph it was used with.
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    /// An edge was expected to be present but is not.
    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),

    /// An edge joins a vertex to itself.
    #[error("loop at vertex {0}; only simple graphs are supported")]
    LoopEdge(usize),

    /// Family parameters are outside the family's domain.
    #[error("invalid family parameters: {0}")]
    BadParameters(String),

    /// A family/graph specification string could not be parsed.
    #[error("cannot parse spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },

    /// A graph6 string is malformed.
    #[error("invalid graph6 {text:?}: {reason}")]
    BadGraph6 { text: String, reason: String },

    /// The dedeck of an edgeless graph was requested.
    #[error("graph has no edges, so it has no dedeck")]
    EmptyDedeck,

    /// Edge classification was asked on a graph that is not a tree plus isolated vertices.
    #[error("edge classification requires a tree (plus isolated vertices)")]
    NotATree,

    /// `determines` was called with a multiset that is not part of the target's dedeck.
    #[error("the given multiset is not a sub-multiset of the target's dedeck")]
    NotSubMultiset,

    /// The full dedeck fails to determine the graph, so no recon number exists.
    #[error("graph is not dedeck-reconstructible: {confuser} has the same dedeck")]
    NotReconstructible {
        /// Canonical graph6 key of a graph with an identical dedeck.
        confuser: String,
    },

    /// A discrepancy certificate failed re-validation.
    #[error("certificate does not check out: {0}")]
    CertificateInvalid(String),
}
