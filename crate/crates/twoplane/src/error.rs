//! Crate-wide error type.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::VertexId;

/// Everything that can go wrong across the crate, in one enum so that
/// callers (and the CLI) can classify failures uniformly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The rotation system / outer markers do not describe a plane embedding.
    InvalidEmbedding(String),
    /// An operation referenced a vertex that is not in the graph.
    UnknownVertex(VertexId),
    /// A contraction was asked to contract a non-edge.
    NotAdjacent(VertexId, VertexId),
    /// A surgery produced a structure that no longer validates.
    EmbeddingBroken(String),
    /// The operation requires a connected graph.
    Disconnected,
    /// The weak dual of the given graph is not a tree.
    NotTree,
    /// A layer-2-only operation met a deeper graph.
    LayerTooDeep { depth: usize, max: usize },
    /// The input graph is not 2-outerplanar.
    NotTwoOuterplanar { depth: usize },
    /// A single face admitted no legal chord.
    NoLegalChord { face: Vec<VertexId> },
    /// Triangulation could not complete.
    AugmentationFailed(String),
    /// A reduction witness does not match the graph it is applied to.
    WitnessInvalid(String),
    /// A lifted partition stopped being a pair of forests.
    ReconstructionAcyclicityFailure,
    /// A step the theory says cannot fail did fail; always a bug.
    InternalInvariantViolation(String),
    /// The input violates a documented precondition.
    PreconditionViolated(String),
    /// A matched boundary edge has no incident face with a layer-1 corner.
    NoFaceWitness { x: VertexId, y: VertexId },
    /// No rim matching can cover these inner vertices: each has one boundary
    /// neighbor, and their coverage demands collide on a shared rim vertex.
    MatchingObstruction { vertices: Vec<VertexId> },
    /// The instance exceeds a brute-force size cap.
    TooLarge { n: usize, cap: usize },
    /// The requested random instance shape is unsatisfiable.
    InfeasibleSpec { n: usize, k: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidEmbedding(msg) => write!(f, "invalid embedding: {msg}"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::NotAdjacent(u, v) => write!(f, "vertices {u} and {v} are not adjacent"),
            Error::EmbeddingBroken(msg) => write!(f, "surgery broke the embedding: {msg}"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotTree => write!(f, "inner dual is not a tree"),
            Error::LayerTooDeep { depth, max } => {
                write!(f, "graph has {depth} layers, operation supports at most {max}")
            }
            Error::NotTwoOuterplanar { depth } => {
                write!(f, "graph has outerplanarity index {depth}, expected at most 2")
            }
            Error::NoLegalChord { face } => {
                write!(f, "no legal chord inside face [")?;
                for (i, v) in face.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
            Error::AugmentationFailed(msg) => write!(f, "triangulation failed: {msg}"),
            Error::WitnessInvalid(msg) => write!(f, "reduction witness invalid: {msg}"),
            Error::ReconstructionAcyclicityFailure => {
                write!(f, "reconstructed partition contains a cycle")
            }
            Error::InternalInvariantViolation(msg) => {
                write!(f, "internal invariant violation: {msg}")
            }
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            Error::NoFaceWitness { x, y } => {
                write!(f, "no face with a layer-1 corner is incident to edge {x}-{y}")
            }
            Error::MatchingObstruction { vertices } => {
                write!(f, "no rim matching can cover inner vertices [")?;
                for (i, v) in vertices.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
            Error::TooLarge { n, cap } => {
                write!(f, "instance has {n} vertices, brute-force cap is {cap}")
            }
            Error::InfeasibleSpec { n, k } => {
                write!(f, "no {k}-outerplanar instance on {n} vertices with nested rings")
            }
        }
    }
}

impl core::error::Error for Error {}
