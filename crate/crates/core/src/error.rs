use thiserror::Error;

/// Errors raised by the graph, cube and complex operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("disconnected: vertices {0} and {1} lie in different components")]
    Disconnected(usize, usize),

    #[error("disconnected: the graph is not connected")]
    NotConnected,

    #[error("not bipartite")]
    NotBipartite,

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("not a partial cube")]
    NotPartialCube,

    #[error("not a median graph")]
    NotMedian,

    #[error("coordinate {coordinate} out of range for isometric dimension {idim}")]
    CoordinateOutOfRange { coordinate: usize, idim: usize },

    #[error("crossing needs two distinct coordinates, got {0} twice")]
    SameCoordinate(usize),

    #[error("minor spec has length {got}, expected {expected}")]
    SpecLength { got: usize, expected: usize },

    #[error("empty minor: the restrictions leave no vertex")]
    EmptyMinor,

    #[error("too large: {what} is {size}, cap is {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("empty generating set")]
    EmptyGenerators,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element {element} out of range for ground set of size {ground}")]
    ElementOutOfRange { element: usize, ground: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("characterization conditions disagree on a median graph: {0}")]
    ConditionsDisagree(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
