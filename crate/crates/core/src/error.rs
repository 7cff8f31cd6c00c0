use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    OutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integer overflow while computing {what}")]
    Overflow { what: &'static str },

    #[error("internal identity violated: {0}")]
    InternalIdentityViolation(String),

    #[error("composition needs at least one component")]
    EmptyComponentList,

    #[error("component {component}: anchors {v} and {w} must be distinct and non-adjacent")]
    AdjacentAnchors {
        component: usize,
        v: usize,
        w: usize,
    },

    #[error("component {component}: second anchor required")]
    MissingSecondAnchor { component: usize },

    #[error("component {component}: identification would create a parallel edge")]
    MergedMultiEdge { component: usize },

    #[error("formula needs at least {need} components, got {got}")]
    TooFewComponents { got: usize, need: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),
}
