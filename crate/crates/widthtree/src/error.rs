use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which side of a vertex a condition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Incoming,
    Outgoing,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Incoming => write!(f, "incoming"),
            Side::Outgoing => write!(f, "outgoing"),
        }
    }
}

/// Domain errors. Variant names are stable and surfaced verbatim by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotATree: {0}")]
    NotATree(String),
    #[error("BoundaryNotLeaf: vertex {0} is marked boundary but does not have degree 1")]
    BoundaryNotLeaf(String),
    #[error("UnknownVertex: {0}")]
    UnknownVertex(String),
    #[error("UnknownEdge: {0} -> {1}")]
    UnknownEdge(String, String),
    #[error("LabelBelowMinusOne: {item} carries label {label}")]
    LabelBelowMinusOne { item: String, label: i64 },
    #[error("MissingLabel: {0}")]
    MissingLabel(String),
    #[error("BoundaryMismatch: vertex {vertex} has label {vertex_label} but its edge has label {edge_label}")]
    BoundaryMismatch {
        vertex: String,
        vertex_label: i64,
        edge_label: i64,
    },
    #[error("CutViolation: vertex {vertex} fails the cut condition on its {side} side")]
    CutViolation { vertex: String, side: Side },
    #[error("NotALeaf: {0}")]
    NotALeaf(String),
    #[error("BoundaryLeaf: {0}")]
    BoundaryLeaf(String),
    #[error("HasBoundary: operation requires a tree without boundary vertices")]
    HasBoundary,
    #[error("NotCoherentPath")]
    NotCoherentPath,
    #[error("NotSlim")]
    NotSlim,
    #[error("NotPositive")]
    NotPositive,
    #[error("NotProductless")]
    NotProductless,
    #[error("LabelTooSmall: {item} carries label {label}, need at least {min}")]
    LabelTooSmall { item: String, label: i64, min: i64 },
    #[error("InvalidCut: {0}")]
    InvalidCut(String),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("NoValidCut")]
    NoValidCut,
    #[error("HostMismatch: {0}")]
    HostMismatch(String),
    #[error("InternalError: {0}")]
    InternalError(String),
    #[error("InfeasiblePod: {0}")]
    InfeasiblePod(String),
    #[error("OddPositivePunctures")]
    OddPositivePunctures,
    #[error("OpenBoundary")]
    OpenBoundary,
    #[error("Stuck: no sphere meets two distinct components")]
    Stuck,
    #[error("GuardExceeded: {0}")]
    GuardExceeded(String),
    #[error("BadParams: {0}")]
    BadParams(String),
    #[error("SyntaxError: {0}")]
    SyntaxError(String),
    #[error("SemanticError: {0}")]
    SemanticError(Box<Error>),
}
