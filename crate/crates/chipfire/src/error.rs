use core::fmt;

/// Errors surfaced by graph construction and the divisor algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge joins a vertex to itself.
    LoopEdge { vertex: usize },
    /// A vertex index is outside the graph.
    OutOfRange { index: usize, limit: usize },
    /// The edge set does not connect every vertex.
    Disconnected,
    /// Divisor or function length does not match the vertex count.
    SizeMismatch { expected: usize, found: usize },
    /// The divisor is negative somewhere other than the chosen vertex.
    NegativeOutsideP { vertex: usize },
    /// Rank is -1, so no certificate of the requested kind exists.
    RankNegative,
    /// The operation is only defined for simple graphs.
    NotSimple,
    /// Materializing the set would enumerate past the supported window.
    WindowTooLarge { degree: i64, limit: i64 },
    /// Window computations on a multigraph need an explicit bound.
    BoundRequired,
    /// Generator list is empty.
    EmptyGenerators,
    /// Generators have gcd > 1 where a numerical semigroup is required.
    NotNumerical,
    /// Sequence is not nonincreasing.
    NotSorted,
    /// Sequence entry is zero where a positive value is required.
    ZeroEntry,
    /// Sequence is empty.
    EmptySequence,
    /// A window set does not contain 0.
    MissingZero,
    /// An internal consistency check failed; this indicates a bug.
    InternalInvariant(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
            Error::OutOfRange { index, limit } => {
                write!(f, "vertex index {index} out of range (limit {limit})")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "expected {expected} coefficients, found {found}")
            }
            Error::NegativeOutsideP { vertex } => {
                write!(f, "divisor is negative at vertex {vertex} away from the basepoint")
            }
            Error::RankNegative => write!(f, "divisor has rank -1"),
            Error::NotSimple => write!(f, "operation requires a simple graph"),
            Error::WindowTooLarge { degree, limit } => {
                write!(f, "degree {degree} exceeds the supported window (limit {limit})")
            }
            Error::BoundRequired => write!(f, "multigraph computation needs an explicit bound"),
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::NotNumerical => write!(f, "generators must have gcd 1"),
            Error::NotSorted => write!(f, "sequence must be nonincreasing"),
            Error::ZeroEntry => write!(f, "sequence entries must be positive"),
            Error::EmptySequence => write!(f, "sequence is empty"),
            Error::MissingZero => write!(f, "window set must contain 0"),
            Error::InternalInvariant(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
