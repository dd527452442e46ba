use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A degenerate point `x = y` was used where distinct endpoints are required.
    #[error("degenerate point: x = y (pass the degenerate opt-in to allow this)")]
    DegeneratePoint,

    /// Operands live in cubes of different dimension.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),

    /// The points handed to a grid construction do not lie on one line.
    #[error("points are not on a common line")]
    NotOnCommonLine,

    /// A brute-force scan was asked to run outside its supported range.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A witness has the wrong shape (level sizes, duplicate points, ...).
    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    /// Faithful extraction hit a violated inequality; the message names it
    /// and quotes both sides as exact rationals.
    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),

    /// Greedy extraction exhausted its search space without a witness.
    #[error("no witness found")]
    NoWitness,

    /// A coloring is not total on its declared domain.
    #[error("coloring is not total on its domain: {0}")]
    DegenerateColoring(String),

    /// `[N]` is too small to host even one encoded coordinate.
    #[error("domain too small: {0}")]
    DomainTooSmall(String),

    /// No ordering of three decoded points forms a partial Hales-Jewett
    /// line. Indicates a bug, not a data condition.
    #[error("no ordering of the decoded points forms a partial line")]
    OrderingImpossible,

    /// An identity that holds by construction failed at runtime.
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),

    /// A search ran out of its node or time budget.
    #[error("budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    /// Malformed input (files, flags, digit strings).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
