use thiserror::Error;

/// Errors shared across the whole library.
///
/// Domain errors carry enough context to be actionable; `Internal` marks
/// invariant violations that indicate a bug rather than an input property.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A float pivot fell inside the undecidable band around the tolerance.
    /// The caller must adjust epsilon or switch to an exact backend.
    #[error("ambiguous rank: pivot magnitude {pivot:.3e} lies in the tolerance band [{low:.3e}, {high:.3e}]")]
    AmbiguousRank { pivot: f64, low: f64, high: f64 },

    #[error("operation requires a nonempty subspace")]
    EmptySubspace,

    #[error("square root does not exist in the scalar field")]
    NoFieldSqrt,

    #[error("matrix is not special orthogonal (orthogonal with determinant +1)")]
    NotSpecialOrthogonal,

    #[error("generator is not orthogonal within tolerance")]
    NotOrthogonal,

    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),

    #[error("{0} does not divide the group order {1}")]
    PNotDividing(u64, usize),

    #[error("subgroup order {0} is not a power of two")]
    NotA2Group(usize),

    #[error("isomorphism search supports orders up to {limit}, got {order}")]
    TooLarge { order: usize, limit: usize },

    #[error("element set violates the classification of finite subgroups of the unit quaternions")]
    Unclassifiable,

    #[error("one subspace contains the other")]
    ContainedPair,

    #[error("subgroup does not leave the subspace invariant")]
    NotInvariant,

    #[error("degenerate spherical-triangle configuration")]
    DegenerateConfig,

    #[error("group is not generated by its pseudoreflections")]
    NotPseudoreflectionGroup,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
