//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The matrix admits no positive integer symmetrizer.
    #[error("matrix is not skew-symmetrizable")]
    NotSkewSymmetrizable,

    /// A vertex or direction index is outside `0..rank`.
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// Two objects that must share a rank or variable count do not.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// An operation that enumerates permutations refuses ranks this large.
    #[error("rank {rank} exceeds the supported maximum {max} for this operation")]
    RankTooLarge { rank: usize, max: usize },

    /// Exact division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// Substitution where one of the images is the zero polynomial.
    #[error("substitution image is zero")]
    ZeroImage,

    /// The zero polynomial has no normal form.
    #[error("the zero polynomial has no normal form")]
    ZeroPolynomial,

    /// A seed mutation produced a non-Laurent quotient. This indicates a bug
    /// or an input that is not a valid seed; valid seeds never trigger it.
    #[error("exchange quotient is not a Laurent polynomial")]
    LaurentPhenomenonViolation,

    /// A verification that needs the whole mutation class was handed a
    /// truncated exploration.
    #[error("mutation class graph is incomplete")]
    IncompleteGraph,

    /// The mutation class did not close within the configured limits.
    #[error("mutation class is infinite or exceeded exploration limits")]
    InfiniteOrTruncatedClass,

    /// Structural problems in a quiver: loops, 2-cycles, non-positive
    /// valuations, or a symmetrizer that does not satisfy d_i v_ij = v_ji d_j.
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    /// Malformed input text (JSON, mutation words, CLI arguments).
    #[error("parse error: {0}")]
    Parse(String),
}
