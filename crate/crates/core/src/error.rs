//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
///
/// Variants are grouped by the module that raises them; every fallible public
/// operation returns `Result<T, Error>`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // ---- field ----
    /// The requested characteristic is neither 0 nor a prime.
    #[error("characteristic {0} is neither 0 nor prime")]
    NonPrimeCharacteristic(u64),
    /// The supplied extension-field modulus factors over the prime field.
    #[error("modulus polynomial is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    /// The supplied modulus does not have the declared degree.
    #[error("modulus degree {got} does not match declared degree {want}")]
    ModulusDegreeMismatch { want: usize, got: usize },
    /// Division by the zero element of a field.
    #[error("division by zero")]
    DivisionByZero,
    /// Two operands belong to different fields.
    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    /// An operation needs to enumerate the elements of an infinite field.
    #[error("cannot enumerate the elements of an infinite field")]
    InfiniteEnumeration,

    // ---- shapes ----
    /// A partition does not fit inside the requested d x s rectangle.
    #[error("partition does not fit in the {d} x {s} rectangle")]
    DoesNotFitRectangle { d: usize, s: usize },
    /// A tableau expected to be column standard is not.
    #[error("tableau is not column standard")]
    NotColumnStandard,
    /// A tableau entry lies outside the declared alphabet {1..n}.
    #[error("tableau entry {entry} outside the range 1..={max}")]
    EntryOutOfRange { entry: usize, max: usize },

    // ---- repmod ----
    /// A 2x2 group element is singular (or not invertible in the scalar ring).
    #[error("group element is singular or not invertible over its scalars")]
    SingularMatrix,
    /// The lowering-operator action is undefined for this constructor.
    #[error("operation unsupported for constructor {0}")]
    UnsupportedConstructor(String),

    // ---- isomaps ----
    /// An exterior-power rank is outside 0..=dim.
    #[error("rank {r} out of range 0..={d}")]
    RankOutOfRange { r: usize, d: usize },
    /// A duality-isomorphism kind does not accept the given parameters.
    #[error("map kind mismatch: {0}")]
    KindMismatch(String),

    // ---- weights ----
    /// The input vector is not a weight vector.
    #[error("vector is not a weight vector")]
    NotAWeightVector,
    /// Two defect sets with different weight modes were combined.
    #[error("defect sets have different weight modes")]
    ModeMismatch,
    /// A rep has no unique highest weight basis vector.
    #[error("no unique highest weight vector")]
    NoUniqueHighestWeight,

    // ---- certify / cli ----
    /// Theorem-runner parameters outside the documented desk-scale range.
    #[error("parameters out of supported range: {0}")]
    ParamsOutOfSupportedRange(String),
    /// A theorem's field-size (or similar) hypothesis fails for the inputs.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    /// A specification string failed to parse.
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },

    /// Mixed-rep operands (vector/map applied to the wrong rep).
    #[error("representation mismatch: {0}")]
    RepMismatch(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
