use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("continued fraction guarantees comparisons only for |a| < {guarantee}, got {needed}")]
    DepthExceeded { guarantee: String, needed: String },
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("staircases have different Newton polygons")]
    HullMismatch,
    #[error("evaluation of the zero staircase")]
    ZeroElement,
    #[error("pair cannot be recovered from the presentation: {0}")]
    NotRecoverable(String),
    #[error("slope product is not representable: {0}")]
    UnsupportedSlopeProduct(String),
    #[error("composition with an already deformed correspondence is not supported")]
    ChainedDeformation,
    #[error("empty index set")]
    EmptySet,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid supernatural: {0}")]
    InvalidSupernatural(String),
    #[error("{value} is not in the subgroup {owner}")]
    NotInSubgroup { value: String, owner: String },
    #[error("elements belong to different subgroups")]
    OwnerMismatch,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("type error: {0}")]
    Type(String),
    #[error("support [{lo}, {hi}] is not contained in (1, inf)")]
    SupportViolation { lo: f64, hi: f64 },
    #[error("prime bound {pmax} does not cover support up to {hi}")]
    PrimeBoundTooSmall { pmax: u64, hi: f64 },
    #[error("series diverges: {0}")]
    Divergence(String),
    #[error("invalid zero table: {0}")]
    InvalidZeros(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}
