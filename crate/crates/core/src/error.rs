use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed scalar `{0}`")]
    ScalarSyntax(String),

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("invalid group type `{input}` at position {position}: {reason}")]
    InvalidDescriptor {
        input: String,
        position: usize,
        reason: String,
    },

    #[error("invalid word `{input}` at position {position}: {reason}")]
    InvalidWord {
        input: String,
        position: usize,
        reason: String,
    },

    #[error("{what} index {index} out of range (must be < {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("elements or subgroups belong to different groups")]
    MixedGroups,

    #[error("type {0} has no linear model (dihedral combinatorial model only)")]
    NoLinearModel(String),

    #[error("group too large for exhaustive mode (more than {cap} elements)")]
    GroupTooLarge { cap: usize },

    #[error("subgroup too large for membership enumeration (more than {cap} elements) and not parabolic")]
    SubgroupTooLarge { cap: usize },

    #[error("enumeration of reduced expressions truncated at cap {cap}")]
    Truncated { cap: usize },

    #[error("not a parabolic quasi-Coxeter element")]
    NotParabolicQuasiCoxeter,

    #[error("element is not quasi-Coxeter in the given subgroup")]
    NotQuasiCoxeterInSubgroup,

    #[error("wrong ambient type: expected {expected}, got {actual}")]
    WrongType { expected: String, actual: String },

    #[error("malformed cycle form `{input}`: {reason}")]
    CycleSyntax { input: String, reason: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
