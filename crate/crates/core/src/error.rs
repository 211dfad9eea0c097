//! Error type shared by every layer of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Degree cap reached while paths still survive the ideal closure.
    #[error("ideal is not admissible below degree {cap}: {surviving} paths of degree {cap} survive")]
    NotAdmissible { cap: usize, surviving: usize },

    /// Relation with non-parallel, too short, or length-inhomogeneous terms.
    #[error("malformed relation: {0}")]
    MalformedRelation(String),

    #[error("vertex set for a centraliser subalgebra must be nonempty")]
    EmptyVertexSet,

    #[error("unknown vertex: {0}")]
    UnknownVertex(String),

    /// Modules do not live over the same algebra (or the same side).
    #[error("algebra or side mismatch between modules")]
    AlgebraMismatch,

    /// No splitting idempotent found within the search budget.
    #[error("no splitting idempotent found within budget ({candidates} candidates) on a module of dim {dim}")]
    SplitFailure { dim: usize, candidates: usize },

    /// A resolution hit its cap before the requested Ext degree was reachable.
    #[error("resolution reached cap {cap} before degree {degree} with a nonzero tail")]
    ResolutionTooShort { degree: usize, cap: usize },

    /// Cross-check operation invoked outside its precondition.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The algebra has ν-dominant dimension zero, so no non-trivial
    /// associated self-injective algebra exists.
    #[error("nu-dominant dimension is zero; no associated self-injective algebra")]
    NuDomdimZero,

    #[error("algebra is not gendo-symmetric")]
    NotGendoSymmetric,

    /// Some endomorphism ring has a semisimple quotient of dimension > 1.
    #[error("summand is not split: End/rad has dimension {0}")]
    NotSplit(usize),

    /// Algebra constructed without quiver data (e.g. an endomorphism
    /// algebra) and no quiver extraction was performed.
    #[error("no quiver data available for this algebra")]
    NoQuiverData,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("q must be nonzero")]
    ZeroQ,

    #[error("syntax error at line {line}, column {col}: {message}")]
    SyntaxError {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("path does not compose: {0}")]
    NonComposablePath(String),

    #[error("{0}")]
    Invalid(String),
}
