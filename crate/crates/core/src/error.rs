use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("module is not completely reducible over the acting operators")]
    NotCompletelyReducible,
    #[error("ground field too small: {factor} has no root in {field}")]
    FieldTooSmall { factor: String, field: String },
    #[error("algebra is not unital: {0}")]
    NotUnital(String),
    #[error("H-simple decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("relation {relation} fails")]
    RelationViolation { relation: String },
    #[error("action axiom fails for generator {generator} on basis pair ({a}, {b})")]
    AxiomViolation { generator: String, a: usize, b: usize },
    #[error("grading violated by basis pair ({a}, {b}): {reason}")]
    GradingViolation { a: usize, b: usize, reason: String },
    #[error("map {index} is not {kind} on basis pair ({a}, {b})")]
    NotMultiplicative { index: usize, kind: &'static str, a: usize, b: usize },
    #[error("estimated {estimate} rows exceeds the row cap {cap}")]
    ResourceCap { estimate: u128, cap: u128 },
    #[error("wall-clock budget of {seconds}s exhausted")]
    TimeBudget { seconds: u64 },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { context, expected, found })
    }
}

impl Error {
    /// Stable machine-readable name of the error category.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Schema(_) | Error::Json(_) => "schema",
            Error::Io(_) => "io",
            Error::Field(_) => "field",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::AxiomViolation { .. } => "axiom_violation",
            Error::RelationViolation { .. } => "relation_violation",
            Error::GradingViolation { .. } => "grading_violation",
            Error::NotMultiplicative { .. } => "not_multiplicative",
            Error::Precondition(_) => "precondition",
            Error::NotUnital(_) => "not_unital",
            Error::FieldTooSmall { .. } => "field_too_small",
            Error::NotCompletelyReducible => "not_completely_reducible",
            Error::DecompositionFailure(_) => "decomposition_failure",
            Error::ResourceCap { .. } => "resource_cap",
            Error::TimeBudget { .. } => "time_budget",
            Error::Internal(_) => "internal",
        }
    }

    /// Process exit status for the CLI; 2 is left to argument parsing.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) | Error::Json(_) => 3,
            Error::Io(_) => 4,
            Error::Field(_) | Error::DimensionMismatch { .. } => 5,
            Error::AxiomViolation { .. } => 6,
            Error::RelationViolation { .. } => 7,
            Error::GradingViolation { .. } | Error::NotMultiplicative { .. } => 8,
            Error::Precondition(_) => 9,
            Error::NotUnital(_) => 10,
            Error::FieldTooSmall { .. } => 11,
            Error::NotCompletelyReducible | Error::DecompositionFailure(_) => 12,
            Error::ResourceCap { .. } => 13,
            Error::TimeBudget { .. } => 14,
            Error::Internal(_) => 15,
        }
    }
}
