use dnull_sym::SymError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error(
        "n = {0} is not supported: the replay needs n >= 4 (four distinct principal curvatures)"
    )]
    DimensionTooSmall(u32),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("no derivation rule for `{0}`")]
    MissingRule(String),
    #[error("derivation of a polynomial left a non-polynomial result: {0}")]
    NotPolynomial(String),
    #[error("{0} has degree 0 in beta; eliminate it separately")]
    BetaFree(String),
    #[error("checkpoint {id} failed: {detail}\n  derived:  {derived}\n  expected: {expected}")]
    CheckpointFailed {
        id: String,
        detail: String,
        derived: String,
        expected: String,
    },
}
