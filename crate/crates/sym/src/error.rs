use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("resultant needs positive degree in `{var}` for both inputs (degrees {left}, {right}); handle the constant case separately")]
    DegreeZero { var: String, left: u32, right: u32 },
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("duplicate variable `{0}` in ring")]
    DuplicateVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
