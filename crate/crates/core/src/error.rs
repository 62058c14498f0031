use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("Hensel lifting obstructed: {0}")]
    LiftObstruction(String),
    #[error("polynomial is reducible, not a field: {0}")]
    NotAField(String),
    #[error("unsupported curve model: {0}")]
    UnsupportedModel(String),
    #[error("singular curve model: {0}")]
    SingularModel(String),
    #[error("degree undefined for a constant function")]
    DegreeUndefined,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("divisor is not principal")]
    NotPrincipal,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("degree {degree} is outside the theorem range (need d > 2g = {twice_genus})")]
    OutOfTheoremRange { degree: usize, twice_genus: usize },
    #[error("no squarefree primitive-element presentation found: {0}")]
    DegeneratePresentation(String),
    #[error("search budget exhausted: {0}")]
    SearchExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
