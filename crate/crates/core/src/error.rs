use thiserror::Error;

/// A grammar rule failed to match.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error in rule `{rule}`: {input:?}")]
pub struct ParseError {
    pub rule: &'static str,
    pub input: String,
}

impl ParseError {
    pub fn new(rule: &'static str, input: impl Into<String>) -> Self {
        ParseError {
            rule,
            input: input.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not integral (|x| > 1)")]
    NotIntegral,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("not representable: {0}")]
    NotRepresentable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("direction undefined over this field: no element of magnitude {0}")]
    DirectionUndefined(String),
    #[error("residue characteristic 2 is not supported")]
    ResidueCharacteristicTwo,
    #[error("undetermined over this field: {0}")]
    Undetermined(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
