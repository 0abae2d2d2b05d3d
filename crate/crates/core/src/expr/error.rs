use std::fmt;

use thiserror::Error;

use super::lexer::Pos;
use crate::error::AlgebraError;

/// A lexical or syntax error with its position and the tokens that would
/// have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn at(pos: Pos, message: impl Into<String>, expected: Vec<String>) -> Self {
        ParseError { pos, message: message.into(), expected }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{pos}: unbound name {name:?} in context {context}")]
    Unbound { name: String, pos: Pos, context: String },
    #[error("{0}")]
    Type(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ExprError {
    pub fn is_parse(&self) -> bool {
        matches!(self, ExprError::Parse(_))
    }
}
