//! Positioned diagnostics.

use std::fmt;

use polymset::Error as OpError;
use thiserror::Error;

/// 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
    /// Tokens that would have been accepted at `pos`.
    pub expected: Vec<String>,
}

impl SyntaxError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError {
            pos,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    pub fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at {}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error("{0}")]
    Op(#[from] OpError),
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("expected {expected}, found {found}")]
    Type {
        expected: &'static str,
        found: &'static str,
    },
    #[error("`{{}}` has no dimension; write zero(m) or {{dim=m}}")]
    MissingDim,
    #[error("{0} does not fit in an index coordinate")]
    IndexTooLarge(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub pos: Pos,
    pub kind: EvalErrorKind,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error at {}: {}", self.pos, self.kind)
    }
}

impl std::error::Error for EvalError {}

/// Renders `err` with the offending source line and a caret.
pub fn annotate(src: &str, pos: Pos, err: &dyn fmt::Display) -> String {
    let mut out = err.to_string();
    if let Some(line) = src.lines().nth(pos.line.saturating_sub(1)) {
        let pad = " ".repeat(pos.col.saturating_sub(1));
        out.push_str(&format!("\n  | {line}\n  | {pad}^"));
    }
    out
}
