//! Running whole programs against an environment.

use std::fmt;

use crate::ast::ExprKind;
use crate::diag::{annotate, EvalError, Pos, SyntaxError};
use crate::eval::{eval, Env};
use crate::parser::parse_program;
use crate::render::{render, RenderError, Style};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Syntax(SyntaxError),
    Eval(EvalError),
    Render(Pos, RenderError),
}

impl RunError {
    pub fn pos(&self) -> Pos {
        match self {
            RunError::Syntax(e) => e.pos,
            RunError::Eval(e) => e.pos,
            RunError::Render(pos, _) => *pos,
        }
    }

    /// Process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Syntax(_) => 2,
            RunError::Eval(_) | RunError::Render(..) => 1,
        }
    }

    /// The message followed by the offending line of `src` and a caret.
    pub fn annotate(&self, src: &str) -> String {
        annotate(src, self.pos(), self)
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Syntax(e) => e.fmt(f),
            RunError::Eval(e) => e.fmt(f),
            RunError::Render(pos, e) => write!(f, "error at {pos}: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

/// Parses `src`, then evaluates each statement in order and pushes the
/// rendering of every non-binding statement onto `out`.
///
/// Nothing is evaluated when `src` fails to parse. On an evaluation error the
/// results of earlier statements stay in `out`.
pub fn run_program(
    src: &str,
    env: &mut Env,
    style: Style,
    out: &mut Vec<String>,
) -> Result<(), RunError> {
    let program = parse_program(src).map_err(RunError::Syntax)?;
    for stmt in &program {
        let value = eval(stmt, env).map_err(RunError::Eval)?;
        if !matches!(stmt.kind, ExprKind::Let { .. }) {
            out.push(render(&value, style).map_err(|e| RunError::Render(stmt.pos, e))?);
        }
    }
    Ok(())
}
