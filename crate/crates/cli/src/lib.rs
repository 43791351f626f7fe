//! Parser, evaluator and renderer behind the `mnum` command.
//!
//! ```
//! use mnum::{eval::Env, render::Style, session::run_program};
//!
//! let mut out = Vec::new();
//! run_program("x = [[1,1]]\nx * x", &mut Env::new(), Style::Matrix, &mut out).unwrap();
//! assert_eq!(out, ["[[1,2,1]]"]);
//! ```

pub mod ast;
pub mod diag;
pub mod eval;
pub mod lexer;
pub mod mutants;
pub mod parser;
pub mod render;
pub mod repl;
pub mod session;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod guide {}
