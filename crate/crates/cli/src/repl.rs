//! Line-oriented interactive session.

use std::io::{self, BufRead, Write};

use crate::ast::Func;
use crate::eval::Env;
use crate::render::Style;
use crate::session::run_program;

pub const PROMPT: &str = "mnum> ";

/// Reads statements line by line until end of input or `:quit`.
///
/// Errors are reported on `output` and the session continues; bindings made
/// by earlier lines stay visible.
pub fn run<R: BufRead, W: Write>(input: R, mut output: W, style: Style) -> io::Result<()> {
    let mut env = Env::new();
    let mut lines = input.lines();
    loop {
        write!(output, "{PROMPT}")?;
        output.flush()?;
        let Some(line) = lines.next().transpose()? else {
            writeln!(output)?;
            return Ok(());
        };
        match line.trim() {
            "" => continue,
            ":quit" | ":q" => return Ok(()),
            ":help" => {
                writeln!(output, "{}", help())?;
                continue;
            }
            _ => {}
        }
        let mut results = Vec::new();
        let outcome = run_program(&line, &mut env, style, &mut results);
        for r in results {
            writeln!(output, "{r}")?;
        }
        if let Err(e) = outcome {
            writeln!(output, "{}", e.annotate(&line))?;
        }
    }
}

fn help() -> String {
    let funcs: Vec<_> = Func::ALL.iter().map(|f| f.name()).collect();
    format!(
        "operators: + - * | & ^\nfunctions: {}\nbind with `name = expr`; :quit to leave",
        funcs.join(", ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session(input: &str) -> String {
        let mut out = Vec::new();
        run(input.as_bytes(), &mut out, Style::Sparse).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn errors_do_not_end_the_session() {
        let out = session("a = one(2)\na +\nb\na * a\n:quit\none(2)\n");
        let body: Vec<_> = out.split(PROMPT).collect();
        assert!(body[2].starts_with("syntax error at 1:4"));
        assert!(body[3].starts_with("error at 1:1: unbound variable `b`"));
        assert_eq!(body[4], "{(0,0):1}\n");
        assert_eq!(body.len(), 6);
    }

    #[test]
    fn help_lists_functions() {
        assert!(session(":help\n").contains("card, supp"));
    }
}
