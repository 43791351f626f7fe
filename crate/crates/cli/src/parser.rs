//! Recursive-descent parser for the expression language.
//!
//! ```text
//! program   := sep* (statement (sep+ statement)*)? sep*
//! statement := IDENT '=' expr | expr
//! expr      := additive (('|' | '&' | '^') additive)*
//! additive  := product (('+' | '-') product)*
//! product   := atom ('*' atom)*
//! atom      := INT | IDENT | IDENT '(' args ')' | '(' expr ')' | sparse | matrix
//! sparse    := '{' '}' | '{' 'dim' '=' INT '}' | '{' entry (',' entry)* ','? '}'
//! entry     := '(' INT (',' INT)* ')' ':' INT
//! matrix    := '[' (row (',' row)*)? ']'
//! row       := '[' (INT (',' INT)*)? ']'
//! ```
//!
//! `sep` is a newline or `;`. All binary operators are left-associative.

use std::str::FromStr;

use num_bigint::BigUint;
use polymset::Polymset;

use crate::ast::{BinOp, Expr, ExprKind, Func};
use crate::diag::{Pos, SyntaxError};
use crate::lexer::{tokenize, Tok, Token};

const ATOM_START: &[&str] = &["integer", "identifier", "(", "{", "["];

/// Parses a whole program: statements separated by newlines or `;`.
pub fn parse_program(src: &str) -> Result<Vec<Expr>, SyntaxError> {
    let mut p = Parser::new(src)?;
    let mut out = Vec::new();
    p.skip_separators();
    while p.peek() != &Tok::Eof {
        out.push(p.statement()?);
        match p.peek() {
            Tok::Eof => break,
            Tok::Newline | Tok::Semi => p.skip_separators(),
            _ => return Err(p.unexpected(&["end of line", ";", "operator"])),
        }
    }
    Ok(out)
}

/// Parses a single statement.
pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser::new(src)?;
    p.skip_separators();
    let stmt = p.statement()?;
    p.skip_separators();
    if p.peek() != &Tok::Eof {
        return Err(p.unexpected(&["end of input", "operator"]));
    }
    Ok(stmt)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: tokenize(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.at + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, SyntaxError> {
        if self.peek() == &tok {
            Ok(self.bump().pos)
        } else {
            Err(self.unexpected(&[tok.symbol()]))
        }
    }

    fn unexpected(&self, expected: &[&str]) -> SyntaxError {
        SyntaxError::new(self.pos(), format!("unexpected {}", self.peek())).expecting(expected)
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Tok::Newline | Tok::Semi) {
            self.bump();
        }
    }

    fn statement(&mut self) -> Result<Expr, SyntaxError> {
        if let (Tok::Ident(name), Tok::Eq) = (self.peek().clone(), self.peek_at(1)) {
            let pos = self.bump().pos;
            self.bump();
            if Func::lookup(&name).is_some() {
                return Err(SyntaxError::new(
                    pos,
                    format!("`{name}` is a built-in function and cannot be rebound"),
                ));
            }
            let value = self.expr()?;
            return Ok(Expr::new(
                ExprKind::Let {
                    name,
                    value: Box::new(value),
                },
                pos,
            ));
        }
        self.expr()
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.additive()?;
        loop {
            let op = match self.peek() {
                Tok::Pipe => BinOp::Union,
                Tok::Amp => BinOp::Intersection,
                Tok::Caret => BinOp::SymDiff,
                _ => return Ok(lhs),
            };
            let pos = self.bump().pos;
            let rhs = self.additive()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn additive(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let pos = self.bump().pos;
            let rhs = self.product()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.atom()?;
        while self.peek() == &Tok::Star {
            let pos = self.bump().pos;
            let rhs = self.atom()?;
            lhs = binary(BinOp::Mul, lhs, rhs, pos);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                Ok(Expr::new(ExprKind::Int(big(&digits)), pos))
            }
            Tok::Ident(name) => {
                self.bump();
                if self.peek() == &Tok::LParen {
                    self.call(&name, pos)
                } else {
                    Ok(Expr::new(ExprKind::Var(name), pos))
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::LBrace => self.sparse(),
            Tok::LBracket => self.matrix(),
            _ => Err(self.unexpected(ATOM_START)),
        }
    }

    fn call(&mut self, name: &str, pos: Pos) -> Result<Expr, SyntaxError> {
        let Some(func) = Func::lookup(name) else {
            let names: Vec<&str> = Func::ALL.iter().map(|f| f.name()).collect();
            return Err(
                SyntaxError::new(pos, format!("unknown function `{name}`")).expecting(&names)
            );
        };
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek() != &Tok::RParen {
            loop {
                args.push(self.expr()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        if self.peek() != &Tok::RParen {
            return Err(self.unexpected(&[",", ")"]));
        }
        self.bump();
        let (min, max) = func.arity();
        if args.len() < min || max.is_some_and(|m| args.len() > m) {
            let wanted = match max {
                Some(m) if m == min => format!("{min}"),
                Some(m) => format!("{min} to {m}"),
                None => format!("at least {min}"),
            };
            return Err(SyntaxError::new(
                pos,
                format!(
                    "`{}` takes {wanted} argument{}, got {}",
                    func.name(),
                    if wanted == "1" { "" } else { "s" },
                    args.len()
                ),
            ));
        }
        Ok(Expr::new(ExprKind::Call { func, args }, pos))
    }

    fn sparse(&mut self) -> Result<Expr, SyntaxError> {
        let pos = self.expect(Tok::LBrace)?;
        if self.eat(&Tok::RBrace) {
            return Ok(Expr::new(ExprKind::EmptyLiteral, pos));
        }
        if matches!(self.peek(), Tok::Ident(s) if s == "dim") {
            self.bump();
            self.expect(Tok::Eq)?;
            let dim_pos = self.pos();
            let dim = self.index_int()?;
            self.expect(Tok::RBrace)?;
            let dim = usize::try_from(dim)
                .ok()
                .and_then(|d| Polymset::empty(d).ok())
                .ok_or_else(|| SyntaxError::new(dim_pos, "dimension must be at least 1"))?;
            return Ok(Expr::new(ExprKind::Literal(dim), pos));
        }
        let mut comps: Vec<(Vec<u64>, BigUint)> = Vec::new();
        loop {
            let tuple_pos = self.pos();
            self.expect(Tok::LParen)?;
            let mut idx = vec![self.index_int()?];
            while self.eat(&Tok::Comma) {
                idx.push(self.index_int()?);
            }
            if self.peek() != &Tok::RParen {
                return Err(self.unexpected(&[",", ")"]));
            }
            self.bump();
            if let Some((first, _)) = comps.first() {
                if first.len() != idx.len() {
                    return Err(SyntaxError::new(
                        tuple_pos,
                        format!(
                            "index has {} coordinates but the literal has dimension {}",
                            idx.len(),
                            first.len()
                        ),
                    ));
                }
            }
            self.expect(Tok::Colon)?;
            let mult = self.mult_int()?;
            comps.push((idx, mult));
            if !self.eat(&Tok::Comma) {
                break;
            }
            if self.peek() == &Tok::RBrace {
                break;
            }
        }
        if self.peek() != &Tok::RBrace {
            return Err(self.unexpected(&[",", "}"]));
        }
        self.bump();
        let dim = comps[0].0.len();
        let p = Polymset::from_components(dim, comps).expect("uniform tuple lengths");
        Ok(Expr::new(ExprKind::Literal(p), pos))
    }

    fn matrix(&mut self) -> Result<Expr, SyntaxError> {
        let pos = self.expect(Tok::LBracket)?;
        let mut rows: Vec<Vec<BigUint>> = Vec::new();
        if self.peek() != &Tok::RBracket {
            loop {
                let row_pos = self.pos();
                self.expect(Tok::LBracket)?;
                let mut row = Vec::new();
                if self.peek() != &Tok::RBracket {
                    row.push(self.mult_int()?);
                    while self.eat(&Tok::Comma) {
                        row.push(self.mult_int()?);
                    }
                }
                if self.peek() != &Tok::RBracket {
                    return Err(self.unexpected(&[",", "]"]));
                }
                self.bump();
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        return Err(SyntaxError::new(
                            row_pos,
                            format!("row has {} columns, expected {}", row.len(), first.len()),
                        ));
                    }
                }
                rows.push(row);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        if self.peek() != &Tok::RBracket {
            return Err(self.unexpected(&[",", "]"]));
        }
        self.bump();
        let comps = rows.into_iter().enumerate().flat_map(|(r, row)| {
            row.into_iter()
                .enumerate()
                .map(move |(c, m)| ([r as u64, c as u64], m))
        });
        let p = Polymset::from_components(2, comps).expect("two coordinates per cell");
        Ok(Expr::new(ExprKind::Literal(p), pos))
    }

    fn index_int(&mut self) -> Result<u64, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                digits.parse::<u64>().map_err(|_| {
                    SyntaxError::new(
                        pos,
                        format!("number overflow: {digits} does not fit in an index coordinate"),
                    )
                })
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn mult_int(&mut self) -> Result<BigUint, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                Ok(big(&digits))
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr, pos: Pos) -> Expr {
    Expr::new(
        ExprKind::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        },
        pos,
    )
}

fn big(digits: &str) -> BigUint {
    BigUint::from_str(digits).expect("lexer yields decimal digits")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(src: &str) -> String {
        parse(src).unwrap().to_string()
    }

    #[test]
    fn sum_of_literals() {
        let e = parse("{(0,0):1} + {(1,0):1}").unwrap();
        let ExprKind::Binary { op, lhs, rhs } = e.kind else {
            panic!("expected a binary node");
        };
        assert_eq!(op, BinOp::Add);
        assert!(matches!(lhs.kind, ExprKind::Literal(_)));
        assert!(matches!(rhs.kind, ExprKind::Literal(_)));
    }

    #[test]
    fn matrix_literal() {
        let e = parse("[[1,0],[0,2]]").unwrap();
        let expected = Polymset::from_components(2, [([0, 0], 1u32), ([1, 1], 2)]).unwrap();
        assert_eq!(e.kind, ExprKind::Literal(expected));
        assert_eq!(
            parse("[]").unwrap().kind,
            ExprKind::Literal(Polymset::empty(2).unwrap())
        );
        assert_eq!(
            parse("[[]]").unwrap().kind,
            ExprKind::Literal(Polymset::empty(2).unwrap())
        );
    }

    #[test]
    fn empty_braces_parse_but_carry_no_dim() {
        let e = parse("sc({}, 0, 1)").unwrap();
        let ExprKind::Call { func, args } = e.kind else {
            panic!("expected a call");
        };
        assert_eq!(func, Func::Sc);
        assert_eq!(args[0].kind, ExprKind::EmptyLiteral);
        assert_eq!(args.len(), 3);
        assert_eq!(
            parse("{dim=3}").unwrap().kind,
            ExprKind::Literal(Polymset::empty(3).unwrap())
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(shape("a | b + c * d"), "(a | (b + (c * d)))");
        assert_eq!(shape("a - b - c"), "((a - b) - c)");
        assert_eq!(shape("a & b ^ c | d"), "(((a & b) ^ c) | d)");
        assert_eq!(shape("(a | b) * c"), "((a | b) * c)");
        assert_eq!(shape("x = a * b + c"), "x = ((a * b) + c)");
    }

    #[test]
    fn literal_canonicalization() {
        assert_eq!(shape("{(1,1):2, (0,0):0, (1,1):3,}"), "{(1,1):5}");
    }

    #[test]
    fn program_statements() {
        let prog =
            parse_program("a = one(2)\n\n b = a + a; card(b)\n# trailing comment\n").unwrap();
        assert_eq!(prog.len(), 3);
        assert!(parse_program("").unwrap().is_empty());
    }

    #[test]
    fn diagnostics_carry_position_and_expectation() {
        let err = parse("{(0,0):1} +").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 12 });
        assert!(err.expected.contains(&"integer".to_string()));

        let err = parse("{(0,0) 1}").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 8 });
        assert_eq!(err.expected, vec![":"]);

        let err = parse_program("a = 1\nb = (a").unwrap_err();
        assert_eq!(err.pos.line, 2);
        assert_eq!(err.expected, vec![")"]);
    }

    #[test]
    fn arity_and_unknown_functions() {
        assert!(parse("card(a, b)")
            .unwrap_err()
            .message
            .contains("takes 1 argument"));
        assert!(parse("sc(a)").unwrap_err().message.contains("at least 2"));
        let err = parse("foo(a)").unwrap_err();
        assert!(err.message.contains("unknown function"));
        assert!(err.expected.contains(&"card".to_string()));
        assert!(parse("card = 1").is_err());
    }

    #[test]
    fn index_overflow_and_shape_errors() {
        let err = parse("{(18446744073709551616,0):1}").unwrap_err();
        assert!(err.message.contains("number overflow"));
        // Multiplicities are unbounded.
        assert!(parse("{(0,0):18446744073709551616}").is_ok());
        assert!(parse("{(0,0):1, (1):1}")
            .unwrap_err()
            .message
            .contains("dimension 2"));
        assert!(parse("[[1,2],[3]]")
            .unwrap_err()
            .message
            .contains("columns"));
        assert!(parse("{dim=0}").is_err());
        assert!(parse("a b").is_err());
    }
}
