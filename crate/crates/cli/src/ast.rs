use std::fmt;

use num_bigint::BigUint;
use polymset::Polymset;

use crate::diag::Pos;

#[derive(Debug, Clone, PartialEq, Eq, Copy)]
pub enum BinOp {
    Union,
    Intersection,
    SymDiff,
    Add,
    Sub,
    Mul,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Union => "|",
            BinOp::Intersection => "&",
            BinOp::SymDiff => "^",
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
        }
    }
}

/// Built-in functions and their accepted argument counts.
#[derive(Debug, Clone, PartialEq, Eq, Copy)]
pub enum Func {
    Card,
    Supp,
    Hgt,
    Sc,
    Pd,
    Shift,
    Reduce,
    Unit,
    Zero,
    One,
    Cmp,
}

impl Func {
    pub const ALL: [Func; 11] = [
        Func::Card,
        Func::Supp,
        Func::Hgt,
        Func::Sc,
        Func::Pd,
        Func::Shift,
        Func::Reduce,
        Func::Unit,
        Func::Zero,
        Func::One,
        Func::Cmp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Card => "card",
            Func::Supp => "supp",
            Func::Hgt => "hgt",
            Func::Sc => "sc",
            Func::Pd => "pd",
            Func::Shift => "shift",
            Func::Reduce => "reduce",
            Func::Unit => "unit",
            Func::Zero => "zero",
            Func::One => "one",
            Func::Cmp => "cmp",
        }
    }

    pub fn lookup(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Minimum argument count and, when fixed, the maximum.
    pub fn arity(self) -> (usize, Option<usize>) {
        match self {
            Func::Card | Func::Supp | Func::Hgt | Func::Zero | Func::One => (1, Some(1)),
            Func::Reduce | Func::Cmp => (2, Some(2)),
            Func::Sc | Func::Pd | Func::Shift => (2, None),
            Func::Unit => (1, None),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Literal(Polymset),
    /// `{}`: a literal with no entries and no dimension.
    EmptyLiteral,
    Int(BigUint),
    Var(String),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Call {
        func: Func,
        args: Vec<Expr>,
    },
    Let {
        name: String,
        value: Box<Expr>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl Expr {
    pub fn new(kind: ExprKind, pos: Pos) -> Self {
        Expr { kind, pos }
    }
}

/// Fully parenthesized form, for debugging and tests.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Literal(p) => write!(f, "{p}"),
            ExprKind::EmptyLiteral => f.write_str("{}"),
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Var(v) => f.write_str(v),
            ExprKind::Binary { op, lhs, rhs } => write!(f, "({lhs} {} {rhs})", op.symbol()),
            ExprKind::Call { func, args } => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            ExprKind::Let { name, value } => write!(f, "{name} = {value}"),
        }
    }
}
