use std::collections::BTreeMap;

use num_bigint::BigUint;
use polymset::semiring::{self, compare_tetratomy, Tetratomy};
use polymset::{MultiIndex, Polymset};

use crate::ast::{BinOp, Expr, ExprKind, Func};
use crate::diag::{EvalError, EvalErrorKind, Pos};

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Polymset(Polymset),
    Scalar(BigUint),
    Comparison(Tetratomy),
}

impl Value {
    fn kind_name(&self) -> &'static str {
        match self {
            Value::Polymset(_) => "a polymset",
            Value::Scalar(_) => "a number",
            Value::Comparison(_) => "a comparison",
        }
    }
}

pub type Env = BTreeMap<String, Value>;

/// Evaluates `expr`; a `Let` binds its value in `env` and returns it.
pub fn eval(expr: &Expr, env: &mut Env) -> Result<Value, EvalError> {
    match &expr.kind {
        ExprKind::Let { name, value } => {
            let v = eval_expr(value, env)?;
            env.insert(name.clone(), v.clone());
            Ok(v)
        }
        _ => eval_expr(expr, env),
    }
}

fn eval_expr(expr: &Expr, env: &Env) -> Result<Value, EvalError> {
    let err = |kind: EvalErrorKind| EvalError {
        pos: expr.pos,
        kind,
    };
    match &expr.kind {
        ExprKind::Literal(p) => Ok(Value::Polymset(p.clone())),
        ExprKind::EmptyLiteral => Err(err(EvalErrorKind::MissingDim)),
        ExprKind::Int(n) => Ok(Value::Scalar(n.clone())),
        ExprKind::Var(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| err(EvalErrorKind::Unbound(name.clone()))),
        ExprKind::Binary { op, lhs, rhs } => {
            let l = eval_expr(lhs, env)?;
            let r = eval_expr(rhs, env)?;
            binary(*op, l, r).map_err(err)
        }
        ExprKind::Call { func, args } => call(*func, args, env, expr.pos),
        ExprKind::Let { .. } => unreachable!("let appears only as a statement"),
    }
}

fn binary(op: BinOp, l: Value, r: Value) -> Result<Value, EvalErrorKind> {
    match (l, r) {
        (Value::Polymset(a), Value::Polymset(b)) => Ok(Value::Polymset(match op {
            BinOp::Union => a.union(&b)?,
            BinOp::Intersection => a.intersection(&b)?,
            BinOp::SymDiff => a.symdiff(&b)?,
            BinOp::Add => semiring::add(&a, &b)?,
            BinOp::Sub => a.msub(&b)?,
            BinOp::Mul => semiring::mul(&a, &b)?,
        })),
        // Numbers behave as one-cell polymsets.
        (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(match op {
            BinOp::Union => a.max(b),
            BinOp::Intersection => a.min(b),
            BinOp::SymDiff if a >= b => a - b,
            BinOp::SymDiff => b - a,
            BinOp::Add => a + b,
            BinOp::Sub if a >= b => a - b,
            BinOp::Sub => BigUint::default(),
            BinOp::Mul => a * b,
        })),
        (Value::Polymset(_), other) | (other, Value::Polymset(_)) => Err(EvalErrorKind::Type {
            expected: "a polymset",
            found: other.kind_name(),
        }),
        (a, _) => Err(EvalErrorKind::Type {
            expected: "a polymset or number",
            found: a.kind_name(),
        }),
    }
}

fn call(func: Func, args: &[Expr], env: &Env, pos: Pos) -> Result<Value, EvalError> {
    let at = |pos: Pos| move |kind: EvalErrorKind| EvalError { pos, kind };
    let polymset_arg = |i: usize| -> Result<Polymset, EvalError> {
        match eval_expr(&args[i], env)? {
            Value::Polymset(p) => Ok(p),
            other => Err(at(args[i].pos)(EvalErrorKind::Type {
                expected: "a polymset",
                found: other.kind_name(),
            })),
        }
    };
    let int_arg = |i: usize| -> Result<u64, EvalError> {
        match eval_expr(&args[i], env)? {
            Value::Scalar(n) => u64::try_from(&n)
                .map_err(|_| at(args[i].pos)(EvalErrorKind::IndexTooLarge(n.to_string()))),
            other => Err(at(args[i].pos)(EvalErrorKind::Type {
                expected: "a number",
                found: other.kind_name(),
            })),
        }
    };
    let index_args = |from: usize| -> Result<MultiIndex, EvalError> {
        let coords = (from..args.len())
            .map(int_arg)
            .collect::<Result<Vec<_>, _>>()?;
        MultiIndex::new(coords).map_err(|e| at(pos)(e.into()))
    };
    let op = |r: polymset::Result<Polymset>| r.map(Value::Polymset).map_err(|e| at(pos)(e.into()));

    match func {
        Func::Card => Ok(Value::Scalar(polymset_arg(0)?.cardinality())),
        Func::Hgt => Ok(Value::Scalar(polymset_arg(0)?.height())),
        Func::Supp => Ok(Value::Polymset(polymset_arg(0)?.support())),
        Func::Sc => op(polymset_arg(0)?.sc(&index_args(1)?)),
        Func::Pd => op(polymset_arg(0)?.pd(&index_args(1)?)),
        Func::Shift => op(semiring::shift(&polymset_arg(0)?, &index_args(1)?)),
        Func::Reduce => {
            let a = polymset_arg(0)?;
            let axis = usize::try_from(int_arg(1)?).unwrap_or(usize::MAX);
            op(a.reduce(axis))
        }
        Func::Unit => Ok(Value::Polymset(semiring::unit(&index_args(0)?))),
        Func::Zero => op(semiring::zero(dim_arg(int_arg(0)?))),
        Func::One => op(semiring::one(dim_arg(int_arg(0)?))),
        Func::Cmp => {
            let (a, b) = (polymset_arg(0)?, polymset_arg(1)?);
            compare_tetratomy(&a, &b)
                .map(Value::Comparison)
                .map_err(|e| at(pos)(e.into()))
        }
    }
}

fn dim_arg(n: u64) -> usize {
    usize::try_from(n).unwrap_or(usize::MAX)
}
