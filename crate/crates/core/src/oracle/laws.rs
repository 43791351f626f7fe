//! Law suite over a finite universe.
//!
//! Each law quantifies over one, two or three elements of the universe
//! (and, where it mentions indices, over every grid cell). When the number
//! of tuples exceeds the evaluation budget the tuples are drawn at random
//! from a seeded generator instead, and the report says so.

use std::borrow::Cow;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::universe::{enumerate_universe, Universe, UniverseSpec};
use super::{add_via_successors, mul_recursive};
use crate::error::Result;
use crate::index::MultiIndex;
use crate::interchange;
use crate::polymset::Polymset;
use crate::semiring::{self, compare_tetratomy, shift, unit, Tetratomy};
use crate::succession::{generate, trace_of};

/// Signature of a multiplication routine under test.
pub type MulFn = fn(&Polymset, &Polymset) -> Result<Polymset>;

/// Default number of tuples evaluated per law before switching to sampling.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

const MATERIALIZE_LIMIT: u64 = 1 << 20;

/// Runs the full law suite with the default budget and seed.
pub fn check_laws(spec: &UniverseSpec) -> Result<LawReport> {
    LawChecker::new(spec.clone()).run()
}

#[derive(Debug, Clone)]
pub struct LawChecker {
    spec: UniverseSpec,
    budget: u64,
    seed: u64,
    mul: MulFn,
}

impl LawChecker {
    pub fn new(spec: UniverseSpec) -> Self {
        LawChecker {
            spec,
            budget: DEFAULT_BUDGET,
            seed: 0x6d6e_756d,
            mul: semiring::mul,
        }
    }

    /// Tuples evaluated per law before falling back to sampling.
    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget.max(1);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Substitutes the multiplication being checked.
    pub fn with_mul(mut self, mul: MulFn) -> Self {
        self.mul = mul;
        self
    }

    pub fn run(&self) -> Result<LawReport> {
        let universe = enumerate_universe(&self.spec)?;
        let n = universe.len();
        let source = if n <= MATERIALIZE_LIMIT {
            Source::Materialized(universe.clone().collect())
        } else {
            Source::Lazy(universe.clone())
        };
        let ctx = Ctx {
            dim: self.spec.dim,
            cells: universe.cells().to_vec(),
            mul: self.mul,
            zero: semiring::zero(self.spec.dim)?,
            one: semiring::one(self.spec.dim)?,
        };
        let mut results = Vec::new();
        for (law_no, law) in LAWS.iter().enumerate() {
            if law.min_dim > self.spec.dim {
                results.push(LawResult {
                    law: law.name,
                    status: LawStatus::NotApplicable(format!(
                        "needs dimension at least {}",
                        law.min_dim
                    )),
                    coverage: Coverage::Exhaustive { cases: 0 },
                });
                continue;
            }
            let population = n.checked_pow(law.arity as u32);
            let mut status = LawStatus::Pass;
            let coverage = match population {
                Some(total) if total <= self.budget => {
                    for t in 0..total {
                        let ops = decode_tuple(t, n, law.arity, &source);
                        if let Some(cx) = (law.check)(&ctx, &refs(&ops))? {
                            status = LawStatus::Fail(cx);
                            break;
                        }
                    }
                    Coverage::Exhaustive { cases: total }
                }
                _ => {
                    let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ law_no as u64);
                    for _ in 0..self.budget {
                        let ops: Vec<_> = (0..law.arity)
                            .map(|_| source.get(rng.gen_range(0..n)))
                            .collect();
                        if let Some(cx) = (law.check)(&ctx, &refs(&ops))? {
                            status = LawStatus::Fail(cx);
                            break;
                        }
                    }
                    Coverage::Sampled {
                        cases: self.budget,
                        population: population
                            .map_or_else(|| format!("{n}^{}", law.arity), |p| p.to_string()),
                    }
                }
            };
            results.push(LawResult {
                law: law.name,
                status,
                coverage,
            });
        }
        Ok(LawReport {
            universe: self.spec.clone(),
            results,
        })
    }
}

enum Source {
    Materialized(Vec<Polymset>),
    Lazy(Universe),
}

impl Source {
    fn get(&self, i: u64) -> Cow<'_, Polymset> {
        match self {
            Source::Materialized(all) => Cow::Borrowed(&all[i as usize]),
            Source::Lazy(u) => Cow::Owned(u.nth_element(i)),
        }
    }
}

fn decode_tuple(mut t: u64, n: u64, arity: usize, source: &Source) -> Vec<Cow<'_, Polymset>> {
    let mut digits = vec![0; arity];
    for d in digits.iter_mut().rev() {
        *d = t % n;
        t /= n;
    }
    digits.into_iter().map(|d| source.get(d)).collect()
}

fn refs<'a>(ops: &'a [Cow<'_, Polymset>]) -> Vec<&'a Polymset> {
    ops.iter().map(|c| c.as_ref()).collect()
}

/// Evaluation context shared by all laws.
struct Ctx {
    dim: usize,
    cells: Vec<MultiIndex>,
    mul: MulFn,
    zero: Polymset,
    one: Polymset,
}

impl Ctx {
    fn mul(&self, a: &Polymset, b: &Polymset) -> Result<Polymset> {
        (self.mul)(a, b)
    }
}

type Verdict = Result<Option<Counterexample>>;

struct Law {
    name: &'static str,
    arity: usize,
    min_dim: usize,
    check: fn(&Ctx, &[&Polymset]) -> Verdict,
}

fn fail(ops: &[&Polymset], indices: &[&MultiIndex], detail: impl Into<String>) -> Verdict {
    Ok(Some(Counterexample {
        operands: ops.iter().map(|p| (*p).clone()).collect(),
        indices: indices.iter().map(|i| (*i).clone()).collect(),
        detail: detail.into(),
    }))
}

fn add(a: &Polymset, b: &Polymset) -> Result<Polymset> {
    semiring::add(a, b)
}

const LAWS: &[Law] = &[
    Law {
        name: "successor-never-zero",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for i in &ctx.cells {
                if ops[0].sc(i)? == ctx.zero {
                    return fail(ops, &[i], "sc(A, i) is zero");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "successor-differs-from-argument",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for i in &ctx.cells {
                if &ops[0].sc(i)? == ops[0] {
                    return fail(ops, &[i], "sc(A, i) = A");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "successor-distinct-per-index",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for i in &ctx.cells {
                for j in &ctx.cells {
                    if i != j && ops[0].sc(i)? == ops[0].sc(j)? {
                        return fail(ops, &[i, j], "sc(A, i) = sc(A, j) with i != j");
                    }
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "successors-commute",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for i in &ctx.cells {
                for j in &ctx.cells {
                    if ops[0].sc(i)?.sc(j)? != ops[0].sc(j)?.sc(i)? {
                        return fail(ops, &[i, j], "sc(sc(A, i), j) != sc(sc(A, j), i)");
                    }
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "predecessor-exists",
        arity: 1,
        min_dim: 1,
        check: |_, ops| {
            let a = ops[0];
            for i in a.indices() {
                if &a.pd(i)?.sc(i)? != a {
                    return fail(ops, &[i], "sc(pd(A, i), i) != A");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "reachable-from-zero",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            let trace = trace_of(ops[0]);
            if &generate(ctx.dim, &trace.steps)? != ops[0] {
                return fail(ops, &[], "replaying the generation trace does not give A");
            }
            Ok(None)
        },
    },
    Law {
        name: "successor-is-unit-sum",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for i in &ctx.cells {
                if add(ops[0], &unit(i))? != ops[0].sc(i)? {
                    return fail(ops, &[i], "A + unit(i) != sc(A, i)");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "add-identity",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            if &add(ops[0], &ctx.zero)? != ops[0] || &add(&ctx.zero, ops[0])? != ops[0] {
                return fail(ops, &[], "A + 0 != A");
            }
            Ok(None)
        },
    },
    Law {
        name: "mul-identity",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            if &ctx.mul(&ctx.one, ops[0])? != ops[0] {
                return fail(ops, &[], "1 * A != A");
            }
            if &ctx.mul(ops[0], &ctx.one)? != ops[0] {
                return fail(ops, &[], "A * 1 != A");
            }
            Ok(None)
        },
    },
    Law {
        name: "mul-zero-annihilates",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            if ctx.mul(ops[0], &ctx.zero)? != ctx.zero || ctx.mul(&ctx.zero, ops[0])? != ctx.zero {
                return fail(ops, &[], "A * 0 != 0");
            }
            Ok(None)
        },
    },
    Law {
        name: "unit-product-is-shift",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for i in &ctx.cells {
                let shifted = shift(ops[0], i)?;
                if ctx.mul(&unit(i), ops[0])? != shifted {
                    return fail(ops, &[i], "unit(i) * A != shift(A, i)");
                }
                if ctx.mul(ops[0], &unit(i))? != shifted {
                    return fail(ops, &[i], "A * unit(i) != shift(A, i)");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "shift-composition",
        arity: 1,
        min_dim: 1,
        check: |ctx, ops| {
            for u in &ctx.cells {
                for v in &ctx.cells {
                    if shift(&shift(ops[0], u)?, v)? != shift(ops[0], &u.checked_add(v)?)? {
                        return fail(ops, &[u, v], "shift(shift(A, u), v) != shift(A, u + v)");
                    }
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "unit-products",
        arity: 0,
        min_dim: 1,
        check: |ctx, _| {
            for i in &ctx.cells {
                for j in &ctx.cells {
                    if ctx.mul(&unit(i), &unit(j))? != unit(&i.checked_add(j)?) {
                        return fail(&[], &[i, j], "unit(i) * unit(j) != unit(i + j)");
                    }
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "successor-injective",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            for i in &ctx.cells {
                if (a == b) != (a.sc(i)? == b.sc(i)?) {
                    return fail(ops, &[i], "A = B does not match sc(A, i) = sc(B, i)");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "predecessor-unique",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            for i in &ctx.cells {
                if &b.sc(i)? == a && &a.pd(i)? != b {
                    return fail(ops, &[i], "sc(B, i) = A but pd(A, i) != B");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "add-commutative",
        arity: 2,
        min_dim: 1,
        check: |_, ops| {
            if add(ops[0], ops[1])? != add(ops[1], ops[0])? {
                return fail(ops, &[], "A + B != B + A");
            }
            Ok(None)
        },
    },
    Law {
        name: "mul-commutative",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            if ctx.mul(ops[0], ops[1])? != ctx.mul(ops[1], ops[0])? {
                return fail(ops, &[], "A * B != B * A");
            }
            Ok(None)
        },
    },
    Law {
        name: "add-no-torsion",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            if a != &ctx.zero && &add(a, b)? == b {
                return fail(ops, &[], "A != 0 but A + B = B");
            }
            Ok(None)
        },
    },
    Law {
        name: "tetratomy",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            // Dominance decided independently through saturating differences.
            let a_over_b = a.msub(b)?;
            let b_over_a = b.msub(a)?;
            let a_ge_b = &add(b, &a_over_b)? == a;
            let b_ge_a = &add(a, &b_over_a)? == b;
            let cases = [
                a == b,
                a_ge_b && a != b,
                b_ge_a && a != b,
                !a_ge_b && !b_ge_a,
            ];
            if cases.iter().filter(|&&c| c).count() != 1 {
                return fail(ops, &[], "not exactly one comparison case holds");
            }
            let ok = match compare_tetratomy(a, b)? {
                Tetratomy::Equal => cases[0],
                Tetratomy::GreaterBy(c) => cases[1] && c != ctx.zero && &add(b, &c)? == a,
                Tetratomy::LessBy(d) => cases[2] && d != ctx.zero && &add(a, &d)? == b,
                Tetratomy::Incomparable => cases[3],
            };
            if !ok {
                return fail(ops, &[], "comparison result or witness is wrong");
            }
            Ok(None)
        },
    },
    Law {
        name: "cardinality-additive",
        arity: 2,
        min_dim: 1,
        check: |_, ops| {
            let (a, b) = (ops[0], ops[1]);
            if add(a, b)?.cardinality() != a.cardinality() + b.cardinality() {
                return fail(ops, &[], "Card(A + B) != Card A + Card B");
            }
            Ok(None)
        },
    },
    Law {
        name: "cardinality-multiplicative",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            if ctx.mul(a, b)?.cardinality() != a.cardinality() * b.cardinality() {
                return fail(ops, &[], "Card(A * B) != Card A * Card B");
            }
            Ok(None)
        },
    },
    Law {
        name: "reduction-morphism",
        arity: 2,
        min_dim: 2,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            for axis in 0..ctx.dim {
                let (ra, rb) = (a.reduce(axis)?, b.reduce(axis)?);
                if ctx.mul(a, b)?.reduce(axis)? != ctx.mul(&ra, &rb)? {
                    return fail(
                        ops,
                        &[],
                        format!("reduce(A * B, {axis}) != reduce A * reduce B"),
                    );
                }
                if add(a, b)?.reduce(axis)? != add(&ra, &rb)? {
                    return fail(
                        ops,
                        &[],
                        format!("reduce(A + B, {axis}) != reduce A + reduce B"),
                    );
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "shift-distributes",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b) = (ops[0], ops[1]);
            for u in &ctx.cells {
                if shift(&add(a, b)?, u)? != add(&shift(a, u)?, &shift(b, u)?)? {
                    return fail(ops, &[u], "shift(A + B, u) != shift(A, u) + shift(B, u)");
                }
                if ctx.mul(&shift(a, u)?, b)? != shift(&ctx.mul(a, b)?, u)? {
                    return fail(ops, &[u], "shift(A, u) * B != shift(A * B, u)");
                }
            }
            Ok(None)
        },
    },
    Law {
        name: "add-matches-successor-recursion",
        arity: 2,
        min_dim: 1,
        check: |_, ops| {
            if add(ops[0], ops[1])? != add_via_successors(ops[0], ops[1])? {
                return fail(ops, &[], "A + B differs from the successor recursion");
            }
            Ok(None)
        },
    },
    Law {
        name: "mul-matches-recursive-definition",
        arity: 2,
        min_dim: 1,
        check: |ctx, ops| {
            if ctx.mul(ops[0], ops[1])? != mul_recursive(ops[0], ops[1])? {
                return fail(ops, &[], "A * B differs from the recursive definition");
            }
            Ok(None)
        },
    },
    Law {
        name: "add-associative",
        arity: 3,
        min_dim: 1,
        check: |_, ops| {
            let (a, b, c) = (ops[0], ops[1], ops[2]);
            if add(&add(a, b)?, c)? != add(a, &add(b, c)?)? {
                return fail(ops, &[], "(A + B) + C != A + (B + C)");
            }
            Ok(None)
        },
    },
    Law {
        name: "add-cancellation",
        arity: 3,
        min_dim: 1,
        check: |_, ops| {
            let (a, b, c) = (ops[0], ops[1], ops[2]);
            if add(a, c)? == add(b, c)? && a != b {
                return fail(ops, &[], "A + C = B + C but A != B");
            }
            Ok(None)
        },
    },
    Law {
        name: "mul-associative",
        arity: 3,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b, c) = (ops[0], ops[1], ops[2]);
            if ctx.mul(&ctx.mul(a, b)?, c)? != ctx.mul(a, &ctx.mul(b, c)?)? {
                return fail(ops, &[], "(A * B) * C != A * (B * C)");
            }
            Ok(None)
        },
    },
    Law {
        name: "left-distributive",
        arity: 3,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b, c) = (ops[0], ops[1], ops[2]);
            if ctx.mul(a, &add(b, c)?)? != add(&ctx.mul(a, b)?, &ctx.mul(a, c)?)? {
                return fail(ops, &[], "A * (B + C) != A * B + A * C");
            }
            Ok(None)
        },
    },
    Law {
        name: "right-distributive",
        arity: 3,
        min_dim: 1,
        check: |ctx, ops| {
            let (a, b, c) = (ops[0], ops[1], ops[2]);
            if ctx.mul(&add(a, b)?, c)? != add(&ctx.mul(a, c)?, &ctx.mul(b, c)?)? {
                return fail(ops, &[], "(A + B) * C != A * C + B * C");
            }
            Ok(None)
        },
    },
];

/// Names of every law in the suite, in evaluation order.
pub fn law_names() -> impl Iterator<Item = &'static str> {
    LAWS.iter().map(|l| l.name)
}

/// Operands (and indices) on which a law fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub operands: Vec<Polymset>,
    pub indices: Vec<MultiIndex>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail(Counterexample),
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive { cases: u64 },
    Sampled { cases: u64, population: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub law: &'static str,
    pub status: LawStatus,
    pub coverage: Coverage,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        !matches!(self.status, LawStatus::Fail(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub universe: UniverseSpec,
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> + '_ {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, law: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law)
    }

    /// Report document: a list of `{law, universe, status, coverage,
    /// counterexample?}` records.
    pub fn to_json(&self) -> Value {
        let universe = json!({
            "dim": self.universe.dim,
            "max_index": self.universe.max_index,
            "max_mult": self.universe.max_mult,
        });
        let records = self
            .results
            .iter()
            .map(|r| {
                let mut rec = json!({
                    "law": r.law,
                    "universe": universe.clone(),
                    "status": match &r.status {
                        LawStatus::Pass => "pass",
                        LawStatus::Fail(_) => "fail",
                        LawStatus::NotApplicable(_) => "not-applicable",
                    },
                    "coverage": match &r.coverage {
                        Coverage::Exhaustive { cases } => json!({"mode": "exhaustive", "cases": cases}),
                        Coverage::Sampled { cases, population } => {
                            json!({"mode": "sampled", "cases": cases, "population": population})
                        }
                    },
                });
                match &r.status {
                    LawStatus::Fail(cx) => {
                        rec["counterexample"] = json!({
                            "operands": cx.operands.iter().map(interchange::to_json).collect::<Vec<_>>(),
                            "indices": cx.indices.iter().map(|i| i.coords().to_vec()).collect::<Vec<_>>(),
                            "detail": cx.detail,
                        });
                    }
                    LawStatus::NotApplicable(why) => rec["reason"] = json!(why),
                    LawStatus::Pass => {}
                }
                rec
            })
            .collect();
        Value::Array(records)
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coverage::Exhaustive { cases } => write!(f, "exhaustive, {cases} cases"),
            Coverage::Sampled { cases, population } => {
                write!(f, "sampled, {cases} of {population} cases")
            }
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe: {}", self.universe)?;
        for r in &self.results {
            match &r.status {
                LawStatus::Pass => writeln!(f, "PASS {:<34} ({})", r.law, r.coverage)?,
                LawStatus::NotApplicable(why) => writeln!(f, "SKIP {:<34} ({why})", r.law)?,
                LawStatus::Fail(cx) => {
                    writeln!(f, "FAIL {:<34} ({})", r.law, r.coverage)?;
                    writeln!(f, "     {}", cx.detail)?;
                    for (name, op) in ["A", "B", "C"].iter().zip(&cx.operands) {
                        writeln!(f, "     {name} = {op}")?;
                    }
                    for (k, i) in cx.indices.iter().enumerate() {
                        writeln!(f, "     index[{k}] = {i}")?;
                    }
                }
            }
        }
        let failed = self.failures().count();
        write!(f, "{} laws, {} failed", self.results.len(), failed)
    }
}
