//! The commutative semiring of natural multidimensional numbers.
//!
//! A polymset read as a number: addition adds multiplicities index by
//! index, and multiplication convolves over indices, so that the unit
//! generators multiply as `unit(i) * unit(j) = unit(i + j)`. `zero(m)` is
//! the empty polymset and `one(m)` is the unit at the origin.
//!
//! ```
//! use polymset::semiring::{add, mul, one, unit};
//! use polymset::{MultiIndex, Polymset};
//!
//! let x = unit(&MultiIndex::try_from([1, 0])?);
//! let one_plus_x = add(&one(2)?, &x)?;
//! let square = mul(&one_plus_x, &one_plus_x)?;
//! assert_eq!(square.to_string(), "{(0,0):1, (1,0):2, (2,0):1}");
//! # Ok::<(), polymset::Error>(())
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::error::Result;
use crate::index::MultiIndex;
use crate::polymset::{Multiplicity, Polymset};

/// Additive identity: the empty polymset.
pub fn zero(dim: usize) -> Result<Polymset> {
    Polymset::empty(dim)
}

/// Multiplicative identity: one copy at the origin.
pub fn one(dim: usize) -> Result<Polymset> {
    Ok(unit(&MultiIndex::origin(dim)?))
}

/// The generator with one copy at `idx`.
pub fn unit(idx: &MultiIndex) -> Polymset {
    let mut out = Polymset::empty(idx.dim()).expect("index has positive dimension");
    out.bump(idx.clone(), Multiplicity::one());
    out
}

/// Pointwise sum of multiplicities. Same operation as [`Polymset::msum`].
pub fn add(a: &Polymset, b: &Polymset) -> Result<Polymset> {
    a.msum(b)
}

/// Translates every index of `a` by `offset`.
pub fn shift(a: &Polymset, offset: &MultiIndex) -> Result<Polymset> {
    offset.expect_dim(a.dim())?;
    let entries = a
        .iter()
        .map(|(k, m)| Ok((k.checked_add(offset)?, m.clone())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(Polymset::from_map(a.dim(), entries))
}

/// Index convolution: the multiplicity at `s` is the sum of
/// `a[p] * b[q]` over all `p + q = s`.
pub fn mul(a: &Polymset, b: &Polymset) -> Result<Polymset> {
    a.expect_same_dim(b)?;
    let mut acc: BTreeMap<MultiIndex, Multiplicity> = BTreeMap::new();
    for (p, x) in a {
        for (q, y) in b {
            let s = p.checked_add(q)?;
            let prod = x * y;
            match acc.get_mut(&s) {
                Some(m) => *m += prod,
                None => {
                    acc.insert(s, prod);
                }
            }
        }
    }
    Ok(Polymset::from_map(a.dim(), acc))
}

/// Four-way comparison under addition.
///
/// Two numbers are comparable when one is obtained from the other by
/// adding a nonzero number, which is then the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tetratomy {
    Equal,
    /// `a = b + witness`, witness nonzero.
    GreaterBy(Polymset),
    /// `b = a + witness`, witness nonzero.
    LessBy(Polymset),
    Incomparable,
}

pub fn compare_tetratomy(a: &Polymset, b: &Polymset) -> Result<Tetratomy> {
    a.expect_same_dim(b)?;
    Ok(if a == b {
        Tetratomy::Equal
    } else if b.is_subpolymset_of(a) {
        Tetratomy::GreaterBy(a.msub(b)?)
    } else if a.is_subpolymset_of(b) {
        Tetratomy::LessBy(b.msub(a)?)
    } else {
        Tetratomy::Incomparable
    })
}

impl fmt::Display for Tetratomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tetratomy::Equal => f.write_str("Equal"),
            Tetratomy::GreaterBy(w) => write!(f, "GreaterBy({w})"),
            Tetratomy::LessBy(w) => write!(f, "LessBy({w})"),
            Tetratomy::Incomparable => f.write_str("Incomparable"),
        }
    }
}
