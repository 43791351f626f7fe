//! Set-level binary operations, reduction and production.
//!
//! Every binary operation here requires both operands to have the same
//! dimension and acts independently on each index.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::iter::Peekable;
use std::num::NonZeroU64;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::polymset::{Multiplicity, Polymset};

impl Polymset {
    /// Pointwise maximum.
    pub fn union(&self, other: &Polymset) -> Result<Polymset> {
        self.pointwise(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.max(b).clone(),
            (Some(m), None) | (None, Some(m)) => m.clone(),
            (None, None) => unreachable!(),
        })
    }

    /// Pointwise minimum.
    pub fn intersection(&self, other: &Polymset) -> Result<Polymset> {
        self.pointwise(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.min(b).clone(),
            _ => Multiplicity::zero(),
        })
    }

    /// Arithmetical addition: pointwise sum.
    pub fn msum(&self, other: &Polymset) -> Result<Polymset> {
        self.pointwise(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a + b,
            (Some(m), None) | (None, Some(m)) => m.clone(),
            (None, None) => unreachable!(),
        })
    }

    /// Arithmetical subtraction: pointwise difference saturating at zero.
    pub fn msub(&self, other: &Polymset) -> Result<Polymset> {
        self.pointwise(other, |a, b| match (a, b) {
            (Some(a), Some(b)) if a > b => a - b,
            (Some(a), None) => a.clone(),
            _ => Multiplicity::zero(),
        })
    }

    /// Symmetric difference: pointwise absolute difference.
    pub fn symdiff(&self, other: &Polymset) -> Result<Polymset> {
        self.pointwise(other, |a, b| match (a, b) {
            (Some(a), Some(b)) if a >= b => a - b,
            (Some(a), Some(b)) => b - a,
            (Some(m), None) | (None, Some(m)) => m.clone(),
            (None, None) => unreachable!(),
        })
    }

    /// Removes domain `axis`, summing multiplicities along it.
    ///
    /// Cardinality is preserved. A one-dimensional polymset cannot be
    /// reduced further; its full reduction is [`Polymset::cardinality`].
    pub fn reduce(&self, axis: usize) -> Result<Polymset> {
        if self.dim() < 2 {
            return Err(Error::InvalidDimension(self.dim()));
        }
        if axis >= self.dim() {
            return Err(Error::InvalidAxis {
                axis,
                dim: self.dim(),
            });
        }
        let mut out = Polymset::empty(self.dim() - 1)?;
        for (k, m) in self {
            out.bump(MultiIndex::new(k.without_axis(axis))?, m.clone());
        }
        Ok(out)
    }

    /// Inserts a new domain at position `axis` (0..=dim), distributing each
    /// multiplicity over new coordinates with `splitter`.
    ///
    /// For every component the splitter must return distinct coordinates
    /// whose multiplicities add up to the component's multiplicity, so that
    /// `reduce(axis)` undoes the production.
    pub fn produce<F>(&self, axis: usize, mut splitter: F) -> Result<Polymset>
    where
        F: FnMut(&MultiIndex, &Multiplicity) -> Vec<(u64, Multiplicity)>,
    {
        if axis > self.dim() {
            return Err(Error::InvalidAxis {
                axis,
                dim: self.dim(),
            });
        }
        let mut out = BTreeMap::new();
        for (k, m) in self {
            let parts = splitter(k, m);
            let mut seen = BTreeSet::new();
            let mut total = Multiplicity::zero();
            for (coord, part) in parts {
                if !seen.insert(coord) {
                    return Err(Error::InvalidSplitter {
                        index: k.to_string(),
                        coordinate: coord,
                    });
                }
                total += &part;
                out.insert(k.with_axis(axis, coord), part);
            }
            if &total != m {
                return Err(Error::ConservationViolation {
                    index: k.to_string(),
                    expected: m.to_string(),
                    found: total.to_string(),
                });
            }
        }
        Ok(Polymset::from_map(self.dim() + 1, out))
    }

    fn pointwise<F>(&self, other: &Polymset, f: F) -> Result<Polymset>
    where
        F: Fn(Option<&Multiplicity>, Option<&Multiplicity>) -> Multiplicity,
    {
        self.expect_same_dim(other)?;
        let entries = MergeJoin::new(self, other)
            .map(|(k, a, b)| (k.clone(), f(a, b)))
            .collect();
        Ok(Polymset::from_map(self.dim(), entries))
    }
}

type EntryIter<'a> = std::collections::btree_map::Iter<'a, MultiIndex, Multiplicity>;

/// Walks the union of two supports in index order.
struct MergeJoin<'a> {
    left: Peekable<EntryIter<'a>>,
    right: Peekable<EntryIter<'a>>,
}

impl<'a> MergeJoin<'a> {
    fn new(a: &'a Polymset, b: &'a Polymset) -> Self {
        MergeJoin {
            left: a.into_iter().peekable(),
            right: b.into_iter().peekable(),
        }
    }
}

impl<'a> Iterator for MergeJoin<'a> {
    type Item = (
        &'a MultiIndex,
        Option<&'a Multiplicity>,
        Option<&'a Multiplicity>,
    );

    fn next(&mut self) -> Option<Self::Item> {
        let order = match (self.left.peek(), self.right.peek()) {
            (None, None) => return None,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some((l, _)), Some((r, _))) => l.cmp(r),
        };
        match order {
            Ordering::Less => self.left.next().map(|(k, a)| (k, Some(a), None)),
            Ordering::Greater => self.right.next().map(|(k, b)| (k, None, Some(b))),
            Ordering::Equal => {
                let (k, a) = self.left.next()?;
                let (_, b) = self.right.next()?;
                Some((k, Some(a), Some(b)))
            }
        }
    }
}

/// Built-in splitters for [`Polymset::produce`].
pub mod splitters {
    use super::*;

    /// Puts the whole multiplicity at new coordinate 0.
    pub fn delta_zero(_: &MultiIndex, mult: &Multiplicity) -> Vec<(u64, Multiplicity)> {
        vec![(0, mult.clone())]
    }

    /// Splits each multiplicity evenly over coordinates `0..parts`; the
    /// remainder goes to coordinate 0.
    pub fn even_split(
        parts: NonZeroU64,
    ) -> impl Fn(&MultiIndex, &Multiplicity) -> Vec<(u64, Multiplicity)> {
        move |_, mult| {
            let n = Multiplicity::from(parts.get());
            let share = mult / &n;
            let rem = mult % &n;
            (0..parts.get())
                .map(|c| {
                    let m = if c == 0 { &share + &rem } else { share.clone() };
                    (c, m)
                })
                .collect()
        }
    }
}
