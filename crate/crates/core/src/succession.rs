//! Generating polymsets from the empty one, one copy at a time.
//!
//! [`Polymset::sc`] adds one copy of a polyment and [`Polymset::pd`]
//! removes one. Every polymset is reached from the empty polymset by a
//! finite chain of successor steps; [`trace_of`] returns one such chain
//! and [`generate`] replays it.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::polymset::{Multiplicity, Polymset};

impl Polymset {
    /// Multisuccessor: one more copy at `idx`.
    pub fn sc(&self, idx: &MultiIndex) -> Result<Polymset> {
        self.sc_pow(idx, &Multiplicity::one())
    }

    /// `alpha`-fold multisuccessor. `alpha = 0` is the identity.
    pub fn sc_pow(&self, idx: &MultiIndex, alpha: &Multiplicity) -> Result<Polymset> {
        idx.expect_dim(self.dim())?;
        let mut out = self.clone();
        out.bump(idx.clone(), alpha.clone());
        Ok(out)
    }

    /// Multipredecessor: one copy fewer at `idx`.
    ///
    /// Unlike [`Polymset::msub`], this fails when there is no copy to
    /// remove.
    pub fn pd(&self, idx: &MultiIndex) -> Result<Polymset> {
        idx.expect_dim(self.dim())?;
        if !self.contains(idx) {
            return Err(Error::NoSuchCopy(idx.to_string()));
        }
        let mut entries = self.clone().into_entries();
        let m = entries.get_mut(idx).expect("checked above");
        *m -= 1u32;
        if m.is_zero() {
            entries.remove(idx);
        }
        Ok(Polymset::from_map(self.dim(), entries))
    }
}

/// `successor` contains `base` and has exactly one more copy.
pub fn is_immediate_successor(successor: &Polymset, base: &Polymset) -> bool {
    base.is_subpolymset_of(successor) && successor.cardinality() == base.cardinality() + 1u32
}

/// `predecessor` is contained in `base` and has exactly one copy fewer.
pub fn is_immediate_predecessor(predecessor: &Polymset, base: &Polymset) -> bool {
    is_immediate_successor(base, predecessor)
}

/// Applies `sc` for every step, starting from the empty polymset.
pub fn generate<'a, I>(dim: usize, steps: I) -> Result<Polymset>
where
    I: IntoIterator<Item = &'a MultiIndex>,
{
    let mut out = Polymset::empty(dim)?;
    for idx in steps {
        idx.expect_dim(dim)?;
        out.bump(idx.clone(), Multiplicity::one());
    }
    Ok(out)
}

/// An ordered sequence of successor applications.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GenerationTrace {
    pub steps: Vec<MultiIndex>,
}

impl GenerationTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay(&self, dim: usize) -> Result<Polymset> {
        generate(dim, &self.steps)
    }
}

/// The lexicographic generation trace of `a`: each index, in order,
/// repeated by its multiplicity.
///
/// The trace has `cardinality(a)` steps, so it is only practical for
/// polymsets with modest multiplicities.
pub fn trace_of(a: &Polymset) -> GenerationTrace {
    let mut steps = Vec::new();
    for (idx, m) in a {
        let mut left = m.clone();
        while !left.is_zero() {
            steps.push(idx.clone());
            left -= 1u32;
        }
    }
    GenerationTrace { steps }
}
