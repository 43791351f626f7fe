use std::fmt;

use crate::error::{Error, Result};

/// Address of one polyment: a tuple of non-negative coordinates, one per
/// domain.
///
/// Ordering is lexicographic over the coordinates, which is the order
/// polymsets store and print their entries in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u64>);

impl MultiIndex {
    /// Builds an index. The tuple must not be empty.
    pub fn new(coords: impl Into<Vec<u64>>) -> Result<Self> {
        let coords = coords.into();
        if coords.is_empty() {
            return Err(Error::InvalidDimension(0));
        }
        Ok(MultiIndex(coords))
    }

    /// The all-zeros index of the given dimension.
    pub fn origin(dim: usize) -> Result<Self> {
        Self::new(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise sum, failing on coordinate overflow.
    pub fn checked_add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        self.expect_dim(other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::IndexOverflow))
            .collect::<Result<Vec<_>>>()
            .map(MultiIndex)
    }

    /// The index with coordinate `axis` removed.
    pub(crate) fn without_axis(&self, axis: usize) -> Vec<u64> {
        let mut coords = self.0.clone();
        coords.remove(axis);
        coords
    }

    /// The index with `coord` inserted at position `axis`.
    pub(crate) fn with_axis(&self, axis: usize, coord: u64) -> MultiIndex {
        let mut coords = self.0.clone();
        coords.insert(axis, coord);
        MultiIndex(coords)
    }

    pub(crate) fn expect_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl AsRef<[u64]> for MultiIndex {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

impl TryFrom<Vec<u64>> for MultiIndex {
    type Error = Error;

    fn try_from(coords: Vec<u64>) -> Result<Self> {
        MultiIndex::new(coords)
    }
}

impl TryFrom<&[u64]> for MultiIndex {
    type Error = Error;

    fn try_from(coords: &[u64]) -> Result<Self> {
        MultiIndex::new(coords.to_vec())
    }
}

impl<const N: usize> TryFrom<[u64; N]> for MultiIndex {
    type Error = Error;

    fn try_from(coords: [u64; N]) -> Result<Self> {
        MultiIndex::new(coords.to_vec())
    }
}
