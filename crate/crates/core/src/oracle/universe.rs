use std::fmt;

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::polymset::{Multiplicity, Polymset};

/// A finite universe of polymsets: every polymset whose support lies in the
/// grid `0..=max_index` (per axis) and whose multiplicities are at most
/// `max_mult`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniverseSpec {
    pub dim: usize,
    pub max_index: Vec<u64>,
    pub max_mult: u64,
}

impl UniverseSpec {
    pub fn new(max_index: impl Into<Vec<u64>>, max_mult: u64) -> Result<Self> {
        let max_index = max_index.into();
        if max_index.is_empty() {
            return Err(Error::InvalidDimension(0));
        }
        Ok(UniverseSpec {
            dim: max_index.len(),
            max_index,
            max_mult,
        })
    }

    /// Grid cells in lexicographic order.
    pub fn cells(&self) -> Result<Vec<MultiIndex>> {
        if self.dim == 0 || self.max_index.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.max_index.len(),
            });
        }
        let count = self.max_index.iter().try_fold(1u64, |acc, &m| {
            m.checked_add(1).and_then(|n| acc.checked_mul(n))
        });
        match count {
            Some(n) if n <= 1 << 20 => {}
            _ => {
                return Err(Error::UniverseTooLarge(format!(
                    "grid {:?} has too many cells",
                    self.max_index
                )))
            }
        }
        let mut cells = vec![Vec::with_capacity(self.dim)];
        for &bound in &self.max_index {
            cells = cells
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        cells.into_iter().map(MultiIndex::new).collect()
    }

    /// Number of polymsets in the universe, `(max_mult + 1) ^ cells`.
    pub fn size(&self) -> Result<u64> {
        let cells = self.cells()?.len();
        let base = self.max_mult.checked_add(1);
        base.and_then(|b| u32::try_from(cells).ok().and_then(|c| b.checked_pow(c)))
            .ok_or_else(|| Error::UniverseTooLarge(format!("{self} does not fit in 64 bits")))
    }
}

impl fmt::Display for UniverseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.max_index.iter().map(u64::to_string).collect();
        write!(
            f,
            "dim={} max_index=({}) max_mult={}",
            self.dim,
            idx.join(","),
            self.max_mult
        )
    }
}

/// Deterministic, duplicate-free enumeration of a [`UniverseSpec`].
///
/// Element `n` is decoded from the base-`max_mult + 1` digits of `n`, the
/// first grid cell being the least significant digit, so enumeration starts
/// with the empty polymset.
#[derive(Debug, Clone)]
pub struct Universe {
    dim: usize,
    cells: Vec<MultiIndex>,
    base: u64,
    size: u64,
    next: u64,
}

impl Universe {
    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn cells(&self) -> &[MultiIndex] {
        &self.cells
    }

    /// The `n`-th element in enumeration order.
    pub fn nth_element(&self, mut n: u64) -> Polymset {
        debug_assert!(n < self.size);
        let mut out = Polymset::empty(self.dim).expect("positive dimension");
        for cell in &self.cells {
            if n == 0 {
                break;
            }
            let digit = n % self.base;
            n /= self.base;
            out.bump(cell.clone(), Multiplicity::from(digit));
        }
        out
    }
}

impl Iterator for Universe {
    type Item = Polymset;

    fn next(&mut self) -> Option<Polymset> {
        if self.next >= self.size {
            return None;
        }
        let item = self.nth_element(self.next);
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.size - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

pub fn enumerate_universe(spec: &UniverseSpec) -> Result<Universe> {
    let size = spec.size()?;
    Ok(Universe {
        dim: spec.dim,
        cells: spec.cells()?,
        base: spec.max_mult + 1,
        size,
        next: 0,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::testing::ps;

    #[test]
    fn single_cell() {
        let spec = UniverseSpec::new([0, 0], 2).unwrap();
        let all: Vec<_> = enumerate_universe(&spec).unwrap().collect();
        assert_eq!(
            all,
            vec![
                Polymset::empty(2).unwrap(),
                ps(2, &[(&[0, 0], 1)]),
                ps(2, &[(&[0, 0], 2)])
            ]
        );
    }

    #[test]
    fn counts_and_uniqueness() {
        for (mult, expected) in [(1, 16), (2, 81)] {
            let spec = UniverseSpec::new([1, 1], mult).unwrap();
            let all: Vec<_> = enumerate_universe(&spec).unwrap().collect();
            assert_eq!(all.len(), expected);
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), expected);
            assert!(all[0].is_empty());
            assert!(all.iter().all(|p| p.height() <= Multiplicity::from(mult)));
        }
    }

    #[test]
    fn cells_are_lexicographic() {
        let spec = UniverseSpec::new([1, 2], 1).unwrap();
        let cells = spec.cells().unwrap();
        assert_eq!(cells.len(), 6);
        assert!(cells.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn too_large() {
        let spec = UniverseSpec::new([7, 7], 3).unwrap();
        assert!(matches!(spec.size(), Err(Error::UniverseTooLarge(_))));
        assert!(enumerate_universe(&spec).is_err());
        assert!(UniverseSpec::new(Vec::<u64>::new(), 1).is_err());
    }
}
