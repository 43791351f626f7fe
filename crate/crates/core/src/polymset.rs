use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::index::MultiIndex;

/// Arbitrary-precision degree of multiplicity.
pub type Multiplicity = BigUint;

/// A finite multiset over the Cartesian product of `dim` attribute domains.
///
/// Entries map each polyment's [`MultiIndex`] to its multiplicity. Only
/// positive multiplicities are stored, so two values are equal exactly when
/// they denote the same polymset. The same value doubles as a natural
/// multidimensional number in [`crate::semiring`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polymset {
    dim: usize,
    entries: BTreeMap<MultiIndex, Multiplicity>,
}

impl Polymset {
    /// The empty polymset of dimension `dim`.
    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(Polymset {
            dim,
            entries: BTreeMap::new(),
        })
    }

    /// Builds a polymset from `(index, multiplicity)` components.
    ///
    /// Repeated indices have their multiplicities summed and zero
    /// multiplicities are dropped.
    ///
    /// ```
    /// use polymset::Polymset;
    ///
    /// let a = Polymset::from_components(2, [([1, 1], 2u32), ([1, 1], 3), ([0, 0], 0)])?;
    /// assert_eq!(a.to_string(), "{(1,1):5}");
    /// # Ok::<(), polymset::Error>(())
    /// ```
    pub fn from_components<K, M, I>(dim: usize, comps: I) -> Result<Self>
    where
        K: AsRef<[u64]>,
        M: Into<Multiplicity>,
        I: IntoIterator<Item = (K, M)>,
    {
        let mut out = Polymset::empty(dim)?;
        for (key, mult) in comps {
            let idx = MultiIndex::new(key.as_ref().to_vec())?;
            idx.expect_dim(dim)?;
            out.bump(idx, mult.into());
        }
        Ok(out)
    }

    /// Assembles a polymset from a map that may hold zero multiplicities.
    pub(crate) fn from_map(dim: usize, mut entries: BTreeMap<MultiIndex, Multiplicity>) -> Self {
        debug_assert!(dim > 0);
        debug_assert!(entries.keys().all(|k| k.dim() == dim));
        entries.retain(|_, m| !m.is_zero());
        Polymset { dim, entries }
    }

    /// Adds `mult` copies at `idx`. Keeps canonical form.
    pub(crate) fn bump(&mut self, idx: MultiIndex, mult: Multiplicity) {
        if mult.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            btree_map::Entry::Occupied(mut e) => *e.get_mut() += mult,
            btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct polyments (size of the support).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Components in lexicographic index order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&MultiIndex, &Multiplicity)> + '_ {
        self.entries.iter()
    }

    pub fn indices(&self) -> impl ExactSizeIterator<Item = &MultiIndex> + '_ {
        self.entries.keys()
    }

    /// Multiplicity of `idx`, zero when absent.
    pub fn multiplicity(&self, idx: &MultiIndex) -> Result<Multiplicity> {
        idx.expect_dim(self.dim)?;
        Ok(self.entries.get(idx).cloned().unwrap_or_default())
    }

    /// Characteristic function: whether `idx` occurs at all.
    pub fn contains(&self, idx: &MultiIndex) -> bool {
        self.entries.contains_key(idx)
    }

    /// One copy of every polyment present in `self`.
    pub fn support(&self) -> Polymset {
        Polymset {
            dim: self.dim,
            entries: self
                .entries
                .keys()
                .map(|k| (k.clone(), Multiplicity::from(1u32)))
                .collect(),
        }
    }

    /// Total number of copies.
    pub fn cardinality(&self) -> Multiplicity {
        self.entries.values().sum()
    }

    /// Greatest multiplicity, zero for the empty polymset.
    pub fn height(&self) -> Multiplicity {
        self.entries.values().max().cloned().unwrap_or_default()
    }

    /// `self ⊆ other`: equal dimension and no multiplicity exceeds the
    /// corresponding one in `other`.
    pub fn is_subpolymset_of(&self, other: &Polymset) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .all(|(k, a)| other.entries.get(k).is_some_and(|b| a <= b))
    }

    /// Same dimension and same support.
    pub fn is_similar_to(&self, other: &Polymset) -> bool {
        self.dim == other.dim && self.entries.keys().eq(other.entries.keys())
    }

    /// All pairwise relations between `self` and `other`.
    pub fn relate(&self, other: &Polymset) -> RelationReport {
        let equicardinal = self.cardinality() == other.cardinality();
        let equidimensional = self.dim == other.dim;
        RelationReport {
            equal: self == other,
            similar: self.is_similar_to(other),
            left_sub_right: self.is_subpolymset_of(other),
            right_sub_left: other.is_subpolymset_of(self),
            equicardinal,
            equidimensional,
            equivalent: equicardinal && equidimensional,
        }
    }

    /// Boundedness predicates.
    ///
    /// `n_bounded` is reported when `n` is given; `individually_bounded`
    /// when `bounds` is given. Indices without a bound are unbounded.
    pub fn boundedness(
        &self,
        n: Option<&Multiplicity>,
        bounds: Option<&BTreeMap<MultiIndex, Multiplicity>>,
    ) -> Result<BoundednessReport> {
        if let Some(bounds) = bounds {
            for k in bounds.keys() {
                k.expect_dim(self.dim)?;
            }
        }
        let mut values = self.entries.values();
        let constant = match values.next() {
            None => true,
            Some(first) => values.all(|m| m == first),
        };
        let n_bounded = n.map(|n| self.height() <= *n);
        let individually_bounded = bounds.map(|bounds| {
            self.entries
                .iter()
                .all(|(k, m)| bounds.get(k).is_none_or(|b| m <= b))
        });
        Ok(BoundednessReport {
            constant,
            n_bounded,
            individually_bounded,
        })
    }

    pub(crate) fn expect_same_dim(&self, other: &Polymset) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    pub(crate) fn into_entries(self) -> BTreeMap<MultiIndex, Multiplicity> {
        self.entries
    }
}

impl<'a> IntoIterator for &'a Polymset {
    type Item = (&'a MultiIndex, &'a Multiplicity);
    type IntoIter = btree_map::Iter<'a, MultiIndex, Multiplicity>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Sparse text form: `{(0,0):1, (1,1):2}`, or `{dim=2}` when empty.
impl fmt::Display for Polymset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "{{dim={}}}", self.dim);
        }
        f.write_str("{")?;
        for (i, (k, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{m}")?;
        }
        f.write_str("}")
    }
}

/// Outcome of [`Polymset::relate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationReport {
    pub equal: bool,
    /// Equal dimension and identical supports. A polymset is similar to
    /// itself.
    pub similar: bool,
    pub left_sub_right: bool,
    pub right_sub_left: bool,
    pub equicardinal: bool,
    pub equidimensional: bool,
    /// Both equicardinal and equidimensional.
    pub equivalent: bool,
}

/// Outcome of [`Polymset::boundedness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundednessReport {
    /// Every stored multiplicity is the same. Vacuously true when empty.
    pub constant: bool,
    pub n_bounded: Option<bool>,
    pub individually_bounded: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{shapes, solids};
    use crate::testing::ps;

    fn idx(c: &[u64]) -> MultiIndex {
        MultiIndex::new(c.to_vec()).unwrap()
    }

    #[test]
    fn empty_requires_positive_dim() {
        assert_eq!(Polymset::empty(0), Err(Error::InvalidDimension(0)));
        let e = Polymset::empty(2).unwrap();
        assert_eq!(e.dim(), 2);
        assert!(e.is_empty());
        assert_eq!(Polymset::empty(3).unwrap().cardinality(), 0u32.into());
        assert_eq!(e, Polymset::empty(2).unwrap());
        assert_ne!(e, Polymset::empty(3).unwrap());
    }

    #[test]
    fn from_components_canonicalizes() {
        assert_eq!(ps(2, &[(&[0, 0], 0)]), Polymset::empty(2).unwrap());
        assert_eq!(ps(2, &[(&[1, 1], 2), (&[1, 1], 3)]), ps(2, &[(&[1, 1], 5)]));
        assert_eq!(
            Polymset::from_components(2, [([0u64, 1, 2], 1u32)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn solids_queries() {
        let a = solids();
        assert_eq!(a.multiplicity(&idx(&[3, 2, 3])).unwrap(), 7u32.into());
        assert_eq!(a.cardinality(), 16u32.into());
        assert_eq!(a.height(), 7u32.into());
        assert_eq!(
            a.support(),
            ps(
                3,
                &[
                    (&[0, 1, 5], 1),
                    (&[2, 0, 0], 1),
                    (&[3, 2, 3], 1),
                    (&[4, 0, 0], 1)
                ]
            )
        );
    }

    #[test]
    fn multiplicity_edge_cases() {
        let e = Polymset::empty(2).unwrap();
        assert_eq!(e.multiplicity(&idx(&[0, 0])).unwrap(), 0u32.into());
        let a = ps(2, &[(&[1, 1], 5)]);
        assert_eq!(a.multiplicity(&idx(&[1, 0])).unwrap(), 0u32.into());
        assert!(matches!(
            a.multiplicity(&idx(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn support_and_height() {
        let a = shapes();
        assert_eq!(a.height(), 11u32.into());
        assert_eq!(a.cardinality(), 27u32.into());
        assert_eq!(a.support().support(), a.support());
        assert_eq!(a.support().height(), 1u32.into());
        let e = Polymset::empty(2).unwrap();
        assert_eq!(e.support(), e);
        assert_eq!(e.height(), 0u32.into());
    }

    #[test]
    fn relate_reflexive() {
        let a = shapes();
        let r = a.relate(&a);
        assert!(r.equal && r.similar && r.left_sub_right && r.right_sub_left);
        assert!(r.equicardinal && r.equidimensional && r.equivalent);
    }

    #[test]
    fn relate_componentwise() {
        let r = ps(2, &[(&[0, 0], 1)]).relate(&ps(2, &[(&[0, 0], 2)]));
        assert_eq!(
            r,
            RelationReport {
                equal: false,
                similar: true,
                left_sub_right: true,
                right_sub_left: false,
                equicardinal: false,
                equidimensional: true,
                equivalent: false,
            }
        );
    }

    #[test]
    fn relate_across_dimensions() {
        let r = ps(2, &[(&[0, 0], 3)]).relate(&ps(1, &[(&[0], 1), (&[1], 2)]));
        assert!(!r.equidimensional);
        assert!(r.equicardinal);
        assert!(!r.equivalent);
        assert!(!r.similar && !r.left_sub_right && !r.right_sub_left);
    }

    #[test]
    fn boundedness_cases() {
        let two = Multiplicity::from(2u32);
        let r = ps(2, &[(&[0, 0], 2), (&[1, 1], 2)])
            .boundedness(Some(&two), None)
            .unwrap();
        assert!(r.constant);
        assert_eq!(r.n_bounded, Some(true));
        assert_eq!(r.individually_bounded, None);

        let ten = Multiplicity::from(10u32);
        let r = shapes().boundedness(Some(&ten), None).unwrap();
        assert_eq!(r.n_bounded, Some(false));
        assert!(!r.constant);

        let zero = Multiplicity::from(0u32);
        let r = Polymset::empty(2)
            .unwrap()
            .boundedness(Some(&zero), None)
            .unwrap();
        assert!(r.constant);
        assert_eq!(r.n_bounded, Some(true));
    }

    #[test]
    fn individual_bounds() {
        let a = ps(2, &[(&[0, 0], 3), (&[1, 0], 1)]);
        let mut bounds = BTreeMap::new();
        bounds.insert(idx(&[0, 0]), Multiplicity::from(3u32));
        assert_eq!(
            a.boundedness(None, Some(&bounds))
                .unwrap()
                .individually_bounded,
            Some(true)
        );
        bounds.insert(idx(&[1, 0]), Multiplicity::from(0u32));
        assert_eq!(
            a.boundedness(None, Some(&bounds))
                .unwrap()
                .individually_bounded,
            Some(false)
        );
        bounds.insert(idx(&[1]), Multiplicity::from(0u32));
        assert!(matches!(
            a.boundedness(None, Some(&bounds)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polymset::empty(2).unwrap().to_string(), "{dim=2}");
        assert_eq!(
            ps(2, &[(&[1, 1], 2), (&[0, 0], 1)]).to_string(),
            "{(0,0):1, (1,1):2}"
        );
    }
}
