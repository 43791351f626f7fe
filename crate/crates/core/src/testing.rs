//! Unit-test helpers.

use crate::polymset::Polymset;

pub(crate) fn ps(dim: usize, comps: &[(&[u64], u64)]) -> Polymset {
    Polymset::from_components(dim, comps.iter().map(|&(k, m)| (k, m))).unwrap()
}
