use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::index::MultiIndex;

/// One named attribute domain with its ordered element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub name: String,
    pub elements: Vec<String>,
}

/// Labeling metadata for the coordinates of a polymset.
///
/// Coordinate `k` of an index names the `k`-th element (0-based) of the
/// corresponding domain. Operations never consult a domain base; it only
/// gives indices a readable meaning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainBase {
    domains: Vec<Domain>,
}

impl DomainBase {
    pub fn new(domains: Vec<Domain>) -> Result<Self> {
        if domains.is_empty() {
            return Err(Error::InvalidDomainBase("no domains".into()));
        }
        let mut names = HashSet::new();
        for d in &domains {
            if !names.insert(d.name.as_str()) {
                return Err(Error::InvalidDomainBase(format!(
                    "duplicate domain name {:?}",
                    d.name
                )));
            }
            let mut labels = HashSet::new();
            for e in &d.elements {
                if !labels.insert(e.as_str()) {
                    return Err(Error::InvalidDomainBase(format!(
                        "duplicate element {:?} in domain {:?}",
                        e, d.name
                    )));
                }
            }
        }
        Ok(DomainBase { domains })
    }

    /// Convenience constructor from string slices.
    pub fn from_labels(domains: &[(&str, &[&str])]) -> Result<Self> {
        Self::new(
            domains
                .iter()
                .map(|(name, elements)| Domain {
                    name: name.to_string(),
                    elements: elements.iter().map(|e| e.to_string()).collect(),
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.domains.len()
    }

    pub fn domains(&self) -> &[Domain] {
        &self.domains
    }

    /// Resolves one label per domain into an index.
    pub fn resolve(&self, labels: &[&str]) -> Result<MultiIndex> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        let coords = self
            .domains
            .iter()
            .zip(labels)
            .map(|(d, label)| {
                d.elements
                    .iter()
                    .position(|e| e == label)
                    .map(|p| p as u64)
                    .ok_or_else(|| {
                        Error::InvalidDomainBase(format!(
                            "{label:?} is not an element of {:?}",
                            d.name
                        ))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        MultiIndex::new(coords)
    }

    /// Element labels named by `idx`.
    pub fn labels(&self, idx: &MultiIndex) -> Result<Vec<&str>> {
        idx.expect_dim(self.dim())?;
        self.domains
            .iter()
            .zip(idx.coords())
            .map(|(d, &c)| {
                usize::try_from(c)
                    .ok()
                    .and_then(|c| d.elements.get(c))
                    .map(String::as_str)
                    .ok_or_else(|| Error::OutOfDomain {
                        index: idx.to_string(),
                    })
            })
            .collect()
    }

    pub fn contains(&self, idx: &MultiIndex) -> bool {
        self.labels(idx).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes() -> DomainBase {
        DomainBase::from_labels(&[
            ("form", &["cube", "pyramid"]),
            ("colour", &["black", "white", "red"]),
        ])
        .unwrap()
    }

    #[test]
    fn resolve_and_label() {
        let base = shapes();
        let idx = base.resolve(&["pyramid", "red"]).unwrap();
        assert_eq!(idx.coords(), &[1, 2]);
        assert_eq!(base.labels(&idx).unwrap(), vec!["pyramid", "red"]);
        assert_eq!(base.dim(), 2);
    }

    #[test]
    fn rejects_duplicates() {
        assert!(DomainBase::from_labels(&[("a", &["x"]), ("a", &["y"])]).is_err());
        assert!(DomainBase::from_labels(&[("a", &["x", "x"])]).is_err());
        assert!(DomainBase::new(vec![]).is_err());
    }

    #[test]
    fn out_of_range() {
        let base = shapes();
        let idx = MultiIndex::try_from([2, 0]).unwrap();
        assert!(!base.contains(&idx));
        assert!(base.resolve(&["sphere", "red"]).is_err());
        assert!(base.resolve(&["cube"]).is_err());
    }
}
