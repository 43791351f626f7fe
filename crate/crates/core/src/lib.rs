//! Polymultisets and natural multidimensional numbers.
//!
//! A [`Polymset`] is a finite multiset over the Cartesian product of `m`
//! attribute domains, stored sparsely as a map from [`MultiIndex`] to a
//! positive arbitrary-precision multiplicity. The crate provides
//!
//! - set-level queries and operations: support, cardinality, height,
//!   union, intersection, arithmetical sum and difference, symmetric
//!   difference, reduction and production of dimension ([`ops`]);
//! - the successor and predecessor functions that generate every polymset
//!   from the empty one ([`succession`]);
//! - the commutative semiring of natural `m`-numbers with convolution
//!   multiplication and four-way comparison ([`semiring`]);
//! - independent recursive reference arithmetic and an exhaustive law
//!   checker over finite universes ([`oracle`]);
//! - a JSON interchange format ([`interchange`]).
//!
//! All values are immutable and every operation is a pure function.
//!
//! ```
//! use polymset::{MultiIndex, Polymset};
//!
//! let a = Polymset::from_components(2, [([0, 0], 2u32), ([1, 0], 1)])?;
//! let b = a.sc(&MultiIndex::try_from([1, 1])?)?;
//! assert_eq!(b.cardinality(), 4u32.into());
//! assert!(polymset::succession::is_immediate_successor(&b, &a));
//! # Ok::<(), polymset::Error>(())
//! ```

pub mod domain;
mod error;
mod index;
pub mod interchange;
pub mod ops;
pub mod oracle;
mod polymset;
pub mod samples;
pub mod semiring;
pub mod succession;

#[cfg(test)]
mod testing;

pub use crate::domain::{Domain, DomainBase};
pub use crate::error::{Error, Result};
pub use crate::index::MultiIndex;
pub use crate::polymset::{BoundednessReport, Multiplicity, Polymset, RelationReport};
pub use crate::semiring::Tetratomy;

// The guide's code listings run as doc-tests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polymsets.md")]
    mod polymsets {}
    #[doc = include_str!("../../../book/src/operations.md")]
    mod operations {}
    #[doc = include_str!("../../../book/src/succession.md")]
    mod succession {}
    #[doc = include_str!("../../../book/src/semiring.md")]
    mod semiring {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
}
