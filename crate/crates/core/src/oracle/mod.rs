//! Reference arithmetic and exhaustive law checking.
//!
//! [`add_via_successors`] and [`mul_recursive`] compute sums and products
//! from the successor function alone, by structural recursion on the right
//! operand. They share no code with [`crate::semiring`] and exist to certify
//! it. Their recursion depth grows with the cardinality of the operands, so
//! keep them to small inputs.

mod laws;
mod universe;

pub use laws::{
    check_laws, law_names, Counterexample, Coverage, LawChecker, LawReport, LawResult, LawStatus,
    MulFn, DEFAULT_BUDGET,
};
pub use universe::{enumerate_universe, Universe, UniverseSpec};

use crate::error::Result;
use crate::index::MultiIndex;
use crate::polymset::Polymset;

/// `a + 0 = a` and `a + sc(b', i) = sc(a + b', i)`.
///
/// Units are peeled from `b` in lexicographic index order.
pub fn add_via_successors(a: &Polymset, b: &Polymset) -> Result<Polymset> {
    a.expect_same_dim(b)?;
    match b.indices().next() {
        None => Ok(a.clone()),
        Some(i) => {
            let rest = b.pd(i)?;
            add_via_successors(a, &rest)?.sc(i)
        }
    }
}

/// `a * 0 = 0` and `a * sc(b', i) = a * b' + (a shifted by i)`.
///
/// Units are peeled from `b` in lexicographic index order.
pub fn mul_recursive(a: &Polymset, b: &Polymset) -> Result<Polymset> {
    a.expect_same_dim(b)?;
    match b.indices().next() {
        None => Polymset::empty(a.dim()),
        Some(i) => {
            let rest = b.pd(i)?;
            add_via_successors(&mul_recursive(a, &rest)?, &translate(a, i)?)
        }
    }
}

/// Rebuilds `a` from the empty polymset with every index moved by `offset`.
fn translate(a: &Polymset, offset: &MultiIndex) -> Result<Polymset> {
    let mut out = Polymset::empty(a.dim())?;
    for (k, m) in a {
        out = out.sc_pow(&k.checked_add(offset)?, m)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::samples::shapes;
    use crate::semiring::{add, mul, one, unit, zero};
    use crate::testing::ps;

    #[test]
    fn add_base_cases() {
        let a = shapes();
        assert_eq!(add_via_successors(&a, &zero(2).unwrap()).unwrap(), a);
        let i = MultiIndex::try_from([2, 2]).unwrap();
        assert_eq!(
            add_via_successors(&a, &unit(&i)).unwrap(),
            a.sc(&i).unwrap()
        );
    }

    #[test]
    fn mul_base_cases() {
        let a = ps(2, &[(&[0, 0], 1), (&[0, 1], 2), (&[1, 1], 1)]);
        assert_eq!(
            mul_recursive(&a, &zero(2).unwrap()).unwrap(),
            zero(2).unwrap()
        );
        assert_eq!(mul_recursive(&a, &one(2).unwrap()).unwrap(), a);
    }

    #[test]
    fn mul_recursive_binomial() {
        // a * a with a = {(0,0):1, (1,0):1}, unrolled by hand:
        //   a * {(1,0):1}            = {(1,0):1, (2,0):1}
        //   a * a = that + a shifted by (0,0) = {(0,0):1, (1,0):2, (2,0):1}
        let a = ps(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let expected = ps(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[2, 0], 1)]);
        assert_eq!(mul_recursive(&a, &a).unwrap(), expected);
        assert_eq!(mul(&a, &a).unwrap(), expected);
    }

    #[test]
    fn agrees_on_small_samples() {
        let a = ps(2, &[(&[0, 2], 2), (&[1, 0], 1), (&[3, 1], 1)]);
        let b = ps(2, &[(&[0, 0], 1), (&[2, 1], 3)]);
        assert_eq!(add_via_successors(&a, &b).unwrap(), add(&a, &b).unwrap());
        assert_eq!(mul_recursive(&a, &b).unwrap(), mul(&a, &b).unwrap());
        assert_eq!(mul_recursive(&b, &a).unwrap(), mul(&a, &b).unwrap());
    }

    #[test]
    fn dimension_checked() {
        let a = one(2).unwrap();
        let b = one(1).unwrap();
        assert!(matches!(
            add_via_successors(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            mul_recursive(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
