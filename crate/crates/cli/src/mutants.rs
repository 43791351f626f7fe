//! Deliberately wrong multiplications for exercising the law checker.

use polymset::{Polymset, Result};

/// Cellwise product of multiplicities instead of convolution.
pub fn pointwise_mul(a: &Polymset, b: &Polymset) -> Result<Polymset> {
    let common = a.intersection(b)?;
    let cells = common
        .indices()
        .map(|k| Ok((k.clone(), a.multiplicity(k)? * b.multiplicity(k)?)))
        .collect::<Result<Vec<_>>>()?;
    Polymset::from_components(a.dim(), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polymset::semiring::one;

    #[test]
    fn breaks_the_identity() {
        let a = Polymset::from_components(2, [([1, 0], 3u32), ([0, 0], 2)]).unwrap();
        let p = pointwise_mul(&a, &one(2).unwrap()).unwrap();
        assert_eq!(p.to_string(), "{(0,0):2}");
    }
}
