//! Worked examples used throughout the guide and the test suites.
//!
//! Indices are 0-based positions in the listed domains.

use crate::domain::DomainBase;
use crate::polymset::Polymset;

/// Forms, materials and colours for the three-domain example.
pub fn solids_base() -> DomainBase {
    DomainBase::from_labels(&[
        ("form", &["cube", "pyramid", "sphere", "cone", "cylinder"]),
        ("material", &["metal", "plastic", "paper"]),
        (
            "colour",
            &["black", "white", "red", "yellow", "green", "blue"],
        ),
    ])
    .expect("static domain base")
}

/// One blue plastic cube, three black metal spheres, seven yellow paper
/// cones and five black metal cylinders.
pub fn solids() -> Polymset {
    Polymset::from_components(
        3,
        [
            ([0, 1, 5], 1u32),
            ([2, 0, 0], 3),
            ([3, 2, 3], 7),
            ([4, 0, 0], 5),
        ],
    )
    .expect("static polymset")
}

/// Forms and colours for the two-domain example.
pub fn shapes_base() -> DomainBase {
    DomainBase::from_labels(&[
        ("form", &["cube", "pyramid", "sphere", "cone"]),
        ("colour", &["black", "white", "red", "green", "blue"]),
    ])
    .expect("static domain base")
}

/// One blue cube, eleven red pyramids, three black spheres, seven green
/// cones and five black cones.
pub fn shapes() -> Polymset {
    Polymset::from_components(
        2,
        [
            ([0, 4], 1u32),
            ([1, 2], 11),
            ([2, 0], 3),
            ([3, 3], 7),
            ([3, 0], 5),
        ],
    )
    .expect("static polymset")
}

/// [`shapes`] plus one white pyramid.
pub fn shapes_plus_white_pyramid() -> Polymset {
    Polymset::from_components(
        2,
        [
            ([0, 4], 1u32),
            ([1, 2], 11),
            ([2, 0], 3),
            ([3, 3], 7),
            ([3, 0], 5),
            ([1, 1], 1),
        ],
    )
    .expect("static polymset")
}

/// [`shapes`] without one red pyramid.
pub fn shapes_minus_red_pyramid() -> Polymset {
    Polymset::from_components(
        2,
        [
            ([0, 4], 1u32),
            ([1, 2], 10),
            ([2, 0], 3),
            ([3, 3], 7),
            ([3, 0], 5),
        ],
    )
    .expect("static polymset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_fit_their_bases() {
        let base = solids_base();
        assert!(solids().indices().all(|i| base.contains(i)));
        let base = shapes_base();
        for p in [
            shapes(),
            shapes_plus_white_pyramid(),
            shapes_minus_red_pyramid(),
        ] {
            assert!(p.indices().all(|i| base.contains(i)));
        }
        let cube = shapes_base().resolve(&["cube", "blue"]).unwrap();
        assert_eq!(shapes().multiplicity(&cube).unwrap(), 1u32.into());
    }
}
