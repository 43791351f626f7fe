use std::num::NonZeroU64;

use num_bigint::BigUint;
use polymset::ops::splitters::{delta_zero, even_split};
use polymset::oracle::{add_via_successors, mul_recursive};
use polymset::semiring::{add, compare_tetratomy, mul, one, shift, zero, Tetratomy};
use polymset::succession::{generate, is_immediate_predecessor, is_immediate_successor, trace_of};
use polymset::{MultiIndex, Polymset};
use proptest::prelude::*;

const DIM: usize = 2;

fn index(dim: usize, max: u64) -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(0..=max, dim).prop_map(|c| MultiIndex::new(c).unwrap())
}

fn polymset(dim: usize, max_index: u64, max_mult: u64) -> impl Strategy<Value = Polymset> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_index, dim), 0..=max_mult),
        0..8,
    )
    .prop_map(move |comps| Polymset::from_components(dim, comps).unwrap())
}

fn small() -> impl Strategy<Value = Polymset> {
    polymset(DIM, 4, 6)
}

fn canonical(p: &Polymset) -> bool {
    p.iter()
        .all(|(k, m)| k.dim() == p.dim() && *m > BigUint::from(0u32))
}

proptest! {
    #[test]
    fn outputs_are_canonical(a in small(), b in small()) {
        for p in [
            a.union(&b).unwrap(),
            a.intersection(&b).unwrap(),
            a.msum(&b).unwrap(),
            a.msub(&b).unwrap(),
            a.symdiff(&b).unwrap(),
            mul(&a, &b).unwrap(),
            a.reduce(0).unwrap(),
        ] {
            prop_assert!(canonical(&p));
        }
    }

    #[test]
    fn lattice_laws(a in small(), b in small(), c in small()) {
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        prop_assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
        prop_assert_eq!(
            a.union(&b).unwrap().union(&c).unwrap(),
            a.union(&b.union(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersection(&b).unwrap().intersection(&c).unwrap(),
            a.intersection(&b.intersection(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.union(&a.intersection(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.intersection(&a.union(&b).unwrap()).unwrap(), a.clone());
    }

    #[test]
    fn pointwise_identities(a in small(), b in small(), extra in index(DIM, 6)) {
        let u = a.union(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        let s = a.msum(&b).unwrap();
        let d = a.msub(&b).unwrap();
        let x = a.symdiff(&b).unwrap();
        let probes: Vec<MultiIndex> = a.indices().chain(b.indices()).cloned()
            .chain(std::iter::once(extra)).collect();
        for k in &probes {
            let (ma, mb) = (a.multiplicity(k).unwrap(), b.multiplicity(k).unwrap());
            prop_assert_eq!(u.multiplicity(k).unwrap(), ma.clone().max(mb.clone()));
            prop_assert_eq!(i.multiplicity(k).unwrap(), ma.clone().min(mb.clone()));
            prop_assert_eq!(s.multiplicity(k).unwrap(), &ma + &mb);
            let sat = if ma > mb { &ma - &mb } else { BigUint::from(0u32) };
            prop_assert_eq!(d.multiplicity(k).unwrap(), sat);
            let abs = if ma > mb { &ma - &mb } else { &mb - &ma };
            prop_assert_eq!(x.multiplicity(k).unwrap(), abs);
        }
    }

    #[test]
    fn symdiff_is_sum_of_differences(a in small(), b in small()) {
        prop_assert_eq!(
            a.symdiff(&b).unwrap(),
            a.msub(&b).unwrap().msum(&b.msub(&a).unwrap()).unwrap()
        );
    }

    #[test]
    fn cardinality_morphisms(a in small(), b in small()) {
        prop_assert_eq!(a.msum(&b).unwrap().cardinality(), a.cardinality() + b.cardinality());
        let diff = a.msub(&b).unwrap().cardinality();
        prop_assert!(&diff + b.cardinality() >= a.cardinality());
        for axis in 0..DIM {
            prop_assert_eq!(a.reduce(axis).unwrap().cardinality(), a.cardinality());
        }
    }

    #[test]
    fn subpolymset_monotonicity(a in small(), b in small()) {
        let sub = a.intersection(&b).unwrap();
        prop_assert!(sub.is_subpolymset_of(&a));
        prop_assert!(sub.cardinality() <= a.cardinality());
        prop_assert!(sub.support().is_subpolymset_of(&a.support()));
        let r = a.relate(&b);
        prop_assert_eq!(r.equivalent, r.equicardinal && r.equidimensional);
        if r.equal {
            prop_assert!(r.similar && r.left_sub_right && r.right_sub_left && r.equivalent);
        }
    }

    #[test]
    fn produce_then_reduce(a in polymset(3, 3, 20), axis in 0usize..=3, parts in 1u64..5) {
        let p = a.produce(axis, delta_zero).unwrap();
        prop_assert_eq!(p.reduce(axis).unwrap(), a.clone());
        let q = a.produce(axis, even_split(NonZeroU64::new(parts).unwrap())).unwrap();
        prop_assert_eq!(q.cardinality(), a.cardinality());
        prop_assert_eq!(q.reduce(axis).unwrap(), a);
    }

    #[test]
    fn successor_predecessor(a in small(), i in index(DIM, 4)) {
        let s = a.sc(&i).unwrap();
        prop_assert_ne!(&s, &zero(DIM).unwrap());
        prop_assert_ne!(&s, &a);
        prop_assert!(is_immediate_successor(&s, &a));
        prop_assert_eq!(s.pd(&i).unwrap(), a.clone());
        prop_assert_eq!(a.sc_pow(&i, &2u32.into()).unwrap(), s.sc(&i).unwrap());
        if let Ok(p) = a.pd(&i) {
            prop_assert!(is_immediate_predecessor(&p, &a));
        }
    }

    #[test]
    fn successor_injective(a in small(), b in small(), i in index(DIM, 4), j in index(DIM, 4)) {
        prop_assert_eq!(a == b, a.sc(&i).unwrap() == b.sc(&i).unwrap());
        if i != j {
            prop_assert_ne!(a.sc(&i).unwrap(), a.sc(&j).unwrap());
        }
        prop_assert_eq!(
            a.sc(&i).unwrap().sc(&j).unwrap(),
            a.sc(&j).unwrap().sc(&i).unwrap()
        );
    }

    #[test]
    fn generation_is_order_independent(
        steps in prop::collection::vec(index(DIM, 3), 0..12),
    ) {
        let forward = generate(DIM, &steps).unwrap();
        let mut rev = steps.clone();
        rev.reverse();
        prop_assert_eq!(&forward, &generate(DIM, &rev).unwrap());
        prop_assert_eq!(trace_of(&forward).len(), steps.len());
        prop_assert_eq!(generate(DIM, &trace_of(&forward).steps).unwrap(), forward);
    }

    #[test]
    fn semiring_laws(a in small(), b in small(), c in small()) {
        prop_assert_eq!(add(&a, &b).unwrap(), add(&b, &a).unwrap());
        prop_assert_eq!(mul(&a, &b).unwrap(), mul(&b, &a).unwrap());
        prop_assert_eq!(
            mul(&mul(&a, &b).unwrap(), &c).unwrap(),
            mul(&a, &mul(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            mul(&a, &add(&b, &c).unwrap()).unwrap(),
            add(&mul(&a, &b).unwrap(), &mul(&a, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(mul(&one(DIM).unwrap(), &a).unwrap(), a.clone());
        prop_assert_eq!(mul(&a, &zero(DIM).unwrap()).unwrap(), zero(DIM).unwrap());
        prop_assert_eq!(mul(&a, &b).unwrap().cardinality(), a.cardinality() * b.cardinality());
        if add(&a, &c).unwrap() == add(&b, &c).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if !b.is_empty() {
            prop_assert_ne!(add(&a, &b).unwrap(), a.clone());
        }
    }

    #[test]
    fn shift_laws(a in small(), b in small(), u in index(DIM, 3), v in index(DIM, 3)) {
        prop_assert_eq!(
            shift(&shift(&a, &u).unwrap(), &v).unwrap(),
            shift(&a, &u.checked_add(&v).unwrap()).unwrap()
        );
        prop_assert_eq!(
            shift(&add(&a, &b).unwrap(), &u).unwrap(),
            add(&shift(&a, &u).unwrap(), &shift(&b, &u).unwrap()).unwrap()
        );
        prop_assert_eq!(
            mul(&shift(&a, &u).unwrap(), &b).unwrap(),
            shift(&mul(&a, &b).unwrap(), &u).unwrap()
        );
        prop_assert_eq!(shift(&a, &u).unwrap().cardinality(), a.cardinality());
    }

    #[test]
    fn tetratomy_witnesses(a in polymset(DIM, 2, 2), b in polymset(DIM, 2, 2)) {
        match compare_tetratomy(&a, &b).unwrap() {
            Tetratomy::Equal => prop_assert_eq!(&a, &b),
            Tetratomy::GreaterBy(c) => {
                prop_assert!(!c.is_empty());
                prop_assert_eq!(add(&b, &c).unwrap(), a.clone());
                prop_assert_eq!(compare_tetratomy(&b, &a).unwrap(), Tetratomy::LessBy(c));
            }
            Tetratomy::LessBy(d) => {
                prop_assert!(!d.is_empty());
                prop_assert_eq!(add(&a, &d).unwrap(), b.clone());
            }
            Tetratomy::Incomparable => {
                prop_assert!(!a.is_subpolymset_of(&b) && !b.is_subpolymset_of(&a));
            }
        }
    }

    #[test]
    fn oracles_agree(a in polymset(DIM, 3, 3), b in polymset(DIM, 3, 3)) {
        prop_assert_eq!(add_via_successors(&a, &b).unwrap(), add(&a, &b).unwrap());
        prop_assert_eq!(mul_recursive(&a, &b).unwrap(), mul(&a, &b).unwrap());
    }

    #[test]
    fn reduction_is_a_morphism(a in small(), b in small(), axis in 0usize..DIM) {
        prop_assert_eq!(
            mul(&a, &b).unwrap().reduce(axis).unwrap(),
            mul(&a.reduce(axis).unwrap(), &b.reduce(axis).unwrap()).unwrap()
        );
        prop_assert_eq!(
            add(&a, &b).unwrap().reduce(axis).unwrap(),
            add(&a.reduce(axis).unwrap(), &b.reduce(axis).unwrap()).unwrap()
        );
    }
}

#[test]
fn cross_index_successor_collision() {
    let a = Polymset::from_components(2, [([1, 0], 1u32)]).unwrap();
    let b = Polymset::from_components(2, [([0, 1], 1u32)]).unwrap();
    assert_ne!(a, b);
    let i01 = MultiIndex::try_from([0, 1]).unwrap();
    let i10 = MultiIndex::try_from([1, 0]).unwrap();
    assert_eq!(a.sc(&i01).unwrap(), b.sc(&i10).unwrap());
}
