//! Lattice enumeration and conductors against exhaustive scans over all subsets.

use std::collections::BTreeSet;
use std::sync::Arc;

use conductor_core::construct::{cyclic, matrix, product, triangular, Shape};
use conductor_core::ideal::ExtensionPair;
use conductor_core::substructures::{
    enumerate_ideals, enumerate_subrings, is_ideal, is_subring, maximal_subrings, Scope, Side,
};
use conductor_core::{Caps, RingTable, Subset};

fn small_rings() -> Vec<RingTable> {
    let caps = Caps::default();
    let z = |n| cyclic(n).unwrap();
    vec![
        z(2),
        z(3),
        z(4),
        z(6),
        z(8),
        product(&[z(2), z(2)], &caps).unwrap(),
        product(&[z(2), z(2), z(2)], &caps).unwrap(),
        product(&[z(4), z(2)], &caps).unwrap(),
        triangular(&z(2), 2, Shape::Lower, &caps).unwrap(),
        triangular(&z(2), 2, Shape::Upper, &caps).unwrap(),
    ]
}

fn all_subsets(t: &RingTable) -> impl Iterator<Item = Subset> + '_ {
    (0u64..1 << t.order()).map(move |mask| t.subset_where(|x| mask >> x & 1 == 1))
}

fn as_set(v: Vec<Subset>) -> BTreeSet<Vec<usize>> {
    v.into_iter().map(|s| s.to_vec()).collect()
}

#[test]
fn subrings_match_exhaustive_scan() {
    for t in small_rings() {
        let oracle: BTreeSet<Vec<usize>> = all_subsets(&t)
            .filter(|s| is_subring(&t, s))
            .map(|s| s.to_vec())
            .collect();
        let got = as_set(enumerate_subrings(&t, &Caps::default()).unwrap());
        assert_eq!(got, oracle, "{}", t.label());
    }
}

/// Ideal test written out from the definition, independent of the library predicate.
fn ideal_by_definition(t: &RingTable, s: &Subset, side: Side) -> bool {
    let v = s.to_vec();
    if !s.contains(t.zero()) || v.iter().any(|&a| v.iter().any(|&b| !s.contains(t.sub(a, b)))) {
        return false;
    }
    v.iter().all(|&a| {
        t.elements().all(|r| {
            let left = s.contains(t.mul(r, a));
            let right = s.contains(t.mul(a, r));
            match side {
                Side::Left => left,
                Side::Right => right,
                Side::TwoSided => left && right,
            }
        })
    })
}

#[test]
fn ideals_match_exhaustive_scan() {
    for t in small_rings() {
        let scope = Scope::whole(&t);
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            let oracle: BTreeSet<Vec<usize>> = all_subsets(&t)
                .filter(|s| ideal_by_definition(&t, s, side))
                .map(|s| s.to_vec())
                .collect();
            let got = as_set(enumerate_ideals(&scope, side, &Caps::default()).unwrap());
            assert_eq!(got, oracle, "{} {side}", t.label());
        }
    }
}

#[test]
fn matrix_ring_subrings_match_exhaustive_scan() {
    let t = matrix(&cyclic(2).unwrap(), 2, &Caps::default()).unwrap();
    let (zero, one) = (t.zero(), t.one());
    let oracle: BTreeSet<Vec<usize>> = (0u32..1 << 16)
        .filter(|m| m >> zero & 1 == 1 && m >> one & 1 == 1)
        .map(|m| t.subset_where(|x| m >> x & 1 == 1))
        .filter(|s| is_subring(&t, s))
        .map(|s| s.to_vec())
        .collect();
    let got = as_set(enumerate_subrings(&t, &Caps::default()).unwrap());
    assert_eq!(got, oracle);
    let left = as_set(enumerate_ideals(&Scope::whole(&t), Side::Left, &Caps::default()).unwrap());
    assert_eq!(left.len(), 5);
    let oracle_left: BTreeSet<Vec<usize>> = (0u32..1 << 16)
        .map(|m| t.subset_where(|x| m >> x & 1 == 1))
        .filter(|s| ideal_by_definition(&t, s, Side::Left))
        .map(|s| s.to_vec())
        .collect();
    assert_eq!(left, oracle_left);
}

#[test]
fn ideals_of_subring_scope_match_scan() {
    let t = matrix(&cyclic(2).unwrap(), 2, &Caps::default()).unwrap();
    for r in maximal_subrings(&t, &Caps::default()).unwrap() {
        let scope = Scope::new(&t, r.clone()).unwrap();
        let members = r.to_vec();
        let oracle: BTreeSet<Vec<usize>> = (0u64..1 << members.len())
            .map(|m| t.subset((0..members.len()).filter(|i| m >> i & 1 == 1).map(|i| members[i])))
            .filter(|s| is_ideal(&scope, s, Side::TwoSided))
            .map(|s| s.to_vec())
            .collect();
        let got = as_set(enumerate_ideals(&scope, Side::TwoSided, &Caps::default()).unwrap());
        assert_eq!(got, oracle);
    }
}

/// Largest one-sided ideal of `T` inside `R`, as the union of all such ideals.
fn largest_ideal_inside(t: &RingTable, r: &Subset, side: Side) -> Subset {
    enumerate_ideals(&Scope::whole(t), side, &Caps::default())
        .unwrap()
        .into_iter()
        .filter(|i| i.is_subset(r))
        .fold(t.zero_set(), |acc, i| acc.union(&i))
}

#[test]
fn conductors_are_largest_ideals_inside_r() {
    let caps = Caps::default();
    let mut rings = small_rings();
    rings.push(matrix(&cyclic(2).unwrap(), 2, &caps).unwrap());
    for t in rings {
        let t = Arc::new(t);
        for r in enumerate_subrings(&t, &caps).unwrap() {
            if r.is_full() {
                continue;
            }
            let pair = ExtensionPair::new(t.clone(), r.clone()).unwrap();
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                assert_eq!(pair.conductor(side), &largest_ideal_inside(&t, &r, side), "{} {side}", t.label());
            }
        }
    }
}
