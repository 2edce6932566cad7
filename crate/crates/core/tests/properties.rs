use std::sync::Arc;

use proptest::prelude::*;

use conductor_core::construct::{cyclic, matrix, opposite, product, triangular, Shape};
use conductor_core::ideal::{is_nilpotent_ideal, is_prime_one_sided_ideal, ExtensionPair};
use conductor_core::iso::{find_isomorphism, is_isomorphism};
use conductor_core::module::{endomorphism_ring, endomorphism_ring_cyclic, ModuleView};
use conductor_core::ring::{center, characteristic, check_ring_axioms};
use conductor_core::substructures::{
    enumerate_ideals, enumerate_subrings, ideal_closure, idealizer, is_ideal, is_subring, jacobson_radical_by,
    maximal_ideals, subring_closure, Scope, Side,
};
use conductor_core::{Caps, RingTable};

fn catalogue() -> Vec<RingTable> {
    let caps = Caps::default();
    let z = |n| cyclic(n).unwrap();
    vec![
        z(2),
        z(4),
        z(6),
        z(9),
        product(&[z(2), z(2)], &caps).unwrap(),
        product(&[z(4), z(2)], &caps).unwrap(),
        product(&[z(2), z(3)], &caps).unwrap(),
        product(&[z(2), z(2), z(2), z(2)], &caps).unwrap(),
        triangular(&z(2), 2, Shape::Lower, &caps).unwrap(),
        triangular(&z(2), 2, Shape::Upper, &caps).unwrap(),
        matrix(&z(2), 2, &caps).unwrap(),
        opposite(&triangular(&z(2), 2, Shape::Lower, &caps).unwrap()),
    ]
}

fn ring_and_mask() -> impl Strategy<Value = (RingTable, u64)> {
    let n = catalogue().len();
    (0..n, any::<u64>()).prop_map(|(i, m)| (catalogue().swap_remove(i), m))
}

fn sides() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Left), Just(Side::Right), Just(Side::TwoSided)]
}

/// The same ring with its elements renumbered by `perm`.
fn permuted(t: &RingTable, perm: &[usize]) -> RingTable {
    let n = t.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| perm[f(inv[i], inv[j])]).collect()).collect()
    };
    RingTable::from_tables(
        "perm",
        table(&|a, b| t.add(a, b)),
        table(&|a, b| t.mul(a, b)),
        perm[t.zero()],
        perm[t.one()],
        None,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_are_idempotent((t, mask) in ring_and_mask(), side in sides()) {
        let gens = t.subset_where(|x| mask >> x & 1 == 1);
        let s = subring_closure(&t, &gens);
        prop_assert!(is_subring(&t, &s));
        prop_assert_eq!(subring_closure(&t, &s), s.clone());
        let scope = Scope::whole(&t);
        let i = ideal_closure(&scope, &gens, side);
        prop_assert!(is_ideal(&scope, &i, side));
        prop_assert_eq!(ideal_closure(&scope, &i, side), i);
    }

    #[test]
    fn isomorphisms_replay_after_relabelling(i in 0..12usize, seed in any::<u64>()) {
        let t = catalogue().swap_remove(i);
        prop_assume!(t.order() <= 16);
        let mut perm: Vec<usize> = t.elements().collect();
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let u = permuted(&t, &perm);
        let m = find_isomorphism(&t, &u, &Caps::default()).unwrap();
        prop_assert!(m.is_some());
        prop_assert!(is_isomorphism(&t, &u, &m.unwrap()));
    }

    #[test]
    fn idealizer_contains_every_subring_where_ideal((t, mask) in ring_and_mask(), right in any::<bool>()) {
        let side = if right { Side::Right } else { Side::Left };
        let whole = Scope::whole(&t);
        let a = ideal_closure(&whole, &t.subset_where(|x| mask >> x & 1 == 1), side);
        let idz = idealizer(&t, &a, side).unwrap();
        prop_assert!(is_subring(&t, &idz) && a.is_subset(&idz));
        let inner = Scope::new(&t, idz.clone()).unwrap();
        prop_assert!(is_ideal(&inner, &a, Side::TwoSided));
        for r in enumerate_subrings(&t, &Caps::default()).unwrap() {
            if a.is_subset(&r) && is_ideal(&Scope::new(&t, r.clone()).unwrap(), &a, Side::TwoSided) {
                prop_assert!(r.is_subset(&idz));
            }
        }
    }
}

#[test]
fn constructed_rings_satisfy_axioms() {
    for t in catalogue() {
        assert!(check_ring_axioms(&t.add_table(), &t.mul_table(), t.zero(), t.one()).is_ok(), "{}", t.label());
        let oo = opposite(&opposite(&t));
        assert_eq!(oo.add_table(), t.add_table());
        assert_eq!(oo.mul_table(), t.mul_table());
        let c = center(&t);
        assert!(is_subring(&t, &c));
        assert!(c.iter().all(|a| c.iter().all(|b| t.mul(a, b) == t.mul(b, a))));
    }
}

#[test]
fn characteristic_of_products_and_matrices() {
    let caps = Caps::default();
    let z = |n| cyclic(n).unwrap();
    assert_eq!(characteristic(&product(&[z(4), z(2)], &caps).unwrap()), 4);
    assert_eq!(characteristic(&product(&[z(2), z(3)], &caps).unwrap()), 6);
    assert_eq!(characteristic(&product(&[z(4), z(6)], &caps).unwrap()), 12);
    assert_eq!(characteristic(&matrix(&z(4), 2, &Caps { construction: 256, ..caps }).unwrap()), 4);
    assert_eq!(characteristic(&matrix(&z(3), 2, &caps).unwrap()), 3);
}

#[test]
fn radicals_agree_and_are_nilpotent() {
    let caps = Caps::default();
    for t in catalogue() {
        let s = Scope::whole(&t);
        let l = jacobson_radical_by(&s, Side::Left, &caps).unwrap();
        let r = jacobson_radical_by(&s, Side::Right, &caps).unwrap();
        assert_eq!(l, r, "{}", t.label());
        assert!(is_ideal(&s, &l, Side::TwoSided));
        assert!(is_nilpotent_ideal(&t, &l));
    }
}

#[test]
fn maximal_one_sided_ideals_are_prime() {
    let caps = Caps::default();
    for t in catalogue() {
        let s = Scope::whole(&t);
        for side in [Side::Left, Side::Right] {
            for m in maximal_ideals(&s, side, &caps).unwrap() {
                assert!(is_prime_one_sided_ideal(&s, &m, side).unwrap(), "{} {side}", t.label());
            }
        }
    }
}

/// Every self-map of the cosets, filtered by the module laws.
fn endo_maps_exhaustive(m: &ModuleView<'_>) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut out = Vec::new();
    for code in 0..n.pow(n as u32) {
        let f: Vec<usize> = (0..n).map(|i| code / n.pow(i as u32) % n).collect();
        let additive = (0..n).all(|c| (0..n).all(|d| f[m.add(c, d)] == m.add(f[c], f[d])));
        let linear = (0..n).all(|c| m.actor().elements().iter().all(|&a| f[m.act(c, a)] == m.act(f[c], a)));
        if additive && linear {
            out.push(f);
        }
    }
    out.sort();
    out
}

#[test]
fn endomorphism_paths_agree_with_exhaustive_maps() {
    let caps = Caps::default();
    let mut checked = 0;
    for t in catalogue() {
        let t = Arc::new(t);
        for r in enumerate_subrings(&t, &caps).unwrap() {
            if r.is_full() {
                continue;
            }
            let pair = ExtensionPair::new(t.clone(), r).unwrap();
            for side in [Side::Left, Side::Right] {
                let m = ModuleView::new(pair.r().clone(), pair.r_scope(), side).unwrap();
                if m.len() > 6 {
                    continue;
                }
                let e = endomorphism_ring(&m, &caps).unwrap();
                assert_eq!(e.maps, endo_maps_exhaustive(&m));
                if let Some(c) = endomorphism_ring_cyclic(&m, &caps).unwrap() {
                    assert_eq!(c.maps, e.maps);
                    assert_eq!(c.ring.mul_table(), e.ring.mul_table());
                }
                checked += 1;
            }
        }
        let s = Scope::whole(&t);
        for side in [Side::Left, Side::Right] {
            for a in enumerate_ideals(&s, side, &caps).unwrap() {
                if a.is_full() {
                    continue;
                }
                let m = ModuleView::new(a, Scope::whole(&t), side).unwrap();
                if m.len() > 6 {
                    continue;
                }
                let e = endomorphism_ring(&m, &caps).unwrap();
                assert_eq!(e.maps, endo_maps_exhaustive(&m));
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}
