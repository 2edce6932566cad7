//! Ring isomorphism search by backtracking over images of generators.

use crate::error::Result;
use crate::ring::{characteristic, Caps, RingTable};
use crate::substructures::subring_closure;

/// Whether `map` (indexed by elements of `a`) is a unital ring isomorphism onto `b`.
pub fn is_isomorphism(a: &RingTable, b: &RingTable, map: &[usize]) -> bool {
    if map.len() != a.order() || a.order() != b.order() {
        return false;
    }
    let mut hit = vec![false; b.order()];
    for &y in map {
        if y >= b.order() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    map[a.zero()] == b.zero()
        && map[a.one()] == b.one()
        && a.elements().all(|x| {
            a.elements().all(|y| {
                map[a.add(x, y)] == b.add(map[x], map[y]) && map[a.mul(x, y)] == b.mul(map[x], map[y])
            })
        })
}

fn additive_profile(t: &RingTable) -> Vec<usize> {
    let mut p: Vec<usize> = t.elements().map(|x| t.additive_order(x)).collect();
    p.sort_unstable();
    p
}

fn square_zero_count(t: &RingTable) -> usize {
    t.elements().filter(|&x| t.mul(x, x) == t.zero()).count()
}

/// Small generating set chosen greedily by largest closure growth.
fn generators(t: &RingTable) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut cur = subring_closure(t, &t.empty_set());
    while !cur.is_full() {
        let (x, next) = cur
            .complement()
            .iter()
            .map(|x| {
                let mut g = cur.clone();
                g.insert(x);
                (x, subring_closure(t, &g))
            })
            .max_by_key(|(x, s)| (s.count(), std::cmp::Reverse(*x)))
            .expect("complement nonempty");
        gens.push(x);
        cur = next;
    }
    gens
}

struct Partial {
    fwd: Vec<Option<usize>>,
    back: Vec<Option<usize>>,
    known: Vec<usize>,
}

impl Partial {
    /// Adds `x ↦ y` and everything it forces; `false` on contradiction.
    fn extend(&mut self, a: &RingTable, b: &RingTable, x: usize, y: usize) -> bool {
        let mut work = vec![(x, y)];
        while let Some((x, y)) = work.pop() {
            match (self.fwd[x], self.back[y]) {
                (Some(v), _) if v == y => continue,
                (None, None) => {}
                _ => return false,
            }
            self.fwd[x] = Some(y);
            self.back[y] = Some(x);
            self.known.push(x);
            for i in 0..self.known.len() {
                let u = self.known[i];
                let v = self.fwd[u].expect("known is mapped");
                work.push((a.add(x, u), b.add(y, v)));
                work.push((a.mul(x, u), b.mul(y, v)));
                work.push((a.mul(u, x), b.mul(v, y)));
            }
        }
        true
    }
}

fn search(a: &RingTable, b: &RingTable, gens: &[usize], p: Partial) -> Option<Vec<usize>> {
    let Some((&g, rest)) = gens.split_first() else {
        return p.fwd.into_iter().collect();
    };
    if p.fwd[g].is_some() {
        return search(a, b, rest, p);
    }
    let order = a.additive_order(g);
    for y in b.elements().filter(|&y| p.back[y].is_none() && b.additive_order(y) == order) {
        let mut next = Partial {
            fwd: p.fwd.clone(),
            back: p.back.clone(),
            known: p.known.clone(),
        };
        if next.extend(a, b, g, y) {
            if let Some(m) = search(a, b, rest, next) {
                return Some(m);
            }
        }
    }
    None
}

/// A unital ring isomorphism `a → b` as an image table, if one exists.
///
/// Rejects early on order, characteristic, additive-order profile and
/// commutativity; any map returned has been replayed on every pair.
pub fn find_isomorphism(a: &RingTable, b: &RingTable, caps: &Caps) -> Result<Option<Vec<usize>>> {
    Caps::check(a.order(), caps.isomorphism, "isomorphism")?;
    Caps::check(b.order(), caps.isomorphism, "isomorphism")?;
    if a.order() != b.order()
        || characteristic(a) != characteristic(b)
        || additive_profile(a) != additive_profile(b)
        || a.is_commutative() != b.is_commutative()
        || square_zero_count(a) != square_zero_count(b)
    {
        return Ok(None);
    }
    let mut p = Partial {
        fwd: vec![None; a.order()],
        back: vec![None; b.order()],
        known: Vec::new(),
    };
    if !p.extend(a, b, a.zero(), b.zero()) || !p.extend(a, b, a.one(), b.one()) {
        return Ok(None);
    }
    let found = search(a, b, &generators(a), p);
    debug_assert!(found.as_ref().is_none_or(|m| is_isomorphism(a, b, m)));
    Ok(found.filter(|m| is_isomorphism(a, b, m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, matrix, opposite, product, triangular, Shape};
    use crate::error::Error;

    fn f2() -> RingTable {
        cyclic(2).unwrap()
    }

    #[test]
    fn identity_on_f2_squared() {
        let caps = Caps::default();
        let t = product(&[f2(), f2()], &caps).unwrap();
        let m = find_isomorphism(&t, &t, &caps).unwrap().unwrap();
        assert!(is_isomorphism(&t, &t, &m));
    }

    #[test]
    fn z4_is_not_f2_squared() {
        let caps = Caps::default();
        let t = product(&[f2(), f2()], &caps).unwrap();
        assert_eq!(find_isomorphism(&cyclic(4).unwrap(), &t, &caps).unwrap(), None);
    }

    #[test]
    fn upper_is_opposite_of_lower() {
        let caps = Caps::default();
        let lo = triangular(&f2(), 2, Shape::Lower, &caps).unwrap();
        let up = triangular(&f2(), 2, Shape::Upper, &caps).unwrap();
        let m = find_isomorphism(&up, &opposite(&lo), &caps).unwrap().unwrap();
        assert!(is_isomorphism(&up, &opposite(&lo), &m));
        assert!(find_isomorphism(&up, &lo, &caps).unwrap().is_some());
    }

    #[test]
    fn matrix_ring_is_self_opposite() {
        let caps = Caps::default();
        let t = matrix(&f2(), 2, &caps).unwrap();
        assert!(find_isomorphism(&t, &opposite(&t), &caps).unwrap().is_some());
        let tri = triangular(&f2(), 2, Shape::Lower, &caps).unwrap();
        let p = product(&[f2(), f2(), f2()], &caps).unwrap();
        assert_eq!(find_isomorphism(&tri, &p, &caps).unwrap(), None);
    }

    #[test]
    fn cap_applies() {
        let caps = Caps { isomorphism: 4, ..Caps::default() };
        let t = product(&[f2(), f2(), f2()], &caps).unwrap();
        assert!(matches!(find_isomorphism(&t, &t, &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn replay_rejects_broken_maps() {
        let t = cyclic(4).unwrap();
        assert!(is_isomorphism(&t, &t, &[0, 1, 2, 3]));
        assert!(!is_isomorphism(&t, &t, &[0, 3, 2, 1]));
        assert!(!is_isomorphism(&t, &t, &[0, 1, 1, 3]));
    }
}
