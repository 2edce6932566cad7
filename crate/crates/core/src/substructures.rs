//! Closures and lattices of subrings and one-/two-sided ideals.
//!
//! Ideal-valued operations work relative to a [`Scope`]: a unital subring of
//! the ambient table (often the whole ring). This is how ideals of a subring
//! `R ⊂ T` are handled without materialising `R` as a separate table.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Caps, RingTable};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    /// Left ↔ right; two-sided is fixed.
    pub fn mirror(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::TwoSided => Side::TwoSided,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

/// A unital subring of a table, with its member list cached.
#[derive(Clone, Debug)]
pub struct Scope<'r> {
    ring: &'r RingTable,
    set: Subset,
    elems: Vec<usize>,
}

impl<'r> Scope<'r> {
    pub fn whole(ring: &'r RingTable) -> Self {
        Scope {
            ring,
            set: ring.full_set(),
            elems: ring.elements().collect(),
        }
    }

    /// Validates that `set` is a unital subring of `ring`.
    pub fn new(ring: &'r RingTable, set: Subset) -> Result<Self> {
        ring.owns(&set)?;
        if !is_subring(ring, &set) {
            return Err(Error::NotSubring);
        }
        let elems = set.to_vec();
        Ok(Scope { ring, set, elems })
    }

    pub fn ring(&self) -> &'r RingTable {
        self.ring
    }

    pub fn set(&self) -> &Subset {
        &self.set
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_whole(&self) -> bool {
        self.set.is_full()
    }

    pub fn is_commutative(&self) -> bool {
        let t = self.ring;
        self.elems
            .iter()
            .all(|&a| self.elems.iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
    }

    fn enumeration_cap(&self, caps: &Caps) -> Result<()> {
        Caps::check(self.len(), caps.enumeration, "enumeration")
    }
}

/// Worklist closure: `grow` is called once per newly reached element with the
/// members found so far, and returns further elements to add.
fn close<F>(t: &RingTable, seeds: impl IntoIterator<Item = usize>, mut grow: F) -> Subset
where
    F: FnMut(usize, &[usize], &mut Vec<usize>),
{
    let mut set = t.empty_set();
    let mut list = Vec::new();
    let mut queue = VecDeque::new();
    for x in seeds {
        if set.insert(x) {
            list.push(x);
            queue.push_back(x);
        }
    }
    let mut out = Vec::new();
    while let Some(e) = queue.pop_front() {
        out.clear();
        grow(e, &list, &mut out);
        for &y in &out {
            if set.insert(y) {
                list.push(y);
                queue.push_back(y);
            }
        }
    }
    set
}

pub fn is_additive_subgroup(t: &RingTable, s: &Subset) -> bool {
    s.contains(t.zero()) && s.iter().all(|a| s.iter().all(|b| s.contains(t.add(a, b))))
}

/// Contains 0 and 1 and is closed under addition and multiplication.
pub fn is_subring(t: &RingTable, s: &Subset) -> bool {
    s.contains(t.one())
        && is_additive_subgroup(t, s)
        && s.iter().all(|a| s.iter().all(|b| s.contains(t.mul(a, b))))
}

/// Whether `s` is an ideal of the given sidedness inside `scope`.
pub fn is_ideal(scope: &Scope<'_>, s: &Subset, side: Side) -> bool {
    let t = scope.ring();
    if !s.is_subset(scope.set()) || !is_additive_subgroup(t, s) {
        return false;
    }
    let left = || s.iter().all(|a| scope.elements().iter().all(|&r| s.contains(t.mul(r, a))));
    let right = || s.iter().all(|a| scope.elements().iter().all(|&r| s.contains(t.mul(a, r))));
    match side {
        Side::Left => left(),
        Side::Right => right(),
        Side::TwoSided => left() && right(),
    }
}

pub fn additive_closure(t: &RingTable, gens: &Subset) -> Subset {
    let seeds = std::iter::once(t.zero()).chain(gens.iter());
    close(t, seeds, |e, list, out| out.extend(list.iter().map(|&x| t.add(e, x))))
}

/// `A + B = {a + b}` for additive subgroups.
pub fn sum_of(t: &RingTable, a: &Subset, b: &Subset) -> Subset {
    let bs = b.to_vec();
    t.subset(a.iter().flat_map(|x| bs.iter().map(move |&y| t.add(x, y))))
}

/// Additive span of all products `ab` with `a ∈ A`, `b ∈ B`.
pub fn product_span(t: &RingTable, a: &Subset, b: &Subset) -> Subset {
    let bs = b.to_vec();
    let prods = t.subset(a.iter().flat_map(|x| bs.iter().map(move |&y| t.mul(x, y))));
    additive_closure(t, &prods)
}

/// Smallest unital subring containing `gens`.
pub fn subring_closure(t: &RingTable, gens: &Subset) -> Subset {
    let seeds = [t.zero(), t.one()].into_iter().chain(gens.iter());
    close(t, seeds, |e, list, out| {
        for &x in list {
            out.push(t.add(e, x));
            out.push(t.mul(e, x));
            out.push(t.mul(x, e));
        }
    })
}

/// Smallest ideal of `scope` of the given sidedness containing `gens`.
pub fn ideal_closure(scope: &Scope<'_>, gens: &Subset, side: Side) -> Subset {
    let t = scope.ring();
    let seeds = std::iter::once(t.zero()).chain(gens.iter());
    close(t, seeds, |e, list, out| {
        out.extend(list.iter().map(|&x| t.add(e, x)));
        for &r in scope.elements() {
            if side != Side::Right {
                out.push(t.mul(r, e));
            }
            if side != Side::Left {
                out.push(t.mul(e, r));
            }
        }
    })
}

/// Every unital subring of `t`, by breadth-first extension with one new
/// element at a time, in canonical order.
pub fn enumerate_subrings(t: &RingTable, caps: &Caps) -> Result<Vec<Subset>> {
    Caps::check(t.order(), caps.enumeration, "enumeration")?;
    let start = subring_closure(t, &t.empty_set());
    let mut seen: HashSet<Subset> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if s.is_full() {
            continue;
        }
        for x in s.complement().iter() {
            let mut gens = s.clone();
            gens.insert(x);
            let next = subring_closure(t, &gens);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Every ideal of the given sidedness in `scope`: joins of principal ideals,
/// in canonical order.
pub fn enumerate_ideals(scope: &Scope<'_>, side: Side, caps: &Caps) -> Result<Vec<Subset>> {
    scope.enumeration_cap(caps)?;
    let t = scope.ring();
    let mut principals: Vec<Subset> = scope
        .elements()
        .iter()
        .map(|&x| ideal_closure(scope, &t.subset([x]), side))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    principals.sort();
    let zero = t.zero_set();
    let mut seen: HashSet<Subset> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(i) = queue.pop_front() {
        for p in &principals {
            if p.is_subset(&i) {
                continue;
            }
            let j = sum_of(t, &i, p);
            if seen.insert(j.clone()) {
                queue.push_back(j);
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A subring strictly between `r` and `t`, if one exists.
pub fn middle_subring(t: &RingTable, r: &Subset) -> Result<Option<Subset>> {
    t.owns(r)?;
    if !is_subring(t, r) {
        return Err(Error::NotSubring);
    }
    if r.is_full() {
        return Err(Error::NotProperSubring);
    }
    for x in r.complement().iter() {
        let mut gens = r.clone();
        gens.insert(x);
        let s = subring_closure(t, &gens);
        if !s.is_full() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// True iff adjoining any outside element to `r` generates all of `t`.
pub fn is_maximal_subring(t: &RingTable, r: &Subset) -> Result<bool> {
    Ok(middle_subring(t, r)?.is_none())
}

/// Inclusion-maximal elements of a family, excluding `top`.
fn maximal_among(family: &[Subset], top: &Subset) -> Vec<Subset> {
    let proper: Vec<&Subset> = family.iter().filter(|s| *s != top).collect();
    proper
        .iter()
        .filter(|s| !proper.iter().any(|o| s.is_proper_subset(o)))
        .map(|s| (*s).clone())
        .collect()
}

pub fn maximal_subrings(t: &RingTable, caps: &Caps) -> Result<Vec<Subset>> {
    let all = enumerate_subrings(t, caps)?;
    Ok(maximal_among(&all, &t.full_set()))
}

pub fn maximal_ideals(scope: &Scope<'_>, side: Side, caps: &Caps) -> Result<Vec<Subset>> {
    let all = enumerate_ideals(scope, side, caps)?;
    Ok(maximal_among(&all, scope.set()))
}

/// Largest subring of `t` in which `a` is a two-sided ideal.
///
/// For a right ideal this is `{r : rA ⊆ A}`; for a left ideal `{r : Ar ⊆ A}`.
pub fn idealizer(t: &RingTable, a: &Subset, side: Side) -> Result<Subset> {
    t.owns(a)?;
    let whole = Scope::whole(t);
    if !is_ideal(&whole, a, side) {
        return Err(Error::NotIdeal(side));
    }
    let members = a.to_vec();
    Ok(match side {
        Side::Right => t.subset_where(|r| members.iter().all(|&x| a.contains(t.mul(r, x)))),
        Side::Left => t.subset_where(|r| members.iter().all(|&x| a.contains(t.mul(x, r)))),
        Side::TwoSided => t.full_set(),
    })
}

/// Left annihilator `{x : xS = 0}`, right `{x : Sx = 0}`, or both, within `scope`.
pub fn annihilator(scope: &Scope<'_>, s: &Subset, side: Side) -> Subset {
    let t = scope.ring();
    let members = s.to_vec();
    let z = t.zero();
    let kills_left = |x: usize| members.iter().all(|&m| t.mul(x, m) == z);
    let kills_right = |x: usize| members.iter().all(|&m| t.mul(m, x) == z);
    t.subset(scope.elements().iter().copied().filter(|&x| match side {
        Side::Left => kills_left(x),
        Side::Right => kills_right(x),
        Side::TwoSided => kills_left(x) && kills_right(x),
    }))
}

fn intersect_all(scope: &Scope<'_>, sets: &[Subset]) -> Subset {
    sets.iter().fold(scope.set().clone(), |acc, s| acc.intersection(s))
}

/// Jacobson radical: intersection of the maximal ideals on one side.
pub fn jacobson_radical_by(scope: &Scope<'_>, side: Side, caps: &Caps) -> Result<Subset> {
    let side = if side == Side::TwoSided { Side::Left } else { side };
    Ok(intersect_all(scope, &maximal_ideals(scope, side, caps)?))
}

pub fn jacobson_radical(scope: &Scope<'_>, caps: &Caps) -> Result<Subset> {
    jacobson_radical_by(scope, Side::Left, caps)
}

fn all_two_sided(scope: &Scope<'_>, sets: &[Subset]) -> bool {
    sets.iter().all(|m| is_ideal(scope, m, Side::TwoSided))
}

/// Every maximal one-sided ideal on `side` (both sides for two-sided) is an ideal.
pub fn is_quasi_duo(scope: &Scope<'_>, side: Side, caps: &Caps) -> Result<bool> {
    match side {
        Side::TwoSided => Ok(is_quasi_duo(scope, Side::Left, caps)?
            && is_quasi_duo(scope, Side::Right, caps)?),
        s => Ok(all_two_sided(scope, &maximal_ideals(scope, s, caps)?)),
    }
}

/// Every one-sided ideal on `side` (both sides for two-sided) is an ideal.
pub fn is_duo(scope: &Scope<'_>, side: Side, caps: &Caps) -> Result<bool> {
    match side {
        Side::TwoSided => Ok(is_duo(scope, Side::Left, caps)? && is_duo(scope, Side::Right, caps)?),
        s => Ok(all_two_sided(scope, &enumerate_ideals(scope, s, caps)?)),
    }
}

/// Largest two-sided ideal of `scope` inside the one-sided ideal `m`.
///
/// For a right ideal this is `{a : Sa ⊆ M}`, for a left ideal `{a : aS ⊆ M}`.
pub fn core_of(scope: &Scope<'_>, m: &Subset, side: Side) -> Result<Subset> {
    let t = scope.ring();
    t.owns(m)?;
    if !is_ideal(scope, m, side) {
        return Err(Error::NotIdeal(side));
    }
    let elems = scope.elements();
    Ok(match side {
        Side::Right => t.subset(
            elems.iter().copied().filter(|&a| elems.iter().all(|&s| m.contains(t.mul(s, a)))),
        ),
        Side::Left => t.subset(
            elems.iter().copied().filter(|&a| elems.iter().all(|&s| m.contains(t.mul(a, s)))),
        ),
        Side::TwoSided => m.clone(),
    })
}
