//! Finite unital rings stored as explicit Cayley tables.
//!
//! Elements are dense indices `0..order`. All structure lives in the addition
//! and multiplication tables; the negation table is derived once on
//! construction.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Identity of a constructed ring. Clones share it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        RingId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// Size limits for the exponential operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest ring a constructor may build.
    pub construction: usize,
    /// Largest ring (or scope) whose full subring/ideal lattice is enumerated.
    pub enumeration: usize,
    /// Largest order accepted by isomorphism search.
    pub isomorphism: usize,
    /// Largest module (coset count) whose endomorphism ring is built.
    pub endomorphism: usize,
    /// Largest module (coset count) whose submodule lattice is enumerated.
    pub module: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            construction: 128,
            enumeration: 16,
            isomorphism: 16,
            endomorphism: 8,
            module: 128,
        }
    }
}

impl Caps {
    pub(crate) fn check(size: usize, cap: usize, what: &'static str) -> Result<()> {
        if size > cap {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone)]
pub struct RingTable {
    id: RingId,
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    label: String,
    names: Vec<String>,
}

impl RingTable {
    /// Build a ring from row-major tables, enforcing every ring axiom.
    pub fn from_tables(
        label: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let order = add.len();
        check_ring_axioms(&add, &mul, zero, one).map_err(Error::Axioms)?;
        let flat = |t: Vec<Vec<usize>>| t.into_iter().flatten().collect::<Vec<_>>();
        let names = names.unwrap_or_else(|| (0..order).map(|i| i.to_string()).collect());
        Ok(Self::from_flat(
            label.into(),
            order,
            flat(add),
            flat(mul),
            zero,
            one,
            names,
        ))
    }

    /// Internal constructor for tables produced by trusted constructions.
    pub(crate) fn from_flat(
        label: String,
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        names: Vec<String>,
    ) -> Self {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        debug_assert_eq!(names.len(), order);
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == zero)
                    .expect("additive inverse")
            })
            .collect();
        RingTable {
            id: RingId::fresh(),
            order,
            add,
            mul,
            neg,
            zero,
            one,
            label,
            names,
        }
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n·x`, the n-fold sum of `x`.
    pub fn times(&self, n: usize, x: usize) -> usize {
        (0..n).fold(self.zero, |acc, _| self.add(acc, x))
    }

    /// `x^n` with `x^0 = 1`.
    pub fn pow(&self, x: usize, n: usize) -> usize {
        (0..n).fold(self.one, |acc, _| self.mul(acc, x))
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.zero {
            acc = self.add(acc, x);
            n += 1;
        }
        n
    }

    /// Display name of an element; injective per ring.
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Look an element up by its display name, ignoring whitespace.
    pub fn find(&self, name: &str) -> Option<usize> {
        let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        self.names.iter().position(|n| {
            n.chars().filter(|c| !c.is_whitespace()).eq(key.chars())
        })
    }

    pub fn name_index(&self) -> HashMap<&str, usize> {
        self.names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect()
    }

    /// Row-major copy of the addition table.
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Row-major copy of the multiplication table.
    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn empty_set(&self) -> Subset {
        Subset::from_bits(self.id, BitSet::new(self.order))
    }

    pub fn full_set(&self) -> Subset {
        Subset::from_bits(self.id, BitSet::full(self.order))
    }

    pub fn zero_set(&self) -> Subset {
        self.subset([self.zero])
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, items: I) -> Subset {
        Subset::from_bits(self.id, BitSet::from_iter_len(self.order, items))
    }

    pub fn subset_where(&self, pred: impl Fn(usize) -> bool) -> Subset {
        self.subset(self.elements().filter(|&x| pred(x)))
    }

    /// Subset from element names (whitespace-insensitive).
    pub fn subset_by_names<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<Subset> {
        let mut s = self.empty_set();
        for n in names {
            let x = self
                .find(n)
                .ok_or_else(|| Error::UnknownElement(n.trim().to_string()))?;
            s.insert(x);
        }
        Ok(s)
    }

    pub fn owns(&self, s: &Subset) -> Result<()> {
        if s.parent() == self.id {
            Ok(())
        } else {
            Err(Error::ForeignSubset(self.label.clone()))
        }
    }

    pub fn render(&self, s: &Subset) -> String {
        let items: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", items.join(", "))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// The ring law a table fails, with the witness element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: Law,
    pub witness: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Shape,
    IndexRange,
    ZeroIsOne,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Shape => "tables must be order x order",
            Law::IndexRange => "table entry out of range",
            Law::ZeroIsOne => "1 != 0",
            Law::AdditiveIdentity => "a + 0 = a",
            Law::AdditiveCommutativity => "a + b = b + a",
            Law::AdditiveAssociativity => "(a + b) + c = a + (b + c)",
            Law::AdditiveInverse => "every a has -a",
            Law::MultiplicativeIdentity => "1a = a1 = a",
            Law::MultiplicativeAssociativity => "(ab)c = a(bc)",
            Law::LeftDistributivity => "a(b + c) = ab + ac",
            Law::RightDistributivity => "(a + b)c = ac + bc",
        };
        f.write_str(s)
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "law `{}` fails at {:?}", self.law, self.witness)
    }
}

/// Exhaustively check the unital ring axioms, O(order³).
///
/// Returns the first violated law with the witness indices that break it.
pub fn check_ring_axioms(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> std::result::Result<(), AxiomViolation> {
    let n = add.len();
    let fail = |law, witness: Vec<usize>| Err(AxiomViolation { law, witness });
    if n == 0 || mul.len() != n {
        return fail(Law::Shape, vec![]);
    }
    for (i, row) in add.iter().chain(mul).enumerate() {
        if row.len() != n {
            return fail(Law::Shape, vec![i % n]);
        }
    }
    for (t, table) in [add, mul].into_iter().enumerate() {
        for (a, row) in table.iter().enumerate() {
            if let Some(b) = row.iter().position(|&x| x >= n) {
                return fail(Law::IndexRange, vec![t, a, b]);
            }
        }
    }
    if zero >= n || one >= n {
        return fail(Law::IndexRange, vec![zero, one]);
    }
    if zero == one {
        return fail(Law::ZeroIsOne, vec![zero]);
    }
    for a in 0..n {
        if add[a][zero] != a || add[zero][a] != a {
            return fail(Law::AdditiveIdentity, vec![a]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            if add[a][b] != add[b][a] {
                return fail(Law::AdditiveCommutativity, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return fail(Law::AdditiveAssociativity, vec![a, b, c]);
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| add[a][b] == zero) {
            return fail(Law::AdditiveInverse, vec![a]);
        }
    }
    for a in 0..n {
        if mul[one][a] != a || mul[a][one] != a {
            return fail(Law::MultiplicativeIdentity, vec![a]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return fail(Law::MultiplicativeAssociativity, vec![a, b, c]);
                }
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                    return fail(Law::LeftDistributivity, vec![a, b, c]);
                }
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                    return fail(Law::RightDistributivity, vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// Additive order of the identity. Always positive for a finite ring.
pub fn characteristic(t: &RingTable) -> usize {
    t.additive_order(t.one())
}

/// `{t : tx = xt for every x in X}`.
pub fn centralizer(t: &RingTable, x: &Subset) -> Subset {
    let xs = x.to_vec();
    t.subset_where(|a| xs.iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
}

pub fn center(t: &RingTable) -> Subset {
    centralizer(t, &t.full_set())
}
