use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ring::{RingId, RingTable};

/// Membership mask over the elements of one ring.
///
/// Carries the identity of its parent so that subsets of different rings are
/// never mixed silently. What the subset *is* (subring, ideal, ...) is decided
/// by the predicates in [`crate::substructures`], never assumed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    parent: RingId,
    bits: BitSet,
}

impl Subset {
    pub(crate) fn from_bits(parent: RingId, bits: BitSet) -> Self {
        Subset { parent, bits }
    }

    pub fn parent(&self) -> RingId {
        self.parent
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn insert(&mut self, x: usize) -> bool {
        self.bits.insert(x)
    }

    pub fn count(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// True when the subset covers the whole parent ring.
    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.same_parent(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subset(&self, other: &Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn comparable(&self, other: &Subset) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.same_parent(other);
        Subset::from_bits(self.parent, self.bits.union(&other.bits))
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.same_parent(other);
        Subset::from_bits(self.parent, self.bits.intersection(&other.bits))
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.same_parent(other);
        Subset::from_bits(self.parent, self.bits.difference(&other.bits))
    }

    pub fn complement(&self) -> Subset {
        Subset::from_bits(self.parent, self.bits.complement())
    }

    /// Smallest element in the symmetric difference, if the sets differ.
    pub fn first_difference(&self, other: &Subset) -> Option<usize> {
        self.same_parent(other);
        let a = self.bits.difference(&other.bits).first();
        let b = other.bits.difference(&self.bits).first();
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    /// Reinterpret this mask over another ring with the same element set,
    /// e.g. the opposite ring.
    pub fn rebase(&self, ring: &RingTable) -> Result<Subset> {
        if ring.order() != self.bits.len() {
            return Err(Error::ForeignSubset(ring.label().to_string()));
        }
        Ok(Subset::from_bits(ring.id(), self.bits.clone()))
    }

    fn same_parent(&self, other: &Subset) {
        assert_eq!(
            self.parent, other.parent,
            "subsets of different rings combined"
        );
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}
