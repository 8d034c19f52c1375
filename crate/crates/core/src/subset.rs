//! Subsets of a carrier of at most 64 elements, stored as one machine word.

use std::fmt;

use crate::algebra::Element;
use crate::error::{MtlError, Result};

/// Characteristic bit vector over the carrier `0..n` of one algebra.
///
/// The carrier size travels with the bits so that a subset built for one
/// algebra cannot be silently reused with an algebra of a different size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    n: u8,
    bits: u64,
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= 64);
        Subset {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        Subset {
            n: n as u8,
            bits: mask(n),
        }
    }

    pub fn singleton(n: usize, e: Element) -> Self {
        let mut s = Self::empty(n);
        s.insert(e);
        s
    }

    /// Builds a subset from raw bits; bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if bits & !mask(n) != 0 {
            return Err(MtlError::ElementOutOfRange(
                63 - bits.leading_zeros() as usize,
            ));
        }
        Ok(Subset { n: n as u8, bits })
    }

    pub fn from_elements(n: usize, elems: impl IntoIterator<Item = Element>) -> Self {
        let mut s = Self::empty(n);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, e: Element) -> bool {
        self.bits >> e.index() & 1 == 1
    }

    pub fn insert(&mut self, e: Element) {
        assert!(
            e.index() < self.universe(),
            "element outside subset universe"
        );
        self.bits |= 1 << e.index();
    }

    pub fn remove(&mut self, e: Element) {
        self.bits &= !(1 << e.index());
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn complement(&self) -> Subset {
        Subset {
            n: self.n,
            bits: !self.bits & mask(self.universe()),
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == mask(self.universe())
    }

    /// Members in ascending carrier order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        let bits = self.bits;
        (0..self.universe())
            .filter(move |i| bits >> i & 1 == 1)
            .map(Element::new)
    }

    /// All nonempty subsets of an `n`-element carrier in ascending bit order.
    pub fn all_nonempty(n: usize) -> impl Iterator<Item = Subset> {
        assert!(
            n <= 20,
            "exhaustive subset iteration is capped at 20 elements"
        );
        (1u64..(1u64 << n)).map(move |bits| Subset { n: n as u8, bits })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|e| e.index()))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        let f = Subset::full(5);
        assert_eq!(f.len(), 5);
        assert!(f.complement().is_empty());
        assert!(Subset::full(64).is_full());
        assert_eq!(Subset::full(64).complement(), Subset::empty(64));
    }

    #[test]
    fn from_bits_rejects_high_bits() {
        assert!(Subset::from_bits(3, 0b1000).is_err());
        assert!(Subset::from_bits(3, 0b111).is_ok());
    }

    #[test]
    fn nonempty_enumeration_is_ascending() {
        let all: Vec<_> = Subset::all_nonempty(3).collect();
        assert_eq!(all.len(), 7);
        assert!(all.windows(2).all(|w| w[0].bits() < w[1].bits()));
    }

    proptest! {
        #[test]
        fn set_algebra_laws(n in 1usize..=64, a in any::<u64>(), b in any::<u64>()) {
            let m = mask(n);
            let x = Subset::from_bits(n, a & m).unwrap();
            let y = Subset::from_bits(n, b & m).unwrap();
            prop_assert_eq!(x.union(&y).complement(), x.complement().intersection(&y.complement()));
            prop_assert!(x.intersection(&y).is_subset_of(&x));
            prop_assert!(x.is_subset_of(&x.union(&y)));
            prop_assert_eq!(x.len() + x.complement().len(), n);
            prop_assert_eq!(x.iter().count(), x.len());
        }
    }
}
