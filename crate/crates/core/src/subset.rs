//! Dense bit-indexed subsets of a finite carrier `0..len`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Largest carrier a [`Subset`] can index.
pub const MAX_POINTS: usize = 64;

/// A subset of the carrier `0..len`, stored as a single machine word.
///
/// Two subsets are equal when they live on the same carrier and have the same
/// members. The total order is lexicographic on the membership word
/// `m_0 m_1 … m_{len-1}` with `0 < 1`, so every family sorted by it has one
/// canonical order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    len: u8,
}

impl Subset {
    pub fn empty(len: usize) -> Self {
        assert!(len <= MAX_POINTS, "carrier of {len} points exceeds {MAX_POINTS}");
        Subset { bits: 0, len: len as u8 }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.bits = full_mask(len);
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(i);
        s
    }

    /// Builds a subset from raw bits; bits at or above `len` must be clear.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_POINTS);
        debug_assert_eq!(bits & !full_mask(len), 0, "stray bits above carrier");
        Subset { bits: bits & full_mask(len), len: len as u8 }
    }

    /// Builds a subset from indices, rejecting any outside the carrier.
    pub fn try_from_indices<I: IntoIterator<Item = usize>>(len: usize, it: I) -> Result<Self> {
        if len > MAX_POINTS {
            return Err(Error::TooManyPoints { len, max: MAX_POINTS });
        }
        let mut s = Self::empty(len);
        for i in it {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, len });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, it: I) -> Self {
        Self::try_from_indices(len, it).expect("index out of range")
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the ambient carrier.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe() && self.bits >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe(), "index {i} out of range for carrier {}", self.len);
        self.bits |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.universe() {
            self.bits &= !(1 << i);
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset { bits: self.bits | other.bits, len: self.len }
    }

    #[inline]
    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset { bits: self.bits & other.bits, len: self.len }
    }

    #[inline]
    pub fn difference(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset { bits: self.bits & !other.bits, len: self.len }
    }

    #[inline]
    pub fn complement(&self) -> Subset {
        Subset { bits: !self.bits & full_mask(self.universe()), len: self.len }
    }

    #[inline]
    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn meets(&self, other: &Subset) -> bool {
        self.bits & other.bits != 0
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under an index map into a carrier of size `len`.
    pub fn map(&self, len: usize, f: impl Fn(usize) -> usize) -> Subset {
        let mut out = Subset::empty(len);
        for i in self.iter() {
            out.insert(f(i));
        }
        out
    }

    /// Lexicographic key on the membership word.
    #[inline]
    fn lex_key(&self) -> u64 {
        self.bits.reverse_bits()
    }
}

#[inline]
fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the members of a [`Subset`] in increasing order.
#[derive(Clone)]
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Every subset of `0..len`, in increasing bit-pattern order.
pub fn powerset(len: usize) -> impl Iterator<Item = Subset> {
    assert!(len < 64, "powerset of {len} points is not enumerable");
    (0..1u64 << len).map(move |b| Subset::from_bits(len, b))
}

/// Every subset of `set`, via the carry-rippler trick.
pub fn subsets_of(set: Subset) -> impl Iterator<Item = Subset> {
    let len = set.universe();
    let mask = set.bits();
    let mut cur = 0u64;
    let mut done = false;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        cur = cur.wrapping_sub(mask) & mask;
        done = cur == 0;
        Some(Subset::from_bits(len, out))
    })
}

/// A duplicate-free family of subsets of one carrier in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SubsetFamily {
    universe: usize,
    sets: Vec<Subset>,
}

impl SubsetFamily {
    /// Sorts and deduplicates `sets`. All members must share `universe`.
    pub fn new(universe: usize, mut sets: Vec<Subset>) -> Self {
        assert!(sets.iter().all(|s| s.universe() == universe));
        sets.sort_unstable();
        sets.dedup();
        SubsetFamily { universe, sets }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn position(&self, s: &Subset) -> Option<usize> {
        self.sets.binary_search(s).ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.sets
    }

    pub fn into_vec(self) -> Vec<Subset> {
        self.sets
    }

    pub fn complements(&self) -> SubsetFamily {
        SubsetFamily::new(self.universe, self.sets.iter().map(Subset::complement).collect())
    }

    pub fn filter(&self, mut keep: impl FnMut(&Subset) -> bool) -> SubsetFamily {
        SubsetFamily {
            universe: self.universe,
            sets: self.sets.iter().copied().filter(|s| keep(s)).collect(),
        }
    }

    pub fn intersect(&self, other: &SubsetFamily) -> SubsetFamily {
        self.filter(|s| other.contains(s))
    }

    pub fn is_subfamily(&self, other: &SubsetFamily) -> bool {
        self.sets.iter().all(|s| other.contains(s))
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = &'a Subset;
    type IntoIter = core::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lexicographic_order_on_membership_word() {
        // Words over 3 points: {} = 000, {2} = 001, {1} = 010, {0} = 100.
        let mut v = [Subset::from_indices(3, [0]),
            Subset::from_indices(3, [1]),
            Subset::from_indices(3, [2]),
            Subset::empty(3),
            Subset::from_indices(3, [0, 1, 2])];
        v.sort();
        let words: Vec<Vec<usize>> = v.iter().map(|s| s.to_vec()).collect();
        assert_eq!(words, vec![vec![], vec![2], vec![1], vec![0], vec![0, 1, 2]]);
    }

    #[test]
    fn index_out_of_range_is_rejected() {
        assert_eq!(
            Subset::try_from_indices(3, [0, 3]),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn subsets_of_visits_each_once() {
        let s = Subset::from_indices(6, [0, 2, 5]);
        let all: Vec<Subset> = subsets_of(s).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(&s)));
        let fam = SubsetFamily::new(6, all);
        assert_eq!(fam.len(), 8);
    }

    #[test]
    fn complement_stays_in_carrier() {
        let s = Subset::from_indices(5, [1, 3]);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert_eq!(Subset::full(64).complement(), Subset::empty(64));
    }
}
