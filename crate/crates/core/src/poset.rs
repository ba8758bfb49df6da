//! Finite partial orders over indices `0..size`.

use alloc::vec::Vec;

use crate::error::{Axiom, Error, Result};
use crate::subset::{Subset, MAX_POINTS};

/// A finite poset on `0..size`, stored as principal filters and ideals.
///
/// The relation is validated on construction and never changes afterwards.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinPoset {
    size: usize,
    /// `up[i] = { j | i ≤ j }`
    up: Vec<Subset>,
    /// `down[i] = { j | j ≤ i }`
    down: Vec<Subset>,
}

impl FinPoset {
    /// Builds a poset from the full relation; `pairs` lists every `(a, b)` with
    /// `a ≤ b`, reflexive pairs included.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(size: usize, pairs: I) -> Result<Self> {
        let up = Self::rows(size, pairs)?;
        Self::from_up_sets(size, up)
    }

    /// Builds a poset from generating pairs, taking the reflexive-transitive
    /// closure first. Only antisymmetry can fail.
    pub fn from_generators<I: IntoIterator<Item = (usize, usize)>>(
        size: usize,
        pairs: I,
    ) -> Result<Self> {
        let mut up = Self::rows(size, pairs)?;
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if up[i].contains(k) {
                    let via = up[k];
                    up[i] = up[i].union(&via);
                }
            }
        }
        Self::from_up_sets(size, up)
    }

    fn rows<I: IntoIterator<Item = (usize, usize)>>(size: usize, pairs: I) -> Result<Vec<Subset>> {
        if size > MAX_POINTS {
            return Err(Error::TooManyPoints { len: size, max: MAX_POINTS });
        }
        let mut up = alloc::vec![Subset::empty(size); size];
        for (a, b) in pairs {
            for i in [a, b] {
                if i >= size {
                    return Err(Error::IndexOutOfRange { index: i, len: size });
                }
            }
            up[a].insert(b);
        }
        Ok(up)
    }

    /// Validates the relation given as principal filters `up[i] = { j | i ≤ j }`.
    pub fn from_up_sets(size: usize, up: Vec<Subset>) -> Result<Self> {
        if up.len() != size || up.iter().any(|r| r.universe() != size) {
            return Err(Error::SpaceMismatch);
        }
        for (i, row) in up.iter().enumerate() {
            if !row.contains(i) {
                return Err(Error::NotAPoset { axiom: Axiom::Reflexivity, a: i, b: i, via: None });
            }
        }
        for a in 0..size {
            for b in up[a].iter() {
                if a != b && up[b].contains(a) {
                    let (a, b) = (a.min(b), a.max(b));
                    return Err(Error::NotAPoset { axiom: Axiom::Antisymmetry, a, b, via: None });
                }
                if !up[b].is_subset(&up[a]) {
                    let c = up[b].difference(&up[a]).first().unwrap();
                    return Err(Error::NotAPoset {
                        axiom: Axiom::Transitivity,
                        a,
                        b: c,
                        via: Some(b),
                    });
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(size, up))
    }

    pub(crate) fn from_up_sets_unchecked(size: usize, up: Vec<Subset>) -> Self {
        let mut down = alloc::vec![Subset::empty(size); size];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        FinPoset { size, up, down }
    }

    pub fn chain(n: usize) -> Self {
        let up = (0..n)
            .map(|i| Subset::from_indices(n, i..n))
            .collect();
        Self::from_up_sets_unchecked(n, up)
    }

    pub fn antichain(n: usize) -> Self {
        let up = (0..n).map(|i| Subset::singleton(n, i)).collect();
        Self::from_up_sets_unchecked(n, up)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `↑a`
    #[inline]
    pub fn principal_filter(&self, a: usize) -> Subset {
        self.up[a]
    }

    /// `↓a`
    #[inline]
    pub fn principal_ideal(&self, a: usize) -> Subset {
        self.down[a]
    }

    /// Every pair `(a, b)` with `a ≤ b`, in lexicographic order.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|a| self.up[a].iter().map(move |b| (a, b)))
            .collect()
    }

    fn check(&self, a: &Subset) -> Result<()> {
        if a.universe() != self.size {
            let index = a.iter().find(|&i| i >= self.size).unwrap_or(a.universe());
            return Err(Error::IndexOutOfRange { index, len: self.size });
        }
        Ok(())
    }

    /// `↓A = { x | x ≤ a for some a ∈ A }`.
    pub fn down_closure(&self, a: &Subset) -> Result<Subset> {
        self.check(a)?;
        Ok(self.down_closure_unchecked(a))
    }

    /// `↑A = { x | a ≤ x for some a ∈ A }`.
    pub fn up_closure(&self, a: &Subset) -> Result<Subset> {
        self.check(a)?;
        Ok(self.up_closure_unchecked(a))
    }

    pub(crate) fn down_closure_unchecked(&self, a: &Subset) -> Subset {
        a.iter()
            .fold(Subset::empty(self.size), |acc, i| acc.union(&self.down[i]))
    }

    pub(crate) fn up_closure_unchecked(&self, a: &Subset) -> Subset {
        a.iter()
            .fold(Subset::empty(self.size), |acc, i| acc.union(&self.up[i]))
    }

    pub fn is_up_set(&self, a: &Subset) -> bool {
        a.iter().all(|i| self.up[i].is_subset(a))
    }

    pub fn is_down_set(&self, a: &Subset) -> bool {
        a.iter().all(|i| self.down[i].is_subset(a))
    }

    /// Nonempty, and every pair in `d` has an upper bound inside `d`.
    pub fn is_directed(&self, d: &Subset) -> bool {
        if d.is_empty() {
            return false;
        }
        d.iter().all(|a| {
            d.iter()
                .all(|b| self.up[a].intersection(&self.up[b]).meets(d))
        })
    }

    /// Common upper bounds of `a`; the whole carrier when `a` is empty.
    pub fn upper_bounds(&self, a: &Subset) -> Subset {
        a.iter()
            .fold(Subset::full(self.size), |acc, i| acc.intersection(&self.up[i]))
    }

    pub fn lower_bounds(&self, a: &Subset) -> Subset {
        a.iter()
            .fold(Subset::full(self.size), |acc, i| acc.intersection(&self.down[i]))
    }

    /// The least element of `a`, if it has one.
    pub fn minimum(&self, a: &Subset) -> Option<usize> {
        a.iter().find(|&m| a.is_subset(&self.up[m]))
    }

    /// The greatest element of `a`, if it has one.
    pub fn maximum(&self, a: &Subset) -> Option<usize> {
        a.iter().find(|&m| a.is_subset(&self.down[m]))
    }

    /// Least upper bound of a nonempty `a`. The empty set never has one here,
    /// even when the poset has a bottom.
    pub fn sup(&self, a: &Subset) -> Option<usize> {
        if a.is_empty() {
            return None;
        }
        self.minimum(&self.upper_bounds(a))
    }

    pub fn maximal_elements(&self) -> Subset {
        Subset::from_indices(self.size, (0..self.size).filter(|&i| self.up[i].count() == 1))
    }

    /// Covering pairs `a ⋖ b` (the Hasse diagram).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            let mut strict = self.up[a];
            strict.remove(a);
            for b in strict.iter() {
                let mut between = strict.intersection(&self.down[b]);
                between.remove(b);
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The poset transported along a permutation: `perm[i]` is the new index
    /// of old element `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.size)?;
        let mut up = alloc::vec![Subset::empty(self.size); self.size];
        for (a, row) in self.up.iter().enumerate() {
            up[perm[a]] = row.map(self.size, |b| perm[b]);
        }
        Ok(Self::from_up_sets_unchecked(self.size, up))
    }

    /// Is `f` order-preserving from `self` into `other`?
    pub fn is_monotone_map(&self, other: &FinPoset, f: &[usize]) -> bool {
        (0..self.size).all(|a| self.up[a].iter().all(|b| other.leq(f[a], f[b])))
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::TableLength { expected: n, got: perm.len() });
    }
    let mut seen = Subset::empty(n);
    for &p in perm {
        if p >= n {
            return Err(Error::IndexOutOfRange { index: p, len: n });
        }
        if seen.contains(p) {
            return Err(Error::SpaceMismatch);
        }
        seen.insert(p);
    }
    Ok(())
}

/// All labeled posets on `0..n`, found by filtering relation matrices.
///
/// Counts: 1, 1, 3, 19, 219, 4231 for n = 0..=5.
pub fn all_posets(n: usize) -> Vec<FinPoset> {
    assert!(n <= 5, "exhaustive poset enumeration is limited to 5 points");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut up: Vec<Subset> = (0..n).map(|i| Subset::singleton(n, i)).collect();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                up[a].insert(b);
            }
        }
        let antisymmetric = (0..n).all(|a| up[a].iter().all(|b| a == b || !up[b].contains(a)));
        let transitive = (0..n).all(|a| up[a].iter().all(|b| up[b].is_subset(&up[a])));
        if antisymmetric && transitive {
            out.push(FinPoset::from_up_sets_unchecked(n, up));
        }
    }
    out
}

/// All labeled posets with at most `max` points.
pub fn all_posets_up_to(max: usize) -> Vec<FinPoset> {
    (0..=max).flat_map(all_posets).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// `a ≤ t`, `b ≤ t` with a=0, b=1, t=2.
    fn join3() -> FinPoset {
        FinPoset::from_generators(3, [(0, 2), (1, 2)]).unwrap()
    }

    fn set(n: usize, ix: &[usize]) -> Subset {
        Subset::from_indices(n, ix.iter().copied())
    }

    /// Down-closure straight from the definition, for cross-checking.
    fn brute_down(p: &FinPoset, a: &Subset) -> Subset {
        let n = p.size();
        Subset::from_indices(n, (0..n).filter(|&x| a.iter().any(|y| p.leq(x, y))))
    }

    fn brute_up(p: &FinPoset, a: &Subset) -> Subset {
        let n = p.size();
        Subset::from_indices(n, (0..n).filter(|&x| a.iter().any(|y| p.leq(y, x))))
    }

    #[test]
    fn closures_on_small_examples() {
        let c = FinPoset::chain(3);
        assert_eq!(c.down_closure(&set(3, &[2])).unwrap(), Subset::full(3));
        assert_eq!(c.up_closure(&set(3, &[0])).unwrap(), Subset::full(3));
        assert!(c.down_closure(&Subset::empty(3)).unwrap().is_empty());
        assert!(c.up_closure(&Subset::empty(3)).unwrap().is_empty());

        let j = join3();
        let t = set(3, &[2]);
        assert_eq!(j.down_closure(&t).unwrap(), brute_down(&j, &t));
        assert_eq!(j.down_closure(&t).unwrap(), set(3, &[0, 1, 2]));
        let a = set(3, &[0]);
        assert_eq!(j.up_closure(&a).unwrap(), brute_up(&j, &a));
        assert_eq!(j.up_closure(&a).unwrap(), set(3, &[0, 2]));
    }

    #[test]
    fn closure_rejects_foreign_subset() {
        let c = FinPoset::chain(3);
        assert_eq!(
            c.down_closure(&set(4, &[3])),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn directedness() {
        assert!(FinPoset::chain(3).is_directed(&Subset::full(3)));
        assert!(!join3().is_directed(&set(3, &[0, 1])));
        assert!(!FinPoset::chain(3).is_directed(&Subset::empty(3)));
        assert!(join3().is_directed(&set(3, &[0, 1, 2])));
    }

    #[test]
    fn suprema() {
        assert_eq!(FinPoset::chain(3).sup(&set(3, &[0, 1])), Some(1));
        assert_eq!(FinPoset::antichain(2).sup(&set(2, &[0, 1])), None);
        assert_eq!(join3().sup(&set(3, &[0, 1])), Some(2));
        // ∅ has no sup even with a bottom element.
        assert_eq!(FinPoset::chain(3).sup(&Subset::empty(3)), None);
    }

    #[test]
    fn directed_without_sup() {
        // a, b below both c and d; {a, b, c, d} is not directed, but {c} is, and
        // {a, b} has upper bounds {c, d} with no least one.
        let p = FinPoset::from_generators(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(p.sup(&set(4, &[0, 1])), None);
        assert!(!p.is_directed(&set(4, &[0, 1])));
    }

    #[test]
    fn invalid_relations_name_axiom_and_witness() {
        assert_eq!(
            FinPoset::new(2, [(0, 0), (0, 1)]),
            Err(Error::NotAPoset { axiom: Axiom::Reflexivity, a: 1, b: 1, via: None })
        );
        assert_eq!(
            FinPoset::new(2, [(0, 0), (1, 1), (0, 1), (1, 0)]),
            Err(Error::NotAPoset { axiom: Axiom::Antisymmetry, a: 0, b: 1, via: None })
        );
        assert_eq!(
            FinPoset::new(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
            Err(Error::NotAPoset { axiom: Axiom::Transitivity, a: 0, b: 2, via: Some(1) })
        );
        assert_eq!(
            FinPoset::from_generators(2, [(0, 1), (1, 0)]),
            Err(Error::NotAPoset { axiom: Axiom::Antisymmetry, a: 0, b: 1, via: None })
        );
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn covers_of_join() {
        assert_eq!(join3().covers(), vec![(0, 2), (1, 2)]);
        assert_eq!(FinPoset::chain(3).covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn closure_operators_exhaustive() {
        for p in all_posets_up_to(4) {
            let n = p.size();
            for a in crate::subset::powerset(n) {
                let d = p.down_closure(&a).unwrap();
                let u = p.up_closure(&a).unwrap();
                assert_eq!(d, brute_down(&p, &a));
                assert_eq!(u, brute_up(&p, &a));
                assert!(a.is_subset(&d) && a.is_subset(&u));
                assert_eq!(p.down_closure(&d).unwrap(), d);
                assert_eq!(p.up_closure(&u).unwrap(), u);
                for b in crate::subset::subsets_of(a) {
                    assert!(p.down_closure(&b).unwrap().is_subset(&d));
                    assert!(p.up_closure(&b).unwrap().is_subset(&u));
                }
                if let Some(s) = p.sup(&a) {
                    let ub = p.upper_bounds(&a);
                    assert!(ub.contains(s));
                    assert!(ub.iter().all(|u| p.leq(s, u)));
                }
            }
        }
    }

    #[test]
    fn directed_does_not_imply_sup_exists_in_general_but_does_in_finite() {
        // In a finite poset a directed set has a maximum, so its sup exists.
        for p in all_posets_up_to(4) {
            for d in crate::subset::powerset(p.size()) {
                if p.is_directed(&d) {
                    assert_eq!(p.sup(&d), p.maximum(&d));
                    assert!(p.sup(&d).is_some());
                }
            }
        }
    }
}
