//! Finite T₀ spaces given by an explicit family of open sets.
//!
//! Everything the SI topology needs is computed from the open sets and the
//! specialization order they induce. Where a finite space admits a shortcut
//! (an irreducible set has a greatest element, every open set is SI-open, …)
//! the shortcut is exposed next to the definitional computation so the two
//! can be compared; library code paths use the definitional one.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::FinPoset;
use crate::subset::{powerset, subsets_of, Subset, SubsetFamily, MAX_POINTS};

/// Default bound on carrier size for anything that walks the powerset.
pub const DEFAULT_CAP: usize = 20;

/// Bound on the number of open sets materialized by a construction.
pub const MAX_OPENS: usize = 1 << 21;

/// A finite T₀ space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinSpace {
    size: usize,
    /// Canonically ordered.
    opens: Vec<Subset>,
    order: FinPoset,
}

/// How irreducibility is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrrMethod {
    /// Whenever two open sets meet `F`, so does their intersection.
    OpenPairs,
    /// The same criterion restricted to minimal open neighbourhoods of points
    /// of `F`; exact whenever every point has a least open neighbourhood.
    Neighbourhoods,
    /// Nonempty with a greatest element in the specialization order. Only
    /// valid for finite spaces.
    Maximum,
}

impl FinSpace {
    /// Validates `opens` as a T₀ topology on `0..size`.
    pub fn from_opens(size: usize, opens: Vec<Subset>) -> Result<Self> {
        if size > MAX_POINTS {
            return Err(Error::TooManyPoints { len: size, max: MAX_POINTS });
        }
        if let Some(bad) = opens.iter().find(|u| u.universe() != size) {
            let index = bad.iter().find(|&i| i >= size).unwrap_or(bad.universe());
            return Err(Error::IndexOutOfRange { index, len: size });
        }
        let family = SubsetFamily::new(size, opens);
        if !family.contains(&Subset::empty(size)) {
            return Err(Error::MissingEmptyOpen);
        }
        if !family.contains(&Subset::full(size)) {
            return Err(Error::MissingFullOpen);
        }
        let nbhd: Vec<Subset> = (0..size)
            .map(|x| {
                family
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(Subset::full(size), |acc, u| acc.intersection(u))
            })
            .collect();

        // A finite family closed under binary unions and intersections is
        // exactly the set of unions of the least neighbourhoods.
        match union_closure(size, nbhd.iter().copied(), family.len()) {
            Ok(generated) if generated == family => {}
            _ => return Err(closure_witness(&family)),
        }
        for a in 0..size {
            for b in nbhd[a].iter() {
                if b != a && nbhd[b].contains(a) {
                    return Err(Error::T0Violation { a, b });
                }
            }
        }
        let order = FinPoset::from_up_sets_unchecked(size, nbhd);
        Ok(FinSpace { size, opens: family.into_vec(), order })
    }

    /// The Alexandroff topology of `p`: open sets are the up-sets.
    pub fn alexandroff(p: &FinPoset) -> Self {
        let n = p.size();
        let opens = union_closure(n, (0..n).map(|i| p.principal_filter(i)), usize::MAX)
            .expect("unbounded")
            .into_vec();
        FinSpace { size: n, opens, order: p.clone() }
    }

    pub fn discrete(n: usize) -> Self {
        Self::alexandroff(&FinPoset::antichain(n))
    }

    /// Opens `∅, {1}, {0,1}`; so `0 ≤ 1`.
    pub fn sierpinski() -> Self {
        Self::alexandroff(&FinPoset::chain(2))
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn empty() -> Self {
        Self::discrete(0)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn opens_family(&self) -> SubsetFamily {
        SubsetFamily::new(self.size, self.opens.clone())
    }

    pub fn closed_sets(&self) -> SubsetFamily {
        self.opens_family().complements()
    }

    pub fn is_open(&self, u: &Subset) -> bool {
        u.universe() == self.size && self.opens.binary_search(u).is_ok()
    }

    pub fn is_closed(&self, c: &Subset) -> bool {
        c.universe() == self.size && self.is_open(&c.complement())
    }

    pub fn is_clopen(&self, u: &Subset) -> bool {
        self.is_open(u) && self.is_closed(u)
    }

    /// The only clopen sets are `∅` and the carrier.
    pub fn is_connected(&self) -> bool {
        let (empty, full) = (Subset::empty(self.size), Subset::full(self.size));
        self.opens
            .iter()
            .all(|u| *u == empty || *u == full || !self.is_closed(u))
    }

    /// The specialization order: `x ≤ y` iff every open set containing `x`
    /// contains `y`.
    pub fn specialization(&self) -> &FinPoset {
        &self.order
    }

    /// Least open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> Subset {
        self.order.principal_filter(x)
    }

    fn check(&self, a: &Subset) -> Result<()> {
        if a.universe() != self.size {
            let index = a.iter().find(|&i| i >= self.size).unwrap_or(a.universe());
            return Err(Error::IndexOutOfRange { index, len: self.size });
        }
        Ok(())
    }

    /// Smallest closed superset of `a`; in a finite space this is `↓a`.
    pub fn closure(&self, a: &Subset) -> Result<Subset> {
        self.check(a)?;
        Ok(self.order.down_closure_unchecked(a))
    }

    /// Closure as the complement of the union of all open sets missing `a`.
    pub fn closure_by_opens(&self, a: &Subset) -> Result<Subset> {
        self.check(a)?;
        let outside = self
            .opens
            .iter()
            .filter(|u| !u.meets(a))
            .fold(Subset::empty(self.size), |acc, u| acc.union(u));
        Ok(outside.complement())
    }

    pub fn interior(&self, a: &Subset) -> Result<Subset> {
        Ok(self.closure(&a.complement())?.complement())
    }

    pub fn is_irreducible(&self, f: &Subset) -> bool {
        self.is_irreducible_with(f, IrrMethod::Neighbourhoods)
    }

    pub fn is_irreducible_with(&self, f: &Subset, method: IrrMethod) -> bool {
        if f.is_empty() || f.universe() != self.size {
            return false;
        }
        match method {
            IrrMethod::OpenPairs => {
                let meeting: Vec<&Subset> = self.opens.iter().filter(|u| u.meets(f)).collect();
                meeting.iter().enumerate().all(|(i, u)| {
                    meeting[i..].iter().all(|v| u.intersection(v).meets(f))
                })
            }
            IrrMethod::Neighbourhoods => f.iter().all(|a| {
                let na = self.neighbourhood(a).intersection(f);
                f.iter().all(|b| na.meets(&self.neighbourhood(b)))
            }),
            IrrMethod::Maximum => self.order.maximum(f).is_some(),
        }
    }

    /// Least upper bound in the specialization order.
    pub fn sup(&self, f: &Subset) -> Option<usize> {
        self.order.sup(f)
    }

    pub fn is_directed(&self, d: &Subset) -> bool {
        self.order.is_directed(d)
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.size > cap || self.size >= 64 {
            return Err(Error::CapExceeded { size: self.size, cap });
        }
        Ok(())
    }

    /// Enumerates irreducible sets and their suprema.
    pub fn analyze(&self, cap: usize) -> Result<IrrAnalysis<'_>> {
        self.analyze_with(cap, IrrMethod::Neighbourhoods)
    }

    pub fn analyze_with(&self, cap: usize, method: IrrMethod) -> Result<IrrAnalysis<'_>> {
        self.check_cap(cap)?;
        let mut irr = Vec::new();
        for f in powerset(self.size).skip(1) {
            if self.is_irreducible_with(&f, method) {
                irr.push((f, self.sup(&f)));
            }
        }
        irr.sort_unstable_by_key(|a| a.0);
        let rules = irr
            .iter()
            .filter_map(|&(f, s)| s.filter(|s| !f.contains(*s)).map(|s| (f, s)))
            .collect();
        Ok(IrrAnalysis { space: self, irr, rules, cap })
    }

    pub fn irr_enumerate(&self, cap: usize) -> Result<SubsetFamily> {
        Ok(self.analyze(cap)?.irr())
    }

    pub fn irr_plus_enumerate(&self, cap: usize) -> Result<SubsetFamily> {
        Ok(self.analyze(cap)?.irr_plus())
    }

    pub fn is_si_open(&self, u: &Subset, cap: usize) -> Result<bool> {
        Ok(self.analyze(cap)?.is_si_open(u))
    }

    pub fn is_si_closed(&self, c: &Subset, cap: usize) -> Result<bool> {
        Ok(self.analyze(cap)?.is_si_closed(c))
    }

    pub fn si_space(&self, cap: usize) -> Result<FinSpace> {
        self.analyze(cap)?.si_space()
    }

    pub fn is_i_closed(&self, a: &Subset, cap: usize) -> Result<bool> {
        Ok(self.analyze(cap)?.is_i_closed(a))
    }

    pub fn is_i_open(&self, a: &Subset, cap: usize) -> Result<bool> {
        Ok(self.analyze(cap)?.is_i_open(a))
    }

    pub fn theta(&self, cap: usize) -> Result<SubsetFamily> {
        Ok(self.analyze(cap)?.theta())
    }

    pub fn delta(&self, cap: usize) -> Result<SubsetFamily> {
        Ok(self.analyze(cap)?.delta())
    }

    /// I-closure by saturation: add `⋁F` for every `F ∈ Irr⁺(X)` inside the
    /// current set until nothing changes. Only subsets of the growing set are
    /// ever examined, so the cap applies to the closure, not the carrier.
    pub fn cl_i(&self, a: &Subset, cap: usize) -> Result<Subset> {
        self.check(a)?;
        let mut cur = *a;
        loop {
            if cur.count() > cap || cur.count() >= 64 {
                return Err(Error::CapExceeded { size: cur.count(), cap });
            }
            let mut next = cur;
            for f in subsets_of(cur).skip(1) {
                if let Some(s) = self.sup(&f) {
                    if !next.contains(s) && self.is_irreducible(&f) {
                        next.insert(s);
                    }
                }
            }
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `Irr(X) = Irr⁺(X)`.
    pub fn is_strongly_complete(&self, cap: usize) -> Result<bool> {
        Ok(self.analyze(cap)?.unbounded_irreducible().is_none())
    }

    /// Every directed subset has a supremum.
    pub fn is_dcpo(&self, cap: usize) -> Result<bool> {
        self.check_cap(cap)?;
        Ok(powerset(self.size)
            .filter(|d| self.is_directed(d))
            .all(|d| self.sup(&d).is_some()))
    }

    /// Every closed irreducible set is the closure of exactly one point.
    pub fn is_sober(&self, cap: usize) -> Result<bool> {
        self.check_cap(cap)?;
        Ok(self.closed_sets().iter().all(|c| {
            !self.is_irreducible(c)
                || (0..self.size)
                    .filter(|&x| self.closure_by_opens(&Subset::singleton(self.size, x)).ok() == Some(*c))
                    .count()
                    == 1
        }))
    }

    /// The subspace on `y`, with points renumbered in increasing order.
    pub fn subspace(&self, y: &Subset) -> Result<FinSpace> {
        Ok(self.subspace_with_embedding(y)?.0)
    }

    /// The subspace on `y` together with the inclusion: entry `i` is the
    /// ambient index of subspace point `i`.
    pub fn subspace_with_embedding(&self, y: &Subset) -> Result<(FinSpace, Vec<usize>)> {
        self.check(y)?;
        let emb = y.to_vec();
        let m = emb.len();
        let restrict = |u: &Subset| Subset::from_indices(m, (0..m).filter(|&i| u.contains(emb[i])));
        let opens = SubsetFamily::new(m, self.opens.iter().map(restrict).collect()).into_vec();
        let up = (0..m).map(|i| restrict(&self.neighbourhood(emb[i]))).collect();
        let order = FinPoset::from_up_sets_unchecked(m, up);
        Ok((FinSpace { size: m, opens, order }, emb))
    }

    /// The space transported along a permutation: `perm[i]` is the new index
    /// of old point `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FinSpace> {
        crate::poset::check_permutation(perm, self.size)?;
        let opens = SubsetFamily::new(
            self.size,
            self.opens.iter().map(|u| u.map(self.size, |i| perm[i])).collect(),
        )
        .into_vec();
        let order = self.order.relabel(perm)?;
        Ok(FinSpace { size: self.size, opens, order })
    }
}

/// Finds a pair of open sets whose union or intersection is missing.
fn closure_witness(family: &SubsetFamily) -> Error {
    let sets = family.as_slice();
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !family.contains(&a.union(b)) {
                return Error::NotClosedUnderUnion(*a, *b);
            }
            if !family.contains(&a.intersection(b)) {
                return Error::NotClosedUnderIntersection(*a, *b);
            }
        }
    }
    unreachable!("a family closed under binary unions and intersections generates itself")
}

/// All unions of members of `base`, including the empty union.
pub fn union_closure(
    size: usize,
    base: impl IntoIterator<Item = Subset>,
    limit: usize,
) -> Result<SubsetFamily> {
    let mut fam = BTreeSet::new();
    fam.insert(Subset::empty(size));
    for b in base {
        let grown: Vec<Subset> = fam.iter().map(|f| f.union(&b)).collect();
        fam.extend(grown);
        if fam.len() > limit {
            return Err(Error::CapExceeded { size: fam.len(), cap: limit });
        }
    }
    Ok(SubsetFamily::new(size, fam.into_iter().collect()))
}

/// All finite intersections of members of `base`, including the empty
/// intersection (the full carrier).
pub fn intersection_closure(
    size: usize,
    base: impl IntoIterator<Item = Subset>,
    limit: usize,
) -> Result<SubsetFamily> {
    let mut fam = BTreeSet::new();
    fam.insert(Subset::full(size));
    for b in base {
        let grown: Vec<Subset> = fam.iter().map(|f| f.intersection(&b)).collect();
        fam.extend(grown);
        if fam.len() > limit {
            return Err(Error::CapExceeded { size: fam.len(), cap: limit });
        }
    }
    Ok(SubsetFamily::new(size, fam.into_iter().collect()))
}

/// Irreducible subsets of a space together with their suprema.
#[derive(Clone, Debug)]
pub struct IrrAnalysis<'a> {
    space: &'a FinSpace,
    /// Canonical order, each with its supremum if one exists.
    irr: Vec<(Subset, Option<usize>)>,
    /// Members of `Irr⁺` whose supremum lies outside the set. The others
    /// satisfy every sup-closure condition trivially.
    rules: Vec<(Subset, usize)>,
    cap: usize,
}

impl<'a> IrrAnalysis<'a> {
    pub fn space(&self) -> &'a FinSpace {
        self.space
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn irr(&self) -> SubsetFamily {
        SubsetFamily::new(self.space.size, self.irr.iter().map(|p| p.0).collect())
    }

    pub fn irr_plus(&self) -> SubsetFamily {
        SubsetFamily::new(
            self.space.size,
            self.irr.iter().filter(|p| p.1.is_some()).map(|p| p.0).collect(),
        )
    }

    /// `Irr⁺(X)` paired with suprema.
    pub fn irr_plus_with_sups(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.irr.iter().filter_map(|&(f, s)| s.map(|s| (f, s)))
    }

    /// The irreducible sets whose supremum is not a member.
    pub fn nontrivial_sups(&self) -> &[(Subset, usize)] {
        &self.rules
    }

    /// An irreducible set without a supremum, if any.
    pub fn unbounded_irreducible(&self) -> Option<Subset> {
        self.irr.iter().find(|p| p.1.is_none()).map(|p| p.0)
    }

    /// Clause (ii) of SI-openness: `⋁F ∈ U` forces `F ∩ U ≠ ∅`.
    pub fn is_inaccessible(&self, u: &Subset) -> bool {
        self.rules.iter().all(|(f, s)| !u.contains(*s) || f.meets(u))
    }

    /// Closed under suprema of members of `Irr⁺`.
    pub fn is_sup_closed(&self, a: &Subset) -> bool {
        self.rules.iter().all(|(f, s)| !f.is_subset(a) || a.contains(*s))
    }

    pub fn is_si_open(&self, u: &Subset) -> bool {
        self.space.is_open(u) && self.is_inaccessible(u)
    }

    /// Closed and containing `⋁F` for each `F ∈ Irr⁺` it contains.
    pub fn is_si_closed(&self, c: &Subset) -> bool {
        self.space.is_closed(c) && self.is_sup_closed(c)
    }

    pub fn is_i_closed(&self, a: &Subset) -> bool {
        a.universe() == self.space.size && self.is_sup_closed(a)
    }

    pub fn is_i_open(&self, a: &Subset) -> bool {
        a.universe() == self.space.size && self.is_inaccessible(a)
    }

    pub fn si_opens(&self) -> SubsetFamily {
        self.space.opens_family().filter(|u| self.is_inaccessible(u))
    }

    pub fn si_closed_sets(&self) -> SubsetFamily {
        self.si_opens().complements()
    }

    /// `SI(X)`.
    pub fn si_space(&self) -> Result<FinSpace> {
        FinSpace::from_opens(self.space.size, self.si_opens().into_vec())
    }

    /// Closure in `SI(X)`: smallest SI-closed superset.
    pub fn si_closure(&self, a: &Subset) -> Subset {
        self.si_closed_sets()
            .iter()
            .filter(|c| a.is_subset(c))
            .fold(Subset::full(self.space.size), |acc, c| acc.intersection(c))
    }

    /// `Θ(X)`, the I-closed sets.
    pub fn theta(&self) -> SubsetFamily {
        SubsetFamily::new(
            self.space.size,
            powerset(self.space.size).filter(|a| self.is_sup_closed(a)).collect(),
        )
    }

    /// `Δ(X)`, the I-open sets.
    pub fn delta(&self) -> SubsetFamily {
        self.theta().complements()
    }

    /// I-closure as the intersection of all I-closed supersets.
    pub fn cl_i_by_intersection(&self, a: &Subset) -> Subset {
        self.theta()
            .iter()
            .filter(|c| a.is_subset(c))
            .fold(Subset::full(self.space.size), |acc, c| acc.intersection(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::all_posets_up_to;
    use alloc::vec;

    fn set(n: usize, ix: &[usize]) -> Subset {
        Subset::from_indices(n, ix.iter().copied())
    }

    /// a=0, b=1, t=2 with a ≤ t, b ≤ t.
    fn join3() -> FinSpace {
        FinSpace::alexandroff(&FinPoset::from_generators(3, [(0, 2), (1, 2)]).unwrap())
    }

    #[test]
    fn sierpinski_specialization() {
        let s = FinSpace::from_opens(2, vec![set(2, &[]), set(2, &[1]), set(2, &[0, 1])]).unwrap();
        assert_eq!(s, FinSpace::sierpinski());
        assert!(s.specialization().leq(0, 1));
        assert!(!s.specialization().leq(1, 0));
    }

    #[test]
    fn discrete_is_antichain() {
        let d = FinSpace::discrete(2);
        assert_eq!(d.specialization(), &FinPoset::antichain(2));
        assert_eq!(d.opens().len(), 4);
        assert_eq!(FinSpace::sierpinski().opens().len(), 3);
    }

    #[test]
    fn alexandroff_round_trip() {
        let c = FinPoset::chain(3);
        assert_eq!(FinSpace::alexandroff(&c).specialization(), &c);
        for p in all_posets_up_to(4) {
            let x = FinSpace::alexandroff(&p);
            assert_eq!(x.specialization(), &p);
            // Brute force: the open sets are exactly the up-sets.
            let upsets: Vec<Subset> = powerset(p.size()).filter(|a| p.is_up_set(a)).collect();
            assert_eq!(x.opens(), SubsetFamily::new(p.size(), upsets).as_slice());
            // Re-validating the open family gives back the same space.
            assert_eq!(FinSpace::from_opens(x.size(), x.opens().to_vec()).unwrap(), x);
        }
    }

    #[test]
    fn join_poset_has_five_opens() {
        // Up-sets of {a,b ≤ t}: ∅, {t}, {a,t}, {b,t}, {a,b,t}.
        let x = join3();
        let expected = SubsetFamily::new(
            3,
            vec![set(3, &[]), set(3, &[2]), set(3, &[0, 2]), set(3, &[1, 2]), set(3, &[0, 1, 2])],
        );
        assert_eq!(x.opens(), expected.as_slice());
    }

    #[test]
    fn invalid_topologies() {
        assert_eq!(
            FinSpace::from_opens(2, vec![set(2, &[0, 1])]),
            Err(Error::MissingEmptyOpen)
        );
        assert_eq!(FinSpace::from_opens(2, vec![set(2, &[])]), Err(Error::MissingFullOpen));
        assert_eq!(
            FinSpace::from_opens(3, vec![set(3, &[]), set(3, &[0]), set(3, &[1]), set(3, &[0, 1, 2])]),
            Err(Error::NotClosedUnderUnion(set(3, &[1]), set(3, &[0])))
        );
        assert_eq!(
            FinSpace::from_opens(
                3,
                vec![set(3, &[]), set(3, &[0, 1]), set(3, &[1, 2]), set(3, &[0, 1, 2])]
            ),
            Err(Error::NotClosedUnderIntersection(set(3, &[1, 2]), set(3, &[0, 1])))
        );
        assert_eq!(
            FinSpace::from_opens(2, vec![set(2, &[]), set(2, &[0, 1])]),
            Err(Error::T0Violation { a: 0, b: 1 })
        );
    }

    #[test]
    fn closures() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.closure(&set(2, &[1])).unwrap(), set(2, &[0, 1]));
        assert!(s.closure(&set(2, &[])).unwrap().is_empty());
        let c = FinSpace::alexandroff(&FinPoset::chain(3));
        assert_eq!(c.closure(&set(3, &[1])).unwrap(), set(3, &[0, 1]));
        for p in all_posets_up_to(4) {
            let x = FinSpace::alexandroff(&p);
            for a in powerset(x.size()) {
                assert_eq!(x.closure(&a).unwrap(), x.closure_by_opens(&a).unwrap());
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        let x = join3();
        for i in 0..3 {
            assert!(x.is_irreducible(&Subset::singleton(3, i)));
        }
        assert!(!x.is_irreducible(&set(3, &[0, 1])));
        assert!(x.is_irreducible(&set(3, &[0, 2])));
        assert!(!x.is_irreducible(&Subset::empty(3)));
    }

    #[test]
    fn three_irreducibility_routes_agree() {
        for p in all_posets_up_to(4) {
            let x = FinSpace::alexandroff(&p);
            for f in powerset(x.size()) {
                let by_pairs = x.is_irreducible_with(&f, IrrMethod::OpenPairs);
                assert_eq!(by_pairs, x.is_irreducible_with(&f, IrrMethod::Neighbourhoods));
                assert_eq!(by_pairs, x.is_irreducible_with(&f, IrrMethod::Maximum));
            }
        }
    }

    #[test]
    fn irr_families() {
        let s = FinSpace::sierpinski();
        let a = s.analyze(DEFAULT_CAP).unwrap();
        let expect = SubsetFamily::new(2, vec![set(2, &[0]), set(2, &[1]), set(2, &[0, 1])]);
        assert_eq!(a.irr(), expect);
        assert_eq!(a.irr_plus(), expect);
        let d = FinSpace::discrete(2).irr_enumerate(DEFAULT_CAP).unwrap();
        assert_eq!(d, SubsetFamily::new(2, vec![set(2, &[0]), set(2, &[1])]));
        assert!(FinSpace::empty().irr_enumerate(DEFAULT_CAP).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let x = FinSpace::discrete(5);
        assert_eq!(x.irr_enumerate(4), Err(Error::CapExceeded { size: 5, cap: 4 }));
        assert!(x.irr_enumerate(5).is_ok());
    }

    #[test]
    fn si_topology_examples() {
        let s = FinSpace::sierpinski();
        assert!(s.is_si_open(&set(2, &[1]), DEFAULT_CAP).unwrap());
        assert!(!s.is_si_open(&set(2, &[0]), DEFAULT_CAP).unwrap());
        assert!(!s.is_si_closed(&set(2, &[1]), DEFAULT_CAP).unwrap());
        assert!(s.is_si_closed(&set(2, &[0, 1]), DEFAULT_CAP).unwrap());
        for x in [FinSpace::sierpinski(), FinSpace::discrete(2), join3()] {
            assert_eq!(x.si_space(DEFAULT_CAP).unwrap(), x);
        }
    }

    #[test]
    fn i_closure_examples() {
        let x = join3();
        assert!(x.cl_i(&Subset::empty(3), DEFAULT_CAP).unwrap().is_empty());
        assert_eq!(x.cl_i(&Subset::full(3), DEFAULT_CAP).unwrap(), Subset::full(3));
        assert_eq!(x.cl_i(&set(3, &[0, 1]), DEFAULT_CAP).unwrap(), set(3, &[0, 1]));
        assert_eq!(x.theta(DEFAULT_CAP).unwrap().len(), 8);
        assert!(x.is_i_closed(&Subset::empty(3), DEFAULT_CAP).unwrap());
    }

    #[test]
    fn completeness_predicates() {
        for x in [FinSpace::empty(), FinSpace::sierpinski(), join3(), FinSpace::discrete(3)] {
            assert!(x.is_strongly_complete(DEFAULT_CAP).unwrap());
            assert!(x.is_dcpo(DEFAULT_CAP).unwrap());
            assert!(x.is_sober(DEFAULT_CAP).unwrap());
        }
    }

    #[test]
    fn subspaces() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.subspace(&Subset::full(2)).unwrap(), s);
        assert_eq!(s.subspace(&set(2, &[1])).unwrap(), FinSpace::point());
        assert_eq!(join3().subspace(&set(3, &[0, 1])).unwrap(), FinSpace::discrete(2));
        assert_eq!(s.subspace(&Subset::empty(2)).unwrap(), FinSpace::empty());
    }

    #[test]
    fn connectedness_and_clopens() {
        assert!(FinSpace::sierpinski().is_connected());
        assert!(!FinSpace::discrete(2).is_connected());
        assert!(FinSpace::sierpinski().is_clopen(&Subset::empty(2)));
        assert!(FinSpace::empty().is_connected());
    }

    #[test]
    fn relabel_preserves_structure() {
        let x = join3();
        let y = x.relabel(&[2, 0, 1]).unwrap();
        // Old t=2 is new 1; new 2 (old a) and new 0 (old b) sit below it.
        assert!(y.specialization().leq(2, 1) && y.specialization().leq(0, 1));
        assert_eq!(y.opens().len(), 5);
    }
}
