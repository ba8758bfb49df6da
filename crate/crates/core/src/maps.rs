//! Maps between finite spaces and their continuity grades.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::space::{FinSpace, IrrAnalysis};
use crate::subset::{Subset, SubsetFamily};

/// A total function between the carriers of two finite spaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpaceMap {
    src: FinSpace,
    dst: FinSpace,
    table: Vec<usize>,
}

impl SpaceMap {
    pub fn new(src: FinSpace, dst: FinSpace, table: Vec<usize>) -> Result<Self> {
        if table.len() != src.size() {
            return Err(Error::TableLength { expected: src.size(), got: table.len() });
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= dst.size()) {
            return Err(Error::IndexOutOfRange { index: bad, len: dst.size() });
        }
        Ok(SpaceMap { src, dst, table })
    }

    pub fn identity(x: FinSpace) -> Self {
        let table = (0..x.size()).collect();
        SpaceMap { src: x.clone(), dst: x, table }
    }

    pub fn constant(src: FinSpace, dst: FinSpace, point: usize) -> Result<Self> {
        let table = alloc::vec![point; src.size()];
        Self::new(src, dst, table)
    }

    pub fn src(&self) -> &FinSpace {
        &self.src
    }

    pub fn dst(&self) -> &FinSpace {
        &self.dst
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: &Subset) -> Subset {
        image(&self.table, self.dst.size(), a)
    }

    pub fn preimage(&self, b: &Subset) -> Subset {
        preimage(&self.table, b)
    }

    pub fn is_continuous(&self) -> bool {
        continuity_witness(&self.table, &self.src, &self.dst).is_none()
    }

    pub fn is_monotone(&self) -> bool {
        monotonicity_witness(&self.table, &self.src, &self.dst).is_none()
    }

    pub fn is_i_continuous(&self, cap: usize) -> Result<bool> {
        Ok(self.classify(cap)?.i_continuous.is_ok())
    }

    pub fn is_si_continuous(&self, cap: usize) -> Result<bool> {
        Ok(self.classify(cap)?.si_continuous.is_ok())
    }

    pub fn is_si_plus_continuous(&self, cap: usize) -> Result<bool> {
        Ok(self.classify(cap)?.si_plus_continuous.is_ok())
    }

    pub fn preserves_irr_sups(&self, cap: usize) -> Result<bool> {
        Ok(self.classify(cap)?.preserves_irr_sups.is_ok())
    }

    pub fn classify(&self, cap: usize) -> Result<ContinuityReport> {
        Ok(MapClassifier::new(&self.src, &self.dst, cap)?.classify(&self.table))
    }

    /// `g ∘ f`.
    pub fn compose(g: &SpaceMap, f: &SpaceMap) -> Result<SpaceMap> {
        if f.dst != g.src {
            return Err(Error::SpaceMismatch);
        }
        let table = f.table.iter().map(|&y| g.table[y]).collect();
        Ok(SpaceMap { src: f.src.clone(), dst: g.dst.clone(), table })
    }
}

pub(crate) fn image(table: &[usize], dst_size: usize, a: &Subset) -> Subset {
    a.map(dst_size, |i| table[i])
}

pub(crate) fn preimage(table: &[usize], b: &Subset) -> Subset {
    Subset::from_indices(table.len(), (0..table.len()).filter(|&i| b.contains(table[i])))
}

fn continuity_witness(table: &[usize], src: &FinSpace, dst: &FinSpace) -> Option<Subset> {
    dst.opens()
        .iter()
        .find(|v| !src.is_open(&preimage(table, v)))
        .copied()
}

fn monotonicity_witness(table: &[usize], src: &FinSpace, dst: &FinSpace) -> Option<(usize, usize)> {
    let (p, q) = (src.specialization(), dst.specialization());
    (0..src.size())
        .flat_map(|a| p.principal_filter(a).iter().map(move |b| (a, b)))
        .find(|&(a, b)| !q.leq(table[a], table[b]))
}

/// Why a continuity grade fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An open set of the target (in the topology the grade refers to) whose
    /// preimage is not open in the source.
    OpenPreimage(Subset),
    /// `a ≤ b` in the source but `f(a) ≰ f(b)`.
    OrderPair(usize, usize),
    /// An I-closed set of the target whose preimage is not I-closed.
    IClosedPreimage(Subset),
    /// `F ∈ Irr⁺(source)` with `f(⋁F) ≠ ⋁f(F)` (or `⋁f(F)` missing).
    SupNotPreserved(Subset),
}

/// `Ok(())` when the grade holds.
pub type Verdict = core::result::Result<(), Witness>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityReport {
    pub continuous: Verdict,
    pub monotone: Verdict,
    pub i_continuous: Verdict,
    pub si_continuous: Verdict,
    pub si_plus_continuous: Verdict,
    pub preserves_irr_sups: Verdict,
}

impl ContinuityReport {
    /// Checks the relations the grades must satisfy among themselves.
    pub fn is_consistent(&self) -> bool {
        let si_plus = self.continuous.is_ok() && self.si_continuous.is_ok();
        let mut ok = si_plus == self.si_plus_continuous.is_ok();
        if self.continuous.is_ok() {
            ok &= self.monotone.is_ok();
            ok &= self.i_continuous.is_ok() == self.si_continuous.is_ok();
            ok &= self.si_continuous.is_ok() == self.preserves_irr_sups.is_ok();
        }
        ok
    }
}

/// Precomputed data for classifying many maps between one pair of spaces.
pub struct MapClassifier<'a> {
    src: IrrAnalysis<'a>,
    dst: IrrAnalysis<'a>,
    src_si_opens: SubsetFamily,
    dst_si_opens: SubsetFamily,
    dst_theta: SubsetFamily,
}

impl<'a> MapClassifier<'a> {
    pub fn new(src: &'a FinSpace, dst: &'a FinSpace, cap: usize) -> Result<Self> {
        let src = src.analyze(cap)?;
        let dst = dst.analyze(cap)?;
        Ok(MapClassifier {
            src_si_opens: src.si_opens(),
            dst_si_opens: dst.si_opens(),
            dst_theta: dst.theta(),
            src,
            dst,
        })
    }

    pub fn src(&self) -> &IrrAnalysis<'a> {
        &self.src
    }

    pub fn dst(&self) -> &IrrAnalysis<'a> {
        &self.dst
    }

    pub fn is_continuous(&self, table: &[usize]) -> Verdict {
        match continuity_witness(table, self.src.space(), self.dst.space()) {
            Some(v) => Err(Witness::OpenPreimage(v)),
            None => Ok(()),
        }
    }

    pub fn is_monotone(&self, table: &[usize]) -> Verdict {
        match monotonicity_witness(table, self.src.space(), self.dst.space()) {
            Some((a, b)) => Err(Witness::OrderPair(a, b)),
            None => Ok(()),
        }
    }

    pub fn is_i_continuous(&self, table: &[usize]) -> Verdict {
        match self
            .dst_theta
            .iter()
            .find(|b| !self.src.is_i_closed(&preimage(table, b)))
        {
            Some(b) => Err(Witness::IClosedPreimage(*b)),
            None => Ok(()),
        }
    }

    pub fn is_si_continuous(&self, table: &[usize]) -> Verdict {
        match self
            .dst_si_opens
            .iter()
            .find(|v| !self.src_si_opens.contains(&preimage(table, v)))
        {
            Some(v) => Err(Witness::OpenPreimage(*v)),
            None => Ok(()),
        }
    }

    pub fn is_si_plus_continuous(&self, table: &[usize]) -> Verdict {
        self.is_continuous(table)?;
        self.is_si_continuous(table)
    }

    pub fn preserves_irr_sups(&self, table: &[usize]) -> Verdict {
        let n = self.dst.space().size();
        for (f, s) in self.src.irr_plus_with_sups() {
            let img = image(table, n, &f);
            if self.dst.space().sup(&img) != Some(table[s]) {
                return Err(Witness::SupNotPreserved(f));
            }
        }
        Ok(())
    }

    pub fn classify(&self, table: &[usize]) -> ContinuityReport {
        ContinuityReport {
            continuous: self.is_continuous(table),
            monotone: self.is_monotone(table),
            i_continuous: self.is_i_continuous(table),
            si_continuous: self.is_si_continuous(table),
            si_plus_continuous: self.is_si_plus_continuous(table),
            preserves_irr_sups: self.preserves_irr_sups(table),
        }
    }
}

/// Every function `0..n → 0..m`, as tables in lexicographic order.
pub fn all_tables(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 { 1 } else if m == 0 { 0 } else { m.pow(n as u32) };
    (0..total).map(move |mut k| {
        let mut t = alloc::vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = k % m.max(1);
            k /= m.max(1);
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::DEFAULT_CAP;
    use crate::FinPoset;
    use alloc::vec;

    fn swap() -> SpaceMap {
        let s = FinSpace::sierpinski();
        SpaceMap::new(s.clone(), s, vec![1, 0]).unwrap()
    }

    #[test]
    fn identity_is_everything() {
        let x = FinSpace::alexandroff(&FinPoset::from_generators(3, [(0, 2), (1, 2)]).unwrap());
        let r = SpaceMap::identity(x).classify(DEFAULT_CAP).unwrap();
        assert!(r.continuous.is_ok() && r.monotone.is_ok() && r.i_continuous.is_ok());
        assert!(r.si_continuous.is_ok() && r.si_plus_continuous.is_ok());
        assert!(r.preserves_irr_sups.is_ok());
    }

    #[test]
    fn sierpinski_swap_fails_with_witnesses() {
        let r = swap().classify(DEFAULT_CAP).unwrap();
        let one = Subset::from_indices(2, [1]);
        assert_eq!(r.continuous, Err(Witness::OpenPreimage(one)));
        assert_eq!(r.monotone, Err(Witness::OrderPair(0, 1)));
        assert_eq!(r.si_continuous, Err(Witness::OpenPreimage(one)));
        assert_eq!(r.si_plus_continuous, Err(Witness::OpenPreimage(one)));
        assert!(r.is_consistent());
        // Every preimage is I-closed: Θ is the whole powerset on finite spaces.
        assert!(r.i_continuous.is_ok());
    }

    #[test]
    fn constant_maps() {
        let s = FinSpace::sierpinski();
        let x = FinSpace::alexandroff(&FinPoset::chain(3));
        for p in 0..2 {
            let f = SpaceMap::constant(x.clone(), s.clone(), p).unwrap();
            let r = f.classify(DEFAULT_CAP).unwrap();
            assert!(r.continuous.is_ok() && r.si_plus_continuous.is_ok());
            assert!(r.preserves_irr_sups.is_ok() && r.i_continuous.is_ok());
        }
    }

    #[test]
    fn compose_checks_spaces() {
        let s = FinSpace::sierpinski();
        let id = SpaceMap::identity(s.clone());
        assert_eq!(SpaceMap::compose(&swap(), &id).unwrap(), swap());
        assert_eq!(SpaceMap::compose(&id, &swap()).unwrap(), swap());
        let other = SpaceMap::identity(FinSpace::discrete(2));
        assert_eq!(SpaceMap::compose(&other, &id), Err(Error::SpaceMismatch));
    }

    #[test]
    fn bad_tables() {
        let s = FinSpace::sierpinski();
        assert_eq!(
            SpaceMap::new(s.clone(), s.clone(), vec![0]),
            Err(Error::TableLength { expected: 2, got: 1 })
        );
        assert_eq!(
            SpaceMap::new(s.clone(), s, vec![0, 2]),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn table_enumeration() {
        assert_eq!(all_tables(2, 2).count(), 4);
        assert_eq!(all_tables(0, 3).count(), 1);
        assert_eq!(all_tables(2, 0).count(), 0);
        assert_eq!(all_tables(3, 2).last().unwrap(), vec![1, 1, 1]);
    }
}
