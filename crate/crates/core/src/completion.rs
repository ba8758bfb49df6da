//! The strong completion of a finite space.
//!
//! The SI-closed sets of `X`, ordered by inclusion and carrying the lower
//! Vietoris topology (subbasic opens `◊U = {C | C ∩ U ≠ ∅}` for SI-open `U`),
//! form a strongly complete space `Γ_SI(X)`. `X` sits inside it via
//! `x ↦ cl{x}`, and the I-closure of that image is the completion.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::homeo::find_homeomorphism;
use crate::maps::{all_tables, MapClassifier, SpaceMap};
use crate::poset::FinPoset;
use crate::space::{intersection_closure, union_closure, FinSpace, MAX_OPENS};
use crate::subset::{Subset, MAX_POINTS};

/// `Γ_SI(X)` with its lower Vietoris topology.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaSi {
    pub base: FinSpace,
    /// SI-closed subsets of `base` in canonical order; point `i` of `space`
    /// is `elements[i]`.
    pub elements: Vec<Subset>,
    pub space: FinSpace,
}

impl GammaSi {
    /// Fails with `CapExceeded` when `Γ_SI(X)` has more than `cap` members.
    pub fn new(x: &FinSpace, cap: usize) -> Result<Self> {
        let an = x.analyze(cap)?;
        let elements = an.si_closed_sets().into_vec();
        let m = elements.len();
        if m > cap.min(MAX_POINTS) {
            return Err(Error::CapExceeded { size: m, cap: cap.min(MAX_POINTS) });
        }
        let diamonds = an.si_opens().into_vec().into_iter().map(|u| diamond(&elements, &u));
        let basis = intersection_closure(m, diamonds, MAX_OPENS)?;
        let opens = union_closure(m, basis.into_vec(), MAX_OPENS)?;
        let space = FinSpace::from_opens(m, opens.into_vec())?;
        Ok(GammaSi { base: x.clone(), elements, space })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, c: &Subset) -> Option<usize> {
        self.elements.binary_search(c).ok()
    }

    /// `◊U` as a subset of the points of `space`.
    pub fn diamond(&self, u: &Subset) -> Subset {
        diamond(&self.elements, u)
    }

    /// Index of `cl{x}` for each point `x` of the base.
    pub fn point_closures(&self) -> Vec<usize> {
        let n = self.base.size();
        (0..n)
            .map(|x| {
                let c = self.base.closure(&Subset::singleton(n, x)).expect("in range");
                self.index_of(&c).expect("point closures are SI-closed")
            })
            .collect()
    }

    /// `Γ_SI(X)` ordered by inclusion.
    pub fn inclusion_order(&self) -> FinPoset {
        let m = self.len();
        let up = (0..m)
            .map(|i| {
                Subset::from_indices(m, (0..m).filter(|&j| self.elements[i].is_subset(&self.elements[j])))
            })
            .collect();
        FinPoset::from_up_sets(m, up).expect("inclusion is a partial order")
    }

    /// Does the lower Vietoris topology coincide with the Alexandroff topology
    /// of inclusion?
    pub fn is_alexandroff_of_inclusion(&self) -> bool {
        FinSpace::alexandroff(&self.inclusion_order()).opens() == self.space.opens()
    }
}

fn diamond(elements: &[Subset], u: &Subset) -> Subset {
    Subset::from_indices(elements.len(), (0..elements.len()).filter(|&i| elements[i].meets(u)))
}

pub fn gamma_si(x: &FinSpace, cap: usize) -> Result<GammaSi> {
    GammaSi::new(x, cap)
}

/// `Ψ(X) = {cl{x} | x ∈ X}` as points of `g.space`.
pub fn psi(x: &FinSpace, g: &GammaSi) -> Result<Subset> {
    if g.base != *x {
        return Err(Error::SpaceMismatch);
    }
    Ok(Subset::from_indices(g.len(), g.point_closures()))
}

/// Checks recorded while building a completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionWitnesses {
    pub eta_si_plus_continuous: bool,
    pub completion_strongly_complete: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletionResult {
    pub gamma: GammaSi,
    /// `Ψ(X)` as points of `gamma.space`.
    pub psi: Subset,
    /// `cl_I(Ψ(X))` as points of `gamma.space`.
    pub members: Subset,
    pub completion: FinSpace,
    /// Completion point `i` is gamma point `embedding[i]`.
    pub embedding: Vec<usize>,
    /// `η_X : X → completion`, `x ↦ cl{x}`.
    pub eta: SpaceMap,
    pub witnesses: CompletionWitnesses,
}

impl CompletionResult {
    pub fn source(&self) -> &FinSpace {
        &self.gamma.base
    }

    /// The closed set of the source that completion point `i` stands for.
    pub fn label(&self, i: usize) -> Subset {
        self.gamma.elements[self.embedding[i]]
    }

    pub fn labels(&self) -> Vec<Subset> {
        (0..self.completion.size()).map(|i| self.label(i)).collect()
    }

    /// Completion points outside the image of `η`.
    pub fn new_points(&self) -> Subset {
        let n = self.completion.size();
        Subset::full(n).difference(&Subset::from_indices(n, self.eta.table().iter().copied()))
    }
}

/// The subspace `cl_I(Ψ(X))` of `Γ_SI(X)` together with `η_X`.
pub fn strong_completion(x: &FinSpace, cap: usize) -> Result<CompletionResult> {
    let gamma = gamma_si(x, cap)?;
    let psi = psi(x, &gamma)?;
    let members = gamma.space.cl_i(&psi, cap)?;
    let (completion, embedding) = gamma.space.subspace_with_embedding(&members)?;
    let table = gamma
        .point_closures()
        .into_iter()
        .map(|g| embedding.binary_search(&g).expect("Ψ ⊆ cl_I(Ψ)"))
        .collect();
    let eta = SpaceMap::new(x.clone(), completion.clone(), table)?;
    let witnesses = CompletionWitnesses {
        eta_si_plus_continuous: eta.is_si_plus_continuous(cap)?,
        completion_strongly_complete: completion.is_strongly_complete(cap)?,
    };
    Ok(CompletionResult { gamma, psi, members, completion, embedding, eta, witnesses })
}

/// `f*(C) = cl_SI(f(C))` from `Γ_SI(X)` to `Γ_SI(Z)`, for SI⁺-continuous `f`.
pub fn f_star(f: &SpaceMap, gx: &GammaSi, gz: &GammaSi, cap: usize) -> Result<SpaceMap> {
    if gx.base != *f.src() || gz.base != *f.dst() {
        return Err(Error::SpaceMismatch);
    }
    if f.classify(cap)?.si_plus_continuous.is_err() {
        return Err(Error::NotSiPlusContinuous);
    }
    f_star_unchecked(f.table(), gx, gz, cap)
}

fn f_star_unchecked(table: &[usize], gx: &GammaSi, gz: &GammaSi, cap: usize) -> Result<SpaceMap> {
    let zan = gz.base.analyze(cap)?;
    let nz = gz.base.size();
    let out = gx
        .elements
        .iter()
        .map(|c| {
            let img = c.map(nz, |i| table[i]);
            gz.index_of(&zan.si_closure(&img)).expect("SI-closures are SI-closed")
        })
        .collect();
    SpaceMap::new(gx.space.clone(), gz.space.clone(), out)
}

/// A pair `(C, A)` where `f*(C) ⊆ A` and `C ⊆ f⁻¹(A)` disagree, if any.
pub fn adjunction_witness(f: &SpaceMap, f_star: &SpaceMap, gx: &GammaSi, gz: &GammaSi) -> Option<(usize, usize)> {
    for (ci, c) in gx.elements.iter().enumerate() {
        let fc = &gz.elements[f_star.apply(ci)];
        for (ai, a) in gz.elements.iter().enumerate() {
            if fc.is_subset(a) != c.is_subset(&f.preimage(a)) {
                return Some((ci, ai));
            }
        }
    }
    None
}

/// `k : Ψ(Z) → Z`, `cl{z} ↦ z`, defined on the subspace `Ψ(Z)` of `Γ_SI(Z)`.
pub fn k_map(z: &FinSpace, gz: &GammaSi, cap: usize) -> Result<SpaceMap> {
    if gz.base != *z {
        return Err(Error::SpaceMismatch);
    }
    if let Some(w) = z.analyze(cap)?.unbounded_irreducible() {
        return Err(Error::NotStronglyComplete(w));
    }
    let closures = gz.point_closures();
    let psi = Subset::from_indices(gz.len(), closures.iter().copied());
    let (dom, emb) = gz.space.subspace_with_embedding(&psi)?;
    let table = emb
        .iter()
        .map(|g| closures.iter().position(|c| c == g).expect("member of Ψ(Z)"))
        .collect();
    SpaceMap::new(dom, z.clone(), table)
}

/// `f̂ = k ∘ f*` on the completion of `f`'s source.
pub fn extend(f: &SpaceMap, c: &CompletionResult, cap: usize) -> Result<SpaceMap> {
    if c.source() != f.src() {
        return Err(Error::SpaceMismatch);
    }
    let gz = gamma_si(f.dst(), cap)?;
    let k = k_map(f.dst(), &gz, cap)?;
    let fs = f_star(f, &c.gamma, &gz, cap)?;
    extend_with(&fs, &k, &gz, c)
}

fn extend_with(fs: &SpaceMap, k: &SpaceMap, gz: &GammaSi, c: &CompletionResult) -> Result<SpaceMap> {
    let psi_z: Vec<usize> = Subset::from_indices(gz.len(), gz.point_closures()).to_vec();
    let table = c
        .embedding
        .iter()
        .map(|&g| {
            let h = fs.apply(g);
            psi_z
                .binary_search(&h)
                .map(|pos| k.apply(pos))
                .map_err(|_| Error::Unsupported("f* does not map cl_I(Ψ(X)) into Ψ(Z)"))
        })
        .collect::<Result<Vec<_>>>()?;
    SpaceMap::new(c.completion.clone(), k.dst().clone(), table)
}

/// One SI⁺-continuous `f : X → Z` and what became of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationEntry {
    pub map: Vec<usize>,
    pub extension: Vec<usize>,
    /// `f̂ ∘ η = f`.
    pub factors: bool,
    pub extension_si_plus: bool,
    /// Number of SI⁺-continuous `g` on the completion with `g ∘ η = f`.
    pub factorizations: usize,
    /// A failing `(C, A)` pair for `f*(C) ⊆ A ⟺ C ⊆ f⁻¹(A)`.
    pub adjunction_failure: Option<(usize, usize)>,
}

impl FactorizationEntry {
    pub fn holds(&self) -> bool {
        self.factors && self.extension_si_plus && self.factorizations == 1 && self.adjunction_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalReport {
    pub eta_si_plus: bool,
    pub entries: Vec<FactorizationEntry>,
}

impl UniversalReport {
    pub fn holds(&self) -> bool {
        self.eta_si_plus && self.entries.iter().all(FactorizationEntry::holds)
    }
}

/// Exhaustively checks that every SI⁺-continuous `f : X → Z` factors through
/// `η_X` via exactly one SI⁺-continuous map, and that this map is `k ∘ f*`.
pub fn check_universal_property(x: &FinSpace, z: &FinSpace, cap: usize, bound: usize) -> Result<UniversalReport> {
    for s in [x.size(), z.size()] {
        if s > bound {
            return Err(Error::CapExceeded { size: s, cap: bound });
        }
    }
    if let Some(w) = z.analyze(cap)?.unbounded_irreducible() {
        return Err(Error::NotStronglyComplete(w));
    }
    let c = strong_completion(x, cap)?;
    let gz = gamma_si(z, cap)?;
    let k = k_map(z, &gz, cap)?;
    let on_x = MapClassifier::new(x, z, cap)?;
    let on_completion = MapClassifier::new(&c.completion, z, cap)?;
    let eta = c.eta.table();

    let completion_maps: Vec<Vec<usize>> = all_tables(c.completion.size(), z.size())
        .filter(|g| on_completion.is_si_plus_continuous(g).is_ok())
        .collect();

    let mut entries = Vec::new();
    for f in all_tables(x.size(), z.size()) {
        if on_x.is_si_plus_continuous(&f).is_err() {
            continue;
        }
        let fmap = SpaceMap::new(x.clone(), z.clone(), f.clone())?;
        let fs = f_star_unchecked(&f, &c.gamma, &gz, cap)?;
        let ext = extend_with(&fs, &k, &gz, &c)?;
        let ext = ext.table().to_vec();
        let factors = (0..x.size()).all(|i| ext[eta[i]] == f[i]);
        let factorizations = completion_maps
            .iter()
            .filter(|g| (0..x.size()).all(|i| g[eta[i]] == f[i]))
            .count();
        entries.push(FactorizationEntry {
            factors,
            extension_si_plus: on_completion.is_si_plus_continuous(&ext).is_ok(),
            factorizations,
            adjunction_failure: adjunction_witness(&fmap, &fs, &c.gamma, &gz),
            extension: ext,
            map: f,
        });
    }
    Ok(UniversalReport { eta_si_plus: c.witnesses.eta_si_plus_continuous, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub relabelings: usize,
    /// Relabelings (as permutations) for which no homeomorphism commuting with
    /// the units was found.
    pub failures: Vec<Vec<usize>>,
}

impl UniquenessReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For relabelings `σ` of `X`, searches for a homeomorphism
/// `h : SC(X) → SC(σX)` with `h ∘ η_X = η_{σX} ∘ σ`. All permutations are used
/// up to 5 points; beyond that, the reversal and a rotation.
pub fn check_uniqueness(x: &FinSpace, cap: usize) -> Result<UniquenessReport> {
    let n = x.size();
    let base = strong_completion(x, cap)?;
    let perms = if n <= 5 {
        permutations(n)
    } else {
        alloc::vec![
            (0..n).collect(),
            (0..n).rev().collect(),
            (0..n).map(|i| (i + 1) % n).collect(),
        ]
    };
    let mut failures = Vec::new();
    for perm in &perms {
        let y = x.relabel(perm)?;
        let other = strong_completion(&y, cap)?;
        let mut fixed = alloc::vec![None; base.completion.size()];
        for i in 0..n {
            fixed[base.eta.apply(i)] = Some(other.eta.apply(perm[i]));
        }
        if find_homeomorphism(&base.completion, &other.completion, &fixed).is_none() {
            failures.push(perm.clone());
        }
    }
    Ok(UniquenessReport { relabelings: perms.len(), failures })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homeo::is_homeomorphism;
    use crate::space::DEFAULT_CAP;
    use alloc::vec;

    fn set(n: usize, ix: &[usize]) -> Subset {
        Subset::from_indices(n, ix.iter().copied())
    }

    #[test]
    fn gamma_of_sierpinski_is_a_three_chain() {
        let g = gamma_si(&FinSpace::sierpinski(), DEFAULT_CAP).unwrap();
        assert_eq!(g.elements, vec![set(2, &[]), set(2, &[0]), set(2, &[0, 1])]);
        assert_eq!(g.space, FinSpace::alexandroff(&FinPoset::chain(3)));
        assert!(g.is_alexandroff_of_inclusion());
    }

    #[test]
    fn gamma_of_point_is_sierpinski() {
        let g = gamma_si(&FinSpace::point(), DEFAULT_CAP).unwrap();
        assert_eq!(g.elements, vec![set(1, &[]), set(1, &[0])]);
        assert_eq!(g.space, FinSpace::sierpinski());
    }

    #[test]
    fn psi_examples() {
        let s = FinSpace::sierpinski();
        let g = gamma_si(&s, DEFAULT_CAP).unwrap();
        assert_eq!(psi(&s, &g).unwrap(), set(3, &[1, 2]));
        let e = FinSpace::empty();
        let ge = gamma_si(&e, DEFAULT_CAP).unwrap();
        assert!(psi(&e, &ge).unwrap().is_empty());
        assert_eq!(psi(&FinSpace::point(), &g), Err(Error::SpaceMismatch));
    }

    #[test]
    fn completion_of_sierpinski() {
        let s = FinSpace::sierpinski();
        let c = strong_completion(&s, DEFAULT_CAP).unwrap();
        assert_eq!(c.completion, s);
        assert_eq!(c.eta.table(), &[0, 1]);
        assert_eq!(c.labels(), vec![set(2, &[0]), set(2, &[0, 1])]);
        assert!(c.witnesses.eta_si_plus_continuous && c.witnesses.completion_strongly_complete);
        assert!(c.new_points().is_empty());
        assert!(is_homeomorphism(&s, &c.completion, c.eta.table()));
    }

    #[test]
    fn completion_of_empty_space() {
        let c = strong_completion(&FinSpace::empty(), DEFAULT_CAP).unwrap();
        assert_eq!(c.completion.size(), 0);
        // Γ_SI(∅) = {∅}.
        assert_eq!(c.gamma.len(), 1);
    }

    #[test]
    fn f_star_examples() {
        let s = FinSpace::sierpinski();
        let g = gamma_si(&s, DEFAULT_CAP).unwrap();
        let id = SpaceMap::identity(s.clone());
        assert_eq!(f_star(&id, &g, &g, DEFAULT_CAP).unwrap().table(), &[0, 1, 2]);
        // Constant at the top sends ∅ to ∅ and the rest to {0,1}.
        let top = SpaceMap::constant(s.clone(), s.clone(), 1).unwrap();
        let fs = f_star(&top, &g, &g, DEFAULT_CAP).unwrap();
        assert_eq!(fs.table(), &[0, 2, 2]);
        assert_eq!(adjunction_witness(&top, &fs, &g, &g), None);
        let swap = SpaceMap::new(s.clone(), s, vec![1, 0]).unwrap();
        assert_eq!(f_star(&swap, &g, &g, DEFAULT_CAP), Err(Error::NotSiPlusContinuous));
    }

    #[test]
    fn k_map_inverts_point_closures() {
        let s = FinSpace::sierpinski();
        let g = gamma_si(&s, DEFAULT_CAP).unwrap();
        let k = k_map(&s, &g, DEFAULT_CAP).unwrap();
        assert_eq!(k.table(), &[0, 1]);
        assert!(k.is_si_plus_continuous(DEFAULT_CAP).unwrap());
        let p = FinSpace::point();
        let kp = k_map(&p, &gamma_si(&p, DEFAULT_CAP).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(kp.table(), &[0]);
    }

    #[test]
    fn extend_eta_is_identity() {
        let x = FinSpace::alexandroff(&FinPoset::from_generators(3, [(0, 2), (1, 2)]).unwrap());
        let c = strong_completion(&x, DEFAULT_CAP).unwrap();
        let ext = extend(&c.eta, &c, DEFAULT_CAP).unwrap();
        assert_eq!(ext.table(), &[0, 1, 2]);
    }

    #[test]
    fn universal_property_sierpinski() {
        let s = FinSpace::sierpinski();
        let r = check_universal_property(&s, &s, DEFAULT_CAP, 4).unwrap();
        assert!(r.holds());
        // The three monotone maps of a 2-chain: both constants and the identity.
        let maps: Vec<Vec<usize>> = r.entries.iter().map(|e| e.map.clone()).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        let p = FinSpace::point();
        let r = check_universal_property(&s, &p, DEFAULT_CAP, 4).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(r.holds());
    }

    #[test]
    fn uniqueness_on_join() {
        let x = FinSpace::alexandroff(&FinPoset::from_generators(3, [(0, 2), (1, 2)]).unwrap());
        let r = check_uniqueness(&x, DEFAULT_CAP).unwrap();
        assert_eq!(r.relabelings, 6);
        assert!(r.holds());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
