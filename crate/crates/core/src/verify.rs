//! Property suites over populations of finite spaces and over the catalog.
//!
//! Each suite returns a [`SuiteReport`] listing every violation with the
//! spaces involved and a concrete witness. The population is supplied by the
//! caller, so the same suites run exhaustively or on sampled spaces.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::{self, ClosedForm, IrrDescriptor, Johnstone, OpenForm, Point, SymbolicSpace, TOP};
use crate::completion::{check_uniqueness, check_universal_property, f_star, gamma_si, psi, strong_completion};
use crate::error::{Error, Result};
use crate::homeo::is_homeomorphism;
use crate::maps::{all_tables, MapClassifier, SpaceMap, Witness};
use crate::poset::all_posets_up_to;
use crate::space::{FinSpace, IrrMethod};
use crate::subset::{powerset, subsets_of, Subset, SubsetFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub suite: &'static str,
    pub check: &'static str,
    pub spaces: Vec<FinSpace>,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    /// Spaces, pairs, triples or catalog probes examined.
    pub cases: usize,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, cases: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, check: &'static str, spaces: &[&FinSpace], witness: String) {
        self.violations.push(Violation {
            suite: self.suite,
            check,
            spaces: spaces.iter().map(|s| (*s).clone()).collect(),
            witness,
        });
    }

    fn check(&mut self, ok: bool, check: &'static str, spaces: &[&FinSpace], witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(check, spaces, witness());
        }
    }
}

pub const FINITE_COLLAPSE: &str = "finite-collapse";
pub const IRREDUCIBLE_BASICS: &str = "irreducible-basics";
pub const SI_TOPOLOGY_BASICS: &str = "si-topology-basics";
pub const I_CLOSED_BASICS: &str = "i-closed-basics";
pub const I_CLOSED_INTERSECTION: &str = "i-closed-intersection";
pub const CONTINUITY_HIERARCHY: &str = "continuity-hierarchy";
pub const HYPERSPACE_ORDER: &str = "hyperspace-order";
pub const UNIVERSAL_PROPERTY: &str = "universal-property";
pub const COMPLETION_UNIQUENESS: &str = "completion-uniqueness";
pub const CATALOG: &str = "catalog";

/// Alexandroff spaces of every labelled poset with at most `max` points.
pub fn exhaustive_population(max: usize) -> Vec<FinSpace> {
    all_posets_up_to(max).iter().map(FinSpace::alexandroff).collect()
}

/// Irreducible sets are exactly the nonempty sets with a greatest element;
/// hence `Irr = Irr⁺`, `SI(X) = X`, `Θ = 𝒫(X)` and `SC(X) ≅ X` via `η`.
pub fn finite_collapse(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(FINITE_COLLAPSE);
    for x in spaces {
        r.cases += 1;
        let n = x.size();
        let def = x.analyze_with(cap, IrrMethod::OpenPairs)?;
        for f in powerset(n) {
            let expected = !f.is_empty() && x.specialization().maximum(&f).is_some();
            for m in [IrrMethod::OpenPairs, IrrMethod::Neighbourhoods, IrrMethod::Maximum] {
                r.check(x.is_irreducible_with(&f, m) == expected, "irreducible iff greatest element", &[x], || {
                    format!("F = {f}, method {m:?}")
                });
            }
        }
        r.check(def.irr() == def.irr_plus(), "Irr = Irr⁺", &[x], || {
            format!("unbounded irreducible {:?}", def.unbounded_irreducible())
        });
        for u in x.opens() {
            let si = def.irr_plus_with_sups().all(|(f, s)| !u.contains(s) || f.meets(u));
            r.check(si, "SI(X) = X", &[x], || format!("open {u} is not SI-open"));
        }
        for a in powerset(n) {
            let closed = def.irr_plus_with_sups().all(|(f, s)| !f.is_subset(&a) || a.contains(s));
            r.check(closed, "Θ(X) is the powerset", &[x], || format!("{a} is not I-closed"));
            let c = x.cl_i(&a, cap)?;
            r.check(c == a, "cl_I is the identity", &[x], || format!("cl_I({a}) = {c}"));
        }
        r.check(x.is_strongly_complete(cap)?, "strongly complete", &[x], String::new);
        let c = strong_completion(x, cap)?;
        r.check(is_homeomorphism(x, &c.completion, c.eta.table()), "η is a homeomorphism onto SC(X)", &[x], || {
            format!("η = {:?}, completion opens {:?}", c.eta.table(), c.completion.opens())
        });
    }
    Ok(r)
}

/// Singletons are irreducible; `F` is irreducible iff its closure is;
/// continuous images and directed sets are irreducible; irreducibility and
/// order are the same in a subspace as in the ambient space.
pub fn irreducible_basics(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(IRREDUCIBLE_BASICS);
    for x in spaces {
        r.cases += 1;
        let n = x.size();
        let an = x.analyze_with(cap, IrrMethod::OpenPairs)?;
        let irr = an.irr();
        for i in 0..n {
            let s = Subset::singleton(n, i);
            r.check(irr.contains(&s), "singletons are irreducible", &[x], || format!("{s}"));
        }
        for f in powerset(n) {
            let cl = x.closure_by_opens(&f)?;
            r.check(irr.contains(&f) == irr.contains(&cl), "irreducible iff closure irreducible", &[x], || {
                format!("F = {f}, cl F = {cl}")
            });
            if x.is_directed(&f) {
                r.check(irr.contains(&f), "directed sets are irreducible", &[x], || format!("{f}"));
            }
        }
        // n^n self-maps; above six points this dominates everything else.
        let self_maps = if n <= 6 { all_tables(n, n).collect() } else { Vec::new() };
        for t in self_maps {
            let map = SpaceMap::new(x.clone(), x.clone(), t)?;
            if !map.is_continuous() {
                continue;
            }
            for f in irr.iter() {
                let img = map.image(f);
                r.check(irr.contains(&img), "continuous images are irreducible", &[x], || {
                    format!("f = {:?}, F = {f}, f(F) = {img}", map.table())
                });
            }
        }
        for y in powerset(n).skip(1) {
            let (sub, emb) = x.subspace_with_embedding(&y)?;
            let m = sub.size();
            for f in powerset(m).skip(1) {
                let amb = f.map(n, |i| emb[i]);
                let (inner, outer) = (sub.is_irreducible_with(&f, IrrMethod::OpenPairs), irr.contains(&amb));
                r.check(inner == outer, "Irr(Y) = {F ∈ Irr(X) | F ⊆ Y}", &[x], || {
                    format!("Y = {y}, F = {amb}, in Y: {inner}, in X: {outer}")
                });
            }
            for a in 0..m {
                for b in 0..m {
                    let same = sub.specialization().leq(a, b) == x.specialization().leq(emb[a], emb[b]);
                    r.check(same, "subspace order is the restricted order", &[x], || {
                        format!("Y = {y}, points {} {}", emb[a], emb[b])
                    });
                }
            }
        }
    }
    Ok(r)
}

/// Point closures agree in `X` and `SI(X)`; SI-closed means closed and
/// sup-closed; clopen sets and connectedness are shared by `X` and `SI(X)`.
pub fn si_topology_basics(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(SI_TOPOLOGY_BASICS);
    for x in spaces {
        r.cases += 1;
        let n = x.size();
        let an = x.analyze_with(cap, IrrMethod::OpenPairs)?;
        let si = an.si_space()?;
        for i in 0..n {
            let s = Subset::singleton(n, i);
            let (c, csi) = (x.closure_by_opens(&s)?, si.closure_by_opens(&s)?);
            r.check(c == csi, "cl{x} = cl_SI{x}", &[x], || format!("x = {i}: {c} vs {csi}"));
        }
        for c in powerset(n) {
            let char = x.is_closed(&c) && an.irr_plus_with_sups().all(|(f, s)| !f.is_subset(&c) || c.contains(s));
            r.check(si.is_closed(&c) == char, "SI-closed iff closed and sup-closed", &[x], || format!("{c}"));
            r.check(x.is_clopen(&c) == si.is_clopen(&c), "clopen in X iff clopen in SI(X)", &[x], || {
                format!("{c}")
            });
        }
        r.check(x.is_connected() == si.is_connected(), "X connected iff SI(X) connected", &[x], String::new);
    }
    Ok(r)
}

/// Up-sets are I-closed; `↓x` is closed, I-closed and SI-closed and equals
/// both point closures; I-open means inaccessible by `Irr⁺` suprema;
/// `O ∩ Δ = O_SI`; `Irr(X) ⊆ Irr(SI(X))`; sober ⟹ sc ⟹ dcpo; I-closed
/// subspaces are strongly complete.
pub fn i_closed_basics(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(I_CLOSED_BASICS);
    for x in spaces {
        r.cases += 1;
        let n = x.size();
        let p = x.specialization();
        let an = x.analyze_with(cap, IrrMethod::OpenPairs)?;
        let si = an.si_space()?;
        for a in powerset(n) {
            if p.is_up_set(&a) {
                r.check(an.is_i_closed(&a), "up-sets are I-closed", &[x], || format!("{a}"));
            }
            let direct = an.irr_plus_with_sups().all(|(f, s)| !a.contains(s) || f.meets(&a));
            let via_complement = an.theta().contains(&a.complement());
            r.check(direct == via_complement, "I-open iff inaccessible by Irr⁺ suprema", &[x], || format!("{a}"));
        }
        for i in 0..n {
            let d = p.principal_ideal(i);
            let s = Subset::singleton(n, i);
            let ok = x.is_closed(&d) && an.is_i_closed(&d) && si.is_closed(&d);
            r.check(ok, "↓x is closed, I-closed and SI-closed", &[x], || format!("x = {i}"));
            let (c, csi) = (x.closure_by_opens(&s)?, an.si_closure(&s));
            r.check(c == d && csi == d, "cl{x} = cl_SI{x} = ↓x", &[x], || {
                format!("x = {i}: {c}, {csi}, {d}")
            });
        }
        let lhs = x.opens_family().intersect(&an.delta());
        r.check(lhs == an.si_opens(), "O ∩ Δ = O_SI", &[x], || {
            format!("O ∩ Δ = {:?}, O_SI = {:?}", lhs.as_slice(), an.si_opens().as_slice())
        });
        let si_irr = si.analyze_with(cap, IrrMethod::OpenPairs)?.irr();
        if let Some(f) = an.irr().iter().find(|f| !si_irr.contains(f)) {
            r.fail("Irr(X) ⊆ Irr(SI(X))", &[x], format!("{f}"));
        }
        let (sober, sc, dcpo) = (x.is_sober(cap)?, x.is_strongly_complete(cap)?, x.is_dcpo(cap)?);
        r.check(!sober || sc, "sober implies strongly complete", &[x], String::new);
        r.check(!sc || dcpo, "strongly complete implies dcpo", &[x], String::new);
        for y in an.theta().iter().filter(|y| !y.is_empty()) {
            let sub = x.subspace(y)?;
            r.check(sub.is_strongly_complete(cap)?, "I-closed subspaces are strongly complete", &[x], || {
                format!("Y = {y}")
            });
        }
    }
    Ok(r)
}

/// `Θ(X)` contains the carrier and is closed under intersections; `cl_I`
/// is extensive, monotone and idempotent and agrees with the intersection of
/// I-closed supersets.
pub fn i_closed_intersection(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(I_CLOSED_INTERSECTION);
    for x in spaces {
        r.cases += 1;
        let n = x.size();
        let an = x.analyze_with(cap, IrrMethod::OpenPairs)?;
        let theta = an.theta();
        r.check(theta.contains(&Subset::full(n)), "Θ(X) contains X", &[x], String::new);
        for a in theta.iter() {
            for b in theta.iter() {
                let m = a.intersection(b);
                r.check(theta.contains(&m), "Θ(X) is closed under intersections", &[x], || {
                    format!("{a} ∩ {b} = {m}")
                });
            }
        }
        let all = theta.iter().fold(Subset::full(n), |acc, c| acc.intersection(c));
        r.check(theta.contains(&all), "Θ(X) is closed under intersections", &[x], || format!("⋂Θ = {all}"));
        for b in powerset(n) {
            let cb = x.cl_i(&b, cap)?;
            r.check(b.is_subset(&cb), "cl_I is extensive", &[x], || format!("{b}"));
            r.check(x.cl_i(&cb, cap)? == cb, "cl_I is idempotent", &[x], || format!("{b}"));
            r.check(an.cl_i_by_intersection(&b) == cb, "cl_I by saturation = by intersection", &[x], || {
                format!("{b}")
            });
            for a in subsets_of(b) {
                let ca = x.cl_i(&a, cap)?;
                r.check(ca.is_subset(&cb), "cl_I is monotone", &[x], || format!("{a} ⊆ {b}"));
            }
        }
    }
    Ok(r)
}

fn witness_is_genuine(w: &Witness, table: &[usize], c: &MapClassifier<'_>) -> bool {
    let (x, y) = (c.src().space(), c.dst().space());
    let pre = |v: &Subset| Subset::from_indices(x.size(), (0..x.size()).filter(|&i| v.contains(table[i])));
    match w {
        Witness::OpenPreimage(v) => !x.is_open(&pre(v)) || !c.src().is_si_open(&pre(v)),
        Witness::OrderPair(a, b) => x.specialization().leq(*a, *b) && !y.specialization().leq(table[*a], table[*b]),
        Witness::IClosedPreimage(b) => c.dst().is_i_closed(b) && !c.src().is_i_closed(&pre(b)),
        Witness::SupNotPreserved(f) => {
            let s = x.sup(f).expect("member of Irr⁺");
            y.sup(&f.map(y.size(), |i| table[i])) != Some(table[s])
        }
    }
}

/// Every map between every pair of spaces: continuity grades imply
/// monotonicity; for continuous maps I-continuity, SI-continuity and
/// preservation of `Irr⁺` suprema coincide; continuous maps carry closures
/// and irreducible sets along; SI⁺ maps satisfy `f(cl_I A) ⊆ cl_I(f A)` and
/// compose. Every negative verdict carries a checked witness.
pub fn continuity_hierarchy(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(CONTINUITY_HIERARCHY);
    let k = spaces.len();
    let mut classifiers = Vec::with_capacity(k * k);
    for x in spaces {
        for y in spaces {
            classifiers.push(MapClassifier::new(x, y, cap)?);
        }
    }
    let mut si_plus: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k * k);
    for (xi, x) in spaces.iter().enumerate() {
        let irr = x.analyze(cap)?.irr();
        for (yi, y) in spaces.iter().enumerate() {
            r.cases += 1;
            let c = &classifiers[xi * k + yi];
            let mut good = Vec::new();
            for t in all_tables(x.size(), y.size()) {
                let rep = c.classify(&t);
                let s = &[x, y];
                r.check(rep.is_consistent(), "verdicts are consistent", s, || format!("f = {t:?}: {rep:?}"));
                for v in [
                    &rep.continuous,
                    &rep.monotone,
                    &rep.i_continuous,
                    &rep.si_continuous,
                    &rep.preserves_irr_sups,
                ] {
                    if let Err(w) = v {
                        r.check(witness_is_genuine(w, &t, c), "negative verdicts carry witnesses", s, || {
                            format!("f = {t:?}, witness {w:?}")
                        });
                    }
                }
                let cont = rep.continuous.is_ok();
                let mono = rep.monotone.is_ok();
                r.check(!cont || mono, "continuous implies monotone", s, || format!("f = {t:?}"));
                r.check(rep.si_continuous.is_err() || mono, "SI-continuous implies monotone", s, || {
                    format!("f = {t:?}")
                });
                if cont {
                    let (i, si, sup) =
                        (rep.i_continuous.is_ok(), rep.si_continuous.is_ok(), rep.preserves_irr_sups.is_ok());
                    r.check(i == si && si == sup, "I-cont ⟺ SI-cont ⟺ preserves Irr⁺ sups", s, || {
                        format!("f = {t:?}: {i} {si} {sup}")
                    });
                }
                if mono && rep.i_continuous.is_ok() {
                    r.check(rep.preserves_irr_sups.is_ok(), "monotone and I-continuous preserve sups", s, || {
                        format!("f = {t:?}")
                    });
                }
                let map = SpaceMap::new(x.clone(), y.clone(), t.clone())?;
                if cont {
                    for a in powerset(x.size()) {
                        let lhs = map.image(&x.closure_by_opens(&a)?);
                        let rhs = y.closure_by_opens(&map.image(&a))?;
                        r.check(lhs.is_subset(&rhs), "f(cl A) ⊆ cl f(A)", s, || format!("f = {t:?}, A = {a}"));
                    }
                    for f in irr.iter() {
                        r.check(y.is_irreducible(&map.image(f)), "continuous images are irreducible", s, || {
                            format!("f = {t:?}, F = {f}")
                        });
                    }
                }
                if rep.si_plus_continuous.is_ok() {
                    for a in powerset(x.size()) {
                        let lhs = map.image(&x.cl_i(&a, cap)?);
                        let rhs = y.cl_i(&map.image(&a), cap)?;
                        r.check(lhs.is_subset(&rhs), "f(cl_I A) ⊆ cl_I f(A)", s, || format!("f = {t:?}, A = {a}"));
                    }
                    good.push(t);
                }
            }
            si_plus.push(good);
        }
    }
    for xi in 0..k {
        for yi in 0..k {
            for zi in 0..k {
                r.cases += 1;
                let c = &classifiers[xi * k + zi];
                for f in &si_plus[xi * k + yi] {
                    for g in &si_plus[yi * k + zi] {
                        let h: Vec<usize> = f.iter().map(|&i| g[i]).collect();
                        if let Err(w) = c.is_si_plus_continuous(&h) {
                            r.fail("SI⁺ maps compose", &[&spaces[xi], &spaces[yi], &spaces[zi]], format!(
                                "f = {f:?}, g = {g:?}, witness {w:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(r)
}

/// `Γ_SI(X)` with the lower Vietoris topology: its specialization order is
/// inclusion, it is strongly complete and Alexandroff; `Ψ(X)` is I-closed in
/// it; `η` is SI⁺-continuous and an order embedding onto `Ψ(X)`.
pub fn hyperspace_order(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(HYPERSPACE_ORDER);
    for x in spaces {
        r.cases += 1;
        let g = gamma_si(x, cap)?;
        let spec = g.space.specialization();
        for (i, a) in g.elements.iter().enumerate() {
            for (j, b) in g.elements.iter().enumerate() {
                r.check(spec.leq(i, j) == a.is_subset(b), "specialization is inclusion", &[x], || {
                    format!("{a} vs {b}")
                });
            }
        }
        r.check(g.space.is_strongly_complete(cap)?, "Γ_SI(X) is strongly complete", &[x], String::new);
        r.check(g.is_alexandroff_of_inclusion(), "lower Vietoris = Alexandroff(⊆)", &[x], String::new);
        let ps = psi(x, &g)?;
        let cl = g.space.cl_i(&ps, cap)?;
        r.check(cl == ps, "Ψ(X) is I-closed in Γ_SI(X)", &[x], || format!("Ψ = {ps}, cl_I Ψ = {cl}"));
        let c = strong_completion(x, cap)?;
        r.check(c.witnesses.eta_si_plus_continuous, "η is SI⁺-continuous", &[x], String::new);
        r.check(c.witnesses.completion_strongly_complete, "SC(X) is strongly complete", &[x], String::new);
        for a in 0..x.size() {
            for b in 0..x.size() {
                let same = x.specialization().leq(a, b) == c.completion.specialization().leq(c.eta.apply(a), c.eta.apply(b));
                r.check(same, "η is an order embedding", &[x], || format!("points {a} {b}"));
            }
        }
        let image = Subset::from_indices(g.len(), c.eta.table().iter().map(|&i| c.embedding[i]));
        r.check(image == ps, "η maps onto Ψ(X)", &[x], || format!("η(X) = {image}, Ψ = {ps}"));
    }
    Ok(r)
}

/// For all pairs with strongly complete target: every SI⁺ map factors through
/// `η` by exactly one SI⁺ map, namely `k ∘ f*`; `f*` is left adjoint to `f⁻¹`
/// and preserves `Irr⁺` suprema; SI-continuous maps out of `cl_I(Y)` agreeing
/// on `Y` coincide.
pub fn universal_property(spaces: &[FinSpace], cap: usize, bound: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(UNIVERSAL_PROPERTY);
    for x in spaces.iter().filter(|x| x.size() <= bound) {
        let gx = gamma_si(x, cap)?;
        for z in spaces.iter().filter(|z| z.size() <= bound) {
            if !z.is_strongly_complete(cap)? {
                continue;
            }
            r.cases += 1;
            let rep = check_universal_property(x, z, cap, bound)?;
            r.check(rep.eta_si_plus, "η is SI⁺-continuous", &[x, z], String::new);
            for e in rep.entries.iter().filter(|e| !e.holds()) {
                r.fail("unique factorization through η", &[x, z], format!("{e:?}"));
            }
            let gz = gamma_si(z, cap)?;
            let star = MapClassifier::new(&gx.space, &gz.space, cap)?;
            for e in &rep.entries {
                let f = SpaceMap::new(x.clone(), z.clone(), e.map.clone())?;
                let fs = f_star(&f, &gx, &gz, cap)?;
                if let Err(w) = star.preserves_irr_sups(fs.table()) {
                    r.fail("f* preserves Irr⁺ suprema", &[x, z], format!("f = {:?}, witness {w:?}", e.map));
                }
            }
        }
        agreement_on_dense(&mut r, x, &gx.space, cap)?;
    }
    Ok(r)
}

fn agreement_on_dense(r: &mut SuiteReport, x: &FinSpace, g: &FinSpace, cap: usize) -> Result<()> {
    let target = FinSpace::sierpinski();
    for y in powerset(g.size()).skip(1) {
        let cy = g.cl_i(&y, cap)?;
        if cy == y {
            continue;
        }
        r.cases += 1;
        let (sub, emb) = g.subspace_with_embedding(&cy)?;
        let on_y: Vec<usize> = (0..sub.size()).filter(|&i| y.contains(emb[i])).collect();
        let cls = MapClassifier::new(&sub, &target, cap)?;
        let maps: Vec<Vec<usize>> =
            all_tables(sub.size(), 2).filter(|t| cls.is_si_continuous(t).is_ok()).collect();
        for f in &maps {
            for h in &maps {
                if f != h && on_y.iter().all(|&i| f[i] == h[i]) {
                    r.fail("maps agreeing on Y agree on cl_I(Y)", &[x], format!("Y = {y}, f = {f:?}, g = {h:?}"));
                }
            }
        }
    }
    Ok(())
}

/// Relabelling `X` yields a homeomorphic completion, by a homeomorphism
/// commuting with the units.
pub fn completion_uniqueness(spaces: &[FinSpace], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(COMPLETION_UNIQUENESS);
    for x in spaces {
        let rep = check_uniqueness(x, cap)?;
        r.cases += rep.relabelings;
        for p in &rep.failures {
            r.fail("completion unique up to homeomorphism", &[x], format!("relabelling {p:?}"));
        }
    }
    Ok(r)
}

/// `Δ(X)` is a topology on finite spaces; a witness would be two I-open sets
/// whose intersection or union is not I-open.
pub fn delta_topology_witness(x: &FinSpace, cap: usize) -> Result<Option<(Subset, Subset)>> {
    let delta = x.analyze(cap)?.delta();
    for u in delta.iter() {
        for v in delta.iter() {
            if !delta.contains(&u.intersection(v)) || !delta.contains(&u.union(v)) {
                return Ok(Some((*u, *v)));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------

fn trace(s: &dyn SymbolicSpace, c: &ClosedForm, pts: &[Point]) -> Subset {
    Subset::from_indices(pts.len(), (0..pts.len()).filter(|&i| s.closed_contains(c, pts[i])))
}

fn points_of(f: &Subset, pts: &[Point]) -> Vec<Point> {
    f.iter().map(|i| pts[i]).collect()
}

/// Every catalog answer expressible on a truncation agrees with brute force
/// on `truncate(s, n)`, for `n ≤ max_n`.
pub fn truncation_consistency(r: &mut SuiteReport, s: &dyn SymbolicSpace, max_n: usize) -> Result<()> {
    for n in 0..=max_n {
        r.cases += 1;
        let (t, pts) = catalog::truncate(s, n)?;
        for i in 0..n {
            for j in 0..n {
                r.check(s.leq(pts[i], pts[j])? == t.specialization().leq(i, j), "order matches truncation", &[&t], || {
                    format!("{}: {:?} ≤ {:?}", s.name(), pts[i], pts[j])
                });
            }
        }
        for f in powerset(n) {
            let fp = points_of(&f, &pts);
            let c = s.closure_of_finite(&fp)?;
            let (sym, fin) = (trace(s, &c, &pts), t.closure(&f)?);
            r.check(sym == fin, "closure matches truncation", &[&t], || {
                format!("{}: cl {fp:?} = {c:?}, truncation {fin}", s.name())
            });
            if f.is_empty() {
                continue;
            }
            let d = IrrDescriptor::FiniteSet(fp.clone());
            let (sym, fin) = (s.is_irreducible(&d)?, t.is_irreducible_with(&f, IrrMethod::OpenPairs));
            r.check(sym == fin, "irreducibility matches truncation", &[&t], || {
                format!("{}: {fp:?}: {sym} vs {fin}", s.name())
            });
            let (sym, fin) = (s.is_directed(&d)?, t.is_directed(&f));
            r.check(sym == fin, "directedness matches truncation", &[&t], || {
                format!("{}: {fp:?}: {sym} vs {fin}", s.name())
            });
        }
    }
    Ok(())
}

/// Descriptors over the first few codec points, for probing.
pub fn probe_descriptors(s: &dyn SymbolicSpace) -> Vec<IrrDescriptor> {
    let pts: Vec<Point> = (0..6).map(|i| s.point_at(i)).collect();
    let mut out: Vec<IrrDescriptor> =
        powerset(6).skip(1).map(|f| IrrDescriptor::FiniteSet(points_of(&f, &pts))).collect();
    out.extend((0..6).map(IrrDescriptor::ChainTail));
    out.extend(powerset(4).map(|f| IrrDescriptor::Cofinite(points_of(&f, &pts))));
    out.extend((0..4).map(IrrDescriptor::Column));
    out.push(IrrDescriptor::WholeSpace);
    out
}

fn each_admissible_irreducible_has_sup(r: &mut SuiteReport, s: &dyn SymbolicSpace) -> Result<()> {
    for d in probe_descriptors(s) {
        r.cases += 1;
        match s.is_irreducible(&d) {
            Ok(true) => {
                let sup = s.sup(&d)?;
                r.check(sup.is_some(), "completion is strongly complete", &[], || format!("{}: {d:?}", s.name()));
            }
            Ok(false) | Err(Error::UnsupportedDescriptor) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// Catalog ground truths, each guarded by truncation consistency up to
/// `max_n` points.
pub fn catalog_suite(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(CATALOG);
    for name in catalog::NAMES {
        let s = catalog::lookup(name).expect("catalog name");
        truncation_consistency(&mut r, s.as_ref(), max_n)?;
    }
    omega_truths(&mut r)?;
    cofinite_truths(&mut r)?;
    antichain_truths(&mut r)?;
    johnstone_truths(&mut r, max_n)?;
    Ok(r)
}

/// `SC(ω) ≅ ω+1`: `η` embeds the first 64 points and one new top is added.
pub fn omega_truths(r: &mut SuiteReport) -> Result<()> {
    let omega = catalog::Omega;
    let c = omega.strong_completion()?;
    let sc = c.space.as_ref();
    r.check(sc.id() == catalog::CatalogId::OmegaPlusOne, "SC(omega) is ω+1", &[], || sc.name().into());
    r.check(c.new_points.len() == 1 && c.new_points[0].point == TOP, "SC(omega) adds one point", &[], || {
        format!("{:?}", c.new_points)
    });
    for i in 0..64 {
        let a = omega.point_at(i);
        r.cases += 1;
        r.check(c.eta(a) != TOP && sc.leq(c.eta(a), TOP)?, "new point is the top", &[], || format!("{a:?}"));
        r.check(!sc.leq(TOP, c.eta(a))?, "new point is the top", &[], || format!("{a:?}"));
        for j in 0..64 {
            let b = omega.point_at(j);
            r.check(omega.leq(a, b)? == sc.leq(c.eta(a), c.eta(b))?, "η is an order embedding", &[], || {
                format!("{a:?} {b:?}")
            });
        }
    }
    r.check(sc.sup(&IrrDescriptor::ChainTail(0))? == Some(TOP), "ℕ has supremum ω in SC(omega)", &[], String::new);
    r.check(omega.sup(&IrrDescriptor::ChainTail(0))?.is_none(), "ℕ has no supremum in omega", &[], String::new);
    // Γ_SI of each truncation against the closed-form classification
    // {∅} ∪ {↓k} ∪ {ℕ}.
    for n in 0..=12 {
        r.cases += 1;
        let (t, pts) = catalog::truncate(&omega, n)?;
        let g = gamma_si(&t, crate::DEFAULT_CAP)?;
        let mut forms = vec![ClosedForm::Empty, ClosedForm::Whole];
        for &p in &pts {
            forms.push(omega.closure_of_finite(&[p])?);
        }
        let traces = SubsetFamily::new(n, forms.iter().map(|c| trace(&omega, c, &pts)).collect());
        let elems = SubsetFamily::new(n, g.elements.clone());
        r.check(traces == elems, "Γ_SI of truncation matches closed forms", &[&t], || {
            format!("forms {:?}, Γ_SI {:?}", traces.as_slice(), elems.as_slice())
        });
    }
    each_admissible_irreducible_has_sup(r, sc)
}

/// `SC(nat_cofinite) = ℕ ∪ {⊤}` with opens `∅` and `S ∪ {⊤}`, `S` cofinite.
pub fn cofinite_truths(r: &mut SuiteReport) -> Result<()> {
    let x = catalog::NatCofinite;
    let c = x.strong_completion()?;
    let sc = c.space.as_ref();
    r.check(c.new_points.len() == 1 && c.new_points[0].point == TOP, "SC(nat_cofinite) adds one point", &[], || {
        format!("{:?}", c.new_points)
    });
    // Ψ is not I-closed: the point closures form an irreducible family whose
    // supremum is the new top.
    let all_closures = IrrDescriptor::Cofinite(vec![TOP]);
    r.check(
        sc.is_irreducible(&all_closures)? && sc.sup(&all_closures)? == Some(TOP),
        "point closures have supremum ⊤",
        &[],
        String::new,
    );
    r.check(
        x.is_irreducible(&IrrDescriptor::WholeSpace)? && x.sup(&IrrDescriptor::WholeSpace)?.is_none(),
        "ℕ is irreducible without supremum",
        &[],
        String::new,
    );
    let small: Vec<Point> = (0..6).map(Point).collect();
    for e in powerset(6) {
        r.cases += 1;
        let excl = points_of(&e, &small);
        let open = OpenForm::Cofinite(excl.clone());
        r.check(sc.is_open(&open)? && sc.form_contains(&open, TOP), "S ∪ {⊤} is open", &[], || {
            format!("excluded {excl:?}")
        });
        let mut with_top = excl.clone();
        with_top.push(TOP);
        r.check(!sc.is_open(&OpenForm::Cofinite(with_top))?, "cofinite S without ⊤ is not open", &[], || {
            format!("excluded {excl:?}")
        });
        if !e.is_empty() {
            r.check(!sc.is_open(&OpenForm::Finite(excl.clone()))?, "finite nonempty sets are not open", &[], || {
                format!("{excl:?}")
            });
            let mut f = excl.clone();
            f.push(TOP);
            r.check(!sc.is_open(&OpenForm::Finite(f))?, "finite nonempty sets are not open", &[], || {
                format!("{excl:?} ∪ {{⊤}}")
            });
        }
    }
    r.check(sc.is_open(&OpenForm::Empty)? && sc.is_open(&OpenForm::Whole)?, "∅ and the whole are open", &[], String::new);
    // Lower Vietoris oracle: inside Γ_SI of a truncation with two to five
    // points, the point closures together with the whole carrier form the
    // truncation of the completion, the carrier playing ⊤.
    for n in 2..=5 {
        r.cases += 1;
        let (t, _) = catalog::truncate(&x, n)?;
        let g = gamma_si(&t, 1 << n)?;
        let full = g.index_of(&Subset::full(n)).expect("the carrier is SI-closed");
        let members = Subset::from_indices(g.len(), g.point_closures().into_iter().chain([full]));
        let (sub, emb) = g.space.subspace_with_embedding(&members)?;
        let (expected, pts) = catalog::truncate(sc, n + 1)?;
        let table: Vec<usize> = emb
            .iter()
            .map(|&gi| match g.elements[gi] {
                e if e == Subset::full(n) => 0,
                e => {
                    let p = Point(e.first().expect("point closure") as i64);
                    pts.iter().position(|&q| q == p).expect("truncated point")
                }
            })
            .collect();
        r.check(is_homeomorphism(&sub, &expected, &table), "completion truncation matches Γ_SI oracle", &[&sub, &expected], || {
            format!("n = {n}, {table:?}")
        });
    }
    each_admissible_irreducible_has_sup(r, sc)
}

/// `SC(nat_antichain)` is the space itself.
pub fn antichain_truths(r: &mut SuiteReport) -> Result<()> {
    let x = catalog::NatAntichain;
    let c = x.strong_completion()?;
    r.cases += 1;
    r.check(c.space.id() == x.id() && c.new_points.is_empty(), "SC(nat_antichain) is itself", &[], || {
        c.summary.clone()
    });
    for i in 0..16 {
        for j in 0..16 {
            let (a, b) = (Point(i), Point(j));
            r.check(x.leq(a, b)? == c.space.leq(c.eta(a), c.eta(b))?, "η is an order isomorphism", &[], || {
                format!("{a:?} {b:?}")
            });
        }
    }
    each_admissible_irreducible_has_sup(r, c.space.as_ref())
}

/// Johnstone's space: the whole space is Scott-irreducible, not directed and
/// without supremum.
pub fn johnstone_truths(r: &mut SuiteReport, max_n: usize) -> Result<()> {
    let j = Johnstone { scott: true };
    let d = IrrDescriptor::WholeSpace;
    r.cases += 1;
    r.check(j.is_irreducible(&d)?, "johnstone: whole space irreducible", &[], String::new);
    r.check(!j.is_directed(&d)?, "johnstone: whole space not directed", &[], String::new);
    r.check(j.sup(&d)?.is_none(), "johnstone: whole space has no supremum", &[], String::new);
    let (a, b) = Johnstone::maximal_pair();
    // Both are maximal: nothing in a large probe lies strictly above them.
    let probe: Vec<Point> = (-20..200).map(Point).collect();
    let above = |p: Point| probe.iter().any(|&q| q != p && j.leq_unchecked(p, q));
    r.check(a != b && !above(a) && !above(b), "johnstone: maximal pair", &[], || format!("{a:?} {b:?}"));
    for n in 2..=max_n {
        r.cases += 1;
        let (t, _) = catalog::truncate(&j, n)?;
        r.check(!t.is_directed(&Subset::full(n)), "johnstone: truncations are not directed", &[&t], || {
            format!("n = {n}")
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_CAP;

    #[test]
    fn suites_pass_on_small_population() {
        let pop = exhaustive_population(2);
        for rep in [
            finite_collapse(&pop, DEFAULT_CAP).unwrap(),
            irreducible_basics(&pop, DEFAULT_CAP).unwrap(),
            si_topology_basics(&pop, DEFAULT_CAP).unwrap(),
            i_closed_basics(&pop, DEFAULT_CAP).unwrap(),
            i_closed_intersection(&pop, DEFAULT_CAP).unwrap(),
            continuity_hierarchy(&pop, DEFAULT_CAP).unwrap(),
            hyperspace_order(&pop, DEFAULT_CAP).unwrap(),
            universal_property(&pop, DEFAULT_CAP, 2).unwrap(),
            completion_uniqueness(&pop, DEFAULT_CAP).unwrap(),
        ] {
            assert!(rep.passed(), "{rep:?}");
            assert!(rep.cases > 0);
        }
    }

    #[test]
    fn catalog_suite_passes() {
        let rep = catalog_suite(6).unwrap();
        assert!(rep.passed(), "{:#?}", rep.violations);
    }

    #[test]
    fn delta_is_a_topology_on_small_spaces() {
        for x in exhaustive_population(3) {
            assert_eq!(delta_topology_witness(&x, DEFAULT_CAP).unwrap(), None);
        }
    }
}
