//! Countably infinite spaces with hand-written decision procedures.
//!
//! Points are integer codes. Non-negative codes are the "finite" points of an
//! entry; negative codes are reserved for limit points:
//!
//! | entry              | carrier                 | codes                                   |
//! |--------------------|-------------------------|-----------------------------------------|
//! | `omega`            | ℕ, Scott                | `n ↦ n`                                 |
//! | `omega_plus_one`   | ℕ ∪ {ω}, Scott          | `n ↦ n`, `ω ↦ -1`                       |
//! | `nat_cofinite`     | ℕ, cofinite             | `n ↦ n`                                 |
//! | `nat_cofinite_top` | ℕ ∪ {⊤}                 | `n ↦ n`, `⊤ ↦ -1`                       |
//! | `nat_antichain`    | ℕ, discrete             | `n ↦ n`                                 |
//! | `johnstone_*`      | ℕ × (ℕ ∪ {ω})           | `(m, n) ↦ (m+n)(m+n+1)/2 + n`, `(m, ω) ↦ -(m+1)` |
//!
//! Each entry also fixes a codec order `point_at(0), point_at(1), …` used
//! for truncation; limit points with a single code come first.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::FinPoset;
use crate::space::{intersection_closure, union_closure, FinSpace, MAX_OPENS};
use crate::subset::{Subset, MAX_POINTS};

/// An integer-coded point of a catalog space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub i64);

/// The limit point `-1` of `omega_plus_one` and `nat_cofinite_top`.
pub const TOP: Point = Point(-1);

/// A symbolic description of an (intended) irreducible subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IrrDescriptor {
    FiniteSet(Vec<Point>),
    /// `{n ∈ ℕ | n ≥ start}`; limit points excluded.
    ChainTail(u64),
    /// The carrier minus finitely many points.
    Cofinite(Vec<Point>),
    WholeSpace,
    /// The finite points `(j, n)`, `n ∈ ℕ`, of column `j` of Johnstone's space.
    Column(u64),
}

/// A symbolic subset that may or may not be open in a given entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OpenForm {
    Empty,
    Whole,
    /// `{n ∈ ℕ | n ≥ k}` together with the entry's limit points, if any.
    UpFrom(u64),
    /// The carrier minus finitely many points.
    Cofinite(Vec<Point>),
    Finite(Vec<Point>),
}

/// A symbolic closed set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    Empty,
    Whole,
    Finite(Vec<Point>),
    /// `↓g₁ ∪ … ∪ ↓gₖ` with pairwise incomparable generators, sorted.
    PrincipalIdeals(Vec<Point>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogId {
    Omega,
    OmegaPlusOne,
    NatCofinite,
    NatCofiniteTop,
    NatAntichain,
    JohnstoneAlex,
    JohnstoneScott,
}

/// A point the completion adds, with the closed set of the source it stands
/// for and an irreducible family of point closures whose supremum it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewPoint {
    pub point: Point,
    pub label: ClosedForm,
    pub generated_by: IrrDescriptor,
}

/// `cl_I(Ψ(X))` for a catalog space: another catalog space into which the
/// source embeds by the identity on codes.
pub struct SymbolicCompletion {
    pub space: Box<dyn SymbolicSpace>,
    pub new_points: Vec<NewPoint>,
    pub summary: String,
}

impl SymbolicCompletion {
    /// `η` on codes.
    pub fn eta(&self, p: Point) -> Point {
        p
    }
}

/// Decision procedures for one catalog entry.
pub trait SymbolicSpace: Send + Sync {
    fn id(&self) -> CatalogId;

    fn name(&self) -> &'static str;

    fn is_point(&self, p: Point) -> bool;

    /// The `i`-th point in codec order.
    fn point_at(&self, i: usize) -> Point;

    /// The specialization order, on valid points.
    fn leq_unchecked(&self, a: Point, b: Point) -> bool;

    fn leq(&self, a: Point, b: Point) -> Result<bool> {
        self.check_point(a)?;
        self.check_point(b)?;
        Ok(self.leq_unchecked(a, b))
    }

    fn check_point(&self, p: Point) -> Result<()> {
        if self.is_point(p) {
            Ok(())
        } else {
            Err(Error::InvalidPoint(p.0))
        }
    }

    /// Membership in the subset a form denotes, whether or not it is open.
    fn form_contains(&self, u: &OpenForm, p: Point) -> bool {
        match u {
            OpenForm::Empty => false,
            OpenForm::Whole => true,
            OpenForm::UpFrom(k) => p.0 < 0 || p.0 as u64 >= *k,
            OpenForm::Cofinite(e) => !e.contains(&p),
            OpenForm::Finite(s) => s.contains(&p),
        }
    }

    fn check_form(&self, u: &OpenForm) -> Result<()> {
        match u {
            OpenForm::Cofinite(v) | OpenForm::Finite(v) => {
                v.iter().try_for_each(|&p| self.check_point(p)).map_err(|_| Error::UnsupportedForm)
            }
            _ => Ok(()),
        }
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool>;

    /// Open, and `⋁F ∈ U` implies `F ∩ U ≠ ∅` for every `F ∈ Irr⁺`.
    fn is_si_open(&self, u: &OpenForm) -> Result<bool>;

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm>;

    fn closed_contains(&self, c: &ClosedForm, p: Point) -> bool {
        match c {
            ClosedForm::Empty => false,
            ClosedForm::Whole => self.is_point(p),
            ClosedForm::Finite(s) => s.contains(&p),
            ClosedForm::PrincipalIdeals(g) => g.iter().any(|&g| self.leq_unchecked(p, g)),
        }
    }

    /// Rejects descriptors this entry has no procedure for.
    fn check_descriptor(&self, d: &IrrDescriptor) -> Result<()> {
        match d {
            IrrDescriptor::FiniteSet(s) if s.is_empty() => Err(Error::UnsupportedDescriptor),
            IrrDescriptor::FiniteSet(s) | IrrDescriptor::Cofinite(s) => s
                .iter()
                .try_for_each(|&p| self.check_point(p))
                .map_err(|_| Error::UnsupportedDescriptor),
            IrrDescriptor::Column(_) => Err(Error::UnsupportedDescriptor),
            IrrDescriptor::ChainTail(_) | IrrDescriptor::WholeSpace => Ok(()),
        }
    }

    fn descriptor_contains(&self, d: &IrrDescriptor, p: Point) -> bool {
        self.is_point(p)
            && match d {
                IrrDescriptor::FiniteSet(s) => s.contains(&p),
                IrrDescriptor::ChainTail(k) => p.0 >= 0 && p.0 as u64 >= *k,
                IrrDescriptor::Cofinite(e) => !e.contains(&p),
                IrrDescriptor::WholeSpace => true,
                IrrDescriptor::Column(_) => false,
            }
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool>;

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool>;

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>>;

    /// Open forms whose traces generate the relative topology on the first
    /// `n` points in codec order. `None` when the entry has no such family;
    /// truncation then uses the Alexandroff topology of the induced order.
    fn generating_opens(&self, n: usize) -> Option<Vec<OpenForm>>;

    fn strong_completion(&self) -> Result<SymbolicCompletion>;
}

fn check_nonempty_points(s: &dyn SymbolicSpace, d: &IrrDescriptor) -> Result<()> {
    s.check_descriptor(d)
}

/// Greatest element of a finite set under the entry's order.
fn finite_max(s: &dyn SymbolicSpace, pts: &[Point]) -> Option<Point> {
    pts.iter()
        .copied()
        .find(|&m| pts.iter().all(|&q| s.leq_unchecked(q, m)))
}

fn canonical(mut v: Vec<Point>) -> Vec<Point> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `{0, …, k-1}`-shaped: a down-set of the chain ℕ.
fn is_initial_segment(e: &[Point]) -> bool {
    let e = canonical(e.to_vec());
    e.iter().enumerate().all(|(i, p)| p.0 == i as i64)
}

// ---------------------------------------------------------------------------

/// ℕ as a chain with its Scott topology. Every irreducible subset is a
/// nonempty chain; bounded ones are finite and contain their supremum.
#[derive(Clone, Copy, Debug, Default)]
pub struct Omega;

impl SymbolicSpace for Omega {
    fn id(&self) -> CatalogId {
        CatalogId::Omega
    }

    fn name(&self) -> &'static str {
        "omega"
    }

    fn is_point(&self, p: Point) -> bool {
        p.0 >= 0
    }

    fn point_at(&self, i: usize) -> Point {
        Point(i as i64)
    }

    fn leq_unchecked(&self, a: Point, b: Point) -> bool {
        a.0 <= b.0
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool> {
        self.check_form(u)?;
        Ok(match u {
            OpenForm::Empty | OpenForm::Whole | OpenForm::UpFrom(_) => true,
            OpenForm::Cofinite(e) => is_initial_segment(e),
            OpenForm::Finite(s) => s.is_empty(),
        })
    }

    fn is_si_open(&self, u: &OpenForm) -> Result<bool> {
        // Every member of Irr⁺ contains its supremum.
        self.is_open(u)
    }

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm> {
        pts.iter().try_for_each(|&p| self.check_point(p))?;
        Ok(match pts.iter().max() {
            None => ClosedForm::Empty,
            Some(&m) => ClosedForm::PrincipalIdeals(alloc::vec![m]),
        })
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(true)
    }

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool> {
        self.is_irreducible(d)
    }

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => s.iter().max().copied(),
            _ => None,
        })
    }

    fn generating_opens(&self, n: usize) -> Option<Vec<OpenForm>> {
        Some((0..=n as u64).map(OpenForm::UpFrom).collect())
    }

    fn strong_completion(&self) -> Result<SymbolicCompletion> {
        Ok(SymbolicCompletion {
            space: Box::new(OmegaPlusOne),
            new_points: alloc::vec![NewPoint {
                point: TOP,
                label: ClosedForm::Whole,
                generated_by: IrrDescriptor::ChainTail(0),
            }],
            summary: "ω+1; one new top; η = inclusion".into(),
        })
    }
}

/// ℕ ∪ {ω} with its Scott topology: opens are `∅` and `{n ≥ k} ∪ {ω}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OmegaPlusOne;

impl OmegaPlusOne {
    /// A tail of ℕ missed by `u` although `ω ∈ u`: a member of `Irr⁺` whose
    /// supremum lies in `u` but which does not meet `u`.
    pub fn inaccessibility_witness(&self, u: &OpenForm) -> Option<IrrDescriptor> {
        if !self.form_contains(u, TOP) {
            return None;
        }
        match u {
            OpenForm::Finite(s) => {
                let start = s.iter().filter(|p| p.0 >= 0).map(|p| p.0 as u64 + 1).max().unwrap_or(0);
                Some(IrrDescriptor::ChainTail(start))
            }
            _ => None,
        }
    }
}

impl SymbolicSpace for OmegaPlusOne {
    fn id(&self) -> CatalogId {
        CatalogId::OmegaPlusOne
    }

    fn name(&self) -> &'static str {
        "omega_plus_one"
    }

    fn is_point(&self, p: Point) -> bool {
        p.0 >= -1
    }

    fn point_at(&self, i: usize) -> Point {
        Point(i as i64 - 1)
    }

    fn leq_unchecked(&self, a: Point, b: Point) -> bool {
        b == TOP || (a != TOP && a.0 <= b.0)
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool> {
        self.check_form(u)?;
        Ok(match u {
            OpenForm::Empty | OpenForm::Whole | OpenForm::UpFrom(_) => true,
            // An up-set containing ω needs a tail of ℕ to be Scott open.
            OpenForm::Cofinite(e) => !e.contains(&TOP) && is_initial_segment(e),
            OpenForm::Finite(s) => s.is_empty(),
        })
    }

    fn is_si_open(&self, u: &OpenForm) -> Result<bool> {
        // Members of Irr⁺ missing their supremum are the infinite subsets of
        // ℕ, with supremum ω.
        Ok(self.is_open(u)? && self.inaccessibility_witness(u).is_none())
    }

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm> {
        pts.iter().try_for_each(|&p| self.check_point(p))?;
        Ok(match finite_max(self, pts) {
            None => ClosedForm::Empty,
            Some(TOP) => ClosedForm::Whole,
            Some(m) => ClosedForm::PrincipalIdeals(alloc::vec![m]),
        })
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(true)
    }

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool> {
        self.is_irreducible(d)
    }

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => finite_max(self, s),
            _ => Some(TOP),
        })
    }

    fn generating_opens(&self, n: usize) -> Option<Vec<OpenForm>> {
        Some((0..=n as u64).map(OpenForm::UpFrom).collect())
    }

    fn strong_completion(&self) -> Result<SymbolicCompletion> {
        Ok(SymbolicCompletion {
            space: Box::new(OmegaPlusOne),
            new_points: Vec::new(),
            summary: "ω+1; already strongly complete; η = identity".into(),
        })
    }
}

/// ℕ with the cofinite topology. T₁, so the order is discrete; the infinite
/// subsets are irreducible and have no supremum.
#[derive(Clone, Copy, Debug, Default)]
pub struct NatCofinite;

impl SymbolicSpace for NatCofinite {
    fn id(&self) -> CatalogId {
        CatalogId::NatCofinite
    }

    fn name(&self) -> &'static str {
        "nat_cofinite"
    }

    fn is_point(&self, p: Point) -> bool {
        p.0 >= 0
    }

    fn point_at(&self, i: usize) -> Point {
        Point(i as i64)
    }

    fn leq_unchecked(&self, a: Point, b: Point) -> bool {
        a == b
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool> {
        self.check_form(u)?;
        Ok(match u {
            OpenForm::Finite(s) => s.is_empty(),
            _ => true,
        })
    }

    fn is_si_open(&self, u: &OpenForm) -> Result<bool> {
        // Irr⁺ consists of singletons.
        self.is_open(u)
    }

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm> {
        pts.iter().try_for_each(|&p| self.check_point(p))?;
        Ok(if pts.is_empty() {
            ClosedForm::Empty
        } else {
            ClosedForm::Finite(canonical(pts.to_vec()))
        })
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => canonical(s.clone()).len() == 1,
            _ => true,
        })
    }

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(matches!(d, IrrDescriptor::FiniteSet(s) if canonical(s.clone()).len() == 1))
    }

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => finite_max(self, s),
            _ => None,
        })
    }

    fn generating_opens(&self, n: usize) -> Option<Vec<OpenForm>> {
        let pts: Vec<Point> = (0..n).map(|i| self.point_at(i)).collect();
        Some(
            pts.iter()
                .map(|p| OpenForm::Cofinite(pts.iter().copied().filter(|q| q != p).collect()))
                .collect(),
        )
    }

    fn strong_completion(&self) -> Result<SymbolicCompletion> {
        Ok(SymbolicCompletion {
            space: Box::new(NatCofiniteTop),
            new_points: alloc::vec![NewPoint {
                point: TOP,
                label: ClosedForm::Whole,
                generated_by: IrrDescriptor::Cofinite(Vec::new()),
            }],
            summary: "ℕ ∪ {⊤}; one new top; η = inclusion".into(),
        })
    }
}

/// ℕ ∪ {⊤}: opens are `∅` and `S ∪ {⊤}` for cofinite `S ⊆ ℕ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NatCofiniteTop;

impl SymbolicSpace for NatCofiniteTop {
    fn id(&self) -> CatalogId {
        CatalogId::NatCofiniteTop
    }

    fn name(&self) -> &'static str {
        "nat_cofinite_top"
    }

    fn is_point(&self, p: Point) -> bool {
        p.0 >= -1
    }

    fn point_at(&self, i: usize) -> Point {
        Point(i as i64 - 1)
    }

    fn leq_unchecked(&self, a: Point, b: Point) -> bool {
        a == b || b == TOP
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool> {
        self.check_form(u)?;
        Ok(match u {
            OpenForm::Empty | OpenForm::Whole | OpenForm::UpFrom(_) => true,
            OpenForm::Cofinite(e) => !e.contains(&TOP),
            OpenForm::Finite(s) => s.is_empty(),
        })
    }

    fn is_si_open(&self, u: &OpenForm) -> Result<bool> {
        // Members of Irr⁺ missing their supremum ⊤ are the infinite subsets
        // of ℕ; every open set containing ⊤ is cofinite.
        self.is_open(u)
    }

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm> {
        pts.iter().try_for_each(|&p| self.check_point(p))?;
        Ok(if pts.is_empty() {
            ClosedForm::Empty
        } else if pts.contains(&TOP) {
            ClosedForm::Whole
        } else {
            ClosedForm::Finite(canonical(pts.to_vec()))
        })
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => s.contains(&TOP) || canonical(s.clone()).len() == 1,
            _ => true,
        })
    }

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => s.contains(&TOP) || canonical(s.clone()).len() == 1,
            IrrDescriptor::ChainTail(_) => false,
            IrrDescriptor::Cofinite(e) => !e.contains(&TOP),
            _ => true,
        })
    }

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) if canonical(s.clone()).len() == 1 => Some(s[0]),
            _ => Some(TOP),
        })
    }

    fn generating_opens(&self, n: usize) -> Option<Vec<OpenForm>> {
        let naturals: Vec<Point> = (0..n).map(|i| self.point_at(i)).filter(|p| p.0 >= 0).collect();
        let mut forms = alloc::vec![OpenForm::Cofinite(naturals.clone())];
        forms.extend(
            naturals
                .iter()
                .map(|p| OpenForm::Cofinite(naturals.iter().copied().filter(|q| q != p).collect())),
        );
        Some(forms)
    }

    fn strong_completion(&self) -> Result<SymbolicCompletion> {
        Ok(SymbolicCompletion {
            space: Box::new(NatCofiniteTop),
            new_points: Vec::new(),
            summary: "ℕ ∪ {⊤}; already strongly complete; η = identity".into(),
        })
    }
}

/// ℕ with the discrete topology.
#[derive(Clone, Copy, Debug, Default)]
pub struct NatAntichain;

impl SymbolicSpace for NatAntichain {
    fn id(&self) -> CatalogId {
        CatalogId::NatAntichain
    }

    fn name(&self) -> &'static str {
        "nat_antichain"
    }

    fn is_point(&self, p: Point) -> bool {
        p.0 >= 0
    }

    fn point_at(&self, i: usize) -> Point {
        Point(i as i64)
    }

    fn leq_unchecked(&self, a: Point, b: Point) -> bool {
        a == b
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool> {
        self.check_form(u)?;
        Ok(true)
    }

    fn is_si_open(&self, u: &OpenForm) -> Result<bool> {
        self.is_open(u)
    }

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm> {
        NatCofinite.closure_of_finite(pts)
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool> {
        check_nonempty_points(self, d)?;
        Ok(matches!(d, IrrDescriptor::FiniteSet(s) if canonical(s.clone()).len() == 1))
    }

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool> {
        self.is_irreducible(d)
    }

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>> {
        check_nonempty_points(self, d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => finite_max(self, s),
            _ => None,
        })
    }

    fn generating_opens(&self, n: usize) -> Option<Vec<OpenForm>> {
        Some((0..n).map(|i| OpenForm::Finite(alloc::vec![self.point_at(i)])).collect())
    }

    fn strong_completion(&self) -> Result<SymbolicCompletion> {
        Ok(SymbolicCompletion {
            space: Box::new(NatAntichain),
            new_points: Vec::new(),
            summary: "ℕ (discrete); no new points; η = identity".into(),
        })
    }
}

/// Johnstone's poset `ℕ × (ℕ ∪ {ω})` with `(m, n) ≤ (m', n')` iff
/// `m = m'` and `n ≤ n'`, or `n' = ω` and `n ≤ m'`.
///
/// With the Scott topology the whole space is irreducible but not directed.
/// With the Alexandroff topology irreducible means directed.
#[derive(Clone, Copy, Debug)]
pub struct Johnstone {
    pub scott: bool,
}

/// Second coordinate of a Johnstone point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Height {
    Finite(u64),
    Omega,
}

impl Johnstone {
    pub fn encode(m: u64, n: Height) -> Point {
        match n {
            Height::Finite(n) => Point(((m + n) * (m + n + 1) / 2 + n) as i64),
            Height::Omega => Point(-(m as i64) - 1),
        }
    }

    pub fn decode(p: Point) -> (u64, Height) {
        if p.0 < 0 {
            return ((-p.0 - 1) as u64, Height::Omega);
        }
        let z = p.0 as u64;
        let w = ((8 * z + 1).isqrt() - 1) / 2;
        let n = z - w * (w + 1) / 2;
        (w - n, Height::Finite(n))
    }

    /// Two distinct maximal points: no common upper bound exists, so the whole
    /// space is not directed.
    pub fn maximal_pair() -> (Point, Point) {
        (Self::encode(0, Height::Omega), Self::encode(1, Height::Omega))
    }
}

impl SymbolicSpace for Johnstone {
    fn id(&self) -> CatalogId {
        if self.scott {
            CatalogId::JohnstoneScott
        } else {
            CatalogId::JohnstoneAlex
        }
    }

    fn name(&self) -> &'static str {
        if self.scott {
            "johnstone_scott"
        } else {
            "johnstone_alex"
        }
    }

    fn is_point(&self, _p: Point) -> bool {
        true
    }

    fn point_at(&self, i: usize) -> Point {
        Point(i as i64)
    }

    fn leq_unchecked(&self, a: Point, b: Point) -> bool {
        let ((m, n), (m2, n2)) = (Self::decode(a), Self::decode(b));
        match (n, n2) {
            (_, _) if a == b => true,
            (Height::Finite(n), Height::Finite(n2)) => m == m2 && n <= n2,
            (Height::Finite(n), Height::Omega) => m == m2 || n <= m2,
            (Height::Omega, _) => false,
        }
    }

    fn form_contains(&self, u: &OpenForm, p: Point) -> bool {
        match u {
            OpenForm::Empty => false,
            OpenForm::Whole => true,
            OpenForm::Cofinite(e) => !e.contains(&p),
            OpenForm::Finite(s) => s.contains(&p),
            OpenForm::UpFrom(_) => false,
        }
    }

    fn is_open(&self, u: &OpenForm) -> Result<bool> {
        match u {
            OpenForm::Empty | OpenForm::Whole => Ok(true),
            _ => Err(Error::UnsupportedForm),
        }
    }

    fn is_si_open(&self, _u: &OpenForm) -> Result<bool> {
        Err(Error::UnsupportedForm)
    }

    fn closure_of_finite(&self, pts: &[Point]) -> Result<ClosedForm> {
        // ↓F is closed in both topologies and is the least closed superset.
        let gens: Vec<Point> = pts
            .iter()
            .copied()
            .filter(|&p| !pts.iter().any(|&q| q != p && self.leq_unchecked(p, q)))
            .collect();
        Ok(if gens.is_empty() {
            ClosedForm::Empty
        } else {
            ClosedForm::PrincipalIdeals(canonical(gens))
        })
    }

    fn check_descriptor(&self, d: &IrrDescriptor) -> Result<()> {
        match d {
            IrrDescriptor::FiniteSet(s) if !s.is_empty() => Ok(()),
            IrrDescriptor::WholeSpace | IrrDescriptor::Column(_) => Ok(()),
            _ => Err(Error::UnsupportedDescriptor),
        }
    }

    fn descriptor_contains(&self, d: &IrrDescriptor, p: Point) -> bool {
        match d {
            IrrDescriptor::FiniteSet(s) => s.contains(&p),
            IrrDescriptor::WholeSpace => true,
            IrrDescriptor::Column(j) => matches!(Self::decode(p), (m, Height::Finite(_)) if m == *j),
            _ => false,
        }
    }

    fn is_irreducible(&self, d: &IrrDescriptor) -> Result<bool> {
        self.check_descriptor(d)?;
        Ok(match d {
            // A finite set is irreducible in either topology iff ↓F is a
            // single principal ideal, i.e. F has a greatest element.
            IrrDescriptor::FiniteSet(s) => finite_max(self, s).is_some(),
            // Any two nonempty Scott opens contain (m, ω) for all large m.
            IrrDescriptor::WholeSpace => self.scott,
            IrrDescriptor::Column(_) => true,
            _ => unreachable!(),
        })
    }

    fn is_directed(&self, d: &IrrDescriptor) -> Result<bool> {
        self.check_descriptor(d)?;
        Ok(match d {
            IrrDescriptor::FiniteSet(s) => finite_max(self, s).is_some(),
            IrrDescriptor::WholeSpace => false,
            IrrDescriptor::Column(_) => true,
            _ => unreachable!(),
        })
    }

    fn sup(&self, d: &IrrDescriptor) -> Result<Option<Point>> {
        self.check_descriptor(d)?;
        Ok(match d {
            // Without a greatest element the upper bounds are infinitely many
            // pairwise incomparable limit points.
            IrrDescriptor::FiniteSet(s) => finite_max(self, s),
            // The maximal points (m, ω) are pairwise incomparable.
            IrrDescriptor::WholeSpace => None,
            IrrDescriptor::Column(j) => Some(Self::encode(*j, Height::Omega)),
            _ => unreachable!(),
        })
    }

    fn generating_opens(&self, _n: usize) -> Option<Vec<OpenForm>> {
        // The traces of Scott opens on a finite set of finite points are its
        // up-sets, as for the Alexandroff topology.
        None
    }

    fn strong_completion(&self) -> Result<SymbolicCompletion> {
        Err(Error::Unsupported("strong completion of Johnstone's space"))
    }
}

/// Looks up a catalog entry by name.
pub fn lookup(name: &str) -> Option<Box<dyn SymbolicSpace>> {
    Some(match name {
        "omega" | "omega_scott" => Box::new(Omega),
        "omega_plus_one" | "omega_plus_one_scott" => Box::new(OmegaPlusOne),
        "nat_cofinite" => Box::new(NatCofinite),
        "nat_cofinite_top" => Box::new(NatCofiniteTop),
        "nat_antichain" => Box::new(NatAntichain),
        "johnstone" | "johnstone_scott" => Box::new(Johnstone { scott: true }),
        "johnstone_alex" => Box::new(Johnstone { scott: false }),
        _ => return None,
    })
}

/// Names accepted by [`lookup`], one per entry.
pub const NAMES: &[&str] = &[
    "omega",
    "omega_plus_one",
    "nat_cofinite",
    "nat_cofinite_top",
    "nat_antichain",
    "johnstone_scott",
    "johnstone_alex",
];

/// The subspace on the first `n` points in codec order, with those points.
pub fn truncate(s: &dyn SymbolicSpace, n: usize) -> Result<(FinSpace, Vec<Point>)> {
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints { len: n, max: MAX_POINTS });
    }
    let pts: Vec<Point> = (0..n).map(|i| s.point_at(i)).collect();
    let space = match s.generating_opens(n) {
        Some(forms) => {
            let traces = forms.iter().map(|u| {
                debug_assert!(s.is_open(u).unwrap_or(false));
                Subset::from_indices(n, (0..n).filter(|&i| s.form_contains(u, pts[i])))
            });
            let basis = intersection_closure(n, traces, MAX_OPENS)?;
            let opens = union_closure(n, basis.into_vec(), MAX_OPENS)?;
            FinSpace::from_opens(n, opens.into_vec())?
        }
        None => {
            let pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
            let pairs: Vec<(usize, usize)> =
                pairs.filter(|&(i, j)| s.leq_unchecked(pts[i], pts[j])).collect();
            FinSpace::alexandroff(&FinPoset::new(n, pairs)?)
        }
    };
    Ok((space, pts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use IrrDescriptor::*;

    fn pts(v: &[i64]) -> Vec<Point> {
        v.iter().map(|&p| Point(p)).collect()
    }

    #[test]
    fn johnstone_codec_round_trips() {
        for m in 0..20 {
            for n in 0..20 {
                let p = Johnstone::encode(m, Height::Finite(n));
                assert_eq!(Johnstone::decode(p), (m, Height::Finite(n)));
            }
            assert_eq!(Johnstone::decode(Johnstone::encode(m, Height::Omega)), (m, Height::Omega));
        }
        for z in 0..500 {
            let (m, n) = Johnstone::decode(Point(z));
            let Height::Finite(n) = n else { panic!() };
            assert_eq!(Johnstone::encode(m, Height::Finite(n)), Point(z));
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(NatCofinite.is_irreducible(&Cofinite(vec![])).unwrap());
        assert!(!NatAntichain.is_irreducible(&FiniteSet(pts(&[3, 5]))).unwrap());
        let j = Johnstone { scott: true };
        assert!(j.is_irreducible(&WholeSpace).unwrap());
        assert!(!j.is_directed(&WholeSpace).unwrap());
        assert_eq!(j.sup(&WholeSpace).unwrap(), None);
        let ja = Johnstone { scott: false };
        assert!(!ja.is_irreducible(&WholeSpace).unwrap());
        assert_eq!(j.sup(&Column(3)).unwrap(), Some(Johnstone::encode(3, Height::Omega)));
    }

    #[test]
    fn sup_examples() {
        assert_eq!(Omega.sup(&ChainTail(5)).unwrap(), None);
        assert_eq!(OmegaPlusOne.sup(&ChainTail(5)).unwrap(), Some(TOP));
        for s in NAMES.iter().map(|n| lookup(n).unwrap()) {
            assert_eq!(s.sup(&FiniteSet(pts(&[4]))).unwrap(), Some(Point(4)), "{}", s.name());
        }
    }

    #[test]
    fn si_open_examples() {
        assert!(Omega.is_si_open(&OpenForm::UpFrom(3)).unwrap());
        assert!(NatCofinite.is_si_open(&OpenForm::Cofinite(pts(&[1, 7]))).unwrap());
        assert!(OmegaPlusOne.is_si_open(&OpenForm::UpFrom(4)).unwrap());
        // {ω} ∪ {2}: not open, and ChainTail(3) has supremum ω without meeting it.
        let u = OpenForm::Finite(pts(&[-1, 2]));
        assert!(!OmegaPlusOne.is_si_open(&u).unwrap());
        assert_eq!(OmegaPlusOne.inaccessibility_witness(&u), Some(ChainTail(3)));
        assert_eq!(
            Johnstone { scott: true }.is_si_open(&OpenForm::Whole),
            Err(Error::UnsupportedForm)
        );
    }

    #[test]
    fn inadmissible_descriptors_are_rejected() {
        assert_eq!(Omega.is_irreducible(&Column(0)), Err(Error::UnsupportedDescriptor));
        assert_eq!(Omega.is_irreducible(&FiniteSet(vec![])), Err(Error::UnsupportedDescriptor));
        assert_eq!(Omega.sup(&FiniteSet(pts(&[-3]))), Err(Error::UnsupportedDescriptor));
        assert_eq!(
            Johnstone { scott: true }.is_irreducible(&ChainTail(0)),
            Err(Error::UnsupportedDescriptor)
        );
    }

    #[test]
    fn truncation_examples() {
        let (t, _) = truncate(&Omega, 3).unwrap();
        assert_eq!(t, FinSpace::alexandroff(&FinPoset::chain(3)));
        let (t, _) = truncate(&NatCofinite, 4).unwrap();
        assert_eq!(t, FinSpace::discrete(4));
        for name in NAMES {
            let s = lookup(name).unwrap();
            assert_eq!(truncate(s.as_ref(), 0).unwrap().0, FinSpace::empty());
        }
    }

    #[test]
    fn completions() {
        let c = Omega.strong_completion().unwrap();
        assert_eq!(c.space.id(), CatalogId::OmegaPlusOne);
        assert_eq!(c.new_points.len(), 1);
        let c = NatCofinite.strong_completion().unwrap();
        assert_eq!(c.space.id(), CatalogId::NatCofiniteTop);
        let c = NatAntichain.strong_completion().unwrap();
        assert_eq!(c.space.id(), CatalogId::NatAntichain);
        assert!(c.new_points.is_empty());
        assert!(Johnstone { scott: true }.strong_completion().is_err());
    }
}
