//! Varieties, base sets and the finite Zariski topologies on the primary
//! spectrum, the prime spectrum and the spectrum of `Z_m`.
//!
//! Every space here is finite, so a topology is stored as its deduplicated
//! family of closed sets and all analyses are exhaustive over that family.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::arith::{divisors, lcm};
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::ring::{BaseRing, Ideal};
use crate::spectra::{is_multiplication, ModuleCatalog, PointKind, Trilean};
use crate::submodule::GradedSubmodule;

/// A subset of a space's canonical point list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(FixedBitSet);

impl PointSet {
    pub fn empty(n: usize) -> Self {
        PointSet(FixedBitSet::with_capacity(n))
    }

    pub fn full(n: usize) -> Self {
        let mut b = FixedBitSet::with_capacity(n);
        b.insert_range(..);
        PointSet(b)
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(i);
        s
    }

    pub fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in idx {
            s.insert(i);
        }
        s
    }

    /// Size of the ambient space.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn count(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut b = self.0.clone();
        b.union_with(&other.0);
        PointSet(b)
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let mut b = self.0.clone();
        b.intersect_with(&other.0);
        PointSet(b)
    }

    pub fn complement(&self) -> PointSet {
        let mut b = self.0.clone();
        b.toggle_range(..);
        PointSet(b)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    /// Restriction along an index map `positions[i] = Some(j)` into a space of size `n`.
    pub fn restrict(&self, positions: &[Option<usize>], n: usize) -> PointSet {
        PointSet::from_indices(n, self.0.ones().filter_map(|i| positions[i]))
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.count(), self.indices())
    }
}

/// Hochster's characterisation of spectral spaces, each condition computed on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterConditions {
    pub t0: bool,
    pub quasi_compact: bool,
    /// Quasi-compact opens are closed under finite intersection and form a base.
    pub compact_open_base: bool,
    /// Every irreducible closed set has exactly one generic point.
    pub sober: bool,
}

impl HochsterConditions {
    pub fn spectral(&self) -> bool {
        self.t0 && self.quasi_compact && self.compact_open_base && self.sober
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub set: PointSet,
    pub generic_points: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyReport {
    pub points: usize,
    pub connected: bool,
    pub irreducible: bool,
    pub t0: bool,
    pub t1: bool,
    pub sober: bool,
    pub quasi_compact: bool,
    pub spectral: bool,
    pub hochster: HochsterConditions,
    pub trivial_topology: bool,
    pub components: Vec<Component>,
}

/// A topology on `{0, …, n-1}` given by its closed sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    n: usize,
    /// Sorted by (size, members), deduplicated.
    closed: Vec<PointSet>,
}

impl FiniteTopology {
    pub fn from_closed(n: usize, family: impl IntoIterator<Item = PointSet>) -> Self {
        let mut closed: Vec<PointSet> = family.into_iter().collect();
        closed.sort_by_cached_key(PointSet::sort_key);
        closed.dedup();
        FiniteTopology { n, closed }
    }

    /// The topology generated by `base` as a base of open sets.
    pub fn from_open_base(n: usize, base: &[PointSet]) -> Self {
        let mut opens: Vec<PointSet> = alloc::vec![PointSet::empty(n)];
        for b in base {
            let fresh: Vec<PointSet> = opens.iter().map(|u| u.union(b)).collect();
            opens.extend(fresh);
            opens.sort_by_cached_key(PointSet::sort_key);
            opens.dedup();
        }
        Self::from_closed(n, opens.iter().map(PointSet::complement))
    }

    pub fn n_points(&self) -> usize {
        self.n
    }

    pub fn closed_sets(&self) -> &[PointSet] {
        &self.closed
    }

    pub fn open_sets(&self) -> Vec<PointSet> {
        let mut opens: Vec<PointSet> = self.closed.iter().map(PointSet::complement).collect();
        opens.sort_by_cached_key(PointSet::sort_key);
        opens
    }

    pub fn is_closed(&self, y: &PointSet) -> bool {
        self.closed.binary_search_by_key(&y.sort_key(), PointSet::sort_key).is_ok()
    }

    pub fn is_open(&self, y: &PointSet) -> bool {
        self.is_closed(&y.complement())
    }

    /// `∅` and the full set are closed, and the family is closed under pairwise `∪` and `∩`.
    pub fn satisfies_axioms(&self) -> bool {
        let n = self.n;
        self.is_closed(&PointSet::empty(n))
            && self.is_closed(&PointSet::full(n))
            && self.closed.iter().all(|a| {
                self.closed.iter().all(|b| self.is_closed(&a.union(b)) && self.is_closed(&a.intersection(b)))
            })
    }

    /// Smallest closed superset.
    pub fn closure(&self, y: &PointSet) -> PointSet {
        self.closed.iter().filter(|c| y.is_subset(c)).fold(PointSet::full(self.n), |acc, c| acc.intersection(c))
    }

    pub fn point_closure(&self, i: usize) -> PointSet {
        self.closure(&PointSet::singleton(self.n, i))
    }

    /// Non-empty and not covered by two closed sets unless one of them already covers it.
    pub fn is_irreducible(&self, y: &PointSet) -> bool {
        if y.is_empty() {
            return false;
        }
        let traces: Vec<PointSet> = self.closed.iter().map(|c| c.intersection(y)).filter(|t| t != y).collect();
        traces.iter().all(|a| traces.iter().all(|b| &a.union(b) != y))
    }

    pub fn irreducible_closed_sets(&self) -> Vec<PointSet> {
        self.closed.iter().filter(|c| self.is_irreducible(c)).cloned().collect()
    }

    /// Maximal irreducible closed sets.
    pub fn components(&self) -> Vec<PointSet> {
        let irr = self.irreducible_closed_sets();
        irr.iter().filter(|c| !irr.iter().any(|d| d != *c && c.is_subset(d))).cloned().collect()
    }

    pub fn generic_points(&self, c: &PointSet) -> Vec<usize> {
        c.indices().into_iter().filter(|&i| &self.point_closure(i) == c).collect()
    }

    /// No clopen set besides `∅` and the whole space. The empty space counts as connected.
    pub fn is_connected(&self) -> bool {
        self.closed.iter().all(|c| c.is_empty() || c.is_full() || !self.is_open(c))
    }

    pub fn is_t0(&self) -> bool {
        let closures: Vec<PointSet> = (0..self.n).map(|i| self.point_closure(i)).collect();
        (0..self.n).all(|i| (i + 1..self.n).all(|j| closures[i] != closures[j]))
    }

    pub fn is_t1(&self) -> bool {
        (0..self.n).all(|i| self.is_closed(&PointSet::singleton(self.n, i)))
    }

    pub fn is_sober(&self) -> bool {
        self.irreducible_closed_sets().iter().all(|c| self.generic_points(c).len() == 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.closed.iter().all(|c| c.is_empty() || c.is_full())
    }

    /// `u` is a union of members of `base` lying inside it, hence covered by
    /// finitely many of them.
    pub fn is_compact_open(&self, u: &PointSet, base: &[PointSet]) -> bool {
        let cover = base.iter().filter(|b| b.is_subset(u)).fold(PointSet::empty(self.n), |acc, b| acc.union(b));
        &cover == u
    }

    /// Every cover of the space by `base` opens has a finite subcover; `base`
    /// is finite, so this reduces to the space being covered at all.
    pub fn is_quasi_compact(&self, base: &[PointSet]) -> bool {
        self.is_compact_open(&PointSet::full(self.n), base)
    }

    /// `base` consists of open sets and every open set is a union of base members.
    pub fn is_base(&self, base: &[PointSet]) -> bool {
        base.iter().all(|b| self.is_open(b)) && self.open_sets().iter().all(|u| self.is_compact_open(u, base))
    }

    pub fn hochster(&self, base: &[PointSet]) -> HochsterConditions {
        let compact: Vec<PointSet> =
            self.open_sets().into_iter().filter(|u| self.is_compact_open(u, base)).collect();
        let closed_under_meet = compact.iter().all(|a| compact.iter().all(|b| compact.contains(&a.intersection(b))));
        let is_base = self.open_sets().iter().all(|u| self.is_compact_open(u, &compact));
        HochsterConditions {
            t0: self.is_t0(),
            quasi_compact: self.is_quasi_compact(base),
            compact_open_base: closed_under_meet && is_base,
            sober: self.is_sober(),
        }
    }

    pub fn report(&self, base: &[PointSet]) -> TopologyReport {
        let hochster = self.hochster(base);
        TopologyReport {
            points: self.n,
            connected: self.is_connected(),
            irreducible: self.is_irreducible(&PointSet::full(self.n)),
            t0: hochster.t0,
            t1: self.is_t1(),
            sober: hochster.sober,
            quasi_compact: hochster.quasi_compact,
            spectral: hochster.spectral(),
            trivial_topology: self.is_trivial(),
            components: self
                .components()
                .into_iter()
                .map(|set| Component { generic_points: self.generic_points(&set), set })
                .collect(),
            hochster,
        }
    }

    /// Pairs `(i, j)`, `i != j`, with `j ∈ Cl({i})`.
    pub fn specialization_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let c = self.point_closure(i);
            out.extend(c.indices().into_iter().filter(|&j| j != i).map(|j| (i, j)));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceKind {
    PrimarySpectrum,
    PrimeSpectrum,
    RingSpectrum,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::PrimarySpectrum => "primary_spectrum",
            SpaceKind::PrimeSpectrum => "prime_spectrum",
            SpaceKind::RingSpectrum => "ring_spectrum",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarietyKind {
    /// `ν(N) = { Q : (N:M) ⊆ (Gr_M(Q):M) }`
    Nu,
    /// `ν*(N) = { Q : N ⊆ Gr_M(Q) }`
    NuStar,
    /// `V(N) = { P : (N:M) ⊆ (P:M) }`
    V,
    /// `V*(N) = { P : N ⊆ P }`
    VStar,
}

impl VarietyKind {
    pub fn name(self) -> &'static str {
        match self {
            VarietyKind::Nu => "nu",
            VarietyKind::NuStar => "nu_star",
            VarietyKind::V => "V",
            VarietyKind::VStar => "V_star",
        }
    }

    fn space(self) -> SpaceKind {
        match self {
            VarietyKind::Nu | VarietyKind::NuStar => SpaceKind::PrimarySpectrum,
            VarietyKind::V | VarietyKind::VStar => SpaceKind::PrimeSpectrum,
        }
    }
}

/// Representatives `r` whose base sets `S_r` exhaust all base sets: `0`, `1`
/// and the divisors of the lcm of the torsion orders and the ring modulus.
pub fn base_representatives(m: &GradedModule) -> Vec<i64> {
    let mut delta = m.torsion_exponent();
    if m.ring().is_finite() {
        delta = lcm(delta, m.ring().modulus());
    }
    let mut reps = alloc::vec![0, 1];
    reps.extend(divisors(delta).into_iter().filter(|&d| d > 1));
    reps
}

/// `𝒫𝒮_G(M)` or `Spec_G(M)` with its Zariski topology.
#[derive(Clone, Debug)]
pub struct ModuleSpace<'a> {
    cat: &'a ModuleCatalog,
    kind: SpaceKind,
    /// Catalog indices of the points, in canonical order.
    points: Vec<usize>,
    /// Position in `points` of each catalog index.
    position: Vec<Option<usize>>,
    /// Catalog index of `Gr_M(Q)` per point.
    radicals: Vec<usize>,
    /// `(Gr_M(Q) : M)` per point.
    radical_colons: Vec<Ideal>,
    topology: FiniteTopology,
    /// One `N` per closed set (in topology order) with variety equal to it.
    witnesses: Vec<usize>,
    /// `(r, S_r)` for the first representative of each distinct base set.
    base: Vec<(i64, PointSet)>,
}

impl<'a> ModuleSpace<'a> {
    pub fn build(cat: &'a ModuleCatalog, kind: SpaceKind) -> Result<Self> {
        let point_kind = match kind {
            SpaceKind::PrimarySpectrum => PointKind::PrimarySpectrum,
            SpaceKind::PrimeSpectrum => PointKind::Prime,
            SpaceKind::RingSpectrum => return Err(Error::SpaceMismatch { kind: "module", space: kind.name() }),
        };
        let points = cat.points(point_kind);
        let mut position = alloc::vec![None; cat.len()];
        for (p, &i) in points.iter().enumerate() {
            position[i] = Some(p);
        }
        let radicals: Vec<usize> = points.iter().map(|&i| cat.radical(i).expect("points are proper")).collect();
        let radical_colons = radicals.iter().map(|&r| cat.colon(r)).collect();
        let mut space = ModuleSpace {
            cat,
            kind,
            points,
            position,
            radicals,
            radical_colons,
            topology: FiniteTopology::from_closed(0, []),
            witnesses: Vec::new(),
            base: Vec::new(),
        };
        let closed_kind = if kind == SpaceKind::PrimarySpectrum { VarietyKind::Nu } else { VarietyKind::V };
        let mut first: BTreeMap<PointSet, usize> = BTreeMap::new();
        for n in 0..cat.len() {
            first.entry(space.variety_at(n, closed_kind)).or_insert(n);
        }
        space.topology = FiniteTopology::from_closed(space.points.len(), first.keys().cloned());
        space.witnesses = space.topology.closed_sets().iter().map(|c| first[c]).collect();
        let mut seen = BTreeMap::new();
        for r in base_representatives(cat.module()) {
            let s = space.base_open(r);
            if !seen.contains_key(&s) {
                seen.insert(s.clone(), r);
                space.base.push((r, s));
            }
        }
        Ok(space)
    }

    pub fn catalog(&self) -> &'a ModuleCatalog {
        self.cat
    }

    pub fn module(&self) -> &'a GradedModule {
        self.cat.module()
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Catalog indices of the points.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn point(&self, p: usize) -> &'a GradedSubmodule {
        &self.cat.submodules()[self.points[p]]
    }

    /// Position of catalog index `i` among the points.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.position[i]
    }

    /// Index map from catalog indices to positions, for [`PointSet::restrict`].
    pub fn positions(&self) -> &[Option<usize>] {
        &self.position
    }

    pub fn radical_of_point(&self, p: usize) -> usize {
        self.radicals[p]
    }

    pub fn radical_colon(&self, p: usize) -> Ideal {
        self.radical_colons[p]
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn witnesses(&self) -> &[usize] {
        &self.witnesses
    }

    pub fn base(&self) -> &[(i64, PointSet)] {
        &self.base
    }

    pub fn base_sets(&self) -> Vec<PointSet> {
        self.base.iter().map(|(_, s)| s.clone()).collect()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.len())
    }

    /// Variety of the catalog submodule `n`.
    pub fn variety_at(&self, n: usize, kind: VarietyKind) -> PointSet {
        let m = self.cat.module();
        let sub = &self.cat.submodules()[n];
        let colon = self.cat.colon(n);
        let members = (0..self.len()).filter(|&p| match kind {
            VarietyKind::Nu | VarietyKind::V => colon.is_subset(self.radical_colons[p]),
            VarietyKind::NuStar | VarietyKind::VStar => {
                m.contains_submodule(&self.cat.submodules()[self.radicals[p]], sub)
            }
        });
        PointSet::from_indices(self.len(), members)
    }

    /// `variety(N, kind)`.
    pub fn variety(&self, n: &GradedSubmodule, kind: VarietyKind) -> Result<PointSet> {
        if kind.space() != self.kind {
            return Err(Error::SpaceMismatch { kind: kind.name(), space: self.kind.name() });
        }
        let i = self.cat.index_of(n).ok_or(Error::ModuleMismatch)?;
        Ok(self.variety_at(i, kind))
    }

    /// The closed-set variety `ν` (primary spectrum) or `V` (prime spectrum).
    pub fn closed_variety(&self, n: usize) -> PointSet {
        self.variety_at(n, if self.kind == SpaceKind::PrimarySpectrum { VarietyKind::Nu } else { VarietyKind::V })
    }

    /// `S_r`: the complement of the closed variety of `rM`.
    pub fn base_open(&self, r: i64) -> PointSet {
        let m = self.cat.module();
        let rm = m.ideal_times_module(Ideal::new(m.ring(), r));
        self.closed_variety(self.cat.index_of(&rm).expect("rM is graded")).complement()
    }

    /// `η(Y)` as a catalog index; `η(∅) = M`.
    pub fn eta(&self, y: &PointSet) -> usize {
        let m = self.cat.module();
        let meet = y.indices().into_iter().fold(m.whole(), |acc, p| {
            m.intersect(&acc, &self.cat.submodules()[self.radicals[p]])
        });
        self.cat.index_of(&meet).expect("intersections are graded")
    }

    /// `Cl(Y)` computed as the variety of `η(Y)`.
    pub fn closure_via_eta(&self, y: &PointSet) -> PointSet {
        self.closed_variety(self.eta(y))
    }

    pub fn analyze(&self) -> TopologyReport {
        self.topology.report(&self.base_sets())
    }
}

/// `Spec(Z_m)` with its Zariski topology.
#[derive(Clone, Debug)]
pub struct RingSpace {
    ring: BaseRing,
    points: Vec<Ideal>,
    topology: FiniteTopology,
    witnesses: Vec<Ideal>,
    base: Vec<(i64, PointSet)>,
}

impl RingSpace {
    pub fn build(ring: BaseRing) -> Result<Self> {
        let points = ring.spectrum().ok_or(Error::RingNotMaterializable)?;
        let ideals = ring.ideals().expect("finite ring");
        let mut space = RingSpace { ring, points, topology: FiniteTopology::from_closed(0, []), witnesses: Vec::new(), base: Vec::new() };
        let mut first: BTreeMap<PointSet, Ideal> = BTreeMap::new();
        for &i in &ideals {
            first.entry(space.variety(i)).or_insert(i);
        }
        space.topology = FiniteTopology::from_closed(space.points.len(), first.keys().cloned());
        space.witnesses = space.topology.closed_sets().iter().map(|c| first[c]).collect();
        let mut seen = BTreeMap::new();
        for r in 0..ring.modulus().max(1) {
            let d = space.basic_open(r);
            if !seen.contains_key(&d) {
                seen.insert(d.clone(), r);
                space.base.push((r, d));
            }
        }
        Ok(space)
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Ideal] {
        &self.points
    }

    pub fn position(&self, p: Ideal) -> Option<usize> {
        self.points.iter().position(|&q| q == p)
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn witnesses(&self) -> &[Ideal] {
        &self.witnesses
    }

    pub fn base(&self) -> &[(i64, PointSet)] {
        &self.base
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `ring_variety(I)`: primes containing `I`.
    pub fn variety(&self, i: Ideal) -> PointSet {
        PointSet::from_indices(self.len(), (0..self.len()).filter(|&k| i.is_subset(self.points[k])))
    }

    /// `ring_basic_open(r)`: `D_r`.
    pub fn basic_open(&self, r: i64) -> PointSet {
        self.variety(Ideal::new(self.ring, r)).complement()
    }

    /// `γ(Z)`: intersection of the member primes, `(1)` for `Z = ∅`.
    pub fn gamma(&self, z: &PointSet) -> Ideal {
        z.indices().into_iter().fold(self.ring.unit_ideal(), |acc, k| acc.intersect(self.points[k]))
    }

    pub fn analyze(&self) -> TopologyReport {
        let base: Vec<PointSet> = self.base.iter().map(|(_, s)| s.clone()).collect();
        self.topology.report(&base)
    }
}

/// Pair `(N, N')` with `ν*(N) ∪ ν*(N')` not of the form `ν*(J)`.
pub type UnionWitness = (GradedSubmodule, GradedSubmodule);

/// Whether a family of varieties `{ X(N) }` indexed by the catalog is closed
/// under pairwise union; returns a failing pair of catalog indices.
fn union_failure(varieties: &[PointSet]) -> Option<(usize, usize)> {
    let mut first: BTreeMap<&PointSet, usize> = BTreeMap::new();
    for (n, v) in varieties.iter().enumerate() {
        first.entry(v).or_insert(n);
    }
    let distinct: Vec<(&PointSet, usize)> = first.iter().map(|(v, &n)| (*v, n)).collect();
    for (a, na) in &distinct {
        for (b, nb) in &distinct {
            if !first.contains_key(&a.union(b)) {
                return Some((*na, *nb));
            }
        }
    }
    None
}

/// Exact primary `G`-top test on a catalog: `Ω*(M)` closed under finite union.
pub fn primary_g_top_failure(cat: &ModuleCatalog) -> Option<(usize, usize)> {
    let space = ModuleSpace::build(cat, SpaceKind::PrimarySpectrum).expect("module space");
    let vars: Vec<PointSet> = (0..cat.len()).map(|n| space.variety_at(n, VarietyKind::NuStar)).collect();
    union_failure(&vars)
}

/// Exact `G`-top test: `{ V*(N) }` closed under finite union.
pub fn g_top_failure(cat: &ModuleCatalog) -> Option<(usize, usize)> {
    let space = ModuleSpace::build(cat, SpaceKind::PrimeSpectrum).expect("module space");
    let vars: Vec<PointSet> = (0..cat.len()).map(|n| space.variety_at(n, VarietyKind::VStar)).collect();
    union_failure(&vars)
}

/// `is_primary_G_top(M)`.
pub fn is_primary_g_top(m: &GradedModule, bound: u64) -> Trilean<UnionWitness> {
    if let Ok(cat) = ModuleCatalog::build(m, bound) {
        return match primary_g_top_failure(&cat) {
            None => Trilean::True,
            Some((a, b)) => Trilean::FalseWithWitness((cat.submodules()[a].clone(), cat.submodules()[b].clone())),
        };
    }
    match is_multiplication(m, bound) {
        Trilean::True => Trilean::True,
        _ => Trilean::Unknown("module too large to enumerate and not known to be a multiplication module".into()),
    }
}
