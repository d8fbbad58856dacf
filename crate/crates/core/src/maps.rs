//! The reduced ring `R̄ = R/Ann(M)`, the maps `ρ: 𝒫𝒮_G(M) → Spec(R̄)` and
//! `φ: Spec_G(M) → Spec(R̄)`, and the map `π` induced by a graded epimorphism.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::quotient::GradedEpimorphism;
use crate::ring::{BaseRing, Ideal};
use crate::spectra::{graded_radical_submodule, in_primary_spectrum, is_graded_prime, Trilean};
use crate::submodule::GradedSubmodule;
use crate::topology::{ModuleSpace, PointSet, RingSpace, SpaceKind};

/// `R̄ = Z_m` with `(m) = Ann(M)`; over `Z` with `Ann(M) = 0` this is `Z` itself
/// and only pointwise evaluation is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedRing {
    base: BaseRing,
    annihilator: Ideal,
    reduced: BaseRing,
}

impl ReducedRing {
    pub fn of(m: &GradedModule) -> Self {
        let annihilator = m.annihilator();
        ReducedRing { base: m.ring(), annihilator, reduced: BaseRing::quotient(annihilator.generator()) }
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn annihilator(&self) -> Ideal {
        self.annihilator
    }

    pub fn ring(&self) -> BaseRing {
        self.reduced
    }

    pub fn is_lazy(&self) -> bool {
        !self.reduced.is_finite()
    }

    /// `I ↦ Ī` for `I ⊇ Ann(M)`.
    pub fn project(&self, i: Ideal) -> Ideal {
        debug_assert!(self.annihilator.is_subset(i));
        i.reduce_to(self.reduced)
    }

    /// The ideal of `R` containing `Ann(M)` that corresponds to `Ī`.
    pub fn lift(&self, i: Ideal) -> Ideal {
        let g = if i.is_zero() { self.annihilator.generator() } else { i.generator() };
        Ideal::new(self.base, g)
    }

    /// Ideals of `R̄`, for finite `R̄`.
    pub fn ideals(&self) -> Result<Vec<Ideal>> {
        self.reduced.ideals().ok_or(Error::RingNotMaterializable)
    }

    pub fn spectrum(&self) -> Result<RingSpace> {
        RingSpace::build(self.reduced)
    }
}

/// `ρ(Q) = (Gr_M(Q) : M)/Ann(M)`, pointwise.
pub fn rho(m: &GradedModule, q: &GradedSubmodule, bound: u64) -> Result<Ideal> {
    if !in_primary_spectrum(m, q, bound)? {
        return Err(Error::NotAPoint);
    }
    let rad = graded_radical_submodule(m, q, bound)?.resolve(m).expect("radical known for points");
    Ok(ReducedRing::of(m).project(m.colon(&rad)))
}

/// `φ(P) = (P : M)/Ann(M)`, pointwise.
pub fn phi(m: &GradedModule, p: &GradedSubmodule) -> Result<Ideal> {
    if !is_graded_prime(m, p)? {
        return Err(Error::NotAPoint);
    }
    Ok(ReducedRing::of(m).project(m.colon(p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Rho,
    Phi,
}

impl MapKind {
    pub fn name(self) -> &'static str {
        match self {
            MapKind::Rho => "rho",
            MapKind::Phi => "phi",
        }
    }
}

/// Preimage identity `map⁻¹(V^R̄(Ī)) = ν(IM)` (resp. `V(IM)`) for one ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityWitness {
    pub ideal: Ideal,
    pub preimage: PointSet,
    pub variety: PointSet,
}

impl ContinuityWitness {
    pub fn holds(&self) -> bool {
        self.preimage == self.variety
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapAnalysis {
    pub kind: MapKind,
    pub reduced_ring: BaseRing,
    /// Position in the ring spectrum of the image of each point.
    pub images: Vec<usize>,
    /// Witness: two points with the same image.
    pub injective: Trilean<(usize, usize)>,
    /// Witness: a prime of `R̄` outside the image.
    pub surjective: Trilean<Ideal>,
    pub continuity: Vec<ContinuityWitness>,
    /// Images of closed sets are closed and images of open sets are open.
    pub open_closed: Trilean<PointSet>,
    /// When surjective: `map(ν(N)) = V(overline{(N:M)})` and the complement
    /// identity, for every graded `N`. `None` when not surjective.
    pub image_identities: Option<bool>,
    /// `(p, points over p)` for every prime `p` of `R̄`.
    pub fibers: Vec<(Ideal, PointSet)>,
}

impl MapAnalysis {
    pub fn is_continuous(&self) -> bool {
        self.continuity.iter().all(ContinuityWitness::holds)
    }

    pub fn is_bijective(&self) -> bool {
        self.injective.is_true() && self.surjective.is_true()
    }

    /// Bijective, continuous, and open (so the inverse is continuous).
    pub fn is_homeomorphism(&self) -> bool {
        self.is_bijective() && self.is_continuous() && self.open_closed.is_true()
    }

    pub fn max_fiber(&self) -> usize {
        self.fibers.iter().map(|(_, f)| f.count()).max().unwrap_or(0)
    }

    /// Image of a point set, as a subset of the ring spectrum.
    pub fn image_of(&self, y: &PointSet, ring_points: usize) -> PointSet {
        PointSet::from_indices(ring_points, y.indices().into_iter().map(|p| self.images[p]))
    }
}

/// `analyze_map(M, kind)` over a materialised module space (primary spectrum
/// for `ρ`, prime spectrum for `φ`) and the spectrum of `R̄`.
pub fn analyze_map(space: &ModuleSpace<'_>, kind: MapKind) -> Result<MapAnalysis> {
    let expected = match kind {
        MapKind::Rho => SpaceKind::PrimarySpectrum,
        MapKind::Phi => SpaceKind::PrimeSpectrum,
    };
    if space.kind() != expected {
        return Err(Error::SpaceMismatch { kind: kind.name(), space: space.kind().name() });
    }
    let cat = space.catalog();
    let m = cat.module();
    let red = ReducedRing::of(m);
    let ring_space = red.spectrum()?;
    let rn = ring_space.len();

    let mut images = Vec::with_capacity(space.len());
    for p in 0..space.len() {
        let colon = match kind {
            MapKind::Rho => space.radical_colon(p),
            MapKind::Phi => cat.colon(space.points()[p]),
        };
        images.push(ring_space.position(red.project(colon)).ok_or(Error::NotAPoint)?);
    }

    let mut injective = Trilean::True;
    'outer: for a in 0..images.len() {
        for b in a + 1..images.len() {
            if images[a] == images[b] {
                injective = Trilean::FalseWithWitness((a, b));
                break 'outer;
            }
        }
    }
    let surjective = match (0..rn).find(|k| !images.contains(k)) {
        Some(k) => Trilean::FalseWithWitness(ring_space.points()[k]),
        None => Trilean::True,
    };

    let mut continuity = Vec::new();
    for ideal in red.ideals()? {
        let target = ring_space.variety(ideal);
        let preimage = PointSet::from_indices(space.len(), (0..space.len()).filter(|&p| target.contains(images[p])));
        let im = m.ideal_times_module(red.lift(ideal));
        let variety = space.closed_variety(cat.index_of(&im).expect("IM is graded"));
        continuity.push(ContinuityWitness { ideal, preimage, variety });
    }

    let ring_top = ring_space.topology();
    let top = space.topology();
    let bad_closed = top.closed_sets().iter().find(|c| !ring_top.is_closed(&image(&images, c, rn)));
    let bad_open = top.open_sets().into_iter().find(|u| !ring_top.is_open(&image(&images, u, rn)));
    let open_closed = match (bad_closed, bad_open) {
        (None, None) => Trilean::True,
        (Some(c), _) => Trilean::FalseWithWitness(c.clone()),
        (None, Some(u)) => Trilean::FalseWithWitness(u),
    };

    let image_identities = surjective.is_true().then(|| {
        (0..cat.len()).all(|n| {
            let nu = space.closed_variety(n);
            let v = ring_space.variety(red.project(cat.colon(n)));
            image(&images, &nu, rn) == v && image(&images, &nu.complement(), rn) == v.complement()
        })
    });

    let fibers = (0..rn)
        .map(|k| {
            let fiber = PointSet::from_indices(space.len(), (0..space.len()).filter(|&p| images[p] == k));
            (ring_space.points()[k], fiber)
        })
        .collect();

    Ok(MapAnalysis {
        kind,
        reduced_ring: red.ring(),
        images,
        injective,
        surjective,
        continuity,
        open_closed,
        image_identities,
        fibers,
    })
}

fn image(images: &[usize], y: &PointSet, n: usize) -> PointSet {
    PointSet::from_indices(n, y.indices().into_iter().map(|p| images[p]))
}

/// `π: 𝒫𝒮_G(M') → 𝒫𝒮_G(M)`, `π(Q') = f⁻¹(Q')`, for `f: M → M'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    /// Position in `𝒫𝒮_G(M)` of `f⁻¹(Q')`, or `None` if the preimage is not a point.
    pub images: Vec<Option<usize>>,
    pub injective: bool,
    pub surjective: bool,
    /// `π⁻¹(ν(N)) = ν'(Gr((N:M))M')` for every graded `N ≤ M`.
    pub continuity_identity: bool,
    /// Preimages of closed sets are closed, checked directly on the two topologies.
    pub continuous: bool,
    /// `π` is bijective and maps closed sets to closed sets.
    pub homeomorphism: bool,
}

impl InducedMap {
    pub fn well_defined(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }
}

/// `induced_pi(f)` given the primary spectra of the source `M` and the target `M'`.
pub fn induced_pi(f: &GradedEpimorphism, source: &ModuleSpace<'_>, target: &ModuleSpace<'_>) -> Result<InducedMap> {
    if source.kind() != SpaceKind::PrimarySpectrum || target.kind() != SpaceKind::PrimarySpectrum {
        return Err(Error::SpaceMismatch { kind: "pi", space: SpaceKind::PrimeSpectrum.name() });
    }
    if f.source() != source.module() || f.target() != target.module() {
        return Err(Error::ModuleMismatch);
    }
    let (cat, cat_t) = (source.catalog(), target.catalog());
    let (m, mt) = (source.module(), target.module());
    let images: Vec<Option<usize>> = (0..target.len())
        .map(|q| cat.index_of(&f.preimage(target.point(q))).and_then(|i| source.position(i)))
        .collect();
    let defined: Vec<usize> = images.iter().flatten().copied().collect();
    let injective = images.iter().all(Option::is_some) && {
        let mut sorted = defined.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == defined.len()
    };
    let surjective = (0..source.len()).all(|p| defined.contains(&p));
    let preimage_of = |y: &PointSet| {
        PointSet::from_indices(target.len(), (0..target.len()).filter(|&q| images[q].is_some_and(|p| y.contains(p))))
    };

    let continuity_identity = (0..cat.len()).all(|n| {
        let lhs = preimage_of(&source.closed_variety(n));
        let j = mt.ideal_times_module(m.colon(&cat.submodules()[n]).radical().reduce_to(mt.ring()));
        let rhs = target.closed_variety(cat_t.index_of(&j).expect("IM' is graded"));
        lhs == rhs
    });
    let continuous = source.topology().closed_sets().iter().all(|c| target.topology().is_closed(&preimage_of(c)));
    let closed_map = target.topology().closed_sets().iter().all(|c| {
        let img = PointSet::from_indices(source.len(), c.indices().into_iter().filter_map(|q| images[q]));
        source.topology().is_closed(&img)
    });
    Ok(InducedMap {
        homeomorphism: injective && surjective && continuous && closed_map,
        images,
        injective,
        surjective,
        continuity_identity,
        continuous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_ENUM_BOUND as B;
    use crate::group::GradingGroup;
    use crate::quotient::quotient_module;
    use crate::spectra::ModuleCatalog;
    use alloc::vec;

    fn cyclic(ring: i64, n: i64) -> GradedModule {
        GradedModule::from_spec(BaseRing::new(ring).unwrap(), GradingGroup::cyclic(2), &[(n, &[0])]).unwrap()
    }

    #[test]
    fn pointwise_rho_phi() {
        let z6 = cyclic(6, 6);
        assert_eq!(rho(&z6, &z6.span(&[vec![2]]).unwrap(), B).unwrap().generator(), 2);
        assert_eq!(phi(&z6, &z6.span(&[vec![3]]).unwrap()).unwrap().generator(), 3);
        let z8 = cyclic(8, 8);
        assert_eq!(rho(&z8, &z8.span(&[vec![4]]).unwrap(), B).unwrap().generator(), 2);
        let z = cyclic(0, 0);
        let r = rho(&z, &z.span(&[vec![4]]).unwrap(), B).unwrap();
        assert_eq!((r.ring(), r.generator()), (BaseRing::Z, 2));
        assert!(ReducedRing::of(&z).is_lazy());
    }

    #[test]
    fn z6_rho_is_homeomorphism() {
        let m = cyclic(6, 6);
        let cat = ModuleCatalog::build(&m, B).unwrap();
        let s = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum).unwrap();
        let a = analyze_map(&s, MapKind::Rho).unwrap();
        assert!(a.is_bijective() && a.is_continuous() && a.is_homeomorphism());
        assert_eq!(a.image_identities, Some(true));
        assert_eq!(a.max_fiber(), 1);
    }

    #[test]
    fn z8_rho_collapses() {
        let m = cyclic(8, 8);
        let cat = ModuleCatalog::build(&m, B).unwrap();
        let s = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum).unwrap();
        let a = analyze_map(&s, MapKind::Rho).unwrap();
        assert!(a.surjective.is_true() && a.injective.is_false());
        assert_eq!(a.fibers.len(), 1);
        assert_eq!(a.fibers[0].1.count(), 3);
        assert!(a.is_continuous());
        assert!(analyze_map(&s, MapKind::Phi).is_err());
    }

    #[test]
    fn pi_from_projection() {
        let m = cyclic(8, 8);
        let q = quotient_module(&m, &m.span(&[vec![4]]).unwrap()).unwrap();
        let target = q.target().clone();
        let f = GradedEpimorphism::Projection(q);
        let (cat, cat_t) = (ModuleCatalog::build(&m, B).unwrap(), ModuleCatalog::build(&target, B).unwrap());
        let s = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum).unwrap();
        let t = ModuleSpace::build(&cat_t, SpaceKind::PrimarySpectrum).unwrap();
        let pi = induced_pi(&f, &s, &t).unwrap();
        assert!(pi.well_defined() && pi.injective && pi.continuity_identity && pi.continuous);
        let zero = t.position(cat_t.zero_index()).unwrap();
        assert_eq!(s.point(pi.images[zero].unwrap()), &m.span(&[vec![4]]).unwrap());
    }
}
