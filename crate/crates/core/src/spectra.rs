//! Graded prime and primary submodules, graded radicals `Gr_M(N)`, membership
//! in the primary spectrum, and the multiplication / cancellation properties.
//!
//! The prime and primary conditions quantify over all homogeneous `r` and `m`.
//! For `m ∉ N` the ideal `{ r : r·m ∈ N }` is the annihilator of `m + N`, which
//! depends only on its additive order, and the achievable orders of `M_g/N_g`
//! are read off its Smith invariants. That turns both definitions into finite
//! checks even when `M` is infinite.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::enumerate::enumerate_graded_submodules;
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::quotient::quotient_module;
use crate::ring::Ideal;
use crate::submodule::GradedSubmodule;

/// Largest conductor tried when refuting the multiplication property on
/// modules too large to enumerate.
pub const WITNESS_CONDUCTOR_BOUND: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trilean<W> {
    True,
    FalseWithWitness(W),
    Unknown(String),
}

impl<W> Trilean<W> {
    pub fn is_true(&self) -> bool {
        matches!(self, Trilean::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Trilean::FalseWithWitness(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Trilean::Unknown(_))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Trilean::True => Some(true),
            Trilean::FalseWithWitness(_) => Some(false),
            Trilean::Unknown(_) => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Trilean::True => "true",
            Trilean::FalseWithWitness(_) => "false",
            Trilean::Unknown(_) => "unknown",
        }
    }
}

/// `N` with `N != (N :_R M)·M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationWitness {
    pub submodule: GradedSubmodule,
    pub colon: Ideal,
    pub product: GradedSubmodule,
}

/// Distinct ideals `I != J` with `IM = JM`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationWitness {
    pub i: Ideal,
    pub j: Ideal,
    pub product: GradedSubmodule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalResult {
    Submodule(GradedSubmodule),
    /// `Gr_M(N) = M`: no graded prime submodule contains `N`.
    Top,
    Unknown { reason: String, attempted: Vec<&'static str> },
}

impl RadicalResult {
    /// The radical as a submodule, with `Top` resolved to `M`.
    pub fn resolve(&self, m: &GradedModule) -> Option<GradedSubmodule> {
        match self {
            RadicalResult::Submodule(n) => Some(n.clone()),
            RadicalResult::Top => Some(m.whole()),
            RadicalResult::Unknown { .. } => None,
        }
    }
}

fn require_proper(m: &GradedModule, n: &GradedSubmodule) -> Result<()> {
    m.check(n)?;
    if !m.is_proper(n) {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// `true` iff every nonzero homogeneous class of `M/N` has annihilator inside `target`.
fn annihilators_within(m: &GradedModule, n: &GradedSubmodule, target: Ideal) -> bool {
    m.blocks().iter().all(|b| {
        m.quotient_invariants(n, &b.degree).nonzero_orders().into_iter().all(|d| Ideal::new(m.ring(), d).is_subset(target))
    })
}

/// `is_graded_prime(P, M)`.
pub fn is_graded_prime(m: &GradedModule, p: &GradedSubmodule) -> Result<bool> {
    require_proper(m, p)?;
    Ok(annihilators_within(m, p, m.colon(p)))
}

/// `is_graded_primary(Q, M)`.
pub fn is_graded_primary(m: &GradedModule, q: &GradedSubmodule) -> Result<bool> {
    require_proper(m, q)?;
    Ok(annihilators_within(m, q, m.colon(q).radical()))
}

fn intersect_all(m: &GradedModule, subs: impl IntoIterator<Item = GradedSubmodule>) -> Option<GradedSubmodule> {
    subs.into_iter().reduce(|a, b| m.intersect(&a, &b))
}

/// `Gr_M(N)`, trying in order: `N` itself when prime; primes of a finite `M/N`
/// pulled back along the projection; `Gr((N:M))·M` for multiplication modules.
pub fn graded_radical_submodule(m: &GradedModule, n: &GradedSubmodule, bound: u64) -> Result<RadicalResult> {
    graded_radical_with(m, n, bound, &is_multiplication(m, bound))
}

/// [`graded_radical_submodule`] with the multiplication property of `M` supplied by the caller.
pub fn graded_radical_with(
    m: &GradedModule,
    n: &GradedSubmodule,
    bound: u64,
    multiplication: &Trilean<MultiplicationWitness>,
) -> Result<RadicalResult> {
    require_proper(m, n)?;
    let mut attempted = Vec::from(["S1 prime"]);
    if is_graded_prime(m, n)? {
        return Ok(RadicalResult::Submodule(n.clone()));
    }

    let quotient_finite = m.blocks().iter().all(|b| m.quotient_invariants(n, &b.degree).free_rank == 0);
    let mut via_quotient = None;
    if quotient_finite {
        attempted.push("S2 finite quotient");
        let q = quotient_module(m, n)?;
        match enumerate_graded_submodules(q.target(), bound) {
            Ok(subs) => {
                let t = q.target();
                let mut primes = Vec::new();
                for s in subs.iter().filter(|s| t.is_proper(s)) {
                    if is_graded_prime(t, s)? {
                        primes.push(q.preimage(s));
                    }
                }
                via_quotient = Some(match intersect_all(m, primes) {
                    Some(r) => RadicalResult::Submodule(r),
                    None => RadicalResult::Top,
                });
            }
            Err(Error::BoundExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }

    let mut via_multiplication = None;
    if multiplication.is_true() {
        attempted.push("S3 multiplication");
        let r = m.ideal_times_module(m.colon(n).radical());
        via_multiplication = Some(if m.is_proper(&r) { RadicalResult::Submodule(r) } else { RadicalResult::Top });
    }

    match (via_quotient, via_multiplication) {
        (Some(a), Some(b)) => {
            if a != b {
                return Err(Error::StrategyMismatch(alloc::format!("{a:?} vs {b:?}")));
            }
            Ok(a)
        }
        (Some(a), None) | (None, Some(a)) => Ok(a),
        (None, None) => Ok(RadicalResult::Unknown {
            reason: "quotient is infinite or too large and the module is not known to be a multiplication module".into(),
            attempted,
        }),
    }
}

/// `in_primary_spectrum(Q, M)`: `Q` is graded primary and `(Gr_M(Q) : M) = Gr((Q : M))`.
pub fn in_primary_spectrum(m: &GradedModule, q: &GradedSubmodule, bound: u64) -> Result<bool> {
    if !is_graded_primary(m, q)? {
        return Ok(false);
    }
    let rad = match graded_radical_submodule(m, q, bound)? {
        RadicalResult::Unknown { reason, .. } => return Err(Error::RadicalUnknown(reason)),
        r => r.resolve(m).expect("resolved"),
    };
    Ok(m.colon(&rad) == m.colon(q).radical())
}

/// `is_multiplication(M)`.
pub fn is_multiplication(m: &GradedModule, bound: u64) -> Trilean<MultiplicationWitness> {
    let check = |n: &GradedSubmodule| {
        let colon = m.colon(n);
        let product = m.ideal_times_module(colon);
        (product != *n).then(|| MultiplicationWitness { submodule: n.clone(), colon, product })
    };
    if let Ok(subs) = enumerate_graded_submodules(m, bound) {
        return match subs.iter().find_map(check) {
            Some(w) => Trilean::FalseWithWitness(w),
            None => Trilean::True,
        };
    }
    if m.rank() <= 1 {
        // submodules of a cyclic module R·e are d·R·e
        return Trilean::True;
    }
    for i in 0..m.rank() {
        for c in 1..=WITNESS_CONDUCTOR_BOUND {
            let mut v = alloc::vec![0; m.rank()];
            v[i] = c;
            let n = m.span(&[v]).expect("arity");
            if let Some(w) = check(&n) {
                return Trilean::FalseWithWitness(w);
            }
        }
    }
    Trilean::Unknown("no witness among cyclic submodules with bounded conductor".into())
}

/// `is_cancellation(M)`.
pub fn is_cancellation(m: &GradedModule) -> Trilean<CancellationWitness> {
    let ring = m.ring();
    if let Some(ideals) = ring.ideals() {
        let products: Vec<GradedSubmodule> = ideals.iter().map(|&i| m.ideal_times_module(i)).collect();
        for a in 0..ideals.len() {
            for b in a + 1..ideals.len() {
                if products[a] == products[b] {
                    return Trilean::FalseWithWitness(CancellationWitness {
                        i: ideals[a],
                        j: ideals[b],
                        product: products[a].clone(),
                    });
                }
            }
        }
        return Trilean::True;
    }
    if m.has_free_factor() {
        return Trilean::True;
    }
    let l = m.torsion_exponent();
    let (i, j) = (Ideal::new(ring, l), Ideal::new(ring, 2 * l));
    Trilean::FalseWithWitness(CancellationWitness { i, j, product: m.ideal_times_module(i) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointKind {
    Prime,
    PrimarySpectrum,
    Maximal,
    AllGraded,
}

/// Every graded submodule of a finite module with its colon ideal, radical and
/// membership flags, computed once. Radicals here are intersections of the
/// enumerated primes, a second route next to [`graded_radical_submodule`].
#[derive(Clone, Debug)]
pub struct ModuleCatalog {
    module: GradedModule,
    subs: Vec<GradedSubmodule>,
    index: BTreeMap<GradedSubmodule, usize>,
    colon: Vec<Ideal>,
    prime: Vec<bool>,
    primary: Vec<bool>,
    maximal: Vec<bool>,
    /// Index of `Gr_M(N)` (the whole module when no prime contains `N`); `None` for `N = M`.
    radical: Vec<Option<usize>>,
    in_ps: Vec<bool>,
}

impl ModuleCatalog {
    pub fn build(m: &GradedModule, bound: u64) -> Result<Self> {
        let subs = enumerate_graded_submodules(m, bound)?;
        let index: BTreeMap<GradedSubmodule, usize> = subs.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let whole = index[&m.whole()];
        let colon: Vec<Ideal> = subs.iter().map(|s| m.colon(s)).collect();
        let proper: Vec<bool> = (0..subs.len()).map(|i| i != whole).collect();
        let prime: Vec<bool> =
            subs.iter().zip(&proper).map(|(s, &p)| p && is_graded_prime(m, s).expect("proper")).collect();
        let primary: Vec<bool> =
            subs.iter().zip(&proper).map(|(s, &p)| p && is_graded_primary(m, s).expect("proper")).collect();
        let maximal = (0..subs.len())
            .map(|i| {
                proper[i]
                    && (0..subs.len()).all(|j| {
                        j == i || j == whole || !m.contains_submodule(&subs[j], &subs[i]) || subs[i] == subs[j]
                    })
            })
            .collect();
        let primes: Vec<usize> = (0..subs.len()).filter(|&i| prime[i]).collect();
        let radical: Vec<Option<usize>> = (0..subs.len())
            .map(|i| {
                if !proper[i] {
                    return None;
                }
                let containing = primes.iter().filter(|&&p| m.contains_submodule(&subs[p], &subs[i])).map(|&p| subs[p].clone());
                Some(match intersect_all(m, containing) {
                    Some(r) => index[&r],
                    None => whole,
                })
            })
            .collect();
        let in_ps = (0..subs.len())
            .map(|i| primary[i] && colon[radical[i].expect("proper")] == colon[i].radical())
            .collect();
        Ok(ModuleCatalog { module: m.clone(), subs, index, colon, prime, primary, maximal, radical, in_ps })
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn submodules(&self) -> &[GradedSubmodule] {
        &self.subs
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn index_of(&self, n: &GradedSubmodule) -> Option<usize> {
        self.index.get(n).copied()
    }

    pub fn whole_index(&self) -> usize {
        self.index[&self.module.whole()]
    }

    pub fn zero_index(&self) -> usize {
        self.index[&self.module.zero_submodule()]
    }

    pub fn is_proper(&self, i: usize) -> bool {
        i != self.whole_index()
    }

    pub fn colon(&self, i: usize) -> Ideal {
        self.colon[i]
    }

    pub fn is_prime(&self, i: usize) -> bool {
        self.prime[i]
    }

    pub fn is_primary(&self, i: usize) -> bool {
        self.primary[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn in_primary_spectrum(&self, i: usize) -> bool {
        self.in_ps[i]
    }

    /// `Gr_M(N_i)` as a catalog index; `None` for `N_i = M`.
    pub fn radical(&self, i: usize) -> Option<usize> {
        self.radical[i]
    }

    pub fn radical_result(&self, i: usize) -> Option<RadicalResult> {
        let r = self.radical[i]?;
        Some(if r == self.whole_index() { RadicalResult::Top } else { RadicalResult::Submodule(self.subs[r].clone()) })
    }

    pub fn points(&self, kind: PointKind) -> Vec<usize> {
        (0..self.subs.len())
            .filter(|&i| match kind {
                PointKind::Prime => self.prime[i],
                PointKind::PrimarySpectrum => self.in_ps[i],
                PointKind::Maximal => self.maximal[i],
                PointKind::AllGraded => true,
            })
            .collect()
    }
}

/// `enumerate_points(M, kind)`.
pub fn enumerate_points(m: &GradedModule, kind: PointKind, bound: u64) -> Result<Vec<GradedSubmodule>> {
    let cat = ModuleCatalog::build(m, bound)?;
    Ok(cat.points(kind).into_iter().map(|i| cat.subs[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_ENUM_BOUND as B;
    use crate::group::GradingGroup;
    use crate::ring::BaseRing;
    use alloc::vec;

    fn cyclic(ring: i64, n: i64) -> GradedModule {
        GradedModule::from_spec(BaseRing::new(ring).unwrap(), GradingGroup::cyclic(2), &[(n, &[0])]).unwrap()
    }

    fn z() -> GradedModule {
        cyclic(0, 0)
    }

    fn zxz() -> GradedModule {
        GradedModule::from_spec(BaseRing::Z, GradingGroup::cyclic(2), &[(0, &[0]), (0, &[1])]).unwrap()
    }

    #[test]
    fn prime_examples() {
        let m = zxz();
        assert!(is_graded_prime(&m, &m.zero_submodule()).unwrap());
        let z8 = cyclic(8, 8);
        assert!(!is_graded_prime(&z8, &z8.span(&[vec![4]]).unwrap()).unwrap());
        assert!(is_graded_prime(&z8, &z8.span(&[vec![2]]).unwrap()).unwrap());
        assert_eq!(is_graded_prime(&z8, &z8.whole()), Err(Error::NotProper));
    }

    #[test]
    fn primary_examples() {
        let z = z();
        assert!(is_graded_primary(&z, &z.span(&[vec![4]]).unwrap()).unwrap());
        let z6 = cyclic(6, 6);
        assert!(!is_graded_primary(&z6, &z6.zero_submodule()).unwrap());
        let z8 = cyclic(8, 8);
        assert!(is_graded_primary(&z8, &z8.zero_submodule()).unwrap());
    }

    #[test]
    fn radical_examples() {
        let z = z();
        let r = graded_radical_submodule(&z, &z.span(&[vec![4]]).unwrap(), B).unwrap();
        assert_eq!(r, RadicalResult::Submodule(z.span(&[vec![2]]).unwrap()));
        let z8 = cyclic(8, 8);
        let r = graded_radical_submodule(&z8, &z8.zero_submodule(), B).unwrap();
        assert_eq!(r, RadicalResult::Submodule(z8.span(&[vec![2]]).unwrap()));
        let m = zxz();
        let r = graded_radical_submodule(&m, &m.zero_submodule(), B).unwrap();
        assert_eq!(r, RadicalResult::Submodule(m.zero_submodule()));
        let r = graded_radical_submodule(&m, &m.span(&[vec![4, 0]]).unwrap(), B).unwrap();
        assert!(matches!(r, RadicalResult::Unknown { .. }));
    }

    #[test]
    fn primary_spectrum_membership() {
        let z = z();
        let four = z.span(&[vec![4]]).unwrap();
        assert!(in_primary_spectrum(&z, &four, B).unwrap());
        assert!(!is_graded_prime(&z, &four).unwrap());
        let z6 = cyclic(6, 6);
        assert!(!in_primary_spectrum(&z6, &z6.zero_submodule(), B).unwrap());
        let z8 = cyclic(8, 8);
        assert!(in_primary_spectrum(&z8, &z8.span(&[vec![2]]).unwrap(), B).unwrap());
    }

    #[test]
    fn point_enumeration() {
        let z6 = cyclic(6, 6);
        let ps = enumerate_points(&z6, PointKind::PrimarySpectrum, B).unwrap();
        assert_eq!(ps, [z6.span(&[vec![3]]).unwrap(), z6.span(&[vec![2]]).unwrap()]);
        let z8 = cyclic(8, 8);
        assert_eq!(enumerate_points(&z8, PointKind::Prime, B).unwrap(), [z8.span(&[vec![2]]).unwrap()]);
        let ps = enumerate_points(&z8, PointKind::PrimarySpectrum, B).unwrap();
        assert_eq!(ps, [z8.zero_submodule(), z8.span(&[vec![4]]).unwrap(), z8.span(&[vec![2]]).unwrap()]);
        assert_eq!(enumerate_points(&z8, PointKind::Maximal, B).unwrap(), [z8.span(&[vec![2]]).unwrap()]);
        assert_eq!(enumerate_points(&zxz(), PointKind::Prime, B), Err(Error::InfiniteModule));
    }

    #[test]
    fn multiplication_examples() {
        assert!(is_multiplication(&cyclic(6, 6), B).is_true());
        assert!(is_multiplication(&z(), B).is_true());
        let m = zxz();
        match is_multiplication(&m, B) {
            Trilean::FalseWithWitness(w) => {
                assert_eq!(w.colon, BaseRing::Z.zero_ideal());
                assert_eq!(w.product, m.zero_submodule());
                assert_ne!(w.submodule, m.zero_submodule());
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn cancellation_examples() {
        assert!(is_cancellation(&z()).is_true());
        assert!(is_cancellation(&cyclic(6, 6)).is_true());
        match is_cancellation(&cyclic(0, 4)) {
            Trilean::FalseWithWitness(w) => {
                assert_eq!((w.i.generator(), w.j.generator()), (4, 8));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }
}
