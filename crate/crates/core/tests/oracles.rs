mod support;

use std::collections::BTreeSet;

use gps_core::spectra::{graded_radical_submodule, ModuleCatalog, PointKind, RadicalResult};
use gps_core::submodule::quotient_invariants;
use gps_core::{
    enumerate_graded_submodules, is_graded_primary, is_graded_prime, quotient_module, BaseRing, GradedModule,
    GradingGroup, DEFAULT_ENUM_BOUND,
};
use proptest::prelude::*;
use support::oracle::{key, Oracle};

fn module(ring: i64, group: GradingGroup, factors: &[(i64, &[i64])]) -> GradedModule {
    GradedModule::from_spec(BaseRing::new(ring).unwrap(), group, factors).unwrap()
}

fn small_models() -> Vec<GradedModule> {
    let z2 = GradingGroup::cyclic(2);
    let mut out: Vec<GradedModule> = (2..=24).map(|n| module(n, z2.clone(), &[(n, &[0])])).collect();
    out.push(module(0, z2.clone(), &[(4, &[0]), (2, &[0])]));
    out.push(module(0, z2.clone(), &[(4, &[0]), (6, &[1])]));
    out.push(module(0, z2.clone(), &[(3, &[0]), (9, &[0])]));
    out.push(module(12, z2.clone(), &[(4, &[1]), (6, &[0])]));
    out.push(module(0, z2.clone(), &[(8, &[0])]));
    out.push(module(2, GradingGroup::new(vec![2, 2]).unwrap(), &[(2, &[0, 0]), (2, &[1, 0]), (2, &[1, 0])]));
    out
}

/// Exhaustive agreement of the structural routines with the element-set oracle.
fn compare(m: &GradedModule) {
    let o = Oracle::new(m);
    let cat = ModuleCatalog::build(m, DEFAULT_ENUM_BOUND).unwrap();
    let sets: Vec<_> = cat.submodules().iter().map(|s| o.set_of(m, s)).collect();

    let expected: BTreeSet<_> = o.submodules().iter().map(key).collect();
    let got: BTreeSet<_> = sets.iter().map(key).collect();
    assert_eq!(got.len(), sets.len(), "{m}: duplicate canonical forms");
    assert_eq!(got, expected, "{m}: enumeration");

    let primes: Vec<_> = sets.iter().filter(|s| o.is_prime(s)).cloned().collect();
    for (i, s) in cat.submodules().iter().enumerate() {
        let set = &sets[i];
        let ctx = format!("{m} N={}", m.describe(s));
        for x in o.elements() {
            let e = m.element(x.clone()).unwrap();
            assert_eq!(m.contains_element(s, &e), set.contains(&x), "{ctx}: membership of {x:?}");
        }
        assert_eq!(m.colon(s), o.colon(set), "{ctx}: colon");
        if !o.is_proper(set) {
            continue;
        }
        assert_eq!(is_graded_prime(m, s).unwrap(), o.is_prime(set), "{ctx}: prime");
        assert_eq!(is_graded_primary(m, s).unwrap(), o.is_primary(set), "{ctx}: primary");
        let rad = o.radical(set, &primes);
        assert_eq!(key(&sets[cat.radical(i).unwrap()]), key(&rad), "{ctx}: catalog radical");
        let via_strategies = match graded_radical_submodule(m, s, DEFAULT_ENUM_BOUND).unwrap() {
            RadicalResult::Unknown { reason, .. } => panic!("{ctx}: {reason}"),
            r => r.resolve(m).unwrap(),
        };
        assert_eq!(key(&o.set_of(m, &via_strategies)), key(&rad), "{ctx}: strategy radical");
        assert_eq!(cat.in_primary_spectrum(i), o.in_primary_spectrum(set, &primes), "{ctx}: primary spectrum");

        let q = quotient_module(m, s).unwrap();
        assert_eq!(q.target().cardinality(), Some((o.elements().len() / set.len()) as u128), "{ctx}: |M/N|");
    }
}

#[test]
fn structure_agrees_with_element_oracle() {
    for m in small_models() {
        compare(&m);
    }
}

#[test]
fn spectra_nest() {
    for m in small_models() {
        let cat = ModuleCatalog::build(&m, DEFAULT_ENUM_BOUND).unwrap();
        let max: BTreeSet<_> = cat.points(PointKind::Maximal).into_iter().collect();
        let spec: BTreeSet<_> = cat.points(PointKind::Prime).into_iter().collect();
        let ps: BTreeSet<_> = cat.points(PointKind::PrimarySpectrum).into_iter().collect();
        assert!(max.is_subset(&spec), "{m}: Max in Spec");
        assert!(spec.is_subset(&ps), "{m}: Spec in primary spectrum");
    }
}

#[test]
fn quotient_invariants_multiply_out() {
    for m in small_models() {
        for s in enumerate_graded_submodules(&m, DEFAULT_ENUM_BOUND).unwrap() {
            let total: i64 = m
                .blocks()
                .iter()
                .map(|b| quotient_invariants(&m, &s, &b.degree).torsion.iter().product::<i64>())
                .product();
            let o = Oracle::new(&m);
            assert_eq!(total as usize, o.elements().len() / o.set_of(&m, &s).len(), "{m}");
        }
    }
}

fn arb_module() -> impl Strategy<Value = GradedModule> {
    let orders = prop::sample::select(vec![2i64, 3, 4, 6, 8, 9]);
    (prop::sample::select(vec![0i64, 24, 36]), prop::collection::vec((orders, 0i64..2), 1..=3)).prop_filter_map(
        "factor orders must divide the modulus",
        |(ring, fs)| {
            let spec: Vec<(i64, [i64; 1])> = fs.iter().map(|&(o, d)| (o, [d])).collect();
            let refs: Vec<(i64, &[i64])> = spec.iter().map(|(o, d)| (*o, &d[..])).collect();
            GradedModule::from_spec(BaseRing::new(ring).ok()?, GradingGroup::cyclic(2), &refs).ok()
        },
    )
}

fn arb_gens(rank: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-20i64..20, rank), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_ignores_generator_order((m, gens) in arb_module().prop_flat_map(|m| { let r = m.rank(); (Just(m), arb_gens(r)) })) {
        let a = m.span(&gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let doubled: Vec<Vec<i64>> = gens.iter().map(|g| g.iter().map(|x| 3 * x).collect()).chain(gens.clone()).collect();
        prop_assert_eq!(&a, &m.span(&rev).unwrap());
        prop_assert_eq!(&a, &m.span(&doubled).unwrap());
        let o = Oracle::new(&m);
        let homogeneous_parts: Vec<Vec<i64>> = gens
            .iter()
            .flat_map(|g| m.homogeneous_components(&m.element(g.clone()).unwrap()))
            .map(|(_, e)| e.coords().to_vec())
            .collect();
        prop_assert_eq!(key(&o.set_of(&m, &a)), key(&o.span(&homogeneous_parts)));
    }

    #[test]
    fn lattice_operations_match_sets((m, g1, g2) in arb_module().prop_flat_map(|m| { let r = m.rank(); (Just(m), arb_gens(r), arb_gens(r)) })) {
        let o = Oracle::new(&m);
        let (a, b) = (m.span(&g1).unwrap(), m.span(&g2).unwrap());
        let (sa, sb) = (o.set_of(&m, &a), o.set_of(&m, &b));
        let meet: BTreeSet<_> = sa.intersection(&sb).cloned().collect();
        prop_assert_eq!(key(&o.set_of(&m, &m.intersect(&a, &b))), meet);
        let sum: Vec<Vec<i64>> = sa.iter().chain(sb.iter()).cloned().collect();
        prop_assert_eq!(key(&o.set_of(&m, &m.sum(&a, &b))), key(&o.span(&sum)));
        prop_assert_eq!(m.contains_submodule(&b, &a), sa.is_subset(&sb));
        prop_assert_eq!(m.colon(&a), o.colon(&sa));
    }

    #[test]
    fn primality_matches_oracle((m, gens) in arb_module().prop_flat_map(|m| { let r = m.rank(); (Just(m), arb_gens(r)) })) {
        let o = Oracle::new(&m);
        let n = m.span(&gens).unwrap();
        let set = o.set_of(&m, &n);
        prop_assume!(o.is_proper(&set));
        prop_assert_eq!(is_graded_prime(&m, &n).unwrap(), o.is_prime(&set));
        prop_assert_eq!(is_graded_primary(&m, &n).unwrap(), o.is_primary(&set));
        prop_assert_eq!(m.colon(&n).radical(), o.radical_colon(&set));
    }
}
