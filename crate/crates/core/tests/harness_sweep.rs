use gps_core::harness::{run_checks, HarnessConfig, Status};
use gps_core::{BaseRing, GradedModule, GradingGroup, Model};

fn model(ring: i64, group: GradingGroup, factors: &[(i64, &[i64])]) -> Model {
    Model::new(GradedModule::from_spec(BaseRing::new(ring).unwrap(), group, factors).unwrap())
}

fn assert_no_failures(label: &str, m: &Model) {
    let results = run_checks(m, &[], &HarnessConfig::default(), &mut || 0).unwrap();
    for r in results {
        if let Status::Fail(c) = &r.status {
            panic!("{label}: {} failed: {c:?}", r.id);
        }
    }
}

#[test]
fn cyclic_rings_over_themselves() {
    for n in 2..=36 {
        assert_no_failures(&format!("Z{n}"), &model(n, GradingGroup::cyclic(1), &[(n, &[0])]));
    }
}

#[test]
fn two_factor_modules_over_z() {
    let orders = [2, 3, 4, 8, 9];
    for (i, &p) in orders.iter().enumerate() {
        for &q in &orders[i..] {
            for degrees in [[0, 0], [0, 1]] {
                let m = model(0, GradingGroup::cyclic(2), &[(p, &[degrees[0]]), (q, &[degrees[1]])]);
                assert_no_failures(&format!("Z{p}xZ{q} {degrees:?}"), &m);
            }
        }
    }
}

#[test]
fn graded_fields_and_small_mixed_cases() {
    for p in [2, 3, 5] {
        assert_no_failures(&format!("Z{p}^2"), &model(p, GradingGroup::cyclic(2), &[(p, &[0]), (p, &[1])]));
    }
    assert_no_failures("Z8 over Z", &model(0, GradingGroup::cyclic(1), &[(8, &[0])]));
    assert_no_failures("Z4 over Z8", &model(8, GradingGroup::cyclic(2), &[(4, &[1])]));
}
