mod common;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use common::*;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use toric::classgroup::{is_cartier, is_q_cartier, ClassGroup};
use toric::cohomology::{antinef_vanishing_check, section_polytope_dimension, serre_duality_check, CohomologyEngine, Dim};
use toric::discriminantal::{chamber_equality_test, NefCone};
use toric::fan::Fan;
use toric::frobenius::{is_zero_essential, window_classes, VanishingCores, VanishingVerdict};
use toric::homology::Field;
use toric::lattice::GroupElement;
use toric::mcm::{enumerate_mcm, regular_triangulations, McmTester, PushforwardSet};

const COMPLETE: [&str; 5] = ["P1", "P2", "F3", "WPS235", "SURF8"];

struct Ctx {
    fan: Fan,
    group: ClassGroup,
    engine: CohomologyEngine,
    cores: VanishingCores,
}

fn ctx(name: &str) -> &'static Ctx {
    static CACHE: OnceLock<Mutex<HashMap<String, &'static Ctx>>> = OnceLock::new();
    let mut m = CACHE.get_or_init(Default::default).lock().unwrap();
    m.entry(name.to_string()).or_insert_with(|| {
        let (fan, group) = load(name);
        let engine = CohomologyEngine::global(&fan, Field::Rational).unwrap();
        let cores = VanishingCores::new(&fan, &group).unwrap();
        Box::leak(Box::new(Ctx { fan, group, engine, cores }))
    })
}

fn class_of(group: &ClassGroup, coords: &[i64]) -> Vec<BigInt> {
    let free: Vec<BigInt> = coords.iter().take(group.free_rank()).map(|&x| BigInt::from(x)).collect();
    group.lift(&group.from_free(&free))
}

fn complete_class() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..COMPLETE.len(), prop::collection::vec(-6i64..=6, 6))
}

/// `|P_D ∩ M|` by scanning a box.
fn polytope_points(fan: &Fan, c: &[BigInt], radius: i64) -> u64 {
    let c: Vec<i64> = c.iter().map(|x| i64::try_from(x).unwrap()).collect();
    let d = fan.dim();
    let mut m = vec![-radius; d];
    let mut count = 0;
    loop {
        if fan.rays().iter().zip(&c).all(|(r, ci)| r.iter().zip(&m).map(|(a, b)| a * b).sum::<i64>() >= -ci) {
            count += 1;
        }
        let mut k = 0;
        while k < d {
            m[k] += 1;
            if m[k] <= radius {
                break;
            }
            m[k] = -radius;
            k += 1;
        }
        if k == d {
            return count;
        }
    }
}

fn rational(group: &ClassGroup, c: &[BigInt]) -> Vec<num_rational::BigRational> {
    group.rational_of(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serre_duality((k, coords) in complete_class()) {
        let x = ctx(COMPLETE[k]);
        let c = class_of(&x.group, &coords);
        prop_assume!(is_q_cartier(&x.fan, &c).q_cartier);
        let kx = x.group.canonical_class().c;
        let dual: Vec<BigInt> = kx.iter().zip(&c).map(|(a, b)| a - b).collect();
        let h = x.engine.compute(&c).unwrap();
        let hd = x.engine.compute(&dual).unwrap();
        let d = x.fan.dim();
        for i in 0..=d {
            prop_assert_eq!(h.get(i), hd.get(d - i));
        }
        prop_assert!(serre_duality_check(&x.fan, &c).unwrap());
    }

    #[test]
    fn euler_characteristic_counts_sections_of_nef_cartier((k, coords) in complete_class()) {
        let x = ctx(COMPLETE[k]);
        let c = class_of(&x.group, &coords);
        prop_assume!(is_cartier(&x.fan, &c) && x.cores.nef.contains(&rational(&x.group, &c)));
        let h = x.engine.compute(&c).unwrap();
        let chi = h.euler().unwrap();
        let points = polytope_points(&x.fan, &c, 80);
        prop_assert_eq!(points, polytope_points(&x.fan, &c, 100));
        prop_assert_eq!(chi, points as i64);
        prop_assert!(h.higher_vanish());
    }

    #[test]
    fn kawamata_viehweg_and_its_arithmetic_strengthening((k, coords) in complete_class()) {
        let x = ctx(COMPLETE[k]);
        let c = class_of(&x.group, &coords);
        let kx = x.group.canonical_class().c;
        let shifted: Vec<BigInt> = c.iter().zip(&kx).map(|(a, b)| a - b).collect();
        let h = x.engine.compute(&c).unwrap();
        let in_core = x.cores.a_nef.contains(&c).unwrap();
        if x.cores.nef.contains_interior(&rational(&x.group, &shifted)) {
            prop_assert!(h.higher_vanish());
            prop_assert!(in_core);
        }
        if in_core {
            prop_assert!(h.higher_vanish());
        }
    }

    #[test]
    fn minus_face_cores_are_acyclic((k, coords) in complete_class()) {
        let x = ctx(COMPLETE[k]);
        let c = class_of(&x.group, &coords);
        if let VanishingVerdict::MinusFaceCore(_) = x.cores.verdict(&c).unwrap() {
            prop_assert!(x.engine.compute(&c).unwrap().vanishes());
        }
    }

    #[test]
    fn antinef_cohomology_is_concentrated((k, coords) in complete_class()) {
        let x = ctx(COMPLETE[k]);
        let c = class_of(&x.group, &coords);
        prop_assume!(x.cores.nef.contains(&rational(&x.group, &c)));
        prop_assert!(antinef_vanishing_check(&x.fan, &x.group, &c).unwrap());
        // independent route: κ of a nef class is the dimension of P_D
        let kappa = section_polytope_dimension(&x.fan, &c).unwrap();
        let neg: Vec<BigInt> = c.iter().map(|v| -v).collect();
        let h = x.engine.compute(&neg).unwrap();
        for i in 0..=x.fan.dim() {
            if i as i64 != kappa {
                prop_assert_eq!(h.get(i), Dim::Finite(0));
            }
        }
    }

    #[test]
    fn principal_divisors_project_to_zero(k in 0..ALL.len(), m in prop::collection::vec(-50i64..=50, 4)) {
        let (fan, group) = load(ALL[k]);
        let c: Vec<BigInt> = fan.rays().iter().map(|r| BigInt::from(r.iter().zip(&m).map(|(a, b)| a * b).sum::<i64>())).collect();
        prop_assert!(group.project(&c).is_zero());
    }
}

#[test]
fn chamber_decompositions_agree() {
    for name in ["P2", "F3"] {
        let (fan, group) = load(name);
        assert!(chamber_equality_test(&fan, &group, 8).unwrap(), "{name}");
    }
}

#[test]
fn nef_cone_routes_agree() {
    for name in COMPLETE {
        let (fan, group) = load(name);
        assert!(NefCone::compute(&fan, &group).unwrap().consistent(), "{name}");
    }
}

fn window(group: &ClassGroup, r: i64) -> Vec<(GroupElement, Vec<BigInt>)> {
    window_classes(group, r).into_iter().map(|e| (e.clone(), group.lift(&e))).collect()
}

#[test]
fn mcm_is_symmetric_under_canonical_duality() {
    for name in ["MCM1", "MCM2"] {
        let (fan, group) = load(name);
        let t = McmTester::new(&fan).unwrap();
        let kx = group.canonical_class().c;
        for (_, c) in window(&group, 6) {
            let dual: Vec<BigInt> = kx.iter().zip(&c).map(|(a, b)| a - b).collect();
            assert_eq!(t.is_mcm(&c).unwrap(), t.is_mcm(&dual).unwrap(), "{name} {c:?}");
        }
    }
}

#[test]
fn zero_essential_classes_are_mcm() {
    for name in ["MCM1", "MCM2"] {
        let (fan, group) = load(name);
        let t = McmTester::new(&fan).unwrap();
        for (_, c) in window(&group, 6) {
            if is_zero_essential(&fan, &c).unwrap() {
                assert!(t.is_mcm(&c).unwrap(), "{name} {c:?}");
            }
        }
    }
}

#[test]
fn every_mcm_class_of_first_cone_is_zero_essential() {
    let (fan, group) = load("MCM1");
    let e = enumerate_mcm(&fan, &group, None).unwrap();
    for class in &e.classes {
        assert!(is_zero_essential(&fan, &group.lift(class)).unwrap(), "{class}");
    }
}

#[test]
fn q_cartier_classes_are_mcm() {
    for name in ["MCM1", "MCM2"] {
        let (fan, group) = load(name);
        let t = McmTester::new(&fan).unwrap();
        for (_, c) in window(&group, 6) {
            if is_q_cartier(&fan, &c).q_cartier {
                assert!(t.is_mcm(&c).unwrap(), "{name} {c:?}");
            }
        }
    }
}

#[test]
fn pushforward_vanishing_implies_mcm() {
    for name in ["MCM1", "MCM2"] {
        let (fan, group) = load(name);
        let t = McmTester::new(&fan).unwrap();
        let set = PushforwardSet::new(&fan, regular_triangulations(&fan).unwrap()).unwrap();
        for (_, c) in window(&group, 6) {
            if set.witness(&c).unwrap().is_none() {
                assert!(t.is_mcm(&c).unwrap(), "{name} {c:?}");
            }
        }
    }
}

#[test]
fn three_dimensional_converse() {
    let (fan, group) = load("MCM1");
    let t = McmTester::new(&fan).unwrap();
    let set = PushforwardSet::new(&fan, regular_triangulations(&fan).unwrap()).unwrap();
    for (e, c) in window(&group, 8) {
        assert_eq!(t.is_mcm(&c).unwrap(), set.witness(&c).unwrap().is_none(), "{e}");
    }
}

#[test]
fn structure_sheaf_has_only_sections() {
    // O_X has h^0 = 1 and nothing else on every complete fixture
    for name in COMPLETE {
        let x = ctx(name);
        let h = x.engine.compute(&vec![BigInt::zero(); x.fan.n()]).unwrap();
        assert_eq!(h.get(0), Dim::Finite(1), "{name}");
        assert!(h.higher_vanish(), "{name}");
    }
}
