mod common;

use common::oracle::{denumerant_brute, det_abs};
use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use toric::circuits::{enumerate_circuits, maximal_complete_subvariety, one_circuit_cohomology, one_circuit_pic_generator, circuit_variety};
use toric::classgroup::{picard_integral, ClassGroup};
use toric::cohomology::{CohomologyEngine, Dim};
use toric::discriminantal::{all_oriented_circuits, separating_lemma_holds};
use toric::fan::{indices_of, Fan};
use toric::frobenius::{denumerant, window_classes, CircuitQuotient};
use toric::homology::Field;
use toric::lattice::{saturation_index, IntMatrix};

#[test]
fn engine_matches_per_point_brute_force() {
    for (k, name) in ALL.iter().enumerate() {
        let checked = oracle_check(name, 50, 1000 + k as u64).unwrap();
        assert_eq!(checked, 50);
    }
}

#[test]
fn engine_matches_brute_force_in_characteristic_two_on_acyclic_pieces() {
    // the oracle works over Q; over F_2 the engine must agree wherever the
    // relevant complexes are torsion free, which holds for all fixtures
    for name in ALL {
        let (fan, _) = load(name);
        let v = oracle_support(&fan);
        let q = CohomologyEngine::new(&fan, &v, Field::Rational).unwrap();
        let p = CohomologyEngine::new(&fan, &v, Field::Prime(2)).unwrap();
        for c in random_divisors(fan.n(), 3, 10, 77) {
            assert_eq!(q.compute(&big(&c)).unwrap(), p.compute(&big(&c)).unwrap(), "{name} {c:?}");
        }
    }
}

fn class_window(group: &ClassGroup, radius: i64) -> Vec<Vec<BigInt>> {
    window_classes(group, radius).iter().map(|e| group.lift(e)).collect()
}

#[test]
fn one_circuit_counts_match_chambers() {
    for alpha in [vec![2, 3, 5], vec![1, 1, 1], vec![1, 2, -1], vec![1, 1, -1, -1], vec![2, 1, -3]] {
        let (fan, oc) = circuit_variety(&alpha, None).unwrap();
        let group = ClassGroup::new(&fan).unwrap();
        let global = CohomologyEngine::global(&fan, Field::Rational).unwrap();
        let local = (oc.minus() != 0)
            .then(|| CohomologyEngine::new(&fan, &maximal_complete_subvariety(&oc), Field::Rational).unwrap());
        for c in class_window(&group, 40) {
            let a = one_circuit_cohomology(&alpha, None, &c, false).unwrap();
            assert_eq!(a.dims(), global.compute(&c).unwrap().dims(), "α={alpha:?} c={c:?}");
            if let Some(local) = &local {
                let b = one_circuit_cohomology(&alpha, None, &c, true).unwrap();
                assert_eq!(b.dims(), local.compute(&c).unwrap().dims(), "local α={alpha:?} c={c:?}");
            }
        }
    }
}

#[test]
fn denumerant_matches_enumeration() {
    let cases: [(&[u64], &[bool]); 5] = [
        (&[2, 3, 5], &[false, false, false]),
        (&[2, 3, 5], &[true, true, true]),
        (&[1, 4], &[true, false]),
        (&[3, 7, 11], &[false, true, false]),
        (&[6, 10, 15], &[false, false, false]),
    ];
    for (w, s) in cases {
        for t in -5..=80 {
            assert_eq!(denumerant(w, t, s).unwrap(), denumerant_brute(w, t, s), "{w:?} {s:?} {t}");
        }
    }
}

#[test]
fn frobenius_membership_two_routes() {
    for name in ALL {
        let (fan, group) = load(name);
        let classes = match group.free_rank() {
            1 => class_window(&group, 15),
            2 => class_window(&group, 4),
            _ => random_divisors(fan.n(), 4, 300, 5).iter().map(|c| big(c)).collect(),
        };
        for oc in all_oriented_circuits(&fan) {
            let q = CircuitQuotient::new(fan.ray_matrix(), &oc).unwrap();
            for c in &classes {
                let dp = q.in_f(&oc, c).unwrap();
                let dfs = q.in_f_bounded(&oc, c, q.classical_bound(c)).unwrap();
                assert_eq!(dp, dfs, "{name} {} c={c:?}", oc.circuit());
            }
        }
    }
}

#[test]
fn wps_frobenius_set_is_the_strict_semigroup_complement() {
    let (fan, group) = load("WPS235");
    let engine = CohomologyEngine::global(&fan, Field::Rational).unwrap();
    for k in -40..=0i64 {
        let c = group.lift(&group.from_free(&[BigInt::from(k)]));
        let h = engine.compute(&c).unwrap();
        let in_semigroup = denumerant_brute(&[2, 3, 5], -k, &[true, true, true]) > 0;
        assert_eq!(!h.get(2).is_zero(), in_semigroup, "k={k}");
    }
    let one = group.lift(&group.from_free(&[BigInt::from(1)]));
    assert_eq!(engine.compute(&one).unwrap().get(0), Dim::Finite(0));
}

fn rows_of(fan: &Fan, s: u32) -> IntMatrix {
    let rows: Vec<Vec<i64>> = indices_of(s).iter().map(|&i| fan.ray(i).to_vec()).collect();
    IntMatrix::from_i64(fan.dim(), &rows)
}

/// gcd of the maximal minors of the rows in `s`, which must be independent.
fn minor_gcd(fan: &Fan, s: u32) -> i64 {
    let rows: Vec<Vec<i64>> = indices_of(s).iter().map(|&i| fan.ray(i).to_vec()).collect();
    let k = rows.len();
    if k == 0 {
        return 1;
    }
    let d = fan.dim();
    let mut g = 0i64;
    for cols in 0u32..(1 << d) {
        if cols.count_ones() as usize != k {
            continue;
        }
        let idx = indices_of(cols);
        let sq: Vec<Vec<i64>> = rows.iter().map(|r| idx.iter().map(|&j| r[j]).collect()).collect();
        g = g.gcd(&det_abs(&sq));
    }
    g
}

#[test]
fn circuit_relations_are_exact_and_minimal() {
    for name in ALL {
        let (fan, _) = load(name);
        for c in enumerate_circuits(fan.ray_matrix()) {
            let idx = indices_of(c.support);
            for k in 0..fan.dim() {
                let s: BigInt = idx.iter().map(|&i| &c.alpha[i] * fan.ray(i)[k]).sum();
                assert!(s.is_zero(), "{name} {c}");
            }
            let g = idx.iter().fold(BigInt::zero(), |g, &i| g.gcd(&c.alpha[i]));
            assert_eq!(g, BigInt::from(1));
            assert!(idx.iter().all(|&i| !c.alpha[i].is_zero()));
            for &i in &idx {
                let rest = c.support & !(1 << i);
                assert_eq!(rows_of(&fan, rest).rank(), idx.len() - 1, "{name} {c} not minimal");
            }
        }
    }
}

#[test]
fn f3_circuits() {
    let (fan, _) = load("F3");
    let mut got: Vec<(u32, Vec<i64>)> = enumerate_circuits(fan.ray_matrix())
        .into_iter()
        .map(|c| {
            let mut a: Vec<i64> = indices_of(c.support).iter().map(|&i| i64::try_from(&c.alpha[i]).unwrap()).collect();
            if a[0] < 0 {
                a.iter_mut().for_each(|x| *x = -*x);
            }
            (c.support, a)
        })
        .collect();
    got.sort();
    assert_eq!(got, vec![(0b0111, vec![1, -3, 1]), (0b1010, vec![1, 1]), (0b1101, vec![1, 1, 3])]);
}

#[test]
fn separating_lemma_on_every_circuit() {
    for name in ALL {
        let (fan, group) = load(name);
        for c in enumerate_circuits(fan.ray_matrix()) {
            assert!(separating_lemma_holds(&fan, &group, &c), "{name} {c}");
        }
    }
}

#[test]
fn cyclic_lemma_gcd_formula() {
    let mut checked = 0;
    for name in ALL {
        let (fan, _) = load(name);
        for c in enumerate_circuits(fan.ray_matrix()) {
            let full = c.support.count_ones() as usize == fan.dim() + 1;
            if !full || saturation_index(&rows_of(&fan, c.support)) != BigInt::from(1) {
                continue;
            }
            let mut sub = c.support;
            loop {
                sub = (sub.wrapping_sub(1)) & c.support;
                let expect = indices_of(c.support & !sub).iter().fold(BigInt::zero(), |g, &i| g.gcd(&c.alpha[i].abs()));
                assert_eq!(saturation_index(&rows_of(&fan, sub)), expect, "{name} {c} I={sub:b}");
                assert_eq!(BigInt::from(minor_gcd(&fan, sub)), expect, "{name} {c} I={sub:b}");
                checked += 1;
                if sub == 0 {
                    break;
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn wps_picard_generator() {
    let (fan, group) = load("WPS235");
    assert_eq!(one_circuit_pic_generator(&[2, 3, 5], None).unwrap(), BigInt::from(30));
    assert_eq!(picard_integral(&fan, &group).index, Some(BigInt::from(30)));
}
