#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use num_bigint::BigInt;
use toric::classgroup::ClassGroup;
use toric::fan::{Fan, FanFile};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.toml"))
}

pub fn load(name: &str) -> (Fan, ClassGroup) {
    let file = FanFile::load(&fixture_path(name)).expect("fixture parses");
    let fan = file.fan().expect("fixture is a valid fan");
    let group = match file.class_basis_big() {
        Some(b) => ClassGroup::with_basis(&fan, &b).expect("basis"),
        None => ClassGroup::new(&fan).expect("class group"),
    };
    (fan, group)
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub const ALL: [&str; 7] = ["P1", "P2", "F3", "WPS235", "MCM1", "MCM2", "SURF8"];

/// Coefficient range and the two scan radii used against the oracle,
/// chosen per dimension so every bounded region fits the inner box.
pub fn oracle_params(dim: usize) -> (i64, i64, i64) {
    match dim {
        1 => (6, 20, 30),
        2 => (4, 30, 45),
        3 => (3, 12, 18),
        _ => (2, 10, 14),
    }
}

/// Subvariety for the oracle comparison: all of `X` for complete fans,
/// the fixed point for affine cones.
pub fn oracle_support(fan: &Fan) -> toric::fan::SubvarietySpec {
    if fan.is_complete() {
        toric::fan::SubvarietySpec::whole()
    } else {
        toric::mcm::fixed_point(fan)
    }
}

pub fn random_divisors(n: usize, bound: i64, count: usize, seed: u64) -> Vec<Vec<i64>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

/// Engine against per-point brute force on `count` random divisors.
pub fn oracle_check(name: &str, count: usize, seed: u64) -> Result<usize, String> {
    use toric::cohomology::CohomologyEngine;
    use toric::homology::Field;
    let (fan, _) = load(name);
    let v = oracle_support(&fan);
    let engine = CohomologyEngine::new(&fan, &v, Field::Rational).map_err(|e| e.to_string())?;
    let mut o = oracle::Oracle::new(&fan, &v);
    let (bound, r, r2) = oracle_params(fan.dim());
    let divisors = random_divisors(fan.n(), bound, count, seed);
    for c in &divisors {
        let h = engine.compute(&big(c)).map_err(|e| e.to_string())?;
        o.agrees(c, h.dims(), r, r2).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(divisors.len())
}
