//! Complete toric surfaces: opposite rays, the strata `S_{p,q}`, window
//! classification of cohomology-free classes and the smooth-surface
//! necessary conditions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::classgroup::ClassGroup;
use crate::cohomology::{realized_signatures, CohomologyEngine, GradedCohomology};
use crate::discriminantal::{all_oriented_circuits, half_space, NefCone};
use crate::fan::{fmt_subset, Fan, Subset};
use crate::frobenius::{a_pq, window_classes, ArithmeticCore, VanishingCores};
use crate::homology::{reduced_cohomology, Field};
use crate::lattice::{primitive, GroupElement};
use crate::polyhedra::dot;
use crate::{Error, Result};

/// Rays `p, q` with `l_p = -l_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OppositePair {
    pub p: usize,
    pub q: usize,
    /// The side of the line through `l_p` containing the first ray not on it.
    pub a1: Subset,
    pub a2: Subset,
    /// Primitive `m` with `l_p(m) = 0` and `l_i(m) < 0` on `A¹`.
    pub m: Vec<i64>,
    /// `D_{p,q} = Σ_{A¹} l_i(m) D_i` as a divisor.
    pub direction: Vec<BigInt>,
}

impl std::fmt::Display for OppositePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}) A1={} A2={}", self.p + 1, self.q + 1, fmt_subset(self.a1), fmt_subset(self.a2))
    }
}

fn require_complete_surface(fan: &Fan) -> Result<()> {
    if fan.dim() != 2 || !fan.is_complete() {
        return Err(Error::Precondition("needs a complete surface fan".into()));
    }
    Ok(())
}

pub fn opposite_pairs(fan: &Fan) -> Result<Vec<OppositePair>> {
    require_complete_surface(fan)?;
    let n = fan.n();
    let mut out = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            let (lp, lq) = (fan.ray(p), fan.ray(q));
            if lp[0] != -lq[0] || lp[1] != -lq[1] {
                continue;
            }
            // m spans the annihilator of l_p
            let mut m = vec![-lp[1], lp[0]];
            let side = |i: usize, m: &[i64]| fan.ray(i)[0] * m[0] + fan.ray(i)[1] * m[1];
            let first = (0..n).find(|&i| i != p && i != q).expect("complete fan has a third ray");
            if side(first, &m) > 0 {
                m = vec![-m[0], -m[1]];
            }
            let (mut a1, mut a2) = (0, 0);
            let mut direction = vec![BigInt::zero(); n];
            for i in (0..n).filter(|&i| i != p && i != q) {
                let v = side(i, &m);
                if v < 0 {
                    a1 |= 1 << i;
                    direction[i] = BigInt::from(v);
                } else {
                    a2 |= 1 << i;
                }
            }
            out.push(OppositePair { p, q, a1, a2, m, direction });
        }
    }
    Ok(out)
}

/// Label of a window class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceLabel {
    InANef,
    /// Member of `𝔄_{p,q}`, zero-based pair indices.
    InAPq(usize, usize),
    ResidualWithVanishing,
    HasCohomology,
}

impl std::fmt::Display for SurfaceLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SurfaceLabel::InANef => write!(f, "in_A_nef"),
            SurfaceLabel::InAPq(p, q) => write!(f, "in_A_{},{}", p + 1, q + 1),
            SurfaceLabel::ResidualWithVanishing => write!(f, "residual_with_vanishing"),
            SurfaceLabel::HasCohomology => write!(f, "has_cohomology"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifiedClass {
    pub class: GroupElement,
    pub label: SurfaceLabel,
    pub cohomology: GradedCohomology,
}

/// Cores needed to label surface classes.
#[derive(Clone, Debug)]
pub struct SurfaceCores {
    pub nef: NefCone,
    pub a_nef: ArithmeticCore,
    pub pairs: Vec<OppositePair>,
    pub a_pq: Vec<ArithmeticCore>,
}

impl SurfaceCores {
    pub fn new(fan: &Fan, group: &ClassGroup) -> Result<Self> {
        require_complete_surface(fan)?;
        let cores = VanishingCores::new(fan, group)?;
        let pairs = opposite_pairs(fan)?;
        let a = pairs.iter().map(|pq| a_pq(fan, group, pq.p, pq.q)).collect::<Result<_>>()?;
        Ok(SurfaceCores { nef: cores.nef, a_nef: cores.a_nef, pairs, a_pq: a })
    }

    /// Core label of `c`, if any.
    pub fn core_label(&self, c: &[BigInt]) -> Result<Option<SurfaceLabel>> {
        if self.a_nef.contains(c)? {
            return Ok(Some(SurfaceLabel::InANef));
        }
        for (pq, core) in self.pairs.iter().zip(&self.a_pq) {
            if core.contains(c)? {
                return Ok(Some(SurfaceLabel::InAPq(pq.p, pq.q)));
            }
        }
        Ok(None)
    }
}

/// Labels every class of the window `[-radius, radius]^r`.
///
/// A class gets the first applicable label among `𝔄_nef`, the `𝔄_{p,q}`,
/// "higher cohomology vanishes" and "has higher cohomology".
pub fn surface_classify_window(fan: &Fan, group: &ClassGroup, radius: i64) -> Result<Vec<ClassifiedClass>> {
    let cores = SurfaceCores::new(fan, group)?;
    let engine = CohomologyEngine::global(fan, Field::Rational)?;
    let mut out = Vec::new();
    for class in window_classes(group, radius) {
        let c = group.lift(&class);
        let h = engine.compute(&c)?;
        let label = match cores.core_label(&c)? {
            Some(l) => l,
            None if h.higher_vanish() => SurfaceLabel::ResidualWithVanishing,
            None => SurfaceLabel::HasCohomology,
        };
        out.push(ClassifiedClass { class, label, cohomology: h });
    }
    Ok(out)
}

/// `c_{i-1} + c_{i+1} - b_i c_i` with `l_{i-1} + l_{i+1} = b_i l_i`, one
/// entry per ray in cyclic order, together with `b_i`.
fn wall_values(fan: &Fan, c: &[BigInt]) -> Result<Vec<(usize, BigInt, i64)>> {
    let order = fan.cyclic_order()?;
    let a = fan.surface_selfintersections()?;
    let n = order.len();
    Ok((0..n)
        .map(|k| {
            let (prev, i, next) = (order[(k + n - 1) % n], order[k], order[(k + 1) % n]);
            let b = -a[i];
            (i, &c[prev] + &c[next] - &c[i] * b, b)
        })
        .collect())
}

/// Per-pair outcome of the smooth-surface conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairConditions {
    pub p: usize,
    pub q: usize,
    /// `c_p + c_q = -1`.
    pub pair_sum: bool,
    /// Rays of `A¹ ∪ A²` whose value leaves the allowed range.
    pub failing: Vec<usize>,
}

impl PairConditions {
    pub fn holds(&self) -> bool {
        self.pair_sum && self.failing.is_empty()
    }
}

fn pair_conditions(fan: &Fan, c: &[BigInt], symmetric: bool) -> Result<Vec<PairConditions>> {
    if c.len() != fan.n() {
        return Err(Error::InvalidInput("one coefficient per ray".into()));
    }
    let vals = wall_values(fan, c)?;
    let mut out = Vec::new();
    for pq in opposite_pairs(fan)? {
        let sum = &c[pq.p] + &c[pq.q];
        let pair_sum = sum == BigInt::from(-1);
        let failing = vals
            .iter()
            .filter(|(i, _, _)| (pq.a1 | pq.a2) & (1 << i) != 0)
            .filter(|(_, v, b)| {
                let hi = if symmetric { (b - 1).min(1) } else { b - 1 };
                *v < BigInt::from(-1) || *v > BigInt::from(hi)
            })
            .map(|(i, _, _)| *i)
            .collect();
        out.push(PairConditions { p: pq.p, q: pq.q, pair_sum, failing });
    }
    Ok(out)
}

/// Necessary conditions for `D ∈ 𝔄_{p,q}` on a smooth complete surface:
/// `c_p + c_q = -1` and `c_{i-1} + c_{i+1} - b_i c_i ∈ [-1, b_i - 1]` for
/// every `i ∈ A¹ ∪ A²`, where `b_i = -D_i²`. Returns the per-pair results;
/// `D` passes when some pair holds. Passing does not imply membership.
pub fn smooth_necessary_conditions(fan: &Fan, c: &[BigInt]) -> Result<Vec<PairConditions>> {
    pair_conditions(fan, c, false)
}

pub fn passes_smooth_conditions(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    Ok(smooth_necessary_conditions(fan, c)?.iter().any(|p| p.holds()))
}

/// The narrower conditions when `-D` must also have no higher
/// cohomology: the value lies in `{-1, 0, 1}` if `D_i² < -1` and in
/// `{-1, 0}` if `D_i² = -1`.
pub fn symmetric_conditions(fan: &Fan, c: &[BigInt]) -> Result<Vec<PairConditions>> {
    pair_conditions(fan, c, true)
}

pub fn passes_symmetric_conditions(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    if c.iter().all(|x| x.is_zero()) {
        return Ok(true);
    }
    Ok(symmetric_conditions(fan, c)?.iter().any(|p| p.holds()))
}

/// No discriminantal hyperplane meets the interior of the nef cone, tested
/// on the ray generators, their pairwise sums and their total sum.
pub fn nef_interior_single_stratum(fan: &Fan, group: &ClassGroup) -> Result<bool> {
    let nef = NefCone::compute(fan, group)?;
    let rays = nef.rays();
    let mut samples: Vec<Vec<BigInt>> = Vec::new();
    let total: Vec<BigInt> =
        (0..group.free_rank()).map(|k| rays.iter().map(|r| r[k].clone()).sum()).collect();
    samples.push(total);
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            samples.push(rays[i].iter().zip(&rays[j]).map(|(a, b)| a + b).collect());
        }
    }
    for oc in all_oriented_circuits(fan) {
        let f = half_space(group, &oc);
        for s in &samples {
            if nef.cone.contains_relative_interior(s) && nef.cone.is_full_dimensional() && dot(&f, s).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Some realized signature of `c` gives a disconnected `Δ̂_I`.
pub fn has_disconnected_signature(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    let model = fan.simplicial_model();
    for s in realized_signatures(fan, c)? {
        let sub = model.full_subcomplex(s.signature);
        if sub.vertices().count_ones() >= 2 && reduced_cohomology(&sub, Field::Rational).get(0) > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `m` and the signature of a disconnected chamber, for reporting.
pub fn disconnected_witness(fan: &Fan, c: &[BigInt]) -> Result<Option<Subset>> {
    let model = fan.simplicial_model();
    for s in realized_signatures(fan, c)? {
        let sub = model.full_subcomplex(s.signature);
        if sub.vertices().count_ones() >= 2 && reduced_cohomology(&sub, Field::Rational).get(0) > 0 {
            return Ok(Some(s.signature));
        }
    }
    Ok(None)
}

/// Class of `D_{p,q}` in free coordinates, made primitive.
pub fn direction_class(group: &ClassGroup, pair: &OppositePair) -> Vec<BigInt> {
    primitive(&group.project(&pair.direction).free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::big;

    fn f3() -> Fan {
        Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap()
    }

    fn surf8() -> Fan {
        let rays = vec![
            vec![0, -1],
            vec![1, -2],
            vec![1, -1],
            vec![1, 0],
            vec![1, 1],
            vec![1, 2],
            vec![0, 1],
            vec![-1, 0],
        ];
        let cones = (0..8).map(|i| vec![i, (i + 1) % 8]).collect();
        Fan::new(rays, cones).unwrap()
    }

    #[test]
    fn pairs() {
        let p = opposite_pairs(&f3()).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!((p[0].p, p[0].q), (1, 3));
        assert_eq!(p[0].a1 | p[0].a2, 0b0101);
        let g = ClassGroup::new(&f3()).unwrap();
        // D_{2,4} is the class of -D_1
        let d = g.project(&p[0].direction);
        assert_eq!(d, g.project(&big(&[-1, 0, 0, 0])));
        let s = opposite_pairs(&surf8()).unwrap();
        let idx: Vec<(usize, usize)> = s.iter().map(|x| (x.p, x.q)).collect();
        assert_eq!(idx, vec![(0, 6), (3, 7)]);
    }

    #[test]
    fn conditions() {
        let c = big(&[-1, 1, 1, 0, 0, 1, 0, -20]);
        assert!(passes_smooth_conditions(&surf8(), &c).unwrap());
        assert!(passes_symmetric_conditions(&surf8(), &c).unwrap());
        assert!(!passes_smooth_conditions(&f3(), &big(&[0, 0, 0, 0])).unwrap());
        assert!(passes_smooth_conditions(&f3(), &big(&[0, 0, 0, -1])).unwrap());
    }

    #[test]
    fn single_stratum() {
        let g = ClassGroup::new(&f3()).unwrap();
        assert!(nef_interior_single_stratum(&f3(), &g).unwrap());
        let engine = CohomologyEngine::global(&f3(), Field::Rational).unwrap();
        for c in [[2, 0, 0, -3], [-1, 0, -1, 2], [0, 0, 3, -2]] {
            let c = big(&c);
            let h1 = engine.compute(&c).unwrap().get(1);
            assert_eq!(!h1.is_zero(), has_disconnected_signature(&f3(), &c).unwrap() && !h1.is_zero());
        }
    }
}
