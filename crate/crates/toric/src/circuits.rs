//! Circuits of a vector configuration and one-circuit varieties.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classgroup::{is_cartier, ClassGroup};
use crate::cohomology::{Dim, GradedCohomology};
use crate::fan::{fmt_subset, indices_of, Fan, Subset, SubvarietySpec};
use crate::frobenius::CircuitQuotient;
use crate::lattice::{gcd_all, integer_kernel, lcm_all, saturation_index, solve_integer, IntMatrix};
use crate::{Error, Result};

/// A minimal dependent set of rays with its primitive relation
/// `Σ α_i l_i = 0`. `alpha` has one entry per ray of the configuration,
/// zero outside the support. The lowest index carries a positive sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    pub support: Subset,
    pub alpha: Vec<BigInt>,
}

/// A circuit with a chosen sign of its relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedCircuit {
    pub support: Subset,
    pub alpha: Vec<BigInt>,
}

fn sign_mask(alpha: &[BigInt], positive: bool) -> Subset {
    alpha.iter().enumerate().fold(0, |m, (i, a)| {
        if (positive && a.is_positive()) || (!positive && a.is_negative()) {
            m | (1 << i)
        } else {
            m
        }
    })
}

fn phi(alpha: &[BigInt], c: &[BigInt]) -> BigInt {
    alpha.iter().zip(c).filter(|(a, _)| !a.is_zero()).map(|(a, x)| a * x).sum()
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.support == 0
    }

    /// All coefficients share one sign.
    pub fn is_fibrational(&self) -> bool {
        sign_mask(&self.alpha, false) == 0 || sign_mask(&self.alpha, true) == 0
    }

    pub fn positive(&self) -> OrientedCircuit {
        OrientedCircuit { support: self.support, alpha: self.alpha.clone() }
    }

    pub fn negative(&self) -> OrientedCircuit {
        self.positive().negate()
    }

    pub fn orientations(&self) -> [OrientedCircuit; 2] {
        [self.positive(), self.negative()]
    }

    /// `φ(c) = Σ α_i c_i`.
    pub fn phi(&self, c: &[BigInt]) -> BigInt {
        phi(&self.alpha, c)
    }

    pub fn indices(&self) -> Vec<usize> {
        indices_of(self.support)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.indices().iter().map(|&i| self.alpha[i].to_string()).collect();
        write!(f, "{} α=({})", fmt_subset(self.support), a.join(","))
    }
}

impl OrientedCircuit {
    pub fn plus(&self) -> Subset {
        sign_mask(&self.alpha, true)
    }

    pub fn minus(&self) -> Subset {
        sign_mask(&self.alpha, false)
    }

    pub fn negate(&self) -> OrientedCircuit {
        OrientedCircuit { support: self.support, alpha: self.alpha.iter().map(|a| -a).collect() }
    }

    pub fn circuit(&self) -> Circuit {
        let first = self.support.trailing_zeros() as usize;
        let alpha = if self.alpha[first].is_negative() { self.negate().alpha } else { self.alpha.clone() };
        Circuit { support: self.support, alpha }
    }

    pub fn phi(&self, c: &[BigInt]) -> BigInt {
        phi(&self.alpha, c)
    }

    pub fn phi_rational(&self, c: &[BigRational]) -> BigRational {
        self.alpha.iter().zip(c).map(|(a, x)| BigRational::from(a.clone()) * x).sum()
    }

    pub fn len(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.support == 0
    }

    /// Class of the minimal divisor `K_𝔠 = -Σ_{i∈𝔠⁺} D_i` as a vector.
    pub fn minimal_divisor(&self) -> Vec<BigInt> {
        (0..self.alpha.len()).map(|i| if self.plus() >> i & 1 == 1 { -BigInt::one() } else { BigInt::zero() }).collect()
    }
}

impl fmt::Display for OrientedCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{} -{}", fmt_subset(self.plus()), fmt_subset(self.minus()))
    }
}

/// The unique circuit inside `set` when the rows of `set` have a one
/// dimensional space of relations.
pub fn circuit_in_subset(l: &IntMatrix, set: Subset) -> Option<Circuit> {
    let idx = indices_of(set);
    let ker = integer_kernel(&l.select_rows(&idx));
    if ker.nrows() != 1 {
        return None;
    }
    let k = ker.row(0);
    let mut alpha = vec![BigInt::zero(); l.nrows()];
    let mut support = 0;
    for (pos, &i) in idx.iter().enumerate() {
        if !k[pos].is_zero() {
            alpha[i] = k[pos].clone();
            support |= 1 << i;
        }
    }
    Some(OrientedCircuit { support, alpha }.circuit())
}

/// All circuits of the rows of `l`, by increasing size, then
/// lexicographically.
pub fn enumerate_circuits(l: &IntMatrix) -> Vec<Circuit> {
    let n = l.nrows();
    let rank = l.rank();
    let mut out = Vec::new();
    for size in 1..=(rank + 1).min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let set = combo.iter().fold(0u32, |m, &i| m | (1 << i));
            if let Some(c) = circuit_in_subset(l, set) {
                if c.support == set {
                    out.push(c);
                }
            }
            // next combination in lexicographic order
            let mut k = size;
            while k > 0 && combo[k - 1] == n - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            combo[k - 1] += 1;
            for j in k..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    out
}

/// The one-circuit fan `Δ_𝔠` with maximal cones `𝒞∖{i}` for `i ∈ 𝔠⁺`,
/// expressed in a basis of the saturated span of the circuit.
#[derive(Clone, Debug)]
pub struct CircuitFan {
    pub fan: Fan,
    /// Global ray index of each local ray.
    pub rays: Vec<usize>,
    /// The orientation in local indices.
    pub local: OrientedCircuit,
    /// Maximal cones in global indices.
    pub global_cones: Vec<Subset>,
}

/// Basis (rows) of the saturation of the row lattice of `m`.
fn saturated_span_basis(m: &IntMatrix) -> IntMatrix {
    let d = m.ncols();
    let perp = integer_kernel(&m.transpose());
    if perp.nrows() == 0 {
        return IntMatrix::identity(d);
    }
    integer_kernel(&perp.transpose())
}

pub fn circuit_fan(l: &IntMatrix, oc: &OrientedCircuit) -> Result<CircuitFan> {
    if oc.plus() == 0 {
        return Err(Error::Undefined("the circuit fan of an orientation with empty positive part".into()));
    }
    let idx = indices_of(oc.support);
    let sub = l.select_rows(&idx);
    let basis = saturated_span_basis(&sub);
    let bt = basis.transpose();
    let mut rays = Vec::new();
    for r in sub.to_rows() {
        let x = solve_integer(&bt, &r).ok_or_else(|| Error::Precondition("ray outside its span".into()))?;
        rays.push(x.iter().map(|v| i64::try_from(v).map_err(|_| Error::ScaleLimit("ray entry".into()))).collect::<Result<Vec<i64>>>()?);
    }
    let local_alpha: Vec<BigInt> = idx.iter().map(|&i| oc.alpha[i].clone()).collect();
    let local = OrientedCircuit { support: ((1u64 << idx.len()) - 1) as Subset, alpha: local_alpha };
    let all: Vec<usize> = (0..idx.len()).collect();
    let cones: Vec<Vec<usize>> = indices_of(local.plus()).iter().map(|&i| all.iter().copied().filter(|&j| j != i).collect()).collect();
    let global_cones = indices_of(oc.plus()).iter().map(|&i| oc.support & !(1 << i)).collect();
    let fan = Fan::with_dim(basis.nrows(), rays, cones)?;
    Ok(CircuitFan { fan, rays: idx, local, global_cones })
}

/// `r_I`: index of the lattice spanned by `L_I` in its saturation.
pub fn r_index(l: &IntMatrix, i: Subset) -> BigInt {
    saturation_index(&l.select_rows(&indices_of(i)))
}

/// `s = |N̄_𝒞 / N_𝒞|`, the determinant of the endomorphism `ξ`.
pub fn s_global(l: &IntMatrix, c: &Circuit) -> BigInt {
    r_index(l, c.support)
}

/// `s_I = |N̄_I / N_I| / gcd{|α_i| : i ∈ 𝒞∖I}` for a proper subset `I` of the circuit.
pub fn s_index(l: &IntMatrix, c: &Circuit, i: Subset) -> BigRational {
    let rest: Vec<BigInt> = indices_of(c.support & !i).iter().map(|&k| c.alpha[k].abs()).collect();
    let g = gcd_all(&rest);
    BigRational::new(r_index(l, i), if g.is_zero() { BigInt::one() } else { g })
}

/// Inner wall `τ = 𝒞∖{i,j}` of `Δ_𝔠` and its linear form.
#[derive(Clone, Debug)]
pub struct WallForm {
    pub tau: Subset,
    pub pair: (usize, usize),
    /// `t_{𝔠,τ} = (s_τ/s) / lcm(α_i, α_j)`.
    pub t: BigRational,
    /// `t·α` as a functional on `Z^n`; `D·V(τ)` is its value on `D`.
    pub functional: Vec<BigRational>,
}

impl WallForm {
    pub fn intersection(&self, c: &[BigRational]) -> BigRational {
        self.functional.iter().zip(c).map(|(a, x)| a * x).sum()
    }

    pub fn intersection_int(&self, c: &[BigInt]) -> BigRational {
        self.functional.iter().zip(c).map(|(a, x)| a * BigRational::from(x.clone())).sum()
    }

    /// The lifted form on `A_Q` in the free coordinates of `group`.
    pub fn lift(&self, group: &ClassGroup, alpha: &[BigInt]) -> Vec<BigRational> {
        group.descend_functional(alpha).into_iter().map(|x| BigRational::from(x) * &self.t).collect()
    }
}

pub fn wall_forms(l: &IntMatrix, oc: &OrientedCircuit) -> Vec<WallForm> {
    let c = oc.circuit();
    let s = BigRational::from(s_global(l, &c));
    let plus = indices_of(oc.plus());
    let mut out = Vec::new();
    for (a, &i) in plus.iter().enumerate() {
        for &j in &plus[a + 1..] {
            let tau = oc.support & !(1 << i) & !(1 << j);
            let s_tau = s_index(l, &c, tau);
            let lcm = oc.alpha[i].abs().lcm(&oc.alpha[j].abs());
            let t = s_tau / &s / BigRational::from(lcm);
            let functional = oc.alpha.iter().map(|x| BigRational::from(x.clone()) * &t).collect();
            out.push(WallForm { tau, pair: (i, j), t, functional });
        }
    }
    out
}

fn check_relation(alpha: &[i64]) -> Result<()> {
    if alpha.is_empty() || alpha.iter().any(|&a| a == 0) {
        return Err(Error::InvalidInput("relation coefficients must be nonzero".into()));
    }
    if alpha.iter().fold(0i64, |g, &a| g.gcd(&a)) != 1 {
        return Err(Error::InvalidInput("relation is not primitive".into()));
    }
    Ok(())
}

fn det_xi(xi: Option<&IntMatrix>) -> Result<BigInt> {
    match xi {
        None => Ok(BigInt::one()),
        Some(x) => {
            let d = x.determinant().abs();
            if d.is_zero() {
                return Err(Error::InvalidInput("ξ is not injective".into()));
            }
            Ok(d)
        }
    }
}

/// The one-circuit variety `P(α, ξ)`: rays are `ξ` applied to the Gale
/// duals of `α`, maximal cones `𝒞∖{i}` for `α_i > 0`.
pub fn circuit_variety(alpha: &[i64], xi: Option<&IntMatrix>) -> Result<(Fan, OrientedCircuit)> {
    check_relation(alpha)?;
    let n = alpha.len();
    let col = IntMatrix::from_i64(1, &alpha.iter().map(|&a| vec![a]).collect::<Vec<_>>());
    // rows x with x·α = 0; their transpose is the n × (n-1) ray matrix
    let basis = integer_kernel(&col);
    let l0 = basis.transpose();
    let l = match xi {
        None => l0,
        Some(x) => {
            if x.nrows() != n - 1 || x.ncols() != n - 1 {
                return Err(Error::InvalidInput("ξ has the wrong size".into()));
            }
            l0.mul(&x.transpose())
        }
    };
    let rays: Vec<Vec<i64>> = l
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|v| i64::try_from(v).map_err(|_| Error::ScaleLimit("ray entry".into()))).collect())
        .collect::<Result<_>>()?;
    let oc = OrientedCircuit {
        support: ((1u64 << n) - 1) as Subset,
        alpha: alpha.iter().map(|&a| BigInt::from(a)).collect(),
    };
    let cones: Vec<Vec<usize>> =
        indices_of(oc.plus()).iter().map(|&i| (0..n).filter(|&j| j != i).collect()).collect();
    if cones.is_empty() {
        return Err(Error::Undefined("the circuit fan of an orientation with empty positive part".into()));
    }
    let fan = Fan::with_dim(n - 1, rays, cones)?;
    Ok((fan, oc))
}

/// Generator `s · lcm{α_i : i ∈ 𝔠⁺}` of the Picard group inside `A ≅ Z`.
pub fn one_circuit_pic_generator(alpha: &[i64], xi: Option<&IntMatrix>) -> Result<BigInt> {
    check_relation(alpha)?;
    let plus: Vec<BigInt> = alpha.iter().filter(|&&a| a > 0).map(|&a| BigInt::from(a)).collect();
    Ok(det_xi(xi)? * lcm_all(&plus))
}

/// Smooth iff `s = 1` and, for each `i ∈ 𝔠⁺`, `α_j = 1` for `j ∈ 𝔠⁺∖{i}`.
pub fn one_circuit_smooth(alpha: &[i64], xi: Option<&IntMatrix>) -> Result<bool> {
    check_relation(alpha)?;
    let s = det_xi(xi)?;
    let plus: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] > 0).collect();
    let all_cartier =
        plus.iter().all(|&i| s.is_one() && plus.iter().all(|&j| j == i || alpha[j] == 1));
    Ok(all_cartier)
}

/// Ampleness verdicts for `D + E` on a one-circuit variety.
#[derive(Clone, Debug)]
pub struct AmplenessReport {
    /// `(τ, D·V(τ))` for each inner wall.
    pub intersections: Vec<(Subset, BigRational)>,
    pub smooth: bool,
    /// `D + E` is integral and Cartier.
    pub cartier: bool,
    /// `(D+E)·V(τ) >= 0` on every inner wall.
    pub nef: bool,
    /// `(D+E)·V(τ) > 0` on every inner wall.
    pub ample: bool,
    /// Very ampleness certified by one of the sufficient criteria.
    pub very_ample: bool,
    /// `D·V(τ) >= |𝔠⁺| - x` on all walls, `x = 0` if smooth else 1.
    pub fujino_nef: bool,
    /// Smooth and `D·V(τ) >= |𝔠⁺| + 1`; requires Cartier.
    pub fujita_smooth_very_ample: bool,
    /// Not smooth and `D·V(τ) >= d + 1`; requires Cartier.
    pub fujita_very_ample: bool,
    /// Not smooth and `D·V(τ) >= |𝔠⁺|`; requires Cartier.
    pub fujita_ample: bool,
}

/// Applies the nef and ampleness criteria for one-circuit varieties with
/// `D` a rational divisor and `E = Σ e_i D_i`, `-1 <= e_i <= 0`.
pub fn one_circuit_ampleness(
    alpha: &[i64],
    xi: Option<&IntMatrix>,
    d: &[BigRational],
    e: &[BigRational],
) -> Result<AmplenessReport> {
    let (fan, oc) = circuit_variety(alpha, xi)?;
    let n = alpha.len();
    if d.len() != n || e.len() != n {
        return Err(Error::InvalidInput("divisor has the wrong length".into()));
    }
    if e.iter().any(|x| x > &BigRational::zero() || x < &-BigRational::one()) {
        return Err(Error::Precondition("fractional part needs -1 <= e_i <= 0".into()));
    }
    let smooth = one_circuit_smooth(alpha, xi)?;
    let walls = wall_forms(fan.ray_matrix(), &oc);
    let sum: Vec<BigRational> = d.iter().zip(e).map(|(a, b)| a + b).collect();
    let cartier = sum.iter().all(|x| x.is_integer())
        && is_cartier(&fan, &sum.iter().map(|x| x.to_integer()).collect::<Vec<_>>());
    let intersections: Vec<(Subset, BigRational)> = walls.iter().map(|w| (w.tau, w.intersection(d))).collect();
    let total: Vec<BigRational> = walls.iter().map(|w| w.intersection(&sum)).collect();
    let p = BigRational::from(BigInt::from(oc.plus().count_ones()));
    let dim = BigRational::from(BigInt::from(n as i64 - 1));
    let one = BigRational::one();
    let all_at_least = |bound: &BigRational| intersections.iter().all(|(_, v)| v >= bound);
    let x = if smooth { BigRational::zero() } else { one.clone() };
    let fujino_nef = all_at_least(&(&p - &x));
    let fujita_smooth_very_ample = cartier && smooth && all_at_least(&(&p + &one));
    let fujita_very_ample = cartier && !smooth && all_at_least(&(&dim + &one));
    let fujita_ample = cartier && !smooth && all_at_least(&p);
    Ok(AmplenessReport {
        intersections,
        smooth,
        cartier,
        nef: total.iter().all(|v| !v.is_negative()),
        ample: total.iter().all(|v| v.is_positive()),
        very_ample: fujita_smooth_very_ample || fujita_very_ample,
        fujino_nef,
        fujita_smooth_very_ample,
        fujita_very_ample,
        fujita_ample,
    })
}

/// Cohomology of `O(D)` on `P(α, ξ)` computed from semigroup
/// representation counts in `A_𝒞` rather than from chambers.
///
/// With `local = false` this is global cohomology; with `local = true`
/// it is cohomology with supports in the maximal complete invariant
/// subvariety `V(cone(𝔠⁻))`.
pub fn one_circuit_cohomology(
    alpha: &[i64],
    xi: Option<&IntMatrix>,
    c: &[BigInt],
    local: bool,
) -> Result<GradedCohomology> {
    let (fan, oc) = circuit_variety(alpha, xi)?;
    let d = fan.dim();
    let mut dims = vec![Dim::Finite(0); d + 1];
    let q = CircuitQuotient::new(fan.ray_matrix(), &oc)?;
    let plus = oc.plus();
    let minus = oc.minus();
    if !local {
        // m with signature 𝔠⁺ ↔ representations in the semigroup of F_𝔠
        let top = plus.count_ones() as usize - 1;
        dims[top] = dims[top].add(count_dim(q.representation_count(&oc, c)?)?);
        if minus == 0 {
            let opp = oc.negate();
            dims[0] = dims[0].add(count_dim(q.representation_count(&opp, c)?)?);
        } else {
            // mixed signs: the D_i generate A as a semigroup, so the region
            // of signature ∅ holds infinitely many characters
            dims[0] = Dim::Infinite;
        }
    } else {
        if minus == 0 {
            return Err(Error::Precondition("local variant needs a negative coefficient".into()));
        }
        let opp = oc.negate();
        let k = minus.count_ones() as usize;
        dims[k] = dims[k].add(count_dim(q.representation_count(&opp, c)?)?);
        // signature 𝒞 is an unbounded region whenever α has mixed signs
        if plus != 0 {
            dims[d] = Dim::Infinite;
        }
    }
    Ok(GradedCohomology::new(dims))
}

fn count_dim(k: u128) -> Result<Dim> {
    u64::try_from(k).map(Dim::Finite).map_err(|_| Error::ScaleLimit("representation count exceeds u64".into()))
}

/// Subvariety used by the local variant: `V(cone(𝔠⁻))`.
pub fn maximal_complete_subvariety(oc: &OrientedCircuit) -> SubvarietySpec {
    SubvarietySpec { cones: vec![oc.minus()] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::big;

    fn l(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows[0].len(), rows)
    }

    #[test]
    fn enumerate_examples() {
        let p2 = enumerate_circuits(&l(&[vec![1, 0], vec![0, 1], vec![-1, -1]]));
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].alpha, big(&[1, 1, 1]));
        let f3 = enumerate_circuits(&l(&[vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]]));
        let got: Vec<(Subset, Vec<BigInt>)> = f3.iter().map(|c| (c.support, c.alpha.clone())).collect();
        assert_eq!(
            got,
            vec![
                (0b1010, big(&[0, 1, 0, 1])),
                (0b0111, big(&[1, -3, 1, 0])),
                (0b1101, big(&[1, 0, 1, 3])),
            ]
        );
        let wps = enumerate_circuits(&l(&[vec![4, 1], vec![-1, 1], vec![-1, -1]]));
        assert_eq!(wps[0].alpha, big(&[2, 3, 5]));
    }

    #[test]
    fn fibrational() {
        let f3 = enumerate_circuits(&l(&[vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]]));
        assert!(f3[0].is_fibrational());
        assert!(!f3[1].is_fibrational());
    }

    #[test]
    fn circuit_fans() {
        let ll = l(&[vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]]);
        let c = circuit_in_subset(&ll, 0b0111).unwrap();
        let cf = circuit_fan(&ll, &c.positive()).unwrap();
        assert_eq!(cf.global_cones, vec![0b0110, 0b0011]);
        let p2 = l(&[vec![1, 0], vec![0, 1], vec![-1, -1]]);
        let c = circuit_in_subset(&p2, 0b111).unwrap();
        let cf = circuit_fan(&p2, &c.positive()).unwrap();
        assert!(cf.fan.is_complete());
        let neg = OrientedCircuit { support: 0b111, alpha: big(&[-1, -1, -1]) };
        assert!(matches!(circuit_fan(&p2, &neg), Err(Error::Undefined(_))));
    }

    #[test]
    fn pic_generators() {
        assert_eq!(one_circuit_pic_generator(&[2, 3, 5], None).unwrap(), BigInt::from(30));
        assert_eq!(one_circuit_pic_generator(&[1, 1, 1], None).unwrap(), BigInt::from(1));
        assert_eq!(one_circuit_pic_generator(&[1, 1, 2], None).unwrap(), BigInt::from(2));
    }

    #[test]
    fn smoothness() {
        assert!(one_circuit_smooth(&[1, 1, 1], None).unwrap());
        assert!(!one_circuit_smooth(&[2, 3, 5], None).unwrap());
        assert!(one_circuit_smooth(&[1, 1, -2], None).unwrap());
    }

    #[test]
    fn wps_wall_forms() {
        let (fan, oc) = circuit_variety(&[2, 3, 5], None).unwrap();
        let walls = wall_forms(fan.ray_matrix(), &oc);
        let t: Vec<BigRational> = walls.iter().map(|w| w.t.clone()).collect();
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(t, vec![r(1, 6), r(1, 10), r(1, 15)]);
        let p2 = circuit_variety(&[1, 1, 1], None).unwrap();
        assert!(wall_forms(p2.0.ray_matrix(), &p2.1).iter().all(|w| w.t.is_one()));
    }

    #[test]
    fn ampleness_examples() {
        let q = |v: &[i64]| v.iter().map(|&x| BigRational::from(BigInt::from(x))).collect::<Vec<_>>();
        // P2 with D = 3H: D·V(τ) = 3
        let r = one_circuit_ampleness(&[1, 1, 1], None, &q(&[3, 0, 0]), &q(&[0, 0, 0])).unwrap();
        assert!(r.nef && r.ample && r.fujino_nef);
        assert!(!r.fujita_smooth_very_ample);
        let zero = one_circuit_ampleness(&[1, 1, 1], None, &q(&[0, 0, 0]), &q(&[0, 0, 0])).unwrap();
        assert!(zero.nef && !zero.ample);
        // class 30 on P(2,3,5) is 15 D_1
        let r = one_circuit_ampleness(&[2, 3, 5], None, &q(&[15, 0, 0]), &q(&[0, 0, 0])).unwrap();
        assert!(!r.fujita_ample);
        let r = one_circuit_ampleness(&[2, 3, 5], None, &q(&[30, 0, 0]), &q(&[0, 0, 0])).unwrap();
        assert!(r.fujita_ample && r.ample);
    }
}
