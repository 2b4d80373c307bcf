//! Frobenius sets `F_𝔠`, denumerants, arithmetic cores and residual
//! classes.
//!
//! For a circuit `𝒞` the quotient `A_𝒞 = Z^𝒞 / L_𝒞(M)` is `Z ⊕ T` with the
//! free part read off by `φ(x) = Σ α_i x_i`. A class lies in `F_𝔠` when
//! its image is not of the form `Σ_{𝔠⁻} k_i D_i - Σ_{𝔠⁺} k_i D_i` with
//! `k >= 0` and `k > 0` on `𝔠⁺`. Every generator of that semigroup has
//! negative `φ`, so the representation count is a knapsack count over
//! `(value, torsion)` pairs with a finite table.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::circuits::{enumerate_circuits, Circuit, OrientedCircuit};
use crate::classgroup::ClassGroup;
use crate::cohomology::{iitaka_dimension, CohomologyEngine, Dim, LatticeRegion};
use crate::discriminantal::{all_oriented_circuits, face_oriented_flat, hull, orthant_cone, NefCone};
use crate::fan::{indices_of, Fan, Subset};
use crate::homology::Field;
use crate::lattice::{cokernel_presentation, solve_integer, AbelianGroupPresentation, GroupElement, IntMatrix};
use crate::polyhedra::{Cone, Vector};
use crate::{Error, Result};

/// Largest knapsack table (value range × torsion order) we fill.
pub const TABLE_LIMIT: usize = 50_000_000;

/// `|{k ∈ N^r : Σ k_i w_i = target, k_i >= 1 where strict}|`.
pub fn denumerant(weights: &[u64], target: i64, strict: &[bool]) -> Result<u128> {
    if weights.iter().any(|&w| w == 0) {
        return Err(Error::InvalidInput("weights must be positive".into()));
    }
    if strict.len() != weights.len() {
        return Err(Error::InvalidInput("one strictness flag per weight".into()));
    }
    let shift: i64 = weights.iter().zip(strict).filter(|(_, &s)| s).map(|(&w, _)| w as i64).sum();
    let t = target - shift;
    if t < 0 {
        return Ok(0);
    }
    let t = t as usize;
    if t >= TABLE_LIMIT {
        return Err(Error::ScaleLimit(format!("denumerant target {target}")));
    }
    let mut dp = vec![0u128; t + 1];
    dp[0] = 1;
    for &w in weights {
        let w = w as usize;
        for v in w..=t {
            dp[v] = dp[v].checked_add(dp[v - w]).ok_or_else(|| Error::ScaleLimit("denumerant overflow".into()))?;
        }
    }
    Ok(dp[t])
}

/// `A_𝒞 ≅ Z ⊕ T` with the map `η_𝒞 : Z^n → A_𝒞`.
#[derive(Clone, Debug)]
pub struct CircuitQuotient {
    circuit: Circuit,
    idx: Vec<usize>,
    pres: AbelianGroupPresentation,
    /// `u` with `φ(u) = 1`, in local coordinates.
    u: Vec<BigInt>,
    radix: Vec<usize>,
    order: usize,
    /// Torsion index of each `η(e_i)`, local order.
    unit_torsion: Vec<usize>,
}

impl CircuitQuotient {
    pub fn new(l: &IntMatrix, oc: &OrientedCircuit) -> Result<Self> {
        let circuit = oc.circuit();
        let idx = indices_of(circuit.support);
        let pres = cokernel_presentation(&l.select_rows(&idx));
        if pres.free_rank != 1 {
            return Err(Error::Precondition("circuit quotient must have rank one".into()));
        }
        let alpha: Vec<BigInt> = idx.iter().map(|&i| circuit.alpha[i].clone()).collect();
        let row = IntMatrix::from_rows(alpha.len(), &[alpha.clone()]);
        let u = solve_integer(&row, &[BigInt::one()])
            .ok_or_else(|| Error::Precondition("circuit relation is not primitive".into()))?;
        let radix: Vec<usize> = pres
            .torsion
            .iter()
            .map(|d| d.to_usize().ok_or_else(|| Error::ScaleLimit("torsion order".into())))
            .collect::<Result<_>>()?;
        let order = radix.iter().try_fold(1usize, |a, &b| a.checked_mul(b)).ok_or_else(|| Error::ScaleLimit("torsion order".into()))?;
        let mut q = CircuitQuotient { circuit, idx, pres, u, radix, order, unit_torsion: Vec::new() };
        q.unit_torsion = (0..q.idx.len())
            .map(|k| {
                let mut e = vec![BigInt::zero(); q.idx.len()];
                e[k] = BigInt::one();
                q.local(&e).1
            })
            .collect();
        Ok(q)
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn torsion_order(&self) -> usize {
        self.order
    }

    fn local(&self, x: &[BigInt]) -> (BigInt, usize) {
        let phi: BigInt = x.iter().zip(&self.idx).map(|(a, &i)| a * &self.circuit.alpha[i]).sum();
        let y: Vec<BigInt> = x.iter().zip(&self.u).map(|(a, b)| a - &phi * b).collect();
        let g = self.pres.project(&y);
        debug_assert!(g.free.iter().all(|f| f.is_zero()));
        let mut index = 0usize;
        for (t, &r) in g.torsion.iter().zip(&self.radix) {
            let digit = t.mod_floor_usize(r);
            index = index * r + digit;
        }
        (phi, index)
    }

    /// `η_𝒞(c)` as `(φ(c), torsion index)` for the canonical orientation.
    pub fn eta(&self, c: &[BigInt]) -> (BigInt, usize) {
        let x: Vec<BigInt> = self.idx.iter().map(|&i| c[i].clone()).collect();
        self.local(&x)
    }

    fn digits(&self, mut t: usize) -> Vec<usize> {
        let mut d = vec![0; self.radix.len()];
        for k in (0..self.radix.len()).rev() {
            d[k] = t % self.radix[k];
            t /= self.radix[k];
        }
        d
    }

    fn from_digits(&self, d: &[usize]) -> usize {
        d.iter().zip(&self.radix).fold(0, |a, (&x, &r)| a * r + x)
    }

    fn t_add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<usize> = x.iter().zip(&y).zip(&self.radix).map(|((p, q), r)| (p + q) % r).collect();
        self.from_digits(&s)
    }

    fn t_neg(&self, a: usize) -> usize {
        let x = self.digits(a);
        let s: Vec<usize> = x.iter().zip(&self.radix).map(|(p, r)| (r - p) % r).collect();
        self.from_digits(&s)
    }

    fn sign(&self, oc: &OrientedCircuit) -> Result<i64> {
        if oc.support != self.circuit.support {
            return Err(Error::InvalidInput("orientation of a different circuit".into()));
        }
        let first = self.idx[0];
        Ok(if oc.alpha[first] == self.circuit.alpha[first] { 1 } else { -1 })
    }

    /// Target and generators after removing the forced positive parts:
    /// `(W, τ, weights, torsions)` such that representations are
    /// `Σ k_i (w_i, t_i) = (W, τ)` with `k >= 0`.
    fn knapsack(&self, oc: &OrientedCircuit, c: &[BigInt]) -> Result<Option<(usize, usize, Vec<usize>, Vec<usize>)>> {
        let s = self.sign(oc)?;
        let (v, t) = self.eta(c);
        let mut value = &v * s;
        let mut tors = t;
        let mut weights = Vec::new();
        let mut torsions = Vec::new();
        for (k, &i) in self.idx.iter().enumerate() {
            let a = &oc.alpha[i];
            // generator η(e_i) on 𝔠⁻, -η(e_i) on 𝔠⁺; both have value -|α_i|
            let gt = if a.is_negative() { self.unit_torsion[k] } else { self.t_neg(self.unit_torsion[k]) };
            let w = a.abs().to_usize().ok_or_else(|| Error::ScaleLimit("relation coefficient".into()))?;
            if a.is_positive() {
                value += BigInt::from(w);
                tors = self.t_add(tors, self.t_neg(gt));
            }
            weights.push(w);
            torsions.push(gt);
        }
        let need = -value;
        if need.is_negative() {
            return Ok(None);
        }
        let need = need.to_usize().ok_or_else(|| Error::ScaleLimit("class too far from the circuit".into()))?;
        if (need + 1).saturating_mul(self.order) > TABLE_LIMIT {
            return Err(Error::ScaleLimit(format!("knapsack table {} × {}", need + 1, self.order)));
        }
        Ok(Some((need, tors, weights, torsions)))
    }

    fn fill(&self, need: usize, weights: &[usize], torsions: &[usize], saturate: bool) -> Result<Vec<u128>> {
        let t = self.order;
        let mut dp = vec![0u128; (need + 1) * t];
        dp[0] = 1;
        let shifts: Vec<Vec<usize>> = torsions.iter().map(|&g| (0..t).map(|x| self.t_add(x, g)).collect()).collect();
        for (w, shift) in weights.iter().zip(&shifts) {
            for v in *w..=need {
                for x in 0..t {
                    let from = dp[(v - w) * t + x];
                    if from == 0 {
                        continue;
                    }
                    let cell = &mut dp[v * t + shift[x]];
                    *cell = if saturate {
                        cell.saturating_add(from)
                    } else {
                        cell.checked_add(from).ok_or_else(|| Error::ScaleLimit("representation count overflow".into()))?
                    };
                }
            }
        }
        Ok(dp)
    }

    /// Number of representations of `η(c)` in the semigroup of `F_𝔠`.
    pub fn representation_count(&self, oc: &OrientedCircuit, c: &[BigInt]) -> Result<u128> {
        let Some((need, tors, w, ts)) = self.knapsack(oc, c)? else { return Ok(0) };
        let dp = self.fill(need, &w, &ts, false)?;
        Ok(dp[need * self.order + tors])
    }

    /// `c ∈ F_𝔠`.
    pub fn in_f(&self, oc: &OrientedCircuit, c: &[BigInt]) -> Result<bool> {
        let Some((need, tors, w, ts)) = self.knapsack(oc, c)? else { return Ok(true) };
        let dp = self.fill(need, &w, &ts, true)?;
        Ok(dp[need * self.order + tors] == 0)
    }

    /// Membership by direct search over `k` with `Σ k_i |α_i| <= bound`,
    /// comparing classes in the presentation of `A_𝒞` itself. Only
    /// tuples whose generator values add up to the value of `c` are
    /// projected.
    pub fn in_f_bounded(&self, oc: &OrientedCircuit, c: &[BigInt], bound: u64) -> Result<bool> {
        self.sign(oc)?;
        let n = c.len();
        let target: Vec<BigInt> = self.idx.iter().map(|&i| c[i].clone()).collect();
        let goal = self.pres.project(&target);
        let m = self.idx.len();
        let plus: Vec<bool> = self.idx.iter().map(|&i| oc.alpha[i].is_positive()).collect();
        // generator values read off φ directly; all are negative
        let mut w = Vec::with_capacity(m);
        for (&i, &p) in self.idx.iter().zip(&plus) {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(if p { -1 } else { 1 });
            let v = -self.value(oc, &e)?;
            if !v.is_positive() {
                return Err(Error::Undefined("generator with nonnegative value".into()));
            }
            w.push(v.to_u64().ok_or_else(|| Error::ScaleLimit("generator value".into()))?);
        }
        let need = -self.value(oc, c)?;
        if need.is_negative() {
            return Ok(true);
        }
        let need = need.to_u64().ok_or_else(|| Error::ScaleLimit("class value".into()))?;
        if need > bound {
            return Ok(true);
        }
        let mut k = vec![0i64; m];
        fn rec(
            pos: usize,
            left: u64,
            k: &mut Vec<i64>,
            w: &[u64],
            plus: &[bool],
            pres: &AbelianGroupPresentation,
            goal: &GroupElement,
        ) -> bool {
            if pos == k.len() {
                if left != 0 {
                    return false;
                }
                let x: Vec<BigInt> = k.iter().zip(plus).map(|(&v, &p)| BigInt::from(if p { -v } else { v })).collect();
                return &pres.project(&x) == goal;
            }
            let start = if plus[pos] { 1 } else { 0 };
            let mut v = start;
            while (v as u64) * w[pos] <= left {
                k[pos] = v;
                if rec(pos + 1, left - v as u64 * w[pos], k, w, plus, pres, goal) {
                    return true;
                }
                v += 1;
            }
            false
        }
        Ok(!rec(0, need, &mut k, &w, &plus, &self.pres, &goal))
    }

    /// `max(w)·Σw + |φ(c)|`: the search bound used with `in_f_bounded`.
    pub fn classical_bound(&self, c: &[BigInt]) -> u64 {
        let w: Vec<u64> = self.idx.iter().map(|&i| self.circuit.alpha[i].abs().to_u64().unwrap_or(0)).collect();
        let (v, _) = self.eta(c);
        w.iter().max().copied().unwrap_or(0) * w.iter().sum::<u64>() + v.abs().to_u64().unwrap_or(u64::MAX / 2)
    }

    /// Image of `K_𝔠 = -Σ_{𝔠⁺} D_i` and `K_{-𝔠}` in the free part, in the
    /// coordinate of `𝔠`: the open interval between them lies in `F_𝒞`.
    pub fn interval(&self, oc: &OrientedCircuit) -> (BigInt, BigInt) {
        let lo: BigInt = oc.alpha.iter().filter(|a| a.is_positive()).map(|a| -a).sum();
        let hi: BigInt = oc.alpha.iter().filter(|a| a.is_negative()).map(|a| -a).sum();
        (lo, hi)
    }

    /// `φ_𝔠(c)`.
    pub fn value(&self, oc: &OrientedCircuit, c: &[BigInt]) -> Result<BigInt> {
        Ok(self.eta(c).0 * self.sign(oc)?)
    }
}

trait ModFloor {
    fn mod_floor_usize(&self, r: usize) -> usize;
}

impl ModFloor for BigInt {
    fn mod_floor_usize(&self, r: usize) -> usize {
        let m = BigInt::from(r);
        let x = ((self % &m) + &m) % &m;
        x.to_usize().unwrap_or(0)
    }
}

/// `c ∈ F_𝔠` for one oriented circuit.
pub fn in_f(fan: &Fan, oc: &OrientedCircuit, c: &[BigInt]) -> Result<bool> {
    CircuitQuotient::new(fan.ray_matrix(), oc)?.in_f(oc, c)
}

/// `𝔄 = ⋂_{𝔠 ∈ 𝔉} F_𝔠` for a flat `𝔉`.
#[derive(Clone, Debug)]
pub struct ArithmeticCore {
    pub flat: Vec<OrientedCircuit>,
    quotients: Vec<CircuitQuotient>,
}

impl ArithmeticCore {
    pub fn new(fan: &Fan, flat: Vec<OrientedCircuit>) -> Result<Self> {
        let quotients = flat.iter().map(|oc| CircuitQuotient::new(fan.ray_matrix(), oc)).collect::<Result<_>>()?;
        Ok(ArithmeticCore { flat, quotients })
    }

    pub fn contains(&self, c: &[BigInt]) -> Result<bool> {
        for (oc, q) in self.flat.iter().zip(&self.quotients) {
            if !q.in_f(oc, c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First member of the flat whose Frobenius set misses `c`.
    pub fn obstruction(&self, c: &[BigInt]) -> Result<Option<&OrientedCircuit>> {
        for (oc, q) in self.flat.iter().zip(&self.quotients) {
            if !q.in_f(oc, c)? {
                return Ok(Some(oc));
            }
        }
        Ok(None)
    }
}

/// `𝔄_nef`.
pub fn a_nef(fan: &Fan, group: &ClassGroup) -> Result<ArithmeticCore> {
    ArithmeticCore::new(fan, NefCone::compute(fan, group)?.flat)
}

/// `𝔄_{-F}` for a face `F` of the nef cone.
pub fn a_minus_face(fan: &Fan, group: &ClassGroup, face: &Cone) -> Result<ArithmeticCore> {
    ArithmeticCore::new(fan, face_oriented_flat(fan, group, face))
}

/// `𝔄_0`: every orientation of every circuit.
pub fn a_zero(fan: &Fan) -> Result<ArithmeticCore> {
    ArithmeticCore::new(fan, all_oriented_circuits(fan))
}

/// `⋂_𝒞 F_𝒞`, read as "0-essential".
pub fn is_zero_essential(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    a_zero(fan)?.contains(c)
}

/// The closure of `S_{p,q} = relint(-nef ∩ H_{p,q})` for opposite rays
/// `l_p = -l_q`.
pub fn s_pq_closure(fan: &Fan, group: &ClassGroup, nef: &NefCone, p: usize, q: usize) -> Result<Cone> {
    if p >= fan.n() || q >= fan.n() || fan.ray(p).iter().zip(fan.ray(q)).any(|(a, b)| *a != -*b) {
        return Err(Error::InvalidInput(format!("rays {} and {} are not opposite", p + 1, q + 1)));
    }
    let mut alpha = vec![BigInt::zero(); fan.n()];
    alpha[p] = BigInt::one();
    alpha[q] = BigInt::one();
    let f = group.descend_functional(&alpha);
    let plane = Cone::from_inequalities(group.free_rank(), &[], &[f]);
    let face = nef.cone.intersect(&plane);
    let neg: Vec<Vector> = face
        .rays
        .iter()
        .map(|r| r.iter().map(|x| -x).collect())
        .chain(face.lineality.iter().cloned())
        .chain(face.lineality.iter().map(|l| l.iter().map(|x| -x).collect()))
        .collect();
    Ok(Cone::from_generators(group.free_rank(), &neg))
}

/// `𝔄_{p,q}`, the arithmetic core of `S_{p,q}`.
pub fn a_pq(fan: &Fan, group: &ClassGroup, p: usize, q: usize) -> Result<ArithmeticCore> {
    let nef = NefCone::compute(fan, group)?;
    let s = s_pq_closure(fan, group, &nef, p, q)?;
    ArithmeticCore::new(fan, hull(group, &s, &all_oriented_circuits(fan)))
}

pub fn in_a_nef(fan: &Fan, group: &ClassGroup, c: &[BigInt]) -> Result<bool> {
    a_nef(fan, group)?.contains(c)
}

pub fn in_a_minus_face(fan: &Fan, group: &ClassGroup, face: &Cone, c: &[BigInt]) -> Result<bool> {
    a_minus_face(fan, group, face)?.contains(c)
}

pub fn in_a_pq(fan: &Fan, group: &ClassGroup, p: usize, q: usize, c: &[BigInt]) -> Result<bool> {
    a_pq(fan, group, p, q)?.contains(c)
}

/// What the two arithmetic vanishing theorems say about a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VanishingVerdict {
    /// `D ∈ 𝔄_nef`: `h^i = 0` for `i > 0`.
    NefCore,
    /// `D ∈ 𝔄_{-F}` for the face with the given ray generators:
    /// `h^i = 0` for all `i`.
    MinusFaceCore(Vec<Vector>),
    Unknown,
}

/// Cores used by `vanishing_by_core`, computed once per fan.
#[derive(Clone, Debug)]
pub struct VanishingCores {
    pub nef: NefCone,
    pub a_nef: ArithmeticCore,
    /// Faces `F` of the nef cone with `0 < κ < d`, and `𝔄_{-F}`.
    pub minus_faces: Vec<(Cone, ArithmeticCore)>,
}

impl VanishingCores {
    pub fn new(fan: &Fan, group: &ClassGroup) -> Result<Self> {
        if !fan.is_complete() {
            return Err(Error::Precondition("arithmetic vanishing needs a complete fan".into()));
        }
        let nef = NefCone::compute(fan, group)?;
        let a = ArithmeticCore::new(fan, nef.flat.clone())?;
        let mut minus_faces = Vec::new();
        for face in nef.faces()? {
            // κ is constant on the relative interior of a face
            let mut mid = vec![BigInt::zero(); group.free_rank()];
            for r in &face.rays {
                for (m, x) in mid.iter_mut().zip(r) {
                    *m += x;
                }
            }
            let c = group.lift(&group.from_free(&mid));
            let k = iitaka_dimension(fan, group, &c)?;
            if k > 0 && k < fan.dim() {
                let core = a_minus_face(fan, group, &face)?;
                minus_faces.push((face, core));
            }
        }
        Ok(VanishingCores { nef, a_nef: a, minus_faces })
    }

    pub fn verdict(&self, c: &[BigInt]) -> Result<VanishingVerdict> {
        if self.a_nef.contains(c)? {
            return Ok(VanishingVerdict::NefCore);
        }
        for (face, core) in &self.minus_faces {
            if core.contains(c)? {
                return Ok(VanishingVerdict::MinusFaceCore(face.rays.clone()));
            }
        }
        Ok(VanishingVerdict::Unknown)
    }
}

pub fn vanishing_by_core(fan: &Fan, group: &ClassGroup, c: &[BigInt]) -> Result<VanishingVerdict> {
    VanishingCores::new(fan, group)?.verdict(c)
}

/// All classes whose free coordinates lie in `[-radius, radius]^r`, each
/// torsion value included, in lexicographic order of (free, torsion).
pub fn window_classes(group: &ClassGroup, radius: i64) -> Vec<GroupElement> {
    let r = group.free_rank();
    let side = (2 * radius + 1) as usize;
    let tors: Vec<usize> = group.torsion().iter().map(|d| d.to_usize().unwrap_or(1)).collect();
    let tcount: usize = tors.iter().product();
    let mut out = Vec::new();
    for k in 0..side.pow(r as u32) {
        let mut rem = k;
        let mut free = vec![BigInt::zero(); r];
        for j in (0..r).rev() {
            free[j] = BigInt::from((rem % side) as i64 - radius);
            rem /= side;
        }
        for t in 0..tcount {
            let mut rem = t;
            let mut torsion = vec![BigInt::zero(); tors.len()];
            for j in (0..tors.len()).rev() {
                torsion[j] = BigInt::from(rem % tors[j]);
                rem /= tors[j];
            }
            out.push(GroupElement { torsion, free: free.clone() });
        }
    }
    out
}

/// `𝕆(L, I) = e_I + sat(C_I)`, tested on the rational image.
pub fn in_offset_cone(fan: &Fan, group: &ClassGroup, i: Subset, class: &GroupElement) -> bool {
    let mut e = vec![BigInt::zero(); fan.n()];
    for k in indices_of(i) {
        e[k] = -BigInt::one();
    }
    let off = group.project(&e);
    let x: Vec<BigInt> = class.free.iter().zip(&off.free).map(|(a, b)| a - b).collect();
    orthant_cone(fan, group, i).contains(&x)
}

/// `Ω(L, I) ∩ window`: classes in `𝕆(L, I)` whose signature-`I` region
/// has no lattice point.
pub fn vpf_zero_window(fan: &Fan, group: &ClassGroup, i: Subset, radius: i64) -> Result<Vec<GroupElement>> {
    let mut out = Vec::new();
    for class in window_classes(group, radius) {
        if !in_offset_cone(fan, group, i, &class) {
            continue;
        }
        let c = crate::cohomology::to_i64(&group.lift(&class))?;
        if LatticeRegion::new(fan, &c, i).lattice_count()? == Dim::Finite(0) {
            out.push(class);
        }
    }
    Ok(out)
}

/// Strata for which residual classes are scanned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Nef,
    /// `S_{p,q}` for opposite rays, zero based.
    Pq(usize, usize),
    Zero,
}

/// A residual class and the direction along which it persisted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualClass {
    pub class: GroupElement,
    pub direction: Option<Vec<BigInt>>,
}

fn in_window(e: &GroupElement, radius: i64) -> bool {
    e.free.iter().all(|x| x.abs() <= BigInt::from(radius))
}

/// Scans a window for `𝔄_S`-residual classes.
///
/// For `S = nef` (vanishing in degrees `> 0`) and `S = S_{p,q}` (vanishing
/// in all degrees), a class is residual when it is outside `𝔄_S`, has the
/// vanishing of `S`, and along some integral generator `D'` of a ray of
/// `S̄` every in-window point `D + rD'` keeps that vanishing while the
/// last in-window point lies in `𝔄_S`; this stands in for "infinitely
/// many points of the half line in `𝔄_S`". For `S = 0` the scan returns
/// classes with `h^i = 0` for `i > 0` lying in none of `𝔄_nef` and the
/// `𝔄_{p,q}` (surfaces) or `𝔄_{-F}` (other dimensions).
pub fn residual_window(fan: &Fan, group: &ClassGroup, stratum: Stratum, radius: i64) -> Result<Vec<ResidualClass>> {
    let engine = CohomologyEngine::global(fan, Field::Rational)?;
    let cores = VanishingCores::new(fan, group)?;
    let vanish = |c: &[BigInt], all: bool| -> Result<bool> {
        let h = engine.compute(c)?;
        Ok(if all { h.vanishes() } else { h.higher_vanish() })
    };
    let mut out = Vec::new();
    match stratum {
        Stratum::Zero => {
            let pq = crate::surfaces::opposite_pairs(fan).unwrap_or_default();
            let mut extra = Vec::new();
            if fan.dim() == 2 {
                for p in &pq {
                    extra.push(a_pq(fan, group, p.p, p.q)?);
                }
            } else {
                extra.extend(cores.minus_faces.iter().map(|(_, c)| c.clone()));
            }
            for class in window_classes(group, radius) {
                let c = group.lift(&class);
                if !vanish(&c, false)? || cores.a_nef.contains(&c)? {
                    continue;
                }
                let mut covered = false;
                for core in &extra {
                    if core.contains(&c)? {
                        covered = true;
                        break;
                    }
                }
                if !covered {
                    out.push(ResidualClass { class, direction: None });
                }
            }
        }
        Stratum::Nef | Stratum::Pq(..) => {
            let (core, dirs, all) = match stratum {
                Stratum::Nef => (cores.a_nef.clone(), cores.nef.rays().to_vec(), false),
                Stratum::Pq(p, q) => {
                    let s = s_pq_closure(fan, group, &cores.nef, p, q)?;
                    (a_pq(fan, group, p, q)?, s.rays.clone(), true)
                }
                Stratum::Zero => unreachable!(),
            };
            for class in window_classes(group, radius) {
                let c = group.lift(&class);
                if core.contains(&c)? || !vanish(&c, all)? {
                    continue;
                }
                for d in &dirs {
                    let step = group.from_free(d);
                    let mut cur = class.clone();
                    let mut ok = true;
                    let mut last_in_core = false;
                    loop {
                        let next = group.presentation().add(&cur, &step);
                        if !in_window(&next, radius) {
                            break;
                        }
                        let cn = group.lift(&next);
                        if !vanish(&cn, all)? {
                            ok = false;
                            break;
                        }
                        last_in_core = core.contains(&cn)?;
                        cur = next;
                    }
                    if ok && last_in_core {
                        out.push(ResidualClass { class: class.clone(), direction: Some(d.clone()) });
                        break;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Circuits of the fan with their Frobenius interval endpoints.
pub fn frobenius_table(fan: &Fan) -> Vec<(Circuit, BigInt, BigInt)> {
    enumerate_circuits(fan.ray_matrix())
        .into_iter()
        .map(|c| {
            let oc = c.positive();
            let lo: BigInt = oc.alpha.iter().filter(|a| a.is_positive()).map(|a| -a).sum();
            let hi: BigInt = oc.alpha.iter().filter(|a| a.is_negative()).map(|a| -a).sum();
            (c, lo, hi)
        })
        .collect()
}
