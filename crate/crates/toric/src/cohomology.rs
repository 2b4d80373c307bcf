//! Cohomology of divisorial sheaves `O(D)` with and without supports.
//!
//! For `D = Σ c_i D_i` and a character `m`, the signature is
//! `I(m) = {i : l_i(m) < -c_i}`, and `H^i_V(X, O(D))_m` is the reduced
//! relative cohomology `H^{i-1}(Δ̂_I, Δ̂_{V,I})`. Characters sharing a
//! signature form the lattice points of one polyhedron, so the graded
//! dimensions are sums of (lattice count × relative cohomology) over the
//! signatures whose pair is not acyclic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::circuits::enumerate_circuits;
use crate::classgroup::{is_q_cartier, ClassGroup};
use crate::discriminantal::NefCone;
use crate::fan::{indices_of, Fan, SimplicialComplex, Subset, SubvarietySpec};
use crate::homology::{relative_reduced_cohomology, CochainComplexDims, Field};
use crate::lattice::IntMatrix;
use crate::polyhedra::{dot, generators_of, Vector};
use crate::{Error, Result};

/// Default cap on the number of characters listed individually.
pub const CHARACTER_CAP: usize = 100_000;

/// Upper bound on lattice points visited while counting one region.
pub const ENUMERATION_LIMIT: u64 = 50_000_000;

/// Dimension of a graded piece: a number or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Finite(u64),
    Infinite,
}

impl Dim {
    pub fn add(self, other: Dim) -> Dim {
        match (self, other) {
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a + b),
            _ => Dim::Infinite,
        }
    }

    /// `self · k`; zero times anything is zero.
    pub fn times(self, k: u64) -> Dim {
        match self {
            _ if k == 0 => Dim::Finite(0),
            Dim::Finite(a) => Dim::Finite(a * k),
            Dim::Infinite => Dim::Infinite,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Dim::Finite(0)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Dim::Finite(a) => Some(a),
            Dim::Infinite => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(a) => write!(f, "{a}"),
            Dim::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// One character's contribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTerm {
    pub m: Vec<i64>,
    pub degree: usize,
    pub dim: u64,
}

/// Dimensions `h^0, ..., h^d`, optionally with the characters that
/// contribute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCohomology {
    dims: Vec<Dim>,
    pub characters: Option<Vec<CharacterTerm>>,
}

impl GradedCohomology {
    pub fn new(dims: Vec<Dim>) -> Self {
        GradedCohomology { dims, characters: None }
    }

    pub fn dims(&self) -> &[Dim] {
        &self.dims
    }

    pub fn get(&self, i: usize) -> Dim {
        self.dims.get(i).copied().unwrap_or(Dim::Finite(0))
    }

    pub fn is_finite(&self) -> bool {
        self.dims.iter().all(|d| d.finite().is_some())
    }

    pub fn vanishes(&self) -> bool {
        self.dims.iter().all(|d| d.is_zero())
    }

    /// `h^i = 0` for every `i > 0`.
    pub fn higher_vanish(&self) -> bool {
        self.dims.iter().skip(1).all(|d| d.is_zero())
    }

    /// Degrees with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&i| !self.dims[i].is_zero()).collect()
    }

    pub fn euler(&self) -> Option<i64> {
        let mut s = 0i64;
        for (i, d) in self.dims.iter().enumerate() {
            let v = d.finite()? as i64;
            s += if i % 2 == 0 { v } else { -v };
        }
        Some(s)
    }

    pub fn as_u64(&self) -> Option<Vec<u64>> {
        self.dims.iter().map(|d| d.finite()).collect()
    }
}

impl fmt::Display for GradedCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `I(m) = {i : l_i(m) < -c_i}`.
pub fn signature(fan: &Fan, c: &[i64], m: &[i64]) -> Subset {
    let mut s = 0;
    for (i, r) in fan.rays().iter().enumerate() {
        let v: i128 = r.iter().zip(m).map(|(a, b)| *a as i128 * *b as i128).sum();
        if v < -(c[i] as i128) {
            s |= 1 << i;
        }
    }
    s
}

pub(crate) fn to_i64(c: &[BigInt]) -> Result<Vec<i64>> {
    c.iter().map(|x| x.to_i64().ok_or_else(|| Error::ScaleLimit(format!("coefficient {x}")))).collect()
}

/// The closed polyhedron `Q = {m : a·m >= b}` of lattice points carrying a
/// given signature; strict inequalities `l_i(m) < -c_i` are replaced by
/// `l_i(m) <= -c_i - 1`, which is exact on lattice points.
#[derive(Clone, Debug)]
pub struct LatticeRegion {
    pub signature: Subset,
    /// Rows `(a, b)` meaning `a·m >= b`.
    pub inequalities: Vec<(Vec<i64>, i64)>,
    /// Vertices as `(numerators, denominator)`; for regions with
    /// lineality these are points of the minimal faces.
    pub vertices: Vec<(Vec<BigInt>, BigInt)>,
    /// Primitive recession rays.
    pub recession: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

impl LatticeRegion {
    pub fn new(fan: &Fan, c: &[i64], sig: Subset) -> LatticeRegion {
        let inequalities: Vec<(Vec<i64>, i64)> = fan
            .rays()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if sig >> i & 1 == 1 {
                    (r.iter().map(|x| -x).collect(), c[i] + 1)
                } else {
                    (r.clone(), -c[i])
                }
            })
            .collect();
        Self::from_inequalities(sig, fan.dim(), inequalities)
    }

    fn from_inequalities(sig: Subset, d: usize, inequalities: Vec<(Vec<i64>, i64)>) -> LatticeRegion {
        // homogenize: a·m - b t >= 0, t >= 0
        let mut hom: Vec<Vector> = inequalities
            .iter()
            .map(|(a, b)| a.iter().map(|&x| BigInt::from(x)).chain([BigInt::from(-*b)]).collect())
            .collect();
        let mut t = vec![BigInt::zero(); d + 1];
        t[d] = BigInt::from(1);
        hom.push(t);
        let (rays, lineality) = generators_of(d + 1, &hom, &[]);
        let mut vertices = Vec::new();
        let mut recession = Vec::new();
        for r in rays {
            if r[d].is_zero() {
                recession.push(r[..d].to_vec());
            } else {
                vertices.push((r[..d].to_vec(), r[d].clone()));
            }
        }
        let lineality = lineality.into_iter().map(|l| l[..d].to_vec()).collect();
        LatticeRegion { signature: sig, inequalities, vertices, recession, lineality }
    }

    pub fn dim(&self) -> usize {
        self.inequalities.first().map(|r| r.0.len()).unwrap_or(0)
    }

    /// The rational polyhedron is empty.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.recession.is_empty() && self.lineality.is_empty()
    }

    pub fn contains(&self, m: &[i64]) -> bool {
        self.inequalities.iter().all(|(a, b)| {
            a.iter().zip(m).map(|(x, y)| *x as i128 * *y as i128).sum::<i128>() >= *b as i128
        })
    }

    /// A box containing every lattice point of the polytope part, enlarged
    /// by one fundamental parallelepiped of the recession directions; a
    /// lattice point of the region exists iff one exists in this box.
    pub fn search_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        if self.vertices.is_empty() {
            return None;
        }
        let d = self.dim();
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for (num, den) in &self.vertices {
            for k in 0..d {
                let (q, r) = (num[k].clone() / den, num[k].clone() % den);
                let fl = if r.is_negative() { q.clone() - 1 } else { q.clone() };
                let ce = if r.is_positive() { q + 1 } else { q };
                lo[k] = lo[k].min(fl.to_i64()?);
                hi[k] = hi[k].max(ce.to_i64()?);
            }
        }
        for r in self.recession.iter().chain(&self.lineality) {
            for k in 0..d {
                let x = r[k].to_i64()?;
                if x > 0 {
                    hi[k] = hi[k].checked_add(x)?;
                } else {
                    lo[k] = lo[k].checked_add(x)?;
                }
            }
        }
        Some((lo, hi))
    }

    /// Number of lattice points: infinite when the region is unbounded
    /// and has a lattice point.
    pub fn lattice_count(&self) -> Result<Dim> {
        let Some((lo, hi)) = self.search_box() else { return Ok(Dim::Finite(0)) };
        if self.is_bounded() {
            let mut n = 0u64;
            for_each_lattice_point(&self.inequalities, &lo, &hi, &mut |_| {
                n += 1;
                true
            })?;
            Ok(Dim::Finite(n))
        } else {
            let mut found = false;
            for_each_lattice_point(&self.inequalities, &lo, &hi, &mut |_| {
                found = true;
                false
            })?;
            Ok(if found { Dim::Infinite } else { Dim::Finite(0) })
        }
    }

    /// Lattice points of a bounded region, in lexicographic order.
    pub fn lattice_points(&self, cap: usize) -> Result<Vec<Vec<i64>>> {
        if !self.is_bounded() {
            return Err(Error::Precondition("region is unbounded".into()));
        }
        let Some((lo, hi)) = self.search_box() else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        for_each_lattice_point(&self.inequalities, &lo, &hi, &mut |m| {
            out.push(m.to_vec());
            out.len() < cap
        })?;
        Ok(out)
    }
}

/// Visits the lattice points of `{m : a·m >= b} ∩ [lo, hi]`; the last
/// coordinate is solved for directly. The visitor returns `false` to stop.
pub fn for_each_lattice_point(
    ineqs: &[(Vec<i64>, i64)],
    lo: &[i64],
    hi: &[i64],
    visit: &mut dyn FnMut(&[i64]) -> bool,
) -> Result<()> {
    let d = lo.len();
    if d == 0 {
        if ineqs.iter().all(|(_, b)| *b <= 0) {
            visit(&[]);
        }
        return Ok(());
    }
    let mut volume: u128 = 1;
    for k in 0..d - 1 {
        volume = volume.saturating_mul((hi[k] - lo[k] + 1).max(0) as u128);
    }
    if volume > ENUMERATION_LIMIT as u128 {
        return Err(Error::ScaleLimit(format!("lattice enumeration over {volume} points")));
    }
    let mut m = lo.to_vec();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Ok(());
    }
    loop {
        // interval for the last coordinate
        let mut a_lo = lo[d - 1] as i128;
        let mut a_hi = hi[d - 1] as i128;
        for (a, b) in ineqs {
            let rest: i128 = (0..d - 1).map(|k| a[k] as i128 * m[k] as i128).sum();
            let need = *b as i128 - rest;
            let coef = a[d - 1] as i128;
            if coef == 0 {
                if need > 0 {
                    a_hi = a_lo - 1;
                    break;
                }
            } else if coef > 0 {
                a_lo = a_lo.max(div_ceil(need, coef));
            } else {
                a_hi = a_hi.min(div_floor(need, coef));
            }
        }
        let mut x = a_lo;
        while x <= a_hi {
            m[d - 1] = x as i64;
            if !visit(&m) {
                return Ok(());
            }
            x += 1;
        }
        // advance the odometer over the first d - 1 coordinates
        let mut k = d - 1;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            if m[k] < hi[k] {
                m[k] += 1;
                for j in k + 1..d - 1 {
                    m[j] = lo[j];
                }
                break;
            }
        }
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// A signature realized by some rational point, with the lattice data of
/// its region.
#[derive(Clone, Debug)]
pub struct SignatureRegion {
    pub signature: Subset,
    /// The rational region is bounded.
    pub bounded: bool,
    pub lattice_count: Dim,
    pub region: LatticeRegion,
}

/// Rational realizability of `l_i(m) < -c_i (i ∈ I)`, `l_i(m) >= -c_i`
/// otherwise: a relative interior point of the homogenized cone must have
/// `t > 0` and satisfy the strict rows strictly.
pub fn is_realized(fan: &Fan, c: &[i64], sig: Subset) -> bool {
    let d = fan.dim();
    let mut hom: Vec<Vector> = Vec::new();
    for (i, r) in fan.rays().iter().enumerate() {
        let row: Vector = if sig >> i & 1 == 1 {
            r.iter().map(|&x| BigInt::from(-x)).chain([BigInt::from(-c[i])]).collect()
        } else {
            r.iter().map(|&x| BigInt::from(x)).chain([BigInt::from(c[i])]).collect()
        };
        hom.push(row);
    }
    let mut t = vec![BigInt::zero(); d + 1];
    t[d] = BigInt::from(1);
    hom.push(t);
    let (rays, _) = generators_of(d + 1, &hom, &[]);
    let mut p = vec![BigInt::zero(); d + 1];
    for r in &rays {
        for k in 0..=d {
            p[k] += &r[k];
        }
    }
    if !p[d].is_positive() {
        return false;
    }
    indices_of(sig).iter().all(|&i| dot(&hom[i], &p).is_positive())
}

/// The rational region of a signature is bounded.
fn rational_bounded(fan: &Fan, sig: Subset) -> bool {
    let d = fan.dim();
    let rows: Vec<Vector> = fan
        .rays()
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|&x| BigInt::from(if sig >> i & 1 == 1 { -x } else { x })).collect())
        .collect();
    let (rays, lin) = generators_of(d, &rows, &[]);
    rays.is_empty() && lin.is_empty()
}

/// All signatures realized by points of `M_Q`, with region data.
pub fn realized_signatures(fan: &Fan, c: &[BigInt]) -> Result<Vec<SignatureRegion>> {
    let c = to_i64(c)?;
    let n = fan.n();
    if n > 20 {
        return Err(Error::ScaleLimit("too many rays for signature enumeration".into()));
    }
    let mut out = Vec::new();
    for sig in 0..(1u32 << n) {
        if !is_realized(fan, &c, sig) {
            continue;
        }
        let region = LatticeRegion::new(fan, &c, sig);
        out.push(SignatureRegion {
            signature: sig,
            bounded: rational_bounded(fan, sig),
            lattice_count: region.lattice_count()?,
            region,
        });
    }
    Ok(out)
}

/// Precomputed relative complexes for one fan and one support `V`.
#[derive(Clone, Debug)]
pub struct CohomologyEngine {
    fan: Fan,
    field: Field,
    /// Signatures whose pair has nonzero cohomology, with that cohomology.
    active: Vec<(Subset, CochainComplexDims)>,
    top: usize,
}

impl CohomologyEngine {
    pub fn new(fan: &Fan, v: &SubvarietySpec, field: Field) -> Result<Self> {
        let n = fan.n();
        if n > 20 {
            return Err(Error::ScaleLimit("too many rays for signature enumeration".into()));
        }
        let full = fan.simplicial_model();
        let sub = fan.subvariety_complex(v)?;
        let mut active = Vec::new();
        let mut top = fan.dim();
        for sig in 0..(1u32 << n) {
            let k = full.full_subcomplex(sig);
            let kv = sub.full_subcomplex(sig);
            let h = relative_reduced_cohomology(&k, &kv, field)?;
            if !h.is_acyclic() {
                top = top.max((h.max_degree() + 1) as usize);
                active.push((sig, h));
            }
        }
        Ok(CohomologyEngine { fan: fan.clone(), field, active, top })
    }

    pub fn global(fan: &Fan, field: Field) -> Result<Self> {
        Self::new(fan, &SubvarietySpec::whole(), field)
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Signatures contributing in some degree.
    pub fn active_signatures(&self) -> Vec<Subset> {
        self.active.iter().map(|(s, _)| *s).collect()
    }

    /// `H^i` contributed by a single character of signature `sig`.
    pub fn signature_dims(&self, sig: Subset) -> Vec<u64> {
        let mut out = vec![0; self.fan.dim() + 1];
        if let Some((_, h)) = self.active.iter().find(|(s, _)| *s == sig) {
            for (k, d) in h.nonzero() {
                let i = (k + 1) as usize;
                if out.len() <= i {
                    out.resize(i + 1, 0);
                }
                out[i] += d;
            }
        }
        out
    }

    pub fn compute(&self, c: &[BigInt]) -> Result<GradedCohomology> {
        self.compute_with(c, None)
    }

    /// Cohomology of `O(D)`; with `cap = Some(k)` up to `k` contributing
    /// characters are listed.
    pub fn compute_with(&self, c: &[BigInt], cap: Option<usize>) -> Result<GradedCohomology> {
        if c.len() != self.fan.n() {
            return Err(Error::InvalidInput(format!("divisor needs {} coefficients", self.fan.n())));
        }
        let c = to_i64(c)?;
        let mut dims = vec![Dim::Finite(0); self.top + 1];
        let mut chars: Option<Vec<CharacterTerm>> = cap.map(|_| Vec::new());
        for (sig, h) in &self.active {
            let region = LatticeRegion::new(&self.fan, &c, *sig);
            let count = region.lattice_count()?;
            if count.is_zero() {
                continue;
            }
            for (k, d) in h.nonzero() {
                let i = (k + 1) as usize;
                dims[i] = dims[i].add(count.times(d));
            }
            if let (Some(list), Some(cap), Dim::Finite(_)) = (chars.as_mut(), cap, count) {
                let left = cap.saturating_sub(list.len());
                if left > 0 {
                    for m in region.lattice_points(left)? {
                        for (k, d) in h.nonzero() {
                            list.push(CharacterTerm { m: m.clone(), degree: (k + 1) as usize, dim: d });
                        }
                    }
                }
            }
        }
        let keep = dims.len().min(self.fan.dim() + 1).max(
            dims.iter().rposition(|d| !d.is_zero()).map(|p| p + 1).unwrap_or(0),
        );
        dims.truncate(keep.max(self.fan.dim() + 1));
        if let Some(list) = chars.as_mut() {
            list.sort_by(|a, b| (a.degree, &a.m).cmp(&(b.degree, &b.m)));
        }
        Ok(GradedCohomology { dims, characters: chars })
    }
}

/// `H^i_V(X, O(D))`.
pub fn local_cohomology(fan: &Fan, v: &SubvarietySpec, c: &[BigInt], field: Field) -> Result<GradedCohomology> {
    CohomologyEngine::new(fan, v, field)?.compute(c)
}

/// `H^i(X, O(D))`, the case `V = X`.
pub fn global_cohomology(fan: &Fan, c: &[BigInt], field: Field) -> Result<GradedCohomology> {
    CohomologyEngine::global(fan, field)?.compute(c)
}

/// `χ(O(D)) = Σ (-1)^i h^i`.
pub fn euler_characteristic(fan: &Fan, c: &[BigInt]) -> Result<i64> {
    if !fan.is_complete() {
        return Err(Error::Precondition("Euler characteristic needs a complete fan".into()));
    }
    let h = global_cohomology(fan, c, Field::Rational)?;
    h.euler().ok_or_else(|| Error::Precondition("infinite cohomology on a complete fan".into()))
}

/// Lattice points of `P_D = {m : l_i(m) >= -c_i}`.
pub fn section_polytope_count(fan: &Fan, c: &[BigInt]) -> Result<Dim> {
    LatticeRegion::new(fan, &to_i64(c)?, 0).lattice_count()
}

/// Dimension of the rational polytope `P_D`, `-1` when empty.
pub fn section_polytope_dimension(fan: &Fan, c: &[BigInt]) -> Result<i64> {
    let c = to_i64(c)?;
    let d = fan.dim();
    // P_D itself, not its lattice hull: rows l_i(m) + c_i t >= 0
    let mut rows: Vec<Vector> = fan
        .rays()
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|&x| BigInt::from(x)).chain([BigInt::from(c[i])]).collect())
        .collect();
    let mut t = vec![BigInt::zero(); d + 1];
    t[d] = BigInt::from(1);
    rows.push(t);
    let (rays, lin) = generators_of(d + 1, &rows, &[]);
    if !rays.iter().any(|r| r[d].is_positive()) {
        return Ok(-1);
    }
    let all: Vec<Vec<BigInt>> = rays.into_iter().chain(lin.iter().cloned()).chain(lin.iter().map(|l| l.iter().map(|x| -x).collect())).collect();
    let m = IntMatrix::from_rows(d + 1, &all);
    Ok(m.rank() as i64 - 1)
}

/// `h^i(D) = h^{d-i}(K_X - D)` for all `i`; requires a complete fan and a
/// `Q`-Cartier class so that `O(D)` is maximal Cohen–Macaulay.
pub fn serre_duality_check(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    if !fan.is_complete() {
        return Err(Error::Precondition("duality needs a complete fan".into()));
    }
    if !is_q_cartier(fan, c).q_cartier {
        return Err(Error::Precondition("duality is only asserted for Q-Cartier classes".into()));
    }
    let engine = CohomologyEngine::global(fan, Field::Rational)?;
    let h = engine.compute(c)?;
    let dual: Vec<BigInt> = c.iter().map(|x| -x - 1).collect();
    let k = engine.compute(&dual)?;
    let d = fan.dim();
    Ok((0..=d).all(|i| h.get(i) == k.get(d - i)))
}

/// Fibrational circuits `𝒞` with `D ∈ H_𝒞`.
pub fn fib(fan: &Fan, c: &[BigInt]) -> Vec<Subset> {
    enumerate_circuits(fan.ray_matrix())
        .into_iter()
        .filter(|k| k.is_fibrational() && k.phi(c).is_zero())
        .map(|k| k.support)
        .collect()
}

/// Iitaka dimension `κ(D) = d - rk L_T` of a nef class, `T` the union
/// of `fib(D)`.
pub fn iitaka_dimension(fan: &Fan, group: &ClassGroup, c: &[BigInt]) -> Result<usize> {
    let nef = NefCone::compute(fan, group)?;
    let x: Vec<BigRational> = group.rational_of(c);
    if !nef.contains(&x) {
        return Err(Error::Precondition("class is not nef".into()));
    }
    let t = fib(fan, c).into_iter().fold(0, |a, b| a | b);
    Ok(fan.dim() - fan.rows(t).rank())
}

/// `H^i(X, O(-D)) = 0` for `i ≠ κ(D)` when `D` is nef.
pub fn antinef_vanishing_check(fan: &Fan, group: &ClassGroup, c: &[BigInt]) -> Result<bool> {
    let kappa = iitaka_dimension(fan, group, c)?;
    let neg: Vec<BigInt> = c.iter().map(|x| -x).collect();
    let h = global_cohomology(fan, &neg, Field::Rational)?;
    Ok(h.support().iter().all(|&i| i == kappa))
}

/// Relative complex pair `(Δ̂_I, Δ̂_{V,I})` for inspection.
pub fn signature_pair(fan: &Fan, v: &SubvarietySpec, sig: Subset) -> Result<(SimplicialComplex, SimplicialComplex)> {
    Ok((fan.simplicial_model().full_subcomplex(sig), fan.subvariety_complex(v)?.full_subcomplex(sig)))
}
