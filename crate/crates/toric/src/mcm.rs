//! Rank-one maximal Cohen–Macaulay modules on affine toric varieties and
//! the triangulation criteria.
//!
//! `O(D)` is MCM when `H^i_x(O(D)) = 0` for `i < d`, with `x` the torus
//! fixed point. Triangulations of `σ` on its own rays are the small
//! resolutions `π: X̃ → X`; the pushforward `R^iπ_* O(π^{-1}D)` is the
//! global cohomology of the same coefficient vector on the triangulated
//! fan.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::circuits::{enumerate_circuits, OrientedCircuit};
use crate::classgroup::{is_q_cartier, ClassGroup};
use crate::cohomology::{CohomologyEngine, GradedCohomology};
use crate::fan::{indices_of, mask_of, Fan, Subset, SubvarietySpec};
use crate::frobenius::{window_classes, CircuitQuotient};
use crate::homology::Field;
use crate::lattice::{integer_kernel, GroupElement};
use crate::polyhedra::{dot, Cone, Vector};
use crate::{Error, Result};

/// Largest number of bases for the combinatorial triangulation search.
pub const MAX_BASES_FOR_SEARCH: usize = 24;

/// Checks that the fan is a single full-dimensional cone on all its rays.
pub fn require_affine(fan: &Fan) -> Result<()> {
    if fan.max_cones().len() != 1 || fan.max_cones()[0] != fan.all_rays() || fan.rank() != fan.dim() {
        return Err(Error::Precondition("needs a single full-dimensional cone".into()));
    }
    Ok(())
}

/// The torus fixed point as a subvariety.
pub fn fixed_point(fan: &Fan) -> SubvarietySpec {
    SubvarietySpec { cones: vec![fan.all_rays()] }
}

/// Local cohomology at the fixed point, reused across classes.
#[derive(Clone, Debug)]
pub struct McmTester {
    engine: CohomologyEngine,
    d: usize,
}

impl McmTester {
    pub fn new(fan: &Fan) -> Result<Self> {
        require_affine(fan)?;
        Ok(McmTester { engine: CohomologyEngine::new(fan, &fixed_point(fan), Field::Rational)?, d: fan.dim() })
    }

    pub fn local(&self, c: &[BigInt]) -> Result<GradedCohomology> {
        self.engine.compute(c)
    }

    pub fn is_mcm(&self, c: &[BigInt]) -> Result<bool> {
        let h = self.local(c)?;
        Ok((0..self.d).all(|i| h.get(i).is_zero()))
    }
}

pub fn is_mcm(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    McmTester::new(fan)?.is_mcm(c)
}

/// `max(8, 2·max |Gale coordinate|)`.
pub fn default_radius(group: &ClassGroup) -> i64 {
    let m = group
        .gale_transform()
        .iter()
        .flat_map(|g| g.free.iter().map(|x| x.abs().to_i64().unwrap_or(i64::MAX / 4)))
        .max()
        .unwrap_or(0);
    (2 * m).max(8)
}

#[derive(Clone, Debug)]
pub struct McmEnumeration {
    pub radius: i64,
    pub classes: Vec<GroupElement>,
    /// Classes found only in the window enlarged by half.
    pub outside: Vec<GroupElement>,
}

impl McmEnumeration {
    pub fn is_stable(&self) -> bool {
        self.outside.is_empty()
    }
}

/// MCM classes with free coordinates in `[-radius, radius]^r`, plus the
/// stability check on the window of radius `⌈1.5·radius⌉`.
pub fn enumerate_mcm(fan: &Fan, group: &ClassGroup, radius: Option<i64>) -> Result<McmEnumeration> {
    let tester = McmTester::new(fan)?;
    let radius = radius.unwrap_or_else(|| default_radius(group));
    let big = (3 * radius + 1) / 2;
    let mut classes = Vec::new();
    let mut outside = Vec::new();
    for class in window_classes(group, big) {
        if tester.is_mcm(&group.lift(&class))? {
            if class.free.iter().all(|x| x.abs() <= BigInt::from(radius)) {
                classes.push(class);
            } else {
                outside.push(class);
            }
        }
    }
    Ok(McmEnumeration { radius, classes, outside })
}

/// A simplicial subdivision of `σ` using only its rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    /// Maximal simplices, sorted.
    pub cones: Vec<Subset>,
    /// Heights inducing it, when regular.
    pub heights: Option<Vec<BigInt>>,
}

impl Triangulation {
    pub fn fan(&self, cone: &Fan) -> Result<Fan> {
        let cones: Vec<Vec<usize>> = self.cones.iter().map(|&s| indices_of(s)).collect();
        Fan::with_dim(cone.dim(), cone.rays().to_vec(), cones)
    }

    pub fn is_regular(&self) -> bool {
        self.heights.is_some()
    }
}

impl std::fmt::Display for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self
            .cones
            .iter()
            .map(|&s| format!("{{{}}}", indices_of(s).iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", cells.join(" "))
    }
}

fn rays_big(fan: &Fan, s: Subset) -> Vec<Vector> {
    indices_of(s).iter().map(|&i| fan.ray(i).iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn is_basis(fan: &Fan, s: Subset) -> bool {
    s.count_ones() as usize == fan.dim() && fan.rows(s).rank() == fan.dim()
}

/// Pulling triangulation: `ρ_i` joined with the facets not containing it,
/// each facet pulled recursively at its lowest ray.
pub fn pulling_triangulation(fan: &Fan, i: usize) -> Result<Triangulation> {
    require_affine(fan)?;
    if i >= fan.n() {
        return Err(Error::InvalidInput(format!("ray {} out of range", i + 1)));
    }
    let mut cells = pull(fan, fan.all_rays(), Some(i));
    cells.sort();
    let t = Triangulation { cones: cells, heights: None };
    Ok(certify(fan, t))
}

fn pull(fan: &Fan, set: Subset, first: Option<usize>) -> Vec<Subset> {
    let k = fan.rows(set).rank();
    if set.count_ones() as usize == k {
        return vec![set];
    }
    let v = first.unwrap_or_else(|| indices_of(set)[0]);
    let cone = Cone::from_generators(fan.dim(), &rays_big(fan, set));
    let mut out = Vec::new();
    for f in &cone.facets {
        let on: Subset = mask_of(&indices_of(set).into_iter().filter(|&j| {
            let r: Vec<BigInt> = fan.ray(j).iter().map(|&x| BigInt::from(x)).collect();
            dot(f, &r).is_zero()
        }).collect::<Vec<_>>());
        if on & (1 << v) != 0 {
            continue;
        }
        for cell in pull(fan, on, None) {
            out.push(cell | (1 << v));
        }
    }
    out
}

/// Wall functionals of a triangulation on height vectors: `ω` induces it
/// iff every functional is positive at `ω`.
fn height_inequalities(fan: &Fan, cells: &[Subset]) -> Vec<Vector> {
    let n = fan.n();
    let mut out = Vec::new();
    for &s in cells {
        for j in (0..n).filter(|j| s & (1 << j) == 0) {
            // relation Σ_{S∪j} w_k l_k = 0 with w_j > 0
            let set = s | (1 << j);
            let idx = indices_of(set);
            let k = integer_kernel(&fan.rows(set));
            if k.nrows() != 1 {
                continue;
            }
            let row = k.row(0);
            let pos = idx.iter().position(|&t| t == j).expect("j in set");
            let sign = if row[pos].is_negative() { -BigInt::one() } else { BigInt::one() };
            let mut w = vec![BigInt::zero(); n];
            for (a, &t) in row.iter().zip(&idx) {
                w[t] = a * &sign;
            }
            out.push(w);
        }
    }
    out
}

/// Attaches heights when the triangulation is regular.
fn certify(fan: &Fan, mut t: Triangulation) -> Triangulation {
    let ineqs = height_inequalities(fan, &t.cones);
    // heights modulo linear functions: work in Z^n directly
    let cone = Cone::from_inequalities(fan.n(), &ineqs, &[]);
    let mut interior = vec![BigInt::zero(); fan.n()];
    for r in &cone.rays {
        for (a, b) in interior.iter_mut().zip(r) {
            *a += b;
        }
    }
    t.heights = if ineqs.iter().all(|f| dot(f, &interior).is_positive()) { Some(interior) } else { None };
    if let Some(h) = &t.heights {
        debug_assert_eq!(induced_triangulation(fan, h).as_deref(), Some(&t.cones[..]));
    }
    t
}

/// The subdivision induced by heights `ω`, if it is a triangulation.
pub fn induced_triangulation(fan: &Fan, omega: &[BigInt]) -> Option<Vec<Subset>> {
    let n = fan.n();
    let d = fan.dim();
    let mut cells = Vec::new();
    for s in (0..(1u32 << n)).filter(|s| s.count_ones() as usize == d) {
        if !is_basis(fan, s) {
            continue;
        }
        // u with u(l_i) = ω_i on S
        let idx = indices_of(s);
        let a = fan.rows(s);
        let b: Vec<BigInt> = idx.iter().map(|&i| omega[i].clone()).collect();
        let u = crate::lattice::solve_rational(&a, &b)?;
        let mut lower = true;
        let mut tie = false;
        for j in (0..n).filter(|j| s & (1 << j) == 0) {
            let val: BigRational = fan.ray(j).iter().zip(&u).map(|(&x, y)| y * BigRational::from(BigInt::from(x))).sum();
            let w = BigRational::from(omega[j].clone());
            if val > w {
                lower = false;
                break;
            }
            tie |= val == w;
        }
        if lower {
            if tie {
                // a lower cell with more than d rays: not a triangulation
                return None;
            }
            cells.push(s);
        }
    }
    cells.sort();
    Some(cells)
}

/// `|det|` of each cell relative to a cross section; the sum is the
/// normalized volume of `σ ∩ {h = 1}` times `d!`.
fn section_volume(fan: &Fan, cells: &[Subset], h: &[BigInt]) -> BigRational {
    cells
        .iter()
        .map(|&s| {
            let det = BigRational::from(fan.rows(s).determinant().abs());
            let prod = indices_of(s).iter().fold(BigRational::one(), |p, &i| {
                let r: Vec<BigInt> = fan.ray(i).iter().map(|&x| BigInt::from(x)).collect();
                p * BigRational::from(dot(h, &r))
            });
            det / prod
        })
        .sum()
}

fn interior_functional(fan: &Fan) -> Vec<BigInt> {
    let cone = Cone::from_generators(fan.dim(), &rays_big(fan, fan.all_rays()));
    let mut h = vec![BigInt::zero(); fan.dim()];
    for f in &cone.facets {
        for (a, b) in h.iter_mut().zip(f) {
            *a += b;
        }
    }
    h
}

/// Cells meet properly: no oriented circuit has its positive part in one
/// cell and its negative part in another.
fn proper_intersections(cells: &[Subset], circuits: &[OrientedCircuit]) -> bool {
    for (a, &s) in cells.iter().enumerate() {
        for &t in &cells[a + 1..] {
            for oc in circuits {
                let (p, m) = (oc.plus(), oc.minus());
                if (p & !s == 0 && m & !t == 0) || (p & !t == 0 && m & !s == 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// All triangulations of `σ` on its rays, by search over sets of bases;
/// each result carries heights iff it is regular.
pub fn all_triangulations(fan: &Fan) -> Result<Vec<Triangulation>> {
    require_affine(fan)?;
    let n = fan.n();
    let d = fan.dim();
    let bases: Vec<Subset> = (0..(1u32 << n)).filter(|&s| s.count_ones() as usize == d && is_basis(fan, s)).collect();
    if bases.len() > MAX_BASES_FOR_SEARCH {
        return Err(Error::ScaleLimit(format!("{} bases", bases.len())));
    }
    let circuits: Vec<OrientedCircuit> =
        enumerate_circuits(fan.ray_matrix()).iter().flat_map(|c| c.orientations()).collect();
    let h = interior_functional(fan);
    let reference = pull(fan, fan.all_rays(), Some(0));
    let target = section_volume(fan, &reference, &h);
    let vols: Vec<BigRational> = bases.iter().map(|&b| section_volume(fan, &[b], &h)).collect();
    let mut out = Vec::new();
    // depth-first over bases in order, keeping cells pairwise proper
    fn rec(
        k: usize,
        chosen: &mut Vec<usize>,
        vol: BigRational,
        bases: &[Subset],
        vols: &[BigRational],
        target: &BigRational,
        circuits: &[OrientedCircuit],
        out: &mut Vec<Vec<Subset>>,
    ) {
        if &vol == target {
            out.push(chosen.iter().map(|&i| bases[i]).collect());
            return;
        }
        if k == bases.len() || &vol > target {
            return;
        }
        let ok = chosen.iter().all(|&i| proper_intersections(&[bases[i], bases[k]], circuits));
        if ok {
            chosen.push(k);
            rec(k + 1, chosen, &vol + &vols[k], bases, vols, target, circuits, out);
            chosen.pop();
        }
        rec(k + 1, chosen, vol, bases, vols, target, circuits, out);
    }
    let mut found = Vec::new();
    rec(0, &mut Vec::new(), BigRational::zero(), &bases, &vols, &target, &circuits, &mut found);
    for mut cells in found {
        cells.sort();
        out.push(certify(fan, Triangulation { cones: cells, heights: None }));
    }
    out.sort_by(|a, b| a.cones.cmp(&b.cones));
    Ok(out)
}

/// Regular triangulations by sampling heights from the class group: for
/// each integral class in `[-radius, radius]^r` the lifted heights are
/// tested and generic ones kept.
pub fn regular_triangulations_by_heights(fan: &Fan, group: &ClassGroup, radius: i64) -> Result<Vec<Triangulation>> {
    require_affine(fan)?;
    if fan.n() - fan.dim() > 3 {
        return Err(Error::ScaleLimit("height sampling supports n - d <= 3".into()));
    }
    let h = interior_functional(fan);
    let reference = pull(fan, fan.all_rays(), Some(0));
    let target = section_volume(fan, &reference, &h);
    let mut seen: BTreeSet<Vec<Subset>> = BTreeSet::new();
    let mut out = Vec::new();
    for class in window_classes(group, radius) {
        let omega = group.lift(&class);
        let Some(cells) = induced_triangulation(fan, &omega) else { continue };
        if section_volume(fan, &cells, &h) != target || !seen.insert(cells.clone()) {
            continue;
        }
        out.push(Triangulation { cones: cells, heights: Some(omega) });
    }
    out.sort_by(|a, b| a.cones.cmp(&b.cones));
    Ok(out)
}

/// Regular triangulations: the regular members of `all_triangulations`.
pub fn regular_triangulations(fan: &Fan) -> Result<Vec<Triangulation>> {
    Ok(all_triangulations(fan)?.into_iter().filter(|t| t.is_regular()).collect())
}

/// `R^iπ_* O(π^{-1}D)` as global cohomology on the triangulated fan.
pub fn pushforward_vanishing(fan: &Fan, t: &Triangulation, c: &[BigInt]) -> Result<GradedCohomology> {
    let tf = t.fan(fan)?;
    CohomologyEngine::global(&tf, Field::Rational)?.compute(c)
}

/// Precomputed triangulation engines for window scans.
#[derive(Clone, Debug)]
pub struct PushforwardSet {
    pub triangulations: Vec<Triangulation>,
    engines: Vec<CohomologyEngine>,
}

impl PushforwardSet {
    pub fn new(fan: &Fan, triangulations: Vec<Triangulation>) -> Result<Self> {
        let engines = triangulations
            .iter()
            .map(|t| CohomologyEngine::global(&t.fan(fan)?, Field::Rational))
            .collect::<Result<_>>()?;
        Ok(PushforwardSet { triangulations, engines })
    }

    /// Index of the first triangulation with nonvanishing higher
    /// pushforward.
    pub fn witness(&self, c: &[BigInt]) -> Result<Option<usize>> {
        for (k, e) in self.engines.iter().enumerate() {
            if !e.compute(c)?.higher_vanish() {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug)]
pub struct McmReport {
    pub mcm: bool,
    pub all_triangulations_vanish: bool,
    pub witness: Option<Triangulation>,
    /// Every facet of `σ` is simplicial.
    pub simplicial_facets: bool,
    pub q_cartier: bool,
}

pub fn facets_simplicial(fan: &Fan) -> bool {
    let cone = Cone::from_generators(fan.dim(), &rays_big(fan, fan.all_rays()));
    cone.facets.iter().all(|f| {
        let on = (0..fan.n())
            .filter(|&j| {
                let r: Vec<BigInt> = fan.ray(j).iter().map(|&x| BigInt::from(x)).collect();
                dot(f, &r).is_zero()
            })
            .count();
        on == fan.dim() - 1
    })
}

/// MCM property next to pushforward vanishing over the regular
/// triangulations.
pub fn mcm_criterion_report(fan: &Fan, c: &[BigInt]) -> Result<McmReport> {
    let tester = McmTester::new(fan)?;
    let set = PushforwardSet::new(fan, regular_triangulations(fan)?)?;
    let w = set.witness(c)?;
    Ok(McmReport {
        mcm: tester.is_mcm(c)?,
        all_triangulations_vanish: w.is_none(),
        witness: w.map(|k| set.triangulations[k].clone()),
        simplicial_facets: facets_simplicial(fan),
        q_cartier: is_q_cartier(fan, c).q_cartier,
    })
}

/// The single circuit of a cone on `d + 1` rays, checked to have at least
/// two rays on each side.
pub fn cone_circuit(fan: &Fan) -> Result<OrientedCircuit> {
    require_affine(fan)?;
    let circuits = enumerate_circuits(fan.ray_matrix());
    if fan.n() != fan.dim() + 1 || circuits.len() != 1 || circuits[0].support != fan.all_rays() {
        return Err(Error::Precondition("rays must form a single circuit".into()));
    }
    let oc = circuits[0].positive();
    if oc.plus().count_ones() < 2 || oc.minus().count_ones() < 2 {
        return Err(Error::Precondition("both sides of the circuit need two rays".into()));
    }
    Ok(oc)
}

/// MCM on a circuit cone by Frobenius membership: `D ∈ F_𝔠 ∩ F_{-𝔠}`.
pub fn circuit_cone_mcm(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    let oc = cone_circuit(fan)?;
    let q = CircuitQuotient::new(fan.ray_matrix(), &oc)?;
    Ok(q.in_f(&oc, c)? && q.in_f(&oc.negate(), c)?)
}

/// The two small resolutions of a circuit cone: `{𝒞 ∖ j : j ∈ 𝔠^±}`.
pub fn small_resolutions(fan: &Fan) -> Result<[Triangulation; 2]> {
    let oc = cone_circuit(fan)?;
    let all = fan.all_rays();
    let make = |side: Subset| {
        let mut cones: Vec<Subset> = indices_of(side).iter().map(|&j| all & !(1 << j)).collect();
        cones.sort();
        certify(fan, Triangulation { cones, heights: None })
    };
    Ok([make(oc.plus()), make(oc.minus())])
}

/// MCM on a circuit cone by vanishing of both pushforwards.
pub fn circuit_cone_mcm_by_resolutions(fan: &Fan, c: &[BigInt]) -> Result<bool> {
    for t in small_resolutions(fan)? {
        if !pushforward_vanishing(fan, &t, c)?.higher_vanish() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `K_X - D` as a coefficient vector.
pub fn dual_class(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().map(|x| -x - BigInt::one()).collect()
}

/// The cone is Gorenstein: `K_X` is Cartier.
pub fn is_gorenstein(fan: &Fan) -> bool {
    let k = vec![-BigInt::one(); fan.n()];
    crate::classgroup::is_cartier(fan, &k)
}
