//! Fans, their simplicial model and subcomplexes.
//!
//! Rays are indexed `0..n`; subsets of rays are bitmasks (`u32`), so fans
//! have at most 32 rays.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Deserialize;

use crate::circuits::{circuit_in_subset, Circuit};
use crate::lattice::IntMatrix;
use crate::polyhedra::{face_lattice, Cone};
use crate::{Error, Result};

pub type Subset = u32;

pub const MAX_RAYS: usize = 32;

pub fn mask_of(indices: &[usize]) -> Subset {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn indices_of(mask: Subset) -> Vec<usize> {
    (0..MAX_RAYS).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Formats a subset as 1-based labels, e.g. `{1,3}`.
pub fn fmt_subset(mask: Subset) -> String {
    let s: Vec<String> = indices_of(mask).iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", s.join(","))
}

/// All submasks of `m`, from `m` down to the empty set.
pub fn subsets_of(m: Subset) -> impl Iterator<Item = Subset> {
    // all submasks, including 0 and m
    let mut s = m;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & m;
        }
        Some(cur)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    RayDimension { ray: usize },
    ZeroRay { ray: usize },
    NonPrimitiveRay { ray: usize },
    DuplicateRayVector { first: usize, second: usize },
    IndexOutOfRange { cone: usize, index: usize },
    DuplicateRayInCone { cone: usize, index: usize },
    NotStronglyConvex { cone: usize },
    NotExtremal { cone: usize, ray: usize },
    BadIntersection { first: usize, second: usize },
    RedundantCone { cone: usize, contained_in: usize },
    RaysNotSpanning { rank: usize },
    TooManyRays,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DiagnosticKind::*;
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match &self.kind {
            RayDimension { ray } => write!(f, "{sev}: ray {} has the wrong length", ray + 1),
            ZeroRay { ray } => write!(f, "{sev}: ray {} is zero", ray + 1),
            NonPrimitiveRay { ray } => write!(f, "{sev}: non-primitive ray {}", ray + 1),
            DuplicateRayVector { first, second } => {
                write!(f, "{sev}: rays {} and {} coincide", first + 1, second + 1)
            }
            IndexOutOfRange { cone, index } => {
                write!(f, "{sev}: cone {} refers to missing ray index {index}", cone + 1)
            }
            DuplicateRayInCone { cone, index } => {
                write!(f, "{sev}: cone {} lists ray {} twice", cone + 1, index + 1)
            }
            NotStronglyConvex { cone } => write!(f, "{sev}: cone {} contains a line", cone + 1),
            NotExtremal { cone, ray } => {
                write!(f, "{sev}: ray {} is not an extremal ray of cone {}", ray + 1, cone + 1)
            }
            BadIntersection { first, second } => {
                write!(f, "{sev}: cones {} and {} do not meet in a common face", first + 1, second + 1)
            }
            RedundantCone { cone, contained_in } => {
                write!(f, "{sev}: cone {} is a face of cone {}", cone + 1, contained_in + 1)
            }
            RaysNotSpanning { rank } => write!(f, "{sev}: rays span a subspace of dimension {rank}"),
            TooManyRays => write!(f, "{sev}: more than {MAX_RAYS} rays"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Validation {
    pub diagnostics: Vec<Diagnostic>,
    pub complete: bool,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.diagnostics.iter().all(|d| d.severity != Severity::Error)
    }

    pub fn errors(&self) -> Vec<Diagnostic> {
        self.diagnostics.iter().filter(|d| d.severity == Severity::Error).cloned().collect()
    }
}

/// A rational polyhedral fan in `N = Z^d`.
#[derive(Clone, Debug)]
pub struct Fan {
    rays: Vec<Vec<i64>>,
    dim: usize,
    max_cones: Vec<Subset>,
    faces: Vec<Subset>,
    l: IntMatrix,
    complete: bool,
}

fn gcd_i64(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

fn rows_of(rays: &[Vec<i64>], mask: Subset) -> IntMatrix {
    let dim = rays.first().map_or(0, |r| r.len());
    let rows: Vec<Vec<i64>> = indices_of(mask).iter().map(|&i| rays[i].clone()).collect();
    IntMatrix::from_i64(dim, &rows)
}

/// Checks primitivity, cone convexity, face intersections and completeness.
pub fn validate(dim: usize, rays: &[Vec<i64>], max_cones: &[Vec<usize>]) -> Validation {
    let mut v = Validation::default();
    let err = |kind| Diagnostic { severity: Severity::Error, kind };
    let warn = |kind| Diagnostic { severity: Severity::Warning, kind };
    if rays.len() > MAX_RAYS {
        v.diagnostics.push(err(DiagnosticKind::TooManyRays));
        return v;
    }
    let mut rays_ok = true;
    for (i, r) in rays.iter().enumerate() {
        if r.len() != dim {
            v.diagnostics.push(err(DiagnosticKind::RayDimension { ray: i }));
            rays_ok = false;
        } else if r.iter().all(|&x| x == 0) {
            v.diagnostics.push(err(DiagnosticKind::ZeroRay { ray: i }));
            rays_ok = false;
        } else if gcd_i64(r) != 1 {
            v.diagnostics.push(err(DiagnosticKind::NonPrimitiveRay { ray: i }));
        }
    }
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i] == rays[j] {
                v.diagnostics.push(err(DiagnosticKind::DuplicateRayVector { first: i, second: j }));
            }
        }
    }
    let mut masks = Vec::new();
    let mut cones_ok = true;
    for (c, cone) in max_cones.iter().enumerate() {
        let mut m: Subset = 0;
        for &i in cone {
            if i >= rays.len() {
                v.diagnostics.push(err(DiagnosticKind::IndexOutOfRange { cone: c, index: i }));
                cones_ok = false;
            } else if m >> i & 1 == 1 {
                v.diagnostics.push(err(DiagnosticKind::DuplicateRayInCone { cone: c, index: i }));
            } else {
                m |= 1 << i;
            }
        }
        masks.push(m);
    }
    if !rays_ok || !cones_ok {
        return v;
    }
    let l = IntMatrix::from_i64(dim, rays);
    let rank = l.rank();
    if rank < dim {
        v.diagnostics.push(warn(DiagnosticKind::RaysNotSpanning { rank }));
    }

    let mut face_sets: Vec<Vec<Subset>> = Vec::new();
    let mut geometry: Vec<Cone> = Vec::new();
    let mut convex_ok = true;
    for (c, &m) in masks.iter().enumerate() {
        let sub = rows_of(rays, m);
        let cone = Cone::from_generators(dim, &sub.to_rows());
        if !cone.is_pointed() {
            v.diagnostics.push(err(DiagnosticKind::NotStronglyConvex { cone: c }));
            convex_ok = false;
            face_sets.push(Vec::new());
            geometry.push(cone);
            continue;
        }
        let local = face_lattice(&sub);
        let idx = indices_of(m);
        let global: Vec<Subset> =
            local.iter().map(|&f| indices_of(f).iter().fold(0, |acc, &k| acc | (1 << idx[k]))).collect();
        for &i in &idx {
            if !global.contains(&(1 << i)) {
                v.diagnostics.push(err(DiagnosticKind::NotExtremal { cone: c, ray: i }));
                convex_ok = false;
            }
        }
        face_sets.push(global);
        geometry.push(cone);
    }
    if !convex_ok {
        return v;
    }
    for a in 0..masks.len() {
        for b in 0..masks.len() {
            if a != b && masks[a] & masks[b] == masks[a] && face_sets[b].contains(&masks[a]) {
                v.diagnostics.push(warn(DiagnosticKind::RedundantCone { cone: a, contained_in: b }));
            }
        }
    }
    for a in 0..masks.len() {
        for b in a + 1..masks.len() {
            let s = masks[a] & masks[b];
            let mut ok = face_sets[a].contains(&s) && face_sets[b].contains(&s);
            if ok {
                let meet = geometry[a].intersect(&geometry[b]);
                let common = Cone::from_generators(dim, &rows_of(rays, s).to_rows());
                ok = meet.is_pointed() && meet.rays.iter().all(|r| common.contains(r));
            }
            if !ok {
                v.diagnostics.push(err(DiagnosticKind::BadIntersection { first: a, second: b }));
            }
        }
    }
    // complete iff every cone is full dimensional and every facet is shared by two cones
    let full = !masks.is_empty() && geometry.iter().all(|g| g.is_full_dimensional());
    let mut complete = full && rank == dim;
    if complete {
        let mut count: HashMap<Subset, usize> = HashMap::new();
        for (c, faces) in face_sets.iter().enumerate() {
            for &f in faces {
                if f != masks[c] && rows_of(rays, f).rank() + 1 == dim {
                    *count.entry(f).or_default() += 1;
                }
            }
        }
        complete = count.values().all(|&k| k == 2);
    }
    v.complete = complete && v.is_valid();
    v
}

impl Fan {
    /// Builds and validates a fan; any error diagnostic is fatal.
    pub fn new(rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        let dim = rays.first().map_or(0, |r| r.len());
        Fan::with_dim(dim, rays, max_cones)
    }

    pub fn with_dim(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        let val = validate(dim, &rays, &max_cones);
        if !val.is_valid() {
            return Err(Error::InvalidFan(val.errors()));
        }
        let l = IntMatrix::from_i64(dim, &rays);
        let mut masks: Vec<Subset> = max_cones.iter().map(|c| mask_of(c)).collect();
        let mut faces: Vec<Subset> = Vec::new();
        for &m in &masks {
            let sub = rows_of(&rays, m);
            let idx = indices_of(m);
            for f in face_lattice(&sub) {
                faces.push(indices_of(f).iter().fold(0, |acc, &k| acc | (1 << idx[k])));
            }
        }
        if masks.is_empty() {
            faces.push(0);
        }
        faces.sort_by_key(|m| (m.count_ones(), *m));
        faces.dedup();
        // drop listed cones that are faces of other listed cones
        let all = masks.clone();
        masks.retain(|&m| {
            !all.iter().any(|&o| o != m && o & m == m && {
                let sub = rows_of(&rays, o);
                let idx = indices_of(o);
                face_lattice(&sub)
                    .iter()
                    .any(|&f| indices_of(f).iter().fold(0u32, |acc, &k| acc | (1 << idx[k])) == m)
            })
        });
        masks.dedup();
        Ok(Fan { rays, dim, max_cones: masks, faces, l, complete: val.complete })
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[i64] {
        &self.rays[i]
    }

    pub fn n(&self) -> usize {
        self.rays.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn all_rays(&self) -> Subset {
        if self.n() == 0 {
            0
        } else {
            ((1u64 << self.n()) - 1) as Subset
        }
    }

    /// The matrix `L` whose rows are the rays.
    pub fn ray_matrix(&self) -> &IntMatrix {
        &self.l
    }

    /// Rows `L_I` for `I` a subset of rays.
    pub fn rows(&self, mask: Subset) -> IntMatrix {
        rows_of(&self.rays, mask)
    }

    pub fn max_cones(&self) -> &[Subset] {
        &self.max_cones
    }

    /// All cones of the fan as ray sets, the zero cone included.
    pub fn cones(&self) -> &[Subset] {
        &self.faces
    }

    pub fn is_cone(&self, mask: Subset) -> bool {
        self.faces.binary_search_by_key(&(mask.count_ones(), mask), |m| (m.count_ones(), *m)).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_simplicial(&self) -> bool {
        self.max_cones.iter().all(|&m| self.rows(m).rank() == m.count_ones() as usize)
    }

    pub fn rank(&self) -> usize {
        self.l.rank()
    }

    /// Geometric cone spanned by the rays in `mask`.
    pub fn cone_geometry(&self, mask: Subset) -> Cone {
        Cone::from_generators(self.dim, &self.rows(mask).to_rows())
    }

    /// The simplicial model: all `I` contained in the ray set of some cone.
    pub fn simplicial_model(&self) -> SimplicialComplex {
        SimplicialComplex::from_generators(self.n(), &self.max_cones)
    }

    /// Simplicial model of the complement of the subvariety `V`.
    pub fn subvariety_complex(&self, v: &SubvarietySpec) -> Result<SimplicialComplex> {
        for &t in &v.cones {
            if !self.is_cone(t) {
                return Err(Error::InvalidInput(format!("{} is not a cone of the fan", fmt_subset(t))));
            }
        }
        let kept: Vec<Subset> = self
            .faces
            .iter()
            .copied()
            .filter(|&s| !v.cones.iter().any(|&t| t & s == t && self.is_face_of(t, s)))
            .collect();
        Ok(SimplicialComplex::from_generators(self.n(), &kept))
    }

    /// `t` is a face of the cone `s` (both cones of the fan).
    pub fn is_face_of(&self, t: Subset, s: Subset) -> bool {
        // in a fan, a cone whose ray set lies inside another cone's is one of its faces
        t & s == t && self.is_cone(t) && self.is_cone(s)
    }

    /// Inner walls with their adjacent maximal cones and associated circuit.
    pub fn walls(&self) -> Result<Vec<Wall>> {
        if !self.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        let d = self.dim;
        let mut out = Vec::new();
        for a in 0..self.max_cones.len() {
            for b in a + 1..self.max_cones.len() {
                let (sa, sb) = (self.max_cones[a], self.max_cones[b]);
                if sa.count_ones() as usize != d || sb.count_ones() as usize != d {
                    continue;
                }
                let tau = sa & sb;
                if tau.count_ones() as usize + 1 != d {
                    continue;
                }
                let circuit = circuit_in_subset(&self.l, sa | sb)
                    .ok_or_else(|| Error::Precondition(format!("no circuit in {}", fmt_subset(sa | sb))))?;
                out.push(Wall { tau, cones: (a, b), circuit });
            }
        }
        Ok(out)
    }

    /// For a complete two-dimensional fan, the rays in counterclockwise order
    /// starting at ray 0.
    pub fn cyclic_order(&self) -> Result<Vec<usize>> {
        if self.dim != 2 || !self.complete {
            return Err(Error::Precondition("cyclic order needs a complete surface fan".into()));
        }
        let n = self.n();
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &m in &self.max_cones {
            let idx = indices_of(m);
            if idx.len() != 2 {
                return Err(Error::Precondition("surface cone without two rays".into()));
            }
            nbrs[idx[0]].push(idx[1]);
            nbrs[idx[1]].push(idx[0]);
        }
        let det = |i: usize, j: usize| self.rays[i][0] * self.rays[j][1] - self.rays[i][1] * self.rays[j][0];
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        while order.len() < n {
            let next = *nbrs[cur]
                .iter()
                .find(|&&j| j != prev && (prev != usize::MAX || det(cur, j) > 0))
                .ok_or_else(|| Error::Precondition("rays do not form a cycle".into()))?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Ok(order)
    }

    /// Integers `a_i` with `l_{i-1} + l_{i+1} + a_i l_i = 0`, indexed by ray.
    pub fn surface_selfintersections(&self) -> Result<Vec<i64>> {
        let order = self.cyclic_order()?;
        let n = order.len();
        let mut a = vec![0i64; n];
        let det = |p: &[i64], q: &[i64]| p[0] * q[1] - p[1] * q[0];
        for k in 0..n {
            let (p, i, q) = (order[(k + n - 1) % n], order[k], order[(k + 1) % n]);
            let (lp, li, lq) = (&self.rays[p], &self.rays[i], &self.rays[q]);
            if det(lp, li) != 1 || det(li, lq) != 1 {
                return Err(Error::Precondition(format!("wall at ray {} is not smooth", i + 1)));
            }
            let s = [lp[0] + lq[0], lp[1] + lq[1]];
            let c = if li[0] != 0 { -s[0] / li[0] } else { -s[1] / li[1] };
            if s[0] + c * li[0] != 0 || s[1] + c * li[1] != 0 {
                return Err(Error::Precondition(format!("wall at ray {} is not smooth", i + 1)));
            }
            a[i] = c;
        }
        Ok(a)
    }
}

/// An inner wall `tau = sigma ∩ sigma'` of a simplicial fan.
#[derive(Clone, Debug)]
pub struct Wall {
    pub tau: Subset,
    pub cones: (usize, usize),
    pub circuit: Circuit,
}

/// Torus invariant closed subvariety given by cones whose orbit closures
/// make up `V`. The empty list is `V = ∅`; the zero cone gives `V = X`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubvarietySpec {
    pub cones: Vec<Subset>,
}

impl SubvarietySpec {
    pub fn empty() -> Self {
        SubvarietySpec { cones: Vec::new() }
    }

    /// `V = X`: cohomology with supports in `X` is ordinary cohomology.
    pub fn whole() -> Self {
        SubvarietySpec { cones: vec![0] }
    }

    pub fn from_cones(cones: &[Vec<usize>]) -> Self {
        SubvarietySpec { cones: cones.iter().map(|c| mask_of(c)).collect() }
    }

    pub fn is_whole(&self) -> bool {
        self.cones.contains(&0)
    }
}

/// Finite simplicial complex on vertices `0..n`, stored as a downward
/// closed family of bitmasks ordered by size, then value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Subset>,
}

fn face_key(m: &Subset) -> (u32, Subset) {
    (m.count_ones(), *m)
}

impl SimplicialComplex {
    /// The complex with no faces at all (not even the empty face).
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, faces: Vec::new() }
    }

    /// The complex whose only face is the empty face.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![0] }
    }

    /// The downward closure of the given faces.
    pub fn from_generators(n: usize, gens: &[Subset]) -> Self {
        let mut all: Vec<Subset> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for &g in gens {
            if seen.contains(&g) {
                continue;
            }
            for s in subsets_of(g) {
                if seen.insert(s) {
                    all.push(s);
                }
            }
        }
        all.sort_by_key(face_key);
        SimplicialComplex { n, faces: all }
    }

    /// Builds a complex from an already downward closed family.
    pub fn from_faces(n: usize, mut faces: Vec<Subset>) -> Self {
        faces.sort_by_key(face_key);
        faces.dedup();
        let c = SimplicialComplex { n, faces };
        debug_assert!(c.is_downward_closed());
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Subset] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.faces.binary_search_by_key(&face_key(&f), face_key).is_ok()
    }

    /// Faces of dimension `k` (that is, with `k + 1` vertices).
    pub fn faces_of_dim(&self, k: i64) -> Vec<Subset> {
        self.faces.iter().copied().filter(|f| f.count_ones() as i64 == k + 1).collect()
    }

    /// Largest face dimension; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dimension(&self) -> i64 {
        self.faces.last().map_or(-2, |f| f.count_ones() as i64 - 1)
    }

    pub fn vertices(&self) -> Subset {
        self.faces.iter().fold(0, |m, f| m | f)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| indices_of(f).iter().all(|&i| self.contains(f & !(1 << i))))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.iter().all(|&f| other.contains(f))
    }

    /// Faces contained in `I`.
    pub fn full_subcomplex(&self, i: Subset) -> SimplicialComplex {
        SimplicialComplex { n: self.n, faces: self.faces.iter().copied().filter(|&f| f & !i == 0).collect() }
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Subset> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| !self.faces.iter().any(|&g| g != f && g & f == f))
            .collect()
    }

    /// Cone over the complex with apex a new vertex `n`.
    pub fn cone(&self) -> SimplicialComplex {
        assert!(self.n < MAX_RAYS);
        let apex = 1 << self.n;
        let mut faces = self.faces.clone();
        faces.extend(self.faces.iter().map(|f| f | apex));
        if faces.is_empty() {
            faces.push(0);
        }
        SimplicialComplex::from_faces(self.n + 1, faces)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        let facets: Vec<String> = self.facets().iter().map(|&m| fmt_subset(m)).collect();
        write!(f, "<{}>", facets.join(" "))
    }
}

/// Fan description as stored in fixture files.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default)]
    pub subvariety: Option<Vec<Vec<usize>>>,
    /// Ambient divisor vectors whose classes form the preferred basis of
    /// the free part of the class group.
    #[serde(default)]
    pub class_basis: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub dim: Option<usize>,
}

impl FanFile {
    pub fn parse(text: &str) -> Result<FanFile> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<FanFile> {
        let text = std::fs::read_to_string(path)?;
        FanFile::parse(&text)
    }

    pub fn fan(&self) -> Result<Fan> {
        let dim = self.dim.or_else(|| self.rays.first().map(|r| r.len())).unwrap_or(0);
        Fan::with_dim(dim, self.rays.clone(), self.max_cones.clone())
    }

    pub fn subvariety_spec(&self) -> SubvarietySpec {
        self.subvariety.as_ref().map(|c| SubvarietySpec::from_cones(c)).unwrap_or_default()
    }

    pub fn class_basis_big(&self) -> Option<Vec<Vec<BigInt>>> {
        self.class_basis
            .as_ref()
            .map(|b| b.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p2() -> Fan {
        Fan::new(vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap()
    }

    pub(crate) fn f3() -> Fan {
        Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap()
    }

    fn mcm1() -> Fan {
        Fan::new(
            vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![-1, -1, 1], vec![1, -1, 1]],
            vec![vec![0, 1, 2, 3, 4]],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(p2().is_complete());
        let m = mcm1();
        assert!(!m.is_complete());
        assert!(!m.is_simplicial());
        let bad = validate(2, &[vec![2, 4], vec![0, 1]], &[vec![0, 1]]);
        assert!(!bad.is_valid());
        assert!(bad.diagnostics.iter().any(|d| d.kind == DiagnosticKind::NonPrimitiveRay { ray: 0 }));
    }

    #[test]
    fn overlapping_cones_rejected() {
        let v = validate(2, &[vec![1, 0], vec![0, 1], vec![1, 1]], &[vec![0, 1], vec![0, 2]]);
        assert!(!v.is_valid());
    }

    #[test]
    fn simplicial_models() {
        let k = p2().simplicial_model();
        assert_eq!(k.faces().len(), 7);
        assert!(!k.contains(0b111));
        let f = f3().simplicial_model();
        assert_eq!(f.facets(), vec![0b0011, 0b0110, 0b1001, 0b1100]);
        let m = mcm1().simplicial_model();
        assert_eq!(m.faces().len(), 32);
    }

    #[test]
    fn full_subcomplexes() {
        let k = p2().simplicial_model();
        assert_eq!(k.full_subcomplex(0b011).facets(), vec![0b011]);
        let f = f3().simplicial_model().full_subcomplex(0b0101);
        assert_eq!(f.facets(), vec![0b0001, 0b0100]);
        assert_eq!(k.full_subcomplex(0), SimplicialComplex::empty(3));
    }

    #[test]
    fn subvariety_complexes() {
        let m = mcm1();
        let k = m.subvariety_complex(&SubvarietySpec { cones: vec![0b11111] }).unwrap();
        assert_eq!(k.facets(), vec![0b00011, 0b00110, 0b01100, 0b10001, 0b11000]);
        let f = f3();
        assert_eq!(f.subvariety_complex(&SubvarietySpec::empty()).unwrap(), f.simplicial_model());
        assert!(f.subvariety_complex(&SubvarietySpec::whole()).unwrap().is_void());
        assert!(f.subvariety_complex(&SubvarietySpec { cones: vec![0b0101] }).is_err());
    }

    #[test]
    fn walls_of_small_fans() {
        let w = f3().walls().unwrap();
        assert_eq!(w.len(), 4);
        let between = w.iter().find(|w| w.tau == 0b0001).unwrap();
        assert_eq!(between.circuit.support, 0b1010);
        assert!(p2().walls().unwrap().iter().all(|w| w.circuit.support == 0b111));
        let p1 = Fan::new(vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap();
        let w = p1.walls().unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].circuit.support, 0b11);
        assert!(p1.is_complete());
    }

    #[test]
    fn selfintersections() {
        assert_eq!(f3().surface_selfintersections().unwrap()[1], -3);
        // l1 + l2 = (1,1) = -l3, so the relation forces +1 at every ray of P2
        assert_eq!(p2().surface_selfintersections().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn fixture_parse() {
        let f = FanFile::parse("rays = [[1,0],[0,1],[-1,-1]]\nmax_cones = [[0,1],[1,2],[2,0]]\n").unwrap();
        assert!(f.fan().unwrap().is_complete());
    }
}
