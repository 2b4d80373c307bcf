//! Exact polyhedral cones via the double description method.
//!
//! A cone is kept in both representations: generators (extreme rays plus a
//! lineality basis) and inequalities (facet normals `a·x >= 0` plus
//! equations `a·x = 0`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::{primitive, IntMatrix};

pub type Vector = Vec<BigInt>;

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(a: &BigInt, u: &[BigInt], b: &BigInt, v: &[BigInt]) -> Vector {
    u.iter().zip(v).map(|(x, y)| a * x + b * y).collect()
}

fn normalize(v: Vector) -> Vector {
    primitive(&v)
}

/// Generators of `{x : a·x >= 0 for all a in ineqs, e·x = 0 for all e in eqs}`.
/// Returns `(extreme_rays, lineality_basis)`; rays are primitive.
pub fn generators_of(dim: usize, ineqs: &[Vector], eqs: &[Vector]) -> (Vec<Vector>, Vec<Vector>) {
    let mut lin: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Vector> = Vec::new();
    // equations are a pair of opposite inequalities
    let mut constraints: Vec<Vector> = Vec::new();
    for e in eqs {
        constraints.push(e.clone());
        constraints.push(e.iter().map(|x| -x).collect());
    }
    constraints.extend(ineqs.iter().cloned());
    let mut processed: Vec<Vector> = Vec::new();

    for a in &constraints {
        if let Some(pos) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.remove(pos);
            let mut a0 = dot(a, &l0);
            if a0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                a0 = -a0;
            }
            for l in lin.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = normalize(combine(&a0, l, &-al, &l0));
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, r);
                if !ar.is_zero() {
                    *r = normalize(combine(&a0, r, &-ar, &l0));
                }
            }
            rays.push(normalize(l0));
            processed.push(a.clone());
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            processed.push(a.clone());
            continue;
        }
        let zero_sets: Vec<Vec<bool>> =
            rays.iter().map(|r| processed.iter().map(|p| dot(p, r).is_zero()).collect()).collect();
        let mut next: Vec<Vector> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                next.push(r.clone());
            }
        }
        for p in 0..rays.len() {
            if !vals[p].is_positive() {
                continue;
            }
            for q in 0..rays.len() {
                if !vals[q].is_negative() {
                    continue;
                }
                if !adjacent(&zero_sets, p, q) {
                    continue;
                }
                let nr = combine(&-&vals[q], &rays[p], &vals[p], &rays[q]);
                next.push(normalize(nr));
            }
        }
        rays = next;
        processed.push(a.clone());
    }
    rays.sort();
    rays.dedup();
    (rays, lin)
}

fn adjacent(zero_sets: &[Vec<bool>], p: usize, q: usize) -> bool {
    let common: Vec<usize> =
        (0..zero_sets[p].len()).filter(|&k| zero_sets[p][k] && zero_sets[q][k]).collect();
    for (r, z) in zero_sets.iter().enumerate() {
        if r == p || r == q {
            continue;
        }
        if common.iter().all(|&k| z[k]) {
            return false;
        }
    }
    true
}

/// A rational polyhedral cone in `Q^dim` held in both representations.
#[derive(Clone, Debug)]
pub struct Cone {
    pub dim: usize,
    pub rays: Vec<Vector>,
    pub lineality: Vec<Vector>,
    /// Facet normals: `a·x >= 0`, irredundant.
    pub facets: Vec<Vector>,
    /// Equations of the linear span: `e·x = 0`.
    pub equations: Vec<Vector>,
}

impl Cone {
    pub fn from_generators(dim: usize, gens: &[Vector]) -> Cone {
        let (facets, equations) = generators_of(dim, gens, &[]);
        let (rays, lineality) = generators_of(dim, &facets, &equations);
        Cone { dim, rays, lineality, facets, equations }
    }

    pub fn from_i64_generators(dim: usize, gens: &[Vec<i64>]) -> Cone {
        let g: Vec<Vector> = gens.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Cone::from_generators(dim, &g)
    }

    pub fn from_inequalities(dim: usize, ineqs: &[Vector], eqs: &[Vector]) -> Cone {
        let (rays, lineality) = generators_of(dim, ineqs, eqs);
        let mut gens = rays.clone();
        for l in &lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        let (facets, equations) = generators_of(dim, &gens, &[]);
        Cone { dim, rays, lineality, facets, equations }
    }

    pub fn whole_space(dim: usize) -> Cone {
        Cone::from_inequalities(dim, &[], &[])
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|a| !dot(a, x).is_negative())
    }

    /// Interior relative to the linear span.
    pub fn contains_relative_interior(&self, x: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero()) && self.facets.iter().all(|a| dot(a, x).is_positive())
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.dim, &ineqs, &eqs)
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// The cone is contained in `other`.
    pub fn is_subset_of(&self, other: &Cone) -> bool {
        self.rays.iter().all(|r| other.contains(r))
            && self.lineality.iter().all(|l| other.contains(l) && other.contains(&l.iter().map(|x| -x).collect::<Vec<_>>()))
    }

    pub fn equals(&self, other: &Cone) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    /// Facets containing the point.
    pub fn tight_facets(&self, x: &[BigInt]) -> Vec<usize> {
        (0..self.facets.len()).filter(|&k| dot(&self.facets[k], x).is_zero()).collect()
    }
}

/// Faces of the cone spanned by the given generator rows, as sets of
/// generator indices (bitmasks), including the full set and the set of
/// generators on the minimal face. Generators must be nonzero.
pub fn face_lattice(gens: &IntMatrix) -> Vec<u32> {
    let dim = gens.ncols();
    let rows = gens.to_rows();
    let cone = Cone::from_generators(dim, &rows);
    let full: u32 = if rows.is_empty() { 0 } else { (1u32 << rows.len()) - 1 };
    let facet_sets: Vec<u32> = cone
        .facets
        .iter()
        .map(|a| {
            rows.iter().enumerate().filter(|(_, r)| dot(a, r).is_zero()).fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .collect();
    let mut faces = vec![full];
    let mut frontier = vec![full];
    while let Some(f) = frontier.pop() {
        for &fs in &facet_sets {
            let g = f & fs;
            if !faces.contains(&g) {
                faces.push(g);
                frontier.push(g);
            }
        }
    }
    faces.sort_by_key(|m| (m.count_ones(), *m));
    faces
}

/// Solve the square system by Cramer's rule; returns `(numerators, det)`
/// with `x = numerators / det`, or `None` when singular.
pub fn cramer(a: &IntMatrix, b: &[BigInt]) -> Option<(Vec<BigInt>, BigInt)> {
    let det = a.determinant();
    if det.is_zero() {
        return None;
    }
    let n = a.ncols();
    let mut nums = Vec::with_capacity(n);
    for j in 0..n {
        let mut m = a.clone();
        for i in 0..n {
            m[(i, j)] = b[i].clone();
        }
        nums.push(m.determinant());
    }
    let (nums, det) = if det.is_negative() { (nums.iter().map(|x| -x).collect(), -det) } else { (nums, det) };
    let g = nums.iter().fold(det.clone(), |g, x| g.gcd(x));
    Some((nums.iter().map(|x| x / &g).collect(), det / g))
}
