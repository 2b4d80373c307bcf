//! The discriminantal arrangement in `A_Q`: hyperplanes `H_𝒞`, half
//! spaces `H_𝔠`, hulls of named cones, nef and Mori cones, and secondary
//! cones `K_B^I`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::circuits::{circuit_in_subset, enumerate_circuits, wall_forms, Circuit, OrientedCircuit};
use crate::classgroup::{picard_rational, span_h, ClassGroup};
use crate::fan::{indices_of, subsets_of, Fan, Subset};
use crate::lattice::{primitive, IntMatrix};
use crate::polyhedra::{dot, face_lattice, Cone, Vector};
use crate::{Error, Result};

/// `H_𝒞 = span{D_i : i ∉ 𝒞}` with the functional `φ_𝒞` cutting it out.
#[derive(Clone, Debug)]
pub struct DiscriminantalHyperplane {
    pub circuit: Circuit,
    /// `φ_𝒞` in the free coordinates of `A`.
    pub functional: Vec<BigInt>,
    /// Indices whose `D_i` span the hyperplane.
    pub spanning: Subset,
}

pub fn hyperplane(group: &ClassGroup, c: &Circuit) -> DiscriminantalHyperplane {
    let all: Subset = if group.n() == 32 { u32::MAX } else { (1u32 << group.n()) - 1 };
    DiscriminantalHyperplane {
        circuit: c.clone(),
        functional: group.descend_functional(&c.alpha),
        spanning: all & !c.support,
    }
}

/// Functional whose nonnegative side is `H_𝔠`.
pub fn half_space(group: &ClassGroup, oc: &OrientedCircuit) -> Vec<BigInt> {
    group.descend_functional(&oc.alpha)
}

/// Position of a point relative to `H_𝔠`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Interior,
    Boundary,
    Outside,
}

fn eval(f: &[BigInt], x: &[BigRational]) -> BigRational {
    f.iter().zip(x).map(|(a, b)| BigRational::from(a.clone()) * b).sum()
}

pub fn side(group: &ClassGroup, oc: &OrientedCircuit, x: &[BigRational]) -> Side {
    let v = eval(&half_space(group, oc), x);
    if v.is_positive() {
        Side::Interior
    } else if v.is_zero() {
        Side::Boundary
    } else {
        Side::Outside
    }
}

/// Both orientations of every circuit.
pub fn all_oriented_circuits(fan: &Fan) -> Vec<OrientedCircuit> {
    enumerate_circuits(fan.ray_matrix()).iter().flat_map(|c| c.orientations()).collect()
}

/// Subsets `B ⊆ σ(1)` for maximal cones `σ` whose rays form a basis of `N_Q`.
pub fn bases_in_model(fan: &Fan) -> Vec<Subset> {
    let d = fan.dim();
    let mut out = BTreeSet::new();
    for &s in fan.max_cones() {
        for b in subsets_of(s) {
            if b.count_ones() as usize == d && fan.rows(b).rank() == d {
                out.insert(b);
            }
        }
    }
    out.into_iter().collect()
}

/// All bases among the rays.
pub fn all_bases(fan: &Fan) -> Vec<Subset> {
    let d = fan.dim();
    let all = fan.all_rays();
    subsets_of(all).into_iter().filter(|&b| b.count_ones() as usize == d && fan.rows(b).rank() == d).collect()
}

/// `K_B^I = cone{-D_i : i ∈ I∖B} ∪ {D_i : i ∉ I ∪ B}`.
pub fn secondary_cone(fan: &Fan, group: &ClassGroup, i: Subset, b: Subset) -> Result<Cone> {
    let d = fan.dim();
    if b.count_ones() as usize != d || fan.rows(b).rank() != d {
        return Err(Error::InvalidInput("B does not index a basis".into()));
    }
    let gale = group.gale_matrix();
    let gens: Vec<Vector> = (0..fan.n())
        .filter(|&k| b >> k & 1 == 0)
        .map(|k| {
            let g = gale.row(k);
            if i >> k & 1 == 1 {
                g.iter().map(|x| -x).collect()
            } else {
                g
            }
        })
        .collect();
    Ok(Cone::from_generators(group.free_rank(), &gens))
}

/// `C_I = cone{-D_i : i ∈ I} ∪ {D_i : i ∉ I}`.
pub fn orthant_cone(fan: &Fan, group: &ClassGroup, i: Subset) -> Cone {
    let gale = group.gale_matrix();
    let gens: Vec<Vector> = (0..fan.n())
        .map(|k| {
            let g = gale.row(k);
            if i >> k & 1 == 1 {
                g.iter().map(|x| -x).collect()
            } else {
                g
            }
        })
        .collect();
    Cone::from_generators(group.free_rank(), &gens)
}

/// Oriented circuits with `cone ⊆ H_𝔠`: the discriminantal hull.
pub fn hull(group: &ClassGroup, cone: &Cone, candidates: &[OrientedCircuit]) -> Vec<OrientedCircuit> {
    candidates
        .iter()
        .filter(|oc| {
            let f = half_space(group, oc);
            cone.rays.iter().all(|r| !dot(&f, r).is_negative()) && cone.lineality.iter().all(|l| dot(&f, l).is_zero())
        })
        .cloned()
        .collect()
}

fn negate_cone(c: &Cone) -> Cone {
    let gens: Vec<Vector> = c
        .rays
        .iter()
        .map(|r| r.iter().map(|x| -x).collect())
        .chain(c.lineality.iter().cloned())
        .chain(c.lineality.iter().map(|l| l.iter().map(|x| -x).collect()))
        .collect();
    Cone::from_generators(c.dim, &gens)
}

/// The nef cone computed twice: from bases in the simplicial model and
/// from the half spaces of `𝔉'_nef`.
#[derive(Clone, Debug)]
pub struct NefCone {
    pub cone: Cone,
    pub by_half_spaces: Cone,
    /// `𝔉'_nef`: orientations whose circuit fan meets the simplicial model.
    pub flat_prime: Vec<OrientedCircuit>,
    /// `𝔉_nef`: all orientations with `nef ⊆ H_𝔠`.
    pub flat: Vec<OrientedCircuit>,
}

impl NefCone {
    pub fn compute(fan: &Fan, group: &ClassGroup) -> Result<NefCone> {
        let r = group.free_rank();
        let bases = bases_in_model(fan);
        let mut cone = Cone::whole_space(r);
        for &b in &bases {
            cone = cone.intersect(&secondary_cone(fan, group, 0, b)?);
        }
        let candidates = all_oriented_circuits(fan);
        let flat_prime: Vec<OrientedCircuit> = candidates
            .iter()
            .filter(|oc| {
                indices_of(oc.plus()).iter().any(|&j| {
                    let f = oc.support & !(1 << j);
                    bases.iter().any(|&b| b & f == f)
                })
            })
            .cloned()
            .collect();
        let ineqs: Vec<Vector> = flat_prime.iter().map(|oc| half_space(group, oc)).collect();
        let by_half_spaces = Cone::from_inequalities(r, &ineqs, &[]);
        let flat = hull(group, &cone, &candidates);
        Ok(NefCone { cone, by_half_spaces, flat_prime, flat })
    }

    /// The two computations agree.
    pub fn consistent(&self) -> bool {
        self.cone.equals(&self.by_half_spaces)
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        let den = x.iter().fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, v.denom()));
        let xi: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from(den.clone())).to_integer()).collect();
        self.cone.contains(&xi)
    }

    pub fn contains_interior(&self, x: &[BigRational]) -> bool {
        let den = x.iter().fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, v.denom()));
        let xi: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from(den.clone())).to_integer()).collect();
        self.cone.is_full_dimensional() && self.cone.contains_relative_interior(&xi)
    }

    /// Primitive generators of the extremal rays.
    pub fn rays(&self) -> &[Vector] {
        &self.cone.rays
    }

    /// Nonzero faces as cones, listed by dimension; the cone must be
    /// pointed.
    pub fn faces(&self) -> Result<Vec<Cone>> {
        if !self.cone.is_pointed() {
            return Err(Error::Precondition("nef cone is not pointed".into()));
        }
        if self.cone.rays.is_empty() {
            return Ok(Vec::new());
        }
        let gens = IntMatrix::from_rows(self.cone.dim, &self.cone.rays);
        Ok(face_lattice(&gens)
            .into_iter()
            .filter(|&m| m != 0)
            .map(|m| {
                let g: Vec<Vector> = indices_of(m).iter().map(|&i| self.cone.rays[i].clone()).collect();
                Cone::from_generators(self.cone.dim, &g)
            })
            .collect())
    }
}

pub fn nef_cone(fan: &Fan, group: &ClassGroup) -> Result<NefCone> {
    NefCone::compute(fan, group)
}

pub fn nef_oriented_flat(fan: &Fan, group: &ClassGroup) -> Result<Vec<OrientedCircuit>> {
    Ok(NefCone::compute(fan, group)?.flat)
}

/// `𝔉_{-F}`: orientations with `-F ⊆ H_𝔠`.
pub fn face_oriented_flat(fan: &Fan, group: &ClassGroup, face: &Cone) -> Vec<OrientedCircuit> {
    hull(group, &negate_cone(face), &all_oriented_circuits(fan))
}

/// A lifted wall form `t̄_{𝔠,τ}` on `A_Q` and its image in `N_1`.
#[derive(Clone, Debug)]
pub struct MoriGenerator {
    pub circuit: OrientedCircuit,
    pub tau: Subset,
    /// The form on `A_Q` in free coordinates.
    pub form: Vec<BigRational>,
    /// Values on the basis of `Pic_Q` from `picard_rational`.
    pub curve: Vec<BigRational>,
}

/// Lifted wall forms for `𝔠 ∈ 𝔉'_nef`, with the primitive generators of
/// the extremal rays of the cone they span in `N_1`.
pub fn mori_generators(fan: &Fan, group: &ClassGroup) -> Result<(Vec<MoriGenerator>, Vec<Vector>)> {
    if !fan.is_complete() {
        return Err(Error::Precondition("the Mori cone needs a complete fan".into()));
    }
    let nef = NefCone::compute(fan, group)?;
    let pic = picard_rational(fan, group);
    let mut gens = Vec::new();
    for oc in &nef.flat_prime {
        let alpha_form = group.descend_functional(&oc.alpha);
        for w in wall_forms(fan.ray_matrix(), oc) {
            let form: Vec<BigRational> = alpha_form.iter().map(|a| BigRational::from(a.clone()) * &w.t).collect();
            let curve: Vec<BigRational> = pic.iter().map(|p| p.iter().zip(&form).map(|(a, b)| a * b).sum()).collect();
            gens.push(MoriGenerator { circuit: oc.clone(), tau: w.tau, form, curve });
        }
    }
    let k = pic.len();
    let ints: Vec<Vector> = gens
        .iter()
        .map(|g| {
            let den = g.curve.iter().fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, v.denom()));
            primitive(&g.curve.iter().map(|v| (v * BigRational::from(den.clone())).to_integer()).collect::<Vec<_>>())
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let cone = Cone::from_generators(k, &ints);
    let mut rays = cone.rays.clone();
    rays.sort();
    Ok((gens, rays))
}

/// Sign vector of a point with respect to every hyperplane `H_𝒞`.
pub fn arrangement_key(group: &ClassGroup, circuits: &[Circuit], x: &[BigInt]) -> Vec<i8> {
    circuits
        .iter()
        .map(|c| {
            let v = dot(&group.descend_functional(&c.alpha), x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .collect()
}

/// Compares, on the integral points of `A` in a box of radius `radius`,
/// the cell structures induced by (i) the
/// discriminantal arrangement, (ii) all secondary fans `SF(L, I)` and
/// (iii) all orthants `C_I`. Two points must lie in the same cell for one
/// decomposition exactly when they do for the others.
pub fn chamber_equality_test(fan: &Fan, group: &ClassGroup, radius: i64) -> Result<bool> {
    let r = group.free_rank();
    let n = fan.n();
    if n > 10 || r > 3 {
        return Err(Error::ScaleLimit("chamber comparison is for small configurations".into()));
    }
    let circuits = enumerate_circuits(fan.ray_matrix());
    let forms: Vec<Vec<BigInt>> = circuits.iter().map(|c| group.descend_functional(&c.alpha)).collect();
    let bases = all_bases(fan);
    let mut secondary = Vec::new();
    let mut orthants = Vec::new();
    for i in 0..(1u32 << n) {
        for &b in &bases {
            secondary.push(secondary_cone(fan, group, i, b)?);
        }
        orthants.push(orthant_cone(fan, group, i));
    }
    // a cell of a fan is the relative interior of one of its cones
    let fan_key = |cones: &[Cone], x: &[BigInt]| -> Vec<bool> {
        cones.iter().map(|c| c.contains(x)).collect::<Vec<bool>>()
    };
    let mut points: Vec<Vec<BigInt>> = Vec::new();
    let side = 2 * radius + 1;
    let total = (side as usize).pow(r as u32);
    for k in 0..total {
        let mut rem = k;
        let mut p = Vec::with_capacity(r);
        for _ in 0..r {
            p.push(BigInt::from((rem % side as usize) as i64 - radius));
            rem /= side as usize;
        }
        points.push(p);
    }
    let mut seen: std::collections::HashMap<Vec<i8>, (Vec<bool>, Vec<bool>)> = Default::default();
    let mut back2: std::collections::HashMap<Vec<bool>, Vec<i8>> = Default::default();
    let mut back3: std::collections::HashMap<Vec<bool>, Vec<i8>> = Default::default();
    for p in &points {
        let k1: Vec<i8> = forms
            .iter()
            .map(|f| {
                let v = dot(f, p);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .collect();
        let k2 = fan_key(&secondary, p);
        let k3 = fan_key(&orthants, p);
        if let Some((a, b)) = seen.get(&k1) {
            if a != &k2 || b != &k3 {
                return Ok(false);
            }
        } else {
            seen.insert(k1.clone(), (k2.clone(), k3.clone()));
        }
        if let Some(prev) = back2.insert(k2, k1.clone()) {
            if prev != k1 {
                return Ok(false);
            }
        }
        if let Some(prev) = back3.insert(k3, k1.clone()) {
            if prev != k1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `D_i ∈ H_𝒞` iff `i ∉ 𝒞`, and `D_i` lies strictly inside `H_𝔠` for
/// `i ∈ 𝔠⁺`; the membership part uses spans, independent of `α`.
pub fn separating_lemma_holds(fan: &Fan, group: &ClassGroup, c: &Circuit) -> bool {
    let span = span_h(group, c.support);
    let gale = group.gale_transform();
    let oc = c.positive();
    (0..fan.n()).all(|i| {
        let x = group.rational(&gale[i]);
        let inside = crate::classgroup::in_span(&span, &x);
        let s = side(group, &oc, &x);
        if c.support >> i & 1 == 0 {
            inside && s == Side::Boundary
        } else if oc.plus() >> i & 1 == 1 {
            !inside && s == Side::Interior
        } else {
            !inside && s == Side::Outside
        }
    })
}

/// The unique circuit inside `B ∪ {i}` for a basis `B`.
pub fn fundamental_circuit(fan: &Fan, b: Subset, i: usize) -> Option<Circuit> {
    circuit_in_subset(fan.ray_matrix(), b | (1 << i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::big;

    fn f3() -> (Fan, ClassGroup) {
        let f = Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        let g = ClassGroup::with_basis(&f, &[big(&[1, 0, 0, 0]), big(&[0, 1, 0, 0])]).unwrap();
        (f, g)
    }

    fn p2() -> (Fan, ClassGroup) {
        let f = Fan::new(vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap();
        let g = ClassGroup::new(&f).unwrap();
        (f, g)
    }

    #[test]
    fn hyperplanes_of_f3() {
        let (f, g) = f3();
        let cs = enumerate_circuits(f.ray_matrix());
        // {2,4}: H = span{D1, D3} = x-axis, functional picks y
        let h = hyperplane(&g, &cs[0]);
        assert_eq!(h.functional, big(&[0, 1]));
        // {1,2,3}: H = span{D4} = span{(3,1)}
        let h = hyperplane(&g, &cs[1]);
        assert!(dot(&h.functional, &big(&[3, 1])).is_zero());
        for c in &cs {
            assert!(separating_lemma_holds(&f, &g, c));
        }
    }

    #[test]
    fn nef_cones() {
        let (f, g) = f3();
        let nef = NefCone::compute(&f, &g).unwrap();
        assert!(nef.consistent());
        let mut rays = nef.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![big(&[1, 0]), big(&[3, 1])]);
        assert_eq!(nef.flat.len(), 3);
        let (p, gp) = p2();
        let n = NefCone::compute(&p, &gp).unwrap();
        assert!(n.consistent());
        assert_eq!(n.rays(), &[big(&[1])]);
        assert_eq!(n.flat.len(), 1);
    }

    #[test]
    fn minus_face_flat() {
        let (f, g) = f3();
        let face = Cone::from_i64_generators(2, &[vec![1, 0]]);
        let flat = face_oriented_flat(&f, &g, &face);
        let pair: Vec<_> = flat.iter().filter(|oc| oc.support == 0b1010).collect();
        assert_eq!(pair.len(), 2);
    }

    #[test]
    fn secondary_cones() {
        let (f, g) = f3();
        let k = secondary_cone(&f, &g, 0, 0b0011).unwrap();
        let mut rays = k.rays.clone();
        rays.sort();
        assert_eq!(rays, vec![big(&[1, 0]), big(&[3, 1])]);
        assert!(secondary_cone(&f, &g, 0, 0b1010).is_err());
        let (p, gp) = p2();
        let k = secondary_cone(&p, &gp, 0, 0b011).unwrap();
        assert_eq!(k.rays, vec![big(&[1])]);
    }

    #[test]
    fn chamber_equality() {
        let (f, g) = f3();
        assert!(chamber_equality_test(&f, &g, 6).unwrap());
        let (p, gp) = p2();
        assert!(chamber_equality_test(&p, &gp, 6).unwrap());
    }

    #[test]
    fn mori() {
        let (p, gp) = p2();
        assert_eq!(mori_generators(&p, &gp).unwrap().1.len(), 1);
        let (f, g) = f3();
        assert_eq!(mori_generators(&f, &g).unwrap().1.len(), 2);
    }
}
