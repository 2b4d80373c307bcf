//! Divisor class group `A = Z^n / L(M)`, Gale duals, Cartier tests and
//! Picard groups.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::fan::{indices_of, Fan, Subset};
use crate::lattice::{
    cokernel_presentation, hermite_normal_form, integer_kernel, smith_normal_form, solve_integer,
    solve_rational, AbelianGroupPresentation, GroupElement, IntMatrix,
};
use crate::{Error, Result};

/// The class group with a chosen free basis.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    n: usize,
    /// Presentation in the coordinates used for all output.
    group: AbelianGroupPresentation,
    /// Presentation straight from the Smith form.
    internal: AbelianGroupPresentation,
    preferred: bool,
}

/// A torus invariant divisor together with its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub c: Vec<BigInt>,
    pub class: GroupElement,
}

impl ClassGroup {
    pub fn new(fan: &Fan) -> Result<ClassGroup> {
        if fan.rank() < fan.dim() {
            return Err(Error::Precondition("rays are not full dimensional".into()));
        }
        let internal = cokernel_presentation(fan.ray_matrix());
        Ok(ClassGroup { n: fan.n(), group: internal.clone(), internal, preferred: false })
    }

    /// Class group whose free coordinates are taken in the given basis of
    /// divisor vectors.
    pub fn with_basis(fan: &Fan, basis: &[Vec<BigInt>]) -> Result<ClassGroup> {
        let mut g = ClassGroup::new(fan)?;
        for b in basis {
            if b.len() != fan.n() {
                return Err(Error::InvalidInput("class basis vector has the wrong length".into()));
            }
        }
        g.group = g
            .internal
            .with_free_basis(basis)
            .ok_or_else(|| Error::InvalidInput("class basis is not a basis of the free part".into()))?;
        g.preferred = true;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &AbelianGroupPresentation {
        &self.group
    }

    pub fn internal_presentation(&self) -> &AbelianGroupPresentation {
        &self.internal
    }

    pub fn has_preferred_basis(&self) -> bool {
        self.preferred
    }

    pub fn free_rank(&self) -> usize {
        self.group.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.group.torsion
    }

    pub fn project(&self, c: &[BigInt]) -> GroupElement {
        self.group.project(c)
    }

    pub fn project_i64(&self, c: &[i64]) -> GroupElement {
        self.group.project_i64(c)
    }

    pub fn divisor(&self, c: &[BigInt]) -> DivisorClass {
        DivisorClass { c: c.to_vec(), class: self.project(c) }
    }

    /// A divisor vector representing the class.
    pub fn lift(&self, e: &GroupElement) -> Vec<BigInt> {
        self.group.lift(e)
    }

    /// Class with the given free coordinates and zero torsion part.
    pub fn from_free(&self, free: &[BigInt]) -> GroupElement {
        GroupElement { torsion: vec![BigInt::zero(); self.group.torsion.len()], free: free.to_vec() }
    }

    /// Image in `A_Q`.
    pub fn rational(&self, e: &GroupElement) -> Vec<BigRational> {
        e.free.iter().map(|x| BigRational::from(x.clone())).collect()
    }

    pub fn rational_of(&self, c: &[BigInt]) -> Vec<BigRational> {
        self.rational(&self.project(c))
    }

    /// The Gale duals `D_i`, classes of the unit vectors.
    pub fn gale_transform(&self) -> Vec<GroupElement> {
        (0..self.n)
            .map(|i| {
                let mut e = vec![BigInt::zero(); self.n];
                e[i] = BigInt::one();
                self.project(&e)
            })
            .collect()
    }

    /// Free parts of the Gale duals as an `n × r` integer matrix.
    pub fn gale_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = self.gale_transform().into_iter().map(|e| e.free).collect();
        IntMatrix::from_rows(self.free_rank(), &rows)
    }

    /// Coefficients of the linear form on `A_Q` induced by a functional
    /// `w` on `Z^n` that vanishes on `L(M)`.
    pub fn descend_functional(&self, w: &[BigInt]) -> Vec<BigInt> {
        let t = self.group.torsion.len();
        (0..self.free_rank())
            .map(|j| {
                let mut e = GroupElement { torsion: vec![BigInt::zero(); t], free: vec![BigInt::zero(); self.free_rank()] };
                e.free[j] = BigInt::one();
                let rep = self.lift(&e);
                rep.iter().zip(w).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    /// `K_X = -Σ D_i`.
    pub fn canonical_class(&self) -> DivisorClass {
        self.divisor(&vec![-BigInt::one(); self.n])
    }

    pub fn format_element(&self, e: &GroupElement) -> String {
        e.to_string()
    }
}

/// Rational witnesses `m_σ` with `c_i = l_i(m_σ)` on each maximal cone.
#[derive(Clone, Debug)]
pub struct CartierWitness {
    pub q_cartier: bool,
    pub witnesses: Vec<Option<Vec<BigRational>>>,
}

fn restricted(fan: &Fan, sigma: Subset, c: &[BigInt]) -> (IntMatrix, Vec<BigInt>) {
    let idx = indices_of(sigma);
    (fan.rows(sigma), idx.iter().map(|&i| c[i].clone()).collect())
}

pub fn is_q_cartier(fan: &Fan, c: &[BigInt]) -> CartierWitness {
    let witnesses: Vec<Option<Vec<BigRational>>> = fan
        .max_cones()
        .iter()
        .map(|&s| {
            let (a, b) = restricted(fan, s, c);
            solve_rational(&a, &b)
        })
        .collect();
    CartierWitness { q_cartier: witnesses.iter().all(|w| w.is_some()), witnesses }
}

pub fn is_cartier(fan: &Fan, c: &[BigInt]) -> bool {
    fan.max_cones().iter().all(|&s| {
        let (a, b) = restricted(fan, s, c);
        solve_integer(&a, &b).is_some()
    })
}

/// The lattice `Λ = {c ∈ Z^n : c|σ ∈ L_σ(M) for every maximal σ}` of
/// Cartier divisors, as a row basis.
pub fn cartier_lattice(fan: &Fan) -> IntMatrix {
    let n = fan.n();
    let d = fan.dim();
    let cones = fan.max_cones();
    let vars = n + d * cones.len();
    // one column per constraint c_i - l_i(m_σ) = 0
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for (k, &s) in cones.iter().enumerate() {
        for i in indices_of(s) {
            let mut col = vec![BigInt::zero(); vars];
            col[i] = BigInt::one();
            for j in 0..d {
                col[n + k * d + j] = -BigInt::from(fan.ray(i)[j]);
            }
            cols.push(col);
        }
    }
    let lambda_rows: Vec<Vec<BigInt>> = if cols.is_empty() {
        (0..n)
            .map(|i| {
                let mut e = vec![BigInt::zero(); n];
                e[i] = BigInt::one();
                e
            })
            .collect()
    } else {
        let a = IntMatrix::from_rows(vars, &cols).transpose();
        integer_kernel(&a).to_rows().into_iter().map(|r| r[..n].to_vec()).collect()
    };
    let m = IntMatrix::from_rows(n, &lambda_rows);
    let h = hermite_normal_form(&m);
    h.h.select_rows(&(0..h.rank).collect::<Vec<_>>())
}

/// Picard group as a subgroup of the class group.
#[derive(Clone, Debug)]
pub struct PicardGroup {
    /// Generators of the image of the Cartier lattice.
    pub generators: Vec<GroupElement>,
    /// Hermite basis of the free parts of the generators.
    pub free_basis: IntMatrix,
    /// `[A : Pic]`, `None` when infinite.
    pub index: Option<BigInt>,
    pub cartier_lattice: IntMatrix,
}

pub fn picard_integral(fan: &Fan, group: &ClassGroup) -> PicardGroup {
    let lambda = cartier_lattice(fan);
    let generators: Vec<GroupElement> =
        lambda.to_rows().iter().map(|r| group.project(r)).filter(|e| !e.is_zero()).collect();
    let free_rows: Vec<Vec<BigInt>> = generators.iter().map(|e| e.free.clone()).collect();
    let free_basis = if free_rows.is_empty() {
        IntMatrix::zeros(0, group.free_rank())
    } else {
        let h = hermite_normal_form(&IntMatrix::from_rows(group.free_rank(), &free_rows));
        h.h.select_rows(&(0..h.rank).collect::<Vec<_>>())
    };
    let index = if lambda.nrows() == fan.n() {
        let snf = smith_normal_form(&lambda);
        Some(snf.diagonal.iter().fold(BigInt::one(), |a, d| a * d).abs())
    } else {
        None
    };
    PicardGroup { generators, free_basis, index, cartier_lattice: lambda }
}

/// Basis of `Pic(X)_Q` inside `A_Q`.
pub fn picard_rational(fan: &Fan, group: &ClassGroup) -> Vec<Vec<BigRational>> {
    let p = picard_integral(fan, group);
    p.free_basis.to_rows().iter().map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect()).collect()
}

/// `H_I = span{D_i : i ∉ I}` in `A_Q`, as a Hermite row basis.
pub fn span_h(group: &ClassGroup, i: Subset) -> IntMatrix {
    let gale = group.gale_matrix();
    let keep: Vec<usize> = (0..group.n()).filter(|k| i >> k & 1 == 0).collect();
    if keep.is_empty() {
        return IntMatrix::zeros(0, group.free_rank());
    }
    let h = hermite_normal_form(&gale.select_rows(&keep));
    h.h.select_rows(&(0..h.rank).collect::<Vec<_>>())
}

/// Rational Picard group computed as `⋂_σ H_{σ(1)}` (the other route).
pub fn picard_rational_by_spans(fan: &Fan, group: &ClassGroup) -> IntMatrix {
    let r = group.free_rank();
    let mut current = IntMatrix::identity(r);
    for &s in fan.max_cones() {
        current = intersect_spans(&current, &span_h(group, s));
    }
    current
}

/// Intersection of two rational row spaces, as a saturated Hermite basis.
pub fn intersect_spans(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let r = a.ncols();
    if a.nrows() == 0 || b.nrows() == 0 {
        return IntMatrix::zeros(0, r);
    }
    // x·A = y·B  <=>  (x, -y)·[A; B] = 0
    let mut rows = a.to_rows();
    rows.extend(b.to_rows().into_iter().map(|v| v.into_iter().map(|x| -x).collect()));
    let stacked = IntMatrix::from_rows(r, &rows);
    let ker = integer_kernel(&stacked);
    if ker.nrows() == 0 {
        return IntMatrix::zeros(0, r);
    }
    let xs: Vec<Vec<BigInt>> = ker.to_rows().into_iter().map(|k| k[..a.nrows()].to_vec()).collect();
    let vecs = IntMatrix::from_rows(a.nrows(), &xs).mul(a);
    saturate_rows(&vecs)
}

/// Saturated Hermite basis of the rational span of the rows.
pub fn saturate_rows(m: &IntMatrix) -> IntMatrix {
    let r = m.ncols();
    if m.nrows() == 0 || m.is_zero() {
        return IntMatrix::zeros(0, r);
    }
    // saturation = annihilator of the annihilator
    let ann = integer_kernel(&m.transpose());
    let sat = if ann.nrows() == 0 { IntMatrix::identity(r) } else { integer_kernel(&ann.transpose()) };
    let h = hermite_normal_form(&sat);
    h.h.select_rows(&(0..h.rank).collect::<Vec<_>>())
}

/// Whether `x` lies in the rational row span of `basis`.
pub fn in_span(basis: &IntMatrix, x: &[BigRational]) -> bool {
    if basis.nrows() == 0 {
        return x.iter().all(|v| v.is_zero());
    }
    // clear denominators
    let den = x.iter().fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, v.denom()));
    let xi: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from(den.clone())).to_integer()).collect();
    solve_rational(&basis.transpose(), &xi).is_some()
}
