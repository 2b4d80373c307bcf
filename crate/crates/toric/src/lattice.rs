//! Exact integer and rational linear algebra.
//!
//! Everything here works on arbitrary-precision integers. Normal forms are
//! computed with explicit unimodular transforms so callers can reconstruct
//! the input or move between coordinate systems.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Rows as machine integers; panics if an entry does not fit.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64().expect("entry exceeds i64")).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Submatrix made of the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.row(i)).collect();
        IntMatrix::from_rows(self.cols, &rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        hermite_normal_form(self).rank
    }

    /// Determinant of a square matrix (Bareiss elimination).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form `H = U·A`.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into `[0, pivot)`, zero rows at the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> Hermite {
    let m = a.rows;
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    let mut pivots = Vec::new();
    for j in 0..a.cols {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero |h[i][j]| for i >= r
            let mut best: Option<usize> = None;
            for i in r..m {
                if h[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) if h[(i, j)].abs() < h[(b, j)].abs() => best = Some(i),
                    _ => {}
                }
            }
            let Some(p) = best else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..m {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = -h[(i, j)].div_floor(&h[(r, j)]);
                h.add_row(i, r, &q);
                u.add_row(i, r, &q);
                if !h[(i, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, j)].is_zero() {
            continue;
        }
        if h[(r, j)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, j)].div_floor(&h[(r, j)]);
            h.add_row(i, r, &q);
            u.add_row(i, r, &q);
        }
        pivots.push(j);
        r += 1;
    }
    Hermite { h, u, rank: r, pivots }
}

/// Smith normal form `S = U·A·V` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form. The pivot at each stage is the entry of smallest
/// absolute value in the remaining block, ties broken by row then column.
pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let k = m.min(n);
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) if s[(i, j)].abs() < s[(bi, bj)].abs() => best = Some((i, j)),
                        _ => {}
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            s.swap_rows(pi, t);
            u.swap_rows(pi, t);
            s.swap_cols(pj, t);
            v.swap_cols(pj, t);

            let mut dirty = false;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let piv = s[(t, t)].clone();
            let mut offending = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !s[(i, j)].is_multiple_of(&piv) {
                        offending = Some(i);
                        break 'scan;
                    }
                }
            }
            match offending {
                Some(i) => {
                    s.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    let diagonal: Vec<BigInt> = (0..k).map(|i| s[(i, i)].clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    Smith { s, u, v, diagonal, rank }
}

/// Saturated basis (as rows) of the left kernel `{x : x·A = 0}`,
/// in Hermite normal form.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let hnf = hermite_normal_form(a);
    let rows: Vec<Vec<BigInt>> = (hnf.rank..a.rows).map(|i| hnf.u.row(i)).collect();
    let basis = IntMatrix::from_rows(a.rows, &rows);
    if rows.is_empty() {
        return basis;
    }
    let red = hermite_normal_form(&basis);
    red.h.select_rows(&(0..red.rank).collect::<Vec<_>>())
}

/// Index of the lattice spanned by the rows inside its saturation.
pub fn saturation_index(rows: &IntMatrix) -> BigInt {
    if rows.nrows() == 0 {
        return BigInt::one();
    }
    smith_normal_form(rows)
        .diagonal
        .into_iter()
        .filter(|d| !d.is_zero())
        .fold(BigInt::one(), |acc, d| acc * d)
}

/// Element of a finitely generated abelian group in normal form:
/// torsion coordinates reduced into `[0, d_k)`, then free coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub torsion: Vec<BigInt>,
    pub free: Vec<BigInt>,
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(|x| x.is_zero()) && self.free.iter().all(|x| x.is_zero())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", free.join(","))?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(|x| x.to_string()).collect();
            write!(f, "+t[{}]", t.join(","))?;
        }
        Ok(())
    }
}

/// Presentation of `Z^n / (column image of A)` as `Z^f ⊕ ⊕ Z/d_k`.
#[derive(Clone, Debug)]
pub struct AbelianGroupPresentation {
    pub ambient: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
    /// Rows: torsion coordinate functionals, then free coordinate functionals.
    proj: IntMatrix,
    /// Columns: representatives of the torsion generators, then of the free generators.
    lift: IntMatrix,
}

/// Presentation of the cokernel `Z^rows / A(Z^cols)`.
pub fn cokernel_presentation(a: &IntMatrix) -> AbelianGroupPresentation {
    let snf = smith_normal_form(a);
    let n = a.rows;
    let uinv = inverse_unimodular(&snf.u);
    let mut proj_rows = Vec::new();
    let mut lift_cols = Vec::new();
    let mut torsion = Vec::new();
    for (k, d) in snf.diagonal.iter().enumerate() {
        if !d.is_zero() && !d.is_one() {
            torsion.push(d.clone());
            proj_rows.push(snf.u.row(k));
            lift_cols.push(uinv.col(k));
        }
    }
    for k in snf.rank..n {
        proj_rows.push(snf.u.row(k));
        lift_cols.push(uinv.col(k));
    }
    let proj = IntMatrix::from_rows(n, &proj_rows);
    let lift = IntMatrix::from_rows(n, &lift_cols).transpose();
    AbelianGroupPresentation { ambient: n, free_rank: n - snf.rank, torsion, proj, lift }
}

impl AbelianGroupPresentation {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Product of the invariant factors.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |a, d| a * d)
    }

    pub fn project(&self, x: &[BigInt]) -> GroupElement {
        let y = self.proj.apply(x);
        let t = self.torsion.len();
        GroupElement {
            torsion: (0..t).map(|k| y[k].mod_floor(&self.torsion[k])).collect(),
            free: y[t..].to_vec(),
        }
    }

    pub fn project_i64(&self, x: &[i64]) -> GroupElement {
        let v: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
        self.project(&v)
    }

    /// A representative in `Z^n` of the given element.
    pub fn lift(&self, e: &GroupElement) -> Vec<BigInt> {
        let mut coords = e.torsion.clone();
        coords.extend(e.free.iter().cloned());
        self.lift.apply(&coords)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            torsion: (0..self.torsion.len())
                .map(|k| (&a.torsion[k] + &b.torsion[k]).mod_floor(&self.torsion[k]))
                .collect(),
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            torsion: (0..self.torsion.len()).map(|k| (-&a.torsion[k]).mod_floor(&self.torsion[k])).collect(),
            free: a.free.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        GroupElement {
            torsion: (0..self.torsion.len()).map(|i| (k * &a.torsion[i]).mod_floor(&self.torsion[i])).collect(),
            free: a.free.iter().map(|x| k * x).collect(),
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { torsion: vec![BigInt::zero(); self.torsion.len()], free: vec![BigInt::zero(); self.free_rank] }
    }

    /// Coordinate functionals for the free part, one row per free coordinate.
    pub fn free_functionals(&self) -> IntMatrix {
        let t = self.torsion.len();
        self.proj.select_rows(&(t..t + self.free_rank).collect::<Vec<_>>())
    }

    /// Re-coordinatize the free part so that the given ambient vectors
    /// become the free basis. Fails unless their free parts form a basis.
    pub fn with_free_basis(&self, reps: &[Vec<BigInt>]) -> Option<AbelianGroupPresentation> {
        let f = self.free_rank;
        let t = self.torsion.len();
        if reps.len() != f {
            return None;
        }
        let images: Vec<GroupElement> = reps.iter().map(|r| self.project(r)).collect();
        // B has the old free coordinates of the new basis vectors as columns.
        let b = IntMatrix::from_rows(f, &images.iter().map(|e| e.free.clone()).collect::<Vec<_>>()).transpose();
        if f > 0 && b.determinant().abs() != BigInt::one() {
            return None;
        }
        let binv = inverse_unimodular(&b);
        let old_free = self.free_functionals();
        let new_free = binv.mul(&old_free);
        let mut rows = Vec::new();
        for k in 0..t {
            let mut row = self.proj.row(k);
            for (j, img) in images.iter().enumerate() {
                let tk = &img.torsion[k];
                if tk.is_zero() {
                    continue;
                }
                for (c, x) in row.iter_mut().enumerate() {
                    *x -= tk * &new_free[(j, c)];
                }
            }
            for x in row.iter_mut() {
                *x = x.mod_floor(&self.torsion[k]);
            }
            rows.push(row);
        }
        rows.extend(new_free.to_rows());
        let proj = IntMatrix::from_rows(self.ambient, &rows);
        let mut lift_cols: Vec<Vec<BigInt>> = (0..t).map(|k| self.lift.col(k)).collect();
        lift_cols.extend(reps.iter().cloned());
        let lift = IntMatrix::from_rows(self.ambient, &lift_cols).transpose();
        Some(AbelianGroupPresentation {
            ambient: self.ambient,
            free_rank: f,
            torsion: self.torsion.clone(),
            proj,
            lift,
        })
    }
}

/// Inverse of a unimodular matrix, computed through its Hermite form.
pub fn inverse_unimodular(a: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows, a.cols);
    let hnf = hermite_normal_form(a);
    assert!(hnf.h == IntMatrix::identity(a.rows), "matrix is not unimodular");
    hnf.u
}

/// Integral solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len());
    let snf = smith_normal_form(a);
    let ub = snf.u.apply(b);
    let mut y = vec![BigInt::zero(); a.cols];
    for (k, target) in ub.iter().enumerate() {
        let d = if k < snf.diagonal.len() { snf.diagonal[k].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !target.is_zero() {
                return None;
            }
        } else {
            let (q, r) = target.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[k] = q;
        }
    }
    Some(snf.v.apply(&y))
}

/// Rational solution of `A x = b`, if one exists.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let (m, n) = (a.rows, a.cols);
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut r: Vec<BigRational> = (0..n).map(|j| BigRational::from(a[(i, j)].clone())).collect();
            r.push(BigRational::from(b[i].clone()));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][j].is_zero()) else { continue };
        aug.swap(p, r);
        let inv = aug[r][j].recip();
        for x in aug[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !aug[i][j].is_zero() {
                let f = aug[i][j].clone();
                for c in 0..=n {
                    let v = &aug[r][c] * &f;
                    aug[i][c] -= v;
                }
            }
        }
        pivots.push(j);
        r += 1;
    }
    if (r..m).any(|i| !aug[i][n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &j) in pivots.iter().enumerate() {
        x[j] = aug[i][n].clone();
    }
    Some(x)
}

/// Basis of the rational null space `{x : A x = 0}`, scaled to primitive
/// integer vectors.
pub fn right_kernel(a: &IntMatrix) -> IntMatrix {
    integer_kernel(&a.transpose())
}

/// Primitive integer vector: divide out the gcd of the entries.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn lcm_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::one(), |l, x| l.lcm(x))
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_i64(cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn hnf_identity_and_small() {
        let id = IntMatrix::identity(2);
        let h = hermite_normal_form(&id);
        assert_eq!(h.h, id);
        assert_eq!(h.u, id);
        let a = m(&[&[2, 4], &[1, 3]]);
        let h = hermite_normal_form(&a);
        assert_eq!(h.h[(0, 0)], BigInt::from(1));
        assert_eq!(h.u.mul(&a), h.h);
    }

    #[test]
    fn hnf_rank_of_hirzebruch_rays() {
        let l = m(&[&[1, 0], &[0, 1], &[-1, 3], &[0, -1]]);
        assert_eq!(hermite_normal_form(&l).rank, 2);
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, big(&[1, 6]));
        let z = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert_eq!(z.diagonal, big(&[0, 0]));
    }

    #[test]
    fn snf_reconstructs() {
        let a = m(&[&[4, 6, 2], &[8, 3, 5], &[6, 9, 12]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.s);
        for w in s.diagonal.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn kernels() {
        let p2 = m(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert_eq!(integer_kernel(&p2).to_rows(), vec![big(&[1, 1, 1])]);
        let wps = m(&[&[4, 1], &[-1, 1], &[-1, -1]]);
        assert_eq!(integer_kernel(&wps).to_rows(), vec![big(&[2, 3, 5])]);
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturation_index(&m(&[&[4, 1]])), BigInt::from(1));
        assert_eq!(saturation_index(&m(&[&[4, 1], &[-1, 1]])), BigInt::from(5));
    }

    #[test]
    fn cokernel_torsion() {
        let a = m(&[&[2, 0], &[0, 3], &[0, 0]]);
        let g = cokernel_presentation(&a);
        assert_eq!(g.free_rank, 1);
        assert_eq!(g.torsion, big(&[6]));
        let x = g.project(&big(&[1, 1, 5]));
        let back = g.lift(&x);
        assert_eq!(g.project(&back), x);
        assert!(g.project(&big(&[2, 3, 0])).is_zero());
    }

    #[test]
    fn integer_and_rational_solves() {
        let a = m(&[&[2, 0], &[0, 3]]);
        assert!(solve_integer(&a, &big(&[2, 3])).is_some());
        assert!(solve_integer(&a, &big(&[1, 3])).is_none());
        assert!(solve_rational(&a, &big(&[1, 3])).is_some());
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(solve_rational(&b, &big(&[1, 3])).is_none());
    }
}
