//! Reduced and relative reduced simplicial cohomology over a field.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::fan::{indices_of, SimplicialComplex, Subset};
use crate::{Error, Result};

/// Coefficient field for simplicial cohomology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rational,
    /// `Z/p` for a prime `p`.
    Prime(u64),
}

impl Field {
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "0" || s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let p: u64 = s.parse().map_err(|_| Error::InvalidInput(format!("bad characteristic {s:?}")))?;
        if p < 2 || (2..p).take_while(|k| k * k <= p).any(|k| p % k == 0) {
            return Err(Error::InvalidInput(format!("characteristic {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Dimensions of reduced cohomology in degrees `-1, 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CochainComplexDims {
    dims: Vec<u64>,
}

impl CochainComplexDims {
    pub fn zero(len: usize) -> Self {
        CochainComplexDims { dims: vec![0; len] }
    }

    /// Dimension in degree `k >= -1`; zero outside the stored range.
    pub fn get(&self, k: i64) -> u64 {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Highest stored degree.
    pub fn max_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    pub fn euler(&self) -> i64 {
        // reduced Euler characteristic, degree -1 carrying sign -1
        self.dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { -(d as i64) } else { d as i64 }).sum()
    }

    /// Nonzero `(degree, dim)` pairs.
    pub fn nonzero(&self) -> Vec<(i64, u64)> {
        self.dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, &d)| (i as i64 - 1, d)).collect()
    }
}

/// Reduced cohomology of `K`.
pub fn reduced_cohomology(k: &SimplicialComplex, field: Field) -> CochainComplexDims {
    relative_faces(k.faces().to_vec(), k.n(), field)
}

/// Reduced relative cohomology `H̃^•(K, K_sub)`.
pub fn relative_reduced_cohomology(
    k: &SimplicialComplex,
    sub: &SimplicialComplex,
    field: Field,
) -> Result<CochainComplexDims> {
    if !sub.is_subcomplex_of(k) {
        return Err(Error::Precondition("subcomplex is not contained in the complex".into()));
    }
    let faces: Vec<Subset> = k.faces().iter().copied().filter(|&f| !sub.contains(f)).collect();
    Ok(relative_faces(faces, k.n(), field))
}

/// Cohomology of the cochain complex spanned by the given faces, which
/// must be the difference of a complex and a subcomplex.
fn relative_faces(faces: Vec<Subset>, n: usize, field: Field) -> CochainComplexDims {
    let len = n + 1;
    let mut by_dim: Vec<Vec<Subset>> = vec![Vec::new(); len];
    for f in faces {
        by_dim[f.count_ones() as usize].push(f);
    }
    for v in by_dim.iter_mut() {
        v.sort_unstable();
    }
    // rank of the coboundary from size s to size s+1
    let mut ranks = vec![0u64; len];
    for s in 0..len.saturating_sub(1) {
        if by_dim[s].is_empty() || by_dim[s + 1].is_empty() {
            continue;
        }
        let index: HashMap<Subset, usize> = by_dim[s].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<Vec<(usize, i64)>> = by_dim[s + 1]
            .iter()
            .map(|&g| {
                indices_of(g)
                    .iter()
                    .enumerate()
                    .filter_map(|(pos, &v)| {
                        let f = g & !(1 << v);
                        index.get(&f).map(|&col| (col, if pos % 2 == 0 { 1 } else { -1 }))
                    })
                    .collect()
            })
            .collect();
        ranks[s] = match field {
            Field::Rational => rank_rational(&rows, by_dim[s].len()),
            Field::Prime(p) => rank_mod_p(&rows, by_dim[s].len(), p),
        };
    }
    let dims = (0..len)
        .map(|s| {
            let into = if s == 0 { 0 } else { ranks[s - 1] };
            by_dim[s].len() as u64 - ranks[s] - into
        })
        .collect();
    CochainComplexDims { dims }
}

/// Rank of a sparse integer matrix over Q by fraction-free elimination.
fn rank_rational(rows: &[Vec<(usize, i64)>], ncols: usize) -> u64 {
    let mut dense: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); ncols];
            for &(c, x) in r {
                v[c] += x;
            }
            v
        })
        .collect();
    let mut rank = 0;
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(p) = (r0..dense.len()).find(|&i| !dense[i][c].is_zero()) else { continue };
        dense.swap(p, r0);
        let piv = dense[r0][c].clone();
        for i in r0 + 1..dense.len() {
            if dense[i][c].is_zero() {
                continue;
            }
            let f = dense[i][c].clone();
            let (top, bottom) = dense.split_at_mut(i);
            let prow = &top[r0];
            let row = &mut bottom[0];
            let mut g = BigInt::zero();
            for j in c..ncols {
                row[j] = &row[j] * &piv - &f * &prow[j];
                g = g.gcd(&row[j]);
            }
            if !g.is_zero() && g.abs() != BigInt::from(1) {
                for x in row[c..].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        r0 += 1;
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: &[Vec<(usize, i64)>], ncols: usize, p: u64) -> u64 {
    let p = p as i128;
    let mut dense: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0i128; ncols];
            for &(c, x) in r {
                v[c] = (v[c] + x as i128).rem_euclid(p);
            }
            v
        })
        .collect();
    let inv = |a: i128| -> i128 {
        // Fermat inverse
        let (mut base, mut e, mut acc) = (a, p - 2, 1i128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(piv) = (r0..dense.len()).find(|&i| dense[i][c] != 0) else { continue };
        dense.swap(piv, r0);
        let iv = inv(dense[r0][c]);
        for j in c..ncols {
            dense[r0][j] = dense[r0][j] * iv % p;
        }
        for i in r0 + 1..dense.len() {
            let f = dense[i][c];
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                dense[i][j] = (dense[i][j] - f * dense[r0][j]).rem_euclid(p);
            }
        }
        r0 += 1;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, gens: &[Subset]) -> SimplicialComplex {
        SimplicialComplex::from_generators(n, gens)
    }

    #[test]
    fn basic_complexes() {
        let e = reduced_cohomology(&SimplicialComplex::empty(3), Field::Rational);
        assert_eq!(e.nonzero(), vec![(-1, 1)]);
        let s1 = reduced_cohomology(&cx(3, &[0b011, 0b110, 0b101]), Field::Rational);
        assert_eq!(s1.nonzero(), vec![(1, 1)]);
        let two = reduced_cohomology(&cx(2, &[0b01, 0b10]), Field::Rational);
        assert_eq!(two.nonzero(), vec![(0, 1)]);
        assert!(reduced_cohomology(&SimplicialComplex::void(2), Field::Rational).is_acyclic());
    }

    #[test]
    fn relative_pairs() {
        let k = cx(3, &[0b011, 0b110, 0b101]);
        let rel = relative_reduced_cohomology(&k, &SimplicialComplex::void(3), Field::Rational).unwrap();
        assert_eq!(rel, reduced_cohomology(&k, Field::Rational));
        assert!(relative_reduced_cohomology(&k, &k, Field::Rational).unwrap().is_acyclic());
        // (B^1, S^0): a segment relative to its endpoints
        let seg = cx(2, &[0b11]);
        let ends = cx(2, &[0b01, 0b10]);
        let r = relative_reduced_cohomology(&seg, &ends, Field::Rational).unwrap();
        assert_eq!(r.nonzero(), vec![(1, 1)]);
        assert!(relative_reduced_cohomology(&ends, &seg, Field::Rational).is_err());
    }

    #[test]
    fn projective_plane_torsion_depends_on_field() {
        // six-vertex triangulation of RP^2
        let tris: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let gens: Vec<Subset> = tris.iter().map(|t| t.iter().fold(0, |m, &i| m | (1 << i))).collect();
        let k = cx(6, &gens);
        assert!(reduced_cohomology(&k, Field::Rational).is_acyclic());
        let f2 = reduced_cohomology(&k, Field::Prime(2));
        assert_eq!(f2.nonzero(), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn field_parse() {
        assert_eq!(Field::parse("0").unwrap(), Field::Rational);
        assert_eq!(Field::parse("7").unwrap(), Field::Prime(7));
        assert!(Field::parse("8").is_err());
    }
}
