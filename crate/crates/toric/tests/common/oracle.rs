//! Per-lattice-point cohomology: every character `m` in a box is visited,
//! its signature computed from scratch and the graded piece read off a
//! relative simplicial cochain complex over Q.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use toric::cohomology::Dim;
use toric::fan::{Fan, SubvarietySpec};

fn subsets(mask: u32) -> Vec<u32> {
    let mut out = vec![0];
    let mut s = mask;
    while s != 0 {
        out.push(s);
        s = (s - 1) & mask;
    }
    out
}

/// All faces of the simplicial model spanned by `gens`.
fn closure(gens: &[u32]) -> Vec<u32> {
    let mut all: Vec<u32> = gens.iter().flat_map(|&g| subsets(g)).collect();
    all.sort();
    all.dedup();
    all
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map(|x| x.len()).unwrap_or(0);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for k in c..cols {
                    let v = &rows[r][k] * &f;
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced relative cohomology of `(K, L)` restricted to vertex set `i`,
/// indexed from degree -1. `l = None` is the void complex.
fn relative_cohomology(k: &[u32], l: Option<&[u32]>, i: u32) -> Vec<u64> {
    let cells: Vec<u32> = k
        .iter()
        .copied()
        .filter(|&f| f & !i == 0)
        .filter(|f| l.map_or(true, |l| !l.contains(f)))
        .collect();
    let top = cells.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_dim[j] holds the cells of degree j - 1
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in &cells {
        by_dim[f.count_ones() as usize].push(f);
    }
    let mut ranks = vec![0usize; top + 2];
    for j in 0..top {
        let (src, dst) = (&by_dim[j], &by_dim[j + 1]);
        if src.is_empty() || dst.is_empty() {
            continue;
        }
        let rows: Vec<Vec<BigRational>> = dst
            .iter()
            .map(|&t| {
                src.iter()
                    .map(|&s| {
                        if s & t != s {
                            return BigRational::zero();
                        }
                        let v = (t & !s).trailing_zeros();
                        let pos = (t & ((1u32 << v) - 1)).count_ones();
                        if pos % 2 == 0 {
                            BigRational::one()
                        } else {
                            -BigRational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        ranks[j + 1] = rank(rows);
    }
    (0..=top).map(|j| (by_dim[j].len() - ranks[j + 1] - ranks[j]) as u64).collect()
}

pub struct Oracle {
    fan: Fan,
    model: Vec<u32>,
    complement: Option<Vec<u32>>,
    memo: HashMap<u32, Vec<u64>>,
}

impl Oracle {
    pub fn new(fan: &Fan, v: &SubvarietySpec) -> Self {
        let model = closure(fan.max_cones());
        let complement = if v.is_whole() {
            None
        } else {
            let kept: Vec<u32> =
                fan.cones().iter().copied().filter(|&s| !v.cones.iter().any(|&t| t & s == t)).collect();
            Some(closure(&kept))
        };
        Oracle { fan: fan.clone(), model, complement, memo: HashMap::new() }
    }

    fn piece(&mut self, sig: u32) -> &Vec<u64> {
        let (model, complement) = (&self.model, &self.complement);
        self.memo.entry(sig).or_insert_with(|| relative_cohomology(model, complement.as_deref(), sig))
    }

    /// Summed dimensions of `H^i` over all `m` with `|m|_∞ <= radius`.
    pub fn scan(&mut self, c: &[i64], radius: i64) -> Vec<u64> {
        let d = self.fan.dim();
        let rays: Vec<Vec<i64>> = self.fan.rays().to_vec();
        let mut out = vec![0u64; d + 2];
        let mut m = vec![-radius; d];
        loop {
            let mut sig = 0u32;
            for (i, r) in rays.iter().enumerate() {
                let v: i64 = r.iter().zip(&m).map(|(a, b)| a * b).sum();
                if v < -c[i] {
                    sig |= 1 << i;
                }
            }
            for (j, &h) in self.piece(sig).iter().enumerate() {
                if h > 0 {
                    if out.len() <= j {
                        out.resize(j + 1, 0);
                    }
                    out[j] += h;
                }
            }
            let mut k = 0;
            while k < d {
                m[k] += 1;
                if m[k] <= radius {
                    break;
                }
                m[k] = -radius;
                k += 1;
            }
            if k == d {
                break;
            }
        }
        out
    }

    /// Compares engine output with scans at two radii: finite entries must
    /// match both scans, infinite ones must grow between them.
    pub fn agrees(&mut self, c: &[i64], engine: &[Dim], radius: i64, outer: i64) -> Result<(), String> {
        let a = self.scan(c, radius);
        let b = self.scan(c, outer);
        let len = engine.len().max(a.len()).max(b.len());
        for i in 0..len {
            let e = engine.get(i).copied().unwrap_or(Dim::Finite(0));
            let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
            let ok = match e {
                Dim::Finite(k) => x == k && y == k,
                Dim::Infinite => y > x,
            };
            if !ok {
                return Err(format!("c={c:?} degree {i}: engine {e}, oracle {x} at {radius}, {y} at {outer}"));
            }
        }
        Ok(())
    }
}

/// Nonnegative integer solutions of `Σ k_i w_i = t`, `k_i >= 1` where
/// strict, by nested enumeration.
pub fn denumerant_brute(w: &[u64], t: i64, strict: &[bool]) -> u128 {
    fn go(w: &[u64], strict: &[bool], t: i64) -> u128 {
        if w.is_empty() {
            return (t == 0) as u128;
        }
        let lo = if strict[0] { 1 } else { 0 };
        let mut total = 0;
        let mut k = lo;
        while (k * w[0]) as i64 <= t {
            total += go(&w[1..], &strict[1..], t - (k * w[0]) as i64);
            k += 1;
        }
        total
    }
    if t < 0 {
        return 0;
    }
    go(w, strict, t)
}

/// `|det|` of a square integer matrix by cofactor expansion.
pub fn det_abs(m: &[Vec<i64>]) -> i64 {
    fn det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }
    det(m).abs()
}

pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("small coefficient")).collect()
}

