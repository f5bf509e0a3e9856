//! Reduced simplicial homology ranks over GF(2), GF(p) and the rationals.
//!
//! Chains are indexed by faces in sorted-vertex orientation; the boundary of
//! `[v0, ..., vd]` is `Σ (-1)^i [.., v̂i, ..]`. The chain complex is augmented
//! by the empty face in degree -1, so ranks are those of reduced homology.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Coefficient field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Gf2,
    Prime(u32),
    Rationals,
}

impl Field {
    /// `GF(p)`; `p = 2` maps to the bit-packed [`Field::Gf2`].
    pub fn prime(p: u32) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not a prime below 2^31")));
        }
        Ok(if p == 2 { Field::Gf2 } else { Field::Prime(p) })
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => write!(f, "gf2"),
            Field::Prime(p) => write!(f, "gf:{p}"),
            Field::Rationals => write!(f, "q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `gf2`, `q` and `gf:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        match s {
            "gf2" => Ok(Field::Gf2),
            "q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown field `{s}`")))?;
                Field::prime(p)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyConfig {
    /// Matrices with more columns than this use sparse elimination.
    pub dense_column_limit: usize,
}

impl Default for HomologyConfig {
    fn default() -> Self {
        HomologyConfig {
            dense_column_limit: 4096,
        }
    }
}

/// Boundary map `∂_d : C_d → C_{d-1}` in sparse column form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    /// `columns[j]` lists `(row, ±1)` in increasing row order.
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    fn from_levels(lower: &[VertexSet], upper: &[VertexSet]) -> BoundaryMatrix {
        let columns = upper
            .iter()
            .map(|face| {
                let mut col: Vec<(usize, i8)> = face
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let row = lower
                            .binary_search(&face.without(v))
                            .expect("boundary faces of a face are faces");
                        (row, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        BoundaryMatrix {
            rows: lower.len(),
            cols: upper.len(),
            columns,
        }
    }

    pub fn rank(&self, field: Field, cfg: &HomologyConfig) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let sparse = self.cols > cfg.dense_column_limit;
        match field {
            Field::Gf2 if sparse => rank_gf2_sparse(self),
            Field::Gf2 => rank_gf2_dense(self),
            Field::Prime(p) if sparse => rank_mod_p_sparse(self, p),
            Field::Prime(p) => rank_mod_p_dense(self, p),
            Field::Rationals => rank_rationals(self),
        }
    }

    /// `self ∘ rhs` over the integers, as a dense matrix.
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = vec![vec![0i64; rhs.cols]; self.rows];
        for (j, col) in rhs.columns.iter().enumerate() {
            for &(k, a) in col {
                for &(i, b) in &self.columns[k] {
                    out[i][j] += i64::from(a) * i64::from(b);
                }
            }
        }
        out
    }
}

/// `∂_d` of `x`, for `-1 <= d <= dim(x) + 1`.
pub fn boundary_matrix(x: &SimplicialComplex, d: isize) -> BoundaryMatrix {
    let levels = x.faces_by_size();
    boundary_from_levels(&levels, d)
}

fn boundary_from_levels(levels: &[Vec<VertexSet>], d: isize) -> BoundaryMatrix {
    assert!(d >= -1, "boundary degree must be at least -1");
    let empty: Vec<VertexSet> = Vec::new();
    let size = (d + 1) as usize;
    let upper = levels.get(size).unwrap_or(&empty);
    if size == 0 {
        // C_{-1} → 0.
        return BoundaryMatrix {
            rows: 0,
            cols: upper.len(),
            columns: vec![Vec::new(); upper.len()],
        };
    }
    let lower = levels.get(size - 1).unwrap_or(&empty);
    BoundaryMatrix::from_levels(lower, upper)
}

/// Reduced Betti numbers `dim H̃_d` for `d = -1, 0, 1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    /// `ranks[i]` is the rank in degree `i - 1`; degrees past the end are zero.
    pub ranks: Vec<usize>,
}

impl BettiVector {
    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.ranks.get((d + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Largest degree with nonzero homology.
    pub fn top_degree(&self) -> Option<isize> {
        self.ranks.iter().rposition(|&r| r != 0).map(|i| i as isize - 1)
    }

    /// `Σ (-1)^d rank H̃_d`.
    pub fn alternating_sum(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

pub fn reduced_betti(x: &SimplicialComplex, field: Field) -> BettiVector {
    reduced_betti_with(x, field, &HomologyConfig::default())
}

pub fn reduced_betti_with(x: &SimplicialComplex, field: Field, cfg: &HomologyConfig) -> BettiVector {
    reduced_betti_from_levels(&x.faces_by_size(), field, cfg)
}

/// Homology from faces grouped by size (`levels[k]` = faces with `k`
/// vertices, each level sorted by raw bits).
pub fn reduced_betti_from_levels(
    levels: &[Vec<VertexSet>],
    field: Field,
    cfg: &HomologyConfig,
) -> BettiVector {
    if levels.is_empty() {
        return BettiVector::default();
    }
    // rank ∂_d for d = -1 ..= top+1; index d + 1.
    let top = levels.len() as isize - 2;
    let ranks: Vec<usize> = (-1..=top + 1)
        .map(|d| boundary_from_levels(levels, d).rank(field, cfg))
        .collect();
    let betti = (-1..=top)
        .map(|d| {
            let idx = (d + 1) as usize;
            levels[idx].len() - ranks[idx] - ranks[idx + 1]
        })
        .collect();
    BettiVector { ranks: betti }
}

/// Largest degree `d >= min_degree` with `H̃_d != 0`, computing only the
/// boundary ranks that range needs (top degree first).
pub fn top_degree_at_least(
    levels: &[Vec<VertexSet>],
    min_degree: isize,
    field: Field,
    cfg: &HomologyConfig,
) -> Option<isize> {
    let top = levels.len() as isize - 2;
    let mut rank_above = 0;
    for d in (min_degree.max(-1)..=top).rev() {
        let rank_d = boundary_from_levels(levels, d).rank(field, cfg);
        if levels[(d + 1) as usize].len() > rank_d + rank_above {
            return Some(d);
        }
        rank_above = rank_d;
    }
    None
}

pub fn is_acyclic(x: &SimplicialComplex, field: Field) -> bool {
    reduced_betti(x, field).is_zero()
}

// Column-basis insertion: every column is reduced against stored pivots
// (keyed by highest nonzero row) and stored if anything survives.

fn rank_gf2_dense(m: &BoundaryMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v = vec![0u64; words];
        for &(r, _) in col {
            v[r / 64] ^= 1 << (r % 64);
        }
        loop {
            let Some(p) = highest_bit(&v) else { break };
            match &basis[p] {
                Some(b) => {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
                None => {
                    basis[p] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn rank_gf2_sparse(m: &BoundaryMatrix) -> usize {
    let mut basis: Vec<Option<Vec<usize>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v: Vec<usize> = col.iter().map(|&(r, _)| r).collect();
        while let Some(&p) = v.last() {
            match &basis[p] {
                Some(b) => v = sym_diff(&v, b),
                None => {
                    basis[p] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn signed_mod(x: i8, p: u64) -> u64 {
    if x >= 0 {
        x as u64 % p
    } else {
        p - ((-x) as u64 % p)
    }
}

fn rank_mod_p_dense(m: &BoundaryMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v = vec![0u64; m.rows];
        for &(r, s) in col {
            v[r] = signed_mod(s, p);
        }
        loop {
            let Some(piv) = v.iter().rposition(|&x| x != 0) else { break };
            match &basis[piv] {
                Some(b) => {
                    // b is normalized to b[piv] = 1.
                    let f = v[piv];
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + p - f * y % p) % p;
                    }
                }
                None => {
                    let inv = inv_mod(v[piv], p);
                    for x in v.iter_mut() {
                        *x = *x * inv % p;
                    }
                    basis[piv] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn rank_mod_p_sparse(m: &BoundaryMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let mut basis: Vec<Option<Vec<(usize, u64)>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v: Vec<(usize, u64)> = col.iter().map(|&(r, s)| (r, signed_mod(s, p))).collect();
        while let Some(&(piv, f)) = v.last() {
            match &basis[piv] {
                Some(b) => v = axpy_sparse(&v, b, p - f, p),
                None => {
                    let inv = inv_mod(f, p);
                    for e in v.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    basis[piv] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a + factor * b` mod p, dropping zeros.
fn axpy_sparse(a: &[(usize, u64)], b: &[(usize, u64)], factor: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(usize::MAX, |e| e.0);
        let rb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (row, val) = if ra < rb {
            i += 1;
            (ra, a[i - 1].1)
        } else if rb < ra {
            j += 1;
            (rb, factor * b[j - 1].1 % p)
        } else {
            i += 1;
            j += 1;
            (ra, (a[i - 1].1 + factor * b[j - 1].1) % p)
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    out
}

fn dense_rows(m: &BoundaryMatrix) -> Vec<Vec<i128>> {
    let mut rows = vec![vec![0i128; m.cols]; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, s) in col {
            rows[i][j] = i128::from(s);
        }
    }
    rows
}

/// Fraction-free (Bareiss) elimination; falls back to big integers if the
/// 128-bit pass overflows.
fn rank_rationals(m: &BoundaryMatrix) -> usize {
    let rows = dense_rows(m);
    if let Some(r) = bareiss_i128(rows.clone()) {
        return r;
    }
    let big = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_big(big)
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for i in rank + 1..nr {
            let lead = a[i][col];
            for j in col + 1..nc {
                let t = pivot
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[rank][j])?)?;
                a[i][j] = t / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..nr {
            let lead = a[i][col].clone();
            for j in col + 1..nc {
                let t = &pivot * &a[i][j] - &lead * &a[rank][j];
                a[i][j] = t / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
