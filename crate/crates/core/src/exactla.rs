//! Exact linear algebra over prime fields.
//!
//! Residues are stored as `u32` with the modulus carried alongside, and every
//! product is formed in `u64`, so any prime below `2^31` is supported.
//! Subspaces are kept in reduced row-echelon form; that basis is unique for a
//! given subspace and serves as its identity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u64) -> Result<u32> {
    if p >= (1 << 31) || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u32)
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= p as u64 { s - p as u64 } else { s }) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

#[inline]
pub fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod(a, p as u64 - 2, p)
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// A residue class modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    modulus: u32,
}

impl FpScalar {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        let modulus = check_prime(modulus)?;
        Ok(FpScalar {
            value: reduce_i64(value, modulus),
            modulus,
        })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn inverse(self) -> Option<Self> {
        (self.value != 0).then(|| FpScalar {
            value: inv_mod(self.value, self.modulus),
            ..self
        })
    }
}

impl std::ops::Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        FpScalar {
            value: add_mod(self.value, rhs.value, self.modulus),
            ..self
        }
    }
}

impl std::ops::Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        FpScalar {
            value: sub_mod(self.value, rhs.value, self.modulus),
            ..self
        }
    }
}

impl std::ops::Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        FpScalar {
            value: mul_mod(self.value, rhs.value, self.modulus),
            ..self
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Dense row-major matrix over `F_p`. Acts on column vectors, so a
/// `rows x cols` matrix is a map `F_p^cols -> F_p^rows`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of [`FpMatrix::decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
    pub rref: FpMatrix,
}

impl FpMatrix {
    pub fn new(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        let data = data.into_iter().map(|v| v % p).collect();
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data,
        })
    }

    /// Build from signed integer rows; entries are reduced mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&v| reduce_i64(v, p)));
        }
        Ok(FpMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p)
                    as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| add_mod(a, b, self.p))
            .collect();
        FpMatrix {
            data,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| sub_mod(a, b, self.p))
            .collect();
        FpMatrix {
            data,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let data = self.data.iter().map(|&a| mul_mod(a, c, self.p)).collect();
        FpMatrix {
            data,
            ..self.clone()
        }
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Stack `blocks` vertically; all must share the column count.
    pub fn vstack(p: u32, cols: usize, blocks: &[FpMatrix]) -> FpMatrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        FpMatrix {
            p,
            rows,
            cols,
            data,
        }
    }

    /// Reduced row-echelon form and the pivot columns, first-nonzero pivoting.
    pub fn rref_with_pivots(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref(&self) -> FpMatrix {
        self.rref_with_pivots().0
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != lead {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, lead * cols + k);
                }
            }
            let inv = inv_mod(self.data[lead * cols + c], p);
            if inv != 1 {
                for k in c..cols {
                    let v = &mut self.data[lead * cols + k];
                    *v = mul_mod(*v, inv, p);
                }
            }
            let (before, rest) = self.data.split_at_mut(lead * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let nf = (p - f) as u64;
                    for k in c..cols {
                        if pivot_row[k] != 0 {
                            row[k] = ((row[k] as u64 + nf * pivot_row[k] as u64) % p as u64) as u32;
                        }
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate on the shorter side
        if self.rows > self.cols {
            self.transpose().rref_with_pivots().1.len()
        } else {
            self.rref_with_pivots().1.len()
        }
    }

    /// Kernel `{v : M v = 0}` as a canonical subspace of `F_p^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = neg_mod(r.get(i, f), self.p);
            }
            vecs.push(v);
        }
        Subspace::from_spanning(self.p, self.cols, vecs)
    }

    /// Column space as a canonical subspace of `F_p^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(
            self.p,
            self.rows,
            (0..self.cols).map(|c| self.column(c)).collect(),
        )
    }

    pub fn decompose(&self) -> Decomposition {
        let (rref, pivots) = self.rref_with_pivots();
        let kernel = self.kernel();
        let image = Subspace::from_spanning(
            self.p,
            self.rows,
            pivots.iter().map(|&c| self.column(c)).collect(),
        );
        Decomposition {
            rank: pivots.len(),
            kernel,
            image,
            rref,
        }
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FpMatrix::zeros(self.p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.data[r * (self.cols + 1)..r * (self.cols + 1) + self.cols]
                .copy_from_slice(self.row(r));
            aug.data[r * (self.cols + 1) + self.cols] = b[r] % self.p;
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Some(x)
    }
}

/// A subspace of `F_p^n` held by its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    p: u32,
    ambient_dim: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

/// Result of [`subspace_ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub a_contains_b: bool,
}

impl Subspace {
    pub fn zero(p: u32, ambient_dim: usize) -> Self {
        Subspace {
            p,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u32, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![0; ambient_dim];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            p,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_spanning(p: u32, ambient_dim: usize, vectors: Vec<Vec<u32>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(p, ambient_dim);
        }
        let rows = vectors.len();
        let mut data = Vec::with_capacity(rows * ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length");
            data.extend(v.into_iter().map(|x| x % p));
        }
        let m = FpMatrix {
            p,
            rows,
            cols: ambient_dim,
            data,
        };
        let (r, pivots) = m.rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            p,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Positions that are not pivots; these index a canonical complement.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Canonical representative of `v` modulo this subspace: all pivot
    /// coordinates cleared.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let p = self.p;
        let mut w = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let f = w[pc];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(b) {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` (assumed to lie in the subspace) w.r.t. the basis.
    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Linear combination of basis vectors.
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![0u32; self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = add_mod(*x, mul_mod(*c, y, self.p), self.p);
                }
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.p, self.ambient_dim, vecs)
    }

    /// The annihilator under the standard dot product.
    pub fn orthogonal(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.p, self.ambient_dim);
        }
        let m = FpMatrix {
            p: self.p,
            rows: self.basis.len(),
            cols: self.ambient_dim,
            data: self.basis.concat(),
        };
        m.kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.orthogonal().sum(&other.orthogonal()).orthogonal()
    }

    /// Basis vectors as columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> FpMatrix {
        FpMatrix::from_columns(self.p, self.ambient_dim, &self.basis)
    }
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceOps> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    if a.p != b.p {
        return Err(Error::ModulusMismatch(a.p, b.p));
    }
    Ok(SubspaceOps {
        sum: a.sum(b),
        intersection: a.intersection(b),
        a_contains_b: a.contains_subspace(b),
    })
}
