//! Finite-dimensional commutative unital `F_p`-algebras.
//!
//! An algebra is given by structure constants on a basis `e_0..e_{d-1}`.
//! Elements are coefficient vectors, ideals are multiplication-stable
//! subspaces, and modules are sets of action matrices, so every question
//! here reduces to exact linear algebra.
//!
//! Local decomposition uses the Frobenius map `x -> x^p`, which is
//! `F_p`-linear in characteristic `p`: its high powers kill exactly the
//! nilradical, and its fixed points are the `F_p`-span of the primitive
//! idempotents.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{
    add_mod, check_prime, inv_mod, mul_mod, neg_mod, reduce_i64, sub_mod, FpMatrix, Subspace,
};
use crate::polyalg::{
    buchberger, normal_form, quotient_monomial_basis, Monomial, PolyRing, Polynomial, QuotientBasis,
};
use crate::ring::{CommRing, RingMatrix};

/// Raw structure-constant description of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub p: u64,
    pub basis: Vec<String>,
    /// `mul_table[i][j]` is the coefficient vector of `e_i * e_j`.
    pub mul_table: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    p: u32,
    basis_names: Vec<String>,
    mul_table: Vec<Vec<Vec<u32>>>,
    unit: Vec<u32>,
    /// Multiplication-by-`e_i` operators.
    ops: Vec<FpMatrix>,
}

fn unit_vector(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

impl FiniteAlgebra {
    pub fn from_structure_constants(spec: &StructureConstants) -> Result<Self> {
        let p = check_prime(spec.p)?;
        let d = spec.basis.len();
        if d == 0 {
            return Err(Error::ZeroAlgebra);
        }
        let bad_len = |found: usize| Error::DimensionMismatch { expected: d, found };
        if spec.mul_table.len() != d {
            return Err(bad_len(spec.mul_table.len()));
        }
        if spec.unit.len() != d {
            return Err(bad_len(spec.unit.len()));
        }
        let mut table = Vec::with_capacity(d);
        for row in &spec.mul_table {
            if row.len() != d {
                return Err(bad_len(row.len()));
            }
            let mut r = Vec::with_capacity(d);
            for v in row {
                if v.len() != d {
                    return Err(bad_len(v.len()));
                }
                r.push(v.iter().map(|&c| reduce_i64(c, p)).collect());
            }
            table.push(r);
        }
        let unit = spec.unit.iter().map(|&c| reduce_i64(c, p)).collect();
        Self::from_table(p, spec.basis.clone(), table, unit)
    }

    /// Validating constructor from reduced structure constants.
    pub fn from_table(
        p: u32,
        basis_names: Vec<String>,
        mul_table: Vec<Vec<Vec<u32>>>,
        unit: Vec<u32>,
    ) -> Result<Self> {
        let alg = Self::unchecked(p, basis_names, mul_table, unit);
        alg.validate()?;
        Ok(alg)
    }

    fn unchecked(
        p: u32,
        basis_names: Vec<String>,
        mul_table: Vec<Vec<Vec<u32>>>,
        unit: Vec<u32>,
    ) -> Self {
        let d = basis_names.len();
        let ops = (0..d)
            .map(|i| {
                let cols: Vec<Vec<u32>> = (0..d).map(|j| mul_table[i][j].clone()).collect();
                FpMatrix::from_columns(p, d, &cols)
            })
            .collect();
        FiniteAlgebra {
            p,
            basis_names,
            mul_table,
            unit,
            ops,
        }
    }

    /// The zero ring, valid only as a module value.
    pub fn zero_algebra(p: u32) -> Self {
        Self::unchecked(p, Vec::new(), Vec::new(), Vec::new())
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                if self.mul_table[i][j] != self.mul_table[j][i] {
                    return Err(Error::NotCommutative(i, j));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul(&self.mul_table[i][j], &unit_vector(d, k));
                    let right = self.mul(&unit_vector(d, i), &self.mul_table[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..d {
            if self.mul(&self.unit, &unit_vector(d, i)) != unit_vector(d, i) {
                return Err(Error::BadUnit(i));
            }
        }
        Ok(())
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mul_table(&self) -> &[Vec<Vec<u32>>] {
        &self.mul_table
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        unit_vector(self.dim(), i)
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.dim() == 0
    }

    pub fn require_ring(&self) -> Result<()> {
        if self.is_zero_algebra() {
            Err(Error::ZeroAlgebra)
        } else {
            Ok(())
        }
    }

    /// Operators of multiplication by each basis element.
    pub fn to_structure_constants(&self) -> StructureConstants {
        let wide = |v: &[u32]| v.iter().map(|&c| c as i64).collect::<Vec<_>>();
        StructureConstants {
            p: self.p as u64,
            basis: self.basis_names.clone(),
            mul_table: self
                .mul_table
                .iter()
                .map(|row| row.iter().map(|v| wide(v)).collect())
                .collect(),
            unit: wide(&self.unit),
        }
    }

    pub fn basis_operators(&self) -> &[FpMatrix] {
        &self.ops
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = self.dim();
        let p = self.p;
        let mut out = vec![0u32; d];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = mul_mod(ai, bj, p);
                for (o, &t) in out.iter_mut().zip(&self.mul_table[i][j]) {
                    if t != 0 {
                        *o = add_mod(*o, mul_mod(c, t, p), p);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| add_mod(x, y, self.p))
            .collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| sub_mod(x, y, self.p))
            .collect()
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| mul_mod(x, c, self.p)).collect()
    }

    /// Human-readable form in terms of the basis names.
    pub fn format_element(&self, a: &[u32]) -> String {
        let mut parts = Vec::new();
        for (c, name) in a.iter().zip(&self.basis_names) {
            match (*c, name.as_str()) {
                (0, _) => {}
                (c, "1") => parts.push(c.to_string()),
                (1, n) => parts.push(n.to_string()),
                (c, n) => parts.push(format!("{c}*{n}")),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Matrix of `y -> a y`.
    pub fn mult_matrix(&self, a: &[u32]) -> FpMatrix {
        let d = self.dim();
        let mut m = FpMatrix::zeros(self.p, d, d);
        for (i, &ai) in a.iter().enumerate() {
            if ai != 0 {
                m = m.add(&self.ops[i].scale(ai));
            }
        }
        m
    }

    pub fn is_unit(&self, a: &[u32]) -> bool {
        self.mult_matrix(a).rank() == self.dim()
    }

    /// Matrix of the Frobenius map `x -> x^p`.
    pub fn frobenius_matrix(&self) -> FpMatrix {
        let d = self.dim();
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|i| self.pow(&unit_vector(d, i), self.p as u64))
            .collect();
        FpMatrix::from_columns(self.p, d, &cols)
    }

    /// Smallest `k` with `p^k >= dim`.
    fn frobenius_depth(&self) -> u64 {
        let mut k = 0;
        let mut q: u128 = 1;
        while q < self.dim() as u128 {
            q *= self.p as u128;
            k += 1;
        }
        k
    }

    /// Express the algebra in a new basis; `columns` are the new basis
    /// vectors in old coordinates and must be invertible.
    pub fn change_basis(&self, columns: &FpMatrix) -> Result<FiniteAlgebra> {
        let d = self.dim();
        let inv = invert(columns).ok_or(Error::DimensionMismatch {
            expected: d,
            found: columns.rank(),
        })?;
        let new: Vec<Vec<u32>> = (0..d).map(|i| columns.column(i)).collect();
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| inv.mul_vec(&self.mul(&new[i], &new[j])))
                    .collect()
            })
            .collect();
        let names = (0..d).map(|i| format!("b{i}")).collect();
        FiniteAlgebra::from_table(self.p, names, table, inv.mul_vec(&self.unit))
    }

    /// Direct product `A x B`.
    pub fn product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        let (a, b) = (self.dim(), other.dim());
        let d = a + b;
        let mut table = vec![vec![vec![0u32; d]; d]; d];
        for i in 0..a {
            for j in 0..a {
                table[i][j][..a].copy_from_slice(&self.mul_table[i][j]);
            }
        }
        for i in 0..b {
            for j in 0..b {
                table[a + i][a + j][a..].copy_from_slice(&other.mul_table[i][j]);
            }
        }
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        let mut names: Vec<String> = self.basis_names.iter().map(|n| format!("{n}_1")).collect();
        names.extend(other.basis_names.iter().map(|n| format!("{n}_2")));
        FiniteAlgebra::from_table(self.p, names, table, unit)
    }

    /// `F_p^m` in its idempotent basis `e1..em`.
    pub fn field_product(p: u64, m: usize) -> Result<FiniteAlgebra> {
        let p = check_prime(p)?;
        if m == 0 {
            return Err(Error::ZeroAlgebra);
        }
        let mut table = vec![vec![vec![0u32; m]; m]; m];
        for (i, row) in table.iter_mut().enumerate() {
            row[i][i] = 1;
        }
        let names = (1..=m).map(|i| format!("e{i}")).collect();
        FiniteAlgebra::from_table(p, names, table, vec![1; m])
    }
}

/// Inverse of a square matrix, if it exists.
pub fn invert(m: &FpMatrix) -> Option<FpMatrix> {
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let cols: Option<Vec<Vec<u32>>> = (0..n).map(|i| m.solve(&unit_vector(n, i))).collect();
    let cols = cols?;
    Some(FpMatrix::from_columns(m.modulus(), n, &cols))
}

impl CommRing for FiniteAlgebra {
    type Elem = Vec<u32>;

    fn modulus(&self) -> u32 {
        self.p
    }

    fn zero(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }

    fn one(&self) -> Vec<u32> {
        self.unit.clone()
    }

    fn scalar(&self, c: u32) -> Vec<u32> {
        self.scale(c % self.p, &self.unit)
    }

    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        FiniteAlgebra::add(self, a, b)
    }

    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|&x| neg_mod(x, self.p)).collect()
    }

    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        FiniteAlgebra::mul(self, a, b)
    }

    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&x| x == 0)
    }
}

/// An ideal, identified by its canonical subspace. The generators it was
/// built from are kept for reporting only.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgIdeal {
    space: Subspace,
    generators: Vec<Vec<u32>>,
}

impl PartialEq for AlgIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

impl Eq for AlgIdeal {}

impl AlgIdeal {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.space.dim() == self.space.ambient_dim()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    pub fn contains_ideal(&self, other: &AlgIdeal) -> bool {
        self.space.contains_subspace(&other.space)
    }

    /// A small generating set: canonical basis vectors kept greedily while
    /// they enlarge the ideal they generate.
    pub fn small_generators(&self, r: &FiniteAlgebra) -> Vec<Vec<u32>> {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        let mut span = Subspace::zero(r.modulus(), r.dim());
        for b in self.space.basis() {
            if !span.contains(b) {
                gens.push(b.clone());
                span = ideal_closure(r, &gens).space;
            }
            if span == self.space {
                break;
            }
        }
        gens
    }
}

/// Smallest ideal containing `gens`.
pub fn ideal_closure(r: &FiniteAlgebra, gens: &[Vec<u32>]) -> AlgIdeal {
    let d = r.dim();
    let mut space = Subspace::from_spanning(r.modulus(), d, gens.to_vec());
    loop {
        let mut vecs = space.basis().to_vec();
        for v in space.basis() {
            for op in r.basis_operators() {
                vecs.push(op.mul_vec(v));
            }
        }
        let next = Subspace::from_spanning(r.modulus(), d, vecs);
        if next == space {
            break;
        }
        space = next;
    }
    AlgIdeal {
        space,
        generators: gens.to_vec(),
    }
}

pub fn ideal_from_space(space: Subspace) -> AlgIdeal {
    let generators = space.basis().to_vec();
    AlgIdeal { space, generators }
}

pub fn whole_ring(r: &FiniteAlgebra) -> AlgIdeal {
    ideal_closure(r, &[r.unit().to_vec()])
}

pub fn zero_ideal(r: &FiniteAlgebra) -> AlgIdeal {
    ideal_closure(r, &[])
}

pub fn ideal_sum(a: &AlgIdeal, b: &AlgIdeal) -> AlgIdeal {
    let mut generators = a.generators.clone();
    generators.extend(b.generators.iter().cloned());
    AlgIdeal {
        space: a.space.sum(&b.space),
        generators,
    }
}

/// Product ideal `I J`.
pub fn ideal_product(r: &FiniteAlgebra, a: &AlgIdeal, b: &AlgIdeal) -> AlgIdeal {
    let mut prods = Vec::new();
    for x in a.space.basis() {
        for y in b.space.basis() {
            prods.push(r.mul(x, y));
        }
    }
    ideal_from_space(Subspace::from_spanning(r.modulus(), r.dim(), prods))
}

/// `{r : r I = 0}`.
pub fn annihilator(r: &FiniteAlgebra, ideal: &AlgIdeal) -> AlgIdeal {
    let d = r.dim();
    if ideal.is_zero() {
        return ideal_from_space(Subspace::full(r.modulus(), d));
    }
    let blocks: Vec<FpMatrix> = ideal
        .space
        .basis()
        .iter()
        .map(|s| r.mult_matrix(s))
        .collect();
    ideal_from_space(FpMatrix::vstack(r.modulus(), d, &blocks).kernel())
}

/// `R / I` with the projection `R -> R/I` (rows index the quotient basis,
/// which is the set of non-pivot coordinates of `I`).
pub fn quotient_algebra(r: &FiniteAlgebra, ideal: &AlgIdeal) -> (FiniteAlgebra, FpMatrix) {
    let d = r.dim();
    let p = r.modulus();
    let free = ideal.space.free_positions();
    let q = free.len();
    let mut proj = FpMatrix::zeros(p, q, d);
    for j in 0..d {
        let red = ideal.space.reduce(&unit_vector(d, j));
        for (k, &pos) in free.iter().enumerate() {
            proj.set(k, j, red[pos]);
        }
    }
    let table = free
        .iter()
        .map(|&i| {
            free.iter()
                .map(|&j| proj.mul_vec(&r.mul_table[i][j]))
                .collect()
        })
        .collect();
    let unit = proj.mul_vec(r.unit());
    let names = free.iter().map(|&i| r.basis_names[i].clone()).collect();
    (FiniteAlgebra::unchecked(p, names, table, unit), proj)
}

/// The nilradical, computed as the kernel of a high Frobenius power.
pub fn radical(r: &FiniteAlgebra) -> AlgIdeal {
    let k = r.frobenius_depth();
    let f = r.frobenius_matrix().pow(k);
    ideal_from_space(f.kernel())
}

pub fn socle(r: &FiniteAlgebra) -> AlgIdeal {
    annihilator(r, &radical(r))
}

/// One local factor `eR` of a finite algebra.
#[derive(Debug, Clone)]
pub struct LocalFactor {
    /// Primitive idempotent in coordinates of the parent algebra.
    pub idempotent: Vec<u32>,
    /// The maximal ideal `(1 - e)R + rad R` of the parent.
    pub maximal_ideal: AlgIdeal,
    /// `eR` in its own basis, with unit `e`.
    pub algebra: FiniteAlgebra,
    /// Columns are the basis of `eR` in parent coordinates.
    pub embedding: Subspace,
    /// `dim_Fp` of the socle of `eR`.
    pub socle_dim: usize,
    /// `dim_Fp` of the residue field of `eR`.
    pub residue_degree: usize,
}

impl LocalFactor {
    /// Parent element to factor coordinates via `x -> e x`.
    pub fn project(&self, parent: &FiniteAlgebra, x: &[u32]) -> Vec<u32> {
        self.embedding.coords(&parent.mul(&self.idempotent, x))
    }

    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        self.embedding.lift(coords)
    }

    /// Artinian local rings are Gorenstein iff the socle is one-dimensional
    /// over the residue field.
    pub fn is_gorenstein(&self) -> bool {
        self.socle_dim == self.residue_degree
    }
}

/// Maximal ideals and local factors, ordered by canonical idempotent.
pub fn local_decompose(r: &FiniteAlgebra) -> Result<Vec<LocalFactor>> {
    r.require_ring()?;
    let p = r.modulus();
    let d = r.dim();
    let rad = radical(r);
    let mut idems = primitive_idempotents(r);
    idems.sort();
    let mut out = Vec::with_capacity(idems.len());
    for e in idems {
        let complement = r.sub(r.unit(), &e);
        let mut gens = vec![complement];
        gens.extend(rad.space.basis().iter().cloned());
        let maximal_ideal = ideal_closure(r, &gens);

        let embedding = r.mult_matrix(&e).image();
        let basis = embedding.basis().to_vec();
        let table = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| embedding.coords(&r.mul(x, y)))
                    .collect()
            })
            .collect();
        let names = (0..basis.len()).map(|i| format!("f{i}")).collect();
        let algebra = FiniteAlgebra::unchecked(p, names, table, embedding.coords(&e));
        let local_rad = radical(&algebra);
        let socle_dim = annihilator(&algebra, &local_rad).dim();
        let residue_degree = algebra.dim() - local_rad.dim();
        debug_assert_eq!(d - maximal_ideal.dim(), residue_degree);
        out.push(LocalFactor {
            idempotent: e,
            maximal_ideal,
            algebra,
            embedding,
            socle_dim,
            residue_degree,
        });
    }
    Ok(out)
}

pub fn is_local(r: &FiniteAlgebra) -> bool {
    primitive_idempotents(r).len() == 1
}

/// Primitive idempotents, found by splitting `1` along the Frobenius-fixed
/// subalgebra `{x : x^p = x}`, which is split semisimple.
pub fn primitive_idempotents(r: &FiniteAlgebra) -> Vec<Vec<u32>> {
    let p = r.modulus();
    let d = r.dim();
    let fixed = r.frobenius_matrix().sub(&FpMatrix::identity(p, d)).kernel();
    let mut idems = vec![r.unit().to_vec()];
    for b in fixed.basis() {
        let mut next = Vec::new();
        for e in idems {
            let y = r.mul(&e, b);
            let roots = min_poly_roots(r, &e, &y);
            if roots.len() <= 1 {
                next.push(e);
                continue;
            }
            for &lambda in &roots {
                let mut acc = e.clone();
                for &mu in roots.iter().filter(|&&m| m != lambda) {
                    let factor = r.sub(&y, &r.scale(mu, &e));
                    let inv = inv_mod(sub_mod(lambda, mu, p), p);
                    acc = r.scale(inv, &r.mul(&acc, &factor));
                }
                next.push(acc);
            }
        }
        idems = next;
    }
    idems
}

/// Roots of the minimal polynomial of `y` inside `eR` (unit `e`), which
/// splits with distinct roots when `y` is Frobenius-fixed.
fn min_poly_roots(r: &FiniteAlgebra, e: &[u32], y: &[u32]) -> Vec<u32> {
    let p = r.modulus();
    let d = r.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = r.mul(powers.last().unwrap(), y);
        let m = FpMatrix::from_columns(p, d, &powers);
        if let Some(c) = m.solve(&next) {
            // t^k - sum c_i t^i, low to high
            let mut f: Vec<u32> = c.iter().map(|&x| neg_mod(x, p)).collect();
            f.push(1);
            return split_roots(&f, p);
        }
        powers.push(next);
    }
}

// Univariate helpers over F_p; polynomials are coefficient vectors, low to high.

fn trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let dm = m.len() - 1;
    let inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let da = a.len() - 1;
        let c = mul_mod(a[da], inv, p);
        for (i, &mi) in m.iter().enumerate() {
            let slot = &mut a[da - dm + i];
            *slot = sub_mod(*slot, mul_mod(c, mi, p), p);
        }
        a = trim(a);
    }
    a
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    poly_rem(&out, m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        a.iter_mut().for_each(|c| *c = mul_mod(*c, inv, p));
    }
    a
}

fn poly_div_exact(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u32; rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = mul_mod(rem[dr], inv, p);
        q[dr - db] = c;
        for (i, &bi) in b.iter().enumerate() {
            let slot = &mut rem[dr - db + i];
            *slot = sub_mod(*slot, mul_mod(c, bi, p), p);
        }
        rem = trim(rem);
    }
    q
}

/// Roots of a monic polynomial that splits into distinct linear factors.
/// Small fields are searched directly; otherwise Cantor-Zassenhaus splitting.
fn split_roots(f: &[u32], p: u32) -> Vec<u32> {
    let f = trim(f.to_vec());
    let deg = f.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![mul_mod(neg_mod(f[0], p), inv_mod(f[1], p), p)];
    }
    if p <= 1024 {
        let eval = |x: u32| {
            f.iter()
                .rev()
                .fold(0u32, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
        };
        return (0..p).filter(|&x| eval(x) == 0).collect();
    }
    let exp = (p as u64 - 1) / 2;
    for delta in 0..p {
        // (t + delta)^((p-1)/2) - 1 mod f
        let mut acc = vec![1u32];
        let mut base = poly_rem(&[delta, 1], &f, p);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, &f, p);
            }
            base = poly_mulmod(&base, &base, &f, p);
            e >>= 1;
        }
        if acc.is_empty() {
            acc.push(0);
        }
        acc[0] = sub_mod(acc[0], 1, p);
        let g = poly_gcd(&f, &acc, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = poly_div_exact(&f, &g, p);
            let mut roots = split_roots(&g, p);
            roots.extend(split_roots(&h, p));
            roots.sort_unstable();
            return roots;
        }
    }
    unreachable!("split polynomial did not split")
}

/// All ideals of `R`, each exactly once, ordered by dimension then
/// canonical basis. Requires `p^dim <= budget`.
pub fn enumerate_ideals(r: &FiniteAlgebra, budget: u128) -> Result<Vec<AlgIdeal>> {
    r.require_ring()?;
    let p = r.modulus() as u128;
    let d = r.dim() as u32;
    let required = p.checked_pow(d).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    // every ideal is a sum of principal ideals
    let mut principal: Vec<Subspace> = Vec::new();
    let mut seen: HashSet<Subspace> = HashSet::new();
    for x in all_vectors(r.modulus(), r.dim()) {
        let s = ideal_closure(r, &[x]).space;
        if seen.insert(s.clone()) {
            principal.push(s);
        }
    }
    let mut found: HashSet<Subspace> = seen.clone();
    let mut queue: VecDeque<Subspace> = principal.iter().cloned().collect();
    while let Some(j) = queue.pop_front() {
        for pi in &principal {
            if j.contains_subspace(pi) {
                continue;
            }
            let s = j.sum(pi);
            if found.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut ideals: Vec<AlgIdeal> = found.into_iter().map(ideal_from_space).collect();
    ideals.sort_by(|a, b| (a.dim(), a.space.basis()).cmp(&(b.dim(), b.space.basis())));
    Ok(ideals)
}

/// Every vector of `F_p^d`, in lexicographic order.
pub fn all_vectors(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u128).pow(d as u32);
    (0..total).map(move |mut n| {
        let mut v = vec![0u32; d];
        for slot in v.iter_mut().rev() {
            *slot = (n % p as u128) as u32;
            n /= p as u128;
        }
        v
    })
}

/// A finite module over a finite algebra, given by the action matrices of
/// the algebra's basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    p: u32,
    dim: usize,
    action: Vec<FpMatrix>,
}

impl FiniteModule {
    pub fn new(r: &FiniteAlgebra, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        if action.len() != r.dim() {
            return Err(Error::DimensionMismatch {
                expected: r.dim(),
                found: action.len(),
            });
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: a.rows(),
                });
            }
        }
        let m = FiniteModule {
            p: r.modulus(),
            dim,
            action,
        };
        m.validate(r)?;
        Ok(m)
    }

    fn validate(&self, r: &FiniteAlgebra) -> Result<()> {
        let d = r.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.element_action(&r.mul_table()[i][j]);
                if lhs != rhs {
                    return Err(Error::BadModuleAction(i, j));
                }
            }
        }
        if self.element_action(r.unit()) != FpMatrix::identity(self.p, self.dim) {
            return Err(Error::BadUnit(0));
        }
        Ok(())
    }

    pub fn regular(r: &FiniteAlgebra) -> Self {
        FiniteModule {
            p: r.modulus(),
            dim: r.dim(),
            action: r.basis_operators().to_vec(),
        }
    }

    pub fn zero(r: &FiniteAlgebra) -> Self {
        FiniteModule {
            p: r.modulus(),
            dim: 0,
            action: vec![FpMatrix::zeros(r.modulus(), 0, 0); r.dim()],
        }
    }

    /// `R^rank`, coordinates grouped by summand.
    pub fn free(r: &FiniteAlgebra, rank: usize) -> Self {
        let d = r.dim();
        let p = r.modulus();
        let action = r
            .basis_operators()
            .iter()
            .map(|op| {
                let mut m = FpMatrix::zeros(p, d * rank, d * rank);
                for s in 0..rank {
                    for i in 0..d {
                        for j in 0..d {
                            m.set(s * d + i, s * d + j, op.get(i, j));
                        }
                    }
                }
                m
            })
            .collect();
        FiniteModule {
            p,
            dim: d * rank,
            action,
        }
    }

    /// The cyclic module `R / I`.
    pub fn cyclic(r: &FiniteAlgebra, ideal: &AlgIdeal) -> Self {
        let regular = Self::regular(r);
        regular.quotient(&ideal.space)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Action of an arbitrary algebra element.
    pub fn element_action(&self, x: &[u32]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    /// Submodule generated by `vectors`.
    pub fn span(&self, vectors: &[Vec<u32>]) -> Subspace {
        let mut vecs = vectors.to_vec();
        for v in vectors {
            for a in &self.action {
                vecs.push(a.mul_vec(v));
            }
        }
        // one round suffices: the action of R on v already spans R v
        Subspace::from_spanning(self.p, self.dim, vecs)
    }

    /// `I M` for an ideal `I`.
    pub fn ideal_times(&self, ideal: &AlgIdeal) -> Subspace {
        let mut vecs = Vec::new();
        for x in ideal.space().basis() {
            let a = self.element_action(x);
            for i in 0..self.dim {
                vecs.push(a.column(i));
            }
        }
        Subspace::from_spanning(self.p, self.dim, vecs)
    }

    /// Restriction of the action to a stable subspace, in the subspace's
    /// canonical basis.
    pub fn submodule(&self, sub: &Subspace) -> FiniteModule {
        let action = self.action.iter().map(|a| restrict(a, sub)).collect();
        FiniteModule {
            p: self.p,
            dim: sub.dim(),
            action,
        }
    }

    /// The quotient `M / N` on the non-pivot coordinates of `N`.
    pub fn quotient(&self, sub: &Subspace) -> FiniteModule {
        let free = sub.free_positions();
        let q = free.len();
        let action = self
            .action
            .iter()
            .map(|a| {
                let mut m = FpMatrix::zeros(self.p, q, q);
                for (c, &fc) in free.iter().enumerate() {
                    let img = sub.reduce(&a.column(fc));
                    for (r, &fr) in free.iter().enumerate() {
                        m.set(r, c, img[fr]);
                    }
                }
                m
            })
            .collect();
        FiniteModule {
            p: self.p,
            dim: q,
            action,
        }
    }

    /// `e M` as a module over the local factor `eR`.
    pub fn restrict_to_factor(&self, factor: &LocalFactor) -> FiniteModule {
        let e_action = self.element_action(&factor.idempotent);
        let image = e_action.image();
        let action = factor
            .embedding
            .basis()
            .iter()
            .map(|b| restrict(&self.element_action(b), &image))
            .collect();
        FiniteModule {
            p: self.p,
            dim: image.dim(),
            action,
        }
    }

    /// `F_p` matrix of a ring matrix acting on direct sums of this module:
    /// block `(r, c)` is the action of entry `(r, c)`.
    pub fn expand(&self, m: &RingMatrix<Vec<u32>>) -> FpMatrix {
        let k = self.dim;
        let mut out = FpMatrix::zeros(self.p, m.rows * k, m.cols * k);
        for r in 0..m.rows {
            for c in 0..m.cols {
                let entry = m.get(r, c);
                if entry.iter().all(|&x| x == 0) {
                    continue;
                }
                let a = self.element_action(entry);
                for i in 0..k {
                    for j in 0..k {
                        out.set(r * k + i, c * k + j, a.get(i, j));
                    }
                }
            }
        }
        out
    }

    /// `{m : x m = 0 for all x in xs}`.
    pub fn common_kernel(&self, xs: &[Vec<u32>]) -> Subspace {
        if xs.is_empty() {
            return Subspace::full(self.p, self.dim);
        }
        let blocks: Vec<FpMatrix> = xs.iter().map(|x| self.element_action(x)).collect();
        FpMatrix::vstack(self.p, self.dim, &blocks).kernel()
    }
}

fn restrict(a: &FpMatrix, sub: &Subspace) -> FpMatrix {
    let k = sub.dim();
    let cols: Vec<Vec<u32>> = sub
        .basis()
        .iter()
        .map(|b| sub.coords(&a.mul_vec(b)))
        .collect();
    FpMatrix::from_columns(a.modulus(), k, &cols)
}

/// `A (+) M`: the algebra on `A x M` with `(a, m)(a', m') = (aa', am' + a'm)`.
pub fn idealization(a: &FiniteAlgebra, m: &FiniteModule) -> Result<FiniteAlgebra> {
    a.require_ring()?;
    let (da, dm) = (a.dim(), m.dim());
    let d = da + dm;
    let mut table = vec![vec![vec![0u32; d]; d]; d];
    for i in 0..da {
        for j in 0..da {
            table[i][j][..da].copy_from_slice(&a.mul_table()[i][j]);
        }
        for k in 0..dm {
            let col = m.action()[i].column(k);
            table[i][da + k][da..].copy_from_slice(&col);
            table[da + k][i][da..].copy_from_slice(&col);
        }
    }
    let mut unit = a.unit().to_vec();
    unit.extend(std::iter::repeat_n(0, dm));
    let mut names: Vec<String> = a.basis_names().to_vec();
    if dm == 1 {
        names.push("t".into());
    } else {
        names.extend((1..=dm).map(|k| format!("t{k}")));
    }
    FiniteAlgebra::from_table(a.modulus(), names, table, unit)
}

/// A finite quotient `F_p[x]/I` together with the data to map polynomials
/// into it.
#[derive(Debug, Clone)]
pub struct ZeroDimQuotient {
    pub algebra: FiniteAlgebra,
    pub monomials: Vec<Monomial>,
    pub gb: Vec<Polynomial>,
    pub ring: Arc<PolyRing>,
}

impl ZeroDimQuotient {
    /// Coordinates of the residue class of `f`.
    pub fn image(&self, f: &Polynomial) -> Result<Vec<u32>> {
        let nf = normal_form(f, &self.gb)?;
        Ok(self.monomials.iter().map(|m| nf.coefficient(m)).collect())
    }

    /// Images of the ring variables, named after them.
    pub fn symbols(&self) -> Vec<(String, Vec<u32>)> {
        (0..self.ring.nvars())
            .map(|i| {
                (
                    self.ring.vars()[i].clone(),
                    self.image(&Polynomial::var(&self.ring, i)).unwrap(),
                )
            })
            .collect()
    }
}

/// Structure constants of `F_p[x]/I` on its standard monomials.
pub fn algebra_from_zero_dim_quotient(
    ring: &Arc<PolyRing>,
    ideal_gens: &[Polynomial],
) -> Result<ZeroDimQuotient> {
    let QuotientBasis::Finite(monomials) = quotient_monomial_basis(ring, ideal_gens)? else {
        return Err(Error::InfiniteDimensional);
    };
    if monomials.is_empty() {
        return Err(Error::ZeroAlgebra);
    }
    let gb = buchberger(ring, ideal_gens)?;
    let coords = |f: &Polynomial| -> Result<Vec<u32>> {
        let nf = normal_form(f, &gb)?;
        Ok(monomials.iter().map(|m| nf.coefficient(m)).collect())
    };
    let mut table = Vec::with_capacity(monomials.len());
    for a in &monomials {
        let mut row = Vec::with_capacity(monomials.len());
        for b in &monomials {
            row.push(coords(&Polynomial::term(ring, a.mul(b), 1))?);
        }
        table.push(row);
    }
    let unit = coords(&Polynomial::one(ring))?;
    let names = monomials.iter().map(|m| ring.format_monomial(m)).collect();
    let algebra = FiniteAlgebra::from_table(ring.modulus(), names, table, unit)?;
    Ok(ZeroDimQuotient {
        algebra,
        monomials,
        gb,
        ring: ring.clone(),
    })
}

/// `F_p[x]/(x^k)`.
pub fn chain_ring(p: u64, k: u32) -> Result<ZeroDimQuotient> {
    let ring = PolyRing::new(p, ["x"], Default::default())?;
    let gen = Polynomial::term(&ring, Monomial::from_exponents(&[k])?, 1);
    algebra_from_zero_dim_quotient(&ring, &[gen])
}

pub fn truncation_var_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// `F_p[x_1..x_n] / (x_1..x_n)^deg`.
pub fn truncated_polynomial_ring(p: u64, n: usize, deg: u32) -> Result<ZeroDimQuotient> {
    let ring = PolyRing::new(p, truncation_var_names(n), Default::default())?;
    let gens = ring
        .monomials_up_to(deg)
        .into_iter()
        .filter(|m| m.degree() == deg)
        .map(|m| Polynomial::term(&ring, m, 1))
        .collect::<Vec<_>>();
    algebra_from_zero_dim_quotient(&ring, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(
        p: u64,
        basis: &[&str],
        table: Vec<Vec<Vec<i64>>>,
        unit: Vec<i64>,
    ) -> Result<FiniteAlgebra> {
        FiniteAlgebra::from_structure_constants(&StructureConstants {
            p,
            basis: basis.iter().map(|s| s.to_string()).collect(),
            mul_table: table,
            unit,
        })
    }

    fn trunc() -> ZeroDimQuotient {
        truncated_polynomial_ring(2, 2, 2).unwrap()
    }

    fn sym(q: &ZeroDimQuotient, name: &str) -> Vec<u32> {
        q.symbols().into_iter().find(|(n, _)| n == name).unwrap().1
    }

    #[test]
    fn structure_constant_validation() {
        assert!(sc(2, &["1"], vec![vec![vec![1]]], vec![1]).is_ok());
        // basis {1, e} with e^2 = e
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]];
        assert!(sc(2, &["1", "e"], t, vec![1, 0]).is_ok());
        // e_0 e_0 = e_1, e_0 e_1 = e_1, e_1 e_1 = e_0: (e0 e0) e1 = e0 != e0 (e0 e1) = e1
        let t = vec![vec![vec![0, 1], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
        assert!(matches!(
            sc(2, &["a", "b"], t, vec![1, 0]),
            Err(Error::NotAssociative(..)) | Err(Error::BadUnit(_))
        ));
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![0, 1]]];
        assert_eq!(
            sc(2, &["1", "e"], t, vec![1, 0]),
            Err(Error::NotCommutative(0, 1))
        );
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]];
        assert_eq!(sc(2, &["1", "e"], t, vec![0, 1]), Err(Error::BadUnit(0)));
    }

    #[test]
    fn non_associative_triple_is_named() {
        // unit e0, a^2 = b, ab = a, b^2 = 0: (aa)b = 0 but a(ab) = b
        let mut t = vec![vec![vec![0i64; 3]; 3]; 3];
        for i in 0..3 {
            t[0][i][i] = 1;
            t[i][0][i] = 1;
        }
        t[1][1] = vec![0, 0, 1];
        t[1][2] = vec![0, 1, 0];
        t[2][1] = vec![0, 1, 0];
        assert_eq!(
            sc(3, &["1", "a", "b"], t, vec![1, 0, 0]),
            Err(Error::NotAssociative(1, 1, 2))
        );
    }

    #[test]
    fn zero_dim_quotients() {
        let q = trunc();
        assert_eq!(q.algebra.dim(), 3);
        let (x, y) = (sym(&q, "x"), sym(&q, "y"));
        assert!(q.algebra.mul(&x, &x).iter().all(|&c| c == 0));
        assert!(q.algebra.mul(&x, &y).iter().all(|&c| c == 0));
        let c = chain_ring(2, 2).unwrap();
        assert_eq!(c.algebra.dim(), 2);
        let x = sym(&c, "x");
        assert!(c.algebra.mul(&x, &x).iter().all(|&v| v == 0));
        assert_eq!(chain_ring(2, 1).unwrap().algebra.dim(), 1);

        let r = PolyRing::new(2, ["x", "y"], Default::default()).unwrap();
        let gens = vec![Polynomial::var(&r, 0)];
        assert_eq!(
            algebra_from_zero_dim_quotient(&r, &gens).unwrap_err(),
            Error::InfiniteDimensional
        );
    }

    #[test]
    fn ideal_closure_examples() {
        let q = trunc();
        let r = &q.algebra;
        assert!(ideal_closure(r, &[r.unit().to_vec()]).is_whole());
        assert_eq!(ideal_closure(r, &[sym(&q, "x")]).dim(), 1);
        assert!(ideal_closure(r, &[]).is_zero());
    }

    #[test]
    fn annihilator_examples() {
        let q = trunc();
        let r = &q.algebra;
        let m = ideal_closure(r, &[sym(&q, "x"), sym(&q, "y")]);
        assert_eq!(annihilator(r, &m), m);
        assert!(annihilator(r, &whole_ring(r)).is_zero());
        assert!(annihilator(r, &zero_ideal(r)).is_whole());
    }

    #[test]
    fn quotient_examples() {
        let c = chain_ring(2, 2).unwrap();
        let r = &c.algebra;
        let (q0, _) = quotient_algebra(r, &zero_ideal(r));
        assert_eq!(&q0, r);
        let (q1, proj) = quotient_algebra(r, &ideal_closure(r, &[sym(&c, "x")]));
        assert_eq!(q1.dim(), 1);
        assert_eq!(q1.mul_table(), &[vec![vec![1u32]]]);
        assert_eq!(proj.mul_vec(r.unit()), vec![1]);
        let (q2, _) = quotient_algebra(r, &whole_ring(r));
        assert!(q2.is_zero_algebra());
        assert_eq!(q2.require_ring(), Err(Error::ZeroAlgebra));
    }

    #[test]
    fn local_decomposition_examples() {
        let f = FiniteAlgebra::field_product(2, 2).unwrap();
        let fs = local_decompose(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|l| l.algebra.dim() == 1 && l.socle_dim == 1));

        let t = local_decompose(&trunc().algebra).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].maximal_ideal.dim(), 2);
        assert_eq!(t[0].socle_dim, 2);

        let c = chain_ring(3, 3).unwrap();
        let l = local_decompose(&c.algebra).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(
            l[0].maximal_ideal,
            ideal_closure(&c.algebra, &[sym(&c, "x")])
        );
        assert_eq!(l[0].socle_dim, 1);
    }

    #[test]
    fn extension_residue_fields_and_large_primes() {
        // F_2[x]/(x^2+x+1) = F_4: local with residue degree 2
        let r = PolyRing::new(2, ["x"], Default::default()).unwrap();
        let f = crate::polyalg::parse_poly(&r, "x^2+x+1").unwrap();
        let q = algebra_from_zero_dim_quotient(&r, &[f]).unwrap();
        let l = local_decompose(&q.algebra).unwrap();
        assert_eq!((l.len(), l[0].residue_degree, l[0].socle_dim), (1, 2, 2));
        assert!(l[0].is_gorenstein());

        // F_p[x]/((x-1)(x-2)(x-3)^2) for a large prime: three factors
        let r = PolyRing::new(1_000_003, ["x"], Default::default()).unwrap();
        let f = crate::polyalg::parse_poly(&r, "(x-1)*(x-2)*(x-3)^2").unwrap();
        let q = algebra_from_zero_dim_quotient(&r, &[f]).unwrap();
        let l = local_decompose(&q.algebra).unwrap();
        let mut dims: Vec<usize> = l.iter().map(|f| f.algebra.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        let total: Vec<u32> = l
            .iter()
            .fold(vec![0; 4], |acc, f| q.algebra.add(&acc, &f.idempotent));
        assert_eq!(total, q.algebra.unit());
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(
            enumerate_ideals(&chain_ring(2, 2).unwrap().algebra, 4096)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(enumerate_ideals(&trunc().algebra, 4096).unwrap().len(), 6);
        assert_eq!(
            enumerate_ideals(&chain_ring(2, 1).unwrap().algebra, 4096)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_ideals(&FiniteAlgebra::field_product(2, 2).unwrap(), 4096)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            enumerate_ideals(&trunc().algebra, 7),
            Err(Error::BudgetExceeded {
                required: 8,
                budget: 7
            })
        );
    }

    #[test]
    fn idealization_examples() {
        let f2 = chain_ring(2, 1).unwrap().algebra;
        let dual = idealization(&f2, &FiniteModule::regular(&f2)).unwrap();
        let c = chain_ring(2, 2).unwrap().algebra;
        assert_eq!(dual.mul_table(), c.mul_table());
        assert_eq!(dual.unit(), c.unit());

        let same = idealization(&c, &FiniteModule::zero(&c)).unwrap();
        assert_eq!(same.mul_table(), c.mul_table());

        let m = ideal_closure(&c, &[vec![0, 1]]);
        let k = FiniteModule::cyclic(&c, &m);
        let big = idealization(&c, &k).unwrap();
        assert_eq!(big.dim(), 3);
        let l = local_decompose(&big).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].socle_dim, 2);
        let rad = radical(&big);
        assert!(ideal_product(&big, &rad, &rad).is_zero());
    }

    #[test]
    fn module_axioms_are_checked() {
        let c = chain_ring(2, 2).unwrap().algebra;
        let bad = vec![FpMatrix::identity(2, 1), FpMatrix::identity(2, 1)];
        assert_eq!(
            FiniteModule::new(&c, 1, bad),
            Err(Error::BadModuleAction(1, 1))
        );
        let ok = vec![FpMatrix::identity(2, 1), FpMatrix::zeros(2, 1, 1)];
        assert!(FiniteModule::new(&c, 1, ok).is_ok());
    }
}
