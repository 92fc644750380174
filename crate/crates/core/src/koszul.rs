//! Koszul complexes, their (co)homology and Koszul grade.
//!
//! `K_p` has basis `e_a` for index tuples `a = (i_1 < ... < i_p)`, listed
//! lexicographically, and
//! `d_p(e_a) = sum_j (-1)^(j+1) x_(i_j) e_(a without i_j)`.
//! Cochains are obtained by transposing these matrices over the ring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finalg::{FiniteAlgebra, FiniteModule};
use crate::polyalg::{middle_cohomology_vanishes, PolyQuotient, Polynomial};
use crate::ring::{ring_matmul, CommRing, RingMatrix};

/// Koszul grade: a natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Grade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Grade::Finite(n) => write!(f, "{n}"),
            Grade::Infinite => write!(f, "inf"),
        }
    }
}

/// Increasing `p`-subsets of `0..n` in lexicographic order.
pub fn exterior_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            go(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        go(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone)]
pub struct KoszulComplex<'r, R: CommRing> {
    ring: &'r R,
    sequence: Vec<R::Elem>,
    tuples: Vec<Vec<Vec<usize>>>,
    differentials: Vec<RingMatrix<R::Elem>>,
}

/// Build `K_.(x)` and check `d_(p-1) d_p = 0`.
pub fn build_koszul<'r, R: CommRing>(ring: &'r R, x: &[R::Elem]) -> Result<KoszulComplex<'r, R>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let tuples: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| exterior_tuples(n, p)).collect();
    let mut differentials = Vec::with_capacity(n);
    for p in 1..=n {
        let (src, dst) = (&tuples[p], &tuples[p - 1]);
        let mut d = RingMatrix::filled(dst.len(), src.len(), ring.zero());
        for (col, alpha) in src.iter().enumerate() {
            for j in 0..p {
                let mut beta = alpha.clone();
                let i = beta.remove(j);
                let row = dst.binary_search(&beta).expect("face of a sorted tuple");
                let entry = if j % 2 == 0 {
                    x[i].clone()
                } else {
                    ring.neg(&x[i])
                };
                d.set(row, col, entry);
            }
        }
        differentials.push(d);
    }
    let k = KoszulComplex {
        ring,
        sequence: x.to_vec(),
        tuples,
        differentials,
    };
    assert!(
        k.composite_is_zero(),
        "Koszul differential does not square to zero"
    );
    Ok(k)
}

impl<'r, R: CommRing> KoszulComplex<'r, R> {
    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[R::Elem] {
        &self.sequence
    }

    /// `binomial(n, p)` for `p = 0..=n`.
    pub fn ranks(&self) -> Vec<usize> {
        self.tuples.iter().map(Vec::len).collect()
    }

    pub fn basis_labels(&self, p: usize) -> &[Vec<usize>] {
        &self.tuples[p]
    }

    /// `d_p : K_p -> K_(p-1)` for `1 <= p <= n`.
    pub fn differential(&self, p: usize) -> &RingMatrix<R::Elem> {
        &self.differentials[p - 1]
    }

    /// `d^p : K^p -> K^(p+1)`, the transpose of `d_(p+1)`, for `p < n`.
    pub fn codifferential(&self, p: usize) -> RingMatrix<R::Elem> {
        self.differentials[p].transpose()
    }

    pub fn composite_is_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| {
            ring_matmul(self.ring, &w[0], &w[1])
                .entries
                .iter()
                .all(|e| self.ring.is_zero(e))
        })
    }
}

/// `F_p`-dimensions of `H_p(x, M)` and `H^p(x, M)` for `p = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub n: usize,
    pub dims_homology: Vec<usize>,
    pub dims_cohomology: Vec<usize>,
}

impl HomologyTable {
    pub fn duality_holds(&self) -> bool {
        (0..=self.n).all(|p| self.dims_homology[p] == self.dims_cohomology[self.n - p])
    }

    /// Least `p` with `H^p != 0`.
    pub fn grade(&self) -> Grade {
        self.dims_cohomology
            .iter()
            .position(|&d| d != 0)
            .map_or(Grade::Infinite, Grade::Finite)
    }
}

pub fn koszul_homology(
    k: &KoszulComplex<'_, FiniteAlgebra>,
    m: &FiniteModule,
) -> Result<HomologyTable> {
    let r = k.ring();
    if m.action().len() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: m.action().len(),
        });
    }
    let n = k.len();
    let md = m.dim();
    let chain: Vec<usize> = k.ranks().iter().map(|&c| c * md).collect();
    // rank of d_p, p = 1..=n
    let d_rank: Vec<usize> = (1..=n)
        .map(|p| m.expand(k.differential(p)).rank())
        .collect();
    // rank of d^p, p = 0..n
    let co_rank: Vec<usize> = (0..n)
        .map(|p| m.expand(&k.codifferential(p)).rank())
        .collect();
    let at = |v: &[usize], i: isize| -> usize {
        if i < 0 {
            0
        } else {
            v.get(i as usize).copied().unwrap_or(0)
        }
    };
    let dims_homology = (0..=n)
        .map(|p| chain[p] - at(&d_rank, p as isize - 1) - at(&d_rank, p as isize))
        .collect();
    let dims_cohomology = (0..=n)
        .map(|p| chain[p] - at(&co_rank, p as isize) - at(&co_rank, p as isize - 1))
        .collect();
    Ok(HomologyTable {
        n,
        dims_homology,
        dims_cohomology,
    })
}

/// Whether `H^p(x, R) = 0` over a polynomial quotient ring.
pub fn koszul_cohomology_vanishes(k: &KoszulComplex<'_, PolyQuotient>, p: usize) -> Result<bool> {
    let n = k.len();
    if p > n {
        return Err(Error::IndexOutOfRange { index: p, max: n });
    }
    let outgoing = (p < n).then(|| k.codifferential(p));
    let incoming = (p > 0).then(|| k.codifferential(p - 1));
    middle_cohomology_vanishes(
        k.ring(),
        incoming.as_ref(),
        outgoing.as_ref(),
        binomial(n, p),
    )
}

/// `K.grade(I, M)` over a finite algebra for `I = (gens)`.
pub fn koszul_grade_finite(
    r: &FiniteAlgebra,
    gens: &[Vec<u32>],
    m: &FiniteModule,
) -> Result<Grade> {
    let k = build_koszul(r, gens)?;
    Ok(koszul_homology(&k, m)?.grade())
}

/// `K.grade(I, R)` over a polynomial quotient ring for `I = (gens)`.
pub fn koszul_grade_poly(q: &PolyQuotient, gens: &[Polynomial]) -> Result<Grade> {
    let gens: Vec<Polynomial> = gens.iter().map(|g| q.reduce(g)).collect();
    let k = build_koszul(q, &gens)?;
    for p in 0..=k.len() {
        if !koszul_cohomology_vanishes(&k, p)? {
            return Ok(Grade::Finite(p));
        }
    }
    Ok(Grade::Infinite)
}
