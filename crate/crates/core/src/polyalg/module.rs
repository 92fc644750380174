use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{CommRing, RingMatrix};

use super::gb::{Ctx, SVec};
use super::monomial::Monomial;
use super::poly::{same_ring, PolyRing, Polynomial};

fn ctx(ring: &PolyRing) -> Ctx {
    Ctx {
        p: ring.modulus(),
        order: ring.order(),
    }
}

fn poly_to_svec(f: &Polynomial, pos: usize) -> SVec {
    SVec {
        terms: f
            .terms()
            .iter()
            .map(|(m, c)| (pos, m.clone(), *c))
            .collect(),
    }
}

fn svec_to_poly(ring: &Arc<PolyRing>, v: &SVec) -> Polynomial {
    Polynomial::from_sorted(
        ring,
        v.terms.iter().map(|(_, m, c)| (m.clone(), *c)).collect(),
    )
}

fn check_same(ring: &Arc<PolyRing>, polys: &[&Polynomial]) -> Result<()> {
    if polys.iter().all(|f| same_ring(ring, f.ring())) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` (zeros dropped).
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    check_same(ring, &gens.iter().collect::<Vec<_>>())?;
    let svecs = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| poly_to_svec(g, 0))
        .collect();
    let gb = ctx(ring).groebner(svecs, true);
    Ok(gb.iter().map(|v| svec_to_poly(ring, v)).collect())
}

/// Remainder of `f` on division by a Groebner basis; zero iff `f` is in the ideal.
pub fn normal_form(f: &Polynomial, gb: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring();
    check_same(ring, &gb.iter().collect::<Vec<_>>())?;
    let basis: Vec<SVec> = gb.iter().map(|g| poly_to_svec(g, 0)).collect();
    Ok(svec_to_poly(
        ring,
        &ctx(ring).reduce(poly_to_svec(f, 0), &basis),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientBasis {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Standard monomials of `F_p[x]/I`, or `Infinite` when the quotient is not
/// finite dimensional.
pub fn quotient_monomial_basis(
    ring: &Arc<PolyRing>,
    ideal_gens: &[Polynomial],
) -> Result<QuotientBasis> {
    let gb = buchberger(ring, ideal_gens)?;
    let leads: Vec<&Monomial> = gb.iter().map(|g| &g.lead().unwrap().0).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Ok(QuotientBasis::Finite(Vec::new()));
    }
    let n = ring.nvars();
    let mut bound = vec![u16::MAX; n];
    for m in &leads {
        if let Some(i) = m.pure_power_of() {
            bound[i] = bound[i].min(m.exponents()[i]);
        }
    }
    if bound.contains(&u16::MAX) {
        return Ok(QuotientBasis::Infinite);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let m = Monomial::from_exponents(&cur)?;
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box below the pure-power bounds
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| ring.cmp(a, b));
                return Ok(QuotientBasis::Finite(out));
            }
            cur[i] += 1;
            if cur[i] < bound[i] as u32 {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// A polynomial ring together with a relation ideal `I0`; elements are
/// polynomials read modulo `I0`. With no relations this is the polynomial
/// ring itself.
#[derive(Debug, Clone)]
pub struct PolyQuotient {
    ring: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    relation_gb: Vec<Polynomial>,
}

impl PolyQuotient {
    pub fn new(ring: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Self> {
        let relation_gb = buchberger(ring, &relations)?;
        Ok(PolyQuotient {
            ring: ring.clone(),
            relations,
            relation_gb,
        })
    }

    pub fn polynomial_ring(ring: &Arc<PolyRing>) -> Self {
        PolyQuotient {
            ring: ring.clone(),
            relations: Vec::new(),
            relation_gb: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn relation_gb(&self) -> &[Polynomial] {
        &self.relation_gb
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.relation_gb).expect("ring mismatch")
    }

    /// Reduced Groebner basis of `I + I0`.
    pub fn ideal_gb(&self, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let mut all = gens.to_vec();
        all.extend(self.relation_gb.iter().cloned());
        buchberger(&self.ring, &all)
    }

    /// Whether the ideal generated by `gens` is the whole ring.
    pub fn is_unit_ideal(&self, gens: &[Polynomial]) -> Result<bool> {
        let gb = self.ideal_gb(gens)?;
        Ok(normal_form(&Polynomial::one(&self.ring), &gb)?.is_zero())
    }

    fn check_vec(&self, v: &ModuleVector, rank: usize) -> Result<()> {
        if v.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: v.rank(),
            });
        }
        check_same(&self.ring, &v.components.iter().collect::<Vec<_>>())
    }
}

impl CommRing for PolyQuotient {
    type Elem = Polynomial;

    fn modulus(&self) -> u32 {
        self.ring.modulus()
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.ring)
    }

    fn one(&self) -> Polynomial {
        self.reduce(&Polynomial::one(&self.ring))
    }

    fn scalar(&self, c: u32) -> Polynomial {
        self.reduce(&Polynomial::constant(&self.ring, c as i64))
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }

    fn neg(&self, a: &Polynomial) -> Polynomial {
        a.neg()
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.reduce(&a.mul(b))
    }

    fn is_zero(&self, a: &Polynomial) -> bool {
        self.reduce(a).is_zero()
    }
}

/// An element of the free module `R^rank`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "module vectors have positive rank");
        ModuleVector { components }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        Self::new(vec![Polynomial::zero(ring); rank])
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    fn to_svec(&self, offset: usize) -> SVec {
        let mut terms = Vec::new();
        for (i, f) in self.components.iter().enumerate() {
            terms.extend(f.terms().iter().map(|(m, c)| (i + offset, m.clone(), *c)));
        }
        SVec { terms }
    }

    fn from_svec(ring: &Arc<PolyRing>, v: &SVec, offset: usize, rank: usize) -> Self {
        let mut comps = vec![Vec::new(); rank];
        for (pos, m, c) in &v.terms {
            comps[pos - offset].push((m.clone(), *c));
        }
        ModuleVector::new(
            comps
                .into_iter()
                .map(|t| Polynomial::from_sorted(ring, t))
                .collect(),
        )
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Reduced Groebner basis of a submodule of `R^rank` under the
/// position-over-term order (position 0 most significant). Relations of the
/// ambient quotient are adjoined on every coordinate.
#[derive(Debug, Clone)]
pub struct ModuleGB {
    ring: Arc<PolyRing>,
    rank: usize,
    basis: Vec<SVec>,
}

impl ModuleGB {
    pub fn compute(q: &PolyQuotient, gens: &[ModuleVector], rank: usize) -> Result<Self> {
        for g in gens {
            q.check_vec(g, rank)?;
        }
        let mut svecs: Vec<SVec> = gens.iter().map(|g| g.to_svec(0)).collect();
        for pos in 0..rank {
            svecs.extend(q.relation_gb.iter().map(|g| poly_to_svec(g, pos)));
        }
        let basis = ctx(&q.ring).groebner(svecs, rank == 1);
        Ok(ModuleGB {
            ring: q.ring.clone(),
            rank,
            basis,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> Vec<ModuleVector> {
        self.basis
            .iter()
            .map(|v| ModuleVector::from_svec(&self.ring, v, 0, self.rank))
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn normal_form(&self, v: &ModuleVector) -> Result<ModuleVector> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: v.rank(),
            });
        }
        let r = ctx(&self.ring).reduce(v.to_svec(0), &self.basis);
        Ok(ModuleVector::from_svec(&self.ring, &r, 0, self.rank))
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }
}

/// Whether `v` lies in the submodule generated by `gens` (plus the relation
/// ideal on every coordinate).
pub fn submodule_contains(
    q: &PolyQuotient,
    gens: &[ModuleVector],
    v: &ModuleVector,
) -> Result<bool> {
    let rank = gens.first().map_or(v.rank(), ModuleVector::rank);
    q.check_vec(v, rank)?;
    ModuleGB::compute(q, gens, rank)?.contains(v)
}

/// Matrix-vector product over the quotient ring.
pub fn apply_matrix(
    q: &PolyQuotient,
    matrix: &RingMatrix<Polynomial>,
    v: &ModuleVector,
) -> ModuleVector {
    assert_eq!(matrix.cols, v.rank());
    let comps = (0..matrix.rows)
        .map(|r| {
            let mut acc = q.zero();
            for c in 0..matrix.cols {
                acc = acc.add(&matrix.get(r, c).mul(&v.components[c]));
            }
            q.reduce(&acc)
        })
        .collect();
    ModuleVector::new(comps)
}

/// Generators of `{v in R^cols : matrix * v = 0}` over the quotient ring.
///
/// Computed by completing `{(A e_j, e_j)}` in `R^(rows + cols)` with the
/// image coordinates ranked first; basis elements whose lead lies past the
/// image block have vanishing image part. Generators that are zero in the
/// quotient or redundant are dropped.
pub fn module_kernel(
    q: &PolyQuotient,
    matrix: &RingMatrix<Polynomial>,
) -> Result<Vec<ModuleVector>> {
    let (r, c) = (matrix.rows, matrix.cols);
    check_same(&q.ring, &matrix.entries.iter().collect::<Vec<_>>())?;
    let cx = ctx(&q.ring);
    let mut svecs = Vec::with_capacity(c);
    for j in 0..c {
        let mut terms = Vec::new();
        for i in 0..r {
            let f = q.reduce(matrix.get(i, j));
            terms.extend(f.terms().iter().map(|(m, a)| (i, m.clone(), *a)));
        }
        terms.push((r + j, Monomial::one(q.ring.nvars()), 1));
        svecs.push(SVec { terms });
    }
    for pos in 0..r + c {
        svecs.extend(q.relation_gb.iter().map(|g| poly_to_svec(g, pos)));
    }
    let gb = cx.groebner(svecs, false);
    let mut kernel: Vec<ModuleVector> = gb
        .iter()
        .filter(|v| v.terms[0].0 >= r)
        .map(|v| ModuleVector::from_svec(&q.ring, v, r, c))
        .map(|v| ModuleVector::new(v.components.iter().map(|f| q.reduce(f)).collect()))
        .filter(|v| !v.is_zero())
        .collect();
    prune_generators(q, &mut kernel, c)?;
    Ok(kernel)
}

/// Drop generators lying in the submodule spanned by the others.
pub fn prune_generators(q: &PolyQuotient, gens: &mut Vec<ModuleVector>, rank: usize) -> Result<()> {
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let others: Vec<ModuleVector> = gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        if ModuleGB::compute(q, &others, rank)?.contains(&gens[i])? {
            gens.remove(i);
        }
    }
    Ok(())
}

/// Whether `ker(outgoing)` lies in `im(incoming)` inside `R^rank`, i.e.
/// whether cohomology vanishes at the middle of `R^a -> R^rank -> R^b`.
/// `None` stands for a zero map.
pub fn middle_cohomology_vanishes(
    q: &PolyQuotient,
    incoming: Option<&RingMatrix<Polynomial>>,
    outgoing: Option<&RingMatrix<Polynomial>>,
    rank: usize,
) -> Result<bool> {
    if rank == 0 {
        return Ok(true);
    }
    let kernel = match outgoing {
        Some(m) if m.rows > 0 => module_kernel(q, m)?,
        _ => (0..rank)
            .map(|i| {
                let mut comps = vec![Polynomial::zero(&q.ring); rank];
                comps[i] = q.one();
                ModuleVector::new(comps)
            })
            .filter(|v| !v.is_zero())
            .collect(),
    };
    if kernel.is_empty() {
        return Ok(true);
    }
    let image: Vec<ModuleVector> = match incoming {
        Some(m) => (0..m.cols)
            .map(|c| ModuleVector::new(m.column(c).iter().map(|f| q.reduce(f)).collect()))
            .filter(|v| !v.is_zero())
            .collect(),
        None => Vec::new(),
    };
    let gb = ModuleGB::compute(q, &image, rank)?;
    for v in &kernel {
        if !gb.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
