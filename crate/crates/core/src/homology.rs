//! Free resolutions, Ext against the ring, projective dimension and
//! self-injective dimension.
//!
//! Over a finite algebra a resolution is computed stage by stage: the
//! kernel of each surjection from a free module is an `F_p`-subspace, and
//! the next free module maps onto it through a chosen generating set.
//! `Ext^i(M, R)` is the cohomology of `Hom(F_., R)`, whose coboundaries are
//! the transposed differentials acting on `R`.
//!
//! Minimal resolutions are only canonical over local rings, so the
//! minimal-resolution entry points work one local factor at a time;
//! Ext and projective dimension split over the factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, Subspace};
use crate::finalg::{
    enumerate_ideals, local_decompose, radical, AlgIdeal, FiniteAlgebra, FiniteModule,
};
use crate::polyalg::{middle_cohomology_vanishes, module_kernel, PolyQuotient, Polynomial};
use crate::ring::RingMatrix;

pub const DEFAULT_CUTOFF: usize = 6;
pub const DEFAULT_RANK_BOUND: usize = 64;

/// How generators of each syzygy are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generators {
    /// A basis of `K / rad(R) K`, lifted. Minimal when `R` is local.
    Minimal,
    /// Every vector of a basis of `K`.
    Redundant,
}

#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub ring: FiniteAlgebra,
    /// `a_0, a_1, ...` with `F_i = R^(a_i)`.
    pub ranks: Vec<usize>,
    /// `d_i : F_i -> F_(i-1)` for `i >= 1`, an `a_(i-1) x a_i` matrix.
    pub differentials: Vec<RingMatrix<Vec<u32>>>,
    /// Images in `M` of the basis of `F_0`.
    pub augmentation: Vec<Vec<u32>>,
    pub module: FiniteModule,
    pub minimal: bool,
    /// Whether the last computed kernel was zero.
    pub complete: bool,
}

impl FreeResolution {
    /// Projective dimension, if the resolution terminated.
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.ranks.len() - 1)
    }

    fn augmentation_matrix(&self) -> FpMatrix {
        surjection(&self.module, &self.augmentation)
    }

    /// Exactness at every computed stage, as an equality of canonical
    /// subspaces.
    pub fn is_exact(&self) -> bool {
        let reg = FiniteModule::regular(&self.ring);
        let d = self.ring.dim();
        let eps = self.augmentation_matrix();
        if eps.rank() != self.module.dim() {
            return false;
        }
        let mut kernel = eps.kernel();
        for (i, di) in self.differentials.iter().enumerate() {
            let m = reg.expand(di);
            if m.image() != kernel {
                return false;
            }
            kernel = m.kernel();
            debug_assert_eq!(kernel.ambient_dim(), d * self.ranks[i + 1]);
        }
        !self.complete || kernel.is_zero()
    }

    /// `dim Ext^i(M, R)` for `i = 0..=cutoff`; the resolution must reach
    /// stage `cutoff + 1` or be complete.
    pub fn ext_dims(&self, cutoff: usize) -> Vec<usize> {
        assert!(
            self.complete || self.differentials.len() > cutoff,
            "resolution too short for Ext up to {cutoff}"
        );
        let reg = FiniteModule::regular(&self.ring);
        let d = self.ring.dim();
        // rank of the coboundary Hom(F_i, R) -> Hom(F_(i+1), R)
        let co_rank: Vec<usize> = self
            .differentials
            .iter()
            .take(cutoff + 1)
            .map(|di| reg.expand(&di.transpose()).rank())
            .collect();
        (0..=cutoff)
            .map(|i| {
                let a = self.ranks.get(i).copied().unwrap_or(0);
                let out = co_rank.get(i).copied().unwrap_or(0);
                let inc = if i == 0 {
                    0
                } else {
                    co_rank.get(i - 1).copied().unwrap_or(0)
                };
                d * a - out - inc
            })
            .collect()
    }
}

fn surjection(target: &FiniteModule, gens: &[Vec<u32>]) -> FpMatrix {
    let mut cols = Vec::with_capacity(gens.len() * target.action().len());
    for g in gens {
        for a in target.action() {
            cols.push(a.mul_vec(g));
        }
    }
    FpMatrix::from_columns(target.modulus(), target.dim(), &cols)
}

fn choose_generators(
    ambient: &FiniteModule,
    sub: &Subspace,
    rad: &AlgIdeal,
    mode: Generators,
) -> Vec<Vec<u32>> {
    match mode {
        Generators::Redundant => sub.basis().to_vec(),
        Generators::Minimal => {
            let mut rad_sub = Vec::new();
            for x in rad.space().basis() {
                let a = ambient.element_action(x);
                rad_sub.extend(sub.basis().iter().map(|s| a.mul_vec(s)));
            }
            let mut span = Subspace::from_spanning(ambient.modulus(), ambient.dim(), rad_sub);
            let mut gens = Vec::new();
            for b in sub.basis() {
                if !span.contains(b) {
                    span = span.sum(&ambient.span(std::slice::from_ref(b)));
                    gens.push(b.clone());
                }
            }
            gens
        }
    }
}

/// Resolution of `M` over `R` computed through stage `cutoff`.
pub fn resolve(
    r: &FiniteAlgebra,
    m: &FiniteModule,
    cutoff: usize,
    mode: Generators,
) -> FreeResolution {
    let d = r.dim();
    let rad = radical(r);
    let mut ambient = m.clone();
    let mut sub = Subspace::full(r.modulus(), m.dim());
    let mut ranks = Vec::new();
    let mut differentials = Vec::new();
    let mut augmentation = Vec::new();
    let mut complete = false;
    for stage in 0..=cutoff {
        let gens = choose_generators(&ambient, &sub, &rad, mode);
        let k = gens.len();
        ranks.push(k);
        if stage == 0 {
            augmentation = gens.clone();
        } else {
            let rows = ranks[stage - 1];
            let cols: Vec<Vec<Vec<u32>>> = gens
                .iter()
                .map(|g| (0..rows).map(|s| g[s * d..(s + 1) * d].to_vec()).collect())
                .collect();
            differentials.push(RingMatrix::from_columns(rows, &cols, vec![0; d]));
        }
        let kernel = surjection(&ambient, &gens).kernel();
        if kernel.is_zero() {
            complete = true;
            break;
        }
        ambient = FiniteModule::free(r, k);
        sub = kernel;
    }
    FreeResolution {
        ring: r.clone(),
        ranks,
        differentials,
        augmentation,
        module: m.clone(),
        minimal: mode == Generators::Minimal && crate::finalg::is_local(r),
        complete,
    }
}

/// A resolution over `R` itself: minimal when `R` is local, otherwise
/// built from greedily chosen generators modulo the radical.
pub fn free_resolution_finite(
    r: &FiniteAlgebra,
    m: &FiniteModule,
    cutoff: usize,
) -> Result<FreeResolution> {
    r.require_ring()?;
    Ok(resolve(r, m, cutoff, Generators::Minimal))
}

/// Minimal resolutions of `e M` over each local factor `eR`.
pub fn factor_resolutions(
    r: &FiniteAlgebra,
    m: &FiniteModule,
    cutoff: usize,
) -> Result<Vec<FreeResolution>> {
    Ok(local_decompose(r)?
        .iter()
        .map(|f| {
            resolve(
                &f.algebra,
                &m.restrict_to_factor(f),
                cutoff,
                Generators::Minimal,
            )
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTable {
    /// `dim_Fp Ext^i(M, R)` for `i = 0..=cutoff`.
    pub dims: Vec<usize>,
}

impl ExtTable {
    pub fn vanishes_through(&self, d: usize) -> bool {
        self.dims.iter().take(d + 1).all(|&x| x == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.dims.iter().position(|&x| x != 0)
    }
}

/// `Ext^i(M, R)` for `i <= cutoff`, summed over minimal factor resolutions.
pub fn ext_dims_finite(r: &FiniteAlgebra, m: &FiniteModule, cutoff: usize) -> Result<ExtTable> {
    let mut dims = vec![0; cutoff + 1];
    for res in factor_resolutions(r, m, cutoff + 1)? {
        for (acc, x) in dims.iter_mut().zip(res.ext_dims(cutoff)) {
            *acc += x;
        }
    }
    Ok(ExtTable { dims })
}

/// The same table from one global resolution whose generators are whole
/// kernel bases. Slow, and independent of the local decomposition.
pub fn ext_dims_redundant(r: &FiniteAlgebra, m: &FiniteModule, cutoff: usize) -> Result<ExtTable> {
    r.require_ring()?;
    let res = resolve(r, m, cutoff + 1, Generators::Redundant);
    Ok(ExtTable {
        dims: res.ext_dims(cutoff),
    })
}

/// Projective dimension, or the fact that it exceeds the cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pd {
    Finite(usize),
    ExceedsCutoff,
}

/// Minimal factor resolutions decide `pd` exactly when they terminate by
/// `cutoff`. The zero module gets `0`.
pub fn pd_cutoff(r: &FiniteAlgebra, m: &FiniteModule, cutoff: usize) -> Result<Pd> {
    let mut pd = 0;
    for res in factor_resolutions(r, m, cutoff)? {
        match res.length() {
            Some(l) => pd = pd.max(l),
            None => return Ok(Pd::ExceedsCutoff),
        }
    }
    Ok(Pd::Finite(pd))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InjDim {
    Zero,
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfInjectiveDim {
    pub value: InjDim,
    pub gorenstein_factors: Vec<bool>,
    pub socle_dims: Vec<usize>,
}

/// `id_R R` of a finite ring: zero exactly when every local factor is
/// Gorenstein, infinite otherwise.
pub fn self_injective_dim_finite(r: &FiniteAlgebra) -> Result<SelfInjectiveDim> {
    let factors = local_decompose(r)?;
    let gorenstein_factors: Vec<bool> = factors.iter().map(|f| f.is_gorenstein()).collect();
    let value = if gorenstein_factors.iter().all(|&g| g) {
        InjDim::Zero
    } else {
        InjDim::Infinity
    };
    Ok(SelfInjectiveDim {
        value,
        gorenstein_factors,
        socle_dims: factors.iter().map(|f| f.socle_dim).collect(),
    })
}

/// Baer's criterion: `R` is self-injective iff `Ext^1(R/I, R) = 0` for
/// every ideal `I`.
pub fn baer_self_injective(r: &FiniteAlgebra, budget: u128) -> Result<bool> {
    for ideal in enumerate_ideals(r, budget)? {
        let m = FiniteModule::cyclic(r, &ideal);
        if ext_dims_finite(r, &m, 1)?.dims[1] != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `Ext^i(R/I, R) = 0` over a polynomial quotient ring, from a
/// Schreyer resolution of `R/I` through stage `i + 1`.
pub fn ext_is_zero_poly(
    q: &PolyQuotient,
    ideal_gens: &[Polynomial],
    i: usize,
    rank_bound: usize,
) -> Result<bool> {
    if ideal_gens.is_empty() {
        return Err(Error::EmptySequence);
    }
    if q.is_unit_ideal(ideal_gens)? {
        return Ok(true);
    }
    let gens: Vec<Polynomial> = ideal_gens
        .iter()
        .map(|g| q.reduce(g))
        .filter(|g| !g.is_zero())
        .collect();
    let zero = Polynomial::zero(q.ring());
    // d_1 : R^k -> R, then successive kernels
    let mut ranks = vec![1usize];
    let mut diffs: Vec<RingMatrix<Polynomial>> = Vec::new();
    if !gens.is_empty() {
        ranks.push(gens.len());
        diffs.push(RingMatrix {
            rows: 1,
            cols: gens.len(),
            entries: gens,
        });
    }
    while diffs.len() < i + 1 && diffs.len() + 1 == ranks.len() {
        let last = diffs.last().unwrap();
        let kernel = module_kernel(q, last)?;
        if kernel.is_empty() {
            break;
        }
        if kernel.len() > rank_bound {
            return Err(Error::ResolutionTooLarge {
                rank: kernel.len(),
                bound: rank_bound,
            });
        }
        let cols: Vec<Vec<Polynomial>> = kernel.iter().map(|v| v.components().to_vec()).collect();
        ranks.push(cols.len());
        diffs.push(RingMatrix::from_columns(last.cols, &cols, zero.clone()));
    }
    let rank_i = match ranks.get(i) {
        Some(&a) => a,
        None => return Ok(true),
    };
    let outgoing = diffs.get(i).map(RingMatrix::transpose);
    let incoming = if i == 0 {
        None
    } else {
        diffs.get(i - 1).map(RingMatrix::transpose)
    };
    middle_cohomology_vanishes(q, incoming.as_ref(), outgoing.as_ref(), rank_i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::{
        annihilator, chain_ring, ideal_closure, truncated_polynomial_ring, whole_ring, zero_ideal,
    };
    use crate::polyalg::{parse_poly, PolyRing};

    fn residue_field(r: &FiniteAlgebra) -> FiniteModule {
        let m = &local_decompose(r).unwrap()[0].maximal_ideal;
        FiniteModule::cyclic(r, m)
    }

    #[test]
    fn resolution_examples() {
        let c = chain_ring(2, 2).unwrap().algebra;
        let res = free_resolution_finite(&c, &FiniteModule::regular(&c), 6).unwrap();
        assert_eq!((res.ranks.clone(), res.complete), (vec![1], true));

        let res = free_resolution_finite(&c, &residue_field(&c), 4).unwrap();
        assert_eq!(res.ranks, vec![1; 5]);
        assert!(!res.complete && res.minimal && res.is_exact());

        let t = truncated_polynomial_ring(2, 2, 2).unwrap().algebra;
        let res = free_resolution_finite(&t, &residue_field(&t), 4).unwrap();
        assert_eq!(res.ranks, vec![1, 2, 4, 8, 16]);
        assert!(res.is_exact());
        // minimal: every differential entry lies in the maximal ideal
        let m = &local_decompose(&t).unwrap()[0].maximal_ideal;
        assert!(res
            .differentials
            .iter()
            .all(|d| d.entries.iter().all(|e| m.contains(e))));
    }

    #[test]
    fn redundant_resolutions_are_exact() {
        let t = truncated_polynomial_ring(2, 2, 2).unwrap().algebra;
        let res = resolve(&t, &FiniteModule::regular(&t), 3, Generators::Redundant);
        assert_eq!(res.ranks[0], 3);
        assert!(res.is_exact());
    }

    #[test]
    fn ext_examples() {
        let t = truncated_polynomial_ring(2, 2, 2).unwrap().algebra;
        let e = ext_dims_finite(&t, &FiniteModule::regular(&t), 3).unwrap();
        assert_eq!(e.dims, vec![3, 0, 0, 0]);
        let e = ext_dims_finite(&t, &residue_field(&t), 4).unwrap();
        assert_eq!(e.dims[0], 2);
        assert!(e.dims.iter().all(|&x| x > 0));
        assert_eq!(e, ext_dims_redundant(&t, &residue_field(&t), 4).unwrap());

        let c = chain_ring(2, 2).unwrap().algebra;
        let e = ext_dims_finite(&c, &residue_field(&c), 4).unwrap();
        assert_eq!(e.dims, vec![1, 0, 0, 0, 0]);
        assert_eq!(e, ext_dims_redundant(&c, &residue_field(&c), 4).unwrap());
    }

    #[test]
    fn ext_zero_is_the_annihilator() {
        let t = truncated_polynomial_ring(2, 2, 2).unwrap().algebra;
        for ideal in enumerate_ideals(&t, 4096).unwrap() {
            let e = ext_dims_finite(&t, &FiniteModule::cyclic(&t, &ideal), 0).unwrap();
            assert_eq!(e.dims[0], annihilator(&t, &ideal).dim());
        }
    }

    #[test]
    fn pd_examples() {
        let c = chain_ring(2, 2).unwrap().algebra;
        assert_eq!(
            pd_cutoff(&c, &FiniteModule::regular(&c), 6),
            Ok(Pd::Finite(0))
        );
        assert_eq!(pd_cutoff(&c, &residue_field(&c), 6), Ok(Pd::ExceedsCutoff));
        assert_eq!(
            pd_cutoff(&c, &FiniteModule::cyclic(&c, &whole_ring(&c)), 6),
            Ok(Pd::Finite(0))
        );

        let f = FiniteAlgebra::field_product(2, 2).unwrap();
        let e1 = ideal_closure(&f, &[vec![1, 0]]);
        assert_eq!(
            pd_cutoff(&f, &FiniteModule::cyclic(&f, &e1), 6),
            Ok(Pd::Finite(0))
        );
        // over R itself the same module has a non-terminating free resolution
        let res = free_resolution_finite(&f, &FiniteModule::cyclic(&f, &e1), 3).unwrap();
        assert!(!res.complete && res.is_exact());
    }

    #[test]
    fn self_injective_examples() {
        let c = chain_ring(2, 2).unwrap().algebra;
        assert_eq!(self_injective_dim_finite(&c).unwrap().value, InjDim::Zero);
        assert!(baer_self_injective(&c, 4096).unwrap());

        let t = truncated_polynomial_ring(2, 2, 2).unwrap().algebra;
        let s = self_injective_dim_finite(&t).unwrap();
        assert_eq!((s.value, s.socle_dims.clone()), (InjDim::Infinity, vec![2]));
        assert!(!baer_self_injective(&t, 4096).unwrap());

        let f = FiniteAlgebra::field_product(2, 2).unwrap();
        assert_eq!(self_injective_dim_finite(&f).unwrap().value, InjDim::Zero);
        assert!(baer_self_injective(&f, 4096).unwrap());
        assert!(zero_ideal(&f).is_zero());
    }

    #[test]
    fn poly_ext_examples() {
        let r = PolyRing::new(2, ["x", "y"], Default::default()).unwrap();
        let q = PolyQuotient::polynomial_ring(&r);
        let m = vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()];
        let z = |i| ext_is_zero_poly(&q, &m, i, DEFAULT_RANK_BOUND).unwrap();
        assert!(z(0) && z(1) && !z(2) && z(3));

        let r1 = PolyRing::new(2, ["x"], Default::default()).unwrap();
        let q1 = PolyQuotient::polynomial_ring(&r1);
        let x = vec![parse_poly(&r1, "x").unwrap()];
        assert!(ext_is_zero_poly(&q1, &x, 0, 64).unwrap());
        assert!(!ext_is_zero_poly(&q1, &x, 1, 64).unwrap());

        let one = vec![parse_poly(&r, "1").unwrap()];
        assert!((0..4).all(|i| ext_is_zero_poly(&q, &one, i, 64).unwrap()));
    }

    #[test]
    fn poly_ext_over_a_finite_quotient_matches_the_finite_backend() {
        // F_2[x]/(x^2): Ext^i(R/(x), R) = [1, 0, 0, ...]
        let r = PolyRing::new(2, ["x"], Default::default()).unwrap();
        let q = PolyQuotient::new(&r, vec![parse_poly(&r, "x^2").unwrap()]).unwrap();
        let x = vec![parse_poly(&r, "x").unwrap()];
        assert!(!ext_is_zero_poly(&q, &x, 0, 64).unwrap());
        assert!(ext_is_zero_poly(&q, &x, 1, 64).unwrap());
        assert!(ext_is_zero_poly(&q, &x, 2, 64).unwrap());
    }

    #[test]
    fn rank_bound_is_enforced() {
        let r = PolyRing::new(2, ["x", "y", "z"], Default::default()).unwrap();
        let q = PolyQuotient::polynomial_ring(&r);
        let gens: Vec<Polynomial> = ["x", "y", "z"]
            .iter()
            .map(|t| parse_poly(&r, t).unwrap())
            .collect();
        assert_eq!(
            ext_is_zero_poly(&q, &gens, 2, 2),
            Err(Error::ResolutionTooLarge { rank: 3, bound: 2 })
        );
    }
}
