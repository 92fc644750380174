//! Named test rings and seeded random finite algebras.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactla::FpMatrix;
use crate::finalg::{
    algebra_from_zero_dim_quotient, chain_ring, ideal_closure, idealization, local_decompose,
    truncated_polynomial_ring, FiniteAlgebra, FiniteModule,
};
use crate::polyalg::{PolyRing, Polynomial, QuotientBasis};

#[derive(Debug, Clone)]
pub struct CorpusRing {
    pub name: String,
    pub algebra: FiniteAlgebra,
}

fn named(name: &str, algebra: FiniteAlgebra) -> CorpusRing {
    CorpusRing {
        name: name.to_string(),
        algebra,
    }
}

/// Small rings with known invariants, all of dimension at most 3.
pub fn named_corpus() -> Result<Vec<CorpusRing>> {
    let f2 = chain_ring(2, 1)?.algebra;
    let c22 = chain_ring(2, 2)?.algebra;
    let residue = FiniteModule::cyclic(&c22, &local_decompose(&c22)?[0].maximal_ideal);
    Ok(vec![
        named("F_2", f2.clone()),
        named("F_2[x]/(x^2)", c22.clone()),
        named("F_3[x]/(x^2)", chain_ring(3, 2)?.algebra),
        named("F_2[x]/(x^3)", chain_ring(2, 3)?.algebra),
        named("F_3[x]/(x^3)", chain_ring(3, 3)?.algebra),
        named(
            "F_2[x,y]/(x,y)^2",
            truncated_polynomial_ring(2, 2, 2)?.algebra,
        ),
        named("F_2 x F_2", FiniteAlgebra::field_product(2, 2)?),
        named("F_3 x F_3", FiniteAlgebra::field_product(3, 2)?),
        named("F_2 x F_2 x F_2", FiniteAlgebra::field_product(2, 3)?),
        named(
            "F_2 (+) F_2",
            idealization(&f2, &FiniteModule::regular(&f2))?,
        ),
        named("F_2[x]/(x^2) (+) F_2", idealization(&c22, &residue)?),
        named("F_2 x F_2[x]/(x^2)", f2.product(&c22)?),
    ])
}

pub const RANDOM_PRIMES: [u64; 3] = [2, 3, 5];

fn random_poly(rng: &mut ChaCha8Rng, ring: &std::sync::Arc<PolyRing>, max_deg: u32) -> Polynomial {
    let p = ring.modulus();
    Polynomial::from_terms(
        ring,
        ring.monomials_up_to(max_deg)
            .into_iter()
            .map(|m| (m, rng.gen_range(0..p)))
            .collect::<Vec<_>>(),
    )
}

/// `F_p[x]/(f)` for a random monic `f` of degree `k`.
fn random_univariate(rng: &mut ChaCha8Rng, p: u64, k: usize) -> Result<FiniteAlgebra> {
    let ring = PolyRing::new(p, ["x"], Default::default())?;
    let x = Polynomial::var(&ring, 0);
    let mut f = x.try_pow(k as u32)?;
    for i in 0..k {
        let c = rng.gen_range(0..p as u32);
        f = f.add(&x.try_pow(i as u32)?.scale(c));
    }
    Ok(algebra_from_zero_dim_quotient(&ring, &[f])?.algebra)
}

/// `F_p[x,y]/I` of dimension `k`, by rejection sampling; falls back to a
/// univariate quotient.
fn random_bivariate(rng: &mut ChaCha8Rng, p: u64, k: usize) -> Result<FiniteAlgebra> {
    let ring = PolyRing::new(p, ["x", "y"], Default::default())?;
    for _ in 0..64 {
        let count = rng.gen_range(2..=3);
        let gens: Vec<Polynomial> = (0..count).map(|_| random_poly(rng, &ring, 2)).collect();
        if let QuotientBasis::Finite(b) = crate::polyalg::quotient_monomial_basis(&ring, &gens)? {
            if b.len() == k {
                return Ok(algebra_from_zero_dim_quotient(&ring, &gens)?.algebra);
            }
        }
    }
    random_univariate(rng, p, k)
}

fn random_invertible(rng: &mut ChaCha8Rng, p: u32, d: usize) -> FpMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(0..p as i64)).collect())
            .collect();
        let m = FpMatrix::from_rows(p, &rows).expect("square rows");
        if m.rank() == d {
            return m;
        }
    }
}

/// A random commutative algebra of dimension `1..=max_dim` over a prime
/// from `primes`: a product of univariate and bivariate quotients, in a
/// random basis.
pub fn random_algebra(rng: &mut ChaCha8Rng, max_dim: usize, primes: &[u64]) -> Result<CorpusRing> {
    let p = *primes.choose(rng).expect("nonempty prime list");
    let d = rng.gen_range(1..=max_dim);
    let mut parts = Vec::new();
    let mut left = d;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        parts.push(k);
        left -= k;
    }
    let mut algebra: Option<FiniteAlgebra> = None;
    let mut shape = Vec::new();
    for k in parts {
        let piece = if k >= 2 && rng.gen_bool(0.5) {
            shape.push(format!("F_{p}[x,y]/I({k})"));
            random_bivariate(rng, p, k)?
        } else {
            shape.push(format!("F_{p}[x]/(f{k})"));
            random_univariate(rng, p, k)?
        };
        algebra = Some(match algebra {
            None => piece,
            Some(a) => a.product(&piece)?,
        });
    }
    let algebra = algebra.expect("at least one factor");
    let change = random_invertible(rng, algebra.modulus(), algebra.dim());
    Ok(CorpusRing {
        name: shape.join(" x "),
        algebra: algebra.change_basis(&change)?,
    })
}

/// `count` random algebras from one seed, reproducibly.
pub fn random_corpus(seed: u64, count: usize, max_dim: usize) -> Result<Vec<CorpusRing>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let mut ring = random_algebra(&mut rng, max_dim, &RANDOM_PRIMES)?;
            ring.name = format!("random#{i}: {}", ring.name);
            Ok(ring)
        })
        .collect()
}

pub fn random_element(rng: &mut ChaCha8Rng, r: &FiniteAlgebra) -> Vec<u32> {
    (0..r.dim())
        .map(|_| rng.gen_range(0..r.modulus()))
        .collect()
}

/// A random module: `R`, `R/(a)` for a random `a`, or `0`.
pub fn random_module(rng: &mut ChaCha8Rng, r: &FiniteAlgebra) -> (String, FiniteModule) {
    match rng.gen_range(0..5) {
        0 => ("0".into(), FiniteModule::zero(r)),
        1 | 2 => ("R".into(), FiniteModule::regular(r)),
        _ => {
            let a = random_element(rng, r);
            let label = format!("R/({})", r.format_element(&a));
            (label, FiniteModule::cyclic(r, &ideal_closure(r, &[a])))
        }
    }
}
