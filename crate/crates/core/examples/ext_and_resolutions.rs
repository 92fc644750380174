//! Minimal free resolutions and Ext against the ring, over both backends.

use fpdim::finalg::{chain_ring, ideal_closure, FiniteModule};
use fpdim::homology::{ext_dims_finite, ext_is_zero_poly, factor_resolutions, pd_cutoff};
use fpdim::polyalg::{parse_poly, PolyQuotient, PolyRing};

fn main() -> fpdim::Result<()> {
    let q = chain_ring(2, 3)?;
    let r = &q.algebra;
    let x2 = q.image(&parse_poly(&q.ring, "x^2")?)?;
    let m = FiniteModule::cyclic(r, &ideal_closure(r, &[x2]));
    for res in factor_resolutions(r, &m, 4)? {
        println!(
            "F_2[x]/(x^3), M = R/(x^2): ranks {:?}, complete {}",
            res.ranks, res.complete
        );
    }
    println!("Ext dims {:?}", ext_dims_finite(r, &m, 4)?.dims);
    println!("pd {:?}", pd_cutoff(r, &m, 4)?);

    let ring = PolyRing::new(2, ["x", "y"], Default::default())?;
    let p = PolyQuotient::polynomial_ring(&ring);
    let gens = vec![parse_poly(&ring, "x")?, parse_poly(&ring, "y")?];
    let zero: Vec<bool> = (0..=3)
        .map(|i| ext_is_zero_poly(&p, &gens, i, 64))
        .collect::<fpdim::Result<_>>()?;
    println!("F_2[x,y], Ext^i(R/(x,y), R) = 0 for i = 0..3: {zero:?}");
    Ok(())
}
