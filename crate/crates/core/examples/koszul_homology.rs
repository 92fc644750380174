//! Koszul homology and cohomology over a finite algebra, and the duality
//! between them.

use fpdim::finalg::{ideal_closure, truncated_polynomial_ring, FiniteModule};
use fpdim::koszul::{build_koszul, koszul_homology};
use fpdim::polyalg::parse_element;

fn main() -> fpdim::Result<()> {
    let q = truncated_polynomial_ring(3, 2, 3)?;
    let r = &q.algebra;
    let syms = q.symbols();
    let x = ["x", "y"]
        .iter()
        .map(|s| parse_element(r, &syms, s))
        .collect::<fpdim::Result<Vec<_>>>()?;
    let k = build_koszul(r, &x)?;
    println!("K(x, y) over F_3[x,y]/(x,y)^3, ranks {:?}", k.ranks());
    let modules = [
        ("R", FiniteModule::regular(r)),
        ("R/(x)", FiniteModule::cyclic(r, &ideal_closure(r, &x[..1]))),
    ];
    for (name, m) in modules {
        let t = koszul_homology(&k, &m)?;
        println!(
            "M = {name}: H_* {:?}, H^* {:?}, duality {}, grade {}",
            t.dims_homology,
            t.dims_cohomology,
            t.duality_holds(),
            t.grade()
        );
    }
    Ok(())
}
