//! Structure constants, local decomposition and the ideal lattice of a
//! finite algebra.

use fpdim::finalg::{
    annihilator, enumerate_ideals, local_decompose, radical, truncated_polynomial_ring,
    FiniteAlgebra,
};

fn main() -> fpdim::Result<()> {
    let r = truncated_polynomial_ring(2, 2, 2)?.algebra;
    let s = FiniteAlgebra::field_product(2, 1)?.product(&r)?;
    println!("R = F_2 x F_2[x,y]/(x,y)^2, dim {}", s.dim());
    println!("radical dim {}", radical(&s).dim());
    for f in local_decompose(&s)? {
        println!(
            "local factor: idempotent {}, dim {}, socle dim {}, Gorenstein {}",
            s.format_element(&f.idempotent),
            f.algebra.dim(),
            f.socle_dim,
            f.is_gorenstein()
        );
    }
    let ideals = enumerate_ideals(&s, 4096)?;
    println!("{} ideals:", ideals.len());
    for i in &ideals {
        let gens: Vec<String> = i
            .small_generators(&s)
            .iter()
            .map(|g| s.format_element(g))
            .collect();
        println!(
            "  dim {} ({}) ann dim {}",
            i.dim(),
            gens.join(", "),
            annihilator(&s, i).dim()
        );
    }
    Ok(())
}
