//! Reduced Groebner bases, normal forms and ideal membership.

use fpdim::polyalg::{buchberger, normal_form, parse_poly, MonomialOrder, PolyRing};

fn main() -> fpdim::Result<()> {
    let ring = PolyRing::new(3, ["x", "y", "z"], MonomialOrder::Lex)?;
    let gens = ["x^2 - y", "x*y - z", "y^2 - x*z"]
        .iter()
        .map(|s| parse_poly(&ring, s))
        .collect::<fpdim::Result<Vec<_>>>()?;
    let gb = buchberger(&ring, &gens)?;
    println!("lex Groebner basis over F_3:");
    for g in &gb {
        println!("  {g}");
    }
    for f in ["x^3 - z", "x^4 - x*z", "x + y"] {
        let nf = normal_form(&parse_poly(&ring, f)?, &gb)?;
        println!("{f:>10}: normal form {nf}, member {}", nf.is_zero());
    }
    Ok(())
}
