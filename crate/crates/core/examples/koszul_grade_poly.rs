//! Koszul grade over polynomial rings, decided with module Groebner bases.

use fpdim::koszul::koszul_grade_poly;
use fpdim::polyalg::{parse_poly, PolyQuotient, PolyRing};

fn main() -> fpdim::Result<()> {
    for n in 1..=3 {
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let ring = PolyRing::new(2, vars.clone(), Default::default())?;
        let q = PolyQuotient::polynomial_ring(&ring);
        let gens = vars
            .iter()
            .map(|v| parse_poly(&ring, v))
            .collect::<fpdim::Result<Vec<_>>>()?;
        println!(
            "grade of the variables in F_2[{}]: {}",
            vars.join(","),
            koszul_grade_poly(&q, &gens)?
        );
    }

    let ring = PolyRing::new(2, ["x", "y"], Default::default())?;
    let q = PolyQuotient::new(&ring, vec![parse_poly(&ring, "x*y")?])?;
    for ideal in [&["x", "y"][..], &["x"], &["x + y"]] {
        let gens = ideal
            .iter()
            .map(|s| parse_poly(&ring, s))
            .collect::<fpdim::Result<Vec<_>>>()?;
        println!(
            "F_2[x,y]/(xy), ideal ({}): grade {}",
            ideal.join(", "),
            koszul_grade_poly(&q, &gens)?
        );
    }
    Ok(())
}
