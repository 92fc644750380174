//! GV-ideals, DW-rings and the strong w-module test.

use fpdim::classify::{dw_witness_poly, gv_ideals, is_dw, strong_w_check};
use fpdim::corpus::named_corpus;
use fpdim::polyalg::{parse_poly, PolyQuotient, PolyRing};

fn main() -> fpdim::Result<()> {
    for c in named_corpus()?.iter().take(6) {
        let r = &c.algebra;
        println!(
            "{:<24} GV ideals {}, DW {}, strong w {}",
            c.name,
            gv_ideals(r, 4096)?.len(),
            is_dw(r, 4096)?.is_dw,
            strong_w_check(r, 5, 4096)?.is_strong_w
        );
    }
    let ring = PolyRing::new(2, ["x", "y"], Default::default())?;
    let q = PolyQuotient::polynomial_ring(&ring);
    let m = vec![parse_poly(&ring, "x")?, parse_poly(&ring, "y")?];
    println!(
        "F_2[x,y]: (x, y) is a proper GV-ideal: {}",
        dw_witness_poly(&q, &m, 64)?
    );
    Ok(())
}
