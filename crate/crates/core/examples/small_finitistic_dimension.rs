//! fPD by maximal-ideal grades and by Ext vanishing, plus a lower bound
//! for a polynomial ring.

use fpdim::classify::{fpd_finite, fpd_lower_bound_poly, verify_theorem_wnd};
use fpdim::corpus::named_corpus;
use fpdim::polyalg::{parse_poly, PolyQuotient, PolyRing};

fn main() -> fpdim::Result<()> {
    for c in named_corpus()? {
        let f = fpd_finite(&c.algebra, 5, 4096)?;
        let w = verify_theorem_wnd(&c.algebra, f.value, 5, 4096)?;
        println!(
            "{:<24} fPD {} (grade {}, ext {}), Ext criterion holds {}",
            c.name, f.value, f.method_grade, f.method_ext, w.holds
        );
    }
    let ring = PolyRing::new(3, ["x", "y", "z"], Default::default())?;
    let q = PolyQuotient::polynomial_ring(&ring);
    let m: Vec<_> = ["x", "y - 1", "z"]
        .iter()
        .map(|s| parse_poly(&ring, s))
        .collect::<fpdim::Result<_>>()?;
    println!("F_3[x,y,z]: fPD >= {}", fpd_lower_bound_poly(&q, &[m])?);
    Ok(())
}
