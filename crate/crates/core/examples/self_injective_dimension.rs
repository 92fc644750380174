//! Self-injective dimension from socles, cross-checked against Baer's
//! criterion.

use fpdim::corpus::named_corpus;
use fpdim::homology::{baer_self_injective, self_injective_dim_finite};

fn main() -> fpdim::Result<()> {
    for c in named_corpus()? {
        let sid = self_injective_dim_finite(&c.algebra)?;
        let baer = baer_self_injective(&c.algebra, 4096)?;
        println!(
            "{:<24} id {:?}, socle dims {:?}, Baer {}",
            c.name, sid.value, sid.socle_dims, baer
        );
    }
    Ok(())
}
