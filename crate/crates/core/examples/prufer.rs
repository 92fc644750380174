//! Regular and semiregular ideals, projectivity, and idealizations.

use fpdim::classify::{ideal_regularity, prufer_classify};
use fpdim::finalg::{chain_ring, idealization, radical, truncated_polynomial_ring, FiniteModule};

fn main() -> fpdim::Result<()> {
    let trunc = truncated_polynomial_ring(2, 2, 2)?.algebra;
    let m = radical(&trunc);
    println!(
        "(x, y) in F_2[x,y]/(x,y)^2: {:?}",
        ideal_regularity(&trunc, &m)
    );
    let v = prufer_classify(&trunc, 5, 4096)?;
    println!(
        "Pruefer {:?}, strong Pruefer {:?}",
        v.prufer, v.strong_prufer
    );

    let f2 = chain_ring(2, 1)?.algebra;
    let ideal = idealization(&f2, &FiniteModule::regular(&f2))?;
    let dual = chain_ring(2, 2)?.algebra;
    println!(
        "F_2 (+) F_2 has the table of F_2[x]/(x^2): {}",
        ideal.mul_table() == dual.mul_table()
    );
    Ok(())
}
