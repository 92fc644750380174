//! Syzygies of polynomial vectors and submodule membership.

use fpdim::polyalg::{
    apply_matrix, module_kernel, parse_poly, submodule_contains, ModuleVector, PolyQuotient,
    PolyRing,
};
use fpdim::ring::RingMatrix;

fn main() -> fpdim::Result<()> {
    let ring = PolyRing::new(2, ["x", "y", "z"], Default::default())?;
    let q = PolyQuotient::polynomial_ring(&ring);
    let row = ["x", "y", "z"]
        .iter()
        .map(|s| parse_poly(&ring, s))
        .collect::<fpdim::Result<Vec<_>>>()?;
    let m = RingMatrix {
        rows: 1,
        cols: 3,
        entries: row,
    };
    let syz = module_kernel(&q, &m)?;
    println!("syzygies of (x, y, z) over F_2[x,y,z]:");
    for s in &syz {
        let parts: Vec<String> = s.components().iter().map(ToString::to_string).collect();
        println!("  ({})", parts.join(", "));
        assert!(apply_matrix(&q, &m, s).is_zero());
    }
    let v = ModuleVector::new(vec![
        parse_poly(&ring, "y*z")?,
        parse_poly(&ring, "x*z")?,
        parse_poly(&ring, "0")?,
    ]);
    println!(
        "(yz, xz, 0) is a syzygy combination: {}",
        submodule_contains(&q, &syz, &v)?
    );
    Ok(())
}
