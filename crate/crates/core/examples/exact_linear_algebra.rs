//! Row reduction, kernels and subspace arithmetic over F_p.

use fpdim::exactla::{subspace_ops, FpMatrix, Subspace};

fn main() -> fpdim::Result<()> {
    let m = FpMatrix::from_rows(3, &[vec![1, 2, 0, 1], vec![2, 1, 1, 0], vec![0, 0, 1, 1]])?;
    let d = m.decompose();
    println!("rank {} over F_3", d.rank);
    println!("rref rows:");
    for r in 0..d.rref.rows() {
        println!("  {:?}", d.rref.row(r));
    }
    println!("kernel basis {:?}", d.kernel.basis());
    for v in d.kernel.basis() {
        assert!(m.mul_vec(v).iter().all(|&x| x == 0));
    }

    let a = Subspace::from_spanning(2, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
    let b = Subspace::from_spanning(2, 3, vec![vec![1, 1, 1], vec![0, 1, 0]]);
    let ops = subspace_ops(&a, &b)?;
    println!(
        "dim a={} b={} a+b={} a^b={} a contains b: {}",
        a.dim(),
        b.dim(),
        ops.sum.dim(),
        ops.intersection.dim(),
        ops.a_contains_b
    );
    Ok(())
}
