//! f(x^{(x)m} P_rho . P_sigma) against the product of tau over cycles.
//!
//! cargo run --example glue_identity

use vertexlab::lab::{glue_identity_check, PartitionFunction};
use vertexlab::{Fragment, GaussianRational, MultiGraph, Permutation, Result, VertexModel};

fn main() -> Result<()> {
    let y = VertexModel::from_fn(2, 8, |ms| GaussianRational::gaussian_int(1 - i64::from(ms[0]), i64::from(ms[1])))?;
    let f = PartitionFunction::new(&y);
    let g = MultiGraph::new(7, vec![(0, 4), (2, 4), (1, 5), (3, 6), (5, 6), (4, 4)], 0)?;
    let x = Fragment::new(g, &[0, 1, 2, 3])?;

    for rho in Permutation::all(3) {
        for sigma in Permutation::all(3) {
            let r = glue_identity_check(&f, &x, &rho, &sigma)?;
            println!("{rho}\t{sigma}\t{}\t{}", r.lhs, if r.passed() { "ok" } else { "MISMATCH" });
        }
    }
    Ok(())
}
