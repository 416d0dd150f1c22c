//! Rank of M_n(d) = (d^{o(rho sigma^-1)}) against the partition count.
//!
//! cargo run --release --example m_matrix_rank

use vertexlab::symgroup::{m_matrix, m_rank_formula, sign_conjugate};
use vertexlab::{GaussianRational, Result};

fn main() -> Result<()> {
    println!("n\td\trank\tformula\tM(-d) by conjugation");
    for n in 1..=4 {
        for d in ["0", "1", "-1", "2", "-2", "3", "1/2", "-3/2"] {
            let d: GaussianRational = d.parse()?;
            let m = m_matrix(n, &d)?;
            let conj_ok = sign_conjugate(n, &m)? == m_matrix(n, &-&d)?;
            println!("{n}\t{d}\t{}\t{}\t{conj_ok}", m.rank(), m_rank_formula(n, &d)?);
        }
    }
    Ok(())
}
