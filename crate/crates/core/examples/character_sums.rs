//! Characters of S_n and the content-polynomial identity.
//!
//! cargo run --example character_sums

use vertexlab::symgroup::{char_sum_lhs, char_sum_rhs, character, dimension, partitions_of, rectangular_dimension};
use vertexlab::Result;

fn main() -> Result<()> {
    let n = 4;
    let parts = partitions_of(n)?;
    print!("chi\\mu");
    for mu in &parts {
        print!("\t{mu}");
    }
    println!();
    for lambda in &parts {
        print!("{lambda}");
        for mu in &parts {
            print!("\t{}", character(lambda, mu)?);
        }
        println!();
    }

    println!();
    for lambda in partitions_of(5)? {
        let lhs = char_sum_lhs(&lambda)?;
        println!("{lambda}\tf={}\t{lhs}\t{}", dimension(&lambda), lhs == char_sum_rhs(&lambda));
    }

    println!();
    for m in 1..=6 {
        println!("f^(3 x {m}) = {}", rectangular_dimension(3, m)?);
    }
    Ok(())
}
