//! Signed sums over pinned-edge graphs G_{s o pi}.
//!
//! cargo run --example pinned_edges

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertexlab::lab::{criterion_check, CriterionInstance, PartitionFunction};
use vertexlab::{MultiGraph, Result, VertexModel};

fn main() -> Result<()> {
    let y = VertexModel::matchings(12)?;
    let f = PartitionFunction::new(&y);
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    for u_size in 1..=3 {
        let values: Vec<String> = (0..8)
            .map(|_| CriterionInstance::random(&mut rng, u_size, 4, 4).evaluate(&f).map(|v| v.to_string()))
            .collect::<Result<_>>()?;
        println!("|U|={u_size}: {}", values.join(" "));
    }

    let g = MultiGraph::path(3);
    println!("P3, U={{0,2}}, s=(1,1): {}", criterion_check(&f, &g, &[0, 2], &[1, 1])?);
    Ok(())
}
