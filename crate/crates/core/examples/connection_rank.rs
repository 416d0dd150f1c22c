//! Connection matrices over enumerated catalogs, against n^k.
//!
//! cargo run --release --example connection_rank

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertexlab::lab::{enumerate_fragments, rank_bound_check, CatalogBounds, PartitionFunction};
use vertexlab::{Result, VertexModel};

fn main() -> Result<()> {
    println!("n\tk\tcatalog\trank\tn^k\tC=TtT");
    for n in 1..=3 {
        let y = VertexModel::random(n, 8, &mut ChaCha8Rng::seed_from_u64(n as u64))?;
        let f = PartitionFunction::new(&y);
        for k in 0..=2 {
            let cat = enumerate_fragments(k, CatalogBounds::new(2, k + 2))?;
            let r = rank_bound_check(&f, &cat)?;
            println!("{n}\t{k}\t{}\t{}\t{}\t{}", r.catalog_size, r.rank, r.bound, r.gram_consistent);
        }
    }
    Ok(())
}
