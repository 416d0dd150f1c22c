//! The antisymmetrizer q on k strands: tau(q) and kernel membership.
//!
//! cargo run --release --example antisymmetrizer

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertexlab::lab::{antisym_kernel_check, enumerate_fragments, tau, CatalogBounds, LinearCombo, PartitionFunction};
use vertexlab::symgroup::{falling_factorial, signed_orbit_polynomial};
use vertexlab::{Result, VertexModel};

fn main() -> Result<()> {
    for k in 0..=5 {
        println!("sum sgn d^o over S_{k} = {}", signed_orbit_polynomial(k)?);
        assert_eq!(signed_orbit_polynomial(k)?, falling_factorial(k));
    }

    for n in 1..=3 {
        let y = VertexModel::random(n, 12, &mut ChaCha8Rng::seed_from_u64(n as u64))?;
        let f = PartitionFunction::new(&y);
        let taus: Vec<String> = (1..=n + 1)
            .map(|k| tau(&f, &LinearCombo::antisymmetrizer(k)).map(|t| t.to_string()))
            .collect::<Result<_>>()?;
        println!("n={n}: tau(q_k) for k=1..{} = {}", n + 1, taus.join(", "));
    }

    let y = VertexModel::random(1, 8, &mut ChaCha8Rng::seed_from_u64(7))?;
    let cat = enumerate_fragments(4, CatalogBounds::new(2, 4))?;
    let report = antisym_kernel_check(&PartitionFunction::new(&y), &cat)?;
    println!("q_2 against {} fragments: passed={}", report.catalog_size, report.passed());
    Ok(())
}
