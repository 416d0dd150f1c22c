//! Evaluate a few graphs under stock vertex models, both ways.
//!
//! cargo run --example partition_functions

use vertexlab::models::{partition_function, partition_function_contracted, ContractionOptions, VertexModel};
use vertexlab::{GaussianRational, MultiGraph, Result};

fn main() -> Result<()> {
    let matchings = VertexModel::matchings(4)?;
    let parity = VertexModel::parity(4)?;
    let weird = VertexModel::from_fn(2, 4, |ms| GaussianRational::gaussian_int(i64::from(ms[0]) - 1, i64::from(ms[1])))?;

    let graphs = [
        ("O", MultiGraph::free_loop()),
        ("P3", MultiGraph::path(3)),
        ("C5", MultiGraph::cycle(5)),
        ("K4", MultiGraph::complete(4)),
        ("loop", MultiGraph::cycle(1)),
    ];
    let opts = ContractionOptions::default();
    println!("graph\tmatchings\tparity\tweird");
    for (name, g) in &graphs {
        let row: Vec<String> = [&matchings, &parity, &weird]
            .iter()
            .map(|y| {
                let fast = partition_function_contracted(y, g, &opts)?;
                assert_eq!(fast, partition_function(y, g)?);
                Ok(fast.to_string())
            })
            .collect::<Result<_>>()?;
        println!("{name}\t{}", row.join("\t"));
    }
    Ok(())
}
