//! Collect checks into a report and print it as TSV and JSON.
//!
//! cargo run --example report

use vertexlab::lab::Report;
use vertexlab::symgroup::{dimension, rectangular_dimension};
use vertexlab::symgroup::IntegerPartition;
use vertexlab::Result;

fn main() -> Result<()> {
    let mut report = Report::new();
    for d in 1..=3 {
        for m in 1..=3 {
            let hooks = dimension(&IntegerPartition::rectangle(d, m));
            let closed = rectangular_dimension(d, m)?;
            report.push("rectangle", format!("d={d},m={m}"), &hooks, &closed, hooks == closed);
        }
    }
    print!("{}", report.to_tsv());
    println!("{}", report.to_json());
    Ok(())
}
