//! Fragments: gluing, products, permutation fragments.
//!
//! cargo run --example gluing

use vertexlab::graphs::GraphJson;
use vertexlab::{Fragment, Permutation, Result};

fn main() -> Result<()> {
    let x = Fragment::bare_edge();
    println!("X.X = {}", GraphJson::from(&x.glue(&x)?).to_json());

    let star = Fragment::star(2);
    println!("star(2).X = {}", GraphJson::from(&star.glue(&x)?).to_json());

    // r_pi glued to the unit closes into o(pi) vertexless loops
    for pi in Permutation::all(3) {
        let closed = Fragment::r_fragment(&pi).glue(&Fragment::unit(3))?;
        println!("r_{pi} . 1 -> {} free loops", closed.free_loops());
    }

    let rho = Permutation::from_one_based(&[2, 3, 1])?;
    let sigma = Permutation::transposition(3, 0, 1)?;
    let lhs = Fragment::r_fragment(&rho).product(&Fragment::r_fragment(&sigma))?;
    let rhs = Fragment::r_fragment(&(&rho * &sigma));
    println!("r_rho r_sigma == r_(rho sigma): {}", lhs.canonical_form()? == rhs.canonical_form()?);

    let squared = star.tensor_power(2)?;
    println!("star(2)^(x2) has arity {}", squared.arity());
    Ok(())
}
