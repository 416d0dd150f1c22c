use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::graphs::{MultiGraph, Permutation};

use super::GraphInvariant;

/// Largest `|U|` summed over (`|U|!` terms).
pub const CRITERION_GUARD: usize = 7;

/// `Σ_{π ∈ S_U} sgn(π) f(G_{s∘π})`, where `targets[i] = s(u_set[i])` and
/// `(s∘π)(u_i) = s(u_{π(i)})`.
///
/// For `f = p_y` with `n` colors this vanishes whenever `|U| > n`.
pub fn criterion_check(
    f: &dyn GraphInvariant,
    g: &MultiGraph,
    u_set: &[usize],
    targets: &[usize],
) -> Result<GaussianRational> {
    if u_set.len() != targets.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} vertices in U but {} targets",
            u_set.len(),
            targets.len()
        )));
    }
    if u_set.len() > CRITERION_GUARD {
        return Err(Error::guard("|U|", CRITERION_GUARD, u_set.len()));
    }
    let mut total = GaussianRational::zero();
    let mut permuted = vec![0; targets.len()];
    for pi in Permutation::all(u_set.len()) {
        for (i, slot) in permuted.iter_mut().enumerate() {
            *slot = targets[pi.apply(i)];
        }
        let value = f.evaluate(&g.pin_edges(u_set, &permuted)?)?;
        if pi.sign() == 1 {
            total += &value;
        } else {
            total -= &value;
        }
    }
    Ok(total)
}

/// One randomized `(G, U, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionInstance {
    pub graph: MultiGraph,
    pub u_set: Vec<usize>,
    pub targets: Vec<usize>,
}

impl CriterionInstance {
    /// A random multigraph on `u_size..=max_vertices` vertices with up to
    /// `max_edges` edges (loops allowed), a random `U` of size `u_size`,
    /// and a random `s: U -> V`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, u_size: usize, max_vertices: usize, max_edges: usize) -> Self {
        let vertices = rng.gen_range(u_size.max(1)..=max_vertices.max(u_size).max(1));
        let edge_count = rng.gen_range(0..=max_edges);
        let edges = (0..edge_count)
            .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
            .collect();
        let graph = MultiGraph::new(vertices, edges, 0).expect("endpoints in range");
        let u_set = rand::seq::index::sample(rng, vertices, u_size).into_vec();
        let targets = (0..u_size).map(|_| rng.gen_range(0..vertices)).collect();
        CriterionInstance {
            graph,
            u_set,
            targets,
        }
    }

    pub fn evaluate(&self, f: &dyn GraphInvariant) -> Result<GaussianRational> {
        criterion_check(f, &self.graph, &self.u_set, &self.targets)
    }
}
