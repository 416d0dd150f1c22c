//! Multigraphs with vertexless loops, `k`-fragments and the products
//! between them.

mod canon;
mod fragment;
mod json;
mod multigraph;
mod permutation;

pub use canon::{CanonicalForm, CANONICAL_VERTEX_GUARD};
pub use fragment::Fragment;
pub use json::GraphJson;
pub use multigraph::MultiGraph;
pub use permutation::{AllPermutations, Permutation};
