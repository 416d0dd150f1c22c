//! Vertex models and exact partition-function evaluation.

mod eval;
mod json;
mod model;
mod tensor;

pub use eval::{
    partition_function, partition_function_contracted, ContractionOptions, BRUTE_FORCE_GUARD,
    DEFAULT_FRONTIER_GUARD,
};
pub use json::{ModelJson, WeightJson};
pub use model::{multisets, Multiset, VertexModel};
pub use tensor::{fragment_tensor, fragment_tensor_guarded, pair_partition, FragmentTensor};
