//! Fragment catalogs, connection matrices, and the experiments built on
//! them: rank growth, `τ`, tensor-power gluing, the antisymmetrizer and
//! the signed-sum criterion.

mod algebra;
mod catalog;
mod connection;
mod criterion;
mod report;

pub use algebra::{antisym_kernel_check, glue_identity_check, tau, GlueIdentityReport, KernelReport, LinearCombo};
pub use catalog::{
    enumerate_fragments, CatalogBounds, FragmentCatalog, CATALOG_ARITY_GUARD, CATALOG_EDGE_GUARD,
    CATALOG_VERTEX_GUARD,
};
pub use connection::{
    catalog_tensors, connection_matrix, gram_matrix, rank_bound_check, GraphInvariant, PartitionFunction,
    RankBoundReport,
};
pub use criterion::{criterion_check, CriterionInstance, CRITERION_GUARD};
pub use report::{Report, ReportRow};
