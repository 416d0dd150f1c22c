use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::Result;
use crate::exactalg::{ExactMatrix, GaussianRational};
use crate::graphs::MultiGraph;
use crate::models::{
    fragment_tensor_guarded, pair_partition, partition_function_contracted, ContractionOptions,
    FragmentTensor, VertexModel,
};

use super::FragmentCatalog;

/// Something that assigns a scalar to every graph.
///
/// Connection matrices are built against this contract; the shipped
/// implementation is [`PartitionFunction`].
pub trait GraphInvariant: Sync {
    fn evaluate(&self, g: &MultiGraph) -> Result<GaussianRational>;
}

/// `p_y`, evaluated by vertex elimination.
#[derive(Clone, Debug)]
pub struct PartitionFunction<'a> {
    model: &'a VertexModel,
    options: ContractionOptions,
}

impl<'a> PartitionFunction<'a> {
    pub fn new(model: &'a VertexModel) -> Self {
        PartitionFunction {
            model,
            options: ContractionOptions::default(),
        }
    }

    pub fn with_frontier_guard(model: &'a VertexModel, frontier_guard: usize) -> Self {
        PartitionFunction {
            model,
            options: ContractionOptions {
                frontier_guard,
                order: None,
            },
        }
    }

    pub fn model(&self) -> &VertexModel {
        self.model
    }

    pub fn frontier_guard(&self) -> usize {
        self.options.frontier_guard
    }
}

impl GraphInvariant for PartitionFunction<'_> {
    fn evaluate(&self, g: &MultiGraph) -> Result<GaussianRational> {
        partition_function_contracted(self.model, g, &self.options)
    }
}

/// `C[G][H] = f(G·H)` over the catalog. Every entry is evaluated
/// independently.
pub fn connection_matrix(f: &dyn GraphInvariant, cat: &FragmentCatalog) -> Result<ExactMatrix> {
    let items = cat.items();
    let n = items.len();
    let entries = (0..n * n)
        .into_par_iter()
        .map(|idx| f.evaluate(&items[idx / n].glue(&items[idx % n])?))
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_entries(n, n, entries)
}

/// Boundary tensors of every catalog item.
pub fn catalog_tensors(f: &PartitionFunction<'_>, cat: &FragmentCatalog) -> Result<Vec<FragmentTensor>> {
    cat.items()
        .par_iter()
        .map(|g| fragment_tensor_guarded(f.model(), g, f.frontier_guard()))
        .collect()
}

/// `TᵀT`, where column `j` of `T` is the boundary tensor of item `j`.
pub fn gram_matrix(tensors: &[FragmentTensor]) -> Result<ExactMatrix> {
    let n = tensors.len();
    let entries = (0..n * n)
        .into_par_iter()
        .map(|idx| pair_partition(&tensors[idx / n], &tensors[idx % n]))
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_entries(n, n, entries)
}

/// Outcome of [`rank_bound_check`].
#[derive(Clone, Debug)]
pub struct RankBoundReport {
    pub arity: usize,
    pub colors: usize,
    pub catalog_size: usize,
    pub rank: usize,
    /// `n^k`.
    pub bound: BigUint,
    /// The connection matrix equals `TᵀT` entrywise.
    pub gram_consistent: bool,
    pub symmetric: bool,
}

impl RankBoundReport {
    pub fn passed(&self) -> bool {
        self.gram_consistent && self.symmetric && BigUint::from(self.rank) <= self.bound
    }
}

/// Builds `C_{p_y,k}` over the catalog, takes its rank, compares with
/// `n^k`, and checks that `C` factors as `TᵀT` through the `n^k`-dimensional
/// boundary tensors.
pub fn rank_bound_check(f: &PartitionFunction<'_>, cat: &FragmentCatalog) -> Result<RankBoundReport> {
    let c = connection_matrix(f, cat)?;
    let gram = gram_matrix(&catalog_tensors(f, cat)?)?;
    let colors = f.model().colors();
    Ok(RankBoundReport {
        arity: cat.arity(),
        colors,
        catalog_size: cat.len(),
        rank: c.rank(),
        bound: BigUint::from(colors).pow(cat.arity() as u32),
        gram_consistent: c == gram,
        symmetric: c.is_symmetric(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Fragment;
    use crate::lab::{enumerate_fragments, CatalogBounds};

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn closed_catalog_has_rank_one() {
        let y = VertexModel::matchings(4).unwrap();
        let f = PartitionFunction::new(&y);
        let cat = enumerate_fragments(0, CatalogBounds::new(0, 0)).unwrap();
        let c = connection_matrix(&f, &cat).unwrap();
        assert_eq!(c, ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap());
        assert_eq!(c.rank(), 1);
    }

    #[test]
    fn strand_against_itself_is_the_free_loop() {
        let y = VertexModel::all_ones(3, 2).unwrap();
        let f = PartitionFunction::new(&y);
        let cat = FragmentCatalog::from_items(2, vec![Fragment::unit(1)]).unwrap();
        assert_eq!(connection_matrix(&f, &cat).unwrap().get(0, 0), &q(3));
    }

    #[test]
    fn one_color_rank_at_most_one() {
        let y = VertexModel::from_fn(1, 8, |ms| q(i64::from(ms[0]) - 1)).unwrap();
        let f = PartitionFunction::new(&y);
        for k in 0..3 {
            let cat = enumerate_fragments(k, CatalogBounds::new(2, 3)).unwrap();
            let report = rank_bound_check(&f, &cat).unwrap();
            assert!(report.rank <= 1, "{report:?}");
            assert!(report.passed());
        }
    }

    #[test]
    fn duplicate_rows_do_not_change_rank() {
        let y = VertexModel::matchings(6).unwrap();
        let f = PartitionFunction::new(&y);
        let cat = enumerate_fragments(1, CatalogBounds::new(2, 3)).unwrap();
        let mut doubled = cat.items().to_vec();
        doubled.extend(cat.items().iter().cloned());
        let dup = FragmentCatalog::from_items(1, doubled).unwrap();
        assert_eq!(
            connection_matrix(&f, &cat).unwrap().rank(),
            connection_matrix(&f, &dup).unwrap().rank()
        );
    }
}
