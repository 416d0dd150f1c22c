use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vertexlab::graphs::{GraphJson, MultiGraph};
use vertexlab::lab::{enumerate_fragments, CatalogBounds};
use vertexlab::models::{
    fragment_tensor, pair_partition, partition_function, partition_function_contracted, ContractionOptions,
    ModelJson, VertexModel,
};
use vertexlab::GaussianRational;

fn model(colors: usize, seed: u64) -> VertexModel {
    VertexModel::random(colors, 10, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

#[test]
fn relabeling_vertices_keeps_the_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let closed = enumerate_fragments(0, CatalogBounds::new(3, 4)).unwrap();
    for n in 1..=3 {
        let y = model(n, n as u64);
        for x in closed.items() {
            let g = x.graph();
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rng);
            let edges = g.edges().iter().map(|&(a, b)| (perm[b], perm[a])).collect();
            let h = MultiGraph::new(g.vertex_count(), edges, g.free_loops()).unwrap();
            assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
            assert_eq!(partition_function(&y, g).unwrap(), partition_function(&y, &h).unwrap());
        }
    }
}

#[test]
fn boundary_tensors_reproduce_gluing() {
    for n in 1..=2 {
        let y = model(n, 10 + n as u64);
        for k in 0..=2 {
            let cat = enumerate_fragments(k, CatalogBounds::new(2, k + 2)).unwrap();
            let tensors: Vec<_> = cat.items().iter().map(|g| fragment_tensor(&y, g).unwrap()).collect();
            for (g, tg) in cat.items().iter().zip(&tensors) {
                for (h, th) in cat.items().iter().zip(&tensors) {
                    // brute force is the oracle here, not the contraction
                    let direct = partition_function(&y, &g.glue(h).unwrap()).unwrap();
                    assert_eq!(pair_partition(tg, th).unwrap(), direct);
                }
            }
        }
    }
}

#[test]
fn a_free_loop_multiplies_by_n() {
    let closed = enumerate_fragments(0, CatalogBounds::new(3, 4)).unwrap();
    for n in 1..=3 {
        let y = model(n, 20 + n as u64);
        let n_scalar = GaussianRational::from_int(n as i64);
        for x in closed.items() {
            let g = x.graph();
            let with_loop = g.disjoint_union(&MultiGraph::free_loop());
            let opts = ContractionOptions::default();
            assert_eq!(
                partition_function_contracted(&y, &with_loop, &opts).unwrap(),
                &n_scalar * &partition_function_contracted(&y, g, &opts).unwrap()
            );
        }
    }
}

#[test]
fn rational_weights_take_the_exact_path() {
    let y = VertexModel::from_fn(2, 4, |ms| GaussianRational::ratio(i64::from(ms[0]) + 1, i64::from(ms[1]) + 2)).unwrap();
    for g in [MultiGraph::cycle(4), MultiGraph::complete(4), MultiGraph::path(5)] {
        assert_eq!(
            partition_function(&y, &g).unwrap(),
            partition_function_contracted(&y, &g, &ContractionOptions::default()).unwrap()
        );
    }
}

#[test]
fn huge_weights_fall_back_without_overflow() {
    let big: GaussianRational = "9223372036854775807+9223372036854775807i".parse().unwrap();
    let y = VertexModel::from_fn(2, 4, |_| big.clone()).unwrap();
    let g = MultiGraph::cycle(5);
    assert_eq!(
        partition_function(&y, &g).unwrap(),
        partition_function_contracted(&y, &g, &ContractionOptions::default()).unwrap()
    );
}

#[test]
fn json_round_trips() {
    let y = model(3, 7);
    let back = ModelJson::parse(&ModelJson::from(&y).to_json()).unwrap().to_model().unwrap();
    assert_eq!(back, y);
    let g = MultiGraph::new(3, vec![(0, 1), (1, 1), (1, 2)], 2).unwrap();
    assert_eq!(GraphJson::parse(&GraphJson::from(&g).to_json()).unwrap().to_graph().unwrap(), g);
}
