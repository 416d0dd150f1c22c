use proptest::prelude::*;

use vertexlab::graphs::{Fragment, MultiGraph, Permutation};
use vertexlab::lab::{enumerate_fragments, CatalogBounds, FragmentCatalog};

fn catalog(k: usize, vertices: usize, edges: usize) -> FragmentCatalog {
    enumerate_fragments(k, CatalogBounds::new(vertices, edges)).unwrap()
}

fn same(a: &Fragment, b: &Fragment) -> bool {
    a.canonical_form().unwrap() == b.canonical_form().unwrap()
}

#[test]
fn gluing_is_symmetric_on_catalog_pairs() {
    for k in 0..=3 {
        let cat = catalog(k, 2, k + 2);
        for g in cat.items() {
            for h in cat.items() {
                let gh = g.glue(h).unwrap().canonical_form().unwrap();
                let hg = h.glue(g).unwrap().canonical_form().unwrap();
                assert_eq!(gh, hg, "k={k}");
            }
        }
    }
}

#[test]
fn half_edges_are_conserved() {
    for k in 0..=3 {
        let cat = catalog(k, 2, k + 2);
        for g in cat.items() {
            for h in cat.items() {
                let glued = g.glue(h).unwrap();
                let expected = g.graph().total_degree() + h.graph().total_degree() - 2 * k;
                assert_eq!(glued.total_degree(), expected);
            }
        }
    }
}

#[test]
fn r_pi_against_unit_is_free_loops() {
    for m in 0..=5 {
        for pi in Permutation::all(m) {
            let g = Fragment::r_fragment(&pi).glue(&Fragment::unit(m)).unwrap();
            assert_eq!(g.vertex_count(), 0);
            assert_eq!(g.edge_count(), 0);
            assert_eq!(g.free_loops(), pi.orbit_count());
        }
    }
}

#[test]
fn perm_fragments_compose_like_permutations() {
    for k in 1..=2 {
        for rho in Permutation::all(3) {
            for sigma in Permutation::all(3) {
                let lhs = Fragment::perm_fragment(k, &rho).product(&Fragment::perm_fragment(k, &sigma)).unwrap();
                let rhs = Fragment::perm_fragment(k, &(&rho * &sigma));
                assert!(same(&lhs, &rhs), "k={k} rho={rho} sigma={sigma}");
            }
        }
    }
}

#[test]
fn isomorphic_graphs_share_a_canonical_form() {
    let a = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 3)], 0).unwrap();
    let b = MultiGraph::new(4, vec![(3, 2), (2, 1), (1, 0), (0, 0)], 0).unwrap();
    let c = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (1, 1)], 0).unwrap();
    assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    assert_ne!(a.canonical_form().unwrap(), c.canonical_form().unwrap());
}

fn arity_two() -> &'static [Fragment] {
    use std::sync::OnceLock;
    static CAT: OnceLock<Vec<Fragment>> = OnceLock::new();
    CAT.get_or_init(|| catalog(4, 2, 5).items().to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_associative(a in 0usize..10_000, b in 0usize..10_000, c in 0usize..10_000) {
        let cat = arity_two();
        let (f, g, h) = (&cat[a % cat.len()], &cat[b % cat.len()], &cat[c % cat.len()]);
        let left = f.product(g).unwrap().product(h).unwrap();
        let right = f.product(&g.product(h).unwrap()).unwrap();
        prop_assert!(same(&left, &right));
    }

    #[test]
    fn unit_is_neutral(a in 0usize..10_000) {
        let cat = arity_two();
        let g = &cat[a % cat.len()];
        let unit = Fragment::unit(2);
        prop_assert!(same(&g.product(&unit).unwrap(), g));
        prop_assert!(same(&unit.product(g).unwrap(), g));
    }

    #[test]
    fn r_is_a_monoid_homomorphism(m in 0usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        use rand::SeedableRng;
        let rho = Permutation::random(m, &mut rand_chacha::ChaCha8Rng::seed_from_u64(s1));
        let sigma = Permutation::random(m, &mut rand_chacha::ChaCha8Rng::seed_from_u64(s2));
        let lhs = Fragment::r_fragment(&rho).product(&Fragment::r_fragment(&sigma)).unwrap();
        prop_assert!(same(&lhs, &Fragment::r_fragment(&(&rho * &sigma))));
    }

    #[test]
    fn sign_matches_orbit_count(m in 0usize..7, seed in any::<u64>()) {
        use rand::SeedableRng;
        let pi = Permutation::random(m, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let expected = if (m - pi.orbit_count()).is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(pi.sign(), expected);
    }
}
