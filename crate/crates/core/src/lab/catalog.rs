use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graphs::{CanonicalForm, Fragment, MultiGraph};

/// Most inner vertices a catalog may ask for.
pub const CATALOG_VERTEX_GUARD: usize = 4;
/// Most edges a catalog may ask for.
pub const CATALOG_EDGE_GUARD: usize = 10;
/// Most stubs a catalog may ask for.
pub const CATALOG_ARITY_GUARD: usize = 8;

/// Size limits for [`enumerate_fragments`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogBounds {
    /// Inner (non-stub) vertices.
    pub max_inner_vertices: usize,
    /// Edges, stub edges included.
    pub max_edges: usize,
}

impl CatalogBounds {
    pub fn new(max_inner_vertices: usize, max_edges: usize) -> Self {
        CatalogBounds {
            max_inner_vertices,
            max_edges,
        }
    }
}

/// A finite, duplicate-free list of `k`-fragments.
#[derive(Clone, Debug)]
pub struct FragmentCatalog {
    arity: usize,
    bounds: Option<CatalogBounds>,
    items: Vec<Fragment>,
}

impl FragmentCatalog {
    /// A hand-picked catalog; duplicates are allowed here.
    pub fn from_items(arity: usize, items: Vec<Fragment>) -> Result<Self> {
        if let Some(f) = items.iter().find(|f| f.arity() != arity) {
            return Err(Error::ArityMismatch {
                left: arity,
                right: f.arity(),
            });
        }
        Ok(FragmentCatalog {
            arity,
            bounds: None,
            items,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bounds(&self) -> Option<CatalogBounds> {
        self.bounds
    }

    pub fn items(&self) -> &[Fragment] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Every `k`-fragment, up to isomorphism, with at most the given numbers of
/// inner vertices and edges and with zero or one vertexless loop.
///
/// Items are sorted by (vertex count, edge count, canonical form), so the
/// catalog is identical from run to run.
pub fn enumerate_fragments(k: usize, bounds: CatalogBounds) -> Result<FragmentCatalog> {
    if k > CATALOG_ARITY_GUARD {
        return Err(Error::guard("catalog arity", CATALOG_ARITY_GUARD, k));
    }
    if bounds.max_inner_vertices > CATALOG_VERTEX_GUARD {
        return Err(Error::guard(
            "catalog inner vertices",
            CATALOG_VERTEX_GUARD,
            bounds.max_inner_vertices,
        ));
    }
    if bounds.max_edges > CATALOG_EDGE_GUARD {
        return Err(Error::guard("catalog edges", CATALOG_EDGE_GUARD, bounds.max_edges));
    }

    let mut found: BTreeMap<(usize, usize, CanonicalForm), Fragment> = BTreeMap::new();
    for inner in 0..=bounds.max_inner_vertices {
        let pairs: Vec<(usize, usize)> = (0..inner)
            .flat_map(|a| (a..inner).map(move |b| (k + a, k + b)))
            .collect();
        for stub_edges in stub_attachments(k, inner) {
            if stub_edges.len() > bounds.max_edges {
                continue;
            }
            let budget = bounds.max_edges - stub_edges.len();
            for internal in multisets_of(&pairs, budget) {
                for free_loops in 0..=1 {
                    let mut edges = stub_edges.clone();
                    edges.extend(internal.iter().copied());
                    let graph = MultiGraph::new(k + inner, edges, free_loops)?;
                    let labels: Vec<usize> = (0..k).collect();
                    let fragment = Fragment::new(graph, &labels)?;
                    let key = (
                        fragment.graph().vertex_count(),
                        fragment.graph().edge_count(),
                        fragment.canonical_form()?,
                    );
                    found.entry(key).or_insert(fragment);
                }
            }
        }
    }
    Ok(FragmentCatalog {
        arity: k,
        bounds: Some(bounds),
        items: found.into_values().collect(),
    })
}

/// Ways to attach `k` stubs: each stub either joins an inner vertex
/// (`k..k+inner`) or is paired with another stub.
fn stub_attachments(k: usize, inner: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        k: usize,
        inner: usize,
        taken: &mut Vec<bool>,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(s) = (0..k).find(|&s| !taken[s]) else {
            out.push(edges.clone());
            return;
        };
        taken[s] = true;
        for v in 0..inner {
            edges.push((s, k + v));
            rec(k, inner, taken, edges, out);
            edges.pop();
        }
        for t in s + 1..k {
            if taken[t] {
                continue;
            }
            taken[t] = true;
            edges.push((s, t));
            rec(k, inner, taken, edges, out);
            edges.pop();
            taken[t] = false;
        }
        taken[s] = false;
    }
    let mut out = Vec::new();
    rec(k, inner, &mut vec![false; k], &mut Vec::new(), &mut out);
    out
}

/// All multisets of at most `max_size` items drawn from `items`.
fn multisets_of<T: Copy>(items: &[T], max_size: usize) -> Vec<Vec<T>> {
    fn rec<T: Copy>(items: &[T], start: usize, left: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, max_size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_catalog_without_room() {
        let cat = enumerate_fragments(0, CatalogBounds::new(0, 0)).unwrap();
        assert_eq!(cat.items(), &[Fragment::closed(MultiGraph::empty()), Fragment::closed(MultiGraph::free_loop())]);
    }

    #[test]
    fn two_stubs_without_vertices_give_the_bare_edge() {
        let cat = enumerate_fragments(2, CatalogBounds::new(0, 3)).unwrap();
        let x = Fragment::bare_edge().canonical_form().unwrap();
        assert!(cat.items().iter().any(|f| f.canonical_form().unwrap() == x));
        // bare edge, with or without a free loop
        assert_eq!(cat.len(), 2);
    }

    #[test]
    fn no_duplicates_and_bounds_respected() {
        let bounds = CatalogBounds::new(2, 4);
        let cat = enumerate_fragments(2, bounds).unwrap();
        let mut forms: Vec<_> = cat.items().iter().map(|f| f.canonical_form().unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), cat.len());
        for f in cat.items() {
            assert_eq!(f.arity(), 2);
            assert!(f.inner_vertex_count() <= 2);
            assert!(f.graph().edge_count() <= 4);
            assert!(f.graph().free_loops() <= 1);
        }
    }

    #[test]
    fn deterministic() {
        let a = enumerate_fragments(3, CatalogBounds::new(2, 4)).unwrap();
        let b = enumerate_fragments(3, CatalogBounds::new(2, 4)).unwrap();
        assert_eq!(a.items(), b.items());
    }

    #[test]
    fn one_stub_catalog_contents() {
        // one stub needs one inner vertex; with at most 1 vertex and 2 edges:
        // stub only, stub + loop, each with or without a free loop
        let cat = enumerate_fragments(1, CatalogBounds::new(1, 2)).unwrap();
        assert_eq!(cat.len(), 4);
    }

    #[test]
    fn guards() {
        assert!(enumerate_fragments(2, CatalogBounds::new(5, 2)).unwrap_err().is_guard());
        assert!(enumerate_fragments(2, CatalogBounds::new(1, 11)).unwrap_err().is_guard());
        assert!(enumerate_fragments(9, CatalogBounds::new(1, 2)).unwrap_err().is_guard());
    }

    #[test]
    fn hand_catalog_checks_arity() {
        assert!(FragmentCatalog::from_items(2, vec![Fragment::star(3)]).is_err());
        let cat = FragmentCatalog::from_items(2, vec![Fragment::unit(1), Fragment::unit(1)]).unwrap();
        assert_eq!(cat.len(), 2);
    }
}
