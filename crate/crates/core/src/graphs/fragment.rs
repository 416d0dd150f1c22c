use crate::error::{Error, Result};

use super::canon::{canonical_form, CanonicalForm};
use super::{MultiGraph, Permutation};

/// A `k`-fragment: a multigraph with `k` labeled degree-one stub vertices.
///
/// Stored normalized: the vertex carrying label `i + 1` is vertex `i`, so
/// vertices `0..arity` are the stubs and the rest are ordinary (weighted)
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    graph: MultiGraph,
    arity: usize,
}

impl Fragment {
    /// Builds a fragment from a graph and `labels[i]` = vertex labeled `i + 1`.
    /// Vertices are reordered so that labels come first.
    pub fn new(graph: MultiGraph, labels: &[usize]) -> Result<Self> {
        let n = graph.vertex_count();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in labels.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidFragment(format!("vertex {v} labeled twice")));
            }
            position[v] = i;
        }
        let deg = graph.degrees();
        if let Some(&v) = labels.iter().find(|&&v| deg[v] != 1) {
            return Err(Error::InvalidFragment(format!(
                "labeled vertex {v} has degree {}, expected 1",
                deg[v]
            )));
        }
        let unlabeled = position.iter_mut().filter(|p| **p == usize::MAX);
        for (next, p) in (labels.len()..).zip(unlabeled) {
            *p = next;
        }
        let edges = graph
            .edges()
            .iter()
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Ok(Fragment {
            graph: MultiGraph::from_parts_unchecked(n, edges, graph.free_loops()),
            arity: labels.len(),
        })
    }

    /// A plain graph viewed as a 0-fragment.
    pub fn closed(graph: MultiGraph) -> Self {
        Fragment { graph, arity: 0 }
    }

    /// `𝟙_k`: `k` strands, strand `i` joining labels `i` and `k + i`.
    pub fn unit(k: usize) -> Self {
        let edges = (0..k).map(|i| (i, k + i)).collect();
        Fragment {
            graph: MultiGraph::from_parts_unchecked(2 * k, edges, 0),
            arity: 2 * k,
        }
    }

    /// The bare labeled edge: a single edge whose two ends carry labels 1 and 2.
    pub fn bare_edge() -> Self {
        Self::unit(1)
    }

    /// One vertex joined to `k` stubs.
    pub fn star(k: usize) -> Self {
        let edges = (0..k).map(|i| (i, k)).collect();
        Fragment {
            graph: MultiGraph::from_parts_unchecked(k + 1, edges, 0),
            arity: k,
        }
    }

    /// `P_{k,π}` for `π ∈ S_m`: `k·m` strands in `m` blocks of `k`; strand
    /// `s` of block `c` runs from left label `c·k + s` to right label
    /// `k·m + π(c)·k + s` (0-based). Blocks line up with the copies of a
    /// tensor power, so `x^{⊗m} P_{k,π}` permutes whole copies.
    pub fn perm_fragment(k: usize, pi: &Permutation) -> Self {
        let m = pi.degree();
        let km = k * m;
        let mut edges = Vec::with_capacity(km);
        for c in 0..m {
            for s in 0..k {
                edges.push((c * k + s, km + pi.apply(c) * k + s));
            }
        }
        Fragment {
            graph: MultiGraph::from_parts_unchecked(2 * km, edges, 0),
            arity: 2 * km,
        }
    }

    /// `r_π`: strand `i` joins labels `i` and `k + π(i)`.
    pub fn r_fragment(pi: &Permutation) -> Self {
        let k = pi.degree();
        let edges = (0..k).map(|i| (i, k + pi.apply(i))).collect();
        Fragment {
            graph: MultiGraph::from_parts_unchecked(2 * k, edges, 0),
            arity: 2 * k,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }

    /// Number of vertices that are not stubs.
    pub fn inner_vertex_count(&self) -> usize {
        self.graph.vertex_count() - self.arity
    }

    /// Vertex carrying label `i + 1`; always `i` after normalization.
    pub fn label_vertex(&self, i: usize) -> usize {
        debug_assert!(i < self.arity);
        i
    }

    /// `G·H`: identify equally labeled stubs and suppress them.
    ///
    /// Strands that close up without meeting an inner vertex become
    /// vertexless loops. Inner vertices of `self` come first in the result,
    /// followed by those of `other`.
    pub fn glue(&self, other: &Fragment) -> Result<MultiGraph> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let k = self.arity;
        let off = self.graph.vertex_count();
        let union = self.graph.disjoint_union(&other.graph);
        let joins: Vec<(usize, usize)> = (0..k).map(|i| (i, off + i)).collect();
        let order: Vec<usize> = (k..off).chain(off + k..union.vertex_count()).collect();
        Ok(splice(&union, &joins, &order))
    }

    /// `GH` on `2k`-fragments: right labels of `self` meet left labels of
    /// `other`; the result keeps the left labels of `self` and the right
    /// labels of `other`.
    pub fn product(&self, other: &Fragment) -> Result<Fragment> {
        if self.arity % 2 == 1 {
            return Err(Error::OddArity(self.arity));
        }
        if other.arity % 2 == 1 {
            return Err(Error::OddArity(other.arity));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let k = self.arity / 2;
        let off = self.graph.vertex_count();
        let union = self.graph.disjoint_union(&other.graph);
        let joins: Vec<(usize, usize)> = (0..k).map(|i| (k + i, off + i)).collect();
        let order: Vec<usize> = (0..k)
            .chain(off + k..off + 2 * k)
            .chain(2 * k..off)
            .chain(off + 2 * k..union.vertex_count())
            .collect();
        Ok(Fragment {
            graph: splice(&union, &joins, &order),
            arity: 2 * k,
        })
    }

    /// `x^s` under [`Fragment::product`]; `x^0 = 𝟙_k`.
    pub fn power(&self, s: usize) -> Result<Fragment> {
        if self.arity % 2 == 1 {
            return Err(Error::OddArity(self.arity));
        }
        let mut acc = Fragment::unit(self.arity / 2);
        for _ in 0..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `x^{⊗m}`: `m` stacked copies. In copy `j` (0-based), left label `i`
    /// becomes `i + j·k` and right label `k + i` becomes `k·m + i + j·k`.
    pub fn tensor_power(&self, m: usize) -> Result<Fragment> {
        if self.arity % 2 == 1 {
            return Err(Error::OddArity(self.arity));
        }
        let k = self.arity / 2;
        let n = self.graph.vertex_count();
        let mut union = MultiGraph::empty();
        for _ in 0..m {
            union = union.disjoint_union(&self.graph);
        }
        let mut labels = vec![0; 2 * k * m];
        for j in 0..m {
            for i in 0..k {
                labels[i + j * k] = j * n + i;
                labels[k * m + i + j * k] = j * n + k + i;
            }
        }
        Fragment::new(union, &labels)
    }

    /// Isomorphism class, with labels held fixed.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        canonical_form(&self.graph, self.arity)
    }
}

/// Identifies each pair in `joins` (both ends must be degree-one vertices)
/// into a point, suppresses the point by concatenating its two edges, and
/// keeps the vertices listed in `order` in that order.
fn splice(union: &MultiGraph, joins: &[(usize, usize)], order: &[usize]) -> MultiGraph {
    let inc = union.incidence();
    let half_edge_vertex = |h: usize| {
        let (a, b) = union.edges()[h / 2];
        if h.is_multiple_of(2) {
            a
        } else {
            b
        }
    };
    let mut suppressed = vec![false; union.vertex_count()];
    let mut partner = vec![usize::MAX; 2 * union.edge_count()];
    for &(a, b) in joins {
        debug_assert!(inc[a].len() == 1 && inc[b].len() == 1);
        let ha = 2 * inc[a][0].0 + inc[a][0].1;
        let hb = 2 * inc[b][0].0 + inc[b][0].1;
        partner[ha] = hb;
        partner[hb] = ha;
        suppressed[a] = true;
        suppressed[b] = true;
    }
    let mut new_index = vec![usize::MAX; union.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        debug_assert!(!suppressed[v]);
        new_index[v] = i;
    }

    let mut visited = vec![false; union.edge_count()];
    let mut edges = Vec::new();
    for &v in order {
        for &(e, side) in &inc[v] {
            if visited[e] {
                continue;
            }
            let mut h = 2 * e + side;
            let end = loop {
                visited[h / 2] = true;
                let other = h ^ 1;
                let w = half_edge_vertex(other);
                if !suppressed[w] {
                    break w;
                }
                h = partner[other];
            };
            edges.push((new_index[v], new_index[end]));
        }
    }

    // whatever is left runs only through suppressed points: closed strands
    let mut free_loops = union.free_loops();
    for e in 0..union.edge_count() {
        if visited[e] {
            continue;
        }
        free_loops += 1;
        let start = 2 * e;
        let mut h = start;
        loop {
            visited[h / 2] = true;
            h = partner[h ^ 1];
            if h == start {
                break;
            }
        }
    }
    MultiGraph::from_parts_unchecked(order.len(), edges, free_loops)
}
