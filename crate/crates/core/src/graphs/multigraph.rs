use crate::error::{Error, Result};

use super::canon::{canonical_form, CanonicalForm};

/// A finite undirected multigraph with loops, plus a number of vertexless
/// loops.
///
/// Vertices are `0..vertex_count`. Edges are stored as endpoint pairs; a
/// loop `(v, v)` contributes two half-edges at `v`. Parallel edges are
/// separate entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    free_loops: usize,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, free_loops: usize) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
        }
        Ok(MultiGraph {
            vertex_count,
            edges,
            free_loops,
        })
    }

    pub(crate) fn from_parts_unchecked(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        free_loops: usize,
    ) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < vertex_count && v < vertex_count));
        MultiGraph {
            vertex_count,
            edges,
            free_loops,
        }
    }

    /// The empty graph ∅.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The vertexless loop O.
    pub fn free_loop() -> Self {
        MultiGraph {
            free_loops: 1,
            ..Self::default()
        }
    }

    /// `n` isolated vertices.
    pub fn isolated(n: usize) -> Self {
        MultiGraph {
            vertex_count: n,
            ..Self::default()
        }
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_parts_unchecked(n, edges, 0)
    }

    /// Cycle on `n >= 1` vertices (a single loop for `n = 1`, a double edge for `n = 2`).
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_parts_unchecked(n, edges, 0)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_parts_unchecked(n, edges, 0)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: self.vertex_count,
                });
            }
        }
        self.edges.push((u, v));
        Ok(())
    }

    pub fn add_free_loops(&mut self, count: usize) {
        self.free_loops += count;
    }

    /// Half-edge degree; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        2 * self.edges.len()
    }

    /// Half-edges at each vertex as `(edge index, side)`; a loop appears twice.
    pub(crate) fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push((e, 0));
            inc[b].push((e, 1));
        }
        inc
    }

    /// `G ∪̇ H`: vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let off = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        MultiGraph {
            vertex_count: off + other.vertex_count,
            edges,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// `G_s = (V, E ∪ {u s(u) : u ∈ U})`, where `targets[i] = s(u_set[i])`.
    ///
    /// Self-targets add loops; targets already adjacent add parallel edges.
    pub fn pin_edges(&self, u_set: &[usize], targets: &[usize]) -> Result<MultiGraph> {
        if u_set.len() != targets.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} pinned vertices but {} targets",
                u_set.len(),
                targets.len()
            )));
        }
        let mut seen = vec![false; self.vertex_count];
        let mut out = self.clone();
        for (&u, &t) in u_set.iter().zip(targets) {
            out.add_edge(u, t)?;
            if std::mem::replace(&mut seen[u], true) {
                return Err(Error::ShapeMismatch(format!("vertex {u} repeated in U")));
            }
        }
        Ok(out)
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        canonical_form(self, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn out_of_range_edges_are_rejected() {
        assert!(matches!(
            MultiGraph::new(2, vec![(0, 2)], 0),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn loop_counts_twice() {
        let g = MultiGraph::new(1, vec![(0, 0)], 0).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degrees(), vec![2]);
    }

    #[test]
    fn union_with_empty_and_free_loops() {
        let g = MultiGraph::cycle(3);
        assert_eq!(g.disjoint_union(&MultiGraph::empty()), g);
        let oo = MultiGraph::free_loop().disjoint_union(&MultiGraph::free_loop());
        assert_eq!(oo.free_loops(), 2);
        let h = MultiGraph::path(4);
        let u = g.disjoint_union(&h);
        assert_eq!(u.vertex_count(), 7);
        assert_eq!(u.edge_count(), 6);
    }

    #[test]
    fn pinning() {
        let g = MultiGraph::path(3);
        assert_eq!(g.pin_edges(&[], &[]).unwrap(), g);

        let single = MultiGraph::isolated(1);
        let pinned = single.pin_edges(&[0], &[0]).unwrap();
        assert_eq!(pinned.edges(), &[(0, 0)]);

        let pinned = g.pin_edges(&[0, 2], &[1, 1]).unwrap();
        assert_eq!(pinned.edge_count(), g.edge_count() + 2);

        assert!(g.pin_edges(&[0], &[3]).is_err());
        assert!(g.pin_edges(&[5], &[0]).is_err());
        assert!(g.pin_edges(&[0, 0], &[1, 2]).is_err());
    }
}
