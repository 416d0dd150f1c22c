//! Brute-force canonical forms for small graphs and fragments.

use std::fmt;

use crate::error::{Error, Result};

use super::MultiGraph;

/// Most unlabeled vertices a canonical form will be computed for.
pub const CANONICAL_VERTEX_GUARD: usize = 10;

/// A byte string equal for two inputs exactly when they are isomorphic
/// (label-preserving for fragments).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Canonical form of `g` where vertices `0..fixed` keep their indices and
/// the remaining vertices are relabeled.
///
/// Unlabeled vertices are first sorted into classes by an
/// isomorphism-invariant signature, then every relabeling that respects
/// the class order is tried and the lexicographically least sorted edge
/// list wins.
pub(crate) fn canonical_form(g: &MultiGraph, fixed: usize) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    let free = n - fixed;
    if free > CANONICAL_VERTEX_GUARD {
        return Err(Error::guard(
            "unlabeled vertices for canonical form",
            CANONICAL_VERTEX_GUARD,
            free,
        ));
    }

    let deg = g.degrees();
    let mut loops = vec![0usize; n];
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        if a == b {
            loops[a] += 1;
        } else {
            neighbours[a].push(b);
            neighbours[b].push(a);
        }
    }
    // (degree, loops, fixed neighbours, degrees of free neighbours)
    type Signature = (usize, usize, Vec<usize>, Vec<usize>);
    let signature = |v: usize| -> Signature {
        let mut fixed_nb: Vec<usize> = neighbours[v].iter().copied().filter(|&w| w < fixed).collect();
        let mut free_nb: Vec<usize> = neighbours[v]
            .iter()
            .filter(|&&w| w >= fixed)
            .map(|&w| deg[w])
            .collect();
        fixed_nb.sort_unstable();
        free_nb.sort_unstable();
        (deg[v], loops[v], fixed_nb, free_nb)
    };

    let mut order: Vec<(Signature, usize)> = (fixed..n).map(|v| (signature(v), v)).collect();
    order.sort();
    // class id per position and members per class
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut position_class = Vec::with_capacity(free);
    for (i, (sig, v)) in order.iter().enumerate() {
        if i == 0 || order[i - 1].0 != *sig {
            classes.push(Vec::new());
        }
        classes.last_mut().unwrap().push(*v);
        position_class.push(classes.len() - 1);
    }

    let mut search = Search {
        graph: g,
        fixed,
        classes: &classes,
        position_class: &position_class,
        assignment: (0..n).map(|v| if v < fixed { v } else { usize::MAX }).collect(),
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    let best = search.best.unwrap_or_default();

    let mut bytes = Vec::with_capacity(16 + 8 * best.len());
    for x in [fixed, n, g.free_loops(), best.len()] {
        bytes.extend_from_slice(&(x as u32).to_be_bytes());
    }
    for (a, b) in best {
        bytes.extend_from_slice(&(a as u32).to_be_bytes());
        bytes.extend_from_slice(&(b as u32).to_be_bytes());
    }
    Ok(CanonicalForm(bytes))
}

struct Search<'a> {
    graph: &'a MultiGraph,
    fixed: usize,
    classes: &'a [Vec<usize>],
    position_class: &'a [usize],
    // old vertex -> new index
    assignment: Vec<usize>,
    used: Vec<bool>,
    best: Option<Vec<(usize, usize)>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.position_class.len() {
            let mut edges: Vec<(usize, usize)> = self
                .graph
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (self.assignment[a], self.assignment[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            if self.best.as_ref().is_none_or(|b| edges < *b) {
                self.best = Some(edges);
            }
            return;
        }
        let class = &self.classes[self.position_class[pos]];
        for &v in class {
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.assignment[v] = self.fixed + pos;
            self.run(pos + 1);
            self.used[v] = false;
        }
    }
}
