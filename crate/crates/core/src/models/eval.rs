use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactalg::{Accumulate, GaussianRational, SmallGaussInt};
use crate::graphs::MultiGraph;

use super::VertexModel;

/// Default limit on simultaneously open edges during elimination.
pub const DEFAULT_FRONTIER_GUARD: usize = 20;

/// Largest number of colorings brute force will enumerate.
pub const BRUTE_FORCE_GUARD: u64 = 1 << 24;

fn check_degrees(y: &VertexModel, g: &MultiGraph, weighted: impl Fn(usize) -> bool) -> Result<()> {
    for (v, d) in g.degrees().into_iter().enumerate() {
        if weighted(v) && d > y.max_degree() {
            return Err(Error::DegreeOverflow {
                vertex: v,
                degree: d,
                max_degree: y.max_degree(),
            });
        }
    }
    Ok(())
}

fn free_loop_factor(y: &VertexModel, g: &MultiGraph) -> GaussianRational {
    GaussianRational::from_int(y.colors() as i64).pow_u(g.free_loops() as u64)
}

/// `p_y(G)` straight from the definition: sum over all `n^{|E|}` edge
/// colorings of the product of vertex weights.
///
/// A loop contributes its color twice to the multiset at its vertex; each
/// vertexless loop contributes a factor `n`.
pub fn partition_function(y: &VertexModel, g: &MultiGraph) -> Result<GaussianRational> {
    check_degrees(y, g, |_| true)?;
    let n = y.colors();
    let m = g.edge_count();
    let total = (n as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    if total > BRUTE_FORCE_GUARD {
        return Err(Error::guard("edge colorings", BRUTE_FORCE_GUARD as usize, total.min(usize::MAX as u64) as usize));
    }

    let mut coloring = vec![0usize; m];
    let mut counts = vec![vec![0u32; n]; g.vertex_count()];
    let mut sum = GaussianRational::zero();
    loop {
        for c in counts.iter_mut() {
            c.iter_mut().for_each(|x| *x = 0);
        }
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            counts[a][coloring[e]] += 1;
            counts[b][coloring[e]] += 1;
        }
        let mut term = GaussianRational::one();
        for c in &counts {
            let w = y.weight_unchecked(c);
            if w.is_zero() {
                term = GaussianRational::zero();
                break;
            }
            term *= w;
        }
        sum += &term;

        // odometer
        let mut i = 0;
        while i < m {
            coloring[i] += 1;
            if coloring[i] < n {
                break;
            }
            coloring[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
    }
    Ok(&sum * &free_loop_factor(y, g))
}

/// Options for [`partition_function_contracted`].
#[derive(Clone, Debug)]
pub struct ContractionOptions {
    /// Fail instead of growing a frontier past this many open edges.
    pub frontier_guard: usize,
    /// Explicit elimination order; `None` picks greedily.
    pub order: Option<Vec<usize>>,
}

impl Default for ContractionOptions {
    fn default() -> Self {
        ContractionOptions {
            frontier_guard: DEFAULT_FRONTIER_GUARD,
            order: None,
        }
    }
}

/// Sparse table over colorings of the open (cut) edges.
pub(crate) struct Frontier<T = GaussianRational> {
    pub edges: Vec<usize>,
    pub table: HashMap<Vec<u8>, T>,
}

/// `p_y(G)` by eliminating vertices one at a time.
///
/// The running state is a table over colorings of the edges with exactly
/// one eliminated end. The result is identical to [`partition_function`]
/// for every elimination order.
pub fn partition_function_contracted(
    y: &VertexModel,
    g: &MultiGraph,
    options: &ContractionOptions,
) -> Result<GaussianRational> {
    let weighted = vec![true; g.vertex_count()];
    let frontier = eliminate(y, g, &weighted, options.order.as_deref(), options.frontier_guard)?;
    debug_assert!(frontier.edges.is_empty());
    let closed = frontier.table.get(&Vec::new()).cloned().unwrap_or_default();
    Ok(&closed * &free_loop_factor(y, g))
}

/// Eliminates every vertex flagged in `weighted`. Free loops are not
/// included. Edges with an unweighted end stay open in the result; edges
/// with two unweighted ends are never touched.
///
/// Models with small Gaussian-integer weights run in machine words first
/// and fall back to exact rationals on overflow.
pub(crate) fn eliminate(
    y: &VertexModel,
    g: &MultiGraph,
    weighted: &[bool],
    order: Option<&[usize]>,
    guard: usize,
) -> Result<Frontier> {
    check_degrees(y, g, |v| weighted[v])?;
    if let Some(small) = y.small_weights() {
        let lookup = |c: &[u32]| small.get(c).unwrap_or(&SmallGaussInt::ZERO);
        if let Some(f) = eliminate_in(y.colors(), g, weighted, order, guard, lookup)? {
            return Ok(Frontier {
                edges: f.edges,
                table: f.table.into_iter().map(|(k, v)| (k, v.to_scalar())).collect(),
            });
        }
    }
    let lookup = |c: &[u32]| y.weight_unchecked(c);
    Ok(eliminate_in(y.colors(), g, weighted, order, guard, lookup)?.expect("exact arithmetic cannot overflow"))
}

/// `Ok(None)` when `T` overflowed.
fn eliminate_in<'w, T: Accumulate + 'w>(
    n: usize,
    g: &MultiGraph,
    weighted: &[bool],
    order: Option<&[usize]>,
    guard: usize,
    weight: impl Fn(&[u32]) -> &'w T,
) -> Result<Option<Frontier<T>>> {
    let inc = g.incidence();
    let edges = g.edges();

    if let Some(order) = order {
        let mut seen = vec![false; g.vertex_count()];
        for &v in order {
            if v >= g.vertex_count() || !weighted[v] || std::mem::replace(&mut seen[v], true) {
                return Err(Error::ShapeMismatch(format!("bad elimination order {order:?}")));
            }
        }
        if seen.iter().zip(weighted).any(|(&s, &w)| w && !s) {
            return Err(Error::ShapeMismatch(format!("elimination order {order:?} misses a vertex")));
        }
    }

    let mut done = vec![false; g.vertex_count()];
    let mut in_frontier = vec![false; edges.len()];
    let mut frontier = Frontier {
        edges: Vec::new(),
        table: HashMap::from([(Vec::new(), T::one())]),
    };

    // edges of v split into (closing: already open, opening: new non-loop, loops)
    let classify = |v: usize, in_frontier: &[bool]| {
        let mut closing = Vec::new();
        let mut opening = Vec::new();
        let mut loops = Vec::new();
        for &(e, side) in &inc[v] {
            let (a, b) = edges[e];
            if a == b {
                if side == 0 {
                    loops.push(e);
                }
            } else if in_frontier[e] {
                closing.push(e);
            } else {
                opening.push(e);
            }
        }
        (closing, opening, loops)
    };

    let remaining = weighted.iter().filter(|&&w| w).count();
    for step in 0..remaining {
        let v = match order {
            Some(order) => order[step],
            None => (0..g.vertex_count())
                .filter(|&v| weighted[v] && !done[v])
                .min_by_key(|&v| {
                    // opened minus closed edges, without building the lists
                    let growth: isize = inc[v]
                        .iter()
                        .map(|&(e, _)| {
                            let (a, b) = edges[e];
                            if a == b {
                                0
                            } else if in_frontier[e] {
                                -1
                            } else {
                                1
                            }
                        })
                        .sum();
                    (growth, v)
                })
                .expect("a vertex remains"),
        };
        let (closing, opening, loops) = classify(v, &in_frontier);
        let width = frontier.edges.len() + opening.len() - closing.len();
        if width > guard {
            return Err(Error::guard("frontier width", guard, width));
        }

        let closing_pos: Vec<usize> = frontier
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| closing.contains(e))
            .map(|(i, _)| i)
            .collect();
        let kept_pos: Vec<usize> = (0..frontier.edges.len())
            .filter(|i| !closing_pos.contains(i))
            .collect();
        let free_vars = opening.len() + loops.len();
        let assignments = n.pow(free_vars as u32);

        let mut next: HashMap<Vec<u8>, T> = HashMap::new();
        let mut counts = vec![0u32; n];
        let mut local = vec![0usize; free_vars];
        for (key, value) in &frontier.table {
            for a in 0..assignments {
                let mut rest = a;
                for slot in local.iter_mut() {
                    *slot = rest % n;
                    rest /= n;
                }
                counts.iter_mut().for_each(|c| *c = 0);
                for &p in &closing_pos {
                    counts[key[p] as usize] += 1;
                }
                for &c in &local[..opening.len()] {
                    counts[c] += 1;
                }
                for &c in &local[opening.len()..] {
                    counts[c] += 2;
                }
                let w = weight(&counts);
                if w.is_zero() {
                    continue;
                }
                let mut new_key = Vec::with_capacity(kept_pos.len() + opening.len());
                new_key.extend(kept_pos.iter().map(|&p| key[p]));
                new_key.extend(local[..opening.len()].iter().map(|&c| c as u8));
                let Some(contribution) = value.times(w) else {
                    return Ok(None);
                };
                match next.entry(new_key) {
                    Entry::Occupied(mut slot) => {
                        if slot.get_mut().add_to(&contribution).is_none() {
                            return Ok(None);
                        }
                    }
                    Entry::Vacant(slot) => {
                        slot.insert(contribution);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());

        for &e in &closing {
            in_frontier[e] = false;
        }
        for &e in &opening {
            in_frontier[e] = true;
        }
        let mut new_edges: Vec<usize> = kept_pos.iter().map(|&p| frontier.edges[p]).collect();
        new_edges.extend(&opening);
        frontier = Frontier {
            edges: new_edges,
            table: next,
        };
        done[v] = true;
    }
    Ok(Some(frontier))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn both(y: &VertexModel, g: &MultiGraph) -> GaussianRational {
        let a = partition_function(y, g).unwrap();
        let b = partition_function_contracted(y, g, &ContractionOptions::default()).unwrap();
        assert_eq!(a, b, "brute force and contraction disagree on {g:?}");
        a
    }

    #[test]
    fn free_loop_gives_color_count() {
        for n in 1..=4 {
            let y = VertexModel::all_ones(n, 2).unwrap();
            assert_eq!(both(&y, &MultiGraph::free_loop()), q(n as i64));
        }
    }

    #[test]
    fn empty_graph_is_one() {
        let y = VertexModel::matchings(2).unwrap();
        assert!(both(&y, &MultiGraph::empty()).is_one());
    }

    #[test]
    fn all_ones_counts_colorings() {
        let y = VertexModel::all_ones(3, 4).unwrap();
        assert_eq!(both(&y, &MultiGraph::cycle(4)), q(81));
        assert_eq!(both(&y, &MultiGraph::complete(3)), q(27));
    }

    #[test]
    fn matchings_of_small_graphs() {
        let y = VertexModel::matchings(3).unwrap();
        assert_eq!(both(&y, &MultiGraph::path(3)), q(3));
        assert_eq!(both(&y, &MultiGraph::cycle(5)), q(11));
        assert_eq!(both(&y, &MultiGraph::complete(4)), q(10));
    }

    #[test]
    fn parity_of_triangle() {
        let y = VertexModel::parity(2).unwrap();
        assert_eq!(both(&y, &MultiGraph::cycle(3)), q(-1));
    }

    #[test]
    fn loop_sees_its_color_twice() {
        // y({c,c}) summed over c
        let mut y = VertexModel::new(2, 2).unwrap();
        y.set_weight(&[2, 0], q(5)).unwrap();
        y.set_weight(&[0, 2], q(7)).unwrap();
        y.set_weight(&[1, 1], q(100)).unwrap();
        let g = MultiGraph::cycle(1);
        assert_eq!(both(&y, &g), q(12));
    }

    #[test]
    fn degree_overflow_is_an_error() {
        let y = VertexModel::all_ones(2, 1).unwrap();
        let g = MultiGraph::path(3);
        assert!(matches!(partition_function(&y, &g), Err(Error::DegreeOverflow { vertex: 1, .. })));
        assert!(partition_function_contracted(&y, &g, &ContractionOptions::default()).is_err());
    }

    #[test]
    fn frontier_guard_trips() {
        let y = VertexModel::all_ones(2, 8).unwrap();
        let g = MultiGraph::complete(6);
        let opts = ContractionOptions {
            frontier_guard: 2,
            order: None,
        };
        assert!(partition_function_contracted(&y, &g, &opts).unwrap_err().is_guard());
    }

    #[test]
    fn every_order_agrees() {
        let y = VertexModel::matchings(4).unwrap();
        let g = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 1)], 1).unwrap();
        let expected = partition_function(&y, &g).unwrap();
        for pi in crate::graphs::Permutation::all(4) {
            let opts = ContractionOptions {
                order: Some(pi.images().to_vec()),
                ..Default::default()
            };
            assert_eq!(partition_function_contracted(&y, &g, &opts).unwrap(), expected);
        }
    }

    #[test]
    fn bad_orders_rejected() {
        let y = VertexModel::all_ones(1, 4).unwrap();
        let g = MultiGraph::path(3);
        for order in [vec![0, 1], vec![0, 1, 1], vec![0, 1, 5]] {
            let opts = ContractionOptions {
                order: Some(order),
                ..Default::default()
            };
            assert!(partition_function_contracted(&y, &g, &opts).is_err());
        }
    }
}
