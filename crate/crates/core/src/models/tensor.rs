use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::graphs::Fragment;

use super::eval::{eliminate, DEFAULT_FRONTIER_GUARD};
use super::VertexModel;

/// Boundary tensor of a fragment: one entry per coloring `φ: [k] -> [n]`
/// of the stub edges, in lexicographic order with label 1 most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentTensor {
    colors: usize,
    arity: usize,
    entries: Vec<GaussianRational>,
}

impl FragmentTensor {
    pub fn zero(colors: usize, arity: usize) -> Self {
        FragmentTensor {
            colors,
            arity,
            entries: vec![GaussianRational::zero(); colors.pow(arity as u32)],
        }
    }

    pub fn from_entries(colors: usize, arity: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.len() != colors.pow(arity as u32) {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for {colors} colors and arity {arity}",
                entries.len()
            )));
        }
        Ok(FragmentTensor {
            colors,
            arity,
            entries,
        })
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    /// Flat index of a boundary coloring (0-based colors).
    pub fn index(&self, phi: &[usize]) -> usize {
        phi.iter().fold(0, |acc, &c| acc * self.colors + c)
    }

    pub fn get(&self, phi: &[usize]) -> &GaussianRational {
        &self.entries[self.index(phi)]
    }

    /// Boundary coloring at a flat index.
    pub fn coloring(&self, mut index: usize) -> Vec<usize> {
        let mut phi = vec![0; self.arity];
        for slot in phi.iter_mut().rev() {
            *slot = index % self.colors;
            index /= self.colors;
        }
        phi
    }
}

/// The boundary tensor of `g` under `y`: the entry at `φ` sums, over edge
/// colorings giving stub `i` the color `φ(i)`, the product of `y` over the
/// inner vertices (stubs carry no weight).
pub fn fragment_tensor(y: &VertexModel, g: &Fragment) -> Result<FragmentTensor> {
    fragment_tensor_guarded(y, g, DEFAULT_FRONTIER_GUARD)
}

pub fn fragment_tensor_guarded(y: &VertexModel, g: &Fragment, guard: usize) -> Result<FragmentTensor> {
    let n = y.colors();
    let k = g.arity();
    let graph = g.graph();
    let weighted: Vec<bool> = (0..graph.vertex_count()).map(|v| v >= k).collect();
    let frontier = eliminate(y, graph, &weighted, None, guard)?;

    // stub label at the open end of each frontier edge
    let open_labels: Vec<usize> = frontier
        .edges
        .iter()
        .map(|&e| {
            let (a, b) = graph.edges()[e];
            if a < k {
                a
            } else {
                b
            }
        })
        .collect();
    // edges running stub to stub force equal colors
    let tied: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| a < k && b < k)
        .collect();

    let scale = GaussianRational::from_int(n as i64).pow_u(graph.free_loops() as u64);
    let mut tensor = FragmentTensor::zero(n, k);
    let mut key = vec![0u8; open_labels.len()];
    for idx in 0..tensor.entries.len() {
        let phi = tensor.coloring(idx);
        if tied.iter().any(|&(a, b)| phi[a] != phi[b]) {
            continue;
        }
        for (slot, &label) in key.iter_mut().zip(&open_labels) {
            *slot = phi[label] as u8;
        }
        if let Some(v) = frontier.table.get(&key) {
            tensor.entries[idx] = v * &scale;
        }
    }
    Ok(tensor)
}

/// `Σ_φ tG(φ)·tH(φ)`, which equals `p_y(G·H)` for the source fragments.
pub fn pair_partition(t_g: &FragmentTensor, t_h: &FragmentTensor) -> Result<GaussianRational> {
    if t_g.colors != t_h.colors || t_g.arity != t_h.arity {
        return Err(Error::ShapeMismatch(format!(
            "tensors ({} colors, arity {}) and ({} colors, arity {})",
            t_g.colors, t_g.arity, t_h.colors, t_h.arity
        )));
    }
    Ok(t_g
        .entries
        .iter()
        .zip(&t_h.entries)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum())
}
