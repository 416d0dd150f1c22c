use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, SmallGaussInt};

/// A color multiset as its incidence vector: `counts[c]` copies of color `c`.
pub type Multiset = Vec<u32>;

/// An `n`-color vertex model truncated to vertex degrees `<= max_degree`.
///
/// Weights are total on multisets of size `<= max_degree`; entries never set
/// are zero. Asking for a larger multiset is an error, never a silent zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexModel {
    colors: usize,
    max_degree: usize,
    // only nonzero weights are stored
    weights: BTreeMap<Multiset, GaussianRational>,
    zero: GaussianRational,
    // machine-word copy of `weights`, valid while `oversized == 0`
    small: BTreeMap<Multiset, SmallGaussInt>,
    oversized: usize,
}

impl VertexModel {
    /// The all-zero model.
    pub fn new(colors: usize, max_degree: usize) -> Result<Self> {
        if colors == 0 {
            return Err(Error::ShapeMismatch("a vertex model needs at least one color".into()));
        }
        if colors > u8::MAX as usize {
            return Err(Error::guard("colors", u8::MAX as usize, colors));
        }
        Ok(VertexModel {
            colors,
            max_degree,
            weights: BTreeMap::new(),
            zero: GaussianRational::zero(),
            small: BTreeMap::new(),
            oversized: 0,
        })
    }

    /// Weight of every multiset of size `<= max_degree` given by `f`.
    pub fn from_fn(
        colors: usize,
        max_degree: usize,
        mut f: impl FnMut(&[u32]) -> GaussianRational,
    ) -> Result<Self> {
        let mut model = Self::new(colors, max_degree)?;
        for ms in multisets(colors, max_degree) {
            let w = f(&ms);
            model.set_weight(&ms, w)?;
        }
        Ok(model)
    }

    /// Weight 1 everywhere: `p_y(G) = n^{|E| + free loops}`.
    pub fn all_ones(colors: usize, max_degree: usize) -> Result<Self> {
        Self::from_fn(colors, max_degree, |_| GaussianRational::one())
    }

    /// Two colors, weight 1 when color 2 appears at most once: `p_y(G)`
    /// counts matchings (color 2 marks matched edges).
    pub fn matchings(max_degree: usize) -> Result<Self> {
        Self::from_fn(2, max_degree, |ms| {
            if ms[1] <= 1 {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    /// One color, weight `i^d` at degree `d`: `p_y(G) = (-1)^{|E|}`.
    pub fn parity(max_degree: usize) -> Result<Self> {
        let i = GaussianRational::i();
        Self::from_fn(1, max_degree, |ms| i.pow_u(u64::from(ms[0])))
    }

    /// Random Gaussian-integer weights with parts in `-3..=3`.
    pub fn random<R: Rng + ?Sized>(colors: usize, max_degree: usize, rng: &mut R) -> Result<Self> {
        Self::from_fn(colors, max_degree, |_| {
            GaussianRational::gaussian_int(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
        })
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn check(&self, multiset: &[u32]) -> Result<()> {
        if multiset.len() != self.colors {
            return Err(Error::ShapeMismatch(format!(
                "multiset over {} colors, model has {}",
                multiset.len(),
                self.colors
            )));
        }
        let size: u64 = multiset.iter().map(|&c| u64::from(c)).sum();
        if size > self.max_degree as u64 {
            return Err(Error::DegreeOverflow {
                vertex: usize::MAX,
                degree: size as usize,
                max_degree: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn set_weight(&mut self, multiset: &[u32], value: GaussianRational) -> Result<()> {
        self.check(multiset)?;
        if let Some(old) = self.weights.remove(multiset) {
            if SmallGaussInt::from_scalar(&old).is_none() {
                self.oversized -= 1;
            }
            self.small.remove(multiset);
        }
        if !value.is_zero() {
            match SmallGaussInt::from_scalar(&value) {
                Some(s) => {
                    self.small.insert(multiset.to_vec(), s);
                }
                None => self.oversized += 1,
            }
            self.weights.insert(multiset.to_vec(), value);
        }
        Ok(())
    }

    pub fn weight(&self, multiset: &[u32]) -> Result<&GaussianRational> {
        self.check(multiset)?;
        Ok(self.weight_unchecked(multiset))
    }

    /// Caller guarantees the multiset is in range.
    pub(crate) fn weight_unchecked(&self, multiset: &[u32]) -> &GaussianRational {
        self.weights.get(multiset).unwrap_or(&self.zero)
    }

    /// Machine-word weights, if every weight is a small Gaussian integer.
    pub(crate) fn small_weights(&self) -> Option<&BTreeMap<Multiset, SmallGaussInt>> {
        (self.oversized == 0).then_some(&self.small)
    }

    /// Nonzero weights in multiset order.
    pub fn nonzero_weights(&self) -> impl Iterator<Item = (&Multiset, &GaussianRational)> {
        self.weights.iter()
    }
}

/// All multisets over `colors` colors of size `<= max_size`, in
/// lexicographic order of their count vectors.
pub fn multisets(colors: usize, max_size: usize) -> Vec<Multiset> {
    fn rec(prefix: &mut Multiset, colors: usize, budget: u32, out: &mut Vec<Multiset>) {
        if prefix.len() == colors {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=budget {
            prefix.push(c);
            rec(prefix, colors, budget - c, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(colors), colors, max_size as u32, &mut out);
    out
}
