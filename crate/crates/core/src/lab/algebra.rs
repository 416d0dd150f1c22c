use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::graphs::{Fragment, Permutation};

use super::{FragmentCatalog, GraphInvariant};

/// A formal linear combination of fragments of one arity.
#[derive(Clone, Debug, Default)]
pub struct LinearCombo {
    arity: usize,
    terms: Vec<(GaussianRational, Fragment)>,
}

impl LinearCombo {
    pub fn new(arity: usize) -> Self {
        LinearCombo {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn single(fragment: Fragment) -> Self {
        LinearCombo {
            arity: fragment.arity(),
            terms: vec![(GaussianRational::one(), fragment)],
        }
    }

    pub fn push(&mut self, coefficient: GaussianRational, fragment: Fragment) -> Result<()> {
        if fragment.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: fragment.arity(),
            });
        }
        self.terms.push((coefficient, fragment));
        Ok(())
    }

    /// `q = Σ_{π ∈ S_k} sgn(π) r_π`, of arity `2k`.
    pub fn antisymmetrizer(k: usize) -> Self {
        LinearCombo {
            arity: 2 * k,
            terms: Permutation::all(k)
                .map(|pi| (GaussianRational::from_int(pi.sign()), Fragment::r_fragment(&pi)))
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(GaussianRational, Fragment)] {
        &self.terms
    }

    /// `f(x·H)` extended linearly in `x`.
    pub fn glue_eval(&self, f: &dyn GraphInvariant, h: &Fragment) -> Result<GaussianRational> {
        if h.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: h.arity(),
            });
        }
        let mut total = GaussianRational::zero();
        for (c, x) in &self.terms {
            if c.is_zero() {
                continue;
            }
            total += &(c * &f.evaluate(&x.glue(h)?)?);
        }
        Ok(total)
    }
}

/// `τ(x) = f(x·𝟙_k)` for `x` of arity `2k`.
pub fn tau(f: &dyn GraphInvariant, x: &LinearCombo) -> Result<GaussianRational> {
    if x.arity() % 2 == 1 {
        return Err(Error::OddArity(x.arity()));
    }
    x.glue_eval(f, &Fragment::unit(x.arity() / 2))
}

/// Both sides of the tensor-power gluing identity for one `(x, m, ρ, σ)`.
#[derive(Clone, Debug)]
pub struct GlueIdentityReport {
    pub m: usize,
    pub rho: Permutation,
    pub sigma: Permutation,
    /// `f(x^{⊗m} P_{k,ρ} · P_{k,σ})`.
    pub lhs: GaussianRational,
    /// `∏_c τ(x^{|c|})` over the orbits `c` of `ρσ⁻¹`.
    pub rhs: GaussianRational,
}

impl GlueIdentityReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn glue_identity_check(
    f: &dyn GraphInvariant,
    x: &Fragment,
    rho: &Permutation,
    sigma: &Permutation,
) -> Result<GlueIdentityReport> {
    if x.arity() % 2 == 1 {
        return Err(Error::OddArity(x.arity()));
    }
    let m = rho.degree();
    if sigma.degree() != m {
        return Err(Error::ArityMismatch {
            left: m,
            right: sigma.degree(),
        });
    }
    let k = x.arity() / 2;
    let left = x.tensor_power(m)?.product(&Fragment::perm_fragment(k, rho))?;
    let lhs = f.evaluate(&left.glue(&Fragment::perm_fragment(k, sigma))?)?;

    let mut rhs = GaussianRational::one();
    for cycle in (rho * &sigma.inverse()).cycles() {
        rhs *= &tau(f, &LinearCombo::single(x.power(cycle.len())?))?;
    }
    Ok(GlueIdentityReport {
        m,
        rho: rho.clone(),
        sigma: sigma.clone(),
        lhs,
        rhs,
    })
}

/// Result of testing `q` against a catalog of `2k`-fragments.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub k: usize,
    pub catalog_size: usize,
    /// First catalog index where `Σ sgn(π) f(r_π·H)` is nonzero, with the value.
    pub first_violation: Option<(usize, GaussianRational)>,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks `Σ_{π ∈ S_k} sgn(π) f(r_π·H) = 0` for every `H` in the catalog.
/// Only a finite sample of fragments is ever covered; the report carries
/// the catalog size.
pub fn antisym_kernel_check(f: &dyn GraphInvariant, cat: &FragmentCatalog) -> Result<KernelReport> {
    if cat.arity() % 2 == 1 {
        return Err(Error::OddArity(cat.arity()));
    }
    let k = cat.arity() / 2;
    let q = LinearCombo::antisymmetrizer(k);
    let mut first_violation = None;
    for (idx, h) in cat.items().iter().enumerate() {
        let value = q.glue_eval(f, h)?;
        if !value.is_zero() {
            first_violation = Some((idx, value));
            break;
        }
    }
    Ok(KernelReport {
        k,
        catalog_size: cat.len(),
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::PartitionFunction;
    use crate::models::VertexModel;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn tau_of_unit() {
        let y = VertexModel::matchings(4).unwrap();
        let f = PartitionFunction::new(&y);
        for k in 0..4 {
            assert_eq!(tau(&f, &LinearCombo::single(Fragment::unit(k))).unwrap(), q(2i64.pow(k as u32)));
        }
    }

    #[test]
    fn tau_of_r_pi() {
        let y = VertexModel::all_ones(3, 2).unwrap();
        let f = PartitionFunction::new(&y);
        for pi in Permutation::all(4) {
            let t = tau(&f, &LinearCombo::single(Fragment::r_fragment(&pi))).unwrap();
            assert_eq!(t, q(3i64.pow(pi.orbit_count() as u32)));
        }
    }

    #[test]
    fn tau_of_antisymmetrizer_vanishes_past_the_color_count() {
        for n in 1..=3 {
            let y = VertexModel::all_ones(n, 2).unwrap();
            let f = PartitionFunction::new(&y);
            assert!(tau(&f, &LinearCombo::antisymmetrizer(n + 1)).unwrap().is_zero());
            // but not at k = n
            assert!(!tau(&f, &LinearCombo::antisymmetrizer(n)).unwrap().is_zero());
        }
    }

    #[test]
    fn arity_errors() {
        let mut c = LinearCombo::new(2);
        assert!(c.push(q(1), Fragment::star(3)).is_err());
        let y = VertexModel::all_ones(1, 2).unwrap();
        let f = PartitionFunction::new(&y);
        assert!(tau(&f, &LinearCombo::single(Fragment::star(3))).is_err());
    }

    #[test]
    fn glue_identity_trivial_case() {
        let y = VertexModel::from_fn(2, 4, |ms| GaussianRational::gaussian_int(i64::from(ms[0]) + 1, i64::from(ms[1]))).unwrap();
        let f = PartitionFunction::new(&y);
        let x = Fragment::star(2);
        let id = Permutation::identity(1);
        let r = glue_identity_check(&f, &x, &id, &id).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, tau(&f, &LinearCombo::single(x)).unwrap());
    }
}
