//! Subnormal series of Hopf subalgebras and their factors.

use super::qmat::{Subspace, Q};
use super::{augmentation, dual_hopf, hopf_subalgebra_failures, is_cocommutative, is_commutative, verify_hopf_axioms, HopfAlgebra};
use crate::error::{Error, Result};
use crate::report::Report;
use num_traits::Zero;
use serde::Serialize;

/// A descending chain `K₀ = H ⊇ K₁ ⊇ … ⊇ K_n = k·1`, each term given by
/// spanning vectors in the basis of `H`.
#[derive(Debug, Clone)]
pub struct HopfChain {
    pub h: HopfAlgebra,
    pub subspaces: Vec<Vec<Vec<Q>>>,
}

impl HopfChain {
    /// Builds the descending chain from an ascending list `k ⊂ … ⊂ H`.
    pub fn from_ascending(h: HopfAlgebra, ascending: Vec<Vec<Vec<Q>>>) -> Self {
        let mut subspaces = ascending;
        subspaces.reverse();
        HopfChain { h, subspaces }
    }
}

/// Classification of one factor `K_i / K_i K_{i+1}⁺`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorClass {
    pub step: usize,
    pub dim: usize,
    pub commutative: bool,
    pub cocommutative: bool,
}

/// Factor classifications in chain order (top step first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesCertificate {
    pub factors: Vec<FactorClass>,
}

fn failure(step: usize, report: &Report) -> Error {
    let w = &report.witnesses[0];
    Error::Structural(format!("step {step}: {} ({})", w.detail, w.check))
}

/// Certifies a subnormal series whose factors are commutative or cocommutative.
pub fn verify_subnormal_series(chain: &HopfChain) -> Result<SeriesCertificate> {
    let h = &chain.h;
    let n = h.dim();
    if chain.subspaces.len() < 2 {
        return Err(Error::Structural("a series needs at least the terms H and k".into()));
    }
    if chain.subspaces.iter().flatten().any(|v| v.len() != n) {
        return Err(Error::Validation("chain vectors do not match the dimension".into()));
    }
    let terms: Vec<Subspace> = chain.subspaces.iter().map(|vs| Subspace::span(n, vs)).collect();
    if terms[0].dim() != n {
        return Err(Error::Structural("step 0: the top term is not all of H".into()));
    }
    let bottom = terms.last().expect("at least two terms");
    if !bottom.same_as(&Subspace::span(n, &[h.unit_vector().to_vec()])) {
        return Err(Error::Structural(format!("step {}: the bottom term is not k·1", terms.len() - 2)));
    }
    let mut factors = Vec::new();
    for (step, pair) in terms.windows(2).enumerate() {
        let (big, small) = (&pair[0], &pair[1]);
        let mut r = Report::with_limit(1);
        if !big.contains_space(small) {
            r.fail("inclusion", "K_{i+1} is not contained in K_i");
            return Err(failure(step, &r));
        }
        hopf_subalgebra_failures(h, small, "subalgebra", &mut r);
        if !r.valid {
            return Err(failure(step, &r));
        }
        for (a, x) in big.basis().iter().enumerate() {
            let d = h.coproduct(x);
            for (b, y) in small.basis().iter().enumerate() {
                // h₁ y S(h₂) and S(h₁) y h₂
                let mut left = vec![Q::zero(); n];
                let mut right = vec![Q::zero(); n];
                for j in 0..n {
                    for k in 0..n {
                        let c = d[j * n + k];
                        if c.is_zero() {
                            continue;
                        }
                        let (bj, bk) = (h.basis_vector(j), h.basis_vector(k));
                        let l = h.mul(&h.mul(&bj, y), &h.antipode(&bk));
                        let rr = h.mul(&h.mul(&h.antipode(&bj), y), &bk);
                        for t in 0..n {
                            left[t] += c * l[t];
                            right[t] += c * rr[t];
                        }
                    }
                }
                if !small.contains(&left) || !small.contains(&right) {
                    r.fail_with("normal", || format!("adjoint action of basis vector {a} moves basis vector {b} out of K_(i+1)"));
                    return Err(failure(step, &r));
                }
            }
        }
        let quotient = factor(h, big, small)?;
        let axioms = verify_hopf_axioms(&quotient);
        if !axioms.valid {
            return Err(failure(step, &axioms));
        }
        let class = FactorClass {
            step,
            dim: quotient.dim(),
            commutative: is_commutative(&quotient),
            cocommutative: is_cocommutative(&quotient),
        };
        if !class.commutative && !class.cocommutative {
            return Err(Error::Structural(format!("step {step}: factor is neither commutative nor cocommutative")));
        }
        factors.push(class);
    }
    Ok(SeriesCertificate { factors })
}

/// The quotient `K / K·L⁺`, on a complement read off the reduced echelon
/// form of the ideal.
pub fn factor(h: &HopfAlgebra, k: &Subspace, l: &Subspace) -> Result<HopfAlgebra> {
    let n = h.dim();
    let plus = augmentation(h, l);
    let gens: Vec<Vec<Q>> = k.basis().iter().flat_map(|x| plus.iter().map(|y| h.mul(x, y))).collect();
    let ideal = Subspace::span(n, &gens);
    let reduced: Vec<Vec<Q>> = k.basis().iter().map(|v| ideal.reduce(v)).collect();
    let complement = Subspace::span(n, &reduced);
    if complement.dim() + ideal.dim() != k.dim() {
        return Err(Error::Internal("complement dimension mismatch".into()));
    }
    let coords = |v: &[Q]| complement.coordinates(&ideal.reduce(v));
    h.induced(complement.basis(), coords, None)
}

/// Certifies upper semisolvability of `H` through a lower series of its dual.
pub fn upper_series_via_dual(h: &HopfAlgebra, dual_chain: &HopfChain) -> Result<SeriesCertificate> {
    if dual_chain.h != dual_hopf(h) {
        return Err(Error::Validation("the chain does not live in the dual of H".into()));
    }
    verify_subnormal_series(dual_chain)
}
