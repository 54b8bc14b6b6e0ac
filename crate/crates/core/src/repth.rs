//! Finite-dimensional modules over Hopf algebras given by structure constants:
//! tensor products through `Δ`, intertwiners, decomposition into simples and
//! the fusion ring of the module category. Also the automorphism grading read
//! off half-braiding block data.

use crate::error::{Error, Result};
use crate::groups::{from_permutation_generators, CayleyGroup};
use crate::hopf::qmat::{self, Subspace};
use crate::hopf::{HopfAlgebra, Q};
use crate::linalg::{gen_eigensplit, kron, nullspace, orthonormal_basis, CMatrix, Tolerance, C64, ONE, ZERO};
use crate::report::Report;
use crate::rings::{grading_report, BasedRing, GradingMap};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

/// Seed of the random generating pair used by [`hom_space`].
const HOM_SEED: u64 = 0x5eed_0fa1;

fn qc(x: Q) -> C64 {
    C64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)
}

/// A left module: `action[i]` is the matrix of basis element `b_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct HModule {
    dim: usize,
    action: Vec<CMatrix>,
}

impl HModule {
    pub fn new(h: &HopfAlgebra, dim: usize, action: Vec<CMatrix>) -> Result<Self> {
        if action.len() != h.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Validation(format!("a module needs {} matrices of size {dim}x{dim}", h.dim())));
        }
        Ok(HModule { dim, action })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &CMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[CMatrix] {
        &self.action
    }

    /// Matrix of `Σ c_i b_i`.
    pub fn act(&self, coeffs: &[C64]) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for (c, m) in coeffs.iter().zip(&self.action) {
            if *c != ZERO {
                out = &out + &m.scale(*c);
            }
        }
        out
    }

    fn act_q(&self, coeffs: &[Q]) -> CMatrix {
        self.act(&coeffs.iter().map(|&c| qc(c)).collect::<Vec<_>>())
    }

    /// `tr ρ(b_i)` for every basis element.
    pub fn character(&self) -> Vec<C64> {
        self.action.iter().map(CMatrix::trace).collect()
    }

    /// The submodule on the invariant subspace spanned by the columns of `w`.
    fn sub(&self, w: &CMatrix, tol: &Tolerance) -> Result<HModule> {
        let q = orthonormal_basis(w, 1e-8);
        let qh = q.adjoint();
        let action: Vec<CMatrix> = self.action.iter().map(|m| &(&qh * m) * &q).collect();
        for (m, a) in self.action.iter().zip(&action) {
            if !(m * &q).approx_eq(&(&q * a), tol.round_eps * (1.0 + m.max_abs())) {
                return Err(Error::Numerical("eigenspace of a commutant element is not a submodule".into()));
            }
        }
        Ok(HModule { dim: q.cols(), action })
    }
}

/// Checks `ρ(b_i)ρ(b_j) = Σ m_ij^k ρ(b_k)` and `ρ(1) = I` within `1e-8` relative.
pub fn verify_module(h: &HopfAlgebra, m: &HModule) -> Report {
    let mut r = Report::with_limit(8);
    if m.action.len() != h.dim() {
        r.fail("shape", "one matrix per basis element is required");
        return r;
    }
    let scale = m.action.iter().map(CMatrix::max_abs).fold(1.0, f64::max);
    let eps = 1e-8 * scale * scale.max(m.dim as f64);
    if !m.act_q(h.unit_vector()).approx_eq(&CMatrix::identity(m.dim), 1e-8 * scale) {
        r.fail("unit", "the unit does not act as the identity");
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let lhs = &m.action[i] * &m.action[j];
            let mut rhs = CMatrix::zeros(m.dim, m.dim);
            for &(k, c) in h.mul_basis(i, j) {
                rhs = &rhs + &m.action[k].scale(qc(c));
            }
            if !lhs.approx_eq(&rhs, eps) {
                r.fail_with("multiplication", || format!("ρ({})ρ({}) differs from ρ of the product", h.label(i), h.label(j)));
                if r.saturated() {
                    return r;
                }
            }
        }
    }
    r
}

/// Left multiplication on `H`.
pub fn regular_module(h: &HopfAlgebra) -> HModule {
    let n = h.dim();
    let action = (0..n)
        .map(|i| {
            let mut m = CMatrix::zeros(n, n);
            for j in 0..n {
                for &(k, c) in h.mul_basis(i, j) {
                    m[(k, j)] += qc(c);
                }
            }
            m
        })
        .collect();
    HModule { dim: n, action }
}

/// The one-dimensional module through the counit.
pub fn trivial_module(h: &HopfAlgebra) -> HModule {
    let action = h.counit_covector().iter().map(|&c| CMatrix::from_fn(1, 1, |_, _| qc(c))).collect();
    HModule { dim: 1, action }
}

/// Restriction to the Hopf subalgebra spanned by `sub`. Returns the subalgebra
/// in its echelon basis together with the restricted module.
pub fn restrict(h: &HopfAlgebra, sub: &[Vec<Q>], m: &HModule) -> Result<(HopfAlgebra, HModule)> {
    let k = closed_subspace(h, sub)?;
    let hk = h.subalgebra(&k)?;
    let action = k.basis().iter().map(|v| m.act_q(v)).collect();
    Ok((hk, HModule { dim: m.dim, action }))
}

fn closed_subspace(h: &HopfAlgebra, sub: &[Vec<Q>]) -> Result<Subspace> {
    if sub.iter().any(|v| v.len() != h.dim()) {
        return Err(Error::Validation("subalgebra vectors do not match the dimension".into()));
    }
    let k = Subspace::span(h.dim(), sub);
    for x in k.basis() {
        for y in k.basis() {
            if !k.contains(&h.mul(x, y)) {
                return Err(Error::Validation("the subspace is not closed under multiplication".into()));
            }
        }
    }
    Ok(k)
}

/// `M ⊗ N` with `ρ(b_i) = Σ c ρ_M(b_j) ⊗ ρ_N(b_k)` over `Δ(b_i)`.
pub fn tensor_modules(h: &HopfAlgebra, m: &HModule, n: &HModule) -> HModule {
    let d = m.dim * n.dim;
    let action = (0..h.dim())
        .map(|i| {
            let mut out = CMatrix::zeros(d, d);
            for &(j, k, c) in h.delta_basis(i) {
                out = &out + &kron(&m.action[j], &n.action[k]).scale(qc(c));
            }
            out
        })
        .collect();
    HModule { dim: d, action }
}

/// The left integral `Λ` with `ε(Λ) = 1`. Fails when `ε` vanishes on the
/// integrals, which happens exactly when `H` is not semisimple.
pub fn normalized_integral(h: &HopfAlgebra) -> Result<Vec<Q>> {
    let n = h.dim();
    let eps = h.counit_covector();
    // b_i Λ - ε(b_i) Λ = 0, one row per (i, k)
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut block = vec![vec![Q::zero(); n]; n];
        for j in 0..n {
            for &(k, c) in h.mul_basis(i, j) {
                block[k][j] += c;
            }
            block[j][j] -= eps[i];
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    let ns = qmat::nullspace(&rows, n);
    let lambda = ns
        .into_iter()
        .find(|v| !h.counit(v).is_zero())
        .ok_or_else(|| Error::Structural("ε vanishes on every integral: H is not semisimple".into()))?;
    let e = h.counit(&lambda);
    Ok(lambda.into_iter().map(|c| c / e).collect())
}

/// `Σ Λ₁ ⊗ S(Λ₂)` as pairs of coefficient vectors.
fn averaging_terms(h: &HopfAlgebra) -> Result<Vec<(Vec<C64>, Vec<C64>)>> {
    let lambda = normalized_integral(h)?;
    let n = h.dim();
    let d = h.coproduct(&lambda);
    let mut terms = Vec::new();
    for j in 0..n {
        let mut right = vec![Q::zero(); n];
        let mut any = false;
        for k in 0..n {
            let c = d[j * n + k];
            if !c.is_zero() {
                any = true;
                for &(t, s) in h.antipode_basis(k) {
                    right[t] += c * s;
                }
            }
        }
        if any {
            let left: Vec<C64> = (0..n).map(|t| if t == j { ONE } else { ZERO }).collect();
            terms.push((left, right.into_iter().map(qc).collect()));
        }
    }
    Ok(terms)
}

/// `dim Hom_H(M, N)` as the trace of the averaging projection on `Hom(M, N)`.
/// Requires semisimple `H`; serves as an independent check on [`hom_space`].
pub fn hom_dim_by_integral(h: &HopfAlgebra, m: &HModule, n: &HModule, tol: &Tolerance) -> Result<usize> {
    let mut total = ZERO;
    for (l, r) in averaging_terms(h)? {
        total += n.act(&l).trace() * m.act(&r).trace();
    }
    gate(total, tol)
}

fn gate(x: C64, tol: &Tolerance) -> Result<usize> {
    let r = x.re.round();
    if (x - C64::new(r, 0.0)).norm() > tol.round_eps || r < 0.0 {
        return Err(Error::Numerical(format!("value {x} is not a non-negative integer within {}", tol.round_eps)));
    }
    Ok(r as usize)
}

/// Two random elements that generate `H` as an algebra, checked by closing
/// `{1}` under left multiplication by both in the regular representation.
/// Falls back to the full basis when no pair is found.
fn algebra_generators(h: &HopfAlgebra) -> Vec<Vec<C64>> {
    let n = h.dim();
    let reg = regular_module(h);
    let mut rng = ChaCha8Rng::seed_from_u64(HOM_SEED);
    for _ in 0..8 {
        let pair: Vec<Vec<C64>> =
            (0..2).map(|_| (0..n).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()).collect();
        let mats: Vec<CMatrix> = pair.iter().map(|c| reg.act(c)).collect();
        if krylov_dim(&mats, &h.unit_vector().iter().map(|&c| qc(c)).collect::<Vec<_>>()) == n {
            return pair;
        }
    }
    (0..n).map(|i| (0..n).map(|j| if i == j { ONE } else { ZERO }).collect()).collect()
}

fn krylov_dim(mats: &[CMatrix], start: &[C64]) -> usize {
    let norm = |v: &[C64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mut basis: Vec<Vec<C64>> = Vec::new();
    let mut queue = vec![start.to_vec()];
    while let Some(mut v) = queue.pop() {
        let before = norm(&v);
        if before == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for q in &basis {
                let p: C64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= p * y;
                }
            }
        }
        let after = norm(&v);
        if after <= 1e-9 * before {
            continue;
        }
        let v: Vec<C64> = v.into_iter().map(|z| z / after).collect();
        for m in mats {
            queue.push(m.mul_vec(&v));
        }
        basis.push(v);
    }
    basis.len()
}

/// Basis of `Hom_H(M, N)` as `dim N × dim M` matrices: the nullspace of the
/// intertwiner equations for a generating set of `H`.
pub fn hom_basis(h: &HopfAlgebra, m: &HModule, n: &HModule, tol: &Tolerance) -> Result<Vec<CMatrix>> {
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let gens = algebra_generators(h);
    let unknowns = dn * dm;
    let mut sys = CMatrix::zeros(gens.len() * unknowns, unknowns);
    let mut scale: f64 = 0.0;
    for (gi, a) in gens.iter().enumerate() {
        let (rm, rn) = (m.act(a), n.act(a));
        scale = scale.max(rm.max_abs()).max(rn.max_abs());
        let base = gi * unknowns;
        for i in 0..dn {
            for j in 0..dm {
                let col = i * dm + j;
                for r in 0..dn {
                    let v = rn[(r, i)];
                    if v != ZERO {
                        sys[(base + r * dm + j, col)] += v;
                    }
                }
                for c in 0..dm {
                    let v = rm[(j, c)];
                    if v != ZERO {
                        sys[(base + i * dm + c, col)] -= v;
                    }
                }
            }
        }
    }
    // entries at round-off level relative to the actions are exact zeros
    let floor = 1e-3 * tol.pivot_eps * scale;
    let sys = CMatrix::from_fn(sys.rows(), sys.cols(), |i, j| if sys[(i, j)].norm() < floor { ZERO } else { sys[(i, j)] });
    let ns = nullspace(&sys, tol)?;
    Ok((0..ns.cols()).map(|k| CMatrix::from_fn(dn, dm, |i, j| ns[(i * dm + j, k)])).collect())
}

pub fn hom_space(h: &HopfAlgebra, m: &HModule, n: &HModule, tol: &Tolerance) -> Result<usize> {
    Ok(hom_basis(h, m, n, tol)?.len())
}

fn character_key(m: &HModule, tol: &Tolerance) -> Vec<(i64, i64)> {
    let q = |v: f64| (v / tol.round_eps).round() as i64;
    m.character().iter().map(|c| (-q(c.re), q(c.im))).collect()
}

/// Canonical order on simples: the trivial module first, then by dimension
/// and character.
fn canonical_cmp(h: &HopfAlgebra, a: &HModule, b: &HModule, tol: &Tolerance) -> Ordering {
    let eps: Vec<C64> = h.counit_covector().iter().map(|&c| qc(c)).collect();
    let trivial = |m: &HModule| m.dim == 1 && m.character().iter().zip(&eps).all(|(x, y)| (x - y).norm() < tol.round_eps);
    trivial(b)
        .cmp(&trivial(a))
        .then(a.dim.cmp(&b.dim))
        .then_with(|| character_key(a, tol).cmp(&character_key(b, tol)))
}

fn split(m: &HModule, terms: &[(Vec<C64>, Vec<C64>)], rng: &mut ChaCha8Rng, tol: &Tolerance) -> Result<Vec<HModule>> {
    let mut commutant = ZERO;
    for (l, r) in terms {
        commutant += m.act(l).trace() * m.act(r).trace();
    }
    if gate(commutant, tol)? <= 1 {
        return Ok(vec![m.clone()]);
    }
    let lefts: Vec<CMatrix> = terms.iter().map(|(l, _)| m.act(l)).collect();
    let rights: Vec<CMatrix> = terms.iter().map(|(_, r)| m.act(r)).collect();
    for _ in 0..32 {
        let x = CMatrix::from_fn(m.dim, m.dim, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let mut t = CMatrix::zeros(m.dim, m.dim);
        for (l, r) in lefts.iter().zip(&rights) {
            t = &t + &(&(l * &x) * r);
        }
        let blocks = match gen_eigensplit(&t, tol) {
            Ok(b) if b.len() >= 2 => b,
            Ok(_) | Err(Error::Unsplittable) | Err(Error::DegenerateRank { .. }) => continue,
            Err(e) => return Err(e),
        };
        let mut out = Vec::new();
        for b in blocks {
            out.extend(split(&m.sub(&b.basis, tol)?, terms, rng, tol)?);
        }
        return Ok(out);
    }
    Err(Error::Numerical("commutant element did not split after 32 reseeds".into()))
}

/// Simple constituents of `M` with multiplicities, in canonical order. Each
/// simple is checked to have a one-dimensional commutant and the dimensions
/// are checked to add up.
pub fn decompose_module(h: &HopfAlgebra, m: &HModule, seed: u64, tol: &Tolerance) -> Result<Vec<(HModule, usize)>> {
    let terms = averaging_terms(h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pieces = split(m, &terms, &mut rng, tol)?;
    let mut classes: Vec<HModule> = Vec::new();
    for p in pieces {
        if hom_space(h, &p, &p, tol)? != 1 {
            return Err(Error::Numerical(format!("a summand of dimension {} is not simple", p.dim)));
        }
        let mut known = false;
        for c in classes.iter().filter(|c| c.dim == p.dim) {
            if hom_space(h, c, &p, tol)? > 0 {
                known = true;
                break;
            }
        }
        if !known {
            classes.push(p);
        }
    }
    classes.sort_by(|a, b| canonical_cmp(h, a, b, tol));
    let mut out = Vec::new();
    let mut total = 0;
    for c in classes {
        let k = hom_space(h, &c, m, tol)?;
        total += k * c.dim;
        out.push((c, k));
    }
    if total != m.dim {
        return Err(Error::Numerical(format!("summands cover dimension {total} of {}", m.dim)));
    }
    Ok(out)
}

/// Simple modules, read off the regular module, in canonical order.
pub fn simple_modules(h: &HopfAlgebra, seed: u64, tol: &Tolerance) -> Result<Vec<HModule>> {
    let parts = decompose_module(h, &regular_module(h), seed, tol)?;
    let sq: usize = parts.iter().map(|(p, _)| p.dim * p.dim).sum();
    if sq != h.dim() {
        return Err(Error::Numerical(format!("Σ dim² = {sq} but dim H = {}", h.dim())));
    }
    Ok(parts.into_iter().map(|(p, _)| p).collect())
}

/// The fusion ring of `H`-mod with its simples.
pub fn fusion_ring_with_simples(h: &HopfAlgebra, seed: u64, tol: &Tolerance) -> Result<(BasedRing, Vec<HModule>)> {
    let simples = simple_modules(h, seed, tol)?;
    let n = simples.len();
    let mut entries = Vec::new();
    for (i, a) in simples.iter().enumerate() {
        for (j, b) in simples.iter().enumerate() {
            let t = tensor_modules(h, a, b);
            let mut covered = 0;
            for (k, c) in simples.iter().enumerate() {
                let mult = hom_space(h, c, &t, tol)?;
                if mult > 0 {
                    covered += mult * c.dim;
                    entries.push((i, j, k, mult as u32));
                }
            }
            if covered != t.dim {
                return Err(Error::Numerical(format!("simples {i}⊗{j}: constituents cover {covered} of {}", t.dim)));
            }
        }
    }
    let mut dual = vec![Vec::new(); n];
    for &(i, j, k, m) in &entries {
        if k == 0 && m == 1 {
            dual[i].push(j);
        }
    }
    let dual = dual
        .into_iter()
        .enumerate()
        .map(|(i, c)| match c.as_slice() {
            [d] => Ok(*d),
            _ => Err(Error::Structural(format!("simple {i} has {} dual candidates", c.len()))),
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = simples.iter().enumerate().map(|(i, s)| format!("V{i}:{}", s.dim)).collect();
    Ok((BasedRing::new(labels, 0, dual, &entries)?, simples))
}

pub fn fusion_ring_of_hopf(h: &HopfAlgebra, seed: u64, tol: &Tolerance) -> Result<BasedRing> {
    Ok(fusion_ring_with_simples(h, seed, tol)?.0)
}

/// Indices of the simples whose restriction to the subalgebra spanned by
/// `sub` is a multiple of the trivial module.
pub fn kernel_simples(h: &HopfAlgebra, sub: &[Vec<Q>], seed: u64, tol: &Tolerance) -> Result<Vec<usize>> {
    let k = closed_subspace(h, sub)?;
    let simples = simple_modules(h, seed, tol)?;
    Ok(simples
        .iter()
        .enumerate()
        .filter(|(_, s)| {
            k.basis().iter().all(|v| s.act_q(v).approx_eq(&CMatrix::identity(s.dim).scale(qc(h.counit(v))), tol.round_eps))
        })
        .map(|(i, _)| i)
        .collect())
}

/// Half-braiding block data of a fusion category containing `vect_G`:
/// `invertible_blocks[g]` is the simple `X_g`, and `sigma_blocks[x][g] = h`
/// records that `σ_X` maps `X_g ⊗ X` into `X ⊗ X_h`.
#[derive(Debug, Clone)]
pub struct AutGradingInput {
    pub ring: BasedRing,
    pub invertible_blocks: Vec<usize>,
    pub sigma_blocks: Vec<Vec<usize>>,
}

/// The grading `∂` of the simples by automorphisms of `G`.
#[derive(Debug, Clone)]
pub struct AutGrading {
    /// `∂(X)` as a permutation of the elements of `G`.
    pub automorphisms: Vec<Vec<usize>>,
    /// Degrees in the group of the distinct `∂(X)`, multiplied so that
    /// `∂(X ⊗ Y) = ∂(X)·∂(Y)`.
    pub grading: GradingMap,
    /// Simples with `∂(X) = id`.
    pub neutral: Vec<usize>,
}

pub fn aut_grading(input: &AutGradingInput, g: &CayleyGroup) -> Result<AutGrading> {
    let n = input.ring.rank();
    let ng = g.order();
    if input.invertible_blocks.len() != ng || input.invertible_blocks.iter().any(|&x| x >= n) {
        return Err(Error::Validation("invertible_blocks must list one simple per group element".into()));
    }
    for a in g.elements() {
        for b in g.elements() {
            let want = [(input.invertible_blocks[g.mul(a, b)], 1)];
            if input.ring.product(input.invertible_blocks[a], input.invertible_blocks[b]) != want {
                return Err(Error::Validation(format!("X_{a} ⊗ X_{b} is not X_(ab)")));
            }
        }
    }
    if input.sigma_blocks.len() != n {
        return Err(Error::Validation("sigma_blocks must have one table per simple".into()));
    }
    for (x, t) in input.sigma_blocks.iter().enumerate() {
        let mut seen = vec![false; ng];
        if t.len() != ng || t.iter().any(|&h| h >= ng || std::mem::replace(&mut seen[h], true)) {
            return Err(Error::Validation(format!("invalid half-braiding data: block support of σ for {} is not a bijection", input.ring.label(x))));
        }
        for a in g.elements() {
            for b in g.elements() {
                if t[g.mul(a, b)] != g.mul(t[a], t[b]) {
                    return Err(Error::Structural(format!(
                        "data inconsistency: ∂({}) is not an automorphism at ({a},{b})",
                        input.ring.label(x)
                    )));
                }
            }
        }
    }
    // σ_{X⊗Y} = (id⊗σ_Y)(σ_X⊗id) gives ∂(X⊗Y) = ∂(Y)∘∂(X): take the opposite group
    let image = from_permutation_generators(ng, &input.sigma_blocks)?;
    let group = image.opposite();
    let deg = input
        .sigma_blocks
        .iter()
        .map(|t| image.find_perm(t).ok_or_else(|| Error::Internal("automorphism missing from its closure".into())))
        .collect::<Result<Vec<_>>>()?;
    let grading = GradingMap { group, deg };
    let report = grading_report(&input.ring, &grading);
    if !report.valid {
        return Err(Error::Structural(format!("∂ is not a grading: {}", report.witnesses[0])));
    }
    let id: Vec<usize> = g.elements().collect();
    let neutral = (0..n).filter(|&x| input.sigma_blocks[x] == id).collect();
    Ok(AutGrading { automorphisms: input.sigma_blocks.clone(), grading, neutral })
}

/// The skeletal model of `vect_G` as a central algebra over itself:
/// `σ_{X_h}` sends `X_g ⊗ X_h = X_{gh}` to `X_h ⊗ X_{h⁻¹gh}`.
pub fn vect_group_model(g: &CayleyGroup) -> AutGradingInput {
    let ring = crate::rings::group_ring(g);
    let sigma_blocks = g.elements().map(|h| g.elements().map(|x| g.mul(g.inv(h), g.mul(x, h))).collect()).collect();
    AutGradingInput { ring, invertible_blocks: g.elements().collect(), sigma_blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{center, subgroup_closure};
    use crate::hopf::{dual_hopf, group_algebra, kac_bicrossed, kac_index, q};
    use crate::matched::{s3_instance, trivial_c2c2_instance};
    use crate::rings::{based_ring_isomorphism, group_ring, tests::rep_s3, verify_based_ring};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn s3() -> (CayleyGroup, HopfAlgebra) {
        let g = CayleyGroup::symmetric(3);
        let h = group_algebra(&g);
        (g, h)
    }

    #[test]
    fn regular_and_trivial_modules() {
        let h = group_algebra(&CayleyGroup::cyclic(2));
        let reg = regular_module(&h);
        assert_eq!(reg.dim(), 2);
        assert!(verify_module(&h, &reg).valid);
        assert_eq!(hom_space(&h, &reg, &trivial_module(&h), &tol()).unwrap(), 1);
        let (_, h) = s3();
        assert!(verify_module(&h, &regular_module(&h)).valid);
    }

    #[test]
    fn broken_module_is_reported() {
        let h = group_algebra(&CayleyGroup::cyclic(2));
        let mut m = regular_module(&h);
        m.action[1] = CMatrix::identity(2).scale(C64::new(2.0, 0.0));
        assert!(verify_module(&h, &m).has_check("multiplication"));
    }

    #[test]
    fn integral_of_group_algebra_is_the_average() {
        let (_, h) = s3();
        let l = normalized_integral(&h).unwrap();
        assert!(l.iter().all(|&c| c == Q::new(1, 6)));
    }

    #[test]
    fn hom_methods_agree() {
        let (_, h) = s3();
        let reg = regular_module(&h);
        let t = trivial_module(&h);
        for (a, b) in [(&reg, &reg), (&reg, &t), (&t, &reg), (&t, &t)] {
            assert_eq!(hom_space(&h, a, b, &tol()).unwrap(), hom_dim_by_integral(&h, a, b, &tol()).unwrap());
        }
        assert_eq!(hom_space(&h, &reg, &reg, &tol()).unwrap(), 6);
    }

    #[test]
    fn s3_regular_decomposition() {
        let (_, h) = s3();
        let parts = decompose_module(&h, &regular_module(&h), 0, &tol()).unwrap();
        let shape: Vec<(usize, usize)> = parts.iter().map(|(p, m)| (p.dim(), *m)).collect();
        assert_eq!(shape, vec![(1, 1), (1, 1), (2, 2)]);
    }

    #[test]
    fn decomposition_is_seed_stable() {
        let (_, h) = s3();
        let reg = regular_module(&h);
        let keys = |seed| {
            decompose_module(&h, &reg, seed, &tol())
                .unwrap()
                .iter()
                .map(|(p, m)| (character_key(p, &tol()), *m))
                .collect::<Vec<_>>()
        };
        assert_eq!(keys(0), keys(1));
        assert_eq!(keys(0), keys(99));
    }

    #[test]
    fn restriction_to_c3() {
        let (g, h) = s3();
        let c3 = subgroup_closure(&g, &[g.find_perm(&[1, 2, 0]).unwrap()]);
        let sub: Vec<Vec<Q>> = c3.members.iter().map(|&x| h.basis_vector(x)).collect();
        let (hk, m) = restrict(&h, &sub, &regular_module(&h)).unwrap();
        assert_eq!(m.dim(), 6);
        assert!(verify_module(&hk, &m).valid);
        let parts = decompose_module(&hk, &m, 0, &tol()).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|(p, k)| p.dim() == 1 && *k == 2));
        let (_, unit_only) = restrict(&h, &[h.unit_vector().to_vec()], &regular_module(&h)).unwrap();
        assert!(unit_only.action(0).approx_eq(&CMatrix::identity(6), 1e-12));
    }

    #[test]
    fn restriction_rejects_non_subalgebra() {
        let (g, h) = s3();
        let t = g.find_perm(&[1, 0, 2]).unwrap();
        let mut v = vec![q(0); 6];
        v[t] = q(1);
        assert!(restrict(&h, &[v], &regular_module(&h)).is_err());
    }

    #[test]
    fn tensor_products() {
        let (_, h) = s3();
        let simples = simple_modules(&h, 0, &tol()).unwrap();
        let v = &simples[2];
        let vv = tensor_modules(&h, v, v);
        assert!(verify_module(&h, &vv).valid);
        let parts = decompose_module(&h, &vv, 0, &tol()).unwrap();
        assert_eq!(parts.iter().map(|(p, m)| (p.dim(), *m)).collect::<Vec<_>>(), vec![(1, 1), (1, 1), (2, 1)]);
        let t = tensor_modules(&h, &trivial_module(&h), v);
        for s in &simples {
            assert_eq!(hom_space(&h, s, &t, &tol()).unwrap(), hom_space(&h, s, v, &tol()).unwrap());
        }
    }

    #[test]
    fn fusion_rings_of_small_algebras() {
        let c3 = CayleyGroup::cyclic(3);
        let r = fusion_ring_of_hopf(&group_algebra(&c3), 0, &tol()).unwrap();
        assert!(based_ring_isomorphism(&r, &group_ring(&c3), 1000).unwrap().is_some());
        let (g, h) = s3();
        let r = fusion_ring_of_hopf(&h, 0, &tol()).unwrap();
        assert!(verify_based_ring(&r).valid);
        assert!(based_ring_isomorphism(&r, &rep_s3(), 1000).unwrap().is_some());
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(r.product(x, y), r.product(y, x));
            }
        }
        // k^G has one-dimensional simples indexed by G
        let r = fusion_ring_of_hopf(&dual_hopf(&h), 0, &tol()).unwrap();
        assert!(based_ring_isomorphism(&r, &group_ring(&g), 1000).unwrap().is_some());
    }

    #[test]
    fn s3_kac_fusion_ring() {
        let h = kac_bicrossed(&s3_instance().pair).unwrap();
        let r = fusion_ring_of_hopf(&h, 0, &tol()).unwrap();
        assert!(based_ring_isomorphism(&r, &rep_s3(), 1000).unwrap().is_some());
        let c2c2 = kac_bicrossed(&trivial_c2c2_instance().pair).unwrap();
        let r = fusion_ring_of_hopf(&c2c2, 0, &tol()).unwrap();
        assert_eq!(r.rank(), 4);
        assert!(r.is_pointed());
    }

    #[test]
    fn frobenius_reciprocity() {
        let (_, h) = s3();
        let r = fusion_ring_of_hopf(&h, 0, &tol()).unwrap();
        for m in 0..3 {
            for n in 0..3 {
                for p in 0..3 {
                    assert_eq!(r.n(m, n, p), r.n(r.dual(m), p, n));
                }
            }
        }
    }

    #[test]
    fn kernel_simples_examples() {
        let (g, h) = s3();
        let c3 = subgroup_closure(&g, &[g.find_perm(&[1, 2, 0]).unwrap()]);
        let sub: Vec<Vec<Q>> = c3.members.iter().map(|&x| h.basis_vector(x)).collect();
        assert_eq!(kernel_simples(&h, &sub, 0, &tol()).unwrap(), vec![0, 1]);
        assert_eq!(kernel_simples(&h, &[h.unit_vector().to_vec()], 0, &tol()).unwrap(), vec![0, 1, 2]);

        let mp = s3_instance().pair;
        let kac = kac_bicrossed(&mp).unwrap();
        let kg: Vec<Vec<Q>> = mp
            .g()
            .elements()
            .map(|x| {
                let mut v = vec![q(0); 6];
                for s in mp.gamma().elements() {
                    v[kac_index(&mp, s, x)] = q(1);
                }
                v
            })
            .collect();
        let simples = simple_modules(&kac, 0, &tol()).unwrap();
        // only the trivial simple is trivial on the group-likes 1#g
        assert_eq!(kernel_simples(&kac, &kg, 0, &tol()).unwrap(), vec![0]);
        // trivial on k^Γ: the image of Rep G, total FPdim² = |G|
        let kgamma: Vec<Vec<Q>> = mp.gamma().elements().map(|s| kac.basis_vector(kac_index(&mp, s, mp.g().identity()))).collect();
        let ker = kernel_simples(&kac, &kgamma, 0, &tol()).unwrap();
        let fp: usize = ker.iter().map(|&i| simples[i].dim().pow(2)).sum();
        assert_eq!(fp, mp.g().order());
    }

    #[test]
    fn vect_s3_aut_grading() {
        let g = CayleyGroup::symmetric(3);
        let out = aut_grading(&vect_group_model(&g), &g).unwrap();
        for h in g.elements() {
            for x in g.elements() {
                assert_eq!(out.automorphisms[h][x], g.mul(g.inv(h), g.mul(x, h)));
            }
        }
        assert_eq!(out.neutral, center(&g).members);
        assert_eq!(out.grading.group.order(), 6);
    }

    #[test]
    fn abelian_and_diagonal_cases() {
        let c4 = CayleyGroup::cyclic(4);
        let out = aut_grading(&vect_group_model(&c4), &c4).unwrap();
        assert_eq!(out.neutral, vec![0, 1, 2, 3]);
        assert_eq!(out.grading.group.order(), 1);
        assert_eq!(center(&c4).order(), 4);
    }

    #[test]
    fn invalid_sigma_tables() {
        let g = CayleyGroup::symmetric(3);
        let mut input = vect_group_model(&g);
        input.sigma_blocks[1][0] = input.sigma_blocks[1][1];
        assert!(matches!(aut_grading(&input, &g), Err(Error::Validation(_))));
        let mut input = vect_group_model(&g);
        input.sigma_blocks[1].swap(0, 1);
        assert!(matches!(aut_grading(&input, &g), Err(Error::Structural(_))));
    }
}
