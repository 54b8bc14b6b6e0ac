//! Finite-dimensional Hopf algebras as exact structure tensors over the rationals.
//!
//! The Kac bicrossed product `k^Γ # kG` of a matched pair uses the basis
//! `e_s # g` at index `s·|G| + g` and the structure maps
//!
//! ```text
//! (e_s#g)(e_t#h) = [s◁g = t] e_s#gh          1 = Σ_s e_s#e
//! Δ(e_s#g) = Σ_{ab=s} (e_a#(b▷g)) ⊗ (e_b#g)  ε(e_s#g) = [s = e]
//! S(e_s#g) = e_{(s◁g)⁻¹} # (s▷g)⁻¹
//! ```
//!
//! Every matched-pair identity is forced by one of the bialgebra axioms, so
//! the axiom checker decides matchedness on its own.

pub mod braiding;
pub mod qmat;
pub mod series;

pub use qmat::{q, Q};

use crate::error::{Error, Result};
use crate::groups::CayleyGroup;
use crate::matched::{verify_matched_pair_limited, MatchedPair};
use crate::report::Report;
use num_traits::{One, Zero};
use qmat::Subspace;
use std::collections::BTreeMap;

/// Sparse structure tensors of a Hopf algebra on basis `b_0, …, b_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `m[i * dim + j]`: `b_i b_j = Σ c b_k` as `(k, c)`.
    m: Vec<Vec<(usize, Q)>>,
    u: Vec<Q>,
    /// `delta[i]`: `Δ(b_i) = Σ c b_j ⊗ b_k` as `(j, k, c)`.
    delta: Vec<Vec<(usize, usize, Q)>>,
    eps: Vec<Q>,
    /// `s[i]`: `S(b_i) = Σ c b_k` as `(k, c)`.
    s: Vec<Vec<(usize, Q)>>,
}

fn collect<K: Ord>(terms: impl IntoIterator<Item = (K, Q)>) -> Vec<(K, Q)> {
    let mut acc: BTreeMap<K, Q> = BTreeMap::new();
    for (k, c) in terms {
        *acc.entry(k).or_insert_with(Q::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn dense(n: usize, sparse: &[(usize, Q)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for &(i, c) in sparse {
        v[i] += c;
    }
    v
}

impl HopfAlgebra {
    /// Builds a Hopf algebra from sparse tensor entries; repeated entries add up.
    /// Only shapes are checked; [`verify_hopf_axioms`] checks the axioms.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        dim: usize,
        labels: Option<Vec<String>>,
        m: &[(usize, usize, usize, Q)],
        u: &[(usize, Q)],
        delta: &[(usize, usize, usize, Q)],
        eps: &[(usize, Q)],
        s: &[(usize, usize, Q)],
    ) -> Result<Self> {
        let bad = |what: &str| Error::Validation(format!("{what} entry out of range for dimension {dim}"));
        if dim == 0 {
            return Err(Error::Validation("a Hopf algebra has positive dimension".into()));
        }
        let labels = labels.unwrap_or_else(|| (0..dim).map(|i| format!("b{i}")).collect());
        if labels.len() != dim {
            return Err(Error::Validation("label count does not match the dimension".into()));
        }
        let mut mm = vec![Vec::new(); dim * dim];
        for &(i, j, k, c) in m {
            if i >= dim || j >= dim || k >= dim {
                return Err(bad("m"));
            }
            mm[i * dim + j].push((k, c));
        }
        let mut dd = vec![Vec::new(); dim];
        for &(i, j, k, c) in delta {
            if i >= dim || j >= dim || k >= dim {
                return Err(bad("delta"));
            }
            dd[i].push(((j, k), c));
        }
        let mut ss = vec![Vec::new(); dim];
        for &(i, k, c) in s {
            if i >= dim || k >= dim {
                return Err(bad("S"));
            }
            ss[i].push((k, c));
        }
        if u.iter().chain(eps).any(|&(i, _)| i >= dim) {
            return Err(bad("unit or counit"));
        }
        Ok(HopfAlgebra {
            dim,
            labels,
            m: mm.into_iter().map(collect).collect(),
            u: dense(dim, u),
            delta: dd.into_iter().map(|t| collect(t).into_iter().map(|((j, k), c)| (j, k, c)).collect()).collect(),
            eps: dense(dim, eps),
            s: ss.into_iter().map(collect).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `b_i b_j` as sparse `(k, c)`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.m[i * self.dim + j]
    }

    pub fn delta_basis(&self, i: usize) -> &[(usize, usize, Q)] {
        &self.delta[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &[(usize, Q)] {
        &self.s[i]
    }

    pub fn unit_vector(&self) -> &[Q] {
        &self.u
    }

    pub fn counit_covector(&self) -> &[Q] {
        &self.eps
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for &(k, c) in self.mul_basis(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    /// `Δ(x)` as a dense `dim × dim` coefficient vector, index `j·dim + k`.
    pub fn coproduct(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim * self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for &(j, k, c) in &self.delta[i] {
                out[j * self.dim + k] += a * c;
            }
        }
        out
    }

    pub fn antipode(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for &(k, c) in &self.s[i] {
                out[k] += a * c;
            }
        }
        out
    }

    pub fn counit(&self, x: &[Q]) -> Q {
        x.iter().zip(&self.eps).map(|(a, b)| a * b).sum()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        qmat::unit_vector(self.dim, i)
    }

    /// The structure induced on a subspace or quotient: `basis` are
    /// representatives and `coords` maps an element of the relevant space to
    /// coordinates in that basis.
    pub fn induced(&self, basis: &[Vec<Q>], coords: impl Fn(&[Q]) -> Vec<Q>, labels: Option<Vec<String>>) -> Result<HopfAlgebra> {
        let r = basis.len();
        let n = self.dim;
        let mut m = Vec::new();
        let mut delta = Vec::new();
        let mut s = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let c = coords(&self.mul(&basis[a], &basis[b]));
                m.extend(c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (a, b, k, v)));
            }
            let d = self.coproduct(&basis[a]);
            // first tensor factor: coordinates of each column
            let mut half = vec![vec![Q::zero(); n]; r];
            for k in 0..n {
                let col: Vec<Q> = (0..n).map(|j| d[j * n + k]).collect();
                if col.iter().all(Zero::is_zero) {
                    continue;
                }
                for (i, v) in coords(&col).into_iter().enumerate() {
                    half[i][k] = v;
                }
            }
            for (i, row) in half.iter().enumerate() {
                if row.iter().all(Zero::is_zero) {
                    continue;
                }
                for (j, v) in coords(row).into_iter().enumerate() {
                    if !v.is_zero() {
                        delta.push((a, i, j, v));
                    }
                }
            }
            let sa = coords(&self.antipode(&basis[a]));
            s.extend(sa.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (a, k, v)));
        }
        let u: Vec<(usize, Q)> = coords(&self.u).into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        let eps: Vec<(usize, Q)> = (0..r).map(|a| (a, self.counit(&basis[a]))).filter(|(_, v)| !v.is_zero()).collect();
        HopfAlgebra::new(r, labels, &m, &u, &delta, &eps, &s)
    }

    /// The Hopf subalgebra on an invariant subspace, in its echelon basis.
    pub fn subalgebra(&self, k: &Subspace) -> Result<HopfAlgebra> {
        self.induced(k.basis(), |v| k.coordinates(v), None)
    }
}

fn limited(limit: Option<usize>) -> Report {
    limit.map_or_else(Report::new, Report::with_limit)
}

/// Checks associativity, unit, coassociativity, counit, bialgebra
/// compatibility and the antipode axiom, all exactly.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> Report {
    verify_hopf_axioms_limited(h, Some(32))
}

pub fn verify_hopf_axioms_limited(h: &HopfAlgebra, limit: Option<usize>) -> Report {
    let mut r = limited(limit);
    let n = h.dim;
    let u_terms: Vec<(usize, Q)> = h.u.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();

    for i in 0..n {
        let left = collect(u_terms.iter().flat_map(|&(a, c)| h.mul_basis(a, i).iter().map(move |&(k, d)| (k, c * d))));
        let right = collect(u_terms.iter().flat_map(|&(a, c)| h.mul_basis(i, a).iter().map(move |&(k, d)| (k, c * d))));
        let expect = vec![(i, Q::one())];
        if left != expect || right != expect {
            r.fail_with("unit", || format!("1·{0} or {0}·1 differs from {0}", h.labels[i]));
        }
    }
    if r.saturated() {
        return r;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = collect(h.mul_basis(i, j).iter().flat_map(|&(a, c)| h.mul_basis(a, k).iter().map(move |&(b, d)| (b, c * d))));
                let right = collect(h.mul_basis(j, k).iter().flat_map(|&(a, c)| h.mul_basis(i, a).iter().map(move |&(b, d)| (b, c * d))));
                if left != right {
                    r.fail_with("associativity", || format!("(b{i}·b{j})·b{k} != b{i}·(b{j}·b{k})"));
                    if r.saturated() {
                        return r;
                    }
                }
            }
        }
    }
    for i in 0..n {
        let d = &h.delta[i];
        let left = collect(d.iter().flat_map(|&(a, b, c)| h.delta[a].iter().map(move |&(x, y, e)| ((x, y, b), c * e))));
        let right = collect(d.iter().flat_map(|&(a, b, c)| h.delta[b].iter().map(move |&(x, y, e)| ((a, x, y), c * e))));
        if left != right {
            r.fail_with("coassociativity", || format!("(Δ⊗id)Δ(b{i}) != (id⊗Δ)Δ(b{i})"));
        }
        let expect = vec![(i, Q::one())];
        let left = collect(d.iter().map(|&(a, b, c)| (b, c * h.eps[a])));
        let right = collect(d.iter().map(|&(a, b, c)| (a, c * h.eps[b])));
        if left != expect || right != expect {
            r.fail_with("counit", || format!("(ε⊗id)Δ(b{i}) or (id⊗ε)Δ(b{i}) differs from b{i}"));
        }
        if r.saturated() {
            return r;
        }
    }
    // Δ(1) = 1⊗1 and ε(1) = 1
    let d1 = collect(u_terms.iter().flat_map(|&(a, c)| h.delta[a].iter().map(move |&(x, y, e)| ((x, y), c * e))));
    let uu = collect(u_terms.iter().flat_map(|&(a, c)| u_terms.iter().map(move |&(b, e)| ((a, b), c * e))));
    if d1 != uu {
        r.fail("bialgebra", "Δ(1) != 1⊗1");
    }
    if h.counit(&h.u) != Q::one() {
        r.fail("bialgebra", "ε(1) != 1");
    }
    for i in 0..n {
        for j in 0..n {
            let prod = h.mul_basis(i, j);
            let eps_prod: Q = prod.iter().map(|&(k, c)| c * h.eps[k]).sum();
            if eps_prod != h.eps[i] * h.eps[j] {
                r.fail_with("bialgebra", || format!("ε(b{i}b{j}) != ε(b{i})ε(b{j})"));
            }
            let left = collect(prod.iter().flat_map(|&(k, c)| h.delta[k].iter().map(move |&(x, y, e)| ((x, y), c * e))));
            let mut terms = Vec::new();
            for &(a1, a2, c) in &h.delta[i] {
                for &(b1, b2, e) in &h.delta[j] {
                    for &(x, f) in h.mul_basis(a1, b1) {
                        for &(y, g) in h.mul_basis(a2, b2) {
                            terms.push(((x, y), c * e * f * g));
                        }
                    }
                }
            }
            if left != collect(terms) {
                r.fail_with("bialgebra", || format!("Δ(b{i}b{j}) != Δ(b{i})Δ(b{j})"));
            }
            if r.saturated() {
                return r;
            }
        }
    }
    for i in 0..n {
        let expect = collect(u_terms.iter().map(|&(a, c)| (a, c * h.eps[i])));
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &(a, b, c) in &h.delta[i] {
            for &(sa, d) in &h.s[a] {
                left.extend(h.mul_basis(sa, b).iter().map(|&(k, e)| (k, c * d * e)));
            }
            for &(sb, d) in &h.s[b] {
                right.extend(h.mul_basis(a, sb).iter().map(|&(k, e)| (k, c * d * e)));
            }
        }
        if collect(left) != expect || collect(right) != expect {
            r.fail_with("antipode", || format!("m(S⊗id)Δ(b{i}) or m(id⊗S)Δ(b{i}) differs from ε(b{i})1"));
            if r.saturated() {
                return r;
            }
        }
    }
    r
}

/// `kG`: group-like basis, `S(g) = g⁻¹`.
pub fn group_algebra(g: &CayleyGroup) -> HopfAlgebra {
    let n = g.order();
    let m: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, g.mul(a, b), Q::one())).collect();
    let delta: Vec<_> = (0..n).map(|a| (a, a, a, Q::one())).collect();
    let eps: Vec<_> = (0..n).map(|a| (a, Q::one())).collect();
    let s: Vec<_> = (0..n).map(|a| (a, g.inv(a), Q::one())).collect();
    HopfAlgebra::new(n, Some(g.labels().to_vec()), &m, &[(g.identity(), Q::one())], &delta, &eps, &s)
        .expect("group algebra has a valid shape")
}

/// The dual Hopf algebra on the dual basis: every structure tensor is transposed.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim;
    let mut m = Vec::new();
    for k in 0..n {
        for &(i, j, c) in &h.delta[k] {
            m.push((i, j, k, c));
        }
    }
    let mut delta = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for &(k, c) in h.mul_basis(i, j) {
                delta.push((k, i, j, c));
            }
        }
    }
    let u: Vec<_> = h.eps.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let eps: Vec<_> = h.u.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let s: Vec<_> = (0..n).flat_map(|j| h.s[j].iter().map(move |&(i, c)| (i, j, c))).collect();
    let labels = h.labels.iter().map(|l| dual_label(l)).collect();
    HopfAlgebra::new(n, Some(labels), &m, &u, &delta, &eps, &s).expect("dual has the same shape")
}

fn dual_label(l: &str) -> String {
    match l.strip_prefix("δ[").and_then(|r| r.strip_suffix(']')) {
        Some(inner) => inner.to_string(),
        None => format!("δ[{l}]"),
    }
}

pub fn is_commutative(h: &HopfAlgebra) -> bool {
    (0..h.dim).all(|i| (0..i).all(|j| h.mul_basis(i, j) == h.mul_basis(j, i)))
}

pub fn is_cocommutative(h: &HopfAlgebra) -> bool {
    (0..h.dim).all(|i| {
        let flipped = collect(h.delta[i].iter().map(|&(a, b, c)| ((b, a), c)));
        let plain = collect(h.delta[i].iter().map(|&(a, b, c)| ((a, b), c)));
        flipped == plain
    })
}

/// Basis index of `e_s # g` in the Kac algebra of `mp`.
pub fn kac_index(mp: &MatchedPair, s: usize, g: usize) -> usize {
    s * mp.g().order() + g
}

/// The candidate Kac structure maps for arbitrary tables, with no
/// matched-pair check. Used to test that the axiom checker alone decides
/// matchedness.
pub fn kac_bicrossed_unchecked(mp: &MatchedPair) -> HopfAlgebra {
    let (g, gamma) = (mp.g(), mp.gamma());
    let (ng, nt) = (g.order(), gamma.order());
    let idx = |s: usize, x: usize| s * ng + x;
    let mut m = Vec::new();
    let mut delta = Vec::new();
    let mut s_map = Vec::new();
    for s in 0..nt {
        for x in 0..ng {
            for y in 0..ng {
                let t = mp.lhd(s, x);
                m.push((idx(s, x), idx(t, y), idx(s, g.mul(x, y)), Q::one()));
            }
            for a in 0..nt {
                // b = a⁻¹s, so that ab = s
                let b = gamma.mul(gamma.inv(a), s);
                delta.push((idx(s, x), idx(a, mp.rhd(b, x)), idx(b, x), Q::one()));
            }
            s_map.push((idx(s, x), idx(gamma.inv(mp.lhd(s, x)), g.inv(mp.rhd(s, x))), Q::one()));
        }
    }
    let u: Vec<_> = (0..nt).map(|s| (idx(s, g.identity()), Q::one())).collect();
    let eps: Vec<_> = (0..ng).map(|x| (idx(gamma.identity(), x), Q::one())).collect();
    let labels = (0..nt)
        .flat_map(|s| (0..ng).map(move |x| (s, x)))
        .map(|(s, x)| format!("e[{}]#{}", gamma.label(s), g.label(x)))
        .collect();
    HopfAlgebra::new(nt * ng, Some(labels), &m, &u, &delta, &eps, &s_map).expect("Kac tensors have a valid shape")
}

/// The Kac bicrossed product `k^Γ # kG` of a matched pair, with trivial cocycles.
pub fn kac_bicrossed(mp: &MatchedPair) -> Result<HopfAlgebra> {
    let report = verify_matched_pair_limited(mp, Some(1));
    if !report.valid {
        return Err(Error::Construction(format!("not a matched pair: {}", report.witnesses[0])));
    }
    let h = kac_bicrossed_unchecked(mp);
    let axioms = verify_hopf_axioms_limited(&h, Some(1));
    if !axioms.valid {
        return Err(Error::Construction(format!("Kac structure maps fail: {}", axioms.witnesses[0])));
    }
    Ok(h)
}

/// The canonical data of `k → k^Γ → k^Γ#kG → kG → k`: a basis of the image
/// of `k^Γ`, the matrix of `π(e_s#g) = δ_{s,e} g`, and `kG` itself.
pub fn kac_sequence_maps(mp: &MatchedPair) -> (Vec<Vec<Q>>, Vec<Vec<Q>>, HopfAlgebra) {
    let (ng, nt) = (mp.g().order(), mp.gamma().order());
    let n = ng * nt;
    let e = mp.g().identity();
    let sub = (0..nt).map(|s| qmat::unit_vector(n, kac_index(mp, s, e))).collect();
    let mut pi = vec![vec![Q::zero(); n]; ng];
    for (x, row) in pi.iter_mut().enumerate() {
        row[kac_index(mp, mp.gamma().identity(), x)] = Q::one();
    }
    (sub, pi, group_algebra(mp.g()))
}

fn apply_rows(rows: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    rows.iter().map(|r| r.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()).collect()
}

/// Records every way `k` fails to be a Hopf subalgebra of `h`.
pub(crate) fn hopf_subalgebra_failures(h: &HopfAlgebra, k: &Subspace, label: &str, r: &mut Report) {
    let n = h.dim;
    if !k.contains(&h.u) {
        r.fail(label, "does not contain the unit");
    }
    for (a, x) in k.basis().iter().enumerate() {
        for (b, y) in k.basis().iter().enumerate() {
            if !k.contains(&h.mul(x, y)) {
                r.fail_with(label, || format!("not a subalgebra: product of basis vectors {a} and {b} leaves the span"));
                return;
            }
        }
    }
    for (a, x) in k.basis().iter().enumerate() {
        let d = h.coproduct(x);
        let rows_ok = (0..n).all(|j| k.contains(&d[j * n..(j + 1) * n]));
        let cols_ok = (0..n).all(|c| k.contains(&(0..n).map(|j| d[j * n + c]).collect::<Vec<_>>()));
        if !rows_ok || !cols_ok {
            r.fail_with(label, || format!("not a subcoalgebra: Δ of basis vector {a} leaves K⊗K"));
            return;
        }
        if !k.contains(&h.antipode(x)) {
            r.fail_with(label, || format!("not S-stable: S of basis vector {a} leaves the span"));
            return;
        }
    }
}

/// Checks the exactness conditions of `k → H' → H → H'' → k`:
/// (a) `H'` is a Hopf subalgebra and `π` a surjective Hopf map,
/// (b) `ker π = H·(H')⁺`, (c) `H'` equals the co-invariants `{h : (π⊗id)Δ(h) = 1⊗h}`.
pub fn exact_sequence_check(h: &HopfAlgebra, sub_basis: &[Vec<Q>], pi: &[Vec<Q>], quotient: &HopfAlgebra) -> Report {
    let mut r = Report::with_limit(32);
    let n = h.dim;
    let nq = quotient.dim;
    if sub_basis.iter().any(|v| v.len() != n) || pi.len() != nq || pi.iter().any(|row| row.len() != n) {
        r.fail("(a)", "shapes do not match");
        return r;
    }
    let k = Subspace::span(n, sub_basis);
    if k.dim() != sub_basis.len() {
        r.fail("(a)", "the inclusion is not injective");
    }
    if qmat::rank(pi) != nq {
        r.fail("(a)", "π is not surjective");
    }
    hopf_subalgebra_failures(h, &k, "(a)", &mut r);
    if apply_rows(pi, &h.u) != quotient.u {
        r.fail("(a)", "π(1) != 1");
    }
    for i in 0..n {
        let bi = h.basis_vector(i);
        let pbi = apply_rows(pi, &bi);
        if quotient.counit(&pbi) != h.eps[i] {
            r.fail_with("(a)", || format!("ε''π(b{i}) != ε(b{i})"));
        }
        if apply_rows(pi, &h.antipode(&bi)) != quotient.antipode(&pbi) {
            r.fail_with("(a)", || format!("πS(b{i}) != S''π(b{i})"));
        }
        let d = h.coproduct(&bi);
        let mut pd = vec![Q::zero(); nq * nq];
        for j in 0..n {
            for l in 0..n {
                let c = d[j * n + l];
                if c.is_zero() {
                    continue;
                }
                for a in 0..nq {
                    for b in 0..nq {
                        pd[a * nq + b] += c * pi[a][j] * pi[b][l];
                    }
                }
            }
        }
        if pd != quotient.coproduct(&pbi) {
            r.fail_with("(a)", || format!("(π⊗π)Δ(b{i}) != Δ''π(b{i})"));
        }
        for j in 0..n {
            let bj = h.basis_vector(j);
            if apply_rows(pi, &h.mul(&bi, &bj)) != quotient.mul(&pbi, &apply_rows(pi, &bj)) {
                r.fail_with("(a)", || format!("π(b{i}b{j}) != π(b{i})π(b{j})"));
            }
        }
    }

    // (b): ker π against H·(H')⁺
    let kernel = Subspace::span(n, &qmat::nullspace(pi, n));
    let plus = augmentation(h, &k);
    let mut gens = Vec::new();
    for i in 0..n {
        let bi = h.basis_vector(i);
        for x in &plus {
            gens.push(h.mul(&bi, x));
        }
    }
    let ideal = Subspace::span(n, &gens);
    if !kernel.same_as(&ideal) {
        r.fail("(b)", format!("dim ker π = {} but dim H·(H')⁺ = {}", kernel.dim(), ideal.dim()));
    }

    // (c): co-invariants
    let one_q = &quotient.u;
    let mut columns: Vec<Vec<Q>> = Vec::with_capacity(n);
    for i in 0..n {
        let d = h.coproduct(&h.basis_vector(i));
        let mut out = vec![Q::zero(); nq * n];
        for j in 0..n {
            for l in 0..n {
                let c = d[j * n + l];
                if c.is_zero() {
                    continue;
                }
                for a in 0..nq {
                    out[a * n + l] += c * pi[a][j];
                }
            }
        }
        for a in 0..nq {
            out[a * n + i] -= one_q[a];
        }
        columns.push(out);
    }
    let rows: Vec<Vec<Q>> = (0..nq * n).map(|row| columns.iter().map(|col| col[row]).collect()).collect();
    let coinv = Subspace::span(n, &qmat::nullspace(&rows, n));
    if !coinv.same_as(&k) {
        r.fail("(c)", format!("dim of co-invariants = {} but dim H' = {}", coinv.dim(), k.dim()));
    }
    r
}

/// Basis of `K⁺ = K ∩ ker ε`.
pub(crate) fn augmentation(h: &HopfAlgebra, k: &Subspace) -> Vec<Vec<Q>> {
    let basis = k.basis();
    let eps: Vec<Q> = basis.iter().map(|v| h.counit(v)).collect();
    qmat::nullspace(&[eps], basis.len())
        .into_iter()
        .map(|coef| {
            let mut v = vec![Q::zero(); h.dim];
            for (c, b) in coef.iter().zip(basis) {
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += c * y;
                    }
                }
            }
            v
        })
        .collect()
}
