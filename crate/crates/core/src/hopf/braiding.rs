//! Right comodules and the half-braiding of the induced central algebra `A = H`.
//!
//! For a right comodule `V`, `σ_V(h⊗v) = v₍₀₎ ⊗ S(v₍₁₎) h v₍₂₎`. Inputs `b_a ⊗ v_j`
//! sit at index `a·dim V + j`; outputs `v_i ⊗ b_b` at index `i·dim H + b`.

use super::qmat::{self, Q};
use super::{collect, HopfAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};
use crate::report::Report;
use num_traits::{One, ToPrimitive, Zero};

/// A right comodule: `ρ(v_j) = Σ c v_i ⊗ b_k`, stored as `(i, k, c)` per `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    pub dim: usize,
    pub coaction: Vec<Vec<(usize, usize, Q)>>,
}

/// `H` with coaction `Δ`.
pub fn regular_comodule(h: &HopfAlgebra) -> Comodule {
    Comodule { dim: h.dim(), coaction: (0..h.dim()).map(|i| h.delta_basis(i).to_vec()).collect() }
}

/// `k^n` with `ρ(v) = v ⊗ 1`.
pub fn trivial_comodule(h: &HopfAlgebra, dim: usize) -> Comodule {
    let one: Vec<(usize, Q)> = h.unit_vector().iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    Comodule { dim, coaction: (0..dim).map(|j| one.iter().map(|&(k, c)| (j, k, c)).collect()).collect() }
}

/// `V ⊗ W` with `ρ(v⊗w) = v₍₀₎⊗w₍₀₎ ⊗ v₍₁₎w₍₁₎`, basis `v_a⊗w_b` at `a·dim W + b`.
pub fn tensor_comodule(h: &HopfAlgebra, v: &Comodule, w: &Comodule) -> Comodule {
    let mut coaction = Vec::with_capacity(v.dim * w.dim);
    for a in 0..v.dim {
        for b in 0..w.dim {
            let mut terms = Vec::new();
            for &(i, k, c) in &v.coaction[a] {
                for &(j, l, d) in &w.coaction[b] {
                    for &(t, e) in h.mul_basis(k, l) {
                        terms.push(((i * w.dim + j, t), c * d * e));
                    }
                }
            }
            coaction.push(collect(terms).into_iter().map(|((x, t), c)| (x, t, c)).collect());
        }
    }
    Comodule { dim: v.dim * w.dim, coaction }
}

/// Coassociativity and counit of a coaction.
pub fn verify_comodule(h: &HopfAlgebra, v: &Comodule) -> Report {
    let mut r = Report::with_limit(8);
    if v.coaction.len() != v.dim || v.coaction.iter().flatten().any(|&(i, k, _)| i >= v.dim || k >= h.dim()) {
        r.fail("shape", "coaction does not match the dimensions");
        return r;
    }
    let eps = h.counit_covector();
    for j in 0..v.dim {
        let left = collect(v.coaction[j].iter().flat_map(|&(i, k, c)| v.coaction[i].iter().map(move |&(x, y, d)| ((x, y, k), c * d))));
        let right = collect(v.coaction[j].iter().flat_map(|&(i, k, c)| h.delta_basis(k).iter().map(move |&(y, z, d)| ((i, y, z), c * d))));
        if left != right {
            r.fail_with("coassociativity", || format!("(ρ⊗id)ρ(v{j}) != (id⊗Δ)ρ(v{j})"));
        }
        let counit = collect(v.coaction[j].iter().map(|&(i, k, c)| (i, c * eps[k])));
        if counit != vec![(j, Q::one())] {
            r.fail_with("counit", || format!("(id⊗ε)ρ(v{j}) != v{j}"));
        }
    }
    r
}

/// Exact `σ_V` as dense rows (`dim V · dim H` square).
pub fn half_braiding_exact(h: &HopfAlgebra, v: &Comodule) -> Result<Vec<Vec<Q>>> {
    let check = verify_comodule(h, v);
    if !check.valid {
        return Err(Error::Validation(format!("invalid comodule: {}", check.witnesses[0])));
    }
    let (d, dv) = (h.dim(), v.dim);
    let size = d * dv;
    let mut sigma = vec![vec![Q::zero(); size]; size];
    for j in 0..dv {
        // (ρ⊗id)ρ(v_j) = Σ c v_i ⊗ b_{k1} ⊗ b_{k2}
        let mut twice = Vec::new();
        for &(i1, k2, c) in &v.coaction[j] {
            for &(i, k1, e) in &v.coaction[i1] {
                twice.push(((i, k1, k2), c * e));
            }
        }
        let twice = collect(twice);
        for a in 0..d {
            let col = a * dv + j;
            for &((i, k1, k2), c) in &twice {
                let left = h.antipode(&h.basis_vector(k1));
                let x = h.mul(&h.mul(&left, &h.basis_vector(a)), &h.basis_vector(k2));
                for (b, coef) in x.into_iter().enumerate() {
                    if !coef.is_zero() {
                        sigma[i * d + b][col] += c * coef;
                    }
                }
            }
        }
    }
    Ok(sigma)
}

pub fn to_cmatrix(rows: &[Vec<Q>]) -> CMatrix {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    CMatrix::from_fn(n, m, |i, j| {
        let x = rows[i][j];
        C64::new(x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN), 0.0)
    })
}

/// `σ_V` as a complex matrix.
pub fn half_braiding_sigma(h: &HopfAlgebra, v: &Comodule) -> Result<CMatrix> {
    Ok(to_cmatrix(&half_braiding_exact(h, v)?))
}

fn qmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for (k, &x) in a[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += x * b[k][j];
                }
            }
        }
    }
    out
}

fn is_identity(a: &[Vec<Q>]) -> bool {
    a.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == if i == j { Q::one() } else { Q::zero() }))
}

/// `σ_V` is invertible.
pub fn sigma_invertible(sigma: &[Vec<Q>]) -> bool {
    qmat::rank(sigma) == sigma.len()
}

/// `σ_{V⊗W} = (id_V⊗σ_W)(σ_V⊗id_W)` as maps `A⊗V⊗W → V⊗W⊗A`.
pub fn sigma_multiplicative(h: &HopfAlgebra, v: &Comodule, w: &Comodule) -> Result<bool> {
    let (d, dv, dw) = (h.dim(), v.dim, w.dim);
    let sv = half_braiding_exact(h, v)?;
    let sw = half_braiding_exact(h, w)?;
    let svw = half_braiding_exact(h, &tensor_comodule(h, v, w))?;
    for a in 0..d {
        for x in 0..dv {
            for y in 0..dw {
                // σ_V ⊗ id_W: b_a⊗v_x⊗w_y ↦ Σ σ_V[i·d+b][a·dv+x] v_i⊗b_b⊗w_y
                let mut composed = vec![Q::zero(); dv * dw * d];
                for i in 0..dv {
                    for b in 0..d {
                        let c = sv[i * d + b][a * dv + x];
                        if c.is_zero() {
                            continue;
                        }
                        // id_V ⊗ σ_W on b_b⊗w_y
                        for j in 0..dw {
                            for t in 0..d {
                                let e = sw[j * d + t][b * dw + y];
                                if !e.is_zero() {
                                    composed[(i * dw + j) * d + t] += c * e;
                                }
                            }
                        }
                    }
                }
                let col = a * (dv * dw) + x * dw + y;
                if (0..dv * dw * d).any(|row| svw[row][col] != composed[row]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `σ_V` intertwines the coactions of `A⊗V` and `V⊗A`.
pub fn sigma_is_comodule_map(h: &HopfAlgebra, v: &Comodule) -> Result<bool> {
    let a = regular_comodule(h);
    let sigma = half_braiding_exact(h, v)?;
    let av = tensor_comodule(h, &a, v);
    let va = tensor_comodule(h, v, &a);
    let n = sigma.len();
    for col in 0..n {
        // ρ_{V⊗A}(σ x)
        let mut left = Vec::new();
        for (row, line) in sigma.iter().enumerate() {
            let c = line[col];
            if !c.is_zero() {
                left.extend(va.coaction[row].iter().map(|&(p, k, e)| ((p, k), c * e)));
            }
        }
        // (σ⊗id) ρ_{A⊗V}(x)
        let mut right = Vec::new();
        for &(p, k, c) in &av.coaction[col] {
            for (row, line) in sigma.iter().enumerate() {
                if !line[p].is_zero() {
                    right.push(((row, k), c * line[p]));
                }
            }
        }
        if collect(left) != collect(right) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the symmetric central algebra test on `A = H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SymmetryTest {
    pub sigma_squared_identity: bool,
    pub commutative: bool,
}

/// Computes `σ_A` for the regular comodule and reports whether `σ² = id`
/// together with whether `H` is commutative.
pub fn symmetric_central_algebra_test(h: &HopfAlgebra) -> Result<SymmetryTest> {
    let sigma = half_braiding_exact(h, &regular_comodule(h))?;
    Ok(SymmetryTest {
        sigma_squared_identity: is_identity(&qmul(&sigma, &sigma)),
        commutative: super::is_commutative(h),
    })
}

/// `‖σ² − I‖_∞` in floating point, for reporting.
pub fn sigma_squared_defect(h: &HopfAlgebra) -> Result<f64> {
    let s = half_braiding_sigma(h, &regular_comodule(h))?;
    let sq = &s * &s;
    Ok((&sq - &CMatrix::identity(s.rows())).max_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::CayleyGroup;
    use crate::hopf::{dual_hopf, group_algebra, kac_bicrossed};
    use crate::matched::s3_instance;

    #[test]
    fn trivial_comodule_gives_flip() {
        let h = group_algebra(&CayleyGroup::symmetric(3));
        let v = trivial_comodule(&h, 2);
        let s = half_braiding_exact(&h, &v).unwrap();
        for a in 0..6 {
            for j in 0..2 {
                let col = a * 2 + j;
                for row in 0..12 {
                    let expect = if row == j * 6 + a { Q::one() } else { Q::zero() };
                    assert_eq!(s[row][col], expect);
                }
            }
        }
    }

    #[test]
    fn commutative_dual_is_symmetric() {
        let h = dual_hopf(&group_algebra(&CayleyGroup::symmetric(3)));
        let t = symmetric_central_algebra_test(&h).unwrap();
        assert!(t.sigma_squared_identity && t.commutative);
    }

    #[test]
    fn group_algebra_of_s3_is_not() {
        let h = group_algebra(&CayleyGroup::symmetric(3));
        let t = symmetric_central_algebra_test(&h).unwrap();
        assert!(!t.sigma_squared_identity && !t.commutative);
        assert!(sigma_squared_defect(&h).unwrap() > 0.5);
    }

    #[test]
    fn sigma_axioms_on_kac_s3() {
        let h = kac_bicrossed(&s3_instance().pair).unwrap();
        let a = regular_comodule(&h);
        let t = trivial_comodule(&h, 1);
        let s = half_braiding_exact(&h, &a).unwrap();
        assert!(sigma_invertible(&s));
        assert!(sigma_multiplicative(&h, &a, &t).unwrap());
        assert!(sigma_multiplicative(&h, &t, &a).unwrap());
        assert!(sigma_is_comodule_map(&h, &a).unwrap());
    }

    #[test]
    fn sigma_multiplicative_on_regular_pair() {
        let h = group_algebra(&CayleyGroup::cyclic(3));
        let a = regular_comodule(&h);
        assert!(sigma_multiplicative(&h, &a, &a).unwrap());
    }

    #[test]
    fn invalid_comodule_is_rejected() {
        let h = group_algebra(&CayleyGroup::cyclic(2));
        let bad = Comodule { dim: 1, coaction: vec![vec![(0, 0, Q::from_integer(2))]] };
        assert!(half_braiding_exact(&h, &bad).is_err());
    }
}
