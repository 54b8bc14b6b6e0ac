//! Dense complex linear algebra used by the representation-theoretic engines.
//!
//! Everything here is deterministic: the same input produces bit-identical
//! output. Rank decisions go through [`nullspace`], which uses Gauss-Jordan
//! elimination with complete pivoting and a relative threshold.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Index, IndexMut, Mul, Sub};

pub type C64 = Complex64;

pub const ZERO: C64 = Complex64::new(0.0, 0.0);
pub const ONE: C64 = Complex64::new(1.0, 0.0);

/// Numerical thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative pivot threshold for rank decisions.
    pub pivot_eps: f64,
    /// Integrality gate for multiplicities and dimensions.
    pub round_eps: f64,
    /// Eigenvalues closer than this (relative to the spectral scale) share a cluster.
    pub cluster_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { pivot_eps: 1e-9, round_eps: 1e-6, cluster_eps: 1e-7 }
    }
}

impl Tolerance {
    pub fn validate(&self) -> Result<()> {
        let all_positive = [self.pivot_eps, self.round_eps, self.cluster_eps]
            .iter()
            .all(|x| x.is_finite() && *x > 0.0);
        if !all_positive {
            return Err(Error::Validation("tolerances must be finite and strictly positive".into()));
        }
        if self.round_eps < self.pivot_eps {
            return Err(Error::Validation("round_eps must be at least pivot_eps".into()));
        }
        Ok(())
    }
}

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Validation(format!(
                "matrix shape {rows}x{cols} does not match {} entries",
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Validation("matrix entries must be finite".into()));
        }
        Ok(CMatrix { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        CMatrix::from_vec(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<C64>]) -> Self {
        CMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = CMatrix::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: C64) -> Self {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Concatenates columns of `self` and `other`.
    pub fn hstack(&self, other: &CMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        CMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                other[(i, j - self.cols)]
            }
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        CMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows.start + i, cols.start + j)])
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        CMatrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])])
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Max-norm distance to another matrix of the same shape.
    pub fn dist(&self, other: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &CMatrix, eps: f64) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.dist(other) <= eps
    }

    fn axpy_row(&mut self, dst: usize, src: usize, factor: C64) {
        let c = self.cols;
        for j in 0..c {
            let s = self.data[src * c + j];
            self.data[dst * c + j] -= factor * s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            self.data.swap(a * c + j, b * c + j);
        }
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul: inner dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Kronecker product: entry `(i*p + k, j*q + l)` is `a[i][j] * b[k][l]`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (p, q) = (b.rows, b.cols);
    let mut out = CMatrix::zeros(a.rows * p, a.cols * q);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a[(i, j)];
            if x == ZERO {
                continue;
            }
            for k in 0..p {
                for l in 0..q {
                    out[(i * p + k, j * q + l)] = x * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Result of a Gauss-Jordan reduction with complete pivoting.
struct Reduced {
    /// The reduced matrix: pivot rows `0..rank` carry 1 in their pivot column.
    m: CMatrix,
    pivots: Vec<usize>,
}

fn reduce(mut m: CMatrix, tol: &Tolerance) -> Result<Reduced> {
    let scale = m.max_abs();
    let mut pivots = Vec::new();
    if scale == 0.0 {
        return Ok(Reduced { m, pivots });
    }
    let mut free: Vec<bool> = vec![true; m.cols];
    let mut min_accepted = f64::INFINITY;
    let mut max_rejected = 0.0;
    for r in 0..m.rows.min(m.cols) {
        let mut best = (0.0, r, 0);
        for i in r..m.rows {
            for (j, is_free) in free.iter().enumerate() {
                if *is_free {
                    let a = m[(i, j)].norm();
                    if a > best.0 {
                        best = (a, i, j);
                    }
                }
            }
        }
        let (mag, pi, pj) = best;
        let rel = mag / scale;
        if rel < tol.pivot_eps {
            max_rejected = rel;
            break;
        }
        min_accepted = min_accepted.min(rel);
        m.swap_rows(r, pi);
        let inv = ONE / m[(r, pj)];
        for j in 0..m.cols {
            m[(r, j)] *= inv;
        }
        for i in 0..m.rows {
            if i != r {
                let f = m[(i, pj)];
                if f != ZERO {
                    m.axpy_row(i, r, f);
                }
            }
        }
        free[pj] = false;
        pivots.push(pj);
    }
    // Pivots that land within a decade of the threshold, on either side, make
    // the rank decision fragile.
    if min_accepted < 10.0 * tol.pivot_eps || max_rejected > tol.pivot_eps / 10.0 {
        return Err(Error::DegenerateRank { accepted: min_accepted, rejected: max_rejected });
    }
    Ok(Reduced { m, pivots })
}

/// Numerical rank of `m`.
pub fn rank(m: &CMatrix, tol: &Tolerance) -> Result<usize> {
    Ok(reduce(m.clone(), tol)?.pivots.len())
}

/// Basis of the right kernel of `m`, returned as the columns of a
/// `cols x k` matrix (k may be zero).
pub fn nullspace(m: &CMatrix, tol: &Tolerance) -> Result<CMatrix> {
    let n = m.cols;
    let red = reduce(m.clone(), tol)?;
    let mut is_pivot = vec![None; n];
    for (r, &p) in red.pivots.iter().enumerate() {
        is_pivot[p] = Some(r);
    }
    let free: Vec<usize> = (0..n).filter(|j| is_pivot[*j].is_none()).collect();
    let mut out = CMatrix::zeros(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        out[(f, k)] = ONE;
        for (r, &p) in red.pivots.iter().enumerate() {
            out[(p, k)] = -red.m[(r, f)];
        }
    }
    Ok(out)
}

/// Solves `a x = b` for square invertible `a` (partial pivoting).
pub fn solve(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    if !a.is_square() || a.rows != b.rows {
        return Err(Error::Validation("solve: shape mismatch".into()));
    }
    let n = a.rows;
    let mut aug = a.hstack(b);
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    for col in 0..n {
        let (pi, mag) = (col..n)
            .map(|i| (i, aug[(i, col)].norm()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag / scale < 1e-13 {
            return Err(Error::Numerical("solve: singular matrix".into()));
        }
        aug.swap_rows(col, pi);
        let inv = ONE / aug[(col, col)];
        for j in 0..aug.cols {
            aug[(col, j)] *= inv;
        }
        for i in 0..n {
            if i != col {
                let f = aug[(i, col)];
                if f != ZERO {
                    aug.axpy_row(i, col, f);
                }
            }
        }
    }
    Ok(aug.submatrix(0..n, n..n + b.cols))
}

pub fn inverse(a: &CMatrix) -> Result<CMatrix> {
    solve(a, &CMatrix::identity(a.rows))
}

/// Orthonormal basis of the column space of `a` (modified Gram-Schmidt,
/// two passes). Columns whose residual norm falls below `rel_eps` times the
/// largest column norm are dropped.
pub fn orthonormal_basis(a: &CMatrix, rel_eps: f64) -> CMatrix {
    let max_norm = (0..a.cols)
        .map(|j| a.column(j).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    let mut basis: Vec<Vec<C64>> = Vec::new();
    if max_norm == 0.0 {
        return CMatrix::zeros(a.rows, 0);
    }
    for j in 0..a.cols {
        let mut v = a.column(j);
        for _ in 0..2 {
            for q in &basis {
                let proj: C64 = q.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > rel_eps * max_norm {
            basis.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    CMatrix::from_columns(a.rows, &basis)
}

/// Eigenvalues of a square matrix (complex Schur form).
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<C64>> {
    if !m.is_square() {
        return Err(Error::Validation("eigenvalues: matrix not square".into()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    let dm = nalgebra::DMatrix::from_fn(n, n, |i, j| m[(i, j)]);
    let schur = nalgebra::Schur::try_new(dm, 1e-15, 100_000)
        .ok_or_else(|| Error::Numerical("Schur iteration did not converge".into()))?;
    let (_, t) = schur.unpack();
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// A generalized eigenspace together with the cluster it belongs to.
#[derive(Debug, Clone)]
pub struct EigenBlock {
    /// Columns span the generalized eigenspace.
    pub basis: CMatrix,
    /// Cluster centroid.
    pub eigenvalue: C64,
}

/// Splits the space into generalized eigenspaces of `m`, one per eigenvalue
/// cluster. Clusters are ordered by (re, im) of their centroid.
///
/// Returns [`Error::Unsplittable`] when two eigenvalues are neither clearly
/// equal nor clearly distinct at `cluster_eps`.
pub fn gen_eigensplit(m: &CMatrix, tol: &Tolerance) -> Result<Vec<EigenBlock>> {
    let n = m.rows;
    let mut eig = eigenvalues(m)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let spectral = eig.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let near = tol.cluster_eps * spectral;
    let far = 1e3 * near;
    eig.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    // single-linkage clustering
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (eig[i] - eig[j]).norm();
            if d <= near {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            } else if d < far {
                return Err(Error::Unsplittable);
            }
        }
    }
    let mut clusters: Vec<(usize, Vec<C64>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match clusters.iter_mut().find(|c| c.0 == r) {
            Some(c) => c.1.push(eig[i]),
            None => clusters.push((r, vec![eig[i]])),
        }
    }

    let mut blocks = Vec::with_capacity(clusters.len());
    for (_, members) in clusters {
        let k = members.len();
        let lambda = members.iter().sum::<C64>() / (k as f64);
        let shifted = m - &CMatrix::identity(n).scale(lambda);
        let mut power = shifted.clone();
        let mut found = None;
        for _ in 0..k {
            let ns = nullspace(&power, tol)?;
            if ns.cols() == k {
                found = Some(ns);
                break;
            }
            if ns.cols() > k {
                return Err(Error::Unsplittable);
            }
            power = &power * &shifted;
        }
        let basis = found.ok_or(Error::Unsplittable)?;
        blocks.push(EigenBlock { basis: orthonormal_basis(&basis, 1e-10), eigenvalue: lambda });
    }
    if blocks.iter().map(|b| b.basis.cols()).sum::<usize>() != n {
        return Err(Error::Unsplittable);
    }
    Ok(blocks)
}
