//! Crossed actions of matched pairs on based rings, equivariant objects over
//! pointed data, and the two rings built from a crossed action: the
//! equivariantization ring and the `G⋈Γ`-graded ring.
//!
//! An equivariant object is a graded space `X = ⊕_x X_x` over the simples of a
//! pointed ring together with maps `R(g)` sending block `x` to block `ρ^g(x)`.
//! They compose as a right action: `R(g)R(h) = R(hg)`. The tensor product uses
//! `R_X(t▷g) ⊗ R_Y(g)` on `X_x ⊗ Y_y` when `y` has degree `t`.

use crate::error::{Error, Result};
use crate::groups::{orbits_and_stabilizers, OrbitInfo};
use crate::linalg::{gen_eigensplit, nullspace, orthonormal_basis, CMatrix, Tolerance, C64, ONE, ZERO};
use crate::matched::{bicrossed_group, verify_matched_pair, MatchedPair};
use crate::report::Report;
use crate::rings::{check_grading, group_ring, grading_report, verify_based_ring, BasedRing, GradingMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A crossed action: a Γ-grading of the base ring plus a right `G`-action on
/// its basis by permutations. `rho[g][x] = ρ^g(x)`.
#[derive(Debug, Clone)]
pub struct CrossedActionData {
    pub mp: MatchedPair,
    pub ring: BasedRing,
    pub deg: Vec<usize>,
    pub rho: Vec<Vec<usize>>,
}

impl CrossedActionData {
    #[inline]
    pub fn rho(&self, g: usize, x: usize) -> usize {
        self.rho[g][x]
    }

    pub fn grading(&self) -> GradingMap {
        GradingMap { group: self.mp.gamma().clone(), deg: self.deg.clone() }
    }

    /// The single product constituent of `x·y` in a pointed ring.
    fn pointed_product(&self, x: usize, y: usize) -> usize {
        self.ring.product(x, y)[0].0
    }

    /// Orbits of the basis under `x ↦ ρ^g(x)`.
    pub fn orbits(&self) -> Result<Vec<OrbitInfo>> {
        let action: Vec<Vec<usize>> =
            (0..self.ring.rank()).map(|x| self.mp.g().elements().map(|g| self.rho(g, x)).collect()).collect();
        orbits_and_stabilizers(self.mp.g(), &action)
    }
}

/// Checks the ring-level shadow of a crossed action with identity `γ`.
pub fn verify_crossed_action(d: &CrossedActionData) -> Report {
    let mut r = Report::with_limit(32);
    let (g, gamma) = (d.mp.g(), d.mp.gamma());
    let n = d.ring.rank();
    if d.deg.len() != n || d.rho.len() != g.order() {
        r.fail("shape", "degree or action table has the wrong shape");
        return r;
    }
    for (k, perm) in d.rho.iter().enumerate() {
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
            r.fail_with("shape", || format!("ρ of element {k} is not a permutation of the basis"));
            return r;
        }
    }
    let mp_report = verify_matched_pair(&d.mp);
    if !mp_report.valid {
        r.fail_with("matched_pair", || format!("{}", mp_report.witnesses[0]));
    }
    let ring_report = verify_based_ring(&d.ring);
    if !ring_report.valid {
        r.fail_with("base_ring", || format!("{}", ring_report.witnesses[0]));
    }
    let grading = grading_report(&d.ring, &d.grading());
    if !grading.valid {
        r.fail_with("grading", || format!("{}", grading.witnesses[0]));
    }
    if !r.valid {
        return r;
    }
    for x in 0..n {
        if d.rho(g.identity(), x) != x {
            r.fail_with("right_action", || format!("ρ^e moves {}", d.ring.label(x)));
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let ba = g.mul(b, a);
            for x in 0..n {
                if d.rho(a, d.rho(b, x)) != d.rho(ba, x) {
                    r.fail_with("right_action", || format!("ρ^{a}∘ρ^{b} != ρ^({b}·{a}) at {}", d.ring.label(x)));
                }
            }
        }
        if d.rho(a, d.ring.unit()) != d.ring.unit() {
            r.fail_with("unit", || format!("ρ^{a} moves the unit"));
        }
        for x in 0..n {
            let want = d.mp.lhd(d.deg[x], a);
            if d.deg[d.rho(a, x)] != want {
                r.fail_with("rho_partial", || {
                    format!("deg(ρ^{a}({})) = {} but deg◁g = {}", d.ring.label(x), gamma.label(d.deg[d.rho(a, x)]), gamma.label(want))
                });
            }
        }
        if r.saturated() {
            return r;
        }
    }
    for a in g.elements() {
        for y in 0..n {
            let t = d.deg[y];
            let ta = d.mp.rhd(t, a);
            for x in 0..n {
                for z in 0..n {
                    let lhs = d.ring.n(d.rho(ta, x), d.rho(a, y), d.rho(a, z));
                    if lhs != d.ring.n(x, y, z) {
                        r.fail_with("twisted_multiplicativity", || {
                            format!("g={a}, (x,y,z)=({},{},{}): N changes under (ρ^(t▷g), ρ^g)", d.ring.label(x), d.ring.label(y), d.ring.label(z))
                        });
                    }
                }
                // duals: ρ^(t▷g)(y*) = ρ^g(y)* is forced by the line above with z = 1
            }
            if r.saturated() {
                return r;
            }
        }
    }
    r
}

/// Base `ℤ[Γ]`, degree the identity, `ρ^g(s) = s◁g`, with no validity check.
pub fn pointed_crossed_unchecked(mp: &MatchedPair) -> CrossedActionData {
    let gamma = mp.gamma();
    let rho = mp.g().elements().map(|g| gamma.elements().map(|s| mp.lhd(s, g)).collect()).collect();
    CrossedActionData { mp: mp.clone(), ring: group_ring(gamma), deg: gamma.elements().collect(), rho }
}

/// The pointed crossed action of a matched pair.
pub fn pointed_crossed_from_matched_pair(mp: &MatchedPair) -> Result<CrossedActionData> {
    let report = verify_matched_pair(mp);
    if !report.valid {
        return Err(Error::Validation(format!("not a matched pair: {}", report.witnesses[0])));
    }
    let d = pointed_crossed_unchecked(mp);
    let check = verify_crossed_action(&d);
    if !check.valid {
        return Err(Error::Internal(format!("pointed crossed action fails: {}", check.witnesses[0])));
    }
    Ok(d)
}

/// A graded space over the basis of a pointed ring with structure maps `R(g)`.
/// Basis vectors are ordered by block.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantObject {
    dims: Vec<usize>,
    r: Vec<CMatrix>,
}

impl EquivariantObject {
    /// `dims[x]` is the dimension of block `x`; `r[g]` the matrix of `R(g)`.
    pub fn new(dims: Vec<usize>, r: Vec<CMatrix>) -> Result<Self> {
        let n: usize = dims.iter().sum();
        if r.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Validation(format!("structure maps must be {n}x{n}")));
        }
        Ok(EquivariantObject { dims, r })
    }

    /// Builds an object from per-vector degrees, reordering the basis into blocks.
    fn from_graded_basis(nblocks: usize, degrees: &[usize], r: Vec<CMatrix>) -> Self {
        let n = degrees.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (degrees[i], i));
        // new position of old vector order[k] is k
        let mut pos = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        let mut dims = vec![0; nblocks];
        for &dg in degrees {
            dims[dg] += 1;
        }
        let r = r
            .into_iter()
            .map(|m| {
                let mut out = CMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        let v = m[(i, j)];
                        if v != ZERO {
                            out[(pos[i], pos[j])] = v;
                        }
                    }
                }
                out
            })
            .collect();
        EquivariantObject { dims, r }
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn graded_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn r(&self, g: usize) -> &CMatrix {
        &self.r[g]
    }

    /// Degree of each basis vector.
    pub fn degrees(&self) -> Vec<usize> {
        self.dims.iter().enumerate().flat_map(|(x, &k)| std::iter::repeat_n(x, k)).collect()
    }

    /// Basis range of block `x`.
    pub fn block(&self, x: usize) -> std::ops::Range<usize> {
        let start: usize = self.dims[..x].iter().sum();
        start..start + self.dims[x]
    }

    /// Blocks with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&x| self.dims[x] > 0).collect()
    }

    /// `tr R(g)` restricted to block `x`.
    pub fn block_trace(&self, g: usize, x: usize) -> C64 {
        self.block(x).map(|i| self.r[g][(i, i)]).sum()
    }
}

fn require_pointed(d: &CrossedActionData) -> Result<()> {
    if d.ring.is_pointed() {
        Ok(())
    } else {
        Err(Error::Validation("equivariant objects are only modelled over pointed rings".into()))
    }
}

/// Checks block support, `R(e) = I` and `R(g)R(h) = R(hg)` within `round_eps`.
pub fn verify_equivariant(d: &CrossedActionData, x: &EquivariantObject, tol: &Tolerance) -> Report {
    let mut rep = Report::with_limit(8);
    let g = d.mp.g();
    if x.dims.len() != d.ring.rank() || x.r.len() != g.order() {
        rep.fail("shape", "object does not match the crossed action");
        return rep;
    }
    let degs = x.degrees();
    let n = x.dim();
    for a in g.elements() {
        for i in 0..n {
            for j in 0..n {
                if x.r[a][(i, j)].norm() > tol.round_eps && degs[i] != d.rho(a, degs[j]) {
                    rep.fail_with("block", || format!("R({a}) maps block {} outside block {}", degs[j], d.rho(a, degs[j])));
                }
            }
        }
    }
    if !x.r[g.identity()].approx_eq(&CMatrix::identity(n), tol.round_eps) {
        rep.fail("identity", "R(e) is not the identity");
    }
    for a in g.elements() {
        for b in g.elements() {
            if !(&x.r[a] * &x.r[b]).approx_eq(&x.r[g.mul(b, a)], tol.round_eps) {
                rep.fail_with("action", || format!("R({a})R({b}) != R({b}·{a})"));
                if rep.saturated() {
                    return rep;
                }
            }
        }
    }
    rep
}

/// The unit object: dimension 1 at the unit, `R ≡ 1`.
pub fn unit_object(d: &CrossedActionData) -> EquivariantObject {
    let mut dims = vec![0; d.ring.rank()];
    dims[d.ring.unit()] = 1;
    EquivariantObject { dims, r: vec![CMatrix::identity(1); d.mp.g().order()] }
}

/// `k[G]` with `deg(e_g) = ρ^g(p)` and `R(h) e_g = e_{gh}`.
pub fn induced_object(d: &CrossedActionData, p: usize) -> EquivariantObject {
    let g = d.mp.g();
    let degrees: Vec<usize> = g.elements().map(|x| d.rho(x, p)).collect();
    let r = g
        .elements()
        .map(|h| CMatrix::permutation(&g.elements().map(|x| g.mul(x, h)).collect::<Vec<_>>()))
        .collect();
    EquivariantObject::from_graded_basis(d.ring.rank(), &degrees, r)
}

/// The sum of the induced objects over all basis points.
pub fn regular_object(d: &CrossedActionData) -> EquivariantObject {
    let parts: Vec<EquivariantObject> = (0..d.ring.rank()).map(|p| induced_object(d, p)).collect();
    direct_sum(d, &parts)
}

/// One dimension per basis element, `R(g)` the permutation `x ↦ ρ^g(x)`.
pub fn permutation_object(d: &CrossedActionData) -> EquivariantObject {
    let n = d.ring.rank();
    let r = d.mp.g().elements().map(|g| CMatrix::permutation(&d.rho[g])).collect();
    EquivariantObject { dims: vec![1; n], r }
}

pub fn direct_sum(d: &CrossedActionData, parts: &[EquivariantObject]) -> EquivariantObject {
    let mut degrees = Vec::new();
    for p in parts {
        degrees.extend(p.degrees());
    }
    let n = degrees.len();
    let r = d
        .mp
        .g()
        .elements()
        .map(|g| {
            let mut m = CMatrix::zeros(n, n);
            let mut off = 0;
            for p in parts {
                let k = p.dim();
                for i in 0..k {
                    for j in 0..k {
                        m[(off + i, off + j)] = p.r[g][(i, j)];
                    }
                }
                off += k;
            }
            m
        })
        .collect();
    EquivariantObject::from_graded_basis(d.ring.rank(), &degrees, r)
}

/// `X ⊗ Y` with `R(g) = R_X(t▷g) ⊗ R_Y(g)` on `X_x ⊗ Y_y`, `t = deg y`.
pub fn tensor_equivariant(d: &CrossedActionData, x: &EquivariantObject, y: &EquivariantObject) -> Result<EquivariantObject> {
    require_pointed(d)?;
    let (dx, dy) = (x.degrees(), y.degrees());
    let (nx, ny) = (dx.len(), dy.len());
    let degrees: Vec<usize> = (0..nx * ny).map(|k| d.pointed_product(dx[k / ny], dy[k % ny])).collect();
    let r = d
        .mp
        .g()
        .elements()
        .map(|g| {
            let mut m = CMatrix::zeros(nx * ny, nx * ny);
            for j in 0..ny {
                let t = d.deg[dy[j]];
                let rx = &x.r[d.mp.rhd(t, g)];
                let ry = &y.r[g];
                for i in 0..nx {
                    let col = i * ny + j;
                    for a in 0..nx {
                        let u = rx[(a, i)];
                        if u == ZERO {
                            continue;
                        }
                        for b in 0..ny {
                            let v = ry[(b, j)];
                            if v != ZERO {
                                m[(a * ny + b, col)] = u * v;
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    Ok(EquivariantObject::from_graded_basis(d.ring.rank(), &degrees, r))
}

/// Basis of the graded intertwiners `X → Y`, as `dim Y × dim X` matrices.
/// Commuting with `R(g)` for a generating set suffices since `R` is an anti-homomorphism.
pub fn hom_basis(d: &CrossedActionData, x: &EquivariantObject, y: &EquivariantObject, tol: &Tolerance) -> Result<Vec<CMatrix>> {
    let nblocks = d.ring.rank();
    let (nx, ny) = (x.dim(), y.dim());
    let mut unknowns = Vec::new();
    for b in 0..nblocks {
        for i in y.block(b) {
            for j in x.block(b) {
                unknowns.push((i, j));
            }
        }
    }
    if unknowns.is_empty() {
        return Ok(Vec::new());
    }
    let gens = d.mp.g().generators();
    let rows = gens.len() * ny * nx;
    let mut sys = CMatrix::zeros(rows.max(1), unknowns.len());
    for (gi, &g) in gens.iter().enumerate() {
        let (rx, ry) = (&x.r[g], &y.r[g]);
        let base = gi * ny * nx;
        for (col, &(i, j)) in unknowns.iter().enumerate() {
            // R_Y(g) E_ij − E_ij R_X(g)
            for a in 0..ny {
                let v = ry[(a, i)];
                if v != ZERO {
                    sys[(base + a * nx + j, col)] += v;
                }
            }
            for b in 0..nx {
                let v = rx[(j, b)];
                if v != ZERO {
                    sys[(base + i * nx + b, col)] -= v;
                }
            }
        }
    }
    let ns = nullspace(&sys, tol)?;
    Ok((0..ns.cols())
        .map(|k| {
            let mut f = CMatrix::zeros(ny, nx);
            for (u, &(i, j)) in unknowns.iter().enumerate() {
                f[(i, j)] = ns[(u, k)];
            }
            f
        })
        .collect())
}

/// `dim Hom(X, Y)`.
pub fn hom_equivariant(d: &CrossedActionData, x: &EquivariantObject, y: &EquivariantObject, tol: &Tolerance) -> Result<usize> {
    Ok(hom_basis(d, x, y, tol)?.len())
}

/// The subobject on the invariant subspace spanned by the columns of `w`.
fn restrict(x: &EquivariantObject, w: &CMatrix, tol: &Tolerance) -> Result<EquivariantObject> {
    let n = x.dim();
    let mut cols: Vec<Vec<C64>> = Vec::new();
    let mut dims = vec![0; x.dims.len()];
    for b in 0..x.dims.len() {
        let range = x.block(b);
        if range.is_empty() {
            continue;
        }
        let part = w.submatrix(range.clone(), 0..w.cols());
        let q = orthonormal_basis(&part, 1e-8);
        dims[b] = q.cols();
        for k in 0..q.cols() {
            let mut v = vec![ZERO; n];
            for (t, i) in range.clone().enumerate() {
                v[i] = q[(t, k)];
            }
            cols.push(v);
        }
    }
    if cols.len() != w.cols() {
        return Err(Error::Numerical(format!("subspace of dim {} splits into {} graded vectors", w.cols(), cols.len())));
    }
    let q = CMatrix::from_columns(n, &cols);
    let qh = q.adjoint();
    let r: Vec<CMatrix> = x.r.iter().map(|m| &(&qh * m) * &q).collect();
    for (g, m) in r.iter().enumerate() {
        if !(&q * m).approx_eq(&(&x.r[g] * &q), tol.round_eps) {
            return Err(Error::Numerical("split subspace is not invariant".into()));
        }
    }
    Ok(EquivariantObject { dims, r })
}

fn split_simple(d: &CrossedActionData, x: &EquivariantObject, rng: &mut ChaCha8Rng, tol: &Tolerance) -> Result<Vec<EquivariantObject>> {
    let basis = hom_basis(d, x, x, tol)?;
    if basis.len() <= 1 {
        return Ok(vec![x.clone()]);
    }
    for _ in 0..32 {
        let mut t = CMatrix::zeros(x.dim(), x.dim());
        for b in &basis {
            let c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            t = &t + &b.scale(c);
        }
        let blocks = match gen_eigensplit(&t, tol) {
            Ok(b) if b.len() >= 2 => b,
            Ok(_) | Err(Error::Unsplittable) | Err(Error::DegenerateRank { .. }) => continue,
            Err(e) => return Err(e),
        };
        let mut out = Vec::new();
        for blk in blocks {
            let sub = restrict(x, &blk.basis, tol)?;
            out.extend(split_simple(d, &sub, rng, tol)?);
        }
        return Ok(out);
    }
    Err(Error::Numerical("commutant element did not split after 32 reseeds".into()))
}

/// Splits `X` into simple summands and groups them up to isomorphism.
/// Multiplicities are `dim Hom(P, X)`.
pub fn decompose_equivariant(d: &CrossedActionData, x: &EquivariantObject, seed: u64, tol: &Tolerance) -> Result<Vec<(EquivariantObject, usize)>> {
    require_pointed(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pieces = split_simple(d, x, &mut rng, tol)?;
    let mut classes: Vec<EquivariantObject> = Vec::new();
    for p in pieces {
        let mut known = false;
        for c in &classes {
            if hom_equivariant(d, c, &p, tol)? > 0 {
                known = true;
                break;
            }
        }
        if !known {
            classes.push(p);
        }
    }
    let mut out = Vec::new();
    let mut total = 0;
    for c in classes {
        let m = hom_equivariant(d, &c, x, tol)?;
        total += m * c.dim();
        out.push((c, m));
    }
    if total != x.dim() {
        return Err(Error::Numerical(format!("summands account for dimension {total} of {}", x.dim())));
    }
    Ok(out)
}

/// A simple equivariant object with the data that identifies it: the least
/// point of its orbit and its character on the stabilizer of that point.
#[derive(Debug, Clone)]
pub struct EquivariantSimple {
    pub object: EquivariantObject,
    pub point: usize,
    pub stabilizer: Vec<usize>,
    pub character: Vec<C64>,
}

impl EquivariantSimple {
    fn key(&self, tol: &Tolerance) -> (usize, usize, Vec<(i64, i64)>) {
        let q = |v: f64| (v / tol.round_eps).round() as i64;
        (self.point, self.object.dim(), self.character.iter().map(|c| (-q(c.re), q(c.im))).collect())
    }

    /// Multiplicity of this simple in `x`, by the stabilizer character inner product.
    pub fn multiplicity_in(&self, x: &EquivariantObject, tol: &Tolerance) -> Result<usize> {
        let k = self.stabilizer.len() as f64;
        let m: C64 = self
            .stabilizer
            .iter()
            .zip(&self.character)
            .map(|(&g, &chi)| x.block_trace(g, self.point) * chi.conj())
            .sum::<C64>()
            / k;
        let rounded = m.re.round();
        if (m - C64::new(rounded, 0.0)).norm() > tol.round_eps || rounded < 0.0 {
            return Err(Error::Numerical(format!("multiplicity {m} is not a non-negative integer")));
        }
        Ok(rounded as usize)
    }
}

/// All simple equivariant objects, found by decomposing one induced object per
/// orbit, in canonical order: the unit first, then by (orbit point, dimension,
/// stabilizer character).
pub fn equivariant_simples(d: &CrossedActionData, seed: u64, tol: &Tolerance) -> Result<Vec<EquivariantSimple>> {
    require_pointed(d)?;
    let mut simples = Vec::new();
    for (k, orbit) in d.orbits()?.into_iter().enumerate() {
        let p = orbit.orbit[0];
        let induced = induced_object(d, p);
        for (obj, _) in decompose_equivariant(d, &induced, seed.wrapping_add(k as u64), tol)? {
            let character = orbit.stabilizer.members.iter().map(|&g| obj.block_trace(g, p)).collect();
            simples.push(EquivariantSimple { object: obj, point: p, stabilizer: orbit.stabilizer.members.clone(), character });
        }
    }
    let is_unit = |s: &EquivariantSimple| s.point == d.ring.unit() && s.object.dim() == 1 && s.character.iter().all(|c| (c - ONE).norm() < tol.round_eps);
    simples.sort_by(|a, b| is_unit(b).cmp(&is_unit(a)).then_with(|| a.key(tol).cmp(&b.key(tol))));
    if !simples.first().is_some_and(is_unit) {
        return Err(Error::Internal("no simple is isomorphic to the unit".into()));
    }
    Ok(simples)
}

/// Simple objects as an ordered list plus the fusion rules among them.
pub fn equivariantization_ring(d: &CrossedActionData, seed: u64, tol: &Tolerance) -> Result<BasedRing> {
    Ok(equivariantization(d, seed, tol)?.0)
}

/// The ring together with the simples that index its basis.
pub fn equivariantization(d: &CrossedActionData, seed: u64, tol: &Tolerance) -> Result<(BasedRing, Vec<EquivariantSimple>)> {
    let simples = equivariant_simples(d, seed, tol)?;
    let n = simples.len();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let t = tensor_equivariant(d, &simples[i].object, &simples[j].object)?;
            let mut accounted = 0;
            for (k, s) in simples.iter().enumerate() {
                let m = s.multiplicity_in(&t, tol)?;
                if m > 0 {
                    accounted += m * s.object.dim();
                    entries.push((i, j, k, m as u32));
                }
            }
            if accounted != t.dim() {
                return Err(Error::Numerical(format!("simples {i}⊗{j}: constituents cover {accounted} of {}", t.dim())));
            }
        }
    }
    let unit = 0;
    let mut dual = vec![usize::MAX; n];
    for &(i, j, k, m) in &entries {
        if k == unit && m == 1 {
            if dual[i] != usize::MAX {
                return Err(Error::Internal(format!("simple {i} has two duals")));
            }
            dual[i] = j;
        }
    }
    if dual.contains(&usize::MAX) {
        return Err(Error::Internal("a simple has no dual".into()));
    }
    let labels = simples
        .iter()
        .enumerate()
        .map(|(i, s)| format!("X{i}[{}:{}]", d.ring.label(s.point), s.object.dim()))
        .collect();
    let ring = BasedRing::new(labels, unit, dual, &entries)?;
    let fp: usize = simples.iter().map(|s| s.object.dim() * s.object.dim()).sum();
    if fp != d.mp.order() {
        return Err(Error::Numerical(format!("Σ dim² = {fp} but |G|·|Γ| = {}", d.mp.order())));
    }
    Ok((ring, simples))
}

/// The `G⋈Γ`-graded ring on `G × basis(K)`:
/// `(g,x)(h,y) = (g(t▷h), ρ^h(x)·y)` for `x` of degree `t`, graded by `(g, deg x)`.
pub fn dual_graded_ring(d: &CrossedActionData) -> Result<(BasedRing, GradingMap)> {
    let group = bicrossed_group(&d.mp)?;
    let g = d.mp.g();
    let n = d.ring.rank();
    let idx = |a: usize, x: usize| a * n + x;
    let mut entries = Vec::new();
    for a in g.elements() {
        for x in 0..n {
            let t = d.deg[x];
            for b in g.elements() {
                let k = g.mul(a, d.mp.rhd(t, b));
                let rx = d.rho(b, x);
                for y in 0..n {
                    for &(z, m) in d.ring.product(rx, y) {
                        entries.push((idx(a, x), idx(b, y), idx(k, z), m));
                    }
                }
            }
        }
    }
    let size = g.order() * n;
    let unit = idx(g.identity(), d.ring.unit());
    let mut dual = vec![usize::MAX; size];
    for &(p, q, z, m) in &entries {
        if z == unit && m == 1 && dual[p] == usize::MAX {
            dual[p] = q;
        }
    }
    if dual.contains(&usize::MAX) {
        return Err(Error::Structural("some basis element has no dual".into()));
    }
    let labels = (0..size).map(|i| format!("({},{})", g.label(i / n), d.ring.label(i % n))).collect();
    let ring = BasedRing::new(labels, unit, dual, &entries)?;
    let deg = (0..size).map(|i| d.mp.pair_index(i / n, d.deg[i % n])).collect();
    let grading = GradingMap { group, deg };
    if !check_grading(&ring, &grading) {
        return Err(Error::Structural("the product rule does not respect the G⋈Γ degrees".into()));
    }
    Ok((ring, grading))
}
