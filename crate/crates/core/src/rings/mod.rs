//! Based (fusion) rings with non-negative integer structure constants.

mod iso;

pub use iso::{based_ring_isomorphism, is_isomorphism};

use crate::error::{Error, Result};
use crate::groups::CayleyGroup;
use crate::report::Report;
use serde::Serialize;
use std::collections::BTreeSet;

/// A based ring: basis labels, a unit, a duality involution and the
/// multiplicities `N_{xy}^z` of `z` in `x·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    /// `prod[x * n + y]` lists `(z, N_{xy}^z)` with positive multiplicity, sorted by `z`.
    prod: Vec<Vec<(usize, u32)>>,
}

impl BasedRing {
    /// Builds a ring from sparse `(x, y, z, m)` entries. Only shapes are
    /// checked here; [`verify_based_ring`] checks the axioms.
    pub fn new(labels: Vec<String>, unit: usize, dual: Vec<usize>, entries: &[(usize, usize, usize, u32)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 || unit >= n {
            return Err(Error::Validation("unit index out of range".into()));
        }
        if dual.len() != n || dual.iter().any(|&d| d >= n) {
            return Err(Error::Validation("dual table has the wrong shape".into()));
        }
        let mut prod = vec![Vec::new(); n * n];
        for &(x, y, z, m) in entries {
            if x >= n || y >= n || z >= n {
                return Err(Error::Validation(format!("entry ({x},{y},{z}) out of range")));
            }
            if m == 0 {
                return Err(Error::Validation(format!("entry ({x},{y},{z}) has zero multiplicity")));
            }
            let cell: &mut Vec<(usize, u32)> = &mut prod[x * n + y];
            if cell.iter().any(|&(w, _)| w == z) {
                return Err(Error::Validation(format!("entry ({x},{y},{z}) given twice")));
            }
            cell.push((z, m));
        }
        for cell in &mut prod {
            cell.sort_unstable();
        }
        Ok(BasedRing { labels, unit, dual, prod })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, x: usize) -> usize {
        self.dual[x]
    }

    pub fn dual_table(&self) -> &[usize] {
        &self.dual
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Components of `x·y` as `(z, N_{xy}^z)`.
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> &[(usize, u32)] {
        &self.prod[x * self.rank() + y]
    }

    /// `N_{xy}^z`
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        let cell = self.product(x, y);
        cell.binary_search_by_key(&z, |&(w, _)| w).map(|i| cell[i].1).unwrap_or(0)
    }

    /// All `(x, y, z, m)` entries in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, u32)> {
        let n = self.rank();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                out.extend(self.product(x, y).iter().map(|&(z, m)| (x, y, z, m)));
            }
        }
        out
    }

    /// The ring with basis relabelled by `perm` (old index `i` becomes `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> BasedRing {
        let n = self.rank();
        let mut labels = vec![String::new(); n];
        let mut dual = vec![0; n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            dual[perm[i]] = perm[self.dual[i]];
        }
        let entries: Vec<_> = self.entries().into_iter().map(|(x, y, z, m)| (perm[x], perm[y], perm[z], m)).collect();
        BasedRing::new(labels, perm[self.unit], dual, &entries).expect("relabelling preserves shape")
    }

    /// Restriction to a subset closed under products and duals, indexed in the
    /// order of `members`.
    pub fn subring(&self, members: &[usize]) -> Result<BasedRing> {
        let n = self.rank();
        let mut pos = vec![usize::MAX; n];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        if pos[self.unit] == usize::MAX {
            return Err(Error::Validation("subring must contain the unit".into()));
        }
        let mut entries = Vec::new();
        for &x in members {
            if pos[self.dual[x]] == usize::MAX {
                return Err(Error::Validation(format!("subset not closed under duals at {}", self.labels[x])));
            }
            for &y in members {
                for &(z, m) in self.product(x, y) {
                    if pos[z] == usize::MAX {
                        return Err(Error::Validation("subset not closed under products".into()));
                    }
                    entries.push((pos[x], pos[y], pos[z], m));
                }
            }
        }
        BasedRing::new(
            members.iter().map(|&m| self.labels[m].clone()).collect(),
            pos[self.unit],
            members.iter().map(|&m| pos[self.dual[m]]).collect(),
            &entries,
        )
    }

    /// Smallest subset containing `seeds` and the unit that is closed under
    /// product supports and duals.
    pub fn generated_subring(&self, seeds: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = seeds.iter().copied().collect();
        set.insert(self.unit);
        loop {
            let current: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &x in &current {
                set.insert(self.dual[x]);
                for &y in &current {
                    set.extend(self.product(x, y).iter().map(|&(z, _)| z));
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    /// Every basis element is invertible (`x·x* = 1`).
    pub fn is_pointed(&self) -> bool {
        (0..self.rank()).all(|x| self.product(x, self.dual[x]) == [(self.unit, 1)])
    }
}

/// `ℤ[G]` with basis `G`, `g·h = gh` and `g* = g⁻¹`.
pub fn group_ring(g: &CayleyGroup) -> BasedRing {
    let entries: Vec<_> = g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).map(|(a, b)| (a, b, g.mul(a, b), 1)).collect();
    BasedRing::new(g.labels().to_vec(), g.identity(), g.elements().map(|a| g.inv(a)).collect(), &entries)
        .expect("group ring has a valid shape")
}

/// Checks associativity, unit, rigidity and dual compatibility exhaustively.
pub fn verify_based_ring(r: &BasedRing) -> Report {
    let mut rep = Report::with_limit(32);
    let n = r.rank();
    let one = r.unit;
    for x in 0..n {
        if r.dual[r.dual[x]] != x {
            rep.fail_with("dual", || format!("dual is not an involution at {}", r.labels[x]));
        }
        for y in 0..n {
            let expect: &[(usize, u32)] = if x == y { &[(x, 1)] } else { &[] };
            let left = r.product(one, x).iter().filter(|&&(z, _)| z == y).copied().collect::<Vec<_>>();
            let right = r.product(x, one).iter().filter(|&&(z, _)| z == y).copied().collect::<Vec<_>>();
            if left.as_slice() != expect || right.as_slice() != expect {
                rep.fail_with("unit", || format!("N_(1,{x})^{y} or N_({x},1)^{y} differs from δ"));
            }
            let rig = r.n(x, y, one);
            if rig != u32::from(y == r.dual[x]) {
                rep.fail_with("rigidity", || format!("N_({x},{y})^1 = {rig}"));
            }
        }
    }
    if !rep.valid {
        return rep;
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = r.n(x, y, z);
                let b = r.n(r.dual[y], r.dual[x], r.dual[z]);
                let c = r.n(r.dual[x], z, y);
                if a != b || a != c {
                    rep.fail_with("dual", || format!("N_({x},{y})^{z} = {a}, N_(y*,x*)^(z*) = {b}, N_(x*,z)^y = {c}"));
                }
            }
        }
    }
    let mut lhs = vec![0u64; n];
    let mut rhs = vec![0u64; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                lhs.iter_mut().for_each(|v| *v = 0);
                rhs.iter_mut().for_each(|v| *v = 0);
                for &(w, m) in r.product(x, y) {
                    for &(v, k) in r.product(w, z) {
                        lhs[v] += u64::from(m) * u64::from(k);
                    }
                }
                for &(w, m) in r.product(y, z) {
                    for &(v, k) in r.product(x, w) {
                        rhs[v] += u64::from(m) * u64::from(k);
                    }
                }
                if lhs != rhs {
                    rep.fail_with("associativity", || format!("(x·y)·z != x·(y·z) at ({x},{y},{z})"));
                    if rep.saturated() {
                        return rep;
                    }
                }
            }
        }
    }
    rep
}

/// Frobenius–Perron dimensions, from the Perron vector of `Σ_x N_x`.
///
/// For a fusion ring every `N_x` shares that positive eigenvector, so with the
/// unit coordinate normalised to 1 it is exactly the dimension vector.
pub fn fp_dimensions(r: &BasedRing) -> Result<Vec<f64>> {
    let n = r.rank();
    // (T d)_z = Σ_{x,y} N_{xy}^z d_y
    let mut t = vec![0f64; n * n];
    for x in 0..n {
        for y in 0..n {
            for &(z, m) in r.product(x, y) {
                t[z * n + y] += f64::from(m);
            }
        }
    }
    let mut d = vec![1f64; n];
    let mut lambda = 0f64;
    for _ in 0..100_000 {
        let next: Vec<f64> = (0..n).map(|z| (0..n).map(|y| t[z * n + y] * d[y]).sum()).collect();
        let norm = next.iter().fold(0f64, |a, &b| a.max(b));
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Numerical("power iteration lost positivity".into()));
        }
        let next: Vec<f64> = next.into_iter().map(|v| v / norm).collect();
        let delta = next.iter().zip(&d).fold(0f64, |a, (p, q)| a.max((p - q).abs()));
        d = next;
        let converged = (norm - lambda).abs() <= 1e-10 * norm && delta <= 1e-10;
        lambda = norm;
        if converged {
            let u = d[r.unit];
            return Ok(d.iter().map(|v| v / u).collect());
        }
    }
    Err(Error::Numerical("power iteration did not converge in 100000 steps".into()))
}

/// A map from basis elements to group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingMap {
    pub group: CayleyGroup,
    pub deg: Vec<usize>,
}

/// Witness report for [`check_grading`].
pub fn grading_report(r: &BasedRing, grading: &GradingMap) -> Report {
    let mut rep = Report::with_limit(16);
    let g = &grading.group;
    if grading.deg.len() != r.rank() || grading.deg.iter().any(|&d| d >= g.order()) {
        rep.fail("shape", "degree table does not match the basis");
        return rep;
    }
    let deg = &grading.deg;
    if deg[r.unit] != g.identity() {
        rep.fail("unit", "the unit is not in degree e");
    }
    for x in 0..r.rank() {
        if deg[r.dual[x]] != g.inv(deg[x]) {
            rep.fail_with("dual", || format!("deg({}*) != deg({})^-1", r.labels[x], r.labels[x]));
        }
        for y in 0..r.rank() {
            let want = g.mul(deg[x], deg[y]);
            for &(z, _) in r.product(x, y) {
                if deg[z] != want {
                    rep.fail_with("product", || {
                        format!("{} occurs in {}·{} but deg differs", r.labels[z], r.labels[x], r.labels[y])
                    });
                }
            }
        }
    }
    rep
}

/// True iff products, unit and duals respect the degrees.
pub fn check_grading(r: &BasedRing, grading: &GradingMap) -> bool {
    grading_report(r, grading).valid
}

/// Every group element is the degree of some basis element.
pub fn is_faithful(grading: &GradingMap) -> bool {
    let hit: BTreeSet<usize> = grading.deg.iter().copied().collect();
    hit.len() == grading.group.order()
}

/// Basis elements of degree `e`.
pub fn neutral_component(grading: &GradingMap) -> Vec<usize> {
    let e = grading.group.identity();
    (0..grading.deg.len()).filter(|&x| grading.deg[x] == e).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

/// The universal grading: the least congruence putting all constituents of
/// each product in one block. Blocks form the universal grading group, with
/// the unit block at index 0 and the rest ordered by least member.
pub fn universal_grading(r: &BasedRing) -> Result<GradingMap> {
    let n = r.rank();
    let mut uf = UnionFind((0..n).collect());
    for x in 0..n {
        for y in 0..n {
            let cell = r.product(x, y);
            if let Some(&(z0, _)) = cell.first() {
                for &(z, _) in &cell[1..] {
                    uf.union(z0, z);
                }
            }
        }
    }
    let first = |x: usize, y: usize| r.product(x, y).first().map(|&(z, _)| z);
    loop {
        let mut changed = false;
        for x in 0..n {
            let rx = uf.find(x);
            if rx == x {
                continue;
            }
            for y in 0..n {
                if let (Some(a), Some(b)) = (first(x, y), first(rx, y)) {
                    changed |= uf.union(a, b);
                }
                if let (Some(a), Some(b)) = (first(y, x), first(y, rx)) {
                    changed |= uf.union(a, b);
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let unit_root = roots[r.unit];
    let mut order: Vec<usize> = vec![unit_root];
    for x in 0..n {
        if !order.contains(&roots[x]) {
            order.push(roots[x]);
        }
    }
    for v in roots.iter_mut() {
        *v = order.iter().position(|o| o == v).expect("root is listed");
    }
    let k = order.len();
    let rep: Vec<usize> = (0..k).map(|b| roots.iter().position(|&v| v == b).expect("block is inhabited")).collect();
    let mut table = vec![vec![0; k]; k];
    for a in 0..k {
        for b in 0..k {
            let z = first(rep[a], rep[b]).ok_or_else(|| Error::Internal("empty product in a based ring".into()))?;
            table[a][b] = roots[z];
        }
    }
    for x in 0..n {
        for y in 0..n {
            for &(z, _) in r.product(x, y) {
                if roots[z] != table[roots[x]][roots[y]] {
                    return Err(Error::Internal("block product is not well defined".into()));
                }
            }
        }
    }
    let labels = (0..k).map(|b| format!("u{b}")).collect();
    let group = CayleyGroup::from_table(table, Some(labels))
        .map_err(|e| Error::Internal(format!("grading blocks are not a group: {e}")))?;
    Ok(GradingMap { group, deg: roots })
}

/// The adjoint subring: generated by the constituents of all `x·x*`.
pub fn adjoint_support(r: &BasedRing, within: &[usize]) -> Vec<usize> {
    let seeds: Vec<usize> = within
        .iter()
        .flat_map(|&x| r.product(x, r.dual[x]).iter().map(|&(z, _)| z))
        .collect();
    r.generated_subring(&seeds)
}

/// The descending chain `C⁽⁰⁾ ⊇ C⁽¹⁾ ⊇ …` of iterated adjoint subrings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralSeries {
    /// Entries up to stabilization; the last entry is the stable one.
    pub chain: Vec<Vec<usize>>,
    pub is_nilpotent: bool,
    /// First `n` with `C⁽ⁿ⁾ = {1}`, when nilpotent.
    pub class: Option<usize>,
}

pub fn upper_central_series(r: &BasedRing) -> CentralSeries {
    let mut chain = vec![(0..r.rank()).collect::<Vec<_>>()];
    loop {
        let last = chain.last().expect("chain is never empty");
        if last.len() == 1 {
            let class = chain.len() - 1;
            return CentralSeries { chain, is_nilpotent: true, class: Some(class) };
        }
        let next = adjoint_support(r, last);
        if &next == last {
            return CentralSeries { chain, is_nilpotent: false, class: None };
        }
        chain.push(next);
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn rep_s3() -> BasedRing {
        let l = |s: &str| s.to_string();
        let e = [
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 2, 1),
            (2, 0, 2, 1),
            (2, 1, 2, 1),
            (2, 2, 0, 1),
            (2, 2, 1, 1),
            (2, 2, 2, 1),
        ];
        BasedRing::new(vec![l("1"), l("sgn"), l("V")], 0, vec![0, 1, 2], &e).unwrap()
    }

    #[test]
    fn group_rings_are_valid() {
        assert!(verify_based_ring(&group_ring(&CayleyGroup::cyclic(2))).valid);
        assert!(verify_based_ring(&group_ring(&CayleyGroup::symmetric(3))).valid);
        assert_eq!(group_ring(&CayleyGroup::cyclic(1)).rank(), 1);
    }

    #[test]
    fn rep_s3_is_valid() {
        assert!(verify_based_ring(&rep_s3()).valid);
    }

    #[test]
    fn injected_self_product_on_c2_is_fibonacci() {
        // g·g = 1 + g is still associative and rigid
        let r = group_ring(&CayleyGroup::cyclic(2));
        let mut e = r.entries();
        e.push((1, 1, 1, 1));
        let fib = BasedRing::new(r.labels().to_vec(), 0, vec![0, 1], &e).unwrap();
        assert!(verify_based_ring(&fib).valid);
        let d = fp_dimensions(&fib).unwrap();
        assert!((d[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn injected_associativity_failure() {
        // in Z[C3], a·a = b + a gives (a·a)·b = 1 + a but a·(a·b) = a
        let r = group_ring(&CayleyGroup::cyclic(3));
        let mut e = r.entries();
        e.push((1, 1, 1, 1));
        let bad = BasedRing::new(r.labels().to_vec(), 0, vec![0, 2, 1], &e).unwrap();
        let rep = verify_based_ring(&bad);
        assert!(!rep.valid);
        assert!(rep.has_check("associativity"));
        assert!(rep.has_check("dual"));
    }

    #[test]
    fn fp_dims() {
        let d = fp_dimensions(&group_ring(&CayleyGroup::symmetric(3))).unwrap();
        assert!(d.iter().all(|v| (v - 1.0).abs() < 1e-9));
        let d = fp_dimensions(&rep_s3()).unwrap();
        assert!((d[0] - 1.0).abs() < 1e-9 && (d[1] - 1.0).abs() < 1e-9 && (d[2] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn gradings() {
        let g = CayleyGroup::symmetric(3);
        let zg = group_ring(&g);
        assert!(check_grading(&zg, &GradingMap { group: g.clone(), deg: (0..6).collect() }));
        let c2 = CayleyGroup::cyclic(2);
        let r = rep_s3();
        assert!(check_grading(&r, &GradingMap { group: c2.clone(), deg: vec![0, 0, 0] }));
        assert!(!check_grading(&r, &GradingMap { group: c2, deg: vec![0, 0, 1] }));
    }

    #[test]
    fn universal_gradings() {
        let g = CayleyGroup::symmetric(3);
        let u = universal_grading(&group_ring(&g)).unwrap();
        assert_eq!(u.group.order(), 6);
        assert!(is_faithful(&u));
        let u = universal_grading(&rep_s3()).unwrap();
        assert_eq!(u.group.order(), 1);
        let u = universal_grading(&group_ring(&CayleyGroup::cyclic(4))).unwrap();
        assert_eq!(u.group.order(), 4);
        assert!(u.group.is_abelian());
    }

    #[test]
    fn central_series() {
        let s = upper_central_series(&group_ring(&CayleyGroup::symmetric(3)));
        assert_eq!((s.is_nilpotent, s.class), (true, Some(1)));
        let s = upper_central_series(&rep_s3());
        assert!(!s.is_nilpotent);
        assert_eq!(s.chain.last().unwrap().len(), 3);
        let s = upper_central_series(&group_ring(&CayleyGroup::cyclic(1)));
        assert_eq!(s.class, Some(0));
    }

    #[test]
    fn universal_neutral_block_is_adjoint() {
        for r in [rep_s3(), group_ring(&CayleyGroup::alternating(4))] {
            let u = universal_grading(&r).unwrap();
            assert_eq!(neutral_component(&u), adjoint_support(&r, &(0..r.rank()).collect::<Vec<_>>()));
        }
    }
}
