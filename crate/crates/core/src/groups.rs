//! Finite groups as explicit Cayley tables.
//!
//! Permutations act on the left and compose right-to-left: `(p * q)(i) = p(q(i))`.
//! Every action table derived elsewhere in the crate inherits this convention.

use crate::error::{Error, Result};
use crate::report::Report;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

/// Default cap on group orders (Cayley tables are quadratic in memory).
pub const DEFAULT_ORDER_BOUND: usize = 10080;

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    order: usize,
    mul: Vec<u16>,
    identity: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
    perms: Option<Vec<Vec<usize>>>,
}

impl CayleyGroup {
    /// Builds a group from a multiplication table, validating every group axiom.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Validation("a group has at least one element".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::SizeBound { order: n, bound: u16::MAX as usize });
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::Validation("multiplication table is not a closed square table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Validation("no two-sided identity".into()))?;
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::Validation(format!("element {x} has no inverse")))?;
            inv[x] = y;
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        if labels.len() != n {
            return Err(Error::Validation("label count does not match the order".into()));
        }
        let g = CayleyGroup {
            order: n,
            mul: table.iter().flatten().map(|&x| x as u16).collect(),
            identity,
            inv,
            labels,
            perms: None,
        };
        let report = g.validate();
        if !report.valid {
            return Err(Error::Validation(format!("{}", report.witnesses[0])));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Permutation images, when the group was built from permutations.
    pub fn perm(&self, a: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[a].as_slice())
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Index of the element with the given permutation images.
    pub fn find_perm(&self, images: &[usize]) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|p| p == images)
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn validate(&self) -> Report {
        let mut report = Report::with_limit(16);
        let n = self.order;
        let e = self.identity;
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                report.fail("identity", format!("e*{x} or {x}*e differs from {x}"));
            }
            if self.mul(self.inv(x), x) != e || self.mul(x, self.inv(x)) != e {
                report.fail("inverse", format!("inv({x}) is not an inverse"));
            }
        }
        'outer: for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        report.fail("associativity", format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                        if report.saturated() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        report
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The opposite group: same elements, `a *op b = b * a`.
    pub fn opposite(&self) -> CayleyGroup {
        let n = self.order;
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        CayleyGroup { mul, ..self.clone() }
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = subgroup_closure(self, &[]);
        for x in 0..self.order {
            if span.members.binary_search(&x).is_err() {
                gens.push(x);
                span = subgroup_closure(self, &gens);
            }
            if span.order() == self.order {
                break;
            }
        }
        gens
    }

    /// Conjugacy classes, each sorted, ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        classes_within(self, &(0..self.order).collect::<Vec<_>>())
    }

    pub fn cyclic(n: usize) -> CayleyGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|i| format!("c^{i}")).collect();
        CayleyGroup::from_table(table, Some(labels)).expect("cyclic group table is valid")
    }

    /// Direct product with element `(a, b)` at index `a * |H| + b`.
    pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> CayleyGroup {
        let m = h.order;
        let n = g.order * m;
        let table = (0..n)
            .map(|x| (0..n).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        let labels = (0..n).map(|x| format!("({},{})", g.label(x / m), h.label(x % m))).collect();
        CayleyGroup::from_table(table, Some(labels)).expect("direct product is a group")
    }

    pub fn symmetric(degree: usize) -> CayleyGroup {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut cycle: Vec<usize> = (1..degree).collect();
            cycle.push(0);
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push(cycle);
        }
        from_permutation_generators(degree, &gens).expect("symmetric group is within bounds")
    }

    /// Alternating group generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(degree: usize) -> CayleyGroup {
        let gens: Vec<Vec<usize>> = (2..degree)
            .map(|i| {
                let mut p: Vec<usize> = (0..degree).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        from_permutation_generators(degree, &gens).expect("alternating group is within bounds")
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn perm_label(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Closes a set of permutations under composition. Elements are indexed in
/// lexicographic order of their image arrays, so the identity is index 0.
pub fn from_permutation_generators(degree: usize, generators: &[Vec<usize>]) -> Result<CayleyGroup> {
    from_permutation_generators_bounded(degree, generators, DEFAULT_ORDER_BOUND)
}

pub fn from_permutation_generators_bounded(
    degree: usize,
    generators: &[Vec<usize>],
    bound: usize,
) -> Result<CayleyGroup> {
    for (k, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        let ok = g.len() == degree && g.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
        if !ok {
            return Err(Error::Validation(format!("generator {k} is not a permutation of 0..{degree}")));
        }
    }
    let bound = bound.min(u16::MAX as usize);
    let id: Vec<usize> = (0..degree).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                if seen.len() > bound {
                    return Err(Error::SizeBound { order: seen.len(), bound });
                }
                queue.push_back(y);
            }
        }
    }
    let mut elems: Vec<Vec<usize>> = seen.into_iter().collect();
    elems.sort();
    let index: HashMap<&[usize], usize> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = elems.len();
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = index[compose(&elems[a], &elems[b]).as_slice()] as u16;
        }
    }
    let mut inv = vec![0; n];
    for a in 0..n {
        let mut q = vec![0; degree];
        for (i, &pi) in elems[a].iter().enumerate() {
            q[pi] = i;
        }
        inv[a] = index[q.as_slice()];
    }
    let labels = elems.iter().map(|p| perm_label(p)).collect();
    Ok(CayleyGroup { order: n, mul, identity: 0, inv, labels, perms: Some(elems) })
}

/// A subgroup of a parent group, as a sorted list of member indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    pub members: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Closure under multiplication and inverses, checked exhaustively.
    pub fn is_subgroup_of(&self, g: &CayleyGroup) -> bool {
        self.contains(g.identity())
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }

    /// The subgroup as a standalone group; element `i` is `members[i]` of the parent.
    pub fn to_group(&self, parent: &CayleyGroup) -> CayleyGroup {
        let pos: HashMap<usize, usize> = self.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let n = self.members.len();
        let mut mul = vec![0u16; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                mul[i * n + j] = pos[&parent.mul(a, b)] as u16;
            }
        }
        CayleyGroup {
            order: n,
            mul,
            identity: pos[&parent.identity()],
            inv: self.members.iter().map(|&a| pos[&parent.inv(a)]).collect(),
            labels: self.members.iter().map(|&a| parent.label(a).to_string()).collect(),
            perms: parent.perms.as_ref().map(|p| self.members.iter().map(|&a| p[a].clone()).collect()),
        }
    }

    /// Whether this subgroup is normal in `parent`.
    pub fn is_normal_in(&self, parent: &CayleyGroup) -> bool {
        parent.elements().all(|g| {
            self.members.iter().all(|&h| self.contains(parent.mul(parent.mul(g, h), parent.inv(g))))
        })
    }
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_closure(g: &CayleyGroup, seeds: &[usize]) -> Subgroup {
    let mut members: BTreeSet<usize> = BTreeSet::new();
    members.insert(g.identity());
    let mut queue: VecDeque<usize> = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for &s in seeds {
            let y = g.mul(x, s);
            if members.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup { members: members.into_iter().collect() }
}

/// The center `{z : zx = xz for all x}`.
pub fn center(g: &CayleyGroup) -> Subgroup {
    let members = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup { members }
}

fn classes_within(g: &CayleyGroup, members: &[usize]) -> Vec<Vec<usize>> {
    let set: HashSet<usize> = members.iter().copied().collect();
    let mut assigned = HashSet::new();
    let mut classes = Vec::new();
    for &x in members {
        if assigned.contains(&x) {
            continue;
        }
        let mut class: BTreeSet<usize> = BTreeSet::new();
        for &k in members {
            class.insert(g.mul(g.mul(k, x), g.inv(k)));
        }
        debug_assert!(class.iter().all(|c| set.contains(c)));
        assigned.extend(class.iter().copied());
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Number of conjugacy classes of a subgroup, computed inside it.
pub fn class_count(g: &CayleyGroup, h: &Subgroup) -> usize {
    classes_within(g, &h.members).len()
}

/// True iff `|G||Γ| = |L|` and `G ∩ Γ = {e}`.
pub fn is_exact_factorization(l: &CayleyGroup, g: &Subgroup, gamma: &Subgroup) -> bool {
    g.order() * gamma.order() == l.order()
        && g.members.iter().filter(|x| gamma.contains(**x)).count() == 1
}

/// One orbit of a right action, with data of the stabilizer at its least point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitInfo {
    pub orbit: Vec<usize>,
    pub stabilizer: Subgroup,
    pub stabilizer_order: usize,
    pub stabilizer_class_count: usize,
}

/// Orbits of a right action given as `action[point][element]`.
pub fn orbits_and_stabilizers(g: &CayleyGroup, action: &[Vec<usize>]) -> Result<Vec<OrbitInfo>> {
    let npts = action.len();
    for (p, row) in action.iter().enumerate() {
        if row.len() != g.order() || row.iter().any(|&q| q >= npts) {
            return Err(Error::Validation(format!("action row for point {p} has the wrong shape")));
        }
        if row[g.identity()] != p {
            return Err(Error::Validation(format!("right action violated: {p}.e != {p}")));
        }
    }
    for p in 0..npts {
        for a in g.elements() {
            for b in g.elements() {
                if action[action[p][a]][b] != action[p][g.mul(a, b)] {
                    return Err(Error::Validation(format!(
                        "right action violated at (point, g, h) = ({p}, {a}, {b}): (p.g).h != p.(gh)"
                    )));
                }
            }
        }
    }
    let mut seen = vec![false; npts];
    let mut out = Vec::new();
    for p in 0..npts {
        if seen[p] {
            continue;
        }
        let orbit: BTreeSet<usize> = g.elements().map(|a| action[p][a]).collect();
        for &q in &orbit {
            seen[q] = true;
        }
        let stabilizer = Subgroup { members: g.elements().filter(|&a| action[p][a] == p).collect() };
        let stabilizer_class_count = class_count(g, &stabilizer);
        out.push(OrbitInfo {
            orbit: orbit.into_iter().collect(),
            stabilizer_order: stabilizer.order(),
            stabilizer,
            stabilizer_class_count,
        });
    }
    Ok(out)
}

/// All subgroups, by cyclic extension: start from cyclic subgroups and join
/// with cyclic subgroups until nothing new appears. Sorted by member list.
pub fn all_subgroups(g: &CayleyGroup) -> Vec<Subgroup> {
    let cyclic: BTreeSet<Subgroup> = g.elements().map(|x| subgroup_closure(g, &[x])).collect();
    let cyclic_gens: Vec<usize> = {
        let mut reps = Vec::new();
        let mut seen = HashSet::new();
        for x in g.elements() {
            let c = subgroup_closure(g, &[x]);
            if seen.insert(c) {
                reps.push(x);
            }
        }
        reps
    };
    let mut all: BTreeSet<Subgroup> = cyclic.clone();
    let mut frontier: Vec<Subgroup> = cyclic.into_iter().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for &x in &cyclic_gens {
                if h.contains(x) {
                    continue;
                }
                let mut seeds = h.members.clone();
                seeds.push(x);
                let joined = subgroup_closure(g, &seeds);
                if all.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    all.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> CayleyGroup {
        from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    fn a5() -> CayleyGroup {
        from_permutation_generators(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4], vec![1, 0, 3, 2, 4]]).unwrap()
    }

    #[test]
    fn cyclic_three_from_generator() {
        let g = from_permutation_generators(3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.validate().valid);
    }

    #[test]
    fn a5_from_cycle_and_a4_generators() {
        let g = a5();
        assert_eq!(g.order(), 60);
        assert!(g.validate().valid);
    }

    #[test]
    fn trivial_group_degree_one() {
        let g = from_permutation_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn rejects_non_permutation_and_bound() {
        assert!(matches!(from_permutation_generators(3, &[vec![0, 0, 1]]), Err(Error::Validation(_))));
        let s5 = vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        assert!(matches!(from_permutation_generators_bounded(5, &s5, 100), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn closure_examples() {
        let g = s3();
        assert!(subgroup_closure(&g, &[g.identity()]).is_trivial());
        let c = g.find_perm(&[1, 2, 0]).unwrap();
        assert_eq!(subgroup_closure(&g, &[c]).order(), 3);
        let a = a5();
        let five = a.find_perm(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(subgroup_closure(&a, &[five]).order(), 5);
    }

    #[test]
    fn centers() {
        assert_eq!(center(&CayleyGroup::cyclic(5)).order(), 5);
        assert!(center(&s3()).is_trivial());
        let c2c4 = CayleyGroup::direct_product(&CayleyGroup::cyclic(2), &CayleyGroup::cyclic(4));
        assert_eq!(center(&c2c4).order(), 8);
    }

    #[test]
    fn inversion_orbits() {
        let g = CayleyGroup::cyclic(2);
        // points e, c, c^2; the generator swaps c and c^2
        let action = vec![vec![0, 0], vec![1, 2], vec![2, 1]];
        let orbits = orbits_and_stabilizers(&g, &action).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].orbit, vec![0]);
        assert_eq!(orbits[0].stabilizer_order, 2);
        assert_eq!(orbits[1].orbit, vec![1, 2]);
        assert_eq!(orbits[1].stabilizer_order, 1);
    }

    #[test]
    fn trivial_action_single_point() {
        let g = s3();
        let orbits = orbits_and_stabilizers(&g, &[vec![0; 6]]).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].stabilizer_order, 6);
        assert_eq!(orbits[0].stabilizer_class_count, 3);
    }

    #[test]
    fn action_violation_reports_witness() {
        let g = CayleyGroup::cyclic(3);
        // generator 1 swaps two points: not a C3 action
        let action = vec![vec![0, 1, 0], vec![1, 0, 1]];
        let err = orbits_and_stabilizers(&g, &action).unwrap_err();
        assert!(format!("{err}").contains("right action violated"));
    }

    #[test]
    fn exact_factorizations() {
        let g = s3();
        let t = subgroup_closure(&g, &[g.find_perm(&[1, 0, 2]).unwrap()]);
        let c = subgroup_closure(&g, &[g.find_perm(&[1, 2, 0]).unwrap()]);
        assert!(is_exact_factorization(&g, &t, &c));
        let c4 = CayleyGroup::cyclic(4);
        let two = subgroup_closure(&c4, &[2]);
        assert!(!is_exact_factorization(&c4, &two, &two));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&s3()).len(), 6);
        assert_eq!(all_subgroups(&CayleyGroup::cyclic(6)).len(), 4);
        assert_eq!(all_subgroups(&CayleyGroup::alternating(4)).len(), 10);
    }

    #[test]
    fn class_counts() {
        assert_eq!(s3().conjugacy_classes().len(), 3);
        assert_eq!(CayleyGroup::alternating(4).conjugacy_classes().len(), 4);
        assert_eq!(a5().conjugacy_classes().len(), 5);
    }
}
