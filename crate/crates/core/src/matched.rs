//! Matched pairs of groups and their bicrossed products.
//!
//! The factorization convention is `s·g = (s▷g)(s◁g)` for `s ∈ Γ`, `g ∈ G`:
//! the Γ element sits on the left. Swapping it silently transposes ▷ and ◁.

use crate::error::{Error, Result};
use crate::groups::{
    all_subgroups, from_permutation_generators, is_exact_factorization, subgroup_closure, CayleyGroup, Subgroup,
};
use crate::report::Report;
use std::collections::HashMap;

/// Default cap on ambient orders for factorization enumeration.
pub const ENUMERATION_BOUND: usize = 120;

/// Two groups with mutual actions `▷: Γ×G→G` (left) and `◁: Γ×G→Γ` (right),
/// stored densely as `|Γ|×|G|` tables.
///
/// Construction only checks table shapes; [`verify_matched_pair`] decides
/// whether the tables actually form a matched pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    g: CayleyGroup,
    gamma: CayleyGroup,
    rhd: Vec<Vec<usize>>,
    lhd: Vec<Vec<usize>>,
}

impl MatchedPair {
    pub fn new(g: CayleyGroup, gamma: CayleyGroup, rhd: Vec<Vec<usize>>, lhd: Vec<Vec<usize>>) -> Result<Self> {
        let (ng, nt) = (g.order(), gamma.order());
        let shaped = |t: &Vec<Vec<usize>>, bound: usize| {
            t.len() == nt && t.iter().all(|row| row.len() == ng && row.iter().all(|&x| x < bound))
        };
        if !shaped(&rhd, ng) {
            return Err(Error::Validation(format!("rhd must be a {nt}x{ng} table with entries below {ng}")));
        }
        if !shaped(&lhd, nt) {
            return Err(Error::Validation(format!("lhd must be a {nt}x{ng} table with entries below {nt}")));
        }
        Ok(MatchedPair { g, gamma, rhd, lhd })
    }

    /// Both actions trivial; the bicrossed product is the direct product.
    pub fn trivial(g: CayleyGroup, gamma: CayleyGroup) -> Self {
        let rhd = (0..gamma.order()).map(|_| (0..g.order()).collect()).collect();
        let lhd = (0..gamma.order()).map(|s| vec![s; g.order()]).collect();
        MatchedPair { g, gamma, rhd, lhd }
    }

    pub fn g(&self) -> &CayleyGroup {
        &self.g
    }

    pub fn gamma(&self) -> &CayleyGroup {
        &self.gamma
    }

    /// `s ▷ g`
    #[inline]
    pub fn rhd(&self, s: usize, g: usize) -> usize {
        self.rhd[s][g]
    }

    /// `s ◁ g`
    #[inline]
    pub fn lhd(&self, s: usize, g: usize) -> usize {
        self.lhd[s][g]
    }

    pub fn rhd_table(&self) -> &[Vec<usize>] {
        &self.rhd
    }

    pub fn lhd_table(&self) -> &[Vec<usize>] {
        &self.lhd
    }

    /// Order of the bicrossed product.
    pub fn order(&self) -> usize {
        self.g.order() * self.gamma.order()
    }

    /// Index of `(g, s)` in the bicrossed product.
    #[inline]
    pub fn pair_index(&self, g: usize, s: usize) -> usize {
        g * self.gamma.order() + s
    }

    /// `(g,s)(h,t) = (g(s▷h), (s◁h)t)` on indices.
    pub fn pair_mul(&self, x: usize, y: usize) -> usize {
        let n = self.gamma.order();
        let (g, s, h, t) = (x / n, x % n, y / n, y % n);
        self.pair_index(self.g.mul(g, self.rhd(s, h)), self.gamma.mul(self.lhd(s, h), t))
    }
}

/// Checks every matched-pair identity exhaustively.
pub fn verify_matched_pair(mp: &MatchedPair) -> Report {
    verify_matched_pair_limited(mp, None)
}

/// As [`verify_matched_pair`], stopping once `limit` witnesses are recorded.
pub fn verify_matched_pair_limited(mp: &MatchedPair, limit: Option<usize>) -> Report {
    let mut r = match limit {
        Some(l) => Report::with_limit(l),
        None => Report::new(),
    };
    let (g, gamma) = (&mp.g, &mp.gamma);
    let (e, eg) = (g.identity(), gamma.identity());

    for s in gamma.elements() {
        let mut hit = vec![false; g.order()];
        for x in g.elements() {
            hit[mp.rhd(s, x)] = true;
        }
        if let Some(miss) = hit.iter().position(|h| !h) {
            r.fail_with("rhd_bijective", || format!("s={s}: {miss} is not of the form s▷g"));
        }
    }
    for x in g.elements() {
        let mut hit = vec![false; gamma.order()];
        for s in gamma.elements() {
            hit[mp.lhd(s, x)] = true;
        }
        if let Some(miss) = hit.iter().position(|h| !h) {
            r.fail_with("lhd_bijective", || format!("g={x}: {miss} is not of the form s◁g"));
        }
    }
    for x in g.elements() {
        if mp.rhd(eg, x) != x {
            r.fail_with("rhd_action", || format!("e▷{x} = {} != {x}", mp.rhd(eg, x)));
        }
    }
    for s in gamma.elements() {
        if mp.lhd(s, e) != s {
            r.fail_with("lhd_action", || format!("{s}◁e = {} != {s}", mp.lhd(s, e)));
        }
        if mp.rhd(s, e) != e {
            r.fail_with("rhd_unit", || format!("{s}▷e = {} != e", mp.rhd(s, e)));
        }
    }
    for x in g.elements() {
        if mp.lhd(eg, x) != eg {
            r.fail_with("lhd_unit", || format!("e◁{x} = {} != e", mp.lhd(eg, x)));
        }
    }
    for s in gamma.elements() {
        for t in gamma.elements() {
            let st = gamma.mul(s, t);
            for x in g.elements() {
                if mp.rhd(s, mp.rhd(t, x)) != mp.rhd(st, x) {
                    r.fail_with("rhd_action", || format!("(s,t,g)=({s},{t},{x}): s▷(t▷g) != (st)▷g"));
                }
                let rhs = gamma.mul(mp.lhd(s, mp.rhd(t, x)), mp.lhd(t, x));
                if mp.lhd(st, x) != rhs {
                    r.fail_with("matched_lhd", || format!("(s,t,g)=({s},{t},{x}): (st)◁g != (s◁(t▷g))(t◁g)"));
                }
            }
            if r.saturated() {
                return r;
            }
        }
    }
    for s in gamma.elements() {
        for x in g.elements() {
            for h in g.elements() {
                let gh = g.mul(x, h);
                if mp.lhd(mp.lhd(s, x), h) != mp.lhd(s, gh) {
                    r.fail_with("lhd_action", || format!("(s,g,h)=({s},{x},{h}): (s◁g)◁h != s◁(gh)"));
                }
                let rhs = g.mul(mp.rhd(s, x), mp.rhd(mp.lhd(s, x), h));
                if mp.rhd(s, gh) != rhs {
                    r.fail_with("matched_rhd", || format!("(s,g,h)=({s},{x},{h}): s▷(gh) != (s▷g)((s◁g)▷h)"));
                }
            }
            if r.saturated() {
                return r;
            }
        }
    }
    r
}

/// Full group validation of the bicrossed multiplication on `G×Γ`, without
/// assuming the tables are a matched pair.
///
/// Associativity alone is weaker than the matched-pair identities (a constant
/// `▷ ≡ e` with trivial `◁` gives an associative product), so the check also
/// demands that `(e,e)` is a two-sided identity and that inverses exist.
pub fn bicrossed_validity(mp: &MatchedPair, limit: Option<usize>) -> Report {
    let mut r = match limit {
        Some(l) => Report::with_limit(l),
        None => Report::new(),
    };
    let n = mp.order();
    let table: Vec<usize> = (0..n * n).map(|k| mp.pair_mul(k / n, k % n)).collect();
    let one = mp.pair_index(mp.g.identity(), mp.gamma.identity());
    for x in 0..n {
        if table[one * n + x] != x || table[x * n + one] != x {
            r.fail_with("identity", || format!("(e,e) is not a two-sided identity at {x}"));
        }
        if !(0..n).any(|y| table[x * n + y] == one && table[y * n + x] == one) {
            r.fail_with("inverse", || format!("{x} has no two-sided inverse"));
        }
        if r.saturated() {
            return r;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = table[x * n + y];
            for z in 0..n {
                if table[xy * n + z] != table[x * n + table[y * n + z]] {
                    r.fail_with("associativity", || format!("(x,y,z)=({x},{y},{z})"));
                    if r.saturated() {
                        return r;
                    }
                }
            }
        }
    }
    r
}

/// The bicrossed product `G⋈Γ`, element `(g,s)` at index `g·|Γ| + s`.
pub fn bicrossed_group(mp: &MatchedPair) -> Result<CayleyGroup> {
    let report = verify_matched_pair_limited(mp, Some(1));
    if !report.valid {
        return Err(Error::Validation(format!("not a matched pair: {}", report.witnesses[0])));
    }
    let n = mp.order();
    let table = (0..n).map(|x| (0..n).map(|y| mp.pair_mul(x, y)).collect()).collect();
    let nt = mp.gamma.order();
    let labels = (0..n).map(|x| format!("({},{})", mp.g.label(x / nt), mp.gamma.label(x % nt))).collect();
    let group = CayleyGroup::from_table(table, Some(labels))
        .map_err(|e| Error::Internal(format!("bicrossed product is not a group: {e}")))?;
    let (gs, ts) = factor_subgroups(mp);
    if !gs.is_subgroup_of(&group) || !ts.is_subgroup_of(&group) || !is_exact_factorization(&group, &gs, &ts) {
        return Err(Error::Internal("G×1 and 1×Γ do not factor the bicrossed product".into()));
    }
    Ok(group)
}

/// The subgroups `G×1` and `1×Γ` of the bicrossed product.
pub fn factor_subgroups(mp: &MatchedPair) -> (Subgroup, Subgroup) {
    let gs = mp.g.elements().map(|g| mp.pair_index(g, mp.gamma.identity())).collect();
    let ts = mp.gamma.elements().map(|s| mp.pair_index(mp.g.identity(), s)).collect();
    (Subgroup { members: gs }, Subgroup { members: ts })
}

/// Reads off `▷` and `◁` from the unique factorizations `s·g = h·t` in `L = GΓ`.
/// Element `i` of the returned `G` (resp. `Γ`) is `G.members[i]` (resp. `Γ.members[i]`).
pub fn from_exact_factorization(l: &CayleyGroup, g: &Subgroup, gamma: &Subgroup) -> Result<MatchedPair> {
    if !g.is_subgroup_of(l) || !gamma.is_subgroup_of(l) {
        return Err(Error::NotAFactorization("G and Γ must be subgroups of L".into()));
    }
    if !is_exact_factorization(l, g, gamma) {
        return Err(Error::NotAFactorization(format!(
            "|G|·|Γ| = {}·{} against |L| = {}, or G ∩ Γ is nontrivial",
            g.order(),
            gamma.order(),
            l.order()
        )));
    }
    let mut split: HashMap<usize, (usize, usize)> = HashMap::with_capacity(l.order());
    for (i, &h) in g.members.iter().enumerate() {
        for (j, &t) in gamma.members.iter().enumerate() {
            if split.insert(l.mul(h, t), (i, j)).is_some() {
                return Err(Error::NotAFactorization("the map (g,s) ↦ g·s is not injective".into()));
            }
        }
    }
    let mut rhd = vec![vec![0; g.order()]; gamma.order()];
    let mut lhd = vec![vec![0; g.order()]; gamma.order()];
    for (j, &s) in gamma.members.iter().enumerate() {
        for (i, &x) in g.members.iter().enumerate() {
            let (h, t) = split[&l.mul(s, x)];
            rhd[j][i] = h;
            lhd[j][i] = t;
        }
    }
    let mp = MatchedPair::new(g.to_group(l), gamma.to_group(l), rhd, lhd)?;
    let report = verify_matched_pair_limited(&mp, Some(1));
    if !report.valid {
        return Err(Error::Internal(format!("extracted tables fail: {}", report.witnesses[0])));
    }
    Ok(mp)
}

/// Checks that `(g,s) ↦ g·s` is a bijective homomorphism `G⋈Γ → L`.
pub fn embedding_check(mp: &MatchedPair, l: &CayleyGroup, g: &Subgroup, gamma: &Subgroup) -> Report {
    let mut r = Report::with_limit(8);
    let n = mp.order();
    if n != l.order() || g.order() != mp.g.order() || gamma.order() != mp.gamma.order() {
        r.fail("shape", "orders do not match");
        return r;
    }
    let nt = mp.gamma.order();
    let phi: Vec<usize> = (0..n).map(|x| l.mul(g.members[x / nt], gamma.members[x % nt])).collect();
    let mut seen = vec![false; n];
    for &y in &phi {
        if std::mem::replace(&mut seen[y], true) {
            r.fail_with("bijective", || format!("{} is hit twice", l.label(y)));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if phi[mp.pair_mul(x, y)] != l.mul(phi[x], phi[y]) {
                r.fail_with("homomorphism", || format!("φ(xy) != φ(x)φ(y) at ({x},{y})"));
                if r.saturated() {
                    return r;
                }
            }
        }
    }
    r
}

/// An exact factorization of an ambient group with its matched pair.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub g: Subgroup,
    pub gamma: Subgroup,
    pub pair: MatchedPair,
}

/// All ordered exact factorizations `L = GΓ`, sorted by member lists.
pub fn enumerate_exact_factorizations(l: &CayleyGroup) -> Result<Vec<Factorization>> {
    enumerate_exact_factorizations_bounded(l, ENUMERATION_BOUND)
}

pub fn enumerate_exact_factorizations_bounded(l: &CayleyGroup, bound: usize) -> Result<Vec<Factorization>> {
    if l.order() > bound {
        return Err(Error::SizeBound { order: l.order(), bound });
    }
    let subs = all_subgroups(l);
    let mut out = Vec::new();
    for g in &subs {
        for gamma in &subs {
            if is_exact_factorization(l, g, gamma) {
                let pair = from_exact_factorization(l, g, gamma)?;
                out.push(Factorization { g: g.clone(), gamma: gamma.clone(), pair });
            }
        }
    }
    Ok(out)
}

/// A named matched pair together with the ambient group it factors.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: &'static str,
    pub ambient: CayleyGroup,
    pub g: Subgroup,
    pub gamma: Subgroup,
    pub pair: MatchedPair,
}

fn instance(name: &'static str, degree: usize, g_gens: &[Vec<usize>], gamma_gens: &[Vec<usize>]) -> Instance {
    let all: Vec<Vec<usize>> = g_gens.iter().chain(gamma_gens).cloned().collect();
    let ambient = from_permutation_generators(degree, &all).expect("ambient group within bounds");
    let find = |p: &Vec<usize>| ambient.find_perm(p).expect("generator lies in the ambient group");
    let g = subgroup_closure(&ambient, &g_gens.iter().map(find).collect::<Vec<_>>());
    let gamma = subgroup_closure(&ambient, &gamma_gens.iter().map(find).collect::<Vec<_>>());
    let pair = from_exact_factorization(&ambient, &g, &gamma).expect("instance is an exact factorization");
    Instance { name, ambient, g, gamma, pair }
}

/// `S₃ = ⟨(01)⟩·⟨(012)⟩`: `▷` trivial, `◁` inverts the 3-cycles.
pub fn s3_instance() -> Instance {
    instance("S3", 3, &[vec![1, 0, 2]], &[vec![1, 2, 0]])
}

/// `A₅ = C₅·A₄` with `G = ⟨(01234)⟩` and `Γ` the stabilizer of 4.
pub fn a5_instance() -> Instance {
    instance("A5", 5, &[vec![1, 2, 3, 4, 0]], &[vec![1, 2, 0, 3, 4], vec![1, 0, 3, 2, 4]])
}

/// `C₂ × C₂` with both actions trivial.
pub fn trivial_c2c2_instance() -> Instance {
    instance("C2xC2", 4, &[vec![1, 0, 2, 3]], &[vec![0, 1, 3, 2]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_actions_are_matched() {
        let mp = MatchedPair::trivial(CayleyGroup::cyclic(3), CayleyGroup::symmetric(3));
        assert!(verify_matched_pair(&mp).valid);
        let prod = bicrossed_group(&mp).unwrap();
        assert_eq!(prod.order(), 18);
        assert!(!prod.is_abelian());
    }

    #[test]
    fn s3_factorization_tables() {
        let inst = s3_instance();
        let mp = &inst.pair;
        assert!(verify_matched_pair(mp).valid);
        let s = mp.gamma().labels().iter().position(|l| l == "(0 1 2)").unwrap();
        let g = mp.g().labels().iter().position(|l| l == "(0 1)").unwrap();
        assert_eq!(mp.g().label(mp.rhd(s, g)), "(0 1)");
        assert_eq!(mp.gamma().label(mp.lhd(s, g)), "(0 2 1)");
        for t in mp.gamma().elements() {
            for x in mp.g().elements() {
                assert_eq!(mp.rhd(t, x), x);
            }
        }
    }

    #[test]
    fn non_action_table_is_rejected() {
        let g = CayleyGroup::cyclic(2);
        let gamma = CayleyGroup::cyclic(3);
        let rhd = vec![vec![0, 1]; 3];
        let lhd = vec![vec![0, 0], vec![1, 2], vec![2, 2]];
        let mp = MatchedPair::new(g, gamma, rhd, lhd).unwrap();
        let r = verify_matched_pair(&mp);
        assert!(!r.valid);
        assert!(r.has_check("lhd_bijective"));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let g = CayleyGroup::cyclic(2);
        let gamma = CayleyGroup::cyclic(3);
        assert!(MatchedPair::new(g, gamma, vec![vec![0, 1]; 2], vec![vec![0, 0]; 3]).is_err());
    }

    #[test]
    fn direct_product_factorization_has_trivial_actions() {
        let l = CayleyGroup::direct_product(&CayleyGroup::cyclic(2), &CayleyGroup::cyclic(3));
        let g = Subgroup { members: vec![0, 3] };
        let gamma = Subgroup { members: vec![0, 1, 2] };
        let mp = from_exact_factorization(&l, &g, &gamma).unwrap();
        assert_eq!(mp, MatchedPair::trivial(g.to_group(&l), gamma.to_group(&l)));
    }

    #[test]
    fn a5_factorization_is_nontrivial_and_embeds() {
        let inst = a5_instance();
        assert_eq!(inst.pair.g().order(), 5);
        assert_eq!(inst.pair.gamma().order(), 12);
        let mp = &inst.pair;
        assert!((0..12).any(|s| (0..5).any(|g| mp.rhd(s, g) != g)));
        assert!((0..12).any(|s| (0..5).any(|g| mp.lhd(s, g) != s)));
        let prod = bicrossed_group(mp).unwrap();
        assert_eq!(prod.order(), 60);
        assert!(embedding_check(mp, &inst.ambient, &inst.g, &inst.gamma).valid);
    }

    #[test]
    fn s3_bicrossed_embeds() {
        let inst = s3_instance();
        assert!(embedding_check(&inst.pair, &inst.ambient, &inst.g, &inst.gamma).valid);
    }

    #[test]
    fn not_a_factorization() {
        let c4 = CayleyGroup::cyclic(4);
        let two = subgroup_closure(&c4, &[2]);
        assert!(matches!(from_exact_factorization(&c4, &two, &two), Err(Error::NotAFactorization(_))));
    }

    #[test]
    fn round_trip_through_bicrossed_product() {
        for inst in [s3_instance(), a5_instance(), trivial_c2c2_instance()] {
            let prod = bicrossed_group(&inst.pair).unwrap();
            let (gs, ts) = factor_subgroups(&inst.pair);
            let back = from_exact_factorization(&prod, &gs, &ts).unwrap();
            assert_eq!(back.rhd_table(), inst.pair.rhd_table());
            assert_eq!(back.lhd_table(), inst.pair.lhd_table());
            assert_eq!(back.g().table(), inst.pair.g().table());
            assert_eq!(back.gamma().table(), inst.pair.gamma().table());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_exact_factorizations(&CayleyGroup::cyclic(4)).unwrap().len(), 2);
        assert_eq!(enumerate_exact_factorizations(&CayleyGroup::symmetric(3)).unwrap().len(), 8);
        assert_eq!(enumerate_exact_factorizations(&CayleyGroup::cyclic(6)).unwrap().len(), 4);
        let s6 = CayleyGroup::symmetric(6);
        assert!(matches!(enumerate_exact_factorizations(&s6), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn associative_but_not_matched() {
        // constant ▷ ≡ e with trivial ◁: (g,s)(h,t) = (g, st) is associative, yet (e,e) is no identity
        let g = CayleyGroup::cyclic(2);
        let gamma = CayleyGroup::cyclic(2);
        let mp = MatchedPair::new(g, gamma, vec![vec![0, 0]; 2], vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert!(!verify_matched_pair(&mp).valid);
        let r = bicrossed_validity(&mp, None);
        assert!(!r.valid);
        assert!(!r.has_check("associativity"));
        assert!(r.has_check("identity"));
    }
}
