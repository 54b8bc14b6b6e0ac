//! Isomorphism search between based rings.

use super::{fp_dimensions, BasedRing};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// True iff `phi` is a bijection `R → S` preserving unit, duals and every `N`.
pub fn is_isomorphism(r: &BasedRing, s: &BasedRing, phi: &[usize]) -> bool {
    let n = r.rank();
    if s.rank() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    if phi.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return false;
    }
    if phi[r.unit()] != s.unit() || (0..n).any(|x| phi[r.dual(x)] != s.dual(phi[x])) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let mut mapped: Vec<(usize, u32)> = r.product(x, y).iter().map(|&(z, m)| (phi[z], m)).collect();
            mapped.sort_unstable();
            mapped.as_slice() == s.product(phi[x], phi[y])
        })
    })
}

/// Colours basis elements of both rings jointly by iterated refinement, so
/// that equal colours across the rings are necessary for correspondence.
fn joint_colours(r: &BasedRing, s: &BasedRing) -> Result<(Vec<usize>, Vec<usize>)> {
    let base = |ring: &BasedRing| -> Result<Vec<(i64, bool, Vec<u32>, u32)>> {
        let d = fp_dimensions(ring)?;
        Ok((0..ring.rank())
            .map(|x| {
                let mut selfprod: Vec<u32> = ring.product(x, x).iter().map(|&(_, m)| m).collect();
                selfprod.sort_unstable();
                let unit_mult = ring.n(x, x, ring.unit());
                ((d[x] * 1e6).round() as i64, ring.dual(x) == x, selfprod, unit_mult)
            })
            .collect())
    };
    let (br, bs) = (base(r)?, base(s)?);
    let mut dict = HashMap::new();
    let mut intern = |key: String| {
        let k = dict.len();
        *dict.entry(key).or_insert(k)
    };
    let mut cr: Vec<usize> = br.iter().map(|b| intern(format!("{b:?}"))).collect();
    let mut cs: Vec<usize> = bs.iter().map(|b| intern(format!("{b:?}"))).collect();
    loop {
        let refine = |ring: &BasedRing, c: &[usize]| -> Vec<String> {
            (0..ring.rank())
                .map(|x| {
                    let mut rows: Vec<(usize, Vec<(usize, u32)>)> = (0..ring.rank())
                        .map(|y| {
                            let mut cell: Vec<(usize, u32)> = ring.product(x, y).iter().map(|&(z, m)| (c[z], m)).collect();
                            cell.sort_unstable();
                            (c[y], cell)
                        })
                        .collect();
                    rows.sort_unstable();
                    format!("{}|{}|{:?}", c[x], c[ring.dual(x)], rows)
                })
                .collect()
        };
        let (kr, ks) = (refine(r, &cr), refine(s, &cs));
        let mut dict = HashMap::new();
        let mut intern = |key: &String| {
            let k = dict.len();
            *dict.entry(key.clone()).or_insert(k)
        };
        let nr: Vec<usize> = kr.iter().map(&mut intern).collect();
        let ns: Vec<usize> = ks.iter().map(&mut intern).collect();
        let classes = |v: &[usize], w: &[usize]| v.iter().chain(w).collect::<std::collections::BTreeSet<_>>().len();
        let done = classes(&nr, &ns) == classes(&cr, &cs);
        cr = nr;
        cs = ns;
        if done {
            return Ok((cr, cs));
        }
    }
}

struct Search<'a> {
    r: &'a BasedRing,
    s: &'a BasedRing,
    cr: Vec<usize>,
    cs: Vec<usize>,
    deadline: Instant,
    timeout_ms: u64,
}

const FREE: usize = usize::MAX;

impl Search<'_> {
    /// Sets `phi[x] = y` and closes under forced consequences. Returns false on conflict.
    fn assign(&self, phi: &mut [usize], used: &mut [bool], x: usize, y: usize) -> bool {
        let mut stack = vec![(x, y)];
        let mut assigned = Vec::new();
        while let Some((x, y)) = stack.pop() {
            if phi[x] != FREE {
                if phi[x] != y {
                    return false;
                }
                continue;
            }
            if used[y] || self.cr[x] != self.cs[y] {
                return false;
            }
            phi[x] = y;
            used[y] = true;
            assigned.push(x);
            stack.push((self.r.dual(x), self.s.dual(y)));
            let placed: Vec<usize> = (0..phi.len()).filter(|&a| phi[a] != FREE).collect();
            for &a in &placed {
                for (p, q) in [(x, a), (a, x)] {
                    let (rp, sp) = (self.r.product(p, q), self.s.product(phi[p], phi[q]));
                    if rp.len() != sp.len() {
                        return false;
                    }
                    if let ([(z, 1)], [(w, 1)]) = (rp, sp) {
                        stack.push((*z, *w));
                        continue;
                    }
                    for &(z, m) in rp {
                        if phi[z] != FREE && self.s.n(phi[p], phi[q], phi[z]) != m {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn extend(&self, phi: Vec<usize>, used: Vec<bool>) -> Result<Option<Vec<usize>>> {
        if Instant::now() > self.deadline {
            return Err(Error::Timeout(self.timeout_ms));
        }
        let Some(x) = phi.iter().position(|&p| p == FREE) else {
            return Ok(is_isomorphism(self.r, self.s, &phi).then_some(phi));
        };
        for y in 0..self.s.rank() {
            if used[y] || self.cs[y] != self.cr[x] {
                continue;
            }
            let (mut p, mut u) = (phi.clone(), used.clone());
            if self.assign(&mut p, &mut u, x, y) {
                if let Some(found) = self.extend(p, u)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
}

/// Finds a basis bijection `R → S` preserving unit, duals and all structure
/// constants. Candidates are tried in index order, so the result is the
/// lexicographically least isomorphism. `Ok(None)` means none exists;
/// exceeding the time budget is an error.
pub fn based_ring_isomorphism(r: &BasedRing, s: &BasedRing, timeout_ms: u64) -> Result<Option<Vec<usize>>> {
    let n = r.rank();
    if s.rank() != n {
        return Ok(None);
    }
    let (cr, cs) = joint_colours(r, s)?;
    let mut a = cr.clone();
    let mut b = cs.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    let search = Search {
        r,
        s,
        cr,
        cs,
        deadline: Instant::now() + Duration::from_millis(timeout_ms),
        timeout_ms,
    };
    let (mut phi, mut used) = (vec![FREE; n], vec![false; n]);
    if !search.assign(&mut phi, &mut used, r.unit(), s.unit()) {
        return Ok(None);
    }
    search.extend(phi, used)
}
