//! JSON input formats and their conversion into the library types.
//!
//! Element indices in tables always refer to the lexicographic order of the
//! permutations generated from the given generators, the order used by
//! [`CayleyGroup`].

use crate::crossed::{pointed_crossed_unchecked, CrossedActionData};
use crate::error::{Error, Result};
use crate::groups::{from_permutation_generators, subgroup_closure, CayleyGroup};
use crate::hopf::{dual_hopf, group_algebra, kac_bicrossed_unchecked, HopfAlgebra, Q};
use crate::matched::{from_exact_factorization, MatchedPair};
use crate::repth::{vect_group_model, AutGradingInput};
use crate::rings::BasedRing;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Parses `text` as `T`, reporting the line, column and field path on failure.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse(format!("line {}, column {}, field `{path}`: {inner}", inner.line(), inner.column()))
    })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<CayleyGroup> {
        from_permutation_generators(self.degree, &self.generators)
    }
}

/// Generators of a subgroup: indices into the ambient generator list, or
/// explicit permutations.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GeneratorRef {
    Indices(Vec<usize>),
    Permutations(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum MatchedPairSpec {
    Tables {
        #[serde(rename = "G")]
        g: GroupSpec,
        #[serde(rename = "Gamma")]
        gamma: GroupSpec,
        /// `rhd[s][g] = s▷g`
        rhd: Vec<Vec<usize>>,
        /// `lhd[s][g] = s◁g`
        lhd: Vec<Vec<usize>>,
    },
    Ambient {
        ambient: GroupSpec,
        #[serde(rename = "G_gens")]
        g_gens: GeneratorRef,
        #[serde(rename = "Gamma_gens")]
        gamma_gens: GeneratorRef,
    },
}

impl MatchedPairSpec {
    pub fn build(&self) -> Result<MatchedPair> {
        match self {
            MatchedPairSpec::Tables { g, gamma, rhd, lhd } => MatchedPair::new(g.build()?, gamma.build()?, rhd.clone(), lhd.clone()),
            MatchedPairSpec::Ambient { ambient, g_gens, gamma_gens } => {
                let l = ambient.build()?;
                let resolve = |r: &GeneratorRef, what: &str| -> Result<Vec<usize>> {
                    let perms: Vec<Vec<usize>> = match r {
                        GeneratorRef::Indices(ix) => ix
                            .iter()
                            .map(|&i| {
                                ambient.generators.get(i).cloned().ok_or_else(|| Error::Parse(format!("{what}: no ambient generator {i}")))
                            })
                            .collect::<Result<_>>()?,
                        GeneratorRef::Permutations(p) => p.clone(),
                    };
                    perms
                        .iter()
                        .map(|p| l.find_perm(p).ok_or_else(|| Error::Validation(format!("{what}: {p:?} is not in the ambient group"))))
                        .collect()
                };
                let g = subgroup_closure(&l, &resolve(g_gens, "G_gens")?);
                let gamma = subgroup_closure(&l, &resolve(gamma_gens, "Gamma_gens")?);
                from_exact_factorization(&l, &g, &gamma)
            }
        }
    }

    /// The table form of a matched pair, with generators of the two groups.
    pub fn from_pair(mp: &MatchedPair) -> Option<Self> {
        Some(MatchedPairSpec::Tables {
            g: group_spec(mp.g())?,
            gamma: group_spec(mp.gamma())?,
            rhd: mp.rhd_table().to_vec(),
            lhd: mp.lhd_table().to_vec(),
        })
    }
}

/// Generators of a permutation group, when it carries permutations.
pub fn group_spec(g: &CayleyGroup) -> Option<GroupSpec> {
    let perms: Vec<Vec<usize>> = g.generators().iter().map(|&x| g.perm(x).map(<[usize]>::to_vec)).collect::<Option<_>>()?;
    let degree = g.perm(g.identity())?.len();
    Some(GroupSpec { degree, generators: perms })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<[u32; 4]>,
}

impl RingSpec {
    pub fn build(&self) -> Result<BasedRing> {
        let entries: Vec<(usize, usize, usize, u32)> =
            self.n.iter().map(|&[x, y, z, m]| (x as usize, y as usize, z as usize, m)).collect();
        BasedRing::new(self.labels.clone(), self.unit, self.dual.clone(), &entries)
    }

    pub fn from_ring(r: &BasedRing) -> Self {
        RingSpec {
            labels: r.labels().to_vec(),
            unit: r.unit(),
            dual: r.dual_table().to_vec(),
            n: r.entries().into_iter().map(|(x, y, z, m)| [x as u32, y as u32, z as u32, m]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CrossedSpec {
    Explicit {
        matched_pair: MatchedPairSpec,
        ring: RingSpec,
        deg: Vec<usize>,
        rho: Vec<Vec<usize>>,
    },
    /// Base `ℤ[Γ]` with `ρ^g(s) = s◁g`.
    Pointed { pointed: MatchedPairSpec },
}

impl CrossedSpec {
    /// Builds the data without checking it.
    pub fn build(&self) -> Result<CrossedActionData> {
        match self {
            CrossedSpec::Explicit { matched_pair, ring, deg, rho } => Ok(CrossedActionData {
                mp: matched_pair.build()?,
                ring: ring.build()?,
                deg: deg.clone(),
                rho: rho.clone(),
            }),
            CrossedSpec::Pointed { pointed } => Ok(pointed_crossed_unchecked(&pointed.build()?)),
        }
    }
}

fn coefficient(v: &Value, at: &str) -> Result<Q> {
    match v {
        Value::Number(n) => n.as_i64().map(Q::from_integer).ok_or_else(|| Error::Parse(format!("{at}: {n} is not an integer"))),
        Value::String(s) => {
            let (p, q) = s.split_once('/').unwrap_or((s.as_str(), "1"));
            let p: i64 = p.trim().parse().map_err(|_| Error::Parse(format!("{at}: bad numerator in \"{s}\"")))?;
            let q: i64 = q.trim().parse().map_err(|_| Error::Parse(format!("{at}: bad denominator in \"{s}\"")))?;
            if q == 0 {
                return Err(Error::Parse(format!("{at}: zero denominator in \"{s}\"")));
            }
            Ok(Q::new(p, q))
        }
        _ => Err(Error::Parse(format!("{at}: coefficient must be an integer or a \"p/q\" string"))),
    }
}

fn index(v: &Value, at: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("{at}: expected a basis index")))
}

/// Rows `[i_1, …, i_k, c]` of a sparse tensor.
fn tensor(rows: &[Vec<Value>], arity: usize, name: &str) -> Result<Vec<(Vec<usize>, Q)>> {
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            let at = format!("{name}[{r}]");
            if row.len() != arity + 1 {
                return Err(Error::Parse(format!("{at}: expected {} entries", arity + 1)));
            }
            let ix = row[..arity].iter().map(|v| index(v, &at)).collect::<Result<Vec<_>>>()?;
            Ok((ix, coefficient(&row[arity], &at)?))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum HopfSpec {
    Tensors {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        m: Vec<Vec<Value>>,
        u: Vec<Vec<Value>>,
        delta: Vec<Vec<Value>>,
        eps: Vec<Vec<Value>>,
        #[serde(rename = "S")]
        s: Vec<Vec<Value>>,
    },
    GroupAlgebra { group_algebra: GroupSpec },
    FunctionAlgebra { function_algebra: GroupSpec },
    Kac { kac: MatchedPairSpec },
}

impl HopfSpec {
    pub fn build(&self) -> Result<HopfAlgebra> {
        match self {
            HopfSpec::Tensors { dim, labels, m, u, delta, eps, s } => {
                let m: Vec<_> = tensor(m, 3, "m")?.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)).collect();
                let u: Vec<_> = tensor(u, 1, "u")?.into_iter().map(|(i, c)| (i[0], c)).collect();
                let delta: Vec<_> = tensor(delta, 3, "delta")?.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)).collect();
                let eps: Vec<_> = tensor(eps, 1, "eps")?.into_iter().map(|(i, c)| (i[0], c)).collect();
                let s: Vec<_> = tensor(s, 2, "S")?.into_iter().map(|(i, c)| (i[0], i[1], c)).collect();
                HopfAlgebra::new(*dim, labels.clone(), &m, &u, &delta, &eps, &s)
            }
            HopfSpec::GroupAlgebra { group_algebra: g } => Ok(group_algebra(&g.build()?)),
            HopfSpec::FunctionAlgebra { function_algebra: g } => Ok(dual_hopf(&group_algebra(&g.build()?))),
            HopfSpec::Kac { kac } => Ok(kac_bicrossed_unchecked(&kac.build()?)),
        }
    }
}

fn q_string(c: Q) -> Value {
    if c.is_integer() {
        Value::from(*c.numer())
    } else {
        Value::from(format!("{}/{}", c.numer(), c.denom()))
    }
}

/// The explicit tensor form of a Hopf algebra.
pub fn hopf_to_spec(h: &HopfAlgebra) -> HopfSpec {
    let n = h.dim();
    let row = |ix: &[usize], c: Q| ix.iter().map(|&i| Value::from(i)).chain(std::iter::once(q_string(c))).collect::<Vec<_>>();
    let mut m = Vec::new();
    let mut delta = Vec::new();
    let mut s = Vec::new();
    for i in 0..n {
        for j in 0..n {
            m.extend(h.mul_basis(i, j).iter().map(|&(k, c)| row(&[i, j, k], c)));
        }
        delta.extend(h.delta_basis(i).iter().map(|&(j, k, c)| row(&[i, j, k], c)));
        s.extend(h.antipode_basis(i).iter().map(|&(k, c)| row(&[i, k], c)));
    }
    let nonzero = |v: &[Q]| v.iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(*c)).map(|(i, &c)| row(&[i], c)).collect();
    HopfSpec::Tensors {
        dim: n,
        labels: Some(h.labels().to_vec()),
        m,
        u: nonzero(h.unit_vector()),
        delta,
        eps: nonzero(h.counit_covector()),
        s,
    }
}

/// A chain of subspaces `k ⊂ … ⊂ H`, each given by spanning rows.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ChainSpec {
    pub hopf: HopfSpec,
    /// Terms in ascending order, each a list of coefficient rows.
    pub chain: Vec<Vec<Vec<Value>>>,
    /// The chain lives in the dual of `hopf` and certifies an upper series.
    #[serde(default)]
    pub via_dual: bool,
}

impl ChainSpec {
    pub fn terms(&self) -> Result<Vec<Vec<Vec<Q>>>> {
        self.chain
            .iter()
            .enumerate()
            .map(|(t, term)| {
                term.iter()
                    .enumerate()
                    .map(|(r, row)| row.iter().map(|v| coefficient(v, &format!("chain[{t}][{r}]"))).collect())
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum AutGradingSpec {
    Blocks {
        group: GroupSpec,
        ring: RingSpec,
        invertible_blocks: Vec<usize>,
        sigma_blocks: Vec<Vec<usize>>,
    },
    /// The skeletal `vect_G` model.
    VectGroup { vect_group: GroupSpec },
}

impl AutGradingSpec {
    pub fn build(&self) -> Result<(AutGradingInput, CayleyGroup)> {
        match self {
            AutGradingSpec::Blocks { group, ring, invertible_blocks, sigma_blocks } => Ok((
                AutGradingInput { ring: ring.build()?, invertible_blocks: invertible_blocks.clone(), sigma_blocks: sigma_blocks.clone() },
                group.build()?,
            )),
            AutGradingSpec::VectGroup { vect_group } => {
                let g = vect_group.build()?;
                Ok((vect_group_model(&g), g))
            }
        }
    }
}

/// A module serialized as dense complex matrices, one per basis element.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ModuleSpec {
    pub dim: usize,
    /// `action[i][r][c] = [re, im]`
    pub action: Vec<Vec<Vec<[f64; 2]>>>,
}

impl ModuleSpec {
    pub fn from_module(m: &crate::repth::HModule) -> Self {
        let d = m.dim();
        ModuleSpec {
            dim: d,
            action: m
                .actions()
                .iter()
                .map(|a| (0..d).map(|r| (0..d).map(|c| [a[(r, c)].re, a[(r, c)].im]).collect()).collect())
                .collect(),
        }
    }

    pub fn build(&self, h: &HopfAlgebra) -> Result<crate::repth::HModule> {
        let d = self.dim;
        let mats = self
            .action
            .iter()
            .map(|a| {
                if a.len() != d || a.iter().any(|r| r.len() != d) {
                    return Err(Error::Parse(format!("action matrices must be {d}x{d}")));
                }
                Ok(crate::linalg::CMatrix::from_fn(d, d, |r, c| crate::linalg::C64::new(a[r][c][0], a[r][c][1])))
            })
            .collect::<Result<Vec<_>>>()?;
        crate::repth::HModule::new(h, d, mats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf_axioms;
    use crate::matched::{s3_instance, verify_matched_pair};
    use crate::rings::verify_based_ring;

    #[test]
    fn matched_pair_forms_agree() {
        let tables = MatchedPairSpec::from_pair(&s3_instance().pair).unwrap();
        let text = serde_json::to_string(&tables).unwrap();
        let back: MatchedPairSpec = parse(&text).unwrap();
        assert!(verify_matched_pair(&back.build().unwrap()).valid);
        let ambient: MatchedPairSpec = parse(
            r#"{"ambient": {"degree": 3, "generators": [[1,0,2],[1,2,0]]}, "G_gens": [0], "Gamma_gens": [[1,2,0]]}"#,
        )
        .unwrap();
        assert_eq!(ambient.build().unwrap(), s3_instance().pair);
    }

    #[test]
    fn hopf_round_trip_with_fractions() {
        let spec: HopfSpec = parse(r#"{"function_algebra": {"degree": 3, "generators": [[1,0,2]]}}"#).unwrap();
        let h = spec.build().unwrap();
        let text = serde_json::to_string(&hopf_to_spec(&h)).unwrap();
        let back: HopfSpec = parse(&text).unwrap();
        assert_eq!(back.build().unwrap(), h);
        assert!(verify_hopf_axioms(&h).valid);
        assert_eq!(coefficient(&Value::from("-3/6"), "x").unwrap(), Q::new(-1, 2));
    }

    #[test]
    fn ring_round_trip() {
        let r = crate::rings::group_ring(&CayleyGroup::cyclic(3));
        let spec = RingSpec::from_ring(&r);
        let back: RingSpec = parse(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert!(verify_based_ring(&back.build().unwrap()).valid);
    }

    #[test]
    fn parse_errors_name_the_field() {
        let err = parse::<RingSpec>("{\"labels\": [\"1\"], \"unit\": \"zero\", \"dual\": [0], \"N\": []}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("unit") && msg.contains("line 1"), "{msg}");
        let err = HopfSpec::Tensors { dim: 1, labels: None, m: vec![vec![0.into(), 0.into(), 0.into(), "1/0".into()]], u: vec![], delta: vec![], eps: vec![], s: vec![] }
            .build()
            .unwrap_err();
        assert!(err.to_string().contains("m[0]"));
    }
}
