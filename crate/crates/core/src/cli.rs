//! Batch front end: one named pipeline per invocation, reading JSON inputs and
//! producing a deterministic report.
//!
//! Exit status is 0 when the checked statement holds, 1 when it was verified
//! to fail, and 2 on any operational error.

use crate::crossed::{dual_graded_ring, equivariantization, verify_crossed_action};
use crate::error::{Error, Result};
use crate::groups::center;
use crate::hopf::braiding::{sigma_squared_defect, symmetric_central_algebra_test};
use crate::hopf::series::{upper_series_via_dual, verify_subnormal_series, HopfChain};
use crate::hopf::{dual_hopf, exact_sequence_check, is_cocommutative, is_commutative, kac_sequence_maps, verify_hopf_axioms};
use crate::json::{parse, AutGradingSpec, ChainSpec, CrossedSpec, GroupSpec, HopfSpec, MatchedPairSpec, RingSpec};
use crate::linalg::Tolerance;
use crate::matched::{bicrossed_group, bicrossed_validity, enumerate_exact_factorizations, verify_matched_pair};
use crate::report::{Report, Witness};
use crate::repth::{aut_grading, fusion_ring_with_simples};
use crate::rings::{based_ring_isomorphism, is_faithful, neutral_component, upper_central_series, verify_based_ring};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Parser)]
#[command(name = "crossext", version, about = "Matched pairs, Kac algebras, crossed actions and their fusion rings")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Relative pivot threshold for rank decisions.
    #[arg(long, global = true)]
    pub tol_pivot: Option<f64>,
    /// Integrality gate for multiplicities.
    #[arg(long, global = true)]
    pub tol_round: Option<f64>,
    /// Budget for isomorphism searches.
    #[arg(long, global = true, default_value_t = 60_000)]
    pub timeout_ms: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the matched-pair identities of a pair of actions.
    VerifyMatchedPair { input: PathBuf },
    /// List the exact factorizations of a permutation group.
    Factorize { input: PathBuf },
    /// Build and validate the bicrossed product group.
    BicrossedGroup { input: PathBuf },
    /// Build the Kac algebra of a matched pair and check it.
    Kac {
        input: PathBuf,
        /// Also compute the fusion ring of its module category.
        #[arg(long)]
        fusion: bool,
    },
    /// Fusion ring of the equivariantization of a pointed crossed action.
    Equivariantize { input: PathBuf },
    /// The G⋈Γ-graded ring of a crossed action.
    DualRing { input: PathBuf },
    /// Upper central series of a based ring.
    Nilpotency { input: PathBuf },
    /// Check the Hopf algebra axioms.
    HopfVerify { input: PathBuf },
    /// Certify a subnormal series with commutative or cocommutative factors.
    SubnormalSeries { input: PathBuf },
    /// Compare σ² = id on the regular comodule with commutativity.
    CharSym { input: PathBuf },
    /// Automorphism grading from half-braiding block data.
    AutGrading { input: PathBuf },
    /// Search for a based-ring isomorphism.
    RingIso { left: PathBuf, right: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyMatchedPair { .. } => "verify-matched-pair",
            Command::Factorize { .. } => "factorize",
            Command::BicrossedGroup { .. } => "bicrossed-group",
            Command::Kac { .. } => "kac",
            Command::Equivariantize { .. } => "equivariantize",
            Command::DualRing { .. } => "dual-ring",
            Command::Nilpotency { .. } => "nilpotency",
            Command::HopfVerify { .. } => "hopf-verify",
            Command::SubnormalSeries { .. } => "subnormal-series",
            Command::CharSym { .. } => "char-sym",
            Command::AutGrading { .. } => "aut-grading",
            Command::RingIso { .. } => "ring-iso",
        }
    }

    pub fn inputs(&self) -> Vec<PathBuf> {
        match self {
            Command::RingIso { left, right } => vec![left.clone(), right.clone()],
            Command::VerifyMatchedPair { input }
            | Command::Factorize { input }
            | Command::BicrossedGroup { input }
            | Command::Kac { input, .. }
            | Command::Equivariantize { input }
            | Command::DualRing { input }
            | Command::Nilpotency { input }
            | Command::HopfVerify { input }
            | Command::SubnormalSeries { input }
            | Command::CharSym { input }
            | Command::AutGrading { input } => vec![input.clone()],
        }
    }
}

/// Everything that determines a run.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub command: Command,
    pub seed: u64,
    pub tol: Tolerance,
    pub timeout_ms: u64,
    pub format: Format,
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        RunSpec { command, seed: 0, tol: Tolerance::default(), timeout_ms: 60_000, format: Format::Json }
    }

    pub fn from_cli(cli: Cli) -> Self {
        let mut tol = Tolerance::default();
        if let Some(p) = cli.options.tol_pivot {
            tol.pivot_eps = p;
        }
        if let Some(r) = cli.options.tol_round {
            tol.round_eps = r;
        }
        RunSpec { command: cli.command, seed: cli.options.seed, tol, timeout_ms: cli.options.timeout_ms, format: cli.options.format }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub version: &'static str,
    pub seed: u64,
    pub tolerances: Tolerance,
    pub timeout_ms: u64,
    pub inputs: Vec<InputRecord>,
}

/// The report of one run.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub command: String,
    pub inputs: Vec<String>,
    pub status: &'static str,
    pub result: Value,
    pub witnesses: Vec<Witness>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: Document,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(&self.document),
            Format::Md => to_markdown(&self.document),
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
    s.push('\n');
    s
}

pub fn to_markdown(doc: &Document) -> String {
    let mut s = format!("# crossext {}\n\nStatus: **{}**\n\nInputs: {}\n\n", doc.command, doc.status, doc.inputs.join(", "));
    s.push_str("## Result\n\n```json\n");
    s.push_str(&serde_json::to_string_pretty(&doc.result).expect("values serialize"));
    s.push_str("\n```\n\n## Witnesses\n\n");
    if doc.witnesses.is_empty() {
        s.push_str("none\n");
    }
    for w in &doc.witnesses {
        s.push_str(&format!("- `{}`: {}\n", w.check, w.detail));
    }
    let p = &doc.provenance;
    s.push_str(&format!(
        "\n## Provenance\n\n- version {}\n- seed {}\n- pivot_eps {:e}, round_eps {:e}, cluster_eps {:e}\n- timeout {} ms\n",
        p.version, p.seed, p.tolerances.pivot_eps, p.tolerances.round_eps, p.tolerances.cluster_eps, p.timeout_ms
    ));
    for i in &p.inputs {
        s.push_str(&format!("- `{}` sha256 {}\n", i.path, i.sha256));
    }
    s
}

/// Result of a pipeline: its payload, witnesses, and whether the checked
/// statement holds.
struct Verdict {
    holds: bool,
    result: Value,
    witnesses: Vec<Witness>,
}

impl Verdict {
    fn from_report(report: &Report, result: Value) -> Self {
        Verdict { holds: report.valid, result, witnesses: report.witnesses.clone() }
    }

    fn holds(result: Value) -> Self {
        Verdict { holds: true, result, witnesses: Vec::new() }
    }

    fn fails(check: &str, detail: String, result: Value) -> Self {
        Verdict { holds: false, result, witnesses: vec![Witness { check: check.into(), detail }] }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Runs one pipeline. Never panics on bad input; errors become exit code 2.
pub fn run(spec: &RunSpec) -> Outcome {
    let paths = spec.command.inputs();
    let mut records = Vec::new();
    let mut texts = Vec::new();
    let mut io_error = None;
    for p in &paths {
        match std::fs::read(p) {
            Ok(bytes) => {
                records.push(InputRecord { path: p.display().to_string(), sha256: sha256_hex(&bytes) });
                texts.push(String::from_utf8_lossy(&bytes).into_owned());
            }
            Err(e) => {
                records.push(InputRecord { path: p.display().to_string(), sha256: String::new() });
                io_error.get_or_insert_with(|| Error::Io(format!("{}: {e}", p.display())));
            }
        }
    }
    let outcome = match io_error {
        Some(e) => Err(e),
        None => spec.tol.validate().and_then(|_| dispatch(spec, &texts)),
    };
    let (status, exit_code, result, witnesses) = match outcome {
        Ok(v) if v.holds => ("true", 0, v.result, v.witnesses),
        Ok(v) => ("false", 1, v.result, v.witnesses),
        Err(e) => ("error", 2, json!({ "error": e.to_string() }), vec![Witness { check: "error".into(), detail: e.to_string() }]),
    };
    let document = Document {
        command: spec.command.name().to_string(),
        inputs: records.iter().map(|r| r.path.clone()).collect(),
        status,
        result,
        witnesses,
        provenance: Provenance {
            version: env!("CARGO_PKG_VERSION"),
            seed: spec.seed,
            tolerances: spec.tol,
            timeout_ms: spec.timeout_ms,
            inputs: records,
        },
    };
    Outcome { document, exit_code }
}

fn dispatch(spec: &RunSpec, texts: &[String]) -> Result<Verdict> {
    let text = &texts[0];
    let (seed, tol) = (spec.seed, &spec.tol);
    match &spec.command {
        Command::VerifyMatchedPair { .. } => {
            let mp = match parse::<MatchedPairSpec>(text)?.build() {
                Err(Error::NotAFactorization(msg)) => return Ok(Verdict::fails("factorization", msg, json!({ "valid": false }))),
                other => other?,
            };
            let r = verify_matched_pair(&mp);
            Ok(Verdict::from_report(
                &r,
                json!({ "valid": r.valid, "G_order": mp.g().order(), "Gamma_order": mp.gamma().order(), "violations": r.violations }),
            ))
        }
        Command::Factorize { .. } => {
            let l = parse::<GroupSpec>(text)?.build()?;
            let fs = enumerate_exact_factorizations(&l)?;
            let list: Vec<Value> = fs.iter().map(|f| json!({ "G": f.g.members, "Gamma": f.gamma.members })).collect();
            Ok(Verdict::holds(json!({ "order": l.order(), "count": fs.len(), "factorizations": list })))
        }
        Command::BicrossedGroup { .. } => {
            let mp = parse::<MatchedPairSpec>(text)?.build()?;
            let r = bicrossed_validity(&mp, Some(16));
            if !r.valid {
                return Ok(Verdict::from_report(&r, json!({ "valid": false })));
            }
            let g = bicrossed_group(&mp)?;
            Ok(Verdict::holds(json!({
                "valid": true,
                "order": g.order(),
                "abelian": g.is_abelian(),
                "center_order": center(&g).order(),
                "class_count": g.conjugacy_classes().len(),
            })))
        }
        Command::Kac { fusion, .. } => {
            let mp = parse::<MatchedPairSpec>(text)?.build()?;
            let h = crate::hopf::kac_bicrossed_unchecked(&mp);
            let axioms = verify_hopf_axioms(&h);
            let mut result = json!({
                "dim": h.dim(),
                "valid": axioms.valid,
                "commutative": is_commutative(&h),
                "cocommutative": is_cocommutative(&h),
            });
            if !axioms.valid {
                return Ok(Verdict::from_report(&axioms, result));
            }
            let (sub, pi, quotient) = kac_sequence_maps(&mp);
            let seq = exact_sequence_check(&h, &sub, &pi, &quotient);
            result["exact_sequence"] = json!(seq.valid);
            if *fusion && seq.valid {
                let (ring, simples) = fusion_ring_with_simples(&h, seed, tol)?;
                result["fusion"] = json!({
                    "rank": ring.rank(),
                    "dims": simples.iter().map(|s| s.dim()).collect::<Vec<_>>(),
                    "ring": RingSpec::from_ring(&ring),
                    "valid": verify_based_ring(&ring).valid,
                });
            }
            Ok(Verdict::from_report(&seq, result))
        }
        Command::Equivariantize { .. } => {
            let d = parse::<CrossedSpec>(text)?.build()?;
            let r = verify_crossed_action(&d);
            if !r.valid {
                return Ok(Verdict::from_report(&r, json!({ "valid": false })));
            }
            let (ring, simples) = equivariantization(&d, seed, tol)?;
            let list: Vec<Value> = simples
                .iter()
                .zip(ring.labels())
                .map(|(s, l)| json!({ "label": l, "point": s.point, "dim": s.object.dim(), "stabilizer_order": s.stabilizer.len() }))
                .collect();
            let fp: usize = simples.iter().map(|s| s.object.dim().pow(2)).sum();
            Ok(Verdict::holds(json!({ "rank": ring.rank(), "simples": list, "fpdim_squared_sum": fp, "ring": RingSpec::from_ring(&ring) })))
        }
        Command::DualRing { .. } => {
            let d = parse::<CrossedSpec>(text)?.build()?;
            let r = verify_crossed_action(&d);
            if !r.valid {
                return Ok(Verdict::from_report(&r, json!({ "valid": false })));
            }
            let (ring, grading) = match dual_graded_ring(&d) {
                Err(Error::Structural(msg)) => return Ok(Verdict::fails("grading", msg, json!({ "valid": false }))),
                other => other?,
            };
            let check = verify_based_ring(&ring);
            let series = upper_central_series(&ring);
            Ok(Verdict::from_report(
                &check,
                json!({
                    "valid": check.valid,
                    "rank": ring.rank(),
                    "group_order": grading.group.order(),
                    "deg": grading.deg,
                    "faithful": is_faithful(&grading),
                    "neutral": neutral_component(&grading),
                    "nilpotency_class": series.class,
                    "ring": RingSpec::from_ring(&ring),
                }),
            ))
        }
        Command::Nilpotency { .. } => {
            let ring = parse::<RingSpec>(text)?.build()?;
            let check = verify_based_ring(&ring);
            if !check.valid {
                return Ok(Verdict::from_report(&check, json!({ "valid": false })));
            }
            let s = upper_central_series(&ring);
            let result = json!({ "nilpotent": s.is_nilpotent, "class": s.class, "series": s.chain });
            if s.is_nilpotent {
                Ok(Verdict::holds(result))
            } else {
                let step = s.chain.len();
                Ok(Verdict::fails("nilpotency", format!("not nilpotent, series stabilizes at step {step}"), result))
            }
        }
        Command::HopfVerify { .. } => {
            let h = parse::<HopfSpec>(text)?.build()?;
            let r = verify_hopf_axioms(&h);
            Ok(Verdict::from_report(
                &r,
                json!({
                    "dim": h.dim(),
                    "valid": r.valid,
                    "violations": r.violations,
                    "commutative": is_commutative(&h),
                    "cocommutative": is_cocommutative(&h),
                }),
            ))
        }
        Command::SubnormalSeries { .. } => {
            let c = parse::<ChainSpec>(text)?;
            let h = c.hopf.build()?;
            let terms = c.terms()?;
            let outcome = if c.via_dual {
                upper_series_via_dual(&h, &HopfChain::from_ascending(dual_hopf(&h), terms))
            } else {
                verify_subnormal_series(&HopfChain::from_ascending(h, terms))
            };
            match outcome {
                Ok(cert) => Ok(Verdict::holds(json!({ "certified": true, "upper": c.via_dual, "factors": cert.factors }))),
                Err(Error::Structural(msg)) => Ok(Verdict::fails("series", msg, json!({ "certified": false }))),
                Err(e) => Err(e),
            }
        }
        Command::CharSym { .. } => {
            let h = parse::<HopfSpec>(text)?.build()?;
            let r = verify_hopf_axioms(&h);
            if !r.valid {
                return Ok(Verdict::from_report(&r, json!({ "valid": false })));
            }
            let t = symmetric_central_algebra_test(&h)?;
            let agree = t.sigma_squared_identity == t.commutative;
            let result = json!({
                "sigma_squared_identity": t.sigma_squared_identity,
                "commutative": t.commutative,
                "agree": agree,
                "sigma_squared_defect": sigma_squared_defect(&h)?,
            });
            if agree {
                Ok(Verdict::holds(result))
            } else {
                Ok(Verdict::fails("equivalence", "σ² = id and commutativity disagree".into(), result))
            }
        }
        Command::AutGrading { .. } => {
            let (input, g) = parse::<AutGradingSpec>(text)?.build()?;
            let out = match aut_grading(&input, &g) {
                Err(Error::Structural(msg)) => return Ok(Verdict::fails("automorphism", msg, json!({ "valid": false }))),
                other => other?,
            };
            Ok(Verdict::holds(json!({
                "automorphisms": out.automorphisms,
                "deg": out.grading.deg,
                "image_order": out.grading.group.order(),
                "neutral": out.neutral,
                "center": center(&g).members,
            })))
        }
        Command::RingIso { .. } => {
            let r = parse::<RingSpec>(text)?.build()?;
            let s = parse::<RingSpec>(&texts[1])?.build()?;
            for (name, ring) in [("left", &r), ("right", &s)] {
                let check = verify_based_ring(ring);
                if !check.valid {
                    return Err(Error::Validation(format!("{name} ring: {}", check.witnesses[0])));
                }
            }
            match based_ring_isomorphism(&r, &s, spec.timeout_ms)? {
                Some(map) => Ok(Verdict::holds(json!({ "isomorphic": true, "map": map }))),
                None => {
                    let detail = if r.rank() != s.rank() {
                        format!("ranks differ: {} vs {}", r.rank(), s.rank())
                    } else {
                        "exhaustive search found no basis bijection preserving unit, duals and N".to_string()
                    };
                    Ok(Verdict::fails("isomorphism", detail, json!({ "isomorphic": false })))
                }
            }
        }
    }
}
