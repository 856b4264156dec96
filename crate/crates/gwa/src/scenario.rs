//! Declarative scenario runner: parse a JSON scenario file, assemble the
//! algebra, group and checks, execute them in order with a fixed seed, and
//! emit a deterministic report in text or JSON form.

use crate::algebra::{
    catalog, check_defining_relations, check_embedding_homomorphism, CatalogAlgebra, GwaElement,
    GwaPresentation,
};
use crate::autos::{self, group_elements, Automorphism, ReflectionGroupElement};
use crate::error::{Error, Result};
use crate::invariants::{
    decomposition_check, dchi_sign_sn, elementary_symmetric, gwa_reynolds, invariant_generators,
    principal_check, rational_witness_check,
};
use crate::lattice::{GenerationMode, LatticeElement};
use crate::parse;
use crate::poly::{Poly, PolyRing};
use crate::ratfun::RatFun;
use crate::sample;
use crate::scalars::{Scalar, ScalarField};
use crate::skew::{generates, SkewContext, SkewElement};
use crate::tableaux::{
    act, dagger_check, orbit_expand, reachability_edges, submodule_scan, verify_relations,
    weight_lift_check, GwaGenerator, WeightVector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_BOUND: i64 = 16;
pub const DEFAULT_RADIUS: u32 = 3;

// ---- scenario schema ----

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub field: Option<FieldSpec>,
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub bound: Option<i64>,
    #[serde(default)]
    pub checks: Vec<CheckSpec>,
    #[serde(default)]
    pub tableaux: Option<TableauxSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
    #[serde(default)]
    pub parameters: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub catalog: Option<String>,
    pub n: usize,
    #[serde(default)]
    pub params: Option<Vec<String>>,
    #[serde(default)]
    pub d: Option<String>,
    #[serde(default)]
    pub a: Option<Vec<String>>,
    #[serde(default)]
    pub sigma: Option<Vec<AutoSpec>>,
    #[serde(default)]
    pub assert_independent: bool,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum AutoSpec {
    Named(String),
    Explicit {
        forward: BTreeMap<String, String>,
        inverse: BTreeMap<String, String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub m: Option<u32>,
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub n: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub name: String,
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub degree: Option<i64>,
    #[serde(default)]
    pub bound: Option<i64>,
    #[serde(default)]
    pub mode: Option<String>,
    #[serde(default)]
    pub m_max: Option<u32>,
    #[serde(default)]
    pub norm: Option<i64>,
    #[serde(default)]
    pub x: Option<String>,
    #[serde(default)]
    pub d_chi: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauxSpec {
    #[serde(default)]
    pub seed: Option<Vec<String>>,
    #[serde(default)]
    pub radius: Option<u32>,
    pub checks: Vec<String>,
    #[serde(default)]
    pub samples: Option<usize>,
}

// ---- report ----

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Environment {
    pub package: String,
    pub version: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub seed: u64,
    pub environment: Environment,
    pub checks: Vec<CheckReport>,
    pub status: CheckStatus,
}

impl Report {
    pub fn has_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn has_inconclusive(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.status == CheckStatus::Inconclusive)
    }

    /// 0 all-pass; 1 any failure; 3 inconclusive present under escalation.
    pub fn exit_code(&self, escalate_inconclusive: bool) -> i32 {
        if self.has_fail() {
            1
        } else if escalate_inconclusive && self.has_inconclusive() {
            3
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scenario: {} (seed {})\n", self.scenario, self.seed));
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("{:>12}  {}  [{} ms]  {}\n", tag, c.name, c.millis, c.detail));
        }
        let tag = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
        };
        out.push_str(&format!("overall: {tag}\n"));
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub checks: Vec<String>,
    pub seed: Option<u64>,
    pub radius: Option<u32>,
    pub bound: Option<i64>,
}

// ---- runtime assembly ----

struct GroupData {
    m: u32,
    p: u32,
    elements: Vec<ReflectionGroupElement>,
}

struct Runtime {
    field: Arc<ScalarField>,
    algebra: CatalogAlgebra,
    group: Option<GroupData>,
    bound: i64,
}

fn validation(field: &str, msg: impl Into<String>) -> Error {
    Error::Validation {
        field: field.to_string(),
        msg: msg.into(),
    }
}

fn build_runtime(file: &ScenarioFile, overrides: &Overrides) -> Result<Runtime> {
    let rank = file.algebra.n;
    if rank == 0 {
        return Err(validation("algebra.n", "rank must be at least 1"));
    }
    // group parameters
    let group_mpn: Option<(String, u32, u32, usize)> = match &file.group {
        None => None,
        Some(g) => match g.kind.as_str() {
            "gmpn" => {
                let m = g.m.ok_or_else(|| validation("group.m", "required for gmpn"))?;
                let p = g.p.ok_or_else(|| validation("group.p", "required for gmpn"))?;
                let n = g.n.ok_or_else(|| validation("group.n", "required for gmpn"))?;
                if p == 0 || m % p != 0 {
                    return Err(validation("group.p", format!("{p} does not divide m = {m}")));
                }
                Some(("gmpn".into(), m, p, n))
            }
            "sn" => {
                let n = g.n.ok_or_else(|| validation("group.n", "required for sn"))?;
                Some(("sn".into(), 1, 1, n))
            }
            "cyclic_diag" => {
                let m = g
                    .m
                    .ok_or_else(|| validation("group.m", "required for cyclic_diag"))?;
                Some(("cyclic_diag".into(), m, 1, rank))
            }
            other => {
                return Err(validation(
                    "group.type",
                    format!("unknown group type `{other}`"),
                ))
            }
        },
    };
    if let Some((_, _, _, n)) = &group_mpn {
        if *n != rank {
            return Err(validation(
                "group.n",
                format!("group degree {n} must match algebra rank {rank}"),
            ));
        }
    }
    // scalar field: explicit, else inferred from the group and catalog name
    let needs_q = file
        .algebra
        .catalog
        .as_deref()
        .map_or(false, |c| c.starts_with("quantum"));
    let field = match &file.field {
        Some(f) => {
            let params: Vec<&str> = f.parameters.iter().map(|s| s.as_str()).collect();
            let fld = ScalarField::new(f.cyclotomic_order, &params)?;
            if let Some((_, m, _, _)) = &group_mpn {
                if *m > 1 && f.cyclotomic_order % m != 0 {
                    return Err(validation(
                        "field.cyclotomic_order",
                        format!("must be a multiple of the group order m = {m}"),
                    ));
                }
            }
            if needs_q && fld.parameter_index("q").is_none() {
                return Err(validation("field.parameters", "quantum algebras need `q`"));
            }
            fld
        }
        None => {
            let order = group_mpn.as_ref().map(|(_, m, _, _)| *m).unwrap_or(1).max(1);
            let mut params: Vec<String> = file.algebra.params.clone().unwrap_or_default();
            if needs_q && !params.iter().any(|p| p == "q") {
                params.push("q".to_string());
            }
            let params: Vec<&str> = params.iter().map(|s| s.as_str()).collect();
            ScalarField::new(order, &params)?
        }
    };
    // algebra
    let algebra = match (&file.algebra.catalog, &file.algebra.d) {
        (Some(name), None) => catalog(name, rank, &field)?,
        (None, Some(kind)) => {
            let laurent = match kind.as_str() {
                "polynomial" => false,
                "laurent" => true,
                other => {
                    return Err(validation(
                        "algebra.d",
                        format!("expected polynomial|laurent, got `{other}`"),
                    ))
                }
            };
            let sigma_specs = file
                .algebra
                .sigma
                .as_ref()
                .ok_or_else(|| validation("algebra.sigma", "required for explicit algebras"))?;
            if sigma_specs.len() != rank {
                return Err(validation("algebra.sigma", "one automorphism per rank"));
            }
            // variable count: nagata blocks need three variables each
            let block = sigma_specs.iter().any(|s| matches!(s, AutoSpec::Named(n) if n == "nagata"));
            let nvars = if block { 3 * rank } else { rank };
            let ring = PolyRing::new(&field, nvars, laurent);
            let mut sigma = Vec::new();
            for (i, spec) in sigma_specs.iter().enumerate() {
                sigma.push(build_auto(&ring, i, spec, block)?);
            }
            match &file.algebra.a {
                Some(a_exprs) => {
                    if a_exprs.len() != rank {
                        return Err(validation("algebra.a", "one defining element per rank"));
                    }
                    let mut a = Vec::new();
                    for (i, src) in a_exprs.iter().enumerate() {
                        let p = parse::parse_poly(src, &ring).map_err(|e| {
                            validation(&format!("algebra.a[{i}]"), e.to_string())
                        })?;
                        a.push(p);
                    }
                    let pres = if file.algebra.assert_independent {
                        GwaPresentation::new_asserted(&ring, a, sigma)?
                    } else {
                        GwaPresentation::new(&ring, a, sigma)?
                    };
                    CatalogAlgebra::Gwa(pres)
                }
                None => CatalogAlgebra::Skew(SkewContext::new(&ring, sigma)?),
            }
        }
        (Some(_), Some(_)) => {
            return Err(validation(
                "algebra",
                "give either `catalog` or explicit `d`/`a`/`sigma`, not both",
            ))
        }
        (None, None) => {
            return Err(validation(
                "algebra",
                "either `catalog` or an explicit presentation is required",
            ))
        }
    };
    let group = match group_mpn {
        None => None,
        Some((_, m, p, n)) => Some(GroupData {
            m,
            p,
            elements: group_elements(m, p, n, autos::DEFAULT_GROUP_LIMIT)?,
        }),
    };
    let bound = overrides
        .bound
        .or(file.bound)
        .unwrap_or(DEFAULT_BOUND);
    Ok(Runtime {
        field,
        algebra,
        group,
        bound,
    })
}

fn build_auto(
    ring: &Arc<PolyRing>,
    index: usize,
    spec: &AutoSpec,
    block: bool,
) -> Result<Automorphism> {
    match spec {
        AutoSpec::Named(name) => match name.as_str() {
            "shift" => Ok(autos::shift(ring, if block { 3 * index } else { index })),
            "q_scale" => autos::q_scale(ring, if block { 3 * index } else { index }),
            "q_weyl" => autos::q_weyl(ring, if block { 3 * index } else { index }),
            "nagata" => autos::nagata(ring, 3 * index),
            other => Err(Error::UnknownAutomorphism(other.to_string())),
        },
        AutoSpec::Explicit { forward, inverse } => {
            let mut images = Vec::new();
            let mut inverse_images = Vec::new();
            for j in 0..ring.nvars() {
                let var = &ring.vars()[j];
                let fwd = match forward.get(var) {
                    Some(src) => parse::parse_poly(src, ring).map_err(|e| {
                        validation(&format!("algebra.sigma[{index}].forward.{var}"), e.to_string())
                    })?,
                    None => Poly::var(ring, j),
                };
                let inv = match inverse.get(var) {
                    Some(src) => parse::parse_poly(src, ring).map_err(|e| {
                        validation(&format!("algebra.sigma[{index}].inverse.{var}"), e.to_string())
                    })?,
                    None => Poly::var(ring, j),
                };
                images.push(fwd);
                inverse_images.push(inv);
            }
            Automorphism::new(ring, images, inverse_images)
        }
    }
}

const KNOWN_CHECKS: [&str; 11] = [
    "gwa_relations",
    "embedding_hom",
    "cyclic_oracle",
    "invariance",
    "embedding_images",
    "generates_monoid",
    "decomposition",
    "principal",
    "rational_witness",
    "skew_associativity",
    "evaluate_action",
];

const TABLEAUX_CHECKS: [&str; 4] = ["relations", "lift", "submodules", "dagger"];

// ---- execution ----

pub fn run_str(name: &str, content: &str, overrides: &Overrides) -> Result<Report> {
    let file: ScenarioFile = serde_json::from_str(content)?;
    let rt = build_runtime(&file, overrides)?;
    for c in &file.checks {
        if !KNOWN_CHECKS.contains(&c.name.as_str()) {
            return Err(validation("checks", format!("unknown check `{}`", c.name)));
        }
    }
    if let Some(t) = &file.tableaux {
        for c in &t.checks {
            if !TABLEAUX_CHECKS.contains(&c.as_str()) {
                return Err(validation(
                    "tableaux.checks",
                    format!("unknown tableaux check `{c}`"),
                ));
            }
        }
    }
    let seed = overrides.seed.or(file.seed).unwrap_or(DEFAULT_SEED);
    let mut checks: Vec<CheckReport> = Vec::new();
    for (idx, spec) in file.checks.iter().enumerate() {
        if !overrides.checks.is_empty() && !overrides.checks.contains(&spec.name) {
            continue;
        }
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64));
        let (status, detail) = run_check(&rt, spec, &mut rng)?;
        checks.push(CheckReport {
            name: spec.name.clone(),
            status,
            detail,
            millis: start.elapsed().as_millis() as u64,
        });
    }
    if let Some(tspec) = &file.tableaux {
        if overrides.checks.is_empty() || overrides.checks.iter().any(|c| c == "tableaux") {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x7ab1e));
            run_tableaux(&rt, tspec, overrides, &mut rng, &mut checks)?;
        }
    }
    let status = if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        CheckStatus::Fail
    } else if checks.iter().any(|c| c.status == CheckStatus::Inconclusive) {
        CheckStatus::Inconclusive
    } else {
        CheckStatus::Pass
    };
    Ok(Report {
        scenario: file.name.clone().unwrap_or_else(|| name.to_string()),
        seed,
        environment: Environment {
            package: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        checks,
        status,
    })
}

pub fn run_file(path: &str, overrides: &Overrides) -> Result<Report> {
    let content = std::fs::read_to_string(path)?;
    run_str(path, &content, overrides)
}

fn require_gwa<'a>(rt: &'a Runtime, check: &str) -> Result<&'a Arc<GwaPresentation>> {
    match &rt.algebra {
        CatalogAlgebra::Gwa(p) => Ok(p),
        CatalogAlgebra::Skew(_) => Err(validation(
            "checks",
            format!("check `{check}` needs a GWA presentation"),
        )),
    }
}

fn skew_ctx(rt: &Runtime) -> Arc<SkewContext> {
    match &rt.algebra {
        CatalogAlgebra::Gwa(p) => p.skew_context(),
        CatalogAlgebra::Skew(ctx) => Arc::clone(ctx),
    }
}

fn require_group<'a>(rt: &'a Runtime, check: &str) -> Result<&'a GroupData> {
    rt.group.as_ref().ok_or_else(|| {
        validation("group", format!("check `{check}` needs a group"))
    })
}

fn principal_generators(
    rt: &Runtime,
    mode: GenerationMode,
) -> Result<(Vec<(String, SkewElement)>, Vec<Poly>)> {
    let group = require_group(rt, "principal")?;
    match &rt.algebra {
        CatalogAlgebra::Gwa(pres) => {
            let gens = invariant_generators(pres, group.m, group.p, mode)?;
            let labeled = gens
                .gwa_side
                .iter()
                .zip(&gens.expected_images)
                .map(|((n, _), img)| (n.clone(), img.clone()))
                .collect();
            Ok((labeled, gens.gamma))
        }
        CatalogAlgebra::Skew(ctx) => {
            let n = ctx.rank();
            let ring = ctx.ring();
            let mut fwd = SkewElement::zero(ctx);
            let mut bwd = SkewElement::zero(ctx);
            for i in 0..n {
                fwd = &fwd + &SkewElement::generator(ctx, i);
                bwd = &bwd
                    + &SkewElement::monomial(
                        ctx,
                        RatFun::one(ring),
                        LatticeElement::basis(n, i).neg(),
                    );
            }
            let mut gens = vec![
                ("sum_i e_i".to_string(), fwd),
                ("sum_i e_i^-1".to_string(), bwd),
            ];
            let mut gamma = Vec::new();
            for k in 1..=n {
                let e_k = elementary_symmetric(ring, k);
                gens.push((
                    format!("e_{k}(h)"),
                    SkewElement::from_ratfun(ctx, RatFun::from_poly(e_k.clone())),
                ));
                gamma.push(e_k);
            }
            Ok((gens, gamma))
        }
    }
}

fn run_check(rt: &Runtime, spec: &CheckSpec, rng: &mut ChaCha8Rng) -> Result<(CheckStatus, String)> {
    match spec.name.as_str() {
        "gwa_relations" => {
            let pres = require_gwa(rt, "gwa_relations")?;
            let samples = spec.samples.unwrap_or(50);
            let degree = spec.degree.unwrap_or(3);
            let polys: Vec<Poly> = (0..samples)
                .map(|_| sample::random_poly(pres.ring(), rng, degree, 3))
                .collect();
            match check_defining_relations(pres, &polys)? {
                None => Ok((
                    CheckStatus::Pass,
                    format!("all defining relations hold on {samples} coefficient samples"),
                )),
                Some(witness) => Ok((CheckStatus::Fail, witness)),
            }
        }
        "embedding_hom" => {
            let pres = require_gwa(rt, "embedding_hom")?;
            let samples = spec.samples.unwrap_or(25);
            let degree = spec.degree.unwrap_or(2);
            let pairs: Vec<(GwaElement, GwaElement)> = (0..samples)
                .map(|_| {
                    (
                        sample::random_gwa_element(pres, rng, 2, 3, degree),
                        sample::random_gwa_element(pres, rng, 2, 3, degree),
                    )
                })
                .collect();
            match check_embedding_homomorphism(pres, &pairs)? {
                None => Ok((
                    CheckStatus::Pass,
                    format!("embedding is multiplicative on {samples} random pairs"),
                )),
                Some(witness) => Ok((CheckStatus::Fail, witness)),
            }
        }
        "cyclic_oracle" => {
            let pres = require_gwa(rt, "cyclic_oracle")?;
            let m_max = spec.m_max.unwrap_or(4);
            for i in 0..pres.rank() {
                for m in 1..=m_max {
                    let y = GwaElement::y(pres, i).try_pow(m)?;
                    let x = GwaElement::x(pres, i).try_pow(m)?;
                    let lhs = y.try_mul(&x)?;
                    let rhs = GwaElement::from_poly(pres, pres.cyclic_twist(i, m)?);
                    if lhs != rhs {
                        return Ok((
                            CheckStatus::Fail,
                            format!("Y_{0}^{m} X_{0}^{m} != twisted product", i + 1),
                        ));
                    }
                }
            }
            Ok((
                CheckStatus::Pass,
                format!("Y^m X^m matches the twisted product for m <= {m_max}"),
            ))
        }
        "invariance" => {
            let pres = require_gwa(rt, "invariance")?;
            let group = require_group(rt, "invariance")?;
            let gens = invariant_generators(pres, group.m, group.p, GenerationMode::Group)?;
            for (name, u) in &gens.gwa_side {
                for g in &group.elements {
                    if crate::invariants::gwa_act(g, u)? != *u {
                        return Ok((
                            CheckStatus::Fail,
                            format!("{name} moved by {g}"),
                        ));
                    }
                }
            }
            Ok((
                CheckStatus::Pass,
                format!(
                    "{} generators fixed by all {} group elements",
                    gens.gwa_side.len(),
                    group.elements.len()
                ),
            ))
        }
        "embedding_images" => {
            let pres = require_gwa(rt, "embedding_images")?;
            let group = require_group(rt, "embedding_images")?;
            let gens = invariant_generators(pres, group.m, group.p, GenerationMode::Group)?;
            let ctx = pres.skew_context();
            for ((name, u), img) in gens.gwa_side.iter().zip(&gens.expected_images) {
                if u.embed_in(&ctx)? != *img {
                    return Ok((
                        CheckStatus::Fail,
                        format!("embedding of {name} differs from the expected image"),
                    ));
                }
            }
            Ok((
                CheckStatus::Pass,
                format!("{} images match exactly", gens.gwa_side.len()),
            ))
        }
        "generates_monoid" => {
            let pres = require_gwa(rt, "generates_monoid")?;
            let group = require_group(rt, "generates_monoid")?;
            let mode = match spec.mode.as_deref() {
                None | Some("group") => GenerationMode::Group,
                Some("monoid") => GenerationMode::Monoid,
                Some(other) => {
                    return Err(validation("checks.mode", format!("unknown mode `{other}`")))
                }
            };
            let bound = spec.bound.unwrap_or(rt.bound);
            let gens = invariant_generators(pres, group.m, group.p, mode)?;
            let outcome = generates(&gens.expected_images, &gens.lattice_spec, bound);
            match outcome {
                crate::skew::GeneratesOutcome::Generates => Ok((
                    CheckStatus::Pass,
                    "supports generate the configured lattice object (both inclusions)".into(),
                )),
                crate::skew::GeneratesOutcome::Inconclusive(w) => Ok((
                    CheckStatus::Inconclusive,
                    format!("search bound {bound} exhausted near {w}"),
                )),
                other => Ok((CheckStatus::Fail, format!("{other:?}"))),
            }
        }
        "decomposition" => {
            let pres = require_gwa(rt, "decomposition")?;
            let group = require_group(rt, "decomposition")?;
            let samples = spec.samples.unwrap_or(20);
            let mut max_components = 0usize;
            for _ in 0..samples {
                let raw = sample::random_gwa_element(pres, rng, group.m as i64, 3, 2);
                let inv = gwa_reynolds(&group.elements, &raw)?;
                let comps = decomposition_check(&inv, group.m, group.p)?;
                if comps.len() > group.p as usize {
                    return Ok((
                        CheckStatus::Fail,
                        format!("{} components exceed p = {}", comps.len(), group.p),
                    ));
                }
                max_components = max_components.max(comps.len());
            }
            Ok((
                CheckStatus::Pass,
                format!(
                    "{samples} random invariants reassembled exactly (max {max_components} components, p = {})",
                    group.p
                ),
            ))
        }
        "principal" => {
            let group = require_group(rt, "principal")?;
            let (gens, mut gamma) = principal_generators(rt, GenerationMode::Group)?;
            let extra = spec.samples.unwrap_or(3);
            let ring = skew_ctx(rt).ring().clone();
            for _ in 0..extra {
                // random invariant polynomial: orbit sum over the group
                let f = sample::random_poly(&ring, rng, 2, 2);
                let mut inv = Poly::zero(&ring);
                for g in &group.elements {
                    inv = &inv + &g.act_on_poly(&f);
                }
                gamma.push(inv);
            }
            let report = principal_check(&gens, &gamma, &group.elements)?;
            if report.all_pass() {
                Ok((
                    CheckStatus::Pass,
                    format!(
                        "{} generator/sample evaluations stay in the invariant subalgebra",
                        report.results.len()
                    ),
                ))
            } else {
                let first = report.failures().next().unwrap();
                Ok((
                    CheckStatus::Fail,
                    format!("{} on {} leaves Gamma", first.generator, first.sample),
                ))
            }
        }
        "rational_witness" => {
            let group = require_group(rt, "rational_witness")?;
            let ctx = skew_ctx(rt);
            let ring = ctx.ring().clone();
            let d_chi = match &spec.d_chi {
                Some(src) => parse::parse_poly(src, &ring)
                    .map_err(|e| validation("checks.d_chi", e.to_string()))?,
                None => dchi_sign_sn(&ring),
            };
            let x = match &spec.x {
                Some(src) => parse::parse_skew(src, &ctx)
                    .map_err(|e| validation("checks.x", e.to_string()))?,
                None => default_rational_witness(&ctx)?,
            };
            let witness = rational_witness_check(&x, &d_chi, &group.elements);
            // non-invariant probe must fail
            let probe = SkewElement::monomial(
                &ctx,
                RatFun::from_poly(Poly::var(&ring, 0)),
                LatticeElement::basis(ctx.rank(), 0),
            );
            let probe_result = rational_witness_check(&probe, &d_chi, &group.elements);
            if witness.holds() && !probe_result.holds() {
                Ok((
                    CheckStatus::Pass,
                    "witness clears denominators and is invariant; probe rejected".into(),
                ))
            } else if !witness.holds() {
                Ok((
                    CheckStatus::Fail,
                    format!(
                        "witness fails (invariant: {}, cleared: {})",
                        witness.invariant,
                        witness.cleared.is_ok()
                    ),
                ))
            } else {
                Ok((CheckStatus::Fail, "non-invariant probe passed".into()))
            }
        }
        "skew_associativity" => {
            let ctx = skew_ctx(rt);
            let samples = spec.samples.unwrap_or(50);
            let norm = spec.norm.unwrap_or(2);
            let degree = spec.degree.unwrap_or(2);
            for k in 0..samples {
                let u = sample::random_skew_element(&ctx, rng, norm, 3, degree);
                let v = sample::random_skew_element(&ctx, rng, norm, 3, degree);
                let w = sample::random_skew_element(&ctx, rng, norm, 3, degree);
                let lhs = u.try_mul(&v)?.try_mul(&w)?;
                let rhs = u.try_mul(&v.try_mul(&w)?)?;
                if lhs != rhs {
                    return Ok((CheckStatus::Fail, format!("associativity fails at sample {k}")));
                }
            }
            Ok((
                CheckStatus::Pass,
                format!("twisted product associative on {samples} random triples"),
            ))
        }
        "evaluate_action" => {
            let ctx = skew_ctx(rt);
            let samples = spec.samples.unwrap_or(50);
            let norm = spec.norm.unwrap_or(2);
            let degree = spec.degree.unwrap_or(2);
            for k in 0..samples {
                let u = sample::random_skew_element(&ctx, rng, norm, 3, degree);
                let v = sample::random_skew_element(&ctx, rng, norm, 3, degree);
                let f = RatFun::from_poly(sample::random_poly(ctx.ring(), rng, degree, 3));
                let lhs = u.try_mul(&v)?.evaluate(&f)?;
                let rhs = u.evaluate(&v.evaluate(&f)?)?;
                if lhs != rhs {
                    return Ok((
                        CheckStatus::Fail,
                        format!("evaluation action law fails at sample {k}"),
                    ));
                }
            }
            Ok((
                CheckStatus::Pass,
                format!("evaluate(uv, f) = evaluate(u, evaluate(v, f)) on {samples} triples"),
            ))
        }
        other => Err(validation("checks", format!("unknown check `{other}`"))),
    }
}

/// The standard rational witness for the symmetric action:
/// sum_i prod_{j != i} (h_i - h_j)^{-1} e_i. For rank 2 this is
/// (h1 - h2)^{-1} (e_1 - e_2).
fn default_rational_witness(ctx: &Arc<SkewContext>) -> Result<SkewElement> {
    let n = ctx.rank();
    let ring = ctx.ring();
    if n < 2 || ring.nvars() != n {
        return Err(validation(
            "checks.x",
            "default witness needs rank >= 2 with one variable per lattice direction",
        ));
    }
    let mut out = SkewElement::zero(ctx);
    for i in 0..n {
        let mut den = Poly::one(ring);
        for j in 0..n {
            if j != i {
                den = &den * &(&Poly::var(ring, i) - &Poly::var(ring, j));
            }
        }
        let coeff = RatFun::new(Poly::one(ring), den)?;
        out = &out + &SkewElement::monomial(ctx, coeff, LatticeElement::basis(n, i));
    }
    Ok(out)
}

fn run_tableaux(
    rt: &Runtime,
    spec: &TableauxSpec,
    overrides: &Overrides,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<CheckReport>,
) -> Result<()> {
    let pres = require_gwa(rt, "tableaux")?;
    let nvars = pres.ring().nvars();
    let field = rt.field.clone();
    let seed_point: Vec<Scalar> = match &spec.seed {
        Some(exprs) => {
            if exprs.len() != nvars {
                return Err(validation(
                    "tableaux.seed",
                    format!("expected {nvars} coordinates"),
                ));
            }
            exprs
                .iter()
                .enumerate()
                .map(|(i, src)| {
                    parse::parse_scalar(src, &field)
                        .map_err(|e| validation(&format!("tableaux.seed[{i}]"), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
        }
        None => (0..nvars).map(|_| Scalar::from_frac(&field, 1, 2)).collect(),
    };
    let radius = overrides.radius.or(spec.radius).unwrap_or(DEFAULT_RADIUS);
    let start = Instant::now();
    let orbit = orbit_expand(pres, seed_point, radius)?;
    let weight_table: Vec<String> = orbit
        .tableaux()
        .iter()
        .take(8)
        .map(|t| {
            let coords: Vec<String> = t.point.iter().map(|c| format!("{c}")).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    let ellipsis = if orbit.len() > 8 { ", ..." } else { "" };
    out.push(CheckReport {
        name: "tableaux_orbit".into(),
        status: CheckStatus::Pass,
        detail: format!(
            "{} tableaux within radius {radius}; weights {}{}",
            orbit.len(),
            weight_table.join(", "),
            ellipsis
        ),
        millis: start.elapsed().as_millis() as u64,
    });
    for check in &spec.checks {
        let start = Instant::now();
        let (status, detail) = match check.as_str() {
            "relations" => {
                let count = spec.samples.unwrap_or(2);
                let samples: Vec<Poly> = (0..count)
                    .map(|_| sample::random_poly(pres.ring(), rng, 2, 2))
                    .collect();
                let report = verify_relations(&orbit, &samples)?;
                if report.pass() {
                    (
                        CheckStatus::Pass,
                        format!("{} relation instances verified", report.checked),
                    )
                } else {
                    (CheckStatus::Fail, format!("{report}"))
                }
            }
            "lift" => {
                if weight_lift_check(&orbit)? {
                    (
                        CheckStatus::Pass,
                        "seed tableau spans a nonzero weight space".into(),
                    )
                } else {
                    (CheckStatus::Fail, "seed weight space check failed".into())
                }
            }
            "dagger" => {
                let count = spec.samples.unwrap_or(25);
                let mut ok = true;
                for _ in 0..count {
                    let z = sample::random_poly(pres.ring(), rng, 2, 3);
                    let theta = sample::random_lattice(rng, pres.rank(), radius as i64);
                    if !dagger_check(&orbit, &z, &theta)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    (
                        CheckStatus::Pass,
                        format!("evaluation identity holds on {count} random (z, theta) pairs"),
                    )
                } else {
                    (CheckStatus::Fail, "evaluation identity violated".into())
                }
            }
            "submodules" => {
                let comps = submodule_scan(&orbit)?;
                // sanity: the unit coefficient weight vector stays supported
                // inside each returned closure under the generators
                let one = Scalar::one(&field);
                let mut closed = true;
                'outer: for comp in &comps {
                    for &idx in comp {
                        if !orbit.is_interior(idx, 1) {
                            continue;
                        }
                        let t = WeightVector::basis(idx, one.clone());
                        for i in 0..pres.rank() {
                            for gen in [GwaGenerator::X(i), GwaGenerator::Y(i)] {
                                let moved = act(&gen, &t, &orbit)?;
                                if moved.coeffs.keys().any(|j| !comp.contains(j)) {
                                    closed = false;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
                let edges = reachability_edges(&orbit)?;
                let edge_note = if orbit.len() <= 12 {
                    let list: Vec<String> =
                        edges.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                    format!("edges [{}]", list.join(", "))
                } else {
                    format!("{} edges", edges.len())
                };
                if closed {
                    (
                        CheckStatus::Pass,
                        format!("{} closed sets, sizes {:?}; {}", comps.len(), sizes, edge_note),
                    )
                } else {
                    (CheckStatus::Fail, "a reported set is not closed".into())
                }
            }
            other => {
                return Err(validation(
                    "tableaux.checks",
                    format!("unknown tableaux check `{other}`"),
                ))
            }
        };
        out.push(CheckReport {
            name: format!("tableaux_{check}"),
            status,
            detail,
            millis: start.elapsed().as_millis() as u64,
        });
    }
    Ok(())
}

// ---- catalog listing and bundled scenarios ----

pub fn list_catalog() -> String {
    let mut out = String::new();
    out.push_str("catalog algebras (rank n over k[h1..hn]):\n");
    out.push_str("  weyl           a_i = h_i, sigma_i(h_i) = h_i - 1\n");
    out.push_str("  quantum_plane  a_i = h_i, sigma_i(h_i) = q*h_i (needs parameter q)\n");
    out.push_str("  quantum_weyl   a_i = h_i, sigma_i(h_i) = q^-1*(h_i - 1) (needs parameter q)\n");
    out.push_str("  torus_diffops  skew ring k[h1..hn] * Z^n with shift action (no X/Y side)\n");
    out.push_str("\nnamed automorphisms for explicit presentations:\n");
    out.push_str("  shift    h_i -> h_i - 1\n");
    out.push_str("  q_scale  h_i -> q*h_i\n");
    out.push_str("  q_weyl   h_i -> q^-1*(h_i - 1)\n");
    out.push_str("  nagata   wild automorphism of a 3-variable block preserving h1*h3 + h2^2\n");
    out.push_str("\ngroups: {type: gmpn, m, p, n} | {type: sn, n} | {type: cyclic_diag, m}\n");
    out.push_str("\nchecks: ");
    out.push_str(&KNOWN_CHECKS.join(", "));
    out.push_str("\ntableaux checks: ");
    out.push_str(&TABLEAUX_CHECKS.join(", "));
    out.push('\n');
    out
}

pub fn bundled_scenarios() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "weyl_g222.scenario",
            include_str!("../scenarios/weyl_g222.scenario"),
        ),
        (
            "weyl_g212.scenario",
            include_str!("../scenarios/weyl_g212.scenario"),
        ),
        (
            "weyl_g332.scenario",
            include_str!("../scenarios/weyl_g332.scenario"),
        ),
        (
            "weyl_g422.scenario",
            include_str!("../scenarios/weyl_g422.scenario"),
        ),
        (
            "weyl_g223.scenario",
            include_str!("../scenarios/weyl_g223.scenario"),
        ),
        (
            "weyl_sn3.scenario",
            include_str!("../scenarios/weyl_sn3.scenario"),
        ),
        (
            "quantum_plane_g211.scenario",
            include_str!("../scenarios/quantum_plane_g211.scenario"),
        ),
        (
            "quantum_weyl_s2.scenario",
            include_str!("../scenarios/quantum_weyl_s2.scenario"),
        ),
        (
            "torus_sn.scenario",
            include_str!("../scenarios/torus_sn.scenario"),
        ),
        (
            "quantum_torus_s2.scenario",
            include_str!("../scenarios/quantum_torus_s2.scenario"),
        ),
        (
            "nagata_skew.scenario",
            include_str!("../scenarios/nagata_skew.scenario"),
        ),
        (
            "weyl_integer_seed.scenario",
            include_str!("../scenarios/weyl_integer_seed.scenario"),
        ),
    ]
}

pub fn verify_all(overrides: &Overrides) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    for (name, content) in bundled_scenarios() {
        reports.push(run_str(name, content, overrides)?);
    }
    Ok(reports)
}
