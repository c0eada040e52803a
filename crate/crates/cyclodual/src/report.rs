//! Serializable report and descriptor types: field literals (complete
//! representation choices, so third parties can reproduce exact
//! polynomials), code descriptors, distance results, and full construction
//! reports, plus the distance-attachment and independent re-verification
//! logic used by the CLI.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{CodeError, CyclicCode, DualityMode, LinearCode};
use crate::construct::{BoundKind, BuiltCode, ConstructError, PipelineOutput};
use crate::gf::{self, FieldDescriptor, FieldElement, GfError};
use crate::mindist::{
    self, DistError, DistanceResult, DistanceStatus, DEFAULT_BZ_BUDGET,
    DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_WITNESS_BUDGET,
};
use crate::polyring::Polynomial;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed descriptor: {0}")]
    BadDescriptor(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Dist(#[from] DistError),
}

pub type ReportResult<T> = Result<T, ReportError>;

// ----- field and code literals -----

/// One extension step: degree over the previous level and the monic modulus
/// as element indices of the previous level (low to high, length degree+1).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TowerLevel {
    pub degree: usize,
    pub modulus: Vec<u64>,
}

/// Complete description of a field representation: prime characteristic
/// plus the tower of extension moduli.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldLiteral {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tower: Vec<TowerLevel>,
}

pub fn field_literal(f: &Arc<FieldDescriptor>) -> FieldLiteral {
    let mut chain = Vec::new();
    let mut cur = f.clone();
    while let Some(base) = cur.base().cloned() {
        chain.push(cur);
        cur = base;
    }
    chain.reverse();
    let tower = chain
        .iter()
        .map(|ext| {
            let base = ext.base().unwrap();
            TowerLevel {
                degree: ext.degree(),
                modulus: ext
                    .modulus()
                    .unwrap()
                    .iter()
                    .map(|c| base.index_of(c))
                    .collect(),
            }
        })
        .collect();
    FieldLiteral { p: cur.characteristic(), tower }
}

pub fn field_from_literal(lit: &FieldLiteral) -> ReportResult<Arc<FieldDescriptor>> {
    let mut f = FieldDescriptor::prime(lit.p)?;
    for level in &lit.tower {
        if level.modulus.len() != level.degree + 1 {
            return Err(ReportError::BadDescriptor(format!(
                "modulus must list {} coefficients",
                level.degree + 1
            )));
        }
        let order = f.order();
        for &idx in &level.modulus {
            if idx >= order {
                return Err(ReportError::BadDescriptor(format!(
                    "coefficient index {idx} out of range for field of order {order}"
                )));
            }
        }
        let coeffs: Vec<FieldElement> = level.modulus.iter().map(|&i| f.element_at(i)).collect();
        f = FieldDescriptor::extension(&f, level.degree, Some(&coeffs))?;
    }
    Ok(f)
}

/// Code descriptor: a cyclic code by generator coefficients or a linear
/// code by generator matrix, both as element indices into the field.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CodeDescriptor {
    Cyclic {
        field: FieldLiteral,
        n: usize,
        generator: Vec<u64>,
    },
    Linear {
        field: FieldLiteral,
        n: usize,
        g: Vec<Vec<u64>>,
    },
}

pub fn describe_cyclic(c: &CyclicCode) -> CodeDescriptor {
    let field = c.field();
    CodeDescriptor::Cyclic {
        field: field_literal(field),
        n: c.length(),
        generator: c.generator().coeffs().iter().map(|x| field.index_of(x)).collect(),
    }
}

pub fn describe_linear(c: &LinearCode) -> CodeDescriptor {
    let field = c.field();
    CodeDescriptor::Linear {
        field: field_literal(field),
        n: c.n(),
        g: c.rows()
            .iter()
            .map(|r| r.iter().map(|x| field.index_of(x)).collect())
            .collect(),
    }
}

pub fn describe_built(c: &BuiltCode) -> CodeDescriptor {
    match c {
        BuiltCode::Cyclic(c) => describe_cyclic(c),
        BuiltCode::Linear(c) => describe_linear(c),
    }
}

/// A realized code plus a note when the descriptor needed canonicalization.
pub struct RealizedCode {
    pub code: BuiltCode,
    pub note: Option<String>,
}

pub fn realize(desc: &CodeDescriptor) -> ReportResult<RealizedCode> {
    match desc {
        CodeDescriptor::Cyclic { field, n, generator } => {
            let f = field_from_literal(field)?;
            let order = f.order();
            for &idx in generator {
                if idx >= order {
                    return Err(ReportError::BadDescriptor(format!(
                        "coefficient index {idx} out of range"
                    )));
                }
            }
            let coeffs: Vec<FieldElement> = generator.iter().map(|&i| f.element_at(i)).collect();
            let poly = Polynomial::new(f.clone(), coeffs);
            let code = CyclicCode::from_polynomial(&f, *n, &poly)?;
            let note = (code.generator() != &poly.monic()).then(|| {
                "generator did not divide x^N - 1; canonicalized by gcd".to_string()
            });
            Ok(RealizedCode { code: BuiltCode::Cyclic(code), note })
        }
        CodeDescriptor::Linear { field, n, g } => {
            let f = field_from_literal(field)?;
            let order = f.order();
            let rows = g
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&i| {
                            if i >= order {
                                Err(ReportError::BadDescriptor(format!(
                                    "entry index {i} out of range"
                                )))
                            } else {
                                Ok(f.element_at(i))
                            }
                        })
                        .collect::<ReportResult<Vec<_>>>()
                })
                .collect::<ReportResult<Vec<_>>>()?;
            let code = LinearCode::from_rows(&f, *n, rows)?;
            Ok(RealizedCode { code: BuiltCode::Linear(code), note: None })
        }
    }
}

// ----- distance JSON -----

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DistanceJson {
    pub status: String, // "exact" | "bounds"
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub lb: u64,
    pub ub: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u64>>,
    pub work: u128,
    pub budget_exhausted: bool,
    /// verification status of the distance claim:
    /// verified-exact | verified-bound | witness-only
    pub verification: String,
}

pub fn distance_json(r: &DistanceResult, field: &Arc<FieldDescriptor>) -> DistanceJson {
    let status = match r.status {
        DistanceStatus::Exact => "exact",
        DistanceStatus::Bounds => "bounds",
    };
    let verification = match (r.status, &r.witness) {
        (DistanceStatus::Exact, _) => "verified-exact",
        (DistanceStatus::Bounds, Some(_)) => "witness-only",
        (DistanceStatus::Bounds, None) => "verified-bound",
    };
    DistanceJson {
        status: status.to_string(),
        d: r.d(),
        lb: r.lower,
        ub: r.upper,
        witness: r
            .witness
            .as_ref()
            .map(|w| w.iter().map(|c| field.index_of(c)).collect()),
        work: r.work,
        budget_exhausted: r.budget_exhausted,
        verification: verification.to_string(),
    }
}

// ----- construction reports -----

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub field: FieldLiteral,
    pub ambient: FieldLiteral,
    /// index of the deterministic primitive element of the ambient field
    pub alpha: u64,
    /// index of the canonical n-th root of unity
    pub beta: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub construction: String,
    pub params: BTreeMap<String, u64>,
    pub mode: String, // "euclidean" | "hermitian"
    pub representation: RepresentationJson,
    pub component: CodeDescriptor,
    pub component_k: usize,
    pub component_dual_k: usize,
    pub code: CodeDescriptor,
    pub n2: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    pub bound_kind: String,
    pub bound: u64,
    pub distance: DistanceJson,
    pub self_dual: bool,
    pub checks: BTreeMap<String, bool>,
}

/// How the CLI computes distances for a construction report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Auto,
    Exhaustive,
    Bz,
    Witness,
    /// min(2 d(C), d(C-perp)) from per-component computations
    Halves,
    None,
}

#[derive(Debug, Clone, Copy)]
pub struct DistanceOptions {
    pub engine: Engine,
    pub exhaustive_budget: u128,
    pub bz_budget: u128,
    pub witness_budget: u64,
    pub seed: u64,
    pub target: Option<u64>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            engine: Engine::Auto,
            exhaustive_budget: DEFAULT_EXHAUSTIVE_BUDGET,
            bz_budget: DEFAULT_BZ_BUDGET,
            witness_budget: DEFAULT_WITNESS_BUDGET,
            seed: 0,
            target: None,
        }
    }
}

fn is_binary(out: &PipelineOutput) -> bool {
    out.code.field().order() == 2
}

/// Pick and run the distance computation for a pipeline output.
pub fn compute_distance(out: &PipelineOutput, opts: &DistanceOptions) -> ReportResult<DistanceResult> {
    let g = out.code.generator_matrix();
    let engine = match opts.engine {
        Engine::Auto => auto_engine(out),
        e => e,
    };
    let mut r = match engine {
        Engine::Exhaustive => mindist::exhaustive_min_weight(&g, opts.exhaustive_budget)?,
        Engine::Bz => mindist::brouwer_zimmermann(&g, opts.bz_budget)?,
        Engine::Witness => {
            let target = opts.target.unwrap_or(out.bound);
            mindist::witness_search(&g, target, opts.seed, opts.witness_budget, Some(out.bound))?
        }
        Engine::Halves => {
            let comp = out.component.generator_matrix();
            let dual = out.component_dual()?.generator_matrix();
            let dc = half_distance(&comp, opts, out.delta)?;
            let dd = half_distance(&dual, opts, None)?;
            mindist::selfdual_distance_via_halves(&dc, &dd)
        }
        Engine::None | Engine::Auto => DistanceResult {
            status: DistanceStatus::Bounds,
            lower: out.bound,
            upper: out.code.n() as u64,
            witness: None,
            work: 0,
            budget_exhausted: false,
        },
    };
    if r.lower < out.bound {
        r.lower = out.bound.min(r.upper);
        if r.lower == r.upper {
            r.status = DistanceStatus::Exact;
        }
    }
    if is_binary(out) {
        r = r.rounded_even_lower();
    }
    Ok(r)
}

fn auto_engine(out: &PipelineOutput) -> Engine {
    let k = out.code.k() as u32;
    let q = out.code.field().order() as u128;
    let codewords = q.checked_pow(k);
    if codewords.map_or(false, |c| c <= 1 << 20) {
        return Engine::Exhaustive;
    }
    // certified BZ is feasible up to roughly [62, 31]-sized binary /
    // quinary and [42, 21] quaternary instances; beyond that fall back to
    // per-component work or witness search
    let n = out.code.n();
    let feasible_direct = n <= 64 && k <= 32;
    if feasible_direct {
        return Engine::Bz;
    }
    let comp_k = out.component.dim() as u32;
    let comp_n = out.component.length();
    // half-length law: worthwhile when the dual component is small enough
    // to certify and the component's BCH bound plus a witness settles d(C)
    if comp_n <= 64 && comp_k <= 52 {
        return Engine::Halves;
    }
    Engine::Witness
}

/// Distance of one half (the component or its dual). With a BCH bound
/// `delta` available and certification infeasible, a witness search against
/// delta can settle the value exactly.
fn half_distance(
    code: &LinearCode,
    opts: &DistanceOptions,
    delta: Option<u64>,
) -> ReportResult<DistanceResult> {
    let q = code.field().order() as u128;
    let count = q.checked_pow(code.k() as u32);
    if count.map_or(false, |c| c <= opts.exhaustive_budget.min(1 << 20)) {
        return Ok(mindist::exhaustive_min_weight(code, opts.exhaustive_budget)?);
    }
    // certified path first when plausible
    if code.k() <= 32 {
        return Ok(mindist::brouwer_zimmermann(code, opts.bz_budget)?);
    }
    let target = delta.unwrap_or(1);
    let mut r = mindist::witness_search(code, target, opts.seed, opts.witness_budget, delta)?;
    if let Some(d) = delta {
        if r.lower < d {
            r.lower = d.min(r.upper);
            if r.lower == r.upper {
                r.status = DistanceStatus::Exact;
            }
        }
    }
    Ok(r)
}

pub fn build_report(out: &PipelineOutput, opts: &DistanceOptions) -> ReportResult<ConstructionReport> {
    let distance = compute_distance(out, opts)?;
    report_with_distance(out, &distance)
}

pub fn report_with_distance(
    out: &PipelineOutput,
    distance: &DistanceResult,
) -> ReportResult<ConstructionReport> {
    let field = out.code.field().clone();
    let n_comp = out.component.length() as u64;
    let (ambient, beta) = crate::polyring::splitting_field(&field, n_comp)
        .map_err(|e| ReportError::BadDescriptor(e.to_string()))?;
    let alpha = gf::primitive_element(&ambient)?;
    let self_dual = out.checks.iter().any(|&(name, ok)| name == "self_dual" && ok);
    Ok(ConstructionReport {
        construction: out.construction.to_string(),
        params: out.params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        mode: match out.mode {
            DualityMode::Euclidean => "euclidean",
            DualityMode::Hermitian => "hermitian",
        }
        .to_string(),
        representation: RepresentationJson {
            field: field_literal(&field),
            ambient: field_literal(&ambient),
            alpha: ambient.index_of(&alpha),
            beta: ambient.index_of(&beta),
        },
        component: describe_cyclic(&out.component),
        component_k: out.component.dim(),
        component_dual_k: out.component.length() - out.component.dim(),
        code: describe_built(&out.code),
        n2: out.code.n(),
        k: out.code.k(),
        delta: out.delta,
        bound_kind: match out.bound_kind {
            BoundKind::BchDelta => "bch_delta",
            BoundKind::EvenRoundedDelta => "even_rounded_delta",
            BoundKind::SqrtEvenRounded => "sqrt_even_rounded",
        }
        .to_string(),
        bound: out.bound,
        distance: distance_json(distance, &field),
        self_dual,
        checks: out.checks.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
    })
}

/// Re-verify a report from its serialized form alone. Returns the list of
/// failed property names (empty = all good).
pub fn verify_report(report: &ConstructionReport) -> ReportResult<Vec<String>> {
    let mut failures = Vec::new();
    let realized = realize(&report.code)?;
    let mode = match report.mode.as_str() {
        "hermitian" => DualityMode::Hermitian,
        _ => DualityMode::Euclidean,
    };
    // dimensions
    if realized.code.n() != report.n2 {
        failures.push("length".to_string());
    }
    if realized.code.k() != report.k {
        failures.push("dimension".to_string());
    }
    if report.n2 != 2 * report.k {
        failures.push("half_rate".to_string());
    }
    // self-duality
    let self_dual_ok = match &realized.code {
        BuiltCode::Cyclic(c) => c.is_self_dual_cyclic(mode).unwrap_or(false),
        BuiltCode::Linear(c) => c.is_self_dual_linear(mode),
    };
    if self_dual_ok != report.self_dual {
        failures.push("self_dual".to_string());
    }
    // distance bookkeeping
    let d = &report.distance;
    if d.lb > d.ub {
        failures.push("bounds_order".to_string());
    }
    if (d.status == "exact") != (d.lb == d.ub) {
        failures.push("status_consistency".to_string());
    }
    if d.d.is_some() && d.d != Some(d.ub) {
        failures.push("d_field".to_string());
    }
    if report.bound > d.ub {
        failures.push("bound_vs_upper".to_string());
    }
    // witness: correct weight and membership
    if let Some(w) = &d.witness {
        let field = realized.code.field().clone();
        if w.len() != report.n2 || w.iter().any(|&i| i >= field.order()) {
            failures.push("witness_shape".to_string());
        } else {
            let word: Vec<FieldElement> = w.iter().map(|&i| field.element_at(i)).collect();
            let weight = mindist::weight_of(&word);
            if weight != d.ub {
                failures.push("witness_weight".to_string());
            }
            let member = match &realized.code {
                BuiltCode::Cyclic(c) => c.contains(&word),
                BuiltCode::Linear(c) => c.contains(&word),
            };
            if !member {
                failures.push("witness_membership".to_string());
            }
        }
    }
    // component consistency
    let comp = realize(&report.component)?;
    if comp.code.k() != report.component_k {
        failures.push("component_dimension".to_string());
    }
    if let BuiltCode::Cyclic(c) = &comp.code {
        if !c.is_dual_containing(mode).unwrap_or(false) {
            failures.push("component_dual_containing".to_string());
        }
    }
    // recorded checks must all be true
    if !report.checks.values().all(|&v| v) {
        failures.push("recorded_checks".to_string());
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn field_literal_roundtrip() {
        for q in [2u64, 4, 5, 8, 9, 13, 64] {
            let f = gf::field_of_order(q).unwrap();
            let lit = field_literal(&f);
            let back = field_from_literal(&lit).unwrap();
            assert!(back.same_field(&f), "q={q}");
            let json = serde_json::to_string(&lit).unwrap();
            let parsed: FieldLiteral = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, lit);
        }
    }

    #[test]
    fn descriptor_roundtrip() {
        let out = construct::thm51_pipeline(2, 3, 1).unwrap();
        let desc = describe_built(&out.code);
        let json = serde_json::to_string(&desc).unwrap();
        let parsed: CodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, desc);
        let realized = realize(&parsed).unwrap();
        assert!(realized.note.is_none());
        assert_eq!((realized.code.n(), realized.code.k()), (14, 7));
    }

    #[test]
    fn canonicalization_is_noted() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let desc = CodeDescriptor::Cyclic {
            field: field_literal(&f2),
            n: 7,
            // x^2 + x does not divide x^7 - 1; gcd gives x + 1
            generator: vec![0, 1, 1],
        };
        let realized = realize(&desc).unwrap();
        assert!(realized.note.is_some());
        assert_eq!(realized.code.k(), 6);
    }

    #[test]
    fn report_roundtrip_and_verify() {
        let out = construct::thm51_pipeline(2, 3, 1).unwrap();
        let report = build_report(&out, &DistanceOptions::default()).unwrap();
        assert_eq!(report.n2, 14);
        assert_eq!(report.k, 7);
        assert_eq!(report.distance.d, Some(4));
        assert!(report.self_dual);
        let json = serde_json::to_string_pretty(&report).unwrap();
        let parsed: ConstructionReport = serde_json::from_str(&json).unwrap();
        assert!(verify_report(&parsed).unwrap().is_empty());
        // stability: identical flags give byte-identical JSON
        let report2 = build_report(&out, &DistanceOptions::default()).unwrap();
        assert_eq!(serde_json::to_string_pretty(&report2).unwrap(), json);
    }

    #[test]
    fn tampered_reports_fail_verification() {
        let out = construct::thm51_pipeline(2, 3, 1).unwrap();
        let report = build_report(&out, &DistanceOptions::default()).unwrap();

        let mut tampered = report.clone();
        if let CodeDescriptor::Cyclic { generator, .. } = &mut tampered.code {
            generator[0] ^= 1;
        }
        let fails = verify_report(&tampered).unwrap();
        assert!(fails.iter().any(|f| f.contains("self_dual") || f.contains("dimension")), "{fails:?}");

        let mut tampered = report.clone();
        tampered.distance.ub = 3;
        tampered.distance.lb = 3;
        tampered.distance.d = Some(3);
        let fails = verify_report(&tampered).unwrap();
        assert!(fails.iter().any(|f| f.contains("witness")), "{fails:?}");
    }
}
