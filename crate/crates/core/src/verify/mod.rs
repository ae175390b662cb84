//! Oracle-versus-catalog verification: build the graph, compute its Sombor
//! spectrum numerically, and compare with the closed-form prediction.

mod golden;
mod json;
mod structural;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{self, ClaimKind, ClosedFormPrediction, ResidualClaim, SpectralClaim};
use crate::error::{Error, Result};
use crate::graph::{build_graph, GraphKind, Relation, SimpleGraph};
use crate::group::{make_group, Family, GroupSpec};
use crate::spectral::{
    char_poly, cluster_spectrum, eigen_sym, eval_poly, eval_scale, numerical_nullity, poly_from_roots,
    sombor_matrix, Cluster, DenseMatrix, SpectrumSummary, CHARPOLY_CAP, DEFAULT_EIGEN_TOL,
};

pub use golden::{compare_golden, golden_suspects, suspect_key, GoldenDiff, GOLDEN_SUSPECTS};
pub use json::{round_json, to_rounded_json, to_rounded_string};
pub use structural::{structural_suite, StructuralCheck, StructuralReport};

/// Relative tolerances; each is multiplied by `max(1, ρ)` with `ρ` the
/// spectral radius of the graph under test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Tolerances {
    /// Jacobi stopping threshold relative to the Frobenius norm.
    pub eigen: f64,
    pub cluster: f64,
    pub matching: f64,
    /// Polynomial residuals and coefficient comparisons.
    pub residual: f64,
    /// Singular-value threshold for eigenvalues of a residual quotient.
    pub quotient: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eigen: DEFAULT_EIGEN_TOL, cluster: 1e-6, matching: 1e-6, residual: 1e-6, quotient: 1e-7 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let all = [self.eigen, self.cluster, self.matching, self.residual, self.quotient];
        if all.iter().all(|t| t.is_finite() && *t > 0.0) {
            Ok(())
        } else {
            Err(Error::ParameterRange(format!("tolerances must be positive and finite: {self:?}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationTask {
    pub family: Family,
    pub kind: GraphKind,
    pub relation: Relation,
    pub n: u32,
    pub tolerances: Tolerances,
    /// Pick a specific catalog entry instead of the primary one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl VerificationTask {
    pub fn new(family: Family, kind: GraphKind, relation: Relation, n: u32) -> Self {
        VerificationTask { family, kind, relation, n, tolerances: Tolerances::default(), source: None }
    }

    pub fn validate(&self) -> Result<()> {
        GroupSpec::new(self.family, self.n)?;
        self.tolerances.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Flagged,
    NotCovered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Matched,
    MultiplicityShort,
    ValueMissing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimVerdict {
    pub claim: SpectralClaim,
    pub verdict: Verdict,
    pub measured_value: Option<f64>,
    /// Multiplicity of the nearest oracle cluster.
    pub measured_multiplicity: usize,
    /// Part of an exact claim's cluster left for the residual to explain.
    pub excess: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    /// non-increasing
    pub degree_sequence: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum ResidualVerdict {
    /// Partial prediction: the remaining spectrum is not described.
    Skipped,
    None {
        ok: bool,
        leftover: Vec<Cluster>,
    },
    #[serde(rename_all = "camelCase")]
    Polynomial {
        ok: bool,
        degree: usize,
        leftover: Vec<Cluster>,
        /// `|p(λ)| / Σ|c_k|ρ^(d-k)` per leftover cluster
        residuals: Vec<f64>,
        max_residual: f64,
        /// worst `|p_k − q_k| / (C(d,k) ρ^k)` against the leftover roots
        coefficient_deviation: Option<f64>,
    },
    #[serde(rename_all = "camelCase")]
    Quotient {
        ok: bool,
        dim: usize,
        leftover: Vec<Cluster>,
        /// `Σ min(nullity(λI − Q), multiplicity)` over oracle clusters
        subset_count: usize,
        /// leftover clusters all lie in the spectrum of the quotient
        leftover_covered: bool,
        coefficient_deviation: Option<f64>,
    },
}

impl ResidualVerdict {
    pub fn ok(&self) -> bool {
        match self {
            ResidualVerdict::Skipped => true,
            ResidualVerdict::None { ok, .. }
            | ResidualVerdict::Polynomial { ok, .. }
            | ResidualVerdict::Quotient { ok, .. } => *ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleChecks {
    /// `Σλ`, should vanish
    pub trace: f64,
    /// `Σλ² − 2Σ_{uv∈E}(d_u² + d_v²)`, should vanish
    pub frobenius_defect: f64,
    pub trace_ok: bool,
    pub frobenius_ok: bool,
    /// every gap between clusters exceeds twice the match tolerance
    pub gaps_separated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub task: VerificationTask,
    pub group: String,
    pub graph: GraphStats,
    pub spectrum: SpectrumSummary,
    pub oracle: OracleChecks,
    pub source_id: Option<String>,
    pub primary: Option<bool>,
    pub suspect: Option<String>,
    pub self_consistent: Option<bool>,
    pub claims: Vec<ClaimVerdict>,
    pub residual: Option<ResidualVerdict>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

/// Graph, spectrum and oracle checks for one cell; shared by every catalog
/// entry that applies to it.
struct Oracle {
    group: String,
    stats: GraphStats,
    spectrum: SpectrumSummary,
    checks: OracleChecks,
    scale: f64,
}

fn oracle(task: &VerificationTask) -> Result<Oracle> {
    let spec = GroupSpec::new(task.family, task.n)?;
    let g = make_group(spec)?;
    let graph = build_graph(&g, task.kind, task.relation)?;
    let eigs = eigen_sym(&sombor_matrix(&graph), task.tolerances.eigen)?;
    let rho = eigs.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let spectrum = cluster_spectrum(&eigs, task.tolerances.cluster * rho);
    let checks = oracle_checks(&graph, &eigs, &spectrum, task.tolerances.matching * rho);
    let mut degree_sequence = graph.degrees();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    let stats = GraphStats { order: graph.vertex_count(), size: graph.edge_count(), degree_sequence };
    Ok(Oracle { group: spec.to_string(), stats, spectrum, checks, scale: rho })
}

fn oracle_checks(graph: &SimpleGraph, eigs: &[f64], spectrum: &SpectrumSummary, match_tol: f64) -> OracleChecks {
    let trace: f64 = eigs.iter().sum();
    let abs_sum: f64 = eigs.iter().map(|x| x.abs()).sum();
    let sq: f64 = eigs.iter().map(|x| x * x).sum();
    let frob: f64 = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (graph.degree(u) as f64, graph.degree(v) as f64);
            2.0 * (a * a + b * b)
        })
        .sum();
    let frobenius_defect = sq - frob;
    OracleChecks {
        trace,
        frobenius_defect,
        trace_ok: trace.abs() <= 1e-9 * abs_sum.max(1.0),
        frobenius_ok: frobenius_defect.abs() <= 1e-9 * frob.max(1.0),
        gaps_separated: spectrum.min_gap().is_none_or(|g| g > 2.0 * match_tol),
    }
}

/// Greedy multiset matching; returns verdicts and the unconsumed spectrum.
fn match_claims(claims: &[SpectralClaim], spectrum: &SpectrumSummary, tol: f64) -> (Vec<ClaimVerdict>, Vec<Cluster>) {
    let mut remaining: Vec<usize> = spectrum.pairs.iter().map(|c| c.multiplicity).collect();
    let mut taken = vec![false; spectrum.pairs.len()];
    let mut verdicts = Vec::with_capacity(claims.len());
    for claim in claims {
        let nearest = spectrum
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, c)| !taken[*i] && (c.value - claim.value).abs() <= tol)
            .min_by(|a, b| (a.1.value - claim.value).abs().total_cmp(&(b.1.value - claim.value).abs()));
        let Some((i, cluster)) = nearest else {
            verdicts.push(ClaimVerdict {
                claim: *claim,
                verdict: Verdict::ValueMissing,
                measured_value: None,
                measured_multiplicity: 0,
                excess: 0,
            });
            continue;
        };
        taken[i] = true;
        let m = cluster.multiplicity;
        let consumed = m.min(claim.multiplicity);
        remaining[i] -= consumed;
        let verdict = if m >= claim.multiplicity { Verdict::Matched } else { Verdict::MultiplicityShort };
        let excess = match claim.kind {
            ClaimKind::Exact => m.saturating_sub(claim.multiplicity),
            ClaimKind::AtLeast => 0,
        };
        verdicts.push(ClaimVerdict {
            claim: *claim,
            verdict,
            measured_value: Some(cluster.value),
            measured_multiplicity: m,
            excess,
        });
    }
    let leftover = spectrum
        .pairs
        .iter()
        .zip(remaining)
        .filter(|(_, r)| *r > 0)
        .map(|(c, r)| Cluster { value: c.value, multiplicity: r })
        .collect();
    (verdicts, leftover)
}

fn expand(leftover: &[Cluster]) -> Vec<f64> {
    leftover.iter().flat_map(|c| std::iter::repeat_n(c.value, c.multiplicity)).collect()
}

fn binomial(d: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (d - i) as f64 / (i + 1) as f64)
}

/// Worst scaled deviation between `p` and the monic polynomial with the given roots.
fn coefficient_deviation(p: &[f64], roots: &[f64], rho: f64) -> Option<f64> {
    let d = p.len().checked_sub(1)?;
    if roots.len() != d {
        return None;
    }
    let q = poly_from_roots(roots);
    Some(
        (0..=d)
            .map(|k| (p[k] / p[0] - q[k]).abs() / (binomial(d, k) * rho.powi(k as i32)))
            .fold(0.0, f64::max),
    )
}

fn check_polynomial(coeffs: &[f64], leftover: Vec<Cluster>, rho: f64, tol: f64) -> ResidualVerdict {
    let degree = coeffs.len() - 1;
    let count: usize = leftover.iter().map(|c| c.multiplicity).sum();
    let scale = eval_scale(coeffs, rho);
    let residuals: Vec<f64> = leftover.iter().map(|c| eval_poly(coeffs, c.value).abs() / scale).collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let coefficient_deviation = coefficient_deviation(coeffs, &expand(&leftover), rho);
    let ok = count == degree && max_residual < tol && coefficient_deviation.is_some_and(|d| d <= tol);
    ResidualVerdict::Polynomial { ok, degree, leftover, residuals, max_residual, coefficient_deviation }
}

fn check_quotient(q: &DenseMatrix, leftover: Vec<Cluster>, spectrum: &SpectrumSummary, rho: f64, tol: &Tolerances) -> ResidualVerdict {
    let dim = q.dim();
    let threshold = tol.quotient * rho;
    let nullity = |v: f64| numerical_nullity(&q.shifted(v), threshold);
    let subset_count: usize = spectrum.pairs.iter().map(|c| nullity(c.value).min(c.multiplicity)).sum();
    let count: usize = leftover.iter().map(|c| c.multiplicity).sum();
    let leftover_covered = count == dim && leftover.iter().all(|c| nullity(c.value) >= c.multiplicity);
    let coefficient_deviation = if dim <= CHARPOLY_CAP {
        char_poly(q).ok().and_then(|p| coefficient_deviation(&p, &expand(&leftover), rho))
    } else {
        None
    };
    let coeff_ok = coefficient_deviation.is_none_or(|d| d <= tol.residual);
    let ok = subset_count == dim && leftover_covered && coeff_ok;
    ResidualVerdict::Quotient { ok, dim, leftover, subset_count, leftover_covered, coefficient_deviation }
}

fn judge(pred: &ClosedFormPrediction, o: &Oracle, task: &VerificationTask) -> VerificationReport {
    let tol = &task.tolerances;
    let (claims, leftover) = match_claims(&pred.claims, &o.spectrum, tol.matching * o.scale);
    let residual = if pred.is_partial() {
        ResidualVerdict::Skipped
    } else {
        match &pred.residual {
            ResidualClaim::None => ResidualVerdict::None { ok: leftover.is_empty(), leftover },
            ResidualClaim::PolynomialCoeffs(c) => check_polynomial(c, leftover, o.scale, tol.residual),
            ResidualClaim::QuotientSpec(q) => check_quotient(q, leftover, &o.spectrum, o.scale, tol),
        }
    };
    let claims_ok = claims.iter().all(|c| c.verdict == Verdict::Matched);
    let oracle_ok = o.checks.trace_ok && o.checks.frobenius_ok;
    let status = if claims_ok && residual.ok() && oracle_ok { Status::Pass } else { Status::Flagged };
    VerificationReport {
        task: VerificationTask { source: Some(pred.source_id.clone()), ..task.clone() },
        group: o.group.clone(),
        graph: o.stats.clone(),
        spectrum: o.spectrum.clone(),
        oracle: o.checks.clone(),
        source_id: Some(pred.source_id.clone()),
        primary: Some(pred.primary),
        suspect: pred.suspect.clone(),
        self_consistent: pred.self_consistent,
        claims,
        residual: Some(residual),
        status,
        message: None,
    }
}

fn not_covered(o: &Oracle, task: &VerificationTask, message: String) -> VerificationReport {
    VerificationReport {
        task: task.clone(),
        group: o.group.clone(),
        graph: o.stats.clone(),
        spectrum: o.spectrum.clone(),
        oracle: o.checks.clone(),
        source_id: None,
        primary: None,
        suspect: None,
        self_consistent: None,
        claims: Vec::new(),
        residual: None,
        status: Status::NotCovered,
        message: Some(message),
    }
}

/// Runs one task against its primary catalog entry (or `task.source`).
pub fn run_task(task: &VerificationTask) -> Result<VerificationReport> {
    task.validate()?;
    let o = oracle(task)?;
    let pred = match &task.source {
        Some(id) => closed_form::predict_source(task.family, task.kind, task.relation, task.n, id),
        None => closed_form::predict(task.family, task.kind, task.relation, task.n),
    };
    match pred {
        Ok(p) => Ok(judge(&p, &o, task)),
        Err(e @ Error::CatalogMiss { .. }) => Ok(not_covered(&o, task, e.to_string())),
        Err(e) => Err(e),
    }
}

/// Runs every applicable catalog entry for the task's cell, primary first.
pub fn run_cell(task: &VerificationTask) -> Result<Vec<VerificationReport>> {
    task.validate()?;
    let o = oracle(task)?;
    match closed_form::predictions(task.family, task.kind, task.relation, task.n) {
        Ok(preds) => Ok(preds.iter().map(|p| judge(p, &o, task)).collect()),
        Err(e @ Error::CatalogMiss { .. }) => Ok(vec![not_covered(&o, task, e.to_string())]),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteConfig {
    pub families: Vec<Family>,
    /// inclusive; each family starts at its own minimum
    pub n_min: u32,
    pub n_max: u32,
    pub kinds: Vec<GraphKind>,
    pub relations: Vec<Relation>,
    pub tolerances: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            families: Family::ALL.to_vec(),
            n_min: 1,
            n_max: 6,
            kinds: GraphKind::ALL.to_vec(),
            relations: Relation::ALL.to_vec(),
            tolerances: Tolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteSummary {
    pub pass: usize,
    pub flagged: usize,
    pub not_covered: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub reports: Vec<VerificationReport>,
    pub summary: SuiteSummary,
}

impl SuiteResult {
    /// Keys of the flagged reports, in suite order.
    pub fn flagged_keys(&self) -> Vec<String> {
        self.reports.iter().filter(|r| r.status == Status::Flagged).map(suspect_key).collect()
    }
}

/// The tasks of a suite in their deterministic order.
pub fn suite_tasks(cfg: &SuiteConfig) -> Vec<VerificationTask> {
    let mut tasks = Vec::new();
    for &family in &cfg.families {
        for n in cfg.n_min.max(family.min_n())..=cfg.n_max {
            if GroupSpec::new(family, n).is_err() {
                continue;
            }
            for &kind in &cfg.kinds {
                for &relation in &cfg.relations {
                    tasks.push(VerificationTask {
                        family,
                        kind,
                        relation,
                        n,
                        tolerances: cfg.tolerances,
                        source: None,
                    });
                }
            }
        }
    }
    tasks
}

/// Runs every cell of the configuration in parallel; report order follows
/// `suite_tasks`, then catalog order within a cell.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteResult> {
    cfg.tolerances.validate()?;
    let per_cell: Vec<Result<Vec<VerificationReport>>> = suite_tasks(cfg).par_iter().map(run_cell).collect();
    let mut reports = Vec::new();
    for r in per_cell {
        reports.extend(r?);
    }
    let mut summary = SuiteSummary::default();
    for r in &reports {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Flagged => summary.flagged += 1,
            Status::NotCovered => summary.not_covered += 1,
        }
    }
    Ok(SuiteResult { reports, summary })
}
