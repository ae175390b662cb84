//! Closed-form spectral claims, stored as a catalog of data entries.

mod catalog;
mod numtheory;
mod poly;

use std::cell::OnceCell;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{build_graph, GraphKind, Relation, SimpleGraph};
use crate::group::{make_group, Family, FiniteGroup, GroupElement, GroupSpec};
use crate::spectral::DenseMatrix;

pub use numtheory::{divisor_structure, euler_phi, gcd, proper_divisors, DivisorStructure};
pub use poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimKind {
    Exact,
    AtLeast,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralClaim {
    pub value: f64,
    pub multiplicity: usize,
    pub kind: ClaimKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ResidualClaim {
    /// monic, highest power first
    PolynomialCoeffs(Vec<f64>),
    QuotientSpec(DenseMatrix),
    None,
}

impl ResidualClaim {
    /// Number of eigenvalues the residual accounts for.
    pub fn count(&self) -> usize {
        match self {
            ResidualClaim::PolynomialCoeffs(c) => c.len().saturating_sub(1),
            ResidualClaim::QuotientSpec(m) => m.dim(),
            ResidualClaim::None => 0,
        }
    }

    /// Sum of the eigenvalues the residual accounts for.
    pub fn trace(&self) -> f64 {
        match self {
            ResidualClaim::PolynomialCoeffs(c) if c.len() > 1 => -c[1] / c[0],
            ResidualClaim::QuotientSpec(m) => m.trace(),
            _ => 0.0,
        }
    }
}

impl Serialize for ResidualClaim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        match self {
            ResidualClaim::PolynomialCoeffs(c) => {
                map.serialize_entry("kind", "polynomialCoeffs")?;
                map.serialize_entry("coeffs", c)?;
            }
            ResidualClaim::QuotientSpec(m) => {
                map.serialize_entry("kind", "quotientSpec")?;
                map.serialize_entry("entries", &m.rows())?;
            }
            ResidualClaim::None => {
                map.serialize_entry("kind", "none")?;
            }
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedFormPrediction {
    pub source_id: String,
    pub family: Family,
    pub kind: GraphKind,
    pub relation: Relation,
    pub n: u32,
    pub primary: bool,
    pub applicability: String,
    pub claims: Vec<SpectralClaim>,
    pub residual: ResidualClaim,
    pub suspect: Option<String>,
    pub note: Option<String>,
    /// `None` for partial (lower-bound) predictions
    pub self_consistent: Option<bool>,
}

impl ClosedFormPrediction {
    pub fn is_partial(&self) -> bool {
        self.claims.iter().any(|c| c.kind == ClaimKind::AtLeast)
    }

    pub fn exact_count(&self) -> usize {
        self.claims.iter().filter(|c| c.kind == ClaimKind::Exact).map(|c| c.multiplicity).sum()
    }
}

/// Lazily built group and graph for entries that read degrees off the graph.
pub(crate) struct Ctx {
    pub family: Family,
    pub kind: GraphKind,
    pub relation: Relation,
    pub n: u32,
    group: OnceCell<FiniteGroup>,
    graph: OnceCell<SimpleGraph>,
}

impl Ctx {
    fn new(family: Family, kind: GraphKind, relation: Relation, n: u32) -> Self {
        Ctx { family, kind, relation, n, group: OnceCell::new(), graph: OnceCell::new() }
    }

    pub fn nf(&self) -> f64 {
        self.n as f64
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
            .get_or_init(|| make_group(GroupSpec { family: self.family, n: self.n }).expect("validated before use"))
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.graph
            .get_or_init(|| build_graph(self.group(), self.kind, self.relation).expect("partition built from the group"))
    }

    /// Degree of a rotation of order `d` in the graph under study.
    pub fn rotation_degree(&self, d: u64) -> f64 {
        let g = self.group();
        let m = g.rotation_order() as u64;
        let idx = g.index_of(GroupElement::rotation((m / d) as u32));
        self.graph().degree(idx) as f64
    }

    /// Number of rotations `a^i`, `i` in `range`, whose order satisfies `pred`.
    pub fn count_rotations(&self, range: std::ops::RangeInclusive<u64>, pred: impl Fn(u64, u64) -> bool) -> usize {
        let m = self.group().rotation_order() as u64;
        range.filter(|&i| pred(i, m / gcd(i % m, m))).count()
    }
}

pub(crate) fn group_order(family: Family, n: u32) -> usize {
    family.group_order(n)
}

fn instantiate(e: &catalog::Entry, ctx: &Ctx) -> ClosedFormPrediction {
    let (raw, residual) = (e.build)(ctx);
    let claims = merge_claims(raw);
    let mut suspect = e.suspect.map(str::to_string);
    let partial = claims.iter().any(|c| c.kind == ClaimKind::AtLeast);
    let self_consistent = if partial {
        None
    } else {
        let count: usize = claims.iter().map(|c| c.multiplicity).sum::<usize>() + residual.count();
        let trace: f64 = claims.iter().map(|c| c.value * c.multiplicity as f64).sum::<f64>() + residual.trace();
        let scale: f64 =
            claims.iter().map(|c| (c.value * c.multiplicity as f64).abs()).sum::<f64>() + residual.trace().abs();
        let ok = count == group_order(ctx.family, ctx.n) && trace.abs() <= 1e-8 * scale.max(1.0);
        if !ok {
            let note = format!(
                "claims account for {count} of {} eigenvalues with trace {trace:.6e}",
                group_order(ctx.family, ctx.n)
            );
            suspect = Some(match suspect {
                Some(s) => format!("{s}; {note}"),
                None => note,
            });
        }
        Some(ok)
    };
    ClosedFormPrediction {
        source_id: e.id.to_string(),
        family: ctx.family,
        kind: ctx.kind,
        relation: ctx.relation,
        n: ctx.n,
        primary: e.primary,
        applicability: e.applicability.to_string(),
        claims,
        residual,
        suspect,
        note: e.note.map(str::to_string),
        self_consistent,
    }
}

/// Drops empty claims and merges claims of equal value and kind.
fn merge_claims(raw: Vec<SpectralClaim>) -> Vec<SpectralClaim> {
    let mut out: Vec<SpectralClaim> = Vec::new();
    for c in raw.into_iter().filter(|c| c.multiplicity > 0) {
        let tol = 1e-9 * c.value.abs().max(1.0);
        match out.iter_mut().find(|o| o.kind == c.kind && (o.value - c.value).abs() <= tol) {
            Some(o) => o.multiplicity += c.multiplicity,
            None => out.push(c),
        }
    }
    out
}

fn covered_list() -> String {
    let mut cells: Vec<String> = catalog::entries()
        .iter()
        .map(|e| format!("{}/{}/{}", e.family, e.kind, e.relation))
        .collect();
    cells.dedup();
    cells.join(", ")
}

fn validate(family: Family, n: u32) -> Result<()> {
    GroupSpec::new(family, n).map(|_| ())
}

/// Every catalog entry that applies to the cell at this `n`, primary entry first.
pub fn predictions(family: Family, kind: GraphKind, relation: Relation, n: u32) -> Result<Vec<ClosedFormPrediction>> {
    validate(family, n)?;
    let ctx = Ctx::new(family, kind, relation, n);
    let mut found: Vec<&catalog::Entry> = catalog::entries()
        .iter()
        .filter(|e| e.family == family && e.kind == kind && e.relation == relation && (e.applies)(n))
        .collect();
    if found.is_empty() {
        return Err(Error::CatalogMiss {
            requested: format!("{family}/{kind}/{relation} at n = {n}"),
            covered: covered_list(),
        });
    }
    found.sort_by_key(|e| !e.primary);
    Ok(found.into_iter().map(|e| instantiate(e, &ctx)).collect())
}

/// The primary prediction for a cell.
pub fn predict(family: Family, kind: GraphKind, relation: Relation, n: u32) -> Result<ClosedFormPrediction> {
    Ok(predictions(family, kind, relation, n)?.remove(0))
}

/// A specific entry of a cell, selected by source id.
pub fn predict_source(
    family: Family,
    kind: GraphKind,
    relation: Relation,
    n: u32,
    source_id: &str,
) -> Result<ClosedFormPrediction> {
    let all = predictions(family, kind, relation, n)?;
    let ids: Vec<String> = all.iter().map(|p| p.source_id.clone()).collect();
    all.into_iter().find(|p| p.source_id == source_id).ok_or_else(|| Error::CatalogMiss {
        requested: format!("{source_id} for {family}/{kind}/{relation} at n = {n}"),
        covered: ids.join(", "),
    })
}

/// True if some entry covers the cell for at least one `n`.
pub fn is_covered(family: Family, kind: GraphKind, relation: Relation) -> bool {
    catalog::entries().iter().any(|e| e.family == family && e.kind == kind && e.relation == relation)
}

/// The displayed residual quotient matrix of an entry at `n`.
pub fn quotient_spec(source_id: &str, n: u32) -> Result<DenseMatrix> {
    let miss = || Error::CatalogMiss {
        requested: format!("quotient matrix for {source_id} at n = {n}"),
        covered: catalog::entries()
            .iter()
            .filter(|e| e.has_quotient)
            .map(|e| e.id)
            .collect::<Vec<_>>()
            .join(", "),
    };
    let e = catalog::entries().iter().find(|e| e.id == source_id && e.has_quotient).ok_or_else(miss)?;
    validate(e.family, n)?;
    if !(e.applies)(n) {
        return Err(miss());
    }
    match instantiate(e, &Ctx::new(e.family, e.kind, e.relation, n)).residual {
        ResidualClaim::QuotientSpec(m) => Ok(m),
        _ => Err(miss()),
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogExportEntry {
    pub source_id: String,
    pub family: Family,
    pub kind: GraphKind,
    pub relation: Relation,
    pub applicability: String,
    pub primary: bool,
    pub applies: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<ClosedFormPrediction>,
}

/// Every entry of the catalog, instantiated at `n` where it applies.
pub fn export_catalog(n: u32) -> Vec<CatalogExportEntry> {
    catalog::entries()
        .iter()
        .map(|e| {
            let applies = validate(e.family, n).is_ok() && (e.applies)(n);
            let prediction = applies.then(|| instantiate(e, &Ctx::new(e.family, e.kind, e.relation, n)));
            CatalogExportEntry {
                source_id: e.id.to_string(),
                family: e.family,
                kind: e.kind,
                relation: e.relation,
                applicability: e.applicability.to_string(),
                primary: e.primary,
                applies,
                prediction,
            }
        })
        .collect()
}

/// The two eigenvalues of `K_{1,k-1}[K_l, K_m, ..., K_m]` that are not
/// forced by cliques: roots of the 2x2 quotient in closed form.
pub fn star_join_roots(l: usize, m: usize, k: usize) -> (f64, f64) {
    let s = std::f64::consts::SQRT_2;
    let (lf, mf, kf) = (l as f64, m as f64, k as f64);
    let n = lf + (kf - 1.0) * mf;
    let (d1, d2) = (n - 1.0, mf + lf - 1.0);
    let p = (lf - 1.0) * d1 * s;
    let q = (mf - 1.0) * d2 * s;
    let disc = ((p - q).powi(2) + 4.0 * lf * mf * (kf - 1.0) * (d1 * d1 + d2 * d2)).sqrt();
    ((p + q + disc) / 2.0, (p + q - disc) / 2.0)
}

/// Source ids in catalog order (with repeats for entries shared by several cells).
pub fn source_ids() -> Vec<&'static str> {
    catalog::entries().iter().map(|e| e.id).collect()
}
